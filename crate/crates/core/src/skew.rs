//! Skew group dg-categories and their relatives.
//!
//! For a strict action of `G` on `A`, the skew category `A∗G` has one object
//! `X̃` per object `X` of `A` and hom complexes
//! `hom(X̃, Ỹ) = ⊕_{g ∈ G} hom_A(X, g.Y)`, with basis labels `"g|a"` ordered
//! by group element and then by the basis of `A`. Composition is
//!
//! ```text
//! (g₁, a) ▷ (g₂, b) = (g₁g₂, a ▷ (g₁.b))
//! ```
//!
//! the differential is `d(g, a) = (g, da)` and units are `(e, id_X)`.
//! None of this uses inverses, so monoids are accepted; the induced action
//! `h.(g, a) = (hgh⁻¹, h.a)`, the reduced category and freeification need a
//! group.

use std::collections::BTreeMap;

use crate::dgcat::{validate_dg_functor, Algebra, BasisIndex, DgCategory, DgFunctor, HomBasis};
use crate::error::{Error, Result};
use crate::exactlin::{combine, Matrix};
use crate::field::Field;
use crate::graded::{GradedDims, GradedMap};
use crate::groupact::{is_free_on_objects, validate_action, FiniteMonoid, Orbits, StrictAction};
use crate::report::Report;

/// Output of [`skew_group_dg_category`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewResult<F: Field> {
    pub category: DgCategory<F>,
    /// `F_A: A → A∗G`, `X ↦ X̃`, `a ↦ (e, a)`.
    pub embedding: DgFunctor<F>,
    /// `h.X̃ = (h.X)~`, `h.(g, a) = (hgh⁻¹, h.a)`. Present for groups only.
    pub induced_action: Option<StrictAction<F>>,
    /// Index of `X̃` for each object `X` of `A`.
    pub object_tilde: Vec<usize>,
}

/// Offsets of the `g`-summands inside `hom_{A∗G}(X̃, Ỹ)_d`.
struct Layout<'a, F: Field> {
    rho: &'a StrictAction<F>,
}

impl<'a, F: Field> Layout<'a, F> {
    fn summand_dim(&self, x: usize, y: usize, d: i64, g: usize) -> usize {
        self.rho.category().dim(x, self.rho.act_object(g, y), d)
    }

    fn offset(&self, x: usize, y: usize, d: i64, g: usize) -> usize {
        (0..g).map(|k| self.summand_dim(x, y, d, k)).sum()
    }

    fn total(&self, x: usize, y: usize, d: i64) -> usize {
        self.offset(x, y, d, self.rho.monoid().len())
    }

    fn degrees(&self, x: usize, y: usize) -> Vec<i64> {
        let a = self.rho.category();
        let mut ds: Vec<i64> = (0..self.rho.monoid().len())
            .flat_map(|g| a.hom_dims(x, self.rho.act_object(g, y)).degrees().collect::<Vec<_>>())
            .collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    fn dims(&self, x: usize, y: usize) -> GradedDims {
        GradedDims::from_pairs(self.degrees(x, y).into_iter().map(|d| (d, self.total(x, y, d))))
    }
}

fn refuse_invalid<F: Field>(rho: &StrictAction<F>) -> Result<()> {
    let report = validate_action(rho);
    if report.is_ok() {
        Ok(())
    } else {
        Err(Error::Invalid(report))
    }
}

/// Builds `A∗G`, the embedding `F_A` and (for groups) the induced action.
pub fn skew_group_dg_category<F: Field>(rho: &StrictAction<F>) -> Result<SkewResult<F>> {
    refuse_invalid(rho)?;
    let a = rho.category();
    let m = rho.monoid();
    let n = a.num_objects();
    let lay = Layout { rho };
    let mut s = DgCategory::new(a.objects().iter().cloned());

    for x in 0..n {
        for y in 0..n {
            let mut basis = HomBasis::new();
            for d in lay.degrees(x, y) {
                let mut labels = Vec::new();
                for g in 0..m.len() {
                    if let Some(names) = a.hom(x, rho.act_object(g, y)).basis().get(&d) {
                        labels.extend(names.iter().map(|b| format!("{}|{}", m.name(g), b)));
                    }
                }
                basis.insert(d, labels);
            }
            s.set_hom_basis(x, y, basis)?;
            for d in lay.degrees(x, y) {
                let mut block = Matrix::zeros(lay.total(x, y, d - 1), lay.total(x, y, d));
                for g in 0..m.len() {
                    let gy = rho.act_object(g, y);
                    let dg = a.hom(x, gy).complex().d(d);
                    let (r0, c0) = (lay.offset(x, y, d - 1, g), lay.offset(x, y, d, g));
                    for i in 0..dg.rows() {
                        for j in 0..dg.cols() {
                            block[(r0 + i, c0 + j)] = dg[(i, j)].clone();
                        }
                    }
                }
                s.set_differential(x, y, d, block)?;
            }
        }
    }

    let e = m.identity();
    for x in 0..n {
        let mut u = vec![F::zero(); lay.total(x, x, 0)];
        let off = lay.offset(x, x, 0, e);
        for (k, c) in a.unit(x).iter().enumerate() {
            u[off + k] = c.clone();
        }
        s.set_unit(x, u)?;
    }

    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for g1 in 0..m.len() {
                    let g1y = rho.act_object(g1, y);
                    for ea in a.hom(x, g1y).elements() {
                        let av = a.basis_vector(x, g1y, ea);
                        for g2 in 0..m.len() {
                            let g2z = rho.act_object(g2, z);
                            let g12 = m.mul(g1, g2);
                            let g12z = rho.act_object(g12, z);
                            for eb in a.hom(y, g2z).elements() {
                                // g1.b ∈ hom(g1.y, g1.(g2.z)) = hom(g1.y, (g1g2).z)
                                let g1b = rho.act(g1, y, g2z, eb.degree, &a.basis_vector(y, g2z, eb));
                                let prod = a.compose((x, g1y, g12z), ea.degree, &av, eb.degree, &g1b);
                                let deg = ea.degree + eb.degree;
                                let mut out = vec![F::zero(); lay.total(x, z, deg)];
                                let off = lay.offset(x, z, deg, g12);
                                for (k, c) in prod.into_iter().enumerate() {
                                    out[off + k] = c;
                                }
                                let sa = BasisIndex {
                                    degree: ea.degree,
                                    index: lay.offset(x, y, ea.degree, g1) + ea.index,
                                };
                                let sb = BasisIndex {
                                    degree: eb.degree,
                                    index: lay.offset(y, z, eb.degree, g2) + eb.index,
                                };
                                if out.iter().any(|c| !c.is_zero()) {
                                    s.set_composition((x, y, z), sa, sb, out)?;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    let embedding = DgFunctor::from_fn((0..n).collect(), |x, y| {
        let mut map = GradedMap::zero(a.hom_dims(x, y).clone(), lay.dims(x, y), 0);
        for (d, dim) in a.hom_dims(x, y).iter() {
            let off = lay.offset(x, y, d, e);
            let block = Matrix::from_fn(lay.total(x, y, d), dim, |i, j| {
                if i == off + j {
                    F::one()
                } else {
                    F::zero()
                }
            });
            map.set_block(d, block)?;
        }
        Ok(map)
    })?;

    let induced_action = match m.inverses() {
        None => None,
        Some(inv) => {
            let mut functors = Vec::with_capacity(m.len());
            for h in 0..m.len() {
                let f = DgFunctor::from_fn(
                    (0..n).map(|x| rho.act_object(h, x)).collect(),
                    |x, y| {
                        let (hx, hy) = (rho.act_object(h, x), rho.act_object(h, y));
                        let mut map = GradedMap::zero(lay.dims(x, y), lay.dims(hx, hy), 0);
                        for d in lay.degrees(x, y) {
                            let mut block = Matrix::zeros(lay.total(hx, hy, d), lay.total(x, y, d));
                            for g in 0..m.len() {
                                let conj = m.mul(m.mul(h, g), inv[h]);
                                let rh = rho.functor(h).hom_map(x, rho.act_object(g, y)).block(d);
                                let (r0, c0) = (lay.offset(hx, hy, d, conj), lay.offset(x, y, d, g));
                                for i in 0..rh.rows() {
                                    for j in 0..rh.cols() {
                                        block[(r0 + i, c0 + j)] = rh[(i, j)].clone();
                                    }
                                }
                            }
                            map.set_block(d, block)?;
                        }
                        Ok(map)
                    },
                )?;
                functors.push(f);
            }
            Some(StrictAction::new(m.clone(), s.clone(), functors)?)
        }
    };

    Ok(SkewResult {
        category: s,
        embedding,
        induced_action,
        object_tilde: (0..n).collect(),
    })
}

/// The skew group algebra `AG` of an action on a one-object, degree-0
/// category, computed directly from `(g₁, a₁)·(g₂, a₂) = (g₁g₂, a₁·(g₁.a₂))`.
/// Basis `"g|a"`, group-major.
pub fn skew_group_algebra<F: Field>(rho: &StrictAction<F>) -> Result<Algebra<F>> {
    let alg = Algebra::from_category(rho.category())?;
    refuse_invalid(rho)?;
    let m = rho.monoid();
    let n = alg.dim();
    let act = |g: usize| rho.functor(g).hom_map(0, 0).block(0);
    let actions: Vec<Matrix<F>> = (0..m.len()).map(act).collect();
    let basis = (0..m.len()).flat_map(|g| alg.basis().iter().map(move |b| format!("{}|{}", m.name(g), b)));
    let mut unit = vec![F::zero(); m.len() * n];
    let e = m.identity();
    for (k, c) in alg.unit().iter().enumerate() {
        unit[e * n + k] = c.clone();
    }
    Algebra::from_products(
        basis.collect::<Vec<_>>(),
        |i, j| {
            let (g1, a1) = (i / n, i % n);
            let (g2, a2) = (j / n, j % n);
            let g1a2 = actions[g1].column(a2);
            let prod = alg.mul(&alg.basis_vector(a1), &g1a2);
            let mut out = vec![F::zero(); m.len() * n];
            let g = m.mul(g1, g2);
            for (k, c) in prod.into_iter().enumerate() {
                out[g * n + k] = c;
            }
            out
        },
        unit,
    )
}

/// The group algebra `kG`: basis `"g|1"`, product given by the table.
pub fn group_algebra<F: Field>(m: &FiniteMonoid) -> Algebra<F> {
    let n = m.len();
    let mut unit = vec![F::zero(); n];
    unit[m.identity()] = F::one();
    Algebra::from_products(
        m.elements().iter().map(|g| format!("{g}|1")).collect::<Vec<_>>(),
        |g, h| crate::exactlin::unit_vector(n, m.mul(g, h)),
        unit,
    )
    .expect("well-formed")
}

/// The reduced skew category on one representative per orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced<F: Field> {
    pub category: DgCategory<F>,
    pub inclusion: DgFunctor<F>,
    pub representatives: Vec<usize>,
}

/// Full subcategory of `A∗G` on the chosen representatives (first object of
/// each orbit unless `representatives` is given).
pub fn reduce<F: Field>(s: &SkewResult<F>, representatives: Option<&[usize]>) -> Result<Reduced<F>> {
    let induced = s
        .induced_action
        .as_ref()
        .ok_or_else(|| Error::NotAGroup("reduction needs a group action".into()))?;
    let mut orbits = induced.orbits()?;
    if let Some(r) = representatives {
        orbits = orbits.with_representatives(r)?;
    }
    let (category, inclusion) = s.category.full_subcategory(&orbits.representatives)?;
    Ok(Reduced {
        category,
        inclusion,
        representatives: orbits.representatives,
    })
}

/// An equivalent action that is free on objects, with the equivalence to
/// the original category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Freeified<F: Field> {
    /// `A'` with objects `(x, g)` for representatives `x`, in representative
    /// then group order; `h.(x, g) = (x, hg)`.
    pub action: StrictAction<F>,
    /// `π: A' → A`, `(x, g) ↦ g.x`, identity on hom complexes.
    pub projection: DgFunctor<F>,
    pub representatives: Vec<usize>,
}

pub fn freeify<F: Field>(rho: &StrictAction<F>, representatives: Option<&[usize]>) -> Result<Freeified<F>> {
    let m = rho.monoid();
    m.require_group()?;
    refuse_invalid(rho)?;
    let a = rho.category();
    let mut orbits: Orbits = rho.orbits()?;
    if let Some(r) = representatives {
        orbits = orbits.with_representatives(r)?;
    }
    let reps = orbits.representatives.clone();
    let order = m.len();
    let pairs: Vec<(usize, usize)> = reps
        .iter()
        .flat_map(|&x| (0..order).map(move |g| (x, g)))
        .collect();
    let image = |&(x, g): &(usize, usize)| rho.act_object(g, x);
    let names = pairs
        .iter()
        .map(|&(x, g)| format!("({},{})", a.object_name(x), m.name(g)));
    let mut a2 = DgCategory::new(names);
    let np = pairs.len();
    for i in 0..np {
        for j in 0..np {
            let (u, v) = (image(&pairs[i]), image(&pairs[j]));
            a2.set_hom_basis(i, j, a.hom(u, v).basis().clone())?;
            for d in a.hom_dims(u, v).degrees() {
                a2.set_differential(i, j, d, a.hom(u, v).complex().d(d))?;
            }
        }
        a2.set_unit(i, a.unit(image(&pairs[i])).to_vec())?;
    }
    for i in 0..np {
        for j in 0..np {
            for k in 0..np {
                let (u, v, w) = (image(&pairs[i]), image(&pairs[j]), image(&pairs[k]));
                for p in a.hom_dims(u, v).degrees() {
                    for q in a.hom_dims(v, w).degrees() {
                        a2.set_composition_block((i, j, k), p, q, a.composition_block((u, v, w), p, q))?;
                    }
                }
            }
        }
    }
    let index_of = |x: usize, g: usize| reps.iter().position(|&r| r == x).expect("representative") * order + g;
    let mut functors = Vec::with_capacity(order);
    for h in 0..order {
        let object_map = pairs.iter().map(|&(x, g)| index_of(x, m.mul(h, g))).collect();
        functors.push(DgFunctor::from_fn(object_map, |i, j| {
            Ok(rho
                .functor(h)
                .hom_map(image(&pairs[i]), image(&pairs[j]))
                .clone())
        })?);
    }
    let projection = DgFunctor::from_fn(pairs.iter().map(image).collect(), |i, j| {
        Ok(GradedMap::identity(a2.hom_dims(i, j)))
    })?;
    let action = StrictAction::new(m.clone(), a2, functors)?;
    Ok(Freeified {
        action,
        projection,
        representatives: reps,
    })
}

/// Re-checks every property a freeification must have: the new action is
/// valid and free, `π` is a hom-bijective dg-functor hitting every object,
/// and `π ∘ ρ'(h) = ρ(h) ∘ π` on the nose.
pub fn check_freeify<F: Field>(rho: &StrictAction<F>, f: &Freeified<F>) -> Report {
    let mut report = Report::new();
    report.absorb("action", validate_action(&f.action));
    match is_free_on_objects(&f.action) {
        Ok(fr) if fr.free => {}
        Ok(fr) => {
            let (g, x) = fr.witness.unwrap_or_default();
            report.violation("free_on_objects", [g, x]);
        }
        Err(e) => report.violation("free_on_objects", [e.to_string()]),
    }
    let a2 = f.action.category();
    report.absorb("projection", validate_dg_functor(&f.projection, a2, rho.category()));
    if !f.projection.is_hom_bijective() {
        report.violation("projection_hom_bijective", ["π"]);
    }
    let mut hit = vec![false; rho.category().num_objects()];
    for &o in f.projection.object_map() {
        hit[o] = true;
    }
    for (x, h) in hit.iter().enumerate() {
        if !h {
            report.violation("projection_surjective", [rho.category().object_name(x)]);
        }
    }
    for h in 0..rho.monoid().len() {
        let lhs = f.action.functor(h).then(&f.projection);
        let rhs = f.projection.then(rho.functor(h));
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l == r => {}
            _ => report.violation("projection_equivariant", [rho.monoid().name(h)]),
        }
    }
    report
}

/// Result of [`check_trivial_induced_action`]: the computed action of each
/// group element on the reduced category and any discrepancies from the
/// identity.
#[derive(Clone, Debug)]
pub struct InducedOnReduced<F: Field> {
    pub reduced: Reduced<F>,
    pub functors: Vec<DgFunctor<F>>,
    pub report: Report,
}

/// Computes the action of each `h` on `(A∗G)^red` by conjugating with the
/// orbit isomorphisms `θ_Z = (k, id_Z): Z̃ → R̃` (where `Z = k.R` for the
/// representative `R`) and compares it with the identity matrix by matrix.
///
/// Refuses actions that are not free on objects.
pub fn check_trivial_induced_action<F: Field>(
    rho: &StrictAction<F>,
    representatives: Option<&[usize]>,
) -> Result<InducedOnReduced<F>> {
    let m = rho.monoid();
    let inv = m.require_group()?.to_vec();
    let free = is_free_on_objects(rho)?;
    if !free.free {
        let (g, x) = free.witness.unwrap_or_default();
        return Err(Error::Hypothesis(format!(
            "the action must be free on the set of objects, but {g} fixes {x}"
        )));
    }
    let s = skew_group_dg_category(rho)?;
    let induced = s.induced_action.as_ref().expect("group action");
    let reduced = reduce(&s, representatives)?;
    let sk = &s.category;
    let a = rho.category();
    let lay = Layout { rho };
    let n = a.num_objects();

    // For each object Z: its representative R and the unique k with k.R = Z.
    let orbits = rho.orbits()?;
    let rep_of: Vec<usize> = (0..n)
        .map(|z| {
            let o = orbits.orbit_of[z];
            *reduced
                .representatives
                .iter()
                .find(|&&r| orbits.orbit_of[r] == o)
                .expect("every orbit has a representative")
        })
        .collect();
    let coset: Vec<usize> = (0..n)
        .map(|z| {
            (0..m.len())
                .find(|&k| rho.act_object(k, rep_of[z]) == z)
                .expect("z lies in the orbit of its representative")
        })
        .collect();
    // θ_Z ∈ hom(Z̃, R̃)_0 and θ_Z⁻¹ ∈ hom(R̃, Z̃)_0
    let theta = |z: usize| -> Vec<F> {
        let r = rep_of[z];
        let mut v = vec![F::zero(); lay.total(z, r, 0)];
        let off = lay.offset(z, r, 0, coset[z]);
        for (i, c) in a.unit(z).iter().enumerate() {
            v[off + i] = c.clone();
        }
        v
    };
    let theta_inv = |z: usize| -> Vec<F> {
        let r = rep_of[z];
        let mut v = vec![F::zero(); lay.total(r, z, 0)];
        let off = lay.offset(r, z, 0, inv[coset[z]]);
        for (i, c) in a.unit(r).iter().enumerate() {
            v[off + i] = c.clone();
        }
        v
    };

    let mut report = Report::new();
    for z in 0..n {
        let r = rep_of[z];
        let there_and_back = sk.compose((z, r, z), 0, &theta(z), 0, &theta_inv(z));
        let back_and_there = sk.compose((r, z, r), 0, &theta_inv(z), 0, &theta(z));
        if there_and_back != sk.unit(z) || back_and_there != sk.unit(r) {
            report.violation("orbit_isomorphism", [a.object_name(z)]);
        }
    }

    let reps = &reduced.representatives;
    let mut functors = Vec::with_capacity(m.len());
    for h in 0..m.len() {
        let f = DgFunctor::from_fn((0..reps.len()).collect(), |i, j| {
            let (r, t) = (reps[i], reps[j]);
            let (hr, ht) = (rho.act_object(h, r), rho.act_object(h, t));
            let mut map = GradedMap::zero(sk.hom_dims(r, t).clone(), sk.hom_dims(r, t).clone(), 0);
            for (d, dim) in sk.hom_dims(r, t).iter() {
                let mut cols = Vec::with_capacity(dim);
                for k in 0..dim {
                    let fv = sk.basis_vector(r, t, BasisIndex { degree: d, index: k });
                    let hf = induced.act(h, r, t, d, &fv);
                    let left = sk.compose((r, hr, ht), 0, &theta_inv(hr), d, &hf);
                    cols.push(sk.compose((r, ht, t), d, &left, 0, &theta(ht)));
                }
                let block = Matrix::from_columns(&cols, dim);
                if !block.is_identity() {
                    for (k, col) in cols.iter().enumerate() {
                        if *col != sk.basis_vector(r, t, BasisIndex { degree: d, index: k }) {
                            report.violation(
                                "induced_action_is_identity",
                                [m.name(h).to_string(), sk.label(r, t, BasisIndex { degree: d, index: k })],
                            );
                        }
                    }
                }
                map.set_block(d, block)?;
            }
            Ok(map)
        })?;
        functors.push(f);
    }
    Ok(InducedOnReduced {
        reduced,
        functors,
        report,
    })
}

/// Checks `F_A ∘ ρ(h) = ρ_{A∗G}(h) ∘ F_A` for every `h`, per hom pair.
pub fn equivariance_of_embedding<F: Field>(rho: &StrictAction<F>, s: &SkewResult<F>) -> Result<Report> {
    let induced = s
        .induced_action
        .as_ref()
        .ok_or_else(|| Error::NotAGroup("equivariance needs the induced group action".into()))?;
    let m = rho.monoid();
    let a = rho.category();
    let n = a.num_objects();
    let mut report = Report::new();
    for h in 0..m.len() {
        let lhs = rho.functor(h).then(&s.embedding)?;
        let rhs = s.embedding.then(induced.functor(h))?;
        for x in 0..n {
            if lhs.object(x) != rhs.object(x) {
                report.violation("equivariant_on_objects", [m.name(h), a.object_name(x)]);
            }
        }
        for x in 0..n {
            for y in 0..n {
                if lhs.hom_map(x, y) != rhs.hom_map(x, y) {
                    report.violation(
                        "equivariant_on_morphisms",
                        [m.name(h).to_string(), format!("{}|{}", a.object_name(x), a.object_name(y))],
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Checks that four elements of `alg` are matrix units of `M₂(k)`:
/// `E_ij E_kl = δ_jk E_il`, `E₁₁ + E₂₂ = 1`, and that they span `alg`.
/// `units` is `[E₁₁, E₁₂, E₂₁, E₂₂]`.
pub fn matrix_unit_relations<F: Field>(alg: &Algebra<F>, units: &[Vec<F>; 4]) -> Report {
    let mut report = Report::new();
    let name = ["E11", "E12", "E21", "E22"];
    let idx = |i: usize, j: usize| 2 * i + j;
    let zero = vec![F::zero(); alg.dim()];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let prod = alg.mul(&units[idx(i, j)], &units[idx(k, l)]);
                    let expected = if j == k { &units[idx(i, l)] } else { &zero };
                    if &prod != expected {
                        report.violation("matrix_unit_product", [name[idx(i, j)], name[idx(k, l)]]);
                    }
                }
            }
        }
    }
    let sum = combine(alg.dim(), [(F::one(), units[0].clone()), (F::one(), units[3].clone())]);
    if sum != alg.unit() {
        report.violation("matrix_unit_sum", ["E11 + E22"]);
    }
    let span = Matrix::from_columns(units.as_slice(), alg.dim());
    if span.rank() != alg.dim() {
        report.violation("matrix_unit_span", [format!("rank {} of {}", span.rank(), alg.dim())]);
    }
    report
}

/// Named basis vector `"g|a"` of a skew algebra.
pub fn skew_basis_vector<F: Field>(alg: &Algebra<F>, label: &str) -> Result<Vec<F>> {
    Ok(alg.basis_vector(alg.basis_index(label)?))
}

/// Per object pair and degree: `(dim hom_{A∗G}(X̃,Ỹ)_d, Σ_g dim hom_A(X, g.Y)_d)`
/// wherever the two differ.
pub fn hom_dimension_mismatches<F: Field>(
    rho: &StrictAction<F>,
    s: &SkewResult<F>,
) -> BTreeMap<(String, String, i64), (usize, usize)> {
    let a = rho.category();
    let n = a.num_objects();
    let mut out = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            let mut expected = GradedDims::new();
            for g in 0..rho.monoid().len() {
                expected = expected.add(a.hom_dims(x, rho.act_object(g, y)));
            }
            let got = s.category.hom_dims(s.object_tilde[x], s.object_tilde[y]);
            let degrees: Vec<i64> = expected.degrees().chain(got.degrees()).collect();
            for d in degrees {
                if expected.get(d) != got.get(d) {
                    out.insert(
                        (a.object_name(x).to_string(), a.object_name(y).to_string(), d),
                        (got.get(d), expected.get(d)),
                    );
                }
            }
        }
    }
    out
}
