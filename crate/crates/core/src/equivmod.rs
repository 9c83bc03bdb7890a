//! Right modules over finite-dimensional algebras, `G`-equivariant modules,
//! and the functors between equivariant `A`-modules and `AG`-modules.
//!
//! Elements are column vectors and `m · b` is `A_b m`, so a right action
//! satisfies `A_{bc} = A_c A_b`. An equivariant structure is a family of
//! matrices `u_g` with
//!
//! ```text
//! u_e = 1,   u_g u_h = u_{hg},   u_g A_a = A_{g⁻¹.a} u_g
//! ```
//!
//! and the `AG`-module attached to it is `m · (g, a) = u_g(m · a)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dgcat::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{combine, Matrix};
use crate::field::Field;
use crate::groupact::StrictAction;
use crate::report::Report;
use crate::skew::skew_group_algebra;

/// A finite-dimensional right module: one `dim × dim` matrix per basis
/// element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule<F: Field> {
    pub algebra: Algebra<F>,
    pub dim: usize,
    pub action: Vec<Matrix<F>>,
}

impl<F: Field> RightModule<F> {
    pub fn new(algebra: Algebra<F>, dim: usize, action: Vec<Matrix<F>>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if let Some(m) = action.iter().find(|m| m.shape() != (dim, dim)) {
            return Err(Error::DimensionMismatch(format!(
                "action matrix of shape {:?} on a module of dimension {dim}",
                m.shape()
            )));
        }
        Ok(RightModule { algebra, dim, action })
    }

    pub fn zero(algebra: Algebra<F>) -> Self {
        let action = vec![Matrix::zeros(0, 0); algebra.dim()];
        RightModule { algebra, dim: 0, action }
    }

    /// The algebra acting on itself by right multiplication.
    pub fn regular(algebra: Algebra<F>) -> Self {
        let n = algebra.dim();
        let action = (0..n)
            .map(|b| Matrix::from_columns(&(0..n).map(|j| algebra.product(j, b)).collect::<Vec<_>>(), n))
            .collect();
        RightModule { algebra, dim: n, action }
    }

    /// `A_a` for an arbitrary element `a` given in coordinates.
    pub fn act_by(&self, a: &[F]) -> Matrix<F> {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (c, m) in a.iter().zip(&self.action) {
            if !c.is_zero() {
                out = out.add(&m.scale(c)).expect("square");
            }
        }
        out
    }
}

/// A right module together with an equivariant structure `u_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantModule<F: Field> {
    pub base: RightModule<F>,
    pub u: Vec<Matrix<F>>,
}

impl<F: Field> EquivariantModule<F> {
    pub fn new(base: RightModule<F>, u: Vec<Matrix<F>>) -> Result<Self> {
        if let Some(m) = u.iter().find(|m| m.shape() != (base.dim, base.dim)) {
            return Err(Error::DimensionMismatch(format!(
                "equivariant structure matrix of shape {:?} on a module of dimension {}",
                m.shape(),
                base.dim
            )));
        }
        Ok(EquivariantModule { base, u })
    }

    pub fn zero(rho: &StrictAction<F>) -> Result<Self> {
        let alg = Algebra::from_category(rho.category())?;
        Ok(EquivariantModule {
            base: RightModule::zero(alg),
            u: vec![Matrix::zeros(0, 0); rho.monoid().len()],
        })
    }

    /// The regular module with `u_g = χ(g) · ρ(g⁻¹)` for a character `χ`
    /// of `G` with values `±1` (given per element).
    pub fn regular_twisted(rho: &StrictAction<F>, character: &[i64]) -> Result<Self> {
        let inv = rho.monoid().require_group()?;
        let alg = Algebra::from_category(rho.category())?;
        let u = (0..rho.monoid().len())
            .map(|g| {
                rho.functor(inv[g])
                    .hom_map(0, 0)
                    .block(0)
                    .scale(&F::from_i64(character[g]))
            })
            .collect();
        Ok(EquivariantModule {
            base: RightModule::regular(alg),
            u,
        })
    }

    /// `u_g = ρ(g⁻¹)` on the regular module.
    pub fn regular(rho: &StrictAction<F>) -> Result<Self> {
        EquivariantModule::regular_twisted(rho, &vec![1; rho.monoid().len()])
    }
}

/// Unit and associativity of a right action on all basis pairs.
pub fn validate_module<F: Field>(m: &RightModule<F>) -> Report {
    let mut report = Report::new();
    let alg = &m.algebra;
    if m.action.len() != alg.dim() || m.action.iter().any(|a| a.shape() != (m.dim, m.dim)) {
        report.violation("shape", [format!("dimension {}", m.dim)]);
        return report;
    }
    if !m.act_by(alg.unit()).is_identity() {
        report.violation("unit", ["1"]);
    }
    for b in 0..alg.dim() {
        for c in 0..alg.dim() {
            let lhs = m.action[c].mul(&m.action[b]).expect("square");
            let rhs = m.act_by(&alg.product(b, c));
            if lhs != rhs {
                report.violation("associativity", [alg.basis()[b].as_str(), alg.basis()[c].as_str()]);
            }
        }
    }
    report
}

fn check_same_algebra<F: Field>(m: &RightModule<F>, rho: &StrictAction<F>) -> Result<Algebra<F>> {
    let alg = Algebra::from_category(rho.category())?;
    if m.algebra != alg {
        return Err(Error::Mismatch("the module is over a different algebra than the action".into()));
    }
    Ok(alg)
}

/// Module axioms of the base, `u_e = 1`, `u_g u_h = u_{hg}` and
/// `u_g A_a = A_{g⁻¹.a} u_g`.
pub fn validate_equivariant<F: Field>(e: &EquivariantModule<F>, rho: &StrictAction<F>) -> Result<Report> {
    let alg = check_same_algebra(&e.base, rho)?;
    let m = rho.monoid();
    let inv = m.require_group()?;
    let mut report = Report::new();
    report.absorb("base", validate_module(&e.base));
    if e.u.len() != m.len() {
        report.violation("shape", [format!("{} maps for {} elements", e.u.len(), m.len())]);
        return Ok(report);
    }
    if !e.u[m.identity()].is_identity() {
        report.violation("identity", [m.name(m.identity())]);
    }
    for g in 0..m.len() {
        for h in 0..m.len() {
            if e.u[g].mul(&e.u[h]).expect("square") != e.u[m.mul(h, g)] {
                report.violation("anti_cocycle", [m.name(g), m.name(h)]);
            }
        }
    }
    for g in 0..m.len() {
        for a in 0..alg.dim() {
            let ga = rho.act(inv[g], 0, 0, 0, &alg.basis_vector(a));
            let lhs = e.u[g].mul(&e.base.action[a]).expect("square");
            let rhs = e.base.act_by(&ga).mul(&e.u[g]).expect("square");
            if lhs != rhs {
                report.violation("semilinearity", [m.name(g), alg.basis()[a].as_str()]);
            }
        }
    }
    Ok(report)
}

/// `m · (g, a) = u_g(m · a)` as a module over `AG`.
pub fn to_skew_module<F: Field>(e: &EquivariantModule<F>, rho: &StrictAction<F>) -> Result<RightModule<F>> {
    let report = validate_equivariant(e, rho)?;
    if !report.is_ok() {
        return Err(Error::Invalid(report));
    }
    let ag = skew_group_algebra(rho)?;
    let n = e.base.algebra.dim();
    let action = (0..ag.dim())
        .map(|i| e.u[i / n].mul(&e.base.action[i % n]).expect("square"))
        .collect();
    RightModule::new(ag, e.base.dim, action)
}

/// Restriction along `a ↦ (e, a)` with `u_g(m) = m · (g, 1)`.
pub fn from_skew_module<F: Field>(nm: &RightModule<F>, rho: &StrictAction<F>) -> Result<EquivariantModule<F>> {
    let alg = Algebra::from_category(rho.category())?;
    let ag = skew_group_algebra(rho)?;
    if nm.algebra != ag {
        return Err(Error::Mismatch("the module is not over the skew group algebra of this action".into()));
    }
    let report = validate_module(nm);
    if !report.is_ok() {
        return Err(Error::Invalid(report));
    }
    let m = rho.monoid();
    let n = alg.dim();
    let e = m.identity();
    let action = (0..n).map(|a| nm.action[e * n + a].clone()).collect();
    let u = (0..m.len())
        .map(|g| {
            let mut coords = vec![F::zero(); ag.dim()];
            for (k, c) in alg.unit().iter().enumerate() {
                coords[g * n + k] = c.clone();
            }
            nm.act_by(&coords)
        })
        .collect();
    EquivariantModule::new(RightModule::new(alg, nm.dim, action)?, u)
}

/// Equations `X A^M_k = A^N_k X` for every pair of generators, in the
/// entries of `X` (`dim N × dim M`, row-major).
fn intertwiner_system<F: Field>(pairs: &[(&Matrix<F>, &Matrix<F>)], dm: usize, dn: usize) -> Matrix<F> {
    let unknown = |r: usize, c: usize| r * dm + c;
    let mut rows = Vec::new();
    for (am, an) in pairs {
        for i in 0..dn {
            for j in 0..dm {
                let mut row = vec![F::zero(); dn * dm];
                for k in 0..dm {
                    row[unknown(i, k)] = row[unknown(i, k)].clone() + am[(k, j)].clone();
                }
                for k in 0..dn {
                    row[unknown(k, j)] = row[unknown(k, j)].clone() - an[(i, k)].clone();
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(rows, dn * dm).expect("rectangular")
}

fn intertwiners<F: Field>(pairs: &[(&Matrix<F>, &Matrix<F>)], dm: usize, dn: usize) -> Vec<Matrix<F>> {
    let kernel = intertwiner_system(pairs, dm, dn).kernel_basis();
    (0..kernel.cols())
        .map(|c| Matrix::from_vec(dn, dm, kernel.column(c)).expect("shape"))
        .collect()
}

fn module_pairs<'a, F: Field>(m: &'a RightModule<F>, n: &'a RightModule<F>) -> Result<Vec<(&'a Matrix<F>, &'a Matrix<F>)>> {
    if m.algebra != n.algebra {
        return Err(Error::Mismatch("modules over different algebras".into()));
    }
    Ok(m.action.iter().zip(&n.action).collect())
}

fn equivariant_pairs<'a, F: Field>(
    m: &'a EquivariantModule<F>,
    n: &'a EquivariantModule<F>,
) -> Result<Vec<(&'a Matrix<F>, &'a Matrix<F>)>> {
    let mut pairs = module_pairs(&m.base, &n.base)?;
    if m.u.len() != n.u.len() {
        return Err(Error::Mismatch("equivariant structures for different groups".into()));
    }
    pairs.extend(m.u.iter().zip(&n.u));
    Ok(pairs)
}

/// Dimension of the space of module maps `M → N`.
pub fn hom_dim<F: Field>(m: &RightModule<F>, n: &RightModule<F>) -> Result<usize> {
    Ok(intertwiners(&module_pairs(m, n)?, m.dim, n.dim).len())
}

/// Dimension of the space of module maps `M → N` commuting with every `u_g`.
pub fn equivariant_hom_dim<F: Field>(m: &EquivariantModule<F>, n: &EquivariantModule<F>) -> Result<usize> {
    Ok(intertwiners(&equivariant_pairs(m, n)?, m.base.dim, n.base.dim).len())
}

/// Exhaustive search is used over a prime field while the intertwiner space
/// has at most this many elements.
const EXHAUSTIVE_LIMIT: u64 = 4096;
const RANDOM_TRIALS: usize = 64;

/// Looks for an invertible element in the span of `basis`. Over a small
/// prime field every combination is tried, so `None` proves there is no
/// isomorphism; otherwise random combinations are tried (a nonzero
/// determinant polynomial of degree `n` vanishes at a random point with
/// probability at most `n / 201` over ℚ).
fn invertible_in_span<F: Field>(basis: &[Matrix<F>], n: usize) -> Option<Matrix<F>> {
    if n == 0 {
        return Some(Matrix::zeros(0, 0));
    }
    if basis.is_empty() {
        return None;
    }
    let combo = |coeffs: &[i64]| {
        let data = combine(
            n * n,
            coeffs
                .iter()
                .zip(basis)
                .map(|(&c, b)| (F::from_i64(c), b.entries().to_vec())),
        );
        Matrix::from_vec(n, n, data).expect("shape")
    };
    if let Some(b) = basis.iter().find(|b| b.is_invertible()) {
        return Some(b.clone());
    }
    let p = u64::from(F::characteristic());
    let r = basis.len() as u32;
    if p != 0 && p.checked_pow(r).is_some_and(|total| total <= EXHAUSTIVE_LIMIT) {
        let mut coeffs = vec![0i64; basis.len()];
        loop {
            let m = combo(&coeffs);
            if m.is_invertible() {
                return Some(m);
            }
            let mut k = 0;
            loop {
                if k == coeffs.len() {
                    return None;
                }
                coeffs[k] += 1;
                if coeffs[k] < p as i64 {
                    break;
                }
                coeffs[k] = 0;
                k += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<i64> = (0..basis.len()).map(|_| rng.gen_range(-100..=100)).collect();
        let m = combo(&coeffs);
        if m.is_invertible() {
            return Some(m);
        }
    }
    None
}

/// An invertible module map `M → N`, if one is found.
pub fn find_isomorphism<F: Field>(m: &RightModule<F>, n: &RightModule<F>) -> Result<Option<Matrix<F>>> {
    if m.dim != n.dim {
        return Ok(None);
    }
    let basis = intertwiners(&module_pairs(m, n)?, m.dim, n.dim);
    Ok(invertible_in_span(&basis, m.dim))
}

/// An invertible equivariant module map `M → N`, if one is found.
pub fn find_equivariant_isomorphism<F: Field>(
    m: &EquivariantModule<F>,
    n: &EquivariantModule<F>,
) -> Result<Option<Matrix<F>>> {
    if m.base.dim != n.base.dim {
        return Ok(None);
    }
    let basis = intertwiners(&equivariant_pairs(m, n)?, m.base.dim, n.base.dim);
    Ok(invertible_in_span(&basis, m.base.dim))
}

/// `from_skew(to_skew(E)) ≅ E` as equivariant modules, with an explicit
/// intertwiner.
pub fn roundtrip_equivariant<F: Field>(e: &EquivariantModule<F>, rho: &StrictAction<F>) -> Result<Report> {
    let back = from_skew_module(&to_skew_module(e, rho)?, rho)?;
    let mut report = Report::new();
    match find_equivariant_isomorphism(e, &back)? {
        Some(x) => {
            if !verify_intertwiner(&x, &equivariant_pairs(e, &back)?) {
                report.violation("intertwiner", ["from_skew(to_skew(E))"]);
            }
        }
        None => report.violation("roundtrip_isomorphism", ["from_skew(to_skew(E))"]),
    }
    Ok(report)
}

/// `to_skew(from_skew(N)) ≅ N` as `AG`-modules, with an explicit intertwiner.
pub fn roundtrip_skew<F: Field>(nm: &RightModule<F>, rho: &StrictAction<F>) -> Result<Report> {
    let back = to_skew_module(&from_skew_module(nm, rho)?, rho)?;
    let mut report = Report::new();
    match find_isomorphism(nm, &back)? {
        Some(x) => {
            if !verify_intertwiner(&x, &module_pairs(nm, &back)?) {
                report.violation("intertwiner", ["to_skew(from_skew(N))"]);
            }
        }
        None => report.violation("roundtrip_isomorphism", ["to_skew(from_skew(N))"]),
    }
    Ok(report)
}

fn verify_intertwiner<F: Field>(x: &Matrix<F>, pairs: &[(&Matrix<F>, &Matrix<F>)]) -> bool {
    x.is_invertible()
        && pairs
            .iter()
            .all(|(am, an)| x.mul(am).expect("square") == an.mul(x).expect("square"))
}

/// A module over `k` of dimension `dim` with a `ℤ/2`-structure `u_s = P J P⁻¹`
/// for a random invertible `P`, where `J` is `diag(1, −1, 1, …)` (or a
/// unipotent Jordan block in characteristic 2).
pub fn random_involution_module<F: Field>(rho: &StrictAction<F>, dim: usize, seed: u64) -> Result<EquivariantModule<F>> {
    let alg = Algebra::from_category(rho.category())?;
    if alg.dim() != 1 || rho.monoid().len() != 2 {
        return Err(Error::Mismatch("expected a ℤ/2-action on the ground field".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = loop {
        let p = Matrix::from_fn(dim, dim, |_, _| F::from_i64(rng.gen_range(-3..=3)));
        if p.is_invertible() {
            break p;
        }
    };
    let mut j = Matrix::identity(dim);
    if dim >= 2 {
        if F::characteristic() == 2 {
            j[(0, 1)] = F::one();
        } else {
            j[(1, 1)] = -F::one();
        }
    }
    let pinv = p.inverse().expect("invertible");
    let us = p.mul(&j)?.mul(&pinv)?;
    let base = RightModule::new(alg, dim, vec![Matrix::identity(dim)])?;
    let mut u = vec![Matrix::identity(dim); 2];
    u[1 - rho.monoid().identity()] = us;
    EquivariantModule::new(base, u)
}

/// The standard modules of the corpus for an action of `ℤ/2` on an
/// algebra: zero, regular, sign-twisted regular and `AG` restricted back.
pub fn module_corpus<F: Field>(rho: &StrictAction<F>) -> Result<Vec<(String, EquivariantModule<F>)>> {
    let m = rho.monoid();
    let sign: Vec<i64> = (0..m.len())
        .map(|g| if g == m.identity() { 1 } else { -1 })
        .collect();
    let ag = skew_group_algebra(rho)?;
    let mut out = vec![
        ("zero".to_string(), EquivariantModule::zero(rho)?),
        ("regular".to_string(), EquivariantModule::regular(rho)?),
        ("sign-regular".to_string(), EquivariantModule::regular_twisted(rho, &sign)?),
        ("restricted-AG".to_string(), from_skew_module(&RightModule::regular(ag), rho)?),
    ];
    if Algebra::from_category(rho.category())?.dim() == 1 && m.len() == 2 {
        out.push(("random-3".to_string(), random_involution_module(rho, 3, 7)?));
    }
    Ok(out)
}
