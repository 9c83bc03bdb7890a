//! Finite dg-categories given by explicit bases and structure constants.
//!
//! Composition is written diagrammatically: for `a: X → Y` and `b: Y → Z`,
//! `a ▷ b: X → Z` means "a, then b". Structure constants for the degree pair
//! `(p, q)` on the object triple `(X, Y, Z)` are stored as a matrix with one
//! column per basis pair `(i, j)` (column index `i * dim_q + j`) and one row
//! per basis element of `hom(X, Z)_{p+q}`.
//!
//! The Leibniz rule is `d(a ▷ b) = d(a) ▷ b + (−1)^{|a|} a ▷ d(b)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::{combine, unit_vector, Matrix};
use crate::field::Field;
use crate::graded::{validate_complex, ChainComplex, GradedDims, GradedMap};
use crate::report::Report;

/// Basis labels of a hom complex, per degree.
pub type HomBasis = BTreeMap<i64, Vec<String>>;

/// A basis element of a hom complex: degree and position within that degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    pub degree: i64,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace<F: Field> {
    basis: HomBasis,
    complex: ChainComplex<F>,
}

impl<F: Field> HomSpace<F> {
    fn new(basis: HomBasis) -> Self {
        let dims = GradedDims::from_pairs(basis.iter().map(|(&d, b)| (d, b.len())));
        let basis = basis.into_iter().filter(|(_, b)| !b.is_empty()).collect();
        HomSpace {
            basis,
            complex: ChainComplex::with_zero_differential(dims),
        }
    }

    pub fn basis(&self) -> &HomBasis {
        &self.basis
    }

    pub fn complex(&self) -> &ChainComplex<F> {
        &self.complex
    }

    pub fn dims(&self) -> &GradedDims {
        self.complex.dims()
    }

    pub fn label(&self, b: BasisIndex) -> &str {
        &self.basis[&b.degree][b.index]
    }

    pub fn find(&self, name: &str) -> Option<BasisIndex> {
        self.basis.iter().find_map(|(&degree, names)| {
            names
                .iter()
                .position(|n| n == name)
                .map(|index| BasisIndex { degree, index })
        })
    }

    /// All basis elements, by degree then position.
    pub fn elements(&self) -> impl Iterator<Item = BasisIndex> + '_ {
        self.basis.iter().flat_map(|(&degree, names)| {
            (0..names.len()).map(move |index| BasisIndex { degree, index })
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct CompKey {
    src: usize,
    mid: usize,
    tgt: usize,
    left: i64,
    right: i64,
}

/// A finite dg-category over `F` with strict units.
#[derive(Clone, Debug)]
pub struct DgCategory<F: Field> {
    objects: Vec<String>,
    homs: Vec<HomSpace<F>>,
    composition: BTreeMap<CompKey, Matrix<F>>,
    units: Vec<Vec<F>>,
}

impl<F: Field> PartialEq for DgCategory<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.objects != other.objects || self.homs != other.homs || self.units != other.units {
            return false;
        }
        let same = |a: &Self, b: &Self| {
            a.composition
                .iter()
                .all(|(k, m)| b.composition.get(k).map_or_else(|| m.is_zero(), |n| n == m))
        };
        same(self, other) && same(other, self)
    }
}

impl<F: Field> Eq for DgCategory<F> {}

impl<F: Field> DgCategory<F> {
    /// A category with the given objects and all hom complexes zero.
    pub fn new<S: Into<String>>(objects: impl IntoIterator<Item = S>) -> Self {
        let objects: Vec<String> = objects.into_iter().map(Into::into).collect();
        let n = objects.len();
        DgCategory {
            objects,
            homs: (0..n * n).map(|_| HomSpace::new(HomBasis::new())).collect(),
            composition: BTreeMap::new(),
            units: vec![Vec::new(); n],
        }
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    fn pair(&self, x: usize, y: usize) -> usize {
        x * self.objects.len() + y
    }

    fn check_object(&self, x: usize) -> Result<()> {
        if x < self.objects.len() {
            Ok(())
        } else {
            Err(Error::UnknownObject(format!("#{x}")))
        }
    }

    pub fn hom(&self, x: usize, y: usize) -> &HomSpace<F> {
        &self.homs[self.pair(x, y)]
    }

    pub fn hom_dims(&self, x: usize, y: usize) -> &GradedDims {
        self.hom(x, y).dims()
    }

    pub fn dim(&self, x: usize, y: usize, degree: i64) -> usize {
        self.hom_dims(x, y).get(degree)
    }

    /// `"X|Y:name"` for a basis element.
    pub fn label(&self, x: usize, y: usize, b: BasisIndex) -> String {
        format!(
            "{}|{}:{}",
            self.objects[x],
            self.objects[y],
            self.hom(x, y).label(b)
        )
    }

    /// Replaces the basis of `hom(x, y)`. The differential of this hom, the
    /// composition constants touching it and (if `x == y`) the unit are reset.
    pub fn set_hom_basis(&mut self, x: usize, y: usize, basis: HomBasis) -> Result<()> {
        self.check_object(x)?;
        self.check_object(y)?;
        let mut seen = std::collections::HashSet::new();
        for name in basis.values().flatten() {
            if !seen.insert(name.as_str()) {
                return Err(Error::Schema(format!(
                    "duplicate basis label {name:?} in {}|{}",
                    self.objects[x], self.objects[y]
                )));
            }
        }
        let p = self.pair(x, y);
        self.homs[p] = HomSpace::new(basis);
        self.composition.retain(|k, _| {
            (k.src, k.mid) != (x, y) && (k.mid, k.tgt) != (x, y) && (k.src, k.tgt) != (x, y)
        });
        if x == y {
            self.units[x] = vec![F::zero(); self.dim(x, x, 0)];
        }
        Ok(())
    }

    /// Sets the differential block `hom(x, y)_degree → hom(x, y)_{degree-1}`.
    pub fn set_differential(&mut self, x: usize, y: usize, degree: i64, m: Matrix<F>) -> Result<()> {
        self.check_object(x)?;
        self.check_object(y)?;
        let p = self.pair(x, y);
        self.homs[p].complex.set_differential(degree, m)
    }

    /// `d(a)` for a homogeneous `a ∈ hom(x, y)_degree`.
    pub fn differential(&self, x: usize, y: usize, degree: i64, a: &[F]) -> Result<Vec<F>> {
        self.hom(x, y).complex.differential().apply(degree, a)
    }

    pub fn set_unit(&mut self, x: usize, unit: Vec<F>) -> Result<()> {
        self.check_object(x)?;
        if unit.len() != self.dim(x, x, 0) {
            return Err(Error::DimensionMismatch(format!(
                "unit of {} has {} coefficients, hom is {}-dimensional in degree 0",
                self.objects[x],
                unit.len(),
                self.dim(x, x, 0)
            )));
        }
        self.units[x] = unit;
        Ok(())
    }

    pub fn unit(&self, x: usize) -> &[F] {
        &self.units[x]
    }

    fn comp_shape(&self, k: &CompKey) -> (usize, usize) {
        (
            self.dim(k.src, k.tgt, k.left + k.right),
            self.dim(k.src, k.mid, k.left) * self.dim(k.mid, k.tgt, k.right),
        )
    }

    /// Sets `a ▷ b` for basis elements `a ∈ hom(x, y)`, `b ∈ hom(y, z)`.
    pub fn set_composition(
        &mut self,
        (x, y, z): (usize, usize, usize),
        a: BasisIndex,
        b: BasisIndex,
        value: Vec<F>,
    ) -> Result<()> {
        self.check_object(x)?;
        self.check_object(y)?;
        self.check_object(z)?;
        let key = CompKey {
            src: x,
            mid: y,
            tgt: z,
            left: a.degree,
            right: b.degree,
        };
        let (rows, cols) = self.comp_shape(&key);
        let dq = self.dim(y, z, b.degree);
        if a.index >= self.dim(x, y, a.degree) || b.index >= dq {
            return Err(Error::UnknownBasis(format!("{a:?} / {b:?}")));
        }
        if value.len() != rows {
            return Err(Error::DimensionMismatch(format!(
                "composite has {} coefficients, target degree has dimension {rows}",
                value.len()
            )));
        }
        if rows == 0 {
            return Ok(());
        }
        let block = self
            .composition
            .entry(key)
            .or_insert_with(|| Matrix::zeros(rows, cols));
        let col = a.index * dq + b.index;
        for (r, v) in value.into_iter().enumerate() {
            block[(r, col)] = v;
        }
        Ok(())
    }

    /// Replaces the whole structure constant block for the degree pair `(p, q)`.
    pub fn set_composition_block(
        &mut self,
        (x, y, z): (usize, usize, usize),
        p: i64,
        q: i64,
        block: Matrix<F>,
    ) -> Result<()> {
        self.check_object(x)?;
        self.check_object(y)?;
        self.check_object(z)?;
        let key = CompKey {
            src: x,
            mid: y,
            tgt: z,
            left: p,
            right: q,
        };
        let shape = self.comp_shape(&key);
        if block.shape() != shape {
            return Err(Error::DimensionMismatch(format!(
                "composition block has shape {:?}, expected {shape:?}",
                block.shape()
            )));
        }
        if shape.0 == 0 || shape.1 == 0 || block.is_zero() {
            self.composition.remove(&key);
        } else {
            self.composition.insert(key, block);
        }
        Ok(())
    }

    /// Structure constant block for the degree pair `(p, q)`; zero if unset.
    pub fn composition_block(&self, (x, y, z): (usize, usize, usize), p: i64, q: i64) -> Matrix<F> {
        let key = CompKey {
            src: x,
            mid: y,
            tgt: z,
            left: p,
            right: q,
        };
        match self.composition.get(&key) {
            Some(m) => m.clone(),
            None => {
                let (r, c) = self.comp_shape(&key);
                Matrix::zeros(r, c)
            }
        }
    }

    /// `a ▷ b` for basis elements.
    pub fn compose_basis(&self, (x, y, z): (usize, usize, usize), a: BasisIndex, b: BasisIndex) -> Vec<F> {
        let key = CompKey {
            src: x,
            mid: y,
            tgt: z,
            left: a.degree,
            right: b.degree,
        };
        match self.composition.get(&key) {
            Some(m) => m.column(a.index * self.dim(y, z, b.degree) + b.index),
            None => vec![F::zero(); self.dim(x, z, a.degree + b.degree)],
        }
    }

    /// `a ▷ b` for homogeneous elements `a ∈ hom(x,y)_p`, `b ∈ hom(y,z)_q`.
    pub fn compose(
        &self,
        (x, y, z): (usize, usize, usize),
        p: i64,
        a: &[F],
        q: i64,
        b: &[F],
    ) -> Vec<F> {
        let n = self.dim(x, z, p + q);
        let mut terms = Vec::new();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let v = self.compose_basis(
                    (x, y, z),
                    BasisIndex { degree: p, index: i },
                    BasisIndex { degree: q, index: j },
                );
                terms.push((ai.clone() * bj.clone(), v));
            }
        }
        combine(n, terms)
    }

    /// The basis vector of `b` inside `hom(x, y)_{b.degree}`.
    pub fn basis_vector(&self, x: usize, y: usize, b: BasisIndex) -> Vec<F> {
        unit_vector(self.dim(x, y, b.degree), b.index)
    }

    /// Homology of `hom(x, y)`.
    pub fn hom_homology(&self, x: usize, y: usize) -> Result<GradedDims> {
        self.check_object(x)?;
        self.check_object(y)?;
        self.hom(x, y).complex.homology()
    }

    pub fn validate(&self) -> Report {
        validate_dg_category(self)
    }

    /// Full subcategory on `objs` (in the given order) and its inclusion functor.
    pub fn full_subcategory(&self, objs: &[usize]) -> Result<(DgCategory<F>, DgFunctor<F>)> {
        for &o in objs {
            self.check_object(o)?;
        }
        let mut sub = DgCategory::new(objs.iter().map(|&o| self.objects[o].clone()));
        let m = objs.len();
        for (i, &x) in objs.iter().enumerate() {
            for (j, &y) in objs.iter().enumerate() {
                let p = sub.pair(i, j);
                sub.homs[p] = self.hom(x, y).clone();
            }
            sub.units[i] = self.units[x].clone();
        }
        for (i, &x) in objs.iter().enumerate() {
            for (j, &y) in objs.iter().enumerate() {
                for (k, &z) in objs.iter().enumerate() {
                    for (&key, block) in self.composition.range(
                        CompKey { src: x, mid: y, tgt: z, left: i64::MIN, right: i64::MIN }
                            ..=CompKey { src: x, mid: y, tgt: z, left: i64::MAX, right: i64::MAX },
                    ) {
                        sub.composition.insert(
                            CompKey { src: i, mid: j, tgt: k, left: key.left, right: key.right },
                            block.clone(),
                        );
                    }
                }
            }
        }
        let mut hom_maps = Vec::with_capacity(m * m);
        for &x in objs {
            for &y in objs {
                hom_maps.push(GradedMap::identity(self.hom_dims(x, y)));
            }
        }
        let inclusion = DgFunctor {
            object_map: objs.to_vec(),
            hom_maps,
        };
        Ok((sub, inclusion))
    }

    /// Reorders the degree-`degree` basis of `hom(x, y)`: new position `i`
    /// holds old element `perm[i]`. The result is isomorphic to `self`.
    pub fn permute_basis(&self, x: usize, y: usize, degree: i64, perm: &[usize]) -> Result<DgCategory<F>> {
        let n = self.dim(x, y, degree);
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(Error::DimensionMismatch(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        // change of basis: new coordinates = P * old coordinates
        let new_of_old: Vec<usize> = {
            let mut inv = vec![0; n];
            for (new, &old) in perm.iter().enumerate() {
                inv[old] = new;
            }
            inv
        };
        let permute_vec = |v: &[F]| -> Vec<F> { perm.iter().map(|&old| v[old].clone()).collect() };
        let objs: Vec<usize> = (0..self.num_objects()).collect();
        let mut out = self.clone();
        let p = self.pair(x, y);
        let names = &self.hom(x, y).basis[&degree];
        out.homs[p].basis.insert(degree, perm.iter().map(|&o| names[o].clone()).collect());
        // differential blocks out of and into the permuted degree
        {
            let d = self.hom(x, y).complex.differential();
            let out_d = out.homs[p].complex.differential_mut();
            let from = d.block(degree);
            out_d.set_block(degree, Matrix::from_fn(from.rows(), n, |r, c| from[(r, perm[c])].clone()))?;
            let into = d.block(degree + 1);
            out_d.set_block(
                degree + 1,
                Matrix::from_fn(n, into.cols(), |r, c| into[(perm[r], c)].clone()),
            )?;
        }
        if x == y && degree == 0 {
            out.units[x] = permute_vec(&self.units[x]);
        }
        out.composition.clear();
        let remap = |src: usize, tgt: usize, b: BasisIndex| -> BasisIndex {
            if (src, tgt) == (x, y) && b.degree == degree {
                BasisIndex { degree, index: new_of_old[b.index] }
            } else {
                b
            }
        };
        for &s in &objs {
            for &m in &objs {
                for &t in &objs {
                    for a in self.hom(s, m).elements() {
                        for b in self.hom(m, t).elements() {
                            let mut v = self.compose_basis((s, m, t), a, b);
                            if v.iter().all(F::is_zero) {
                                continue;
                            }
                            if (s, t) == (x, y) && a.degree + b.degree == degree {
                                v = permute_vec(&v);
                            }
                            out.set_composition((s, m, t), remap(s, m, a), remap(m, t, b), v)?;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn object_triples(&self) -> impl Iterator<Item = (usize, usize, usize)> {
        let n = self.num_objects();
        (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
    }
}

fn sign<F: Field>(degree: i64) -> F {
    if degree.rem_euclid(2) == 0 {
        F::one()
    } else {
        -F::one()
    }
}

/// Checks hom complexes, units, associativity and the Leibniz rule on every
/// basis pair and triple.
pub fn validate_dg_category<F: Field>(a: &DgCategory<F>) -> Report {
    let mut report = Report::new();
    let n = a.num_objects();
    for x in 0..n {
        for y in 0..n {
            let r = validate_complex(a.hom(x, y).complex());
            report.absorb(&format!("hom[{}|{}]", a.objects[x], a.objects[y]), r);
        }
    }
    if !report.is_ok() {
        return report;
    }

    for x in 0..n {
        let u = a.unit(x);
        if u.len() != a.dim(x, x, 0) {
            report.violation("unit_shape", [a.objects[x].clone()]);
            continue;
        }
        match a.differential(x, x, 0, u) {
            Ok(du) if du.iter().all(F::is_zero) => {}
            _ => report.violation("unit_cycle", [a.objects[x].clone()]),
        }
    }
    if !report.is_ok() {
        return report;
    }

    // unit laws
    for x in 0..n {
        for y in 0..n {
            for b in a.hom(x, y).elements() {
                let bv = a.basis_vector(x, y, b);
                if a.compose((x, x, y), 0, a.unit(x), b.degree, &bv) != bv {
                    report.violation("left_unit", [a.objects[x].clone(), a.label(x, y, b)]);
                }
                if a.compose((x, y, y), b.degree, &bv, 0, a.unit(y)) != bv {
                    report.violation("right_unit", [a.label(x, y, b), a.objects[y].clone()]);
                }
            }
        }
    }

    // associativity
    for (w, x, y) in a.object_triples() {
        for z in 0..n {
            for ea in a.hom(w, x).elements() {
                for eb in a.hom(x, y).elements() {
                    let ab = a.compose_basis((w, x, y), ea, eb);
                    let ab_zero = ab.iter().all(F::is_zero);
                    for ec in a.hom(y, z).elements() {
                        let bc = a.compose_basis((x, y, z), eb, ec);
                        let cv = a.basis_vector(y, z, ec);
                        let av = a.basis_vector(w, x, ea);
                        let lhs = if ab_zero {
                            vec![F::zero(); a.dim(w, z, ea.degree + eb.degree + ec.degree)]
                        } else {
                            a.compose((w, y, z), ea.degree + eb.degree, &ab, ec.degree, &cv)
                        };
                        let rhs = a.compose((w, x, z), ea.degree, &av, eb.degree + ec.degree, &bc);
                        if lhs != rhs {
                            report.violation(
                                "associativity",
                                [a.label(w, x, ea), a.label(x, y, eb), a.label(y, z, ec)],
                            );
                        }
                    }
                }
            }
        }
    }

    // Leibniz
    for (x, y, z) in a.object_triples() {
        for ea in a.hom(x, y).elements() {
            let av = a.basis_vector(x, y, ea);
            let da = a.differential(x, y, ea.degree, &av).expect("shape checked");
            for eb in a.hom(y, z).elements() {
                let bv = a.basis_vector(y, z, eb);
                let db = a.differential(y, z, eb.degree, &bv).expect("shape checked");
                let p = ea.degree;
                let q = eb.degree;
                let ab = a.compose_basis((x, y, z), ea, eb);
                let lhs = a.differential(x, z, p + q, &ab).expect("shape checked");
                let t1 = a.compose((x, y, z), p - 1, &da, q, &bv);
                let t2 = a.compose((x, y, z), p, &av, q - 1, &db);
                let rhs = combine(lhs.len(), [(F::one(), t1), (sign::<F>(p), t2)]);
                if lhs != rhs {
                    report.violation("leibniz", [a.label(x, y, ea), a.label(y, z, eb)]);
                }
            }
        }
    }
    report
}

/// A dg-functor between finite dg-categories: an object map and, for every
/// pair of source objects, a degree-0 graded map of hom complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgFunctor<F: Field> {
    object_map: Vec<usize>,
    hom_maps: Vec<GradedMap<F>>,
}

impl<F: Field> DgFunctor<F> {
    /// `hom_maps` is indexed by `x * n + y` for source objects `x, y`.
    pub fn new(object_map: Vec<usize>, hom_maps: Vec<GradedMap<F>>) -> Result<Self> {
        let n = object_map.len();
        if hom_maps.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "{} hom maps for {n} objects",
                hom_maps.len()
            )));
        }
        Ok(DgFunctor { object_map, hom_maps })
    }

    /// Builds a functor from per-pair maps.
    pub fn from_fn(
        object_map: Vec<usize>,
        mut hom: impl FnMut(usize, usize) -> Result<GradedMap<F>>,
    ) -> Result<Self> {
        let n = object_map.len();
        let mut hom_maps = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                hom_maps.push(hom(x, y)?);
            }
        }
        Ok(DgFunctor { object_map, hom_maps })
    }

    pub fn identity(a: &DgCategory<F>) -> Self {
        let n = a.num_objects();
        DgFunctor {
            object_map: (0..n).collect(),
            hom_maps: (0..n * n)
                .map(|p| GradedMap::identity(a.homs[p].dims()))
                .collect(),
        }
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn object(&self, x: usize) -> usize {
        self.object_map[x]
    }

    pub fn hom_map(&self, x: usize, y: usize) -> &GradedMap<F> {
        &self.hom_maps[x * self.object_map.len() + y]
    }

    pub fn hom_map_mut(&mut self, x: usize, y: usize) -> &mut GradedMap<F> {
        let n = self.object_map.len();
        &mut self.hom_maps[x * n + y]
    }

    /// `F(a)` for homogeneous `a ∈ hom(x, y)_degree`.
    pub fn apply(&self, x: usize, y: usize, degree: i64, a: &[F]) -> Result<Vec<F>> {
        self.hom_map(x, y).apply(degree, a)
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &DgFunctor<F>) -> Result<DgFunctor<F>> {
        let n = self.object_map.len();
        let mut hom_maps = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (fx, fy) = (self.object(x), self.object(y));
                if fx >= g.object_map.len() || fy >= g.object_map.len() {
                    return Err(Error::UnknownObject(format!("#{fx} / #{fy}")));
                }
                hom_maps.push(g.hom_map(fx, fy).after(self.hom_map(x, y))?);
            }
        }
        Ok(DgFunctor {
            object_map: self.object_map.iter().map(|&o| g.object(o)).collect(),
            hom_maps,
        })
    }

    /// True if every hom map is injective and surjective in every degree.
    pub fn is_hom_bijective(&self) -> bool {
        self.hom_maps.iter().all(|m| {
            m.source() == m.target() && m.source().iter().all(|(d, _)| m.block(d).is_invertible())
        })
    }
}

/// Checks that `f` is a dg-functor `a → b`: shapes, units, differentials and
/// composition on all basis elements and pairs.
pub fn validate_dg_functor<F: Field>(f: &DgFunctor<F>, a: &DgCategory<F>, b: &DgCategory<F>) -> Report {
    let mut report = Report::new();
    let n = a.num_objects();
    if f.object_map.len() != n {
        report.violation("object_map_length", [format!("{} != {n}", f.object_map.len())]);
        return report;
    }
    for (x, &fx) in f.object_map.iter().enumerate() {
        if fx >= b.num_objects() {
            report.violation("object_map_range", [a.objects[x].clone()]);
        }
    }
    if !report.is_ok() {
        return report;
    }
    for x in 0..n {
        for y in 0..n {
            let m = f.hom_map(x, y);
            if m.shift() != 0
                || m.source() != a.hom_dims(x, y)
                || m.target() != b.hom_dims(f.object(x), f.object(y))
            {
                report.violation("hom_map_shape", [format!("{}|{}", a.objects[x], a.objects[y])]);
            }
        }
    }
    if !report.is_ok() {
        return report;
    }

    for x in 0..n {
        let fu = f.apply(x, x, 0, a.unit(x)).expect("shape checked");
        if fu != b.unit(f.object(x)) {
            report.violation("preserves_unit", [a.objects[x].clone()]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            let (fx, fy) = (f.object(x), f.object(y));
            for e in a.hom(x, y).elements() {
                let v = a.basis_vector(x, y, e);
                let lhs = f
                    .apply(x, y, e.degree - 1, &a.differential(x, y, e.degree, &v).expect("shape"))
                    .expect("shape");
                let rhs = b
                    .differential(fx, fy, e.degree, &f.apply(x, y, e.degree, &v).expect("shape"))
                    .expect("shape");
                if lhs != rhs {
                    report.violation("preserves_differential", [a.label(x, y, e)]);
                }
            }
        }
    }
    for (x, y, z) in a.object_triples() {
        let (fx, fy, fz) = (f.object(x), f.object(y), f.object(z));
        for ea in a.hom(x, y).elements() {
            let fa = f.apply(x, y, ea.degree, &a.basis_vector(x, y, ea)).expect("shape");
            for eb in a.hom(y, z).elements() {
                let fb = f.apply(y, z, eb.degree, &a.basis_vector(y, z, eb)).expect("shape");
                let lhs = f
                    .apply(x, z, ea.degree + eb.degree, &a.compose_basis((x, y, z), ea, eb))
                    .expect("shape");
                let rhs = b.compose((fx, fy, fz), ea.degree, &fa, eb.degree, &fb);
                if lhs != rhs {
                    report.violation("preserves_composition", [a.label(x, y, ea), a.label(y, z, eb)]);
                }
            }
        }
    }
    report
}

/// A finite-dimensional associative unital algebra: a one-object dg-category
/// concentrated in degree 0. The product `a · b` is the composite `a ▷ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<F> {
    basis: Vec<String>,
    /// `dim × dim²`; column `i * dim + j` holds `e_i · e_j`.
    structure: Matrix<F>,
    unit: Vec<F>,
}

/// Object name used when an algebra is viewed as a one-object category.
pub const ALGEBRA_OBJECT: &str = "*";

impl<F: Field> Algebra<F> {
    /// Builds an algebra from a product rule on basis indices.
    pub fn from_products<S: Into<String>>(
        basis: impl IntoIterator<Item = S>,
        mut product: impl FnMut(usize, usize) -> Vec<F>,
        unit: Vec<F>,
    ) -> Result<Self> {
        let basis: Vec<String> = basis.into_iter().map(Into::into).collect();
        let n = basis.len();
        if unit.len() != n {
            return Err(Error::DimensionMismatch("unit vector length".into()));
        }
        let mut structure = Matrix::zeros(n, n * n);
        for i in 0..n {
            for j in 0..n {
                let v = product(i, j);
                if v.len() != n {
                    return Err(Error::DimensionMismatch(format!(
                        "product of basis elements {i}, {j} has length {}",
                        v.len()
                    )));
                }
                for (r, c) in v.into_iter().enumerate() {
                    structure[(r, i * n + j)] = c;
                }
            }
        }
        Ok(Algebra { basis, structure, unit })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn basis_index(&self, name: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| Error::UnknownBasis(name.to_string()))
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn product(&self, i: usize, j: usize) -> Vec<F> {
        self.structure.column(i * self.dim() + j)
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut terms = Vec::new();
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                if !ai.is_zero() && !bj.is_zero() {
                    terms.push((ai.clone() * bj.clone(), self.product(i, j)));
                }
            }
        }
        combine(n, terms)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        unit_vector(self.dim(), i)
    }

    pub fn to_category(&self) -> DgCategory<F> {
        let mut c = DgCategory::new([ALGEBRA_OBJECT]);
        c.set_hom_basis(0, 0, HomBasis::from([(0, self.basis.clone())]))
            .expect("fresh category");
        if self.dim() > 0 {
            c.composition.insert(
                CompKey { src: 0, mid: 0, tgt: 0, left: 0, right: 0 },
                self.structure.clone(),
            );
        }
        c.units[0] = self.unit.clone();
        c
    }

    /// Reads a one-object category concentrated in degree 0 as an algebra.
    pub fn from_category(c: &DgCategory<F>) -> Result<Self> {
        if c.num_objects() != 1 {
            return Err(Error::NotAnAlgebra(format!("{} objects", c.num_objects())));
        }
        let hom = c.hom(0, 0);
        if hom.dims().degrees().any(|d| d != 0) {
            return Err(Error::NotAnAlgebra("hom is not concentrated in degree 0".into()));
        }
        let basis = hom.basis.get(&0).cloned().unwrap_or_default();
        let n = basis.len();
        Ok(Algebra {
            basis,
            structure: if n == 0 {
                Matrix::zeros(0, 0)
            } else {
                c.composition_block((0, 0, 0), 0, 0)
            },
            unit: c.unit(0).to_vec(),
        })
    }

    /// Sets a single structure constant: the coefficient of `e_k` in `e_i · e_j`.
    pub fn set_structure_constant(&mut self, i: usize, j: usize, k: usize, value: F) {
        let n = self.dim();
        self.structure[(k, i * n + j)] = value;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, F2};
    type Q = Rational;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    /// k[x]/x² with basis {1, x}.
    fn dual_numbers<K: Field>() -> Algebra<K> {
        Algebra::from_products(
            ["1", "x"],
            |i, j| match (i, j) {
                (0, 0) => vec![K::one(), K::zero()],
                (0, 1) | (1, 0) => vec![K::zero(), K::one()],
                _ => vec![K::zero(), K::zero()],
            },
            vec![K::one(), K::zero()],
        )
        .unwrap()
    }

    /// One object, `1` in degree 0 and `e` in degree 1 with `d e = 1`, `e ▷ e = 0`.
    fn epsilon() -> DgCategory<Q> {
        let mut c = DgCategory::new(["*"]);
        c.set_hom_basis(0, 0, HomBasis::from([(0, vec!["1".into()]), (1, vec!["e".into()])]))
            .unwrap();
        c.set_differential(0, 0, 1, Matrix::from_i64(&[&[1]])).unwrap();
        c.set_unit(0, vec![q(1)]).unwrap();
        let one = BasisIndex { degree: 0, index: 0 };
        let e = BasisIndex { degree: 1, index: 0 };
        c.set_composition((0, 0, 0), one, one, vec![q(1)]).unwrap();
        c.set_composition((0, 0, 0), one, e, vec![q(1)]).unwrap();
        c.set_composition((0, 0, 0), e, one, vec![q(1)]).unwrap();
        c
    }

    #[test]
    fn dual_numbers_are_valid() {
        assert!(validate_dg_category(&dual_numbers::<Q>().to_category()).is_ok());
        assert!(validate_dg_category(&dual_numbers::<F2>().to_category()).is_ok());
    }

    #[test]
    fn epsilon_algebra_is_valid_and_acyclic() {
        let c = epsilon();
        assert_eq!(validate_dg_category(&c), Report::new());
        assert!(c.hom_homology(0, 0).unwrap().is_empty());
    }

    #[test]
    fn leibniz_detects_inconsistent_differential() {
        // basis 1, e, f in degrees 0, 1, 2 with e ▷ e = f and d f = e, d e = 0:
        // d(e ▷ e) = e but d(e) ▷ e − e ▷ d(e) = 0.
        let mut c = DgCategory::<Q>::new(["*"]);
        c.set_hom_basis(
            0,
            0,
            HomBasis::from([(0, vec!["1".into()]), (1, vec!["e".into()]), (2, vec!["f".into()])]),
        )
        .unwrap();
        c.set_differential(0, 0, 2, Matrix::from_i64(&[&[1]])).unwrap();
        c.set_unit(0, vec![q(1)]).unwrap();
        let one = BasisIndex { degree: 0, index: 0 };
        let e = BasisIndex { degree: 1, index: 0 };
        let f = BasisIndex { degree: 2, index: 0 };
        for b in [one, e, f] {
            c.set_composition((0, 0, 0), one, b, vec![q(1)]).unwrap();
            c.set_composition((0, 0, 0), b, one, vec![q(1)]).unwrap();
        }
        c.set_composition((0, 0, 0), e, e, vec![q(1)]).unwrap();
        let r = validate_dg_category(&c);
        // (e, f) and (f, e) fail as well, since e ▷ d(f) = f.
        assert_eq!(r.len(), 3, "{r}");
        assert!(r.violations.iter().all(|v| v.axiom == "leibniz"));
        assert_eq!(r.violations[0].witness, vec!["*|*:e", "*|*:e"]);
    }

    #[test]
    fn corrupted_constant_is_reported_with_witness() {
        // k[x]/x² with 1·x = 0: the left unit law names the element x.
        let mut alg = dual_numbers::<Q>();
        alg.set_structure_constant(0, 1, 1, q(0));
        let r = validate_dg_category(&alg.to_category());
        assert!(r.violations.iter().any(|v| v.axiom == "left_unit"
            && v.witness == vec!["*".to_string(), "*|*:x".to_string()]));
    }

    #[test]
    fn associativity_violation_names_the_triple() {
        // Basis {1, x, y}: x·x = y, everything else involving x, y zero except
        // y·x = x. Then (x·x)·x = y·x = x but x·(x·x) = x·y = 0.
        let alg = Algebra::<Q>::from_products(
            ["1", "x", "y"],
            |i, j| {
                let mut v = vec![q(0); 3];
                match (i, j) {
                    (0, k) | (k, 0) => v[k] = q(1),
                    (1, 1) => v[2] = q(1),
                    (2, 1) => v[1] = q(1),
                    _ => {}
                }
                v
            },
            vec![q(1), q(0), q(0)],
        )
        .unwrap();
        let r = validate_dg_category(&alg.to_category());
        assert!(r.violations.iter().any(|v| v.axiom == "associativity"
            && v.witness == vec!["*|*:x", "*|*:x", "*|*:x"]));
    }

    #[test]
    fn identity_functor_is_valid() {
        let c = epsilon();
        assert!(validate_dg_functor(&DgFunctor::identity(&c), &c, &c).is_ok());
    }

    #[test]
    fn functor_dropping_a_constant_is_rejected() {
        let a = dual_numbers::<Q>().to_category();
        let mut f = DgFunctor::identity(&a);
        // x ↦ 0 keeps units and products but we also drop 1 ↦ 1
        f.hom_map_mut(0, 0)
            .block_mut(0)
            .map(|m| m[(0, 0)] = q(0))
            .unwrap();
        let r = validate_dg_functor(&f, &a, &a);
        assert!(r.violations.iter().any(|v| v.axiom == "preserves_unit"));
        assert!(r.violations.iter().any(|v| v.axiom == "preserves_composition"));
    }

    #[test]
    fn algebra_roundtrips_through_category() {
        let alg = dual_numbers::<Q>();
        assert_eq!(Algebra::from_category(&alg.to_category()).unwrap(), alg);
        assert!(Algebra::from_category(&epsilon()).is_err());
    }

    #[test]
    fn hom_homology_of_algebra_is_its_dimension() {
        let c = dual_numbers::<Q>().to_category();
        assert_eq!(c.hom_homology(0, 0).unwrap(), GradedDims::point(0).add(&GradedDims::point(0)));
    }

    #[test]
    fn basis_permutation_preserves_validity() {
        let c = dual_numbers::<Q>().to_category();
        let p = c.permute_basis(0, 0, 0, &[1, 0]).unwrap();
        assert!(validate_dg_category(&p).is_ok());
        assert_eq!(p.hom(0, 0).label(BasisIndex { degree: 0, index: 0 }), "x");
        assert_eq!(p.unit(0), &[q(0), q(1)]);
    }
}
