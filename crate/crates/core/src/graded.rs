//! Graded vector spaces, graded maps and chain complexes.
//!
//! Grading is homological: differentials lower degree by one.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::field::Field;
use crate::report::Report;

/// Dimensions of a finitely supported graded vector space. Zero entries are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedDims(BTreeMap<i64, usize>);

impl GradedDims {
    pub fn new() -> Self {
        GradedDims::default()
    }

    /// A single copy of the field in degree `d`.
    pub fn point(d: i64) -> Self {
        GradedDims::from_pairs([(d, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let mut g = GradedDims::new();
        for (d, n) in pairs {
            g.set(d, g.get(d) + n);
        }
        g
    }

    pub fn get(&self, d: i64) -> usize {
        self.0.get(&d).copied().unwrap_or(0)
    }

    pub fn set(&mut self, d: i64, n: usize) {
        if n == 0 {
            self.0.remove(&d);
        } else {
            self.0.insert(d, n);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.0.iter().map(|(&d, &n)| (d, n))
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.keys().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(d, n)| if d.rem_euclid(2) == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// `(self[n])_d = self_{d-n}`.
    pub fn shifted(&self, n: i64) -> GradedDims {
        GradedDims(self.0.iter().map(|(&d, &k)| (d + n, k)).collect())
    }

    /// Degreewise sum.
    pub fn add(&self, other: &GradedDims) -> GradedDims {
        let mut out = self.clone();
        for (d, n) in other.iter() {
            out.set(d, out.get(d) + n);
        }
        out
    }

    /// Keeps only degrees in the inclusive window `[lo, hi]`.
    pub fn restrict(&self, lo: i64, hi: i64) -> GradedDims {
        if lo > hi {
            return GradedDims::new();
        }
        GradedDims(self.0.range(lo..=hi).map(|(&d, &n)| (d, n)).collect())
    }
}

/// A homogeneous linear map between graded spaces. The block at source
/// degree `d` maps degree `d` to degree `d + shift`; missing blocks are zero.
#[derive(Clone, Debug)]
pub struct GradedMap<F> {
    source: GradedDims,
    target: GradedDims,
    shift: i64,
    blocks: BTreeMap<i64, Matrix<F>>,
}

impl<F: Field> GradedMap<F> {
    pub fn zero(source: GradedDims, target: GradedDims, shift: i64) -> Self {
        GradedMap {
            source,
            target,
            shift,
            blocks: BTreeMap::new(),
        }
    }

    pub fn identity(dims: &GradedDims) -> Self {
        let blocks = dims.iter().map(|(d, n)| (d, Matrix::identity(n))).collect();
        GradedMap {
            source: dims.clone(),
            target: dims.clone(),
            shift: 0,
            blocks,
        }
    }

    pub fn source(&self) -> &GradedDims {
        &self.source
    }

    pub fn target(&self) -> &GradedDims {
        &self.target
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Expected shape of the block at source degree `d`.
    pub fn block_shape(&self, d: i64) -> (usize, usize) {
        (self.target.get(d + self.shift), self.source.get(d))
    }

    pub fn set_block(&mut self, d: i64, m: Matrix<F>) -> Result<()> {
        let shape = self.block_shape(d);
        if m.shape() != shape {
            return Err(Error::DimensionMismatch(format!(
                "block at degree {d} has shape {:?}, expected {:?}",
                m.shape(),
                shape
            )));
        }
        if m.rows() == 0 || m.cols() == 0 {
            self.blocks.remove(&d);
        } else {
            self.blocks.insert(d, m);
        }
        Ok(())
    }

    pub fn with_block(mut self, d: i64, m: Matrix<F>) -> Result<Self> {
        self.set_block(d, m)?;
        Ok(self)
    }

    /// The block at source degree `d`, zero if unset.
    pub fn block(&self, d: i64) -> Matrix<F> {
        match self.blocks.get(&d) {
            Some(m) => m.clone(),
            None => {
                let (r, c) = self.block_shape(d);
                Matrix::zeros(r, c)
            }
        }
    }

    pub fn stored_block(&self, d: i64) -> Option<&Matrix<F>> {
        self.blocks.get(&d)
    }

    pub fn block_mut(&mut self, d: i64) -> Option<&mut Matrix<F>> {
        self.blocks.get_mut(&d)
    }

    /// Image of a degree-`d` vector, living in degree `d + shift`.
    pub fn apply(&self, d: i64, v: &[F]) -> Result<Vec<F>> {
        match self.blocks.get(&d) {
            Some(m) => m.apply(v),
            None => {
                if v.len() != self.source.get(d) {
                    return Err(Error::DimensionMismatch(format!(
                        "vector of length {} in degree {d} of dimension {}",
                        v.len(),
                        self.source.get(d)
                    )));
                }
                Ok(vec![F::zero(); self.target.get(d + self.shift)])
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(Matrix::is_zero)
    }

    /// `self ∘ g`: apply `g` first.
    pub fn after(&self, g: &GradedMap<F>) -> Result<GradedMap<F>> {
        compose_graded(self, g)
    }
}

impl<F: Field> PartialEq for GradedMap<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.shift != other.shift || self.source != other.source || self.target != other.target
        {
            return false;
        }
        self.source.degrees().all(|d| {
            match (self.blocks.get(&d), other.blocks.get(&d)) {
                (Some(a), Some(b)) => a == b,
                (Some(a), None) | (None, Some(a)) => a.is_zero(),
                (None, None) => true,
            }
        })
    }
}

impl<F: Field> Eq for GradedMap<F> {}

/// `f ∘ g`. The shifts add and blocks multiply degreewise.
pub fn compose_graded<F: Field>(f: &GradedMap<F>, g: &GradedMap<F>) -> Result<GradedMap<F>> {
    if g.target != f.source {
        return Err(Error::DimensionMismatch(
            "target of the inner map differs from source of the outer map".into(),
        ));
    }
    let mut out = GradedMap::zero(g.source.clone(), f.target.clone(), f.shift + g.shift);
    for (&d, gb) in &g.blocks {
        if let Some(fb) = f.blocks.get(&(d + g.shift)) {
            out.set_block(d, fb.mul(gb)?)?;
        }
    }
    Ok(out)
}

/// A finite-dimensional chain complex with differential of degree −1.
#[derive(Clone, Debug)]
pub struct ChainComplex<F> {
    dims: GradedDims,
    differential: GradedMap<F>,
}

impl<F: Field> PartialEq for ChainComplex<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims && self.differential == other.differential
    }
}

impl<F: Field> Eq for ChainComplex<F> {}

impl<F: Field> ChainComplex<F> {
    /// Builds a complex; shapes are checked here, `d² = 0` is left to
    /// [`validate_complex`].
    pub fn new(dims: GradedDims, differential: GradedMap<F>) -> Result<Self> {
        if differential.shift != -1 || differential.source != dims || differential.target != dims
        {
            return Err(Error::DimensionMismatch(
                "differential must be a degree -1 endomorphism of the underlying space".into(),
            ));
        }
        Ok(ChainComplex { dims, differential })
    }

    pub fn with_zero_differential(dims: GradedDims) -> Self {
        let differential = GradedMap::zero(dims.clone(), dims.clone(), -1);
        ChainComplex { dims, differential }
    }

    /// Sets `d: C_degree → C_{degree-1}`.
    pub fn set_differential(&mut self, degree: i64, m: Matrix<F>) -> Result<()> {
        self.differential.set_block(degree, m)
    }

    pub fn with_differential(mut self, degree: i64, m: Matrix<F>) -> Result<Self> {
        self.set_differential(degree, m)?;
        Ok(self)
    }

    pub fn dims(&self) -> &GradedDims {
        &self.dims
    }

    pub fn differential(&self) -> &GradedMap<F> {
        &self.differential
    }

    pub fn differential_mut(&mut self) -> &mut GradedMap<F> {
        &mut self.differential
    }

    /// `d` restricted to `C_degree`.
    pub fn d(&self, degree: i64) -> Matrix<F> {
        self.differential.block(degree)
    }

    pub fn validate(&self) -> Report {
        validate_complex(self)
    }

    pub fn homology(&self) -> Result<GradedDims> {
        homology(self)
    }
}

/// Checks shape coherence and `d ∘ d = 0` in every degree.
pub fn validate_complex<F: Field>(c: &ChainComplex<F>) -> Report {
    let mut report = Report::new();
    let d = &c.differential;
    if d.shift != -1 {
        report.violation("differential_degree", [format!("shift {}", d.shift)]);
    }
    if d.source != c.dims || d.target != c.dims {
        report.violation("differential_shape", ["source/target dims".to_string()]);
    }
    for (&deg, block) in &d.blocks {
        if block.shape() != d.block_shape(deg) {
            report.violation("differential_shape", [format!("degree {deg}")]);
        }
    }
    if !report.is_ok() {
        return report;
    }
    for deg in c.dims.degrees() {
        if let (Some(hi), Some(lo)) = (d.blocks.get(&deg), d.blocks.get(&(deg - 1))) {
            match lo.mul(hi) {
                Ok(m) if m.is_zero() => {}
                _ => report.violation("d_squared", [format!("degree {deg}")]),
            }
        }
    }
    report
}

/// `H_d = dim ker(d_d) − rank(d_{d+1})`.
pub fn homology<F: Field>(c: &ChainComplex<F>) -> Result<GradedDims> {
    let report = validate_complex(c);
    if !report.is_ok() {
        return Err(Error::InvalidComplex(report));
    }
    let rank = |deg: i64| c.differential.blocks.get(&deg).map_or(0, Matrix::rank);
    Ok(GradedDims::from_pairs(
        c.dims.iter().map(|(deg, n)| (deg, n - rank(deg) - rank(deg + 1))),
    ))
}
