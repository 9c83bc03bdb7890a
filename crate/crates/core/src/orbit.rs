//! Bounded complexes over the ground field, their mapping complexes and
//! shifts, and hom spaces in the orbit category of the `n`-fold shift.
//!
//! Conventions: `Hom(K, L)_d = ⊕_i Hom(K_i, L_{i+d})` with
//! `D(f) = d_L ∘ f − (−1)^{|f|} f ∘ d_K`; `(K[n])_i = K_{i−n}` with
//! differential multiplied by `(−1)^n`. Maps are shifted without a sign.

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::field::Field;
use crate::graded::{compose_graded, validate_complex, ChainComplex, GradedDims, GradedMap};

/// A chain complex of finite total dimension whose differential squares to
/// zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedComplex<F: Field>(ChainComplex<F>);

impl<F: Field> BoundedComplex<F> {
    pub fn new(c: ChainComplex<F>) -> Result<Self> {
        let report = validate_complex(&c);
        if report.is_ok() {
            Ok(BoundedComplex(c))
        } else {
            Err(Error::InvalidComplex(report))
        }
    }

    pub fn zero() -> Self {
        BoundedComplex(ChainComplex::with_zero_differential(GradedDims::new()))
    }

    /// The ground field in degree `d`.
    pub fn point(d: i64) -> Self {
        BoundedComplex(ChainComplex::with_zero_differential(GradedDims::point(d)))
    }

    /// `k → k` by the identity, in degrees `d + 1` and `d`. Acyclic.
    pub fn cone_of_identity(d: i64) -> Self {
        let c = ChainComplex::with_zero_differential(GradedDims::from_pairs([(d, 1), (d + 1, 1)]))
            .with_differential(d + 1, Matrix::identity(1))
            .expect("shape");
        BoundedComplex(c)
    }

    pub fn complex(&self) -> &ChainComplex<F> {
        &self.0
    }

    pub fn dims(&self) -> &GradedDims {
        self.0.dims()
    }

    pub fn homology(&self) -> GradedDims {
        self.0.homology().expect("validated on construction")
    }
}

/// `K[n]`.
pub fn shift<F: Field>(k: &BoundedComplex<F>, n: i64) -> BoundedComplex<F> {
    let dims = k.dims().shifted(n);
    let sign = if n.rem_euclid(2) == 0 { F::one() } else { -F::one() };
    let mut c = ChainComplex::with_zero_differential(dims);
    for d in k.dims().degrees() {
        let block = k.complex().d(d);
        if !block.is_zero() {
            c.set_differential(d + n, block.scale(&sign))
                .expect("shifted shape");
        }
    }
    BoundedComplex(c)
}

/// `f[n]: K[n] → L[n]`, same blocks reindexed.
pub fn shift_map<F: Field>(f: &GradedMap<F>, n: i64) -> GradedMap<F> {
    let mut out = GradedMap::zero(f.source().shifted(n), f.target().shifted(n), f.shift());
    for d in f.source().degrees() {
        if let Some(b) = f.stored_block(d) {
            out.set_block(d + n, b.clone()).expect("shifted shape");
        }
    }
    out
}

fn degree_range<F: Field>(k: &BoundedComplex<F>, l: &BoundedComplex<F>) -> Option<(i64, i64)> {
    let (kmin, kmax) = (k.dims().min_degree()?, k.dims().max_degree()?);
    let (lmin, lmax) = (l.dims().min_degree()?, l.dims().max_degree()?);
    Some((lmin - kmax, lmax - kmin))
}

/// Layout of `Hom(K, L)_d`: the blocks `Hom(K_i, L_{i+d})`, each stored
/// row-major, in increasing `i`.
fn hom_blocks<F: Field>(k: &BoundedComplex<F>, l: &BoundedComplex<F>, d: i64) -> Vec<(i64, usize, usize)> {
    k.dims()
        .iter()
        .filter_map(|(i, ki)| {
            let li = l.dims().get(i + d);
            (li > 0).then_some((i, li, ki))
        })
        .collect()
}

fn hom_dim_in_degree<F: Field>(k: &BoundedComplex<F>, l: &BoundedComplex<F>, d: i64) -> usize {
    hom_blocks(k, l, d).iter().map(|(_, r, c)| r * c).sum()
}

/// A degree-`d` graded map `K → L` from its coordinates in `Hom(K, L)_d`.
pub fn map_from_coordinates<F: Field>(
    k: &BoundedComplex<F>,
    l: &BoundedComplex<F>,
    d: i64,
    v: &[F],
) -> Result<GradedMap<F>> {
    if v.len() != hom_dim_in_degree(k, l, d) {
        return Err(Error::DimensionMismatch(format!(
            "{} coordinates for Hom_{d} of dimension {}",
            v.len(),
            hom_dim_in_degree(k, l, d)
        )));
    }
    let mut f = GradedMap::zero(k.dims().clone(), l.dims().clone(), d);
    let mut off = 0;
    for (i, r, c) in hom_blocks(k, l, d) {
        f.set_block(i, Matrix::from_vec(r, c, v[off..off + r * c].to_vec())?)?;
        off += r * c;
    }
    Ok(f)
}

/// Coordinates of a degree-`d` graded map `K → L` in `Hom(K, L)_d`.
pub fn coordinates<F: Field>(k: &BoundedComplex<F>, l: &BoundedComplex<F>, f: &GradedMap<F>) -> Vec<F> {
    hom_blocks(k, l, f.shift())
        .into_iter()
        .flat_map(|(i, _, _)| f.block(i).entries().to_vec())
        .collect()
}

/// `D(f) = d_L ∘ f − (−1)^{|f|} f ∘ d_K`.
pub fn hom_differential<F: Field>(
    k: &BoundedComplex<F>,
    l: &BoundedComplex<F>,
    f: &GradedMap<F>,
) -> Result<GradedMap<F>> {
    let left = compose_graded(l.complex().differential(), f)?;
    let right = compose_graded(f, k.complex().differential())?;
    let sign = if f.shift().rem_euclid(2) == 0 { F::one() } else { -F::one() };
    let mut out = GradedMap::zero(k.dims().clone(), l.dims().clone(), f.shift() - 1);
    for i in k.dims().degrees() {
        let block = left.block(i).sub(&right.block(i).scale(&sign))?;
        out.set_block(i, block)?;
    }
    Ok(out)
}

/// The mapping complex `Hom(K, L)`.
pub fn hom_complex<F: Field>(k: &BoundedComplex<F>, l: &BoundedComplex<F>) -> Result<ChainComplex<F>> {
    let Some((lo, hi)) = degree_range(k, l) else {
        return Ok(ChainComplex::with_zero_differential(GradedDims::new()));
    };
    let dims = GradedDims::from_pairs((lo..=hi).map(|d| (d, hom_dim_in_degree(k, l, d))));
    let mut c = ChainComplex::with_zero_differential(dims.clone());
    for d in dims.degrees() {
        let n = dims.get(d);
        let mut columns = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![F::zero(); n];
            e[j] = F::one();
            let f = map_from_coordinates(k, l, d, &e)?;
            columns.push(coordinates(k, l, &hom_differential(k, l, &f)?));
        }
        let block = Matrix::from_columns(&columns, dims.get(d - 1));
        if !block.is_zero() {
            c.set_differential(d, block)?;
        }
    }
    Ok(c)
}

/// `Σ_i dim H_d(Hom(K, L[n·i]))` for `d` in `[lo, hi]`.
pub fn orbit_hom_dims<F: Field>(
    k: &BoundedComplex<F>,
    l: &BoundedComplex<F>,
    n: i64,
    lo: i64,
    hi: i64,
) -> Result<GradedDims> {
    if n == 0 {
        return Err(Error::ZeroPeriod);
    }
    let mut out = GradedDims::new();
    let Some((dlo, dhi)) = degree_range(k, l) else {
        return Ok(out);
    };
    if lo > hi {
        return Ok(out);
    }
    // Hom(K, L[m]) lives in degrees [dlo + m, dhi + m]; keep the multiples
    // m of n with overlap. The sum over all i ∈ ℤ only sees |n|.
    let step = n.abs();
    let j_lo = (lo - dhi).div_euclid(step) - 1;
    let j_hi = (hi - dlo).div_euclid(step) + 1;
    for j in j_lo..=j_hi {
        let h = hom_complex(k, &shift(l, step * j))?.homology()?;
        out = out.add(&h.restrict(lo, hi));
    }
    Ok(out)
}

/// `dim 1` at every multiple of `n` in `[lo, hi]`.
pub fn laurent_dims(n: i64, lo: i64, hi: i64) -> Result<GradedDims> {
    if n == 0 {
        return Err(Error::ZeroPeriod);
    }
    Ok(GradedDims::from_pairs(
        (lo..=hi).filter(|d| d.rem_euclid(n) == 0).map(|d| (d, 1)),
    ))
}

/// A component `(i, f)` of a morphism in the orbit category, with
/// `f: K → L[n·i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitMorphism<F: Field> {
    pub index: i64,
    pub map: GradedMap<F>,
}

/// `(i, f)` then `(j, g)` is `(i + j, g[n·i] ∘ f)`.
pub fn orbit_compose<F: Field>(
    f: &OrbitMorphism<F>,
    g: &OrbitMorphism<F>,
    n: i64,
) -> Result<OrbitMorphism<F>> {
    let shifted = shift_map(&g.map, n * f.index);
    Ok(OrbitMorphism {
        index: f.index + g.index,
        map: compose_graded(&shifted, &f.map)?,
    })
}

/// `(0, id_K)`.
pub fn orbit_identity<F: Field>(k: &BoundedComplex<F>) -> OrbitMorphism<F> {
    OrbitMorphism {
        index: 0,
        map: GradedMap::identity(k.dims()),
    }
}
