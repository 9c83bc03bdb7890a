//! Shared generators for the property and acceptance tests.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewcat::{ChainComplex, Field, GradedDims, Matrix};

/// Unit lower times unit upper triangular: always invertible.
pub fn random_invertible<F: Field>(n: usize, rng: &mut ChaCha8Rng) -> Matrix<F> {
    let l = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => F::one(),
        std::cmp::Ordering::Greater => F::from_i64(rng.gen_range(-2..=2)),
        std::cmp::Ordering::Less => F::zero(),
    });
    let u = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => F::one(),
        std::cmp::Ordering::Less => F::from_i64(rng.gen_range(-2..=2)),
        std::cmp::Ordering::Greater => F::zero(),
    });
    l.mul(&u).unwrap()
}

/// A complex built from `points[d]` copies of `k` in degree `d` and
/// `cones[d]` copies of `k → k` in degrees `d+1 → d`, in a random basis.
/// Returns it with its homology, known by construction.
pub fn random_complex<F: Field>(seed: u64) -> (ChainComplex<F>, GradedDims) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lo = rng.gen_range(-2..=1);
    let hi = lo + rng.gen_range(0..=3);
    let points: Vec<usize> = (lo..=hi).map(|_| rng.gen_range(0..=2)).collect();
    let cones: Vec<usize> = (lo..=hi).map(|_| rng.gen_range(0..=1)).collect();
    let at = |v: &[usize], d: i64| if d < lo || d > hi { 0 } else { v[(d - lo) as usize] };
    // basis of C_d: points, then lower ends of cones at d, then upper ends of cones at d-1
    let dim = |d: i64| at(&points, d) + at(&cones, d) + at(&cones, d - 1);
    let dims = GradedDims::from_pairs((lo..=hi + 1).map(|d| (d, dim(d))));
    let mut c = ChainComplex::with_zero_differential(dims.clone());
    let bases: Vec<Matrix<F>> = (lo - 1..=hi + 1).map(|d| random_invertible(dim(d), &mut rng)).collect();
    let base = |d: i64| &bases[(d - lo + 1) as usize];
    for d in lo..=hi + 1 {
        let mut m = Matrix::<F>::zeros(dim(d - 1), dim(d));
        let lower = at(&points, d - 1);
        let upper = at(&points, d) + at(&cones, d);
        for k in 0..at(&cones, d - 1) {
            m[(lower + k, upper + k)] = F::one();
        }
        let conj = base(d - 1).mul(&m).unwrap().mul(&base(d).inverse().unwrap()).unwrap();
        c.set_differential(d, conj).unwrap();
    }
    let homology = GradedDims::from_pairs((lo..=hi).map(|d| (d, at(&points, d))));
    (c, homology)
}

