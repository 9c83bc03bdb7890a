#![allow(clippy::needless_range_loop)]

mod common;

use common::random_complex;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skewcat::dgcat::validate_dg_category;
use skewcat::orbit::{hom_complex, orbit_hom_dims, shift, BoundedComplex};
use skewcat::{
    corpus, Algebra, BasisIndex, DgCategory, DgFunctor, Field, FiniteMonoid, GradedMap,
    Matrix, Rational, StrictAction, F2, F3, F5,
};

type Q = Rational;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 1000,
        ..ProptestConfig::default()
    }
}

fn matrix<F: Field>(rows: usize, cols: usize, entries: &[i64]) -> Matrix<F> {
    Matrix::from_fn(rows, cols, |i, j| F::from_i64(entries[i * cols + j]))
}

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (0usize..6, 0usize..6).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c)))
}

fn check_rank_nullity<F: Field>(m: &Matrix<F>) {
    let k = m.kernel_basis();
    assert_eq!(m.rank() + k.cols(), m.cols());
    assert!(m.mul(&k).unwrap().is_zero());
    assert_eq!(k.rank(), k.cols());
    assert_eq!(m.rank(), m.transpose().rank());
}

fn check_rref<F: Field>(m: &Matrix<F>) {
    let (r, pivots) = m.rref();
    let (rr, pivots2) = r.rref();
    assert_eq!(r, rr);
    assert_eq!(pivots, pivots2);
    assert_eq!(pivots.len(), m.rank());
    for (i, &p) in pivots.iter().enumerate() {
        assert!(r[(i, p)].is_one());
        for k in 0..r.rows() {
            if k != i {
                assert!(r[(k, p)].is_zero());
            }
        }
    }
}

fn check_solve<F: Field>(a: &Matrix<F>, x: &[i64]) {
    let x = matrix::<F>(a.cols(), 1, x);
    let b = a.mul(&x).unwrap();
    let y = a.solve(&b).unwrap().expect("consistent system");
    assert_eq!(a.mul(&y).unwrap(), b);
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn rank_nullity((r, c, e) in small_matrix()) {
        check_rank_nullity(&matrix::<Q>(r, c, &e));
        check_rank_nullity(&matrix::<F2>(r, c, &e));
        check_rank_nullity(&matrix::<F5>(r, c, &e));
    }

    #[test]
    fn rref_is_idempotent((r, c, e) in small_matrix()) {
        check_rref(&matrix::<Q>(r, c, &e));
        check_rref(&matrix::<F3>(r, c, &e));
    }

    #[test]
    fn solve_is_exact(((r, c, e), x) in small_matrix().prop_flat_map(|(r, c, e)| {
        (Just((r, c, e)), prop::collection::vec(-5i64..=5, c))
    })) {
        check_solve(&matrix::<Q>(r, c, &e), &x);
        check_solve(&matrix::<F2>(r, c, &e), &x);
        check_solve(&matrix::<F5>(r, c, &e), &x);
    }
}

fn check_complex<F: Field>(seed: u64) {
    let (c, h) = random_complex::<F>(seed);
    assert!(c.validate().is_ok());
    let got = c.homology().unwrap();
    assert_eq!(got, h);
    assert_eq!(c.dims().euler_characteristic(), got.euler_characteristic());
}

fn check_hom_and_shift<F: Field>(s1: u64, s2: u64, n: i64) {
    let k = BoundedComplex::new(random_complex::<F>(s1).0).unwrap();
    let l = BoundedComplex::new(random_complex::<F>(s2).0).unwrap();
    let h = hom_complex(&k, &l).unwrap();
    assert!(h.validate().is_ok());
    assert_eq!(h.dims().euler_characteristic(), h.homology().unwrap().euler_characteristic());
    let ks = shift(&k, n);
    assert!(ks.complex().validate().is_ok());
    assert_eq!(ks.homology(), k.homology().shifted(n));
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn homology_and_euler_characteristic(seed in any::<u64>()) {
        check_complex::<Q>(seed);
        check_complex::<F2>(seed);
        check_complex::<F3>(seed);
    }

    #[test]
    fn differential_squares_to_zero(s1 in any::<u64>(), s2 in any::<u64>(), n in -3i64..=3) {
        check_hom_and_shift::<Q>(s1, s2, n);
        check_hom_and_shift::<F2>(s1, s2, n);
    }

    #[test]
    fn orbit_dims_are_shift_invariant(s1 in any::<u64>(), s2 in any::<u64>(), n in prop_oneof![-3i64..=-1, 1i64..=3]) {
        let k = BoundedComplex::new(random_complex::<F3>(s1).0).unwrap();
        let l = BoundedComplex::new(random_complex::<F3>(s2).0).unwrap();
        let base = orbit_hom_dims(&k, &l, n, -6, 6).unwrap();
        prop_assert_eq!(&orbit_hom_dims(&shift(&k, n), &l, n, -6, 6).unwrap(), &base);
        prop_assert_eq!(&orbit_hom_dims(&k, &shift(&l, -n), n, -6, 6).unwrap(), &base);
    }
}

/// Brute-force oracle: unital and associative on basis elements.
fn table_is_algebra(n: usize, table: &[i64], unit: &[i64], p: i64) -> bool {
    let md = |x: i64| x.rem_euclid(p);
    let prod = |a: &[i64], b: &[i64]| -> Vec<i64> {
        let mut out = vec![0; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out[k] = md(out[k] + a[i] * b[j] * table[(i * n + j) * n + k]);
                }
            }
        }
        out
    };
    let e = |i: usize| (0..n).map(|k| i64::from(k == i)).collect::<Vec<_>>();
    let unit: Vec<i64> = unit.iter().map(|&u| md(u)).collect();
    for i in 0..n {
        if prod(&unit, &e(i)) != e(i) || prod(&e(i), &unit) != e(i) {
            return false;
        }
        for j in 0..n {
            for k in 0..n {
                if prod(&prod(&e(i), &e(j)), &e(k)) != prod(&e(i), &prod(&e(j), &e(k))) {
                    return false;
                }
            }
        }
    }
    true
}

fn algebra_from_table<F: Field>(n: usize, table: &[i64], unit: &[i64]) -> Algebra<F> {
    Algebra::from_products(
        (0..n).map(|i| format!("b{i}")),
        |i, j| (0..n).map(|k| F::from_i64(table[(i * n + j) * n + k])).collect(),
        unit.iter().map(|&u| F::from_i64(u)).collect(),
    )
    .unwrap()
}

/// Tables biased towards valid algebras: a random change of basis of
/// `k^n` with componentwise product, optionally with one entry perturbed.
fn algebra_table() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>)> {
    (1usize..=3)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(0i64..2, n * n * n),
                prop::collection::vec(0i64..2, n),
                any::<bool>(),
                0..n * n * n,
            )
        })
        .prop_map(|(n, noise, unit_noise, perturb, pos)| {
            // componentwise product on e_i, unit (1,…,1)
            let mut table = vec![0; n * n * n];
            for i in 0..n {
                table[(i * n + i) * n + i] = 1;
            }
            let mut unit = vec![1; n];
            if perturb {
                table[pos] = (table[pos] + 1 + noise[pos]) % 2;
                if noise.iter().sum::<i64>() % 3 == 0 {
                    unit[0] = unit_noise[0];
                }
            }
            (n, table, unit)
        })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn algebra_validator_matches_table_oracle((n, table, unit) in algebra_table(), raw in prop::collection::vec(0i64..2, 27)) {
        let a = algebra_from_table::<F2>(n, &table, &unit);
        prop_assert_eq!(a.to_category().validate().is_ok(), table_is_algebra(n, &table, &unit, 2));
        let raw = &raw[..n * n * n];
        let b = algebra_from_table::<F2>(n, raw, &unit);
        prop_assert_eq!(b.to_category().validate().is_ok(), table_is_algebra(n, raw, &unit, 2));
    }

    #[test]
    fn validity_is_stable_under_basis_permutation(which in 0usize..4, perm_seed in any::<u64>()) {
        let c: DgCategory<Q> = match which {
            0 => corpus::epsilon_dg_algebra(),
            1 => corpus::two_object_category(),
            2 => corpus::three_cycle_category(),
            _ => corpus::split_pair().to_category(),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(perm_seed);
        let n = c.num_objects();
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let degrees: Vec<i64> = c.hom_dims(x, y).degrees().collect();
        prop_assume!(!degrees.is_empty());
        let d = degrees[rng.gen_range(0..degrees.len())];
        let mut perm: Vec<usize> = (0..c.dim(x, y, d)).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let p = c.permute_basis(x, y, d, &perm).unwrap();
        prop_assert!(validate_dg_category(&p).is_ok());
        prop_assert_eq!(p.hom_homology(x, y).unwrap(), c.hom_homology(x, y).unwrap());
    }
}

/// The discrete category on `m` objects with `ℤ/n` acting through a
/// permutation whose cycle lengths divide `n`.
fn permutation_action(n: usize, cycles: &[usize]) -> StrictAction<F3> {
    let m: usize = cycles.iter().sum();
    let mut c = DgCategory::<F3>::new((0..m).map(|i| format!("X{i}")));
    let one = BasisIndex { degree: 0, index: 0 };
    for x in 0..m {
        c.set_hom_basis(x, x, [(0, vec![format!("1X{x}")])].into_iter().collect()).unwrap();
        c.set_unit(x, vec![F3::new(1)]).unwrap();
        c.set_composition((x, x, x), one, one, vec![F3::new(1)]).unwrap();
    }
    let mut sigma = vec![0; m];
    let mut start = 0;
    for &len in cycles {
        for i in 0..len {
            sigma[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    let functors = (0..n)
        .map(|k| {
            let mut map: Vec<usize> = (0..m).collect();
            for _ in 0..k {
                map = map.iter().map(|&x| sigma[x]).collect();
            }
            let a = &c;
            DgFunctor::from_fn(map.clone(), |x, y| {
                let src = a.hom_dims(x, y).clone();
                let tgt = a.hom_dims(map[x], map[y]).clone();
                Ok(if src.is_empty() {
                    GradedMap::zero(src, tgt, 0)
                } else {
                    GradedMap::identity(&src)
                })
            })
            .unwrap()
        })
        .collect();
    StrictAction::new(FiniteMonoid::cyclic(n, "g"), c, functors).unwrap()
}

fn action_strategy() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1usize..=4).prop_flat_map(|n| {
        let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        (Just(n), prop::collection::vec(prop::sample::select(divisors), 0..4))
    })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn orbits_partition_the_objects((n, cycles) in action_strategy()) {
        let rho = permutation_action(n, &cycles);
        prop_assert!(rho.validate().is_ok());
        let o = rho.orbits().unwrap();
        let m = rho.category().num_objects();
        let mut seen = vec![false; m];
        for (i, block) in o.blocks.iter().enumerate() {
            prop_assert!(block.contains(&o.representatives[i]));
            for &x in block {
                prop_assert!(!seen[x]);
                seen[x] = true;
                prop_assert_eq!(o.orbit_of[x], i);
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
        let mut lens: Vec<usize> = o.blocks.iter().map(Vec::len).collect();
        let mut expected = cycles.clone();
        lens.sort_unstable();
        expected.sort_unstable();
        prop_assert_eq!(lens, expected);
        prop_assert_eq!(rho.freeness().unwrap().free, cycles.iter().all(|&l| l == n));
    }

    #[test]
    fn inverse_elements_act_by_inverse_functors((n, cycles) in action_strategy()) {
        let rho = permutation_action(n, &cycles);
        let id = DgFunctor::identity(rho.category());
        let inv = rho.monoid().inverses().unwrap().to_vec();
        for g in 0..n {
            prop_assert_eq!(&rho.functor(g).then(rho.functor(inv[g])).unwrap(), &id);
            prop_assert_eq!(&rho.functor(inv[g]).then(rho.functor(g)).unwrap(), &id);
        }
    }
}
