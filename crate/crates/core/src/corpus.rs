//! Small named categories, algebras and actions used as fixtures by the
//! tests, the acceptance suite and the `fixtures` CLI command.
//!
//! Every builder is generic over the field; signs like `x ↦ −x` degenerate
//! to the trivial action in characteristic 2.

use crate::dgcat::{Algebra, BasisIndex, DgCategory, DgFunctor, HomBasis};
use crate::exactlin::Matrix;
use crate::equivmod::module_corpus;
use crate::field::{Field, Rational, F2, F3};
use crate::json;
use crate::orbit::BoundedComplex;
use crate::graded::GradedMap;
use crate::groupact::{FiniteMonoid, StrictAction};

fn v<F: Field>(xs: &[i64]) -> Vec<F> {
    xs.iter().map(|&x| F::from_i64(x)).collect()
}

fn b(degree: i64, index: usize) -> BasisIndex {
    BasisIndex { degree, index }
}

/// The ground field as a one-dimensional algebra, basis `{1}`.
pub fn field_algebra<F: Field>() -> Algebra<F> {
    Algebra::from_products(["1"], |_, _| v(&[1]), v(&[1])).expect("well-formed")
}

/// `k ⊕ k` with idempotent basis `p = (1,0)`, `q = (0,1)`.
pub fn split_pair<F: Field>() -> Algebra<F> {
    Algebra::from_products(
        ["p", "q"],
        |i, j| match (i, j) {
            (0, 0) => v(&[1, 0]),
            (1, 1) => v(&[0, 1]),
            _ => v(&[0, 0]),
        },
        v(&[1, 1]),
    )
    .expect("well-formed")
}

/// `k[x]/x²`, basis `{1, x}`.
pub fn dual_numbers<F: Field>() -> Algebra<F> {
    Algebra::from_products(
        ["1", "x"],
        |i, j| match (i, j) {
            (0, 0) => v(&[1, 0]),
            (0, 1) | (1, 0) => v(&[0, 1]),
            _ => v(&[0, 0]),
        },
        v(&[1, 0]),
    )
    .expect("well-formed")
}

/// The group algebra of `ℤ/3`, basis `{1, c, c2}`.
pub fn cyclic3_algebra<F: Field>() -> Algebra<F> {
    Algebra::from_products(
        ["1", "c", "c2"],
        |i, j| crate::exactlin::unit_vector(3, (i + j) % 3),
        v(&[1, 0, 0]),
    )
    .expect("well-formed")
}

/// One object with basis `1` in degree 0 and `eps` in degree 1,
/// `d(eps) = 1`, `eps ▷ eps = 0`. Acyclic.
pub fn epsilon_dg_algebra<F: Field>() -> DgCategory<F> {
    let mut c = DgCategory::new(["*"]);
    c.set_hom_basis(
        0,
        0,
        HomBasis::from([(0, vec!["1".into()]), (1, vec!["eps".into()])]),
    )
    .expect("fresh");
    c.set_differential(0, 0, 1, Matrix::from_i64(&[&[1]])).expect("shape");
    c.set_unit(0, v(&[1])).expect("shape");
    let one = b(0, 0);
    let eps = b(1, 0);
    c.set_composition((0, 0, 0), one, one, v(&[1])).expect("shape");
    c.set_composition((0, 0, 0), one, eps, v(&[1])).expect("shape");
    c.set_composition((0, 0, 0), eps, one, v(&[1])).expect("shape");
    c
}

/// An action of a monoid on a one-object category by the given matrices on
/// `hom(*, *)`, one matrix per degree and element.
pub fn one_object_action<F: Field>(
    monoid: FiniteMonoid,
    category: DgCategory<F>,
    matrices: impl Fn(usize, i64) -> Matrix<F>,
) -> StrictAction<F> {
    let dims = category.hom_dims(0, 0).clone();
    let functors = (0..monoid.len())
        .map(|g| {
            let mut map = GradedMap::zero(dims.clone(), dims.clone(), 0);
            for d in dims.degrees() {
                map.set_block(d, matrices(g, d)).expect("square block");
            }
            DgFunctor::new(vec![0], vec![map]).expect("one object")
        })
        .collect();
    StrictAction::new(monoid, category, functors).expect("one functor per element")
}

/// `ℤ/2` acting on an algebra by the involution `m`.
pub fn involution<F: Field>(alg: &Algebra<F>, m: Matrix<F>) -> StrictAction<F> {
    let n = alg.dim();
    one_object_action(FiniteMonoid::cyclic(2, "s"), alg.to_category(), |g, _| {
        if g == 0 {
            Matrix::identity(n)
        } else {
            m.clone()
        }
    })
}

pub fn trivial_on_field<F: Field>(group: FiniteMonoid) -> StrictAction<F> {
    StrictAction::trivial(group, field_algebra().to_category())
}

/// `σ` swaps the two factors of `k ⊕ k`.
pub fn swap_on_split_pair<F: Field>() -> StrictAction<F> {
    involution(&split_pair(), Matrix::from_i64(&[&[0, 1], &[1, 0]]))
}

/// `σ.x = −x` on `k[x]/x²`.
pub fn sign_on_dual_numbers<F: Field>() -> StrictAction<F> {
    involution(&dual_numbers(), Matrix::from_i64(&[&[1, 0], &[0, -1]]))
}

/// `σ.c = c2` on `kℤ/3`.
pub fn inversion_on_cyclic3<F: Field>() -> StrictAction<F> {
    involution(
        &cyclic3_algebra(),
        Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]),
    )
}

pub fn trivial_on_epsilon<F: Field>() -> StrictAction<F> {
    StrictAction::trivial(FiniteMonoid::cyclic(2, "s"), epsilon_dg_algebra())
}

/// Objects `X, Y`; `f: X → Y`, `f': Y → X` in degree 0 and `h: X → Y`,
/// `h': Y → X` in degree 1 with `dh = f`, `dh' = f'`. All composites of
/// non-identity morphisms vanish.
pub fn two_object_category<F: Field>() -> DgCategory<F> {
    let mut c = DgCategory::new(["X", "Y"]);
    for x in 0..2 {
        c.set_hom_basis(x, x, HomBasis::from([(0, vec![format!("1{}", ["X", "Y"][x])])]))
            .expect("fresh");
        c.set_unit(x, v(&[1])).expect("shape");
    }
    c.set_hom_basis(0, 1, HomBasis::from([(0, vec!["f".into()]), (1, vec!["h".into()])]))
        .expect("fresh");
    c.set_hom_basis(1, 0, HomBasis::from([(0, vec!["f'".into()]), (1, vec!["h'".into()])]))
        .expect("fresh");
    c.set_differential(0, 1, 1, Matrix::from_i64(&[&[1]])).expect("shape");
    c.set_differential(1, 0, 1, Matrix::from_i64(&[&[1]])).expect("shape");
    unit_compositions(&mut c);
    c
}

/// Sets `1 ▷ a = a = a ▷ 1` for every basis element, where the identity of
/// each object is its first degree-0 endomorphism.
fn unit_compositions<F: Field>(c: &mut DgCategory<F>) {
    let n = c.num_objects();
    for x in 0..n {
        for y in 0..n {
            let elements: Vec<BasisIndex> = c.hom(x, y).elements().collect();
            for a in elements {
                let av = c.basis_vector(x, y, a);
                c.set_composition((x, x, y), b(0, 0), a, av.clone()).expect("shape");
                c.set_composition((x, y, y), a, b(0, 0), av).expect("shape");
            }
        }
    }
}

/// `ℤ/2` swapping `X ↔ Y`, `f ↔ f'`, `h ↔ h'`. Free on objects.
pub fn swap_two_objects<F: Field>() -> StrictAction<F> {
    let c = two_object_category::<F>();
    let z2 = FiniteMonoid::cyclic(2, "s");
    let swap = DgFunctor::from_fn(vec![1, 0], |x, y| Ok(GradedMap::identity(c.hom_dims(x, y))))
        .expect("well-formed");
    let functors = vec![DgFunctor::identity(&c), swap];
    StrictAction::new(z2, c, functors).expect("two elements")
}

/// Objects `X0, X1, X2` with `f_i: X_i → X_{i+1}` (indices mod 3) in
/// degree 0 and all composites of the `f_i` zero.
pub fn three_cycle_category<F: Field>() -> DgCategory<F> {
    let mut c = DgCategory::new(["X0", "X1", "X2"]);
    for i in 0..3 {
        c.set_hom_basis(i, i, HomBasis::from([(0, vec![format!("1X{i}")])]))
            .expect("fresh");
        c.set_unit(i, v(&[1])).expect("shape");
        c.set_hom_basis(i, (i + 1) % 3, HomBasis::from([(0, vec![format!("f{i}")])]))
            .expect("fresh");
    }
    unit_compositions(&mut c);
    c
}

/// `ℤ/3` with generator `g: X_i ↦ X_{i+1}`, `f_i ↦ f_{i+1}`.
pub fn cycle_three_objects<F: Field>() -> StrictAction<F> {
    let c = three_cycle_category::<F>();
    let z3 = FiniteMonoid::cyclic(3, "g");
    let functors = (0..3)
        .map(|k| {
            DgFunctor::from_fn((0..3).map(|i| (i + k) % 3).collect(), |x, y| {
                Ok(GradedMap::identity(c.hom_dims(x, y)))
            })
            .expect("well-formed")
        })
        .collect();
    StrictAction::new(z3, c, functors).expect("three elements")
}

/// Objects `X, Y` and one morphism `u: X → Y` in degree 0.
pub fn interval_category<F: Field>() -> DgCategory<F> {
    let mut c = DgCategory::new(["X", "Y"]);
    for x in 0..2 {
        c.set_hom_basis(x, x, HomBasis::from([(0, vec![format!("1{}", ["X", "Y"][x])])]))
            .expect("fresh");
        c.set_unit(x, v(&[1])).expect("shape");
    }
    c.set_hom_basis(0, 1, HomBasis::from([(0, vec!["u".into()])])).expect("fresh");
    unit_compositions(&mut c);
    c
}

/// `ℤ/2` fixing both objects and sending `u ↦ −u`. Not free.
pub fn sign_on_interval<F: Field>() -> StrictAction<F> {
    let c = interval_category::<F>();
    let z2 = FiniteMonoid::cyclic(2, "s");
    let sign = DgFunctor::from_fn(vec![0, 1], |x, y| {
        let id = GradedMap::identity(c.hom_dims(x, y));
        if (x, y) == (0, 1) {
            id.with_block(0, Matrix::from_i64(&[&[-1]]))
        } else {
            Ok(id)
        }
    })
    .expect("well-formed");
    let functors = vec![DgFunctor::identity(&c), sign];
    StrictAction::new(z2, c, functors).expect("two elements")
}

/// The monoid `{e, t, t2}` on the interval: `t` and `t2` both collapse it
/// onto `X`, sending `u` to the identity of `X`.
pub fn collapse_monoid_on_interval<F: Field>() -> StrictAction<F> {
    let c = interval_category::<F>();
    let m = FiniteMonoid::truncated_naturals();
    let collapse = DgFunctor::from_fn(vec![0, 0], |x, y| {
        let mut map = GradedMap::zero(c.hom_dims(x, y).clone(), c.hom_dims(0, 0).clone(), 0);
        if x == 0 || y == 1 {
            map.set_block(0, Matrix::from_i64(&[&[1]]))?;
        }
        Ok(map)
    })
    .expect("well-formed");
    let functors = vec![DgFunctor::identity(&c), collapse.clone(), collapse];
    StrictAction::new(m, c, functors).expect("three elements")
}

/// Every named action of the corpus.
pub fn actions<F: Field>() -> Vec<(&'static str, StrictAction<F>)> {
    vec![
        ("trivial-z2-on-k", trivial_on_field(FiniteMonoid::cyclic(2, "s"))),
        ("trivial-z3-on-k", trivial_on_field(FiniteMonoid::cyclic(3, "g"))),
        ("trivial-s3-on-k", trivial_on_field(FiniteMonoid::symmetric3())),
        ("swap-on-split-pair", swap_on_split_pair()),
        ("sign-on-dual-numbers", sign_on_dual_numbers()),
        ("inversion-on-cyclic3", inversion_on_cyclic3()),
        ("trivial-z2-on-epsilon", trivial_on_epsilon()),
        ("swap-two-objects", swap_two_objects()),
        ("cycle-three-objects", cycle_three_objects()),
        ("sign-on-interval", sign_on_interval()),
        ("collapse-monoid-on-interval", collapse_monoid_on_interval()),
    ]
}

/// The four `ℤ/2`-actions on ordinary algebras used for module checks.
pub fn algebra_actions<F: Field>() -> Vec<(&'static str, StrictAction<F>)> {
    vec![
        ("trivial-z2-on-k", trivial_on_field(FiniteMonoid::cyclic(2, "s"))),
        ("swap-on-split-pair", swap_on_split_pair()),
        ("sign-on-dual-numbers", sign_on_dual_numbers()),
        ("inversion-on-cyclic3", inversion_on_cyclic3()),
    ]
}

/// Every fixture document keyed by its path relative to the fixtures
/// directory. Deterministic: regenerating gives byte-identical files.
pub fn fixture_documents() -> Vec<(String, serde_json::Value)> {
    fn per_field<F: Field>(tag: &str, out: &mut Vec<(String, serde_json::Value)>) {
        for (name, rho) in actions::<F>() {
            out.push((format!("actions/{tag}/{name}.json"), json::encode_action(&rho)));
        }
        for (name, rho) in algebra_actions::<F>() {
            for (m, e) in module_corpus(&rho).expect("corpus actions are group actions") {
                out.push((format!("modules/{tag}/{name}/{m}.json"), json::encode_equivariant(&e, &rho)));
            }
        }
        let complexes = [
            ("zero", BoundedComplex::<F>::zero()),
            ("point-0", BoundedComplex::point(0)),
            ("point-1", BoundedComplex::point(1)),
            ("cone-0", BoundedComplex::cone_of_identity(0)),
        ];
        for (name, c) in complexes {
            out.push((format!("complexes/{tag}/{name}.json"), json::encode_complex(c.complex())));
        }
        let categories = [
            ("epsilon", epsilon_dg_algebra::<F>()),
            ("two-object", two_object_category()),
            ("three-cycle", three_cycle_category()),
            ("interval", interval_category()),
        ];
        for (name, c) in categories {
            out.push((format!("categories/{tag}/{name}.json"), json::encode_dgcat(&c)));
        }
    }
    let mut out = Vec::new();
    per_field::<Rational>("q", &mut out);
    per_field::<F2>("f2", &mut out);
    per_field::<F3>("f3", &mut out);
    out
}
