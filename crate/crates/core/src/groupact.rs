//! Finite monoids and groups given by multiplication tables, and strict
//! actions of them on finite dg-categories.
//!
//! Actions are left actions: `ρ(g) ∘ ρ(h) = ρ(gh)`, i.e. applying `h` first
//! and then `g` agrees with applying `gh`.

use std::collections::VecDeque;

use crate::dgcat::{validate_dg_category, validate_dg_functor, DgCategory, DgFunctor};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::report::Report;

/// A finite monoid. When `inverses` is present it is a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Option<Vec<usize>>,
}

impl FiniteMonoid {
    /// Checks shapes and index ranges only; the axioms are checked by
    /// [`validate_monoid`].
    pub fn new<S: Into<String>>(
        elements: impl IntoIterator<Item = S>,
        table: Vec<Vec<usize>>,
        identity: usize,
        inverses: Option<Vec<usize>>,
    ) -> Result<Self> {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let n = elements.len();
        if n == 0 {
            return Err(Error::Schema("a monoid needs at least one element".into()));
        }
        let in_range = |v: &usize| *v < n;
        if table.len() != n || table.iter().any(|r| r.len() != n || !r.iter().all(in_range)) {
            return Err(Error::Schema(format!("multiplication table must be {n}x{n} with entries < {n}")));
        }
        if identity >= n {
            return Err(Error::Schema("identity out of range".into()));
        }
        if let Some(inv) = &inverses {
            if inv.len() != n || !inv.iter().all(in_range) {
                return Err(Error::Schema("inverse list has wrong length or range".into()));
            }
        }
        Ok(FiniteMonoid {
            elements,
            table,
            identity,
            inverses,
        })
    }

    /// The cyclic group of order `n`, elements `e, g, g2, …` for generator name `g`.
    pub fn cyclic(n: usize, generator: &str) -> Self {
        assert!(n > 0);
        let names = (0..n).map(|k| match k {
            0 => "e".to_string(),
            1 => generator.to_string(),
            k => format!("{generator}{k}"),
        });
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let inverses = (0..n).map(|a| (n - a) % n).collect();
        FiniteMonoid::new(names, table, 0, Some(inverses)).expect("well-formed")
    }

    /// The symmetric group on three letters; `g·h` is `g ∘ h` (apply `h` first).
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let table = (0..6)
            .map(|g| {
                (0..6)
                    .map(|h| index([0, 1, 2].map(|i| perms[g][perms[h][i]])))
                    .collect()
            })
            .collect();
        FiniteMonoid::new(names, table, 0, None)
            .expect("well-formed")
            .with_computed_inverses()
            .expect("S3 is a group")
    }

    /// `{e, t, t2}` with `t·t = t2` and `t2` absorbing: a monoid without inverses.
    pub fn truncated_naturals() -> Self {
        let table = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]];
        FiniteMonoid::new(["e", "t", "t2"], table, 0, None).expect("well-formed")
    }

    /// Fills in inverses from the table; fails if some element has none.
    pub fn with_computed_inverses(mut self) -> Result<Self> {
        let n = self.len();
        let mut inv = Vec::with_capacity(n);
        for g in 0..n {
            let h = (0..n)
                .find(|&h| self.table[g][h] == self.identity && self.table[h][g] == self.identity)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", self.elements[g])))?;
            inv.push(h);
        }
        self.inverses = Some(inv);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, g: usize) -> &str {
        &self.elements[g]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::Schema(format!("unknown monoid element {name:?}")))
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inverses(&self) -> Option<&[usize]> {
        self.inverses.as_deref()
    }

    pub fn inverse(&self, g: usize) -> Option<usize> {
        self.inverses.as_ref().map(|inv| inv[g])
    }

    pub fn is_group(&self) -> bool {
        self.inverses.is_some()
    }

    pub fn require_group(&self) -> Result<&[usize]> {
        self.inverses
            .as_deref()
            .ok_or_else(|| Error::NotAGroup("monoid has no inverses".into()))
    }

    /// Overwrites one cell of the table.
    pub fn set_product(&mut self, g: usize, h: usize, value: usize) {
        self.table[g][h] = value;
    }
}

/// Associativity, identity and (if present) inverse laws over the full table.
pub fn validate_monoid(m: &FiniteMonoid) -> Report {
    let mut report = Report::new();
    let n = m.len();
    let e = m.identity;
    for g in 0..n {
        if m.mul(e, g) != g || m.mul(g, e) != g {
            report.violation("identity", [m.name(g)]);
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)) {
                    report.violation("associativity", [m.name(a), m.name(b), m.name(c)]);
                }
            }
        }
    }
    if let Some(inv) = &m.inverses {
        for g in 0..n {
            if m.mul(g, inv[g]) != e || m.mul(inv[g], g) != e {
                report.violation("inverse", [m.name(g), m.name(inv[g])]);
            }
        }
    }
    report
}

/// A strict action of a finite monoid on a finite dg-category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictAction<F: Field> {
    monoid: FiniteMonoid,
    category: DgCategory<F>,
    functors: Vec<DgFunctor<F>>,
}

/// Outcome of [`StrictAction::freeness`]: `witness` names a non-identity
/// element fixing an object when the action is not free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Freeness {
    pub free: bool,
    pub witness: Option<(String, String)>,
}

/// Partition of the objects into orbits, each with a representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbits {
    pub blocks: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    /// Orbit number of every object.
    pub orbit_of: Vec<usize>,
}

impl Orbits {
    /// Replaces the default representatives. `reps` must hit every orbit once.
    pub fn with_representatives(mut self, reps: &[usize]) -> Result<Self> {
        if reps.len() != self.blocks.len() {
            return Err(Error::Representatives(format!(
                "{} representatives for {} orbits",
                reps.len(),
                self.blocks.len()
            )));
        }
        let mut chosen = vec![None; self.blocks.len()];
        for &r in reps {
            let o = *self
                .orbit_of
                .get(r)
                .ok_or_else(|| Error::Representatives(format!("object #{r} does not exist")))?;
            if chosen[o].replace(r).is_some() {
                return Err(Error::Representatives(format!("two representatives in orbit {o}")));
            }
        }
        self.representatives = chosen.into_iter().map(|c| c.expect("all orbits hit")).collect();
        Ok(self)
    }
}

impl<F: Field> StrictAction<F> {
    /// `functors[g]` is `ρ(g)`. Axioms are checked by [`validate_action`].
    pub fn new(monoid: FiniteMonoid, category: DgCategory<F>, functors: Vec<DgFunctor<F>>) -> Result<Self> {
        if functors.len() != monoid.len() {
            return Err(Error::Schema(format!(
                "{} functors for a monoid of order {}",
                functors.len(),
                monoid.len()
            )));
        }
        Ok(StrictAction {
            monoid,
            category,
            functors,
        })
    }

    /// Every element acts as the identity functor.
    pub fn trivial(monoid: FiniteMonoid, category: DgCategory<F>) -> Self {
        let id = DgFunctor::identity(&category);
        let functors = vec![id; monoid.len()];
        StrictAction {
            monoid,
            category,
            functors,
        }
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn category(&self) -> &DgCategory<F> {
        &self.category
    }

    pub fn functor(&self, g: usize) -> &DgFunctor<F> {
        &self.functors[g]
    }

    pub fn functor_mut(&mut self, g: usize) -> &mut DgFunctor<F> {
        &mut self.functors[g]
    }

    pub fn functors(&self) -> &[DgFunctor<F>] {
        &self.functors
    }

    /// `g.x`
    pub fn act_object(&self, g: usize, x: usize) -> usize {
        self.functors[g].object(x)
    }

    /// `g.a` for homogeneous `a ∈ hom(x, y)_degree`.
    pub fn act(&self, g: usize, x: usize, y: usize, degree: i64, a: &[F]) -> Vec<F> {
        self.functors[g]
            .apply(x, y, degree, a)
            .expect("action functor shapes are fixed by the category")
    }

    pub fn validate(&self) -> Report {
        validate_action(self)
    }

    pub fn orbits(&self) -> Result<Orbits> {
        orbits(self)
    }

    pub fn freeness(&self) -> Result<Freeness> {
        is_free_on_objects(self)
    }
}

/// Checks the monoid, the category, every `ρ(g)` as a dg-functor, `ρ(e) = id`
/// and `ρ(g) ∘ ρ(h) = ρ(gh)` on the nose.
pub fn validate_action<F: Field>(rho: &StrictAction<F>) -> Report {
    let mut report = Report::new();
    report.absorb("monoid", validate_monoid(&rho.monoid));
    report.absorb("category", validate_dg_category(&rho.category));
    if !report.is_ok() {
        return report;
    }
    let m = &rho.monoid;
    let a = &rho.category;
    for g in 0..m.len() {
        report.absorb(
            &format!("rho[{}]", m.name(g)),
            validate_dg_functor(&rho.functors[g], a, a),
        );
    }
    if !report.is_ok() {
        return report;
    }
    if rho.functors[m.identity()] != DgFunctor::identity(a) {
        report.violation("identity_acts_trivially", [m.name(m.identity())]);
    }
    for g in 0..m.len() {
        for h in 0..m.len() {
            let composite = rho.functors[h]
                .then(&rho.functors[g])
                .expect("validated functors compose");
            if composite != rho.functors[m.mul(g, h)] {
                report.violation("composition_law", [m.name(g), m.name(h)]);
            }
        }
    }
    if m.is_group() {
        for g in 0..m.len() {
            let f = &rho.functors[g];
            let mut seen = vec![false; a.num_objects()];
            let bijective_on_objects = f.object_map().iter().all(|&o| !std::mem::replace(&mut seen[o], true));
            if !bijective_on_objects || !f.is_hom_bijective() {
                report.violation("invertible", [m.name(g)]);
            }
        }
    }
    report
}

/// Orbits of the objects, in order of first appearance; the first object
/// of each orbit is its default representative.
pub fn orbits<F: Field>(rho: &StrictAction<F>) -> Result<Orbits> {
    rho.monoid.require_group()?;
    let n = rho.category.num_objects();
    let mut orbit_of = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    for start in 0..n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut block = Vec::new();
        let mut queue = VecDeque::from([start]);
        orbit_of[start] = id;
        while let Some(x) = queue.pop_front() {
            block.push(x);
            for g in 0..rho.monoid.len() {
                let y = rho.act_object(g, x);
                if orbit_of[y] == usize::MAX {
                    orbit_of[y] = id;
                    queue.push_back(y);
                }
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    let representatives = blocks.iter().map(|b| b[0]).collect();
    Ok(Orbits {
        blocks,
        representatives,
        orbit_of,
    })
}

/// Whether `g.x = x` forces `g = e`.
pub fn is_free_on_objects<F: Field>(rho: &StrictAction<F>) -> Result<Freeness> {
    rho.monoid.require_group()?;
    let m = &rho.monoid;
    for g in 0..m.len() {
        if g == m.identity() {
            continue;
        }
        for x in 0..rho.category.num_objects() {
            if rho.act_object(g, x) == x {
                return Ok(Freeness {
                    free: false,
                    witness: Some((m.name(g).to_string(), rho.category.object_name(x).to_string())),
                });
            }
        }
    }
    Ok(Freeness {
        free: true,
        witness: None,
    })
}
