//! JSON documents for categories, actions, functors, modules and complexes.
//!
//! Every document is an object with `"schema": 1`, a `"kind"` and a
//! `"field"`, e.g.
//!
//! ```json
//! {"schema": 1, "kind": "dgcat", "field": {"kind": "prime-field", "characteristic": 3}, ...}
//! ```
//!
//! Scalars are strings (`"-1/2"`, `"4"`), matrices are row-major lists of
//! rows, hom complexes are keyed `"X|Y"` and degrees are object keys. See
//! the README for the full layout of each kind. Encoding is deterministic,
//! so decode ∘ encode is the identity and encode ∘ decode is too on
//! documents produced by this module.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::dgcat::{validate_dg_functor, Algebra, BasisIndex, DgCategory, DgFunctor, HomBasis};
use crate::equivmod::{validate_equivariant, validate_module, EquivariantModule, RightModule};
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::field::{Field, FieldSpec};
use crate::graded::{ChainComplex, GradedDims, GradedMap};
use crate::groupact::{FiniteMonoid, StrictAction};
use crate::orbit::BoundedComplex;
use crate::report::Report;

pub const SCHEMA_VERSION: u32 = 1;

/// The `"kind"` of a document.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Dgcat,
    Action,
    Functor,
    Module,
    Equivariant,
    Complex,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Dgcat => "dgcat",
            Kind::Action => "action",
            Kind::Functor => "functor",
            Kind::Module => "module",
            Kind::Equivariant => "equivariant",
            Kind::Complex => "complex",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldJson {
    Rationals,
    PrimeField { characteristic: u32 },
}

impl From<FieldSpec> for FieldJson {
    fn from(s: FieldSpec) -> Self {
        match s {
            FieldSpec::Rationals => FieldJson::Rationals,
            FieldSpec::Prime(p) => FieldJson::PrimeField { characteristic: p },
        }
    }
}

impl TryFrom<FieldJson> for FieldSpec {
    type Error = Error;

    fn try_from(f: FieldJson) -> Result<Self> {
        match f {
            FieldJson::Rationals => Ok(FieldSpec::Rationals),
            FieldJson::PrimeField { characteristic } => FieldSpec::prime(characteristic),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Header {
    schema: u32,
    kind: Kind,
    field: FieldJson,
}

/// Schema version, kind and field of a document.
pub fn header(v: &Value) -> Result<(Kind, FieldSpec)> {
    let h: Header = serde_json::from_value(v.clone())
        .map_err(|e| Error::Schema(format!("bad document header: {e}")))?;
    if h.schema != SCHEMA_VERSION {
        return Err(Error::Schema(format!(
            "unsupported schema version {} (expected {SCHEMA_VERSION})",
            h.schema
        )));
    }
    Ok((h.kind, h.field.try_into()?))
}

pub type MatrixJson = Vec<Vec<String>>;

/// Body of a `dgcat` document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DgCategoryJson {
    pub objects: Vec<String>,
    /// `"X|Y"` → degree → basis labels.
    pub homs: BTreeMap<String, BTreeMap<i64, Vec<String>>>,
    #[serde(default)]
    pub differential: Vec<DifferentialRecord>,
    #[serde(default)]
    pub composition: Vec<CompositionRecord>,
    /// Coefficients of each identity in the degree-0 basis of `hom(X, X)`.
    pub units: BTreeMap<String, Vec<String>>,
}

/// `coefficient` of `output` in `d(input)`, both in hom `hom`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DifferentialRecord {
    pub hom: String,
    pub input: String,
    pub output: String,
    pub coefficient: String,
}

/// `coefficient` of `output` in `inputs[0] ▷ inputs[1]` for
/// `inputs[0] ∈ hom(X, Y)`, `inputs[1] ∈ hom(Y, Z)`, `objects = [X, Y, Z]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositionRecord {
    pub objects: [String; 3],
    pub inputs: [String; 2],
    pub output: String,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidJson {
    pub elements: Vec<String>,
    /// `table[g][h]` is the name of `gh`.
    pub table: Vec<Vec<String>>,
    pub identity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverses: Option<BTreeMap<String, String>>,
}

/// A dg-functor: images of objects and, per source hom `"X|Y"` and degree,
/// the matrix into `hom(F X, F Y)` of the same degree. Missing blocks are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorJson {
    pub objects: BTreeMap<String, String>,
    pub homs: BTreeMap<String, BTreeMap<i64, MatrixJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionJson {
    pub monoid: MonoidJson,
    pub category: DgCategoryJson,
    /// Element name → functor.
    pub functors: BTreeMap<String, FunctorJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDocJson {
    pub source: DgCategoryJson,
    pub target: DgCategoryJson,
    pub functor: FunctorJson,
}

/// Action matrices of a right module, per algebra basis label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDataJson {
    pub dim: usize,
    pub action: BTreeMap<String, MatrixJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    /// One object, concentrated in degree 0.
    pub algebra: DgCategoryJson,
    pub dim: usize,
    pub action: BTreeMap<String, MatrixJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquivariantJson {
    pub action: ActionJson,
    pub module: ModuleDataJson,
    /// Element name → `u_g`.
    pub u: BTreeMap<String, MatrixJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub dims: BTreeMap<i64, usize>,
    /// Degree `d` → block `C_d → C_{d−1}`.
    #[serde(default)]
    pub differential: BTreeMap<i64, MatrixJson>,
}

fn wrap<T: Serialize, F: Field>(kind: Kind, body: T) -> Value {
    let mut v = serde_json::to_value(body).expect("serializable");
    let obj = v.as_object_mut().expect("document bodies are objects");
    obj.insert("schema".into(), SCHEMA_VERSION.into());
    obj.insert("kind".into(), serde_json::to_value(kind).expect("serializable"));
    obj.insert(
        "field".into(),
        serde_json::to_value(FieldJson::from(F::field_spec())).expect("serializable"),
    );
    v
}

fn unwrap_doc<T: for<'de> Deserialize<'de>, F: Field>(v: &Value, kind: Kind) -> Result<T> {
    let (k, spec) = header(v)?;
    if k != kind {
        return Err(Error::Schema(format!(
            "expected a {} document, found {}",
            kind.as_str(),
            k.as_str()
        )));
    }
    if spec != F::field_spec() {
        return Err(Error::FieldMismatch {
            expected: F::field_spec(),
            found: spec,
        });
    }
    let mut body = v.clone();
    let obj = body.as_object_mut().expect("header parsed");
    for key in ["schema", "kind", "field"] {
        obj.remove(key);
    }
    serde_json::from_value(body).map_err(|e| Error::Schema(format!("bad {} document: {e}", kind.as_str())))
}

fn scalar<F: Field>(s: &str) -> Result<F> {
    F::parse_scalar(s)
}

fn scalars<F: Field>(v: &[String]) -> Result<Vec<F>> {
    v.iter().map(|s| scalar(s)).collect()
}

fn scalar_strings<F: Field>(v: &[F]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn matrix_to_json<F: Field>(m: &Matrix<F>) -> MatrixJson {
    (0..m.rows()).map(|i| scalar_strings(m.row(i))).collect()
}

/// Parses a matrix whose shape is fixed by context.
pub fn matrix_from_json<F: Field>(m: &MatrixJson, rows: usize, cols: usize) -> Result<Matrix<F>> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!(
            "expected a {rows}x{cols} matrix, found {} rows",
            m.len()
        )));
    }
    let rows = m.iter().map(|r| scalars(r)).collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows, cols)
}

fn pair_key(c: &[String], x: usize, y: usize) -> String {
    format!("{}|{}", c[x], c[y])
}

fn parse_pair<F: Field>(c: &DgCategory<F>, key: &str) -> Result<(usize, usize)> {
    let (x, y) = key
        .split_once('|')
        .ok_or_else(|| Error::Schema(format!("hom key {key:?} is not of the form \"X|Y\"")))?;
    Ok((c.object_index(x)?, c.object_index(y)?))
}

fn find_basis<F: Field>(c: &DgCategory<F>, x: usize, y: usize, name: &str) -> Result<BasisIndex> {
    c.hom(x, y)
        .find(name)
        .ok_or_else(|| Error::UnknownBasis(format!("{}|{}:{name}", c.object_name(x), c.object_name(y))))
}

pub fn dgcat_body<F: Field>(c: &DgCategory<F>) -> DgCategoryJson {
    let objs = c.objects();
    let n = c.num_objects();
    let mut homs = BTreeMap::new();
    let mut differential = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let hom = c.hom(x, y);
            if hom.basis().is_empty() {
                continue;
            }
            homs.insert(pair_key(objs, x, y), hom.basis().clone());
            for (d, names) in hom.basis() {
                let block = hom.complex().d(*d);
                for (j, input) in names.iter().enumerate() {
                    for i in 0..block.rows() {
                        let v = &block[(i, j)];
                        if !v.is_zero() {
                            differential.push(DifferentialRecord {
                                hom: pair_key(objs, x, y),
                                input: input.clone(),
                                output: hom.label(BasisIndex { degree: d - 1, index: i }).to_string(),
                                coefficient: v.to_string(),
                            });
                        }
                    }
                }
            }
        }
    }
    let mut composition = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for a in c.hom(x, y).elements() {
                    for b in c.hom(y, z).elements() {
                        let v = c.compose_basis((x, y, z), a, b);
                        for (k, coeff) in v.iter().enumerate() {
                            if coeff.is_zero() {
                                continue;
                            }
                            composition.push(CompositionRecord {
                                objects: [objs[x].clone(), objs[y].clone(), objs[z].clone()],
                                inputs: [c.hom(x, y).label(a).to_string(), c.hom(y, z).label(b).to_string()],
                                output: c
                                    .hom(x, z)
                                    .label(BasisIndex { degree: a.degree + b.degree, index: k })
                                    .to_string(),
                                coefficient: coeff.to_string(),
                            });
                        }
                    }
                }
            }
        }
    }
    let units = (0..n).map(|x| (objs[x].clone(), scalar_strings(c.unit(x)))).collect();
    DgCategoryJson {
        objects: objs.to_vec(),
        homs,
        differential,
        composition,
        units,
    }
}

pub fn dgcat_from_body<F: Field>(j: &DgCategoryJson) -> Result<DgCategory<F>> {
    let mut seen = std::collections::HashSet::new();
    for o in &j.objects {
        if o.contains('|') {
            return Err(Error::Schema(format!("object name {o:?} contains '|'")));
        }
        if !seen.insert(o) {
            return Err(Error::Schema(format!("duplicate object {o:?}")));
        }
    }
    let mut c = DgCategory::<F>::new(j.objects.iter().cloned());
    for (key, basis) in &j.homs {
        let (x, y) = parse_pair(&c, key)?;
        c.set_hom_basis(x, y, basis.iter().map(|(&d, b)| (d, b.clone())).collect::<HomBasis>())?;
    }
    let mut diffs: BTreeMap<(usize, usize, i64), Matrix<F>> = BTreeMap::new();
    for r in &j.differential {
        let (x, y) = parse_pair(&c, &r.hom)?;
        let a = find_basis(&c, x, y, &r.input)?;
        let out = find_basis(&c, x, y, &r.output)?;
        if out.degree != a.degree - 1 {
            return Err(Error::Schema(format!(
                "d({}) has a term {} of degree {}, expected degree {}",
                r.input,
                r.output,
                out.degree,
                a.degree - 1
            )));
        }
        let block = diffs
            .entry((x, y, a.degree))
            .or_insert_with(|| Matrix::zeros(c.dim(x, y, a.degree - 1), c.dim(x, y, a.degree)));
        if !block[(out.index, a.index)].is_zero() {
            return Err(Error::Schema(format!("duplicate differential record for {}", r.input)));
        }
        block[(out.index, a.index)] = scalar(&r.coefficient)?;
    }
    for ((x, y, d), m) in diffs {
        c.set_differential(x, y, d, m)?;
    }
    let mut comps: BTreeMap<(usize, usize, usize, BasisIndex, BasisIndex), Vec<F>> = BTreeMap::new();
    for r in &j.composition {
        let x = c.object_index(&r.objects[0])?;
        let y = c.object_index(&r.objects[1])?;
        let z = c.object_index(&r.objects[2])?;
        let a = find_basis(&c, x, y, &r.inputs[0])?;
        let b = find_basis(&c, y, z, &r.inputs[1])?;
        let out = find_basis(&c, x, z, &r.output)?;
        if out.degree != a.degree + b.degree {
            return Err(Error::Schema(format!(
                "{} ▷ {} has a term {} of degree {}, expected degree {}",
                r.inputs[0],
                r.inputs[1],
                r.output,
                out.degree,
                a.degree + b.degree
            )));
        }
        let v = comps
            .entry((x, y, z, a, b))
            .or_insert_with(|| vec![F::zero(); c.dim(x, z, out.degree)]);
        if !v[out.index].is_zero() {
            return Err(Error::Schema(format!(
                "duplicate composition record for {} ▷ {}",
                r.inputs[0], r.inputs[1]
            )));
        }
        v[out.index] = scalar(&r.coefficient)?;
    }
    for ((x, y, z, a, b), v) in comps {
        c.set_composition((x, y, z), a, b, v)?;
    }
    for (name, u) in &j.units {
        let x = c.object_index(name)?;
        c.set_unit(x, scalars(u)?)?;
    }
    Ok(c)
}

pub fn functor_body<F: Field>(f: &DgFunctor<F>, a: &DgCategory<F>, b: &DgCategory<F>) -> FunctorJson {
    let n = a.num_objects();
    let objects = (0..n)
        .map(|x| (a.object_name(x).to_string(), b.object_name(f.object(x)).to_string()))
        .collect();
    let mut homs = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            let map = f.hom_map(x, y);
            let blocks: BTreeMap<i64, MatrixJson> = a
                .hom_dims(x, y)
                .degrees()
                .filter_map(|d| map.stored_block(d).filter(|m| !m.is_zero()).map(|m| (d, matrix_to_json(m))))
                .collect();
            if !blocks.is_empty() {
                homs.insert(pair_key(a.objects(), x, y), blocks);
            }
        }
    }
    FunctorJson { objects, homs }
}

pub fn functor_from_body<F: Field>(j: &FunctorJson, a: &DgCategory<F>, b: &DgCategory<F>) -> Result<DgFunctor<F>> {
    let n = a.num_objects();
    let mut object_map = Vec::with_capacity(n);
    for x in 0..n {
        let name = a.object_name(x);
        let image = j
            .objects
            .get(name)
            .ok_or_else(|| Error::Schema(format!("functor does not map object {name:?}")))?;
        object_map.push(b.object_index(image)?);
    }
    for key in j.objects.keys() {
        a.object_index(key)?;
    }
    let mut f = DgFunctor::from_fn(object_map.clone(), |x, y| {
        Ok(GradedMap::zero(
            a.hom_dims(x, y).clone(),
            b.hom_dims(object_map[x], object_map[y]).clone(),
            0,
        ))
    })?;
    for (key, blocks) in &j.homs {
        let (x, y) = parse_pair(a, key)?;
        let map = f.hom_map_mut(x, y);
        for (&d, m) in blocks {
            let (r, c) = map.block_shape(d);
            map.set_block(d, matrix_from_json(m, r, c)?)?;
        }
    }
    Ok(f)
}

pub fn monoid_body(m: &FiniteMonoid) -> MonoidJson {
    let n = m.len();
    MonoidJson {
        elements: m.elements().to_vec(),
        table: (0..n)
            .map(|g| (0..n).map(|h| m.name(m.mul(g, h)).to_string()).collect())
            .collect(),
        identity: m.name(m.identity()).to_string(),
        inverses: m.inverses().map(|inv| {
            (0..n)
                .map(|g| (m.name(g).to_string(), m.name(inv[g]).to_string()))
                .collect()
        }),
    }
}

pub fn monoid_from_body(j: &MonoidJson) -> Result<FiniteMonoid> {
    let index = |name: &str| {
        j.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::Schema(format!("unknown monoid element {name:?}")))
    };
    let table = j
        .table
        .iter()
        .map(|row| row.iter().map(|s| index(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let inverses = match &j.inverses {
        None => None,
        Some(map) => Some(
            j.elements
                .iter()
                .map(|g| {
                    map.get(g)
                        .ok_or_else(|| Error::Schema(format!("no inverse listed for {g:?}")))
                        .and_then(|h| index(h))
                })
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    FiniteMonoid::new(j.elements.iter().cloned(), table, index(&j.identity)?, inverses)
}

pub fn action_body<F: Field>(rho: &StrictAction<F>) -> ActionJson {
    let a = rho.category();
    let m = rho.monoid();
    ActionJson {
        monoid: monoid_body(m),
        category: dgcat_body(a),
        functors: (0..m.len())
            .map(|g| (m.name(g).to_string(), functor_body(rho.functor(g), a, a)))
            .collect(),
    }
}

pub fn action_from_body<F: Field>(j: &ActionJson) -> Result<StrictAction<F>> {
    let m = monoid_from_body(&j.monoid)?;
    let a = dgcat_from_body::<F>(&j.category)?;
    let mut functors = Vec::with_capacity(m.len());
    for g in m.elements() {
        let f = j
            .functors
            .get(g)
            .ok_or_else(|| Error::Schema(format!("no functor for element {g:?}")))?;
        functors.push(functor_from_body(f, &a, &a)?);
    }
    if let Some(extra) = j.functors.keys().find(|k| !m.elements().contains(k)) {
        return Err(Error::Schema(format!("functor for unknown element {extra:?}")));
    }
    StrictAction::new(m, a, functors)
}

pub fn module_data<F: Field>(m: &RightModule<F>) -> ModuleDataJson {
    ModuleDataJson {
        dim: m.dim,
        action: m
            .algebra
            .basis()
            .iter()
            .zip(&m.action)
            .map(|(b, a)| (b.clone(), matrix_to_json(a)))
            .collect(),
    }
}

pub fn module_from_data<F: Field>(j: &ModuleDataJson, alg: Algebra<F>) -> Result<RightModule<F>> {
    let mut action = Vec::with_capacity(alg.dim());
    for b in alg.basis() {
        let m = j
            .action
            .get(b)
            .ok_or_else(|| Error::Schema(format!("no action matrix for basis element {b:?}")))?;
        action.push(matrix_from_json(m, j.dim, j.dim)?);
    }
    if let Some(extra) = j.action.keys().find(|k| !alg.basis().contains(k)) {
        return Err(Error::UnknownBasis(extra.clone()));
    }
    RightModule::new(alg, j.dim, action)
}

pub fn complex_body<F: Field>(c: &ChainComplex<F>) -> ComplexJson {
    ComplexJson {
        dims: c.dims().iter().collect(),
        differential: c
            .dims()
            .degrees()
            .filter_map(|d| {
                c.differential()
                    .stored_block(d)
                    .filter(|m| !m.is_zero())
                    .map(|m| (d, matrix_to_json(m)))
            })
            .collect(),
    }
}

pub fn complex_from_body<F: Field>(j: &ComplexJson) -> Result<ChainComplex<F>> {
    let dims = GradedDims::from_pairs(j.dims.iter().map(|(&d, &n)| (d, n)));
    let mut c = ChainComplex::with_zero_differential(dims.clone());
    for (&d, m) in &j.differential {
        c.set_differential(d, matrix_from_json(m, dims.get(d - 1), dims.get(d))?)?;
    }
    Ok(c)
}

pub fn encode_dgcat<F: Field>(c: &DgCategory<F>) -> Value {
    wrap::<_, F>(Kind::Dgcat, dgcat_body(c))
}

pub fn decode_dgcat<F: Field>(v: &Value) -> Result<DgCategory<F>> {
    dgcat_from_body(&unwrap_doc::<DgCategoryJson, F>(v, Kind::Dgcat)?)
}

pub fn encode_action<F: Field>(rho: &StrictAction<F>) -> Value {
    wrap::<_, F>(Kind::Action, action_body(rho))
}

pub fn decode_action<F: Field>(v: &Value) -> Result<StrictAction<F>> {
    action_from_body(&unwrap_doc::<ActionJson, F>(v, Kind::Action)?)
}

pub fn encode_functor<F: Field>(f: &DgFunctor<F>, a: &DgCategory<F>, b: &DgCategory<F>) -> Value {
    wrap::<_, F>(
        Kind::Functor,
        FunctorDocJson {
            source: dgcat_body(a),
            target: dgcat_body(b),
            functor: functor_body(f, a, b),
        },
    )
}

pub fn decode_functor<F: Field>(v: &Value) -> Result<(DgFunctor<F>, DgCategory<F>, DgCategory<F>)> {
    let j: FunctorDocJson = unwrap_doc::<_, F>(v, Kind::Functor)?;
    let a = dgcat_from_body(&j.source)?;
    let b = dgcat_from_body(&j.target)?;
    let f = functor_from_body(&j.functor, &a, &b)?;
    Ok((f, a, b))
}

pub fn encode_module<F: Field>(m: &RightModule<F>) -> Value {
    wrap::<_, F>(
        Kind::Module,
        ModuleJson {
            algebra: dgcat_body(&m.algebra.to_category()),
            dim: m.dim,
            action: module_data(m).action,
        },
    )
}

pub fn decode_module<F: Field>(v: &Value) -> Result<RightModule<F>> {
    let j: ModuleJson = unwrap_doc::<_, F>(v, Kind::Module)?;
    let alg = Algebra::from_category(&dgcat_from_body(&j.algebra)?)?;
    module_from_data(&ModuleDataJson { dim: j.dim, action: j.action }, alg)
}

pub fn encode_equivariant<F: Field>(e: &EquivariantModule<F>, rho: &StrictAction<F>) -> Value {
    let m = rho.monoid();
    wrap::<_, F>(
        Kind::Equivariant,
        EquivariantJson {
            action: action_body(rho),
            module: module_data(&e.base),
            u: (0..m.len())
                .map(|g| (m.name(g).to_string(), matrix_to_json(&e.u[g])))
                .collect(),
        },
    )
}

pub fn decode_equivariant<F: Field>(v: &Value) -> Result<(EquivariantModule<F>, StrictAction<F>)> {
    let j: EquivariantJson = unwrap_doc::<_, F>(v, Kind::Equivariant)?;
    let rho = action_from_body::<F>(&j.action)?;
    let alg = Algebra::from_category(rho.category())?;
    let base = module_from_data(&j.module, alg)?;
    let mut u = Vec::new();
    for g in rho.monoid().elements() {
        let m = j
            .u
            .get(g)
            .ok_or_else(|| Error::Schema(format!("no equivariant structure map for {g:?}")))?;
        u.push(matrix_from_json(m, base.dim, base.dim)?);
    }
    Ok((EquivariantModule::new(base, u)?, rho))
}

pub fn encode_complex<F: Field>(c: &ChainComplex<F>) -> Value {
    wrap::<_, F>(Kind::Complex, complex_body(c))
}

pub fn decode_complex<F: Field>(v: &Value) -> Result<ChainComplex<F>> {
    complex_from_body(&unwrap_doc::<ComplexJson, F>(v, Kind::Complex)?)
}

pub fn decode_bounded_complex<F: Field>(v: &Value) -> Result<BoundedComplex<F>> {
    BoundedComplex::new(decode_complex(v)?)
}

/// Decodes a document of any kind in its own field and runs the matching
/// validator. Decoding problems are errors; failed axioms are in the report.
pub fn validate_document(v: &Value) -> Result<Report> {
    let (kind, spec) = header(v)?;
    crate::with_field!(spec, K => validate_as::<K>(v, kind))
}

fn validate_as<F: Field>(v: &Value, kind: Kind) -> Result<Report> {
    Ok(match kind {
        Kind::Dgcat => decode_dgcat::<F>(v)?.validate(),
        Kind::Action => decode_action::<F>(v)?.validate(),
        Kind::Functor => {
            let (f, a, b) = decode_functor::<F>(v)?;
            let mut r = Report::new();
            r.absorb("source", a.validate());
            r.absorb("target", b.validate());
            r.absorb("functor", validate_dg_functor(&f, &a, &b));
            r
        }
        Kind::Module => validate_module(&decode_module::<F>(v)?),
        Kind::Equivariant => {
            let (e, rho) = decode_equivariant::<F>(v)?;
            let mut r = Report::new();
            r.absorb("action", rho.validate());
            if r.is_ok() {
                r.absorb("module", validate_equivariant(&e, &rho)?);
            }
            r
        }
        Kind::Complex => decode_complex::<F>(v)?.validate(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
