use std::path::Path;

use serde_json::{json, Map, Value};
use skewcat::equivmod::{
    equivariant_hom_dim, from_skew_module, hom_dim, roundtrip_equivariant, roundtrip_skew, to_skew_module,
    validate_equivariant, validate_module, EquivariantModule, RightModule,
};
use skewcat::json::{self, Kind};
use skewcat::orbit::{laurent_dims, orbit_hom_dims};
use skewcat::skew::{
    check_freeify, check_trivial_induced_action, equivariance_of_embedding, freeify as freeify_action,
    hom_dimension_mismatches, matrix_unit_relations, reduce, skew_basis_vector, skew_group_algebra,
    skew_group_dg_category,
};
use skewcat::{with_field, DgCategory, Field, Report, Result as CoreResult, StrictAction};

use crate::run::{read_json, Failure, Outcome};
use crate::SkewArgs;

type Run = Result<Outcome, Failure>;

fn hom_table<F: Field>(c: &DgCategory<F>) -> Vec<String> {
    let n = c.num_objects();
    let mut lines = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let dims = c.hom_dims(x, y);
            if dims.is_empty() {
                continue;
            }
            let cols: Vec<String> = dims.iter().map(|(d, k)| format!("{d}:{k}")).collect();
            lines.push(format!(
                "  hom({}, {})  {}",
                c.object_name(x),
                c.object_name(y),
                cols.join(" ")
            ));
        }
    }
    lines
}

fn require_valid<F: Field>(rho: &StrictAction<F>) -> Result<(), Failure> {
    let r = rho.validate();
    if r.is_ok() {
        return Ok(());
    }
    let mut scoped = Report::new();
    scoped.absorb("action", r);
    Err(Failure::Semantic(scoped))
}

/// Folds a check into the outcome; semantic refusals become violations.
fn absorb(o: &mut Outcome, scope: &str, r: CoreResult<Report>) -> Result<bool, Failure> {
    let report = match r.map_err(Failure::from) {
        Ok(report) => report,
        Err(Failure::Semantic(report)) => report,
        Err(usage) => return Err(usage),
    };
    let ok = report.is_ok();
    o.line(format!("{scope}: {}", if ok { "ok" } else { "FAILED" }));
    o.report.absorb(scope, report);
    Ok(ok)
}

fn representatives<F: Field>(rho: &StrictAction<F>, names: Option<&[String]>) -> Result<Option<Vec<usize>>, Failure> {
    names
        .map(|ns| {
            ns.iter()
                .map(|n| rho.category().object_index(n).map_err(Failure::from))
                .collect()
        })
        .transpose()
}

pub fn validate(path: &Path) -> Run {
    let v = read_json(path)?;
    let (kind, spec) = json::header(&v)?;
    let mut o = Outcome {
        report: json::validate_document(&v)?,
        ..Outcome::default()
    };
    o.line(format!("{} over {spec}", kind.as_str()));
    Ok(o)
}

pub fn skew(a: &SkewArgs) -> Run {
    let v = read_json(&a.action)?;
    let (_, spec) = json::header(&v)?;
    with_field!(spec, K => skew_in::<K>(&v, a))
}

fn skew_in<F: Field>(v: &Value, a: &SkewArgs) -> Run {
    let rho = json::decode_action::<F>(v)?;
    require_valid(&rho)?;
    let reps = representatives(&rho, a.representatives.as_deref())?;
    let s = skew_group_dg_category(&rho)?;
    let mut o = Outcome::default();
    o.line(format!(
        "skew category over {}: {} objects",
        F::field_spec(),
        s.category.num_objects()
    ));
    o.lines.extend(hom_table(&s.category));
    for ((x, y, d), (got, expected)) in hom_dimension_mismatches(&rho, &s) {
        o.report.violation(
            "hom_dimension",
            [x, y, d.to_string(), got.to_string(), expected.to_string()],
        );
    }
    o.document("skew", json::encode_dgcat(&s.category));
    o.document("embedding", json::encode_functor(&s.embedding, rho.category(), &s.category));
    if let Some(induced) = &s.induced_action {
        o.document("induced-action", json::encode_action(induced));
    }
    if a.reduce {
        let r = reduce(&s, reps.as_deref())?;
        o.line(format!("reduced: {} objects", r.category.num_objects()));
        o.lines.extend(hom_table(&r.category));
        o.document("reduced", json::encode_dgcat(&r.category));
    }
    if a.algebra || a.matrix_units.is_some() {
        let alg = skew_group_algebra(&rho)?;
        o.line(format!("skew algebra: dimension {}", alg.dim()));
        if a.algebra {
            o.document("algebra", json::encode_dgcat(&alg.to_category()));
        }
        if let Some(labels) = &a.matrix_units {
            let units: Vec<Vec<F>> = labels
                .iter()
                .map(|l| skew_basis_vector(&alg, l))
                .collect::<CoreResult<_>>()?;
            let units: [Vec<F>; 4] = units
                .try_into()
                .map_err(|_| Failure::Usage("--matrix-units takes exactly four labels".into()))?;
            absorb(&mut o, "matrix_units", Ok(matrix_unit_relations(&alg, &units)))?;
        }
    }
    if a.check_equivariance {
        absorb(&mut o, "equivariance", equivariance_of_embedding(&rho, &s))?;
    }
    if a.check_trivial_induced {
        let r = check_trivial_induced_action(&rho, reps.as_deref()).map(|i| i.report);
        absorb(&mut o, "trivial_induced", r)?;
    }
    Ok(o)
}

pub fn freeify(action: &Path, reps: Option<&[String]>) -> Run {
    let v = read_json(action)?;
    let (_, spec) = json::header(&v)?;
    with_field!(spec, K => freeify_in::<K>(&v, reps))
}

fn freeify_in<F: Field>(v: &Value, names: Option<&[String]>) -> Run {
    let rho = json::decode_action::<F>(v)?;
    require_valid(&rho)?;
    let reps = representatives(&rho, names)?;
    let f = freeify_action(&rho, reps.as_deref())?;
    let mut o = Outcome::default();
    o.line(format!("free replacement: objects {}", f.action.category().objects().join(" ")));
    absorb(&mut o, "freeify", Ok(check_freeify(&rho, &f)))?;
    o.document("action", json::encode_action(&f.action));
    o.document(
        "projection",
        json::encode_functor(&f.projection, f.action.category(), rho.category()),
    );
    Ok(o)
}

pub fn equiv(action: &Path, module: &Path, roundtrip: bool, other: Option<&Path>) -> Run {
    let av = read_json(action)?;
    let mv = read_json(module)?;
    let ov = other.map(read_json).transpose()?;
    let (_, spec) = json::header(&av)?;
    with_field!(spec, K => equiv_in::<K>(&av, &mv, roundtrip, ov.as_ref()))
}

fn load_equivariant<F: Field>(v: &Value, rho: &StrictAction<F>) -> Result<EquivariantModule<F>, Failure> {
    let (e, embedded) = json::decode_equivariant::<F>(v)?;
    if &embedded != rho {
        return Err(skewcat::Error::Mismatch("the module is equivariant for a different action".into()).into());
    }
    Ok(e)
}

fn load_skew_module<F: Field>(v: &Value, rho: &StrictAction<F>) -> Result<RightModule<F>, Failure> {
    let n = json::decode_module::<F>(v)?;
    if n.algebra != skew_group_algebra(rho)? {
        return Err(skewcat::Error::Mismatch("the module is not over the skew group algebra of the action".into()).into());
    }
    Ok(n)
}

fn hom_dims_line(o: &mut Outcome, equivariant: usize, skew: usize) {
    o.line(format!("hom dimension: equivariant {equivariant}, skew {skew}"));
    o.data
        .insert("hom_dims".into(), json!({"equivariant": equivariant, "skew": skew}));
    if equivariant != skew {
        o.report
            .violation("hom_dim_preserved", [equivariant.to_string(), skew.to_string()]);
    }
}

fn equiv_in<F: Field>(av: &Value, mv: &Value, roundtrip: bool, ov: Option<&Value>) -> Run {
    let rho = json::decode_action::<F>(av)?;
    require_valid(&rho)?;
    let mut o = Outcome::default();
    let (kind, _) = json::header(mv)?;
    if let Some(ov) = ov {
        let (other_kind, _) = json::header(ov)?;
        if other_kind != kind {
            return Err(Failure::Usage(format!(
                "--homdim needs a second {} file, found {}",
                kind.as_str(),
                other_kind.as_str()
            )));
        }
    }
    match kind {
        Kind::Equivariant => {
            let e = load_equivariant(mv, &rho)?;
            if !absorb(&mut o, "module", validate_equivariant(&e, &rho))? {
                return Ok(o);
            }
            if roundtrip {
                absorb(&mut o, "roundtrip", roundtrip_equivariant(&e, &rho))?;
                o.document("skew-module", json::encode_module(&to_skew_module(&e, &rho)?));
            }
            if let Some(ov) = ov {
                let f = load_equivariant(ov, &rho)?;
                if !absorb(&mut o, "other", validate_equivariant(&f, &rho))? {
                    return Ok(o);
                }
                let d_eq = equivariant_hom_dim(&e, &f)?;
                let d_skew = hom_dim(&to_skew_module(&e, &rho)?, &to_skew_module(&f, &rho)?)?;
                hom_dims_line(&mut o, d_eq, d_skew);
            }
        }
        Kind::Module => {
            let n = load_skew_module(mv, &rho)?;
            if !absorb(&mut o, "module", Ok(validate_module(&n)))? {
                return Ok(o);
            }
            if roundtrip {
                absorb(&mut o, "roundtrip", roundtrip_skew(&n, &rho))?;
                o.document(
                    "equivariant-module",
                    json::encode_equivariant(&from_skew_module(&n, &rho)?, &rho),
                );
            }
            if let Some(ov) = ov {
                let m = load_skew_module(ov, &rho)?;
                if !absorb(&mut o, "other", Ok(validate_module(&m)))? {
                    return Ok(o);
                }
                let d_skew = hom_dim(&n, &m)?;
                let d_eq = equivariant_hom_dim(&from_skew_module(&n, &rho)?, &from_skew_module(&m, &rho)?)?;
                hom_dims_line(&mut o, d_eq, d_skew);
            }
        }
        other => {
            return Err(Failure::Usage(format!(
                "expected an equivariant or module file, found {}",
                other.as_str()
            )))
        }
    }
    Ok(o)
}

pub fn orbit(source: &Path, target: &Path, period: i64, window: Option<(i64, i64)>, laurent: bool) -> Run {
    if period == 0 {
        return Err(Failure::Usage("--period must be nonzero".into()));
    }
    let kv = read_json(source)?;
    let lv = read_json(target)?;
    let (_, spec) = json::header(&kv)?;
    let (lo, hi) = window.unwrap_or((-3 * period.abs(), 3 * period.abs()));
    with_field!(spec, K => orbit_in::<K>(&kv, &lv, period, lo, hi, laurent))
}

fn orbit_in<F: Field>(kv: &Value, lv: &Value, n: i64, lo: i64, hi: i64, laurent: bool) -> Run {
    let k = json::decode_bounded_complex::<F>(kv)?;
    let l = json::decode_bounded_complex::<F>(lv)?;
    let dims = orbit_hom_dims(&k, &l, n, lo, hi)?;
    let mut o = Outcome::default();
    let width = format!("{lo}").len().max(format!("{hi}").len()).max("degree".len());
    o.line(format!("orbit hom dimensions, period {n}, window [{lo}, {hi}]"));
    o.line(format!("{:>width$}  dim", "degree"));
    let mut table = Map::new();
    for d in lo..=hi {
        o.line(format!("{d:>width$}  {}", dims.get(d)));
        table.insert(d.to_string(), json!(dims.get(d)));
    }
    o.data.insert("orbit_hom_dims".into(), Value::Object(table));
    if laurent {
        let expected = laurent_dims(n, lo, hi)?;
        for d in lo..=hi {
            if dims.get(d) != expected.get(d) {
                o.report.violation(
                    "laurent",
                    [d.to_string(), dims.get(d).to_string(), expected.get(d).to_string()],
                );
            }
        }
        o.line(format!("laurent check: {}", if o.report.is_ok() { "ok" } else { "FAILED" }));
    }
    Ok(o)
}

pub fn fixtures(out: &Path) -> Run {
    let docs = skewcat::corpus::fixture_documents();
    for (rel, doc) in &docs {
        let path = out.join(rel);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent).map_err(|e| Failure::Usage(format!("{}: {e}", parent.display())))?;
        }
        std::fs::write(&path, json::to_pretty(doc)).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    let mut o = Outcome::default();
    o.line(format!("wrote {} fixtures to {}", docs.len(), out.display()));
    o.data.insert("count".into(), json!(docs.len()));
    Ok(o)
}
