//! A second, deliberately naive reading of the JSON documents: dense
//! vectors indexed by hom basis, axioms checked element by element. Shares
//! only field arithmetic with the library. Used to tell apart mutants that
//! still describe a valid structure from ones a validator must reject.

use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Value};
use skewcat::{Field, Rational, F2, F3};

pub fn valid(v: &Value) -> Result<bool, String> {
    match (&v["field"]["kind"], &v["field"]["characteristic"]) {
        (k, _) if k == "rationals" => valid_in::<Rational>(v),
        (_, p) if p == 2 => valid_in::<F2>(v),
        (_, p) if p == 3 => valid_in::<F3>(v),
        other => Err(format!("oracle has no field {other:?}")),
    }
}

fn valid_in<F: Field>(v: &Value) -> Result<bool, String> {
    Ok(match v["kind"].as_str() {
        Some("dgcat") => Cat::<F>::parse(v)?.valid(),
        Some("action") => Action::<F>::parse(v)?.valid(),
        Some("equivariant") => equivariant_valid::<F>(v)?,
        Some("complex") => complex_valid::<F>(v)?,
        other => return Err(format!("oracle has no kind {other:?}")),
    })
}

fn sc<F: Field>(v: &Value) -> Result<F, String> {
    F::parse_scalar(v.as_str().ok_or("scalar is not a string")?).map_err(|e| e.to_string())
}

type Vector<F> = Vec<F>;

fn add<F: Field>(a: &mut [F], b: &[F], c: &F) {
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.clone() + c.clone() * y.clone();
    }
}

fn is_zero<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

struct Cat<F> {
    n: usize,
    /// (x, y) → [(label, degree)]
    basis: HashMap<(usize, usize), Vec<(String, i64)>>,
    /// (x, y) → d(e_i) for each i
    d: HashMap<(usize, usize), Vec<Vector<F>>>,
    /// (x, y, z, i, j) → e_i ▷ e_j
    comp: HashMap<(usize, usize, usize, usize, usize), Vector<F>>,
    units: Vec<Vector<F>>,
    names: Vec<String>,
}

impl<F: Field> Cat<F> {
    fn parse(v: &Value) -> Result<Self, String> {
        let names: Vec<String> = v["objects"]
            .as_array()
            .ok_or("objects")?
            .iter()
            .map(|o| o.as_str().unwrap().to_string())
            .collect();
        let n = names.len();
        let obj = |s: &str| names.iter().position(|o| o == s).ok_or(format!("object {s}"));
        let mut basis = HashMap::new();
        for x in 0..n {
            for y in 0..n {
                let mut list: Vec<(String, i64)> = Vec::new();
                if let Some(degs) = v["homs"][format!("{}|{}", names[x], names[y])].as_object() {
                    let mut degs: Vec<(i64, &Value)> =
                        degs.iter().map(|(d, l)| (d.parse().unwrap(), l)).collect();
                    degs.sort_by_key(|p| p.0);
                    for (d, labels) in degs {
                        for l in labels.as_array().unwrap() {
                            list.push((l.as_str().unwrap().to_string(), d));
                        }
                    }
                }
                basis.insert((x, y), list);
            }
        }
        let pos = |x: usize, y: usize, label: &Value| -> Result<usize, String> {
            basis[&(x, y)]
                .iter()
                .position(|(l, _)| l == label.as_str().unwrap())
                .ok_or(format!("label {label}"))
        };
        let mut d: HashMap<(usize, usize), Vec<Vector<F>>> = HashMap::new();
        for x in 0..n {
            for y in 0..n {
                let k = basis[&(x, y)].len();
                d.insert((x, y), vec![vec![F::zero(); k]; k]);
            }
        }
        for r in v["differential"].as_array().into_iter().flatten() {
            let (xs, ys) = r["hom"].as_str().unwrap().split_once('|').unwrap();
            let (x, y) = (obj(xs)?, obj(ys)?);
            let i = pos(x, y, &r["input"])?;
            let o = pos(x, y, &r["output"])?;
            let entry = &mut d.get_mut(&(x, y)).unwrap()[i][o];
            *entry = entry.clone() + sc::<F>(&r["coefficient"])?;
        }
        let mut comp = HashMap::new();
        for r in v["composition"].as_array().into_iter().flatten() {
            let o: Vec<usize> = r["objects"]
                .as_array()
                .unwrap()
                .iter()
                .map(|s| obj(s.as_str().unwrap()))
                .collect::<Result<_, _>>()?;
            let (x, y, z) = (o[0], o[1], o[2]);
            let i = pos(x, y, &r["inputs"][0])?;
            let j = pos(y, z, &r["inputs"][1])?;
            let k = pos(x, z, &r["output"])?;
            let len = basis[&(x, z)].len();
            let e = comp.entry((x, y, z, i, j)).or_insert_with(|| vec![F::zero(); len]);
            e[k] = e[k].clone() + sc::<F>(&r["coefficient"])?;
        }
        let mut units = Vec::new();
        for x in 0..n {
            let mut u = vec![F::zero(); basis[&(x, x)].len()];
            let coeffs = v["units"][&names[x]].as_array().ok_or("units")?;
            let zero_degree: Vec<usize> = (0..u.len()).filter(|&i| basis[&(x, x)][i].1 == 0).collect();
            if coeffs.len() != zero_degree.len() {
                return Err("unit length".into());
            }
            for (c, &i) in coeffs.iter().zip(&zero_degree) {
                u[i] = sc::<F>(c)?;
            }
            units.push(u);
        }
        Ok(Cat {
            n,
            basis,
            d,
            comp,
            units,
            names,
        })
    }

    fn dim(&self, x: usize, y: usize) -> usize {
        self.basis[&(x, y)].len()
    }

    fn e(&self, x: usize, y: usize, i: usize) -> Vector<F> {
        let mut v = vec![F::zero(); self.dim(x, y)];
        v[i] = F::one();
        v
    }

    fn diff(&self, x: usize, y: usize, v: &[F]) -> Vector<F> {
        let mut out = vec![F::zero(); self.dim(x, y)];
        for (i, c) in v.iter().enumerate() {
            add(&mut out, &self.d[&(x, y)][i], c);
        }
        out
    }

    fn compose(&self, (x, y, z): (usize, usize, usize), a: &[F], b: &[F]) -> Vector<F> {
        let mut out = vec![F::zero(); self.dim(x, z)];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if let Some(p) = self.comp.get(&(x, y, z, i, j)) {
                    add(&mut out, p, &(ca.clone() * cb.clone()));
                }
            }
        }
        out
    }

    fn valid(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                for i in 0..self.dim(x, y) {
                    let (_, deg) = &self.basis[&(x, y)][i];
                    let di = self.diff(x, y, &self.e(x, y, i));
                    // d lowers degree by one
                    for (k, c) in di.iter().enumerate() {
                        if !c.is_zero() && self.basis[&(x, y)][k].1 != deg - 1 {
                            return false;
                        }
                    }
                    if !is_zero(&self.diff(x, y, &di)) {
                        return false;
                    }
                    let a = self.e(x, y, i);
                    if self.compose((x, x, y), &self.units[x], &a) != a || self.compose((x, y, y), &a, &self.units[y]) != a {
                        return false;
                    }
                }
            }
            if !is_zero(&self.diff(x, x, &self.units[x])) {
                return false;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for i in 0..self.dim(x, y) {
                        let a = self.e(x, y, i);
                        let sign = if self.basis[&(x, y)][i].1.rem_euclid(2) == 0 { F::one() } else { -F::one() };
                        for j in 0..self.dim(y, z) {
                            let b = self.e(y, z, j);
                            let ab = self.compose((x, y, z), &a, &b);
                            // degrees add
                            let want = self.basis[&(x, y)][i].1 + self.basis[&(y, z)][j].1;
                            if ab.iter().enumerate().any(|(k, c)| !c.is_zero() && self.basis[&(x, z)][k].1 != want) {
                                return false;
                            }
                            let mut rhs = self.compose((x, y, z), &self.diff(x, y, &a), &b);
                            add(&mut rhs, &self.compose((x, y, z), &a, &self.diff(y, z, &b)), &sign);
                            if self.diff(x, z, &ab) != rhs {
                                return false;
                            }
                            for w in 0..n {
                                for k in 0..self.dim(z, w) {
                                    let c = self.e(z, w, k);
                                    let left = self.compose((x, z, w), &ab, &c);
                                    let right = self.compose((x, y, w), &a, &self.compose((y, z, w), &b, &c));
                                    if left != right {
                                        return false;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

struct Functor<F> {
    objects: Vec<usize>,
    /// (x, y) → image of each basis vector
    maps: HashMap<(usize, usize), Vec<Vector<F>>>,
}

impl<F: Field> Functor<F> {
    fn parse(v: &Value, a: &Cat<F>, b: &Cat<F>) -> Result<Self, String> {
        let objects: Vec<usize> = a
            .names
            .iter()
            .map(|x| {
                let t = v["objects"][x].as_str().ok_or("object map")?;
                b.names.iter().position(|o| o == t).ok_or(format!("object {t}"))
            })
            .collect::<Result<_, String>>()?;
        let mut maps = HashMap::new();
        for x in 0..a.n {
            for y in 0..a.n {
                let (fx, fy) = (objects[x], objects[y]);
                let src = &a.basis[&(x, y)];
                let tgt = &b.basis[&(fx, fy)];
                let mut images = vec![vec![F::zero(); tgt.len()]; src.len()];
                if let Some(blocks) = v["homs"][format!("{}|{}", a.names[x], a.names[y])].as_object() {
                    for (d, m) in blocks {
                        let d: i64 = d.parse().unwrap();
                        let cols: Vec<usize> = (0..src.len()).filter(|&i| src[i].1 == d).collect();
                        let rows: Vec<usize> = (0..tgt.len()).filter(|&i| tgt[i].1 == d).collect();
                        for (r, row) in m.as_array().unwrap().iter().enumerate() {
                            for (c, entry) in row.as_array().unwrap().iter().enumerate() {
                                images[cols[c]][rows[r]] = sc::<F>(entry)?;
                            }
                        }
                    }
                }
                maps.insert((x, y), images);
            }
        }
        Ok(Functor { objects, maps })
    }

    fn apply(&self, x: usize, y: usize, v: &[F], target_dim: usize) -> Vector<F> {
        let mut out = vec![F::zero(); target_dim];
        for (i, c) in v.iter().enumerate() {
            add(&mut out, &self.maps[&(x, y)][i], c);
        }
        out
    }

    fn valid(&self, a: &Cat<F>, b: &Cat<F>) -> bool {
        let f = |x: usize, y: usize, v: &[F]| self.apply(x, y, v, b.dim(self.objects[x], self.objects[y]));
        for x in 0..a.n {
            let fx = self.objects[x];
            if f(x, x, &a.units[x]) != b.units[fx] {
                return false;
            }
            for y in 0..a.n {
                let fy = self.objects[y];
                for i in 0..a.dim(x, y) {
                    let e = a.e(x, y, i);
                    if f(x, y, &a.diff(x, y, &e)) != b.diff(fx, fy, &f(x, y, &e)) {
                        return false;
                    }
                    for z in 0..a.n {
                        let fz = self.objects[z];
                        for j in 0..a.dim(y, z) {
                            let g = a.e(y, z, j);
                            let lhs = f(x, z, &a.compose((x, y, z), &e, &g));
                            let rhs = b.compose((fx, fy, fz), &f(x, y, &e), &f(y, z, &g));
                            if lhs != rhs {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

struct Action<F> {
    cat: Cat<F>,
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Option<Vec<usize>>,
    functors: Vec<Functor<F>>,
}

impl<F: Field> Action<F> {
    fn parse(v: &Value) -> Result<Self, String> {
        let cat = Cat::parse(&v["category"])?;
        let m = &v["monoid"];
        let elements: Vec<String> = m["elements"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e.as_str().unwrap().to_string())
            .collect();
        let idx = |s: &Value| elements.iter().position(|e| e == s.as_str().unwrap()).ok_or("element");
        let table = m["table"]
            .as_array()
            .unwrap()
            .iter()
            .map(|row| row.as_array().unwrap().iter().map(idx).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let identity = idx(&m["identity"])?;
        let inverses = match m.get("inverses") {
            Some(inv) if !inv.is_null() => Some(
                elements
                    .iter()
                    .map(|g| idx(&inv[g]))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            _ => None,
        };
        let functors = elements
            .iter()
            .map(|g| Functor::parse(&v["functors"][g], &cat, &cat))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Action {
            cat,
            elements,
            table,
            identity,
            inverses,
            functors,
        })
    }

    fn valid(&self) -> bool {
        let n = self.elements.len();
        let t = &self.table;
        for g in 0..n {
            if t[self.identity][g] != g || t[g][self.identity] != g {
                return false;
            }
            for h in 0..n {
                for k in 0..n {
                    if t[t[g][h]][k] != t[g][t[h][k]] {
                        return false;
                    }
                }
            }
            if let Some(inv) = &self.inverses {
                if t[g][inv[g]] != self.identity || t[inv[g]][g] != self.identity {
                    return false;
                }
            }
        }
        if !self.cat.valid() || !self.functors.iter().all(|f| f.valid(&self.cat, &self.cat)) {
            return false;
        }
        let c = &self.cat;
        let e = &self.functors[self.identity];
        for x in 0..c.n {
            if e.objects[x] != x {
                return false;
            }
            for y in 0..c.n {
                for i in 0..c.dim(x, y) {
                    if e.apply(x, y, &c.e(x, y, i), c.dim(x, y)) != c.e(x, y, i) {
                        return false;
                    }
                }
            }
        }
        // F_{gh} = F_g ∘ F_h
        for g in 0..n {
            for h in 0..n {
                let (fg, fh, fgh) = (&self.functors[g], &self.functors[h], &self.functors[t[g][h]]);
                for x in 0..c.n {
                    if fgh.objects[x] != fg.objects[fh.objects[x]] {
                        return false;
                    }
                    for y in 0..c.n {
                        let (hx, hy) = (fh.objects[x], fh.objects[y]);
                        let target = c.dim(fgh.objects[x], fgh.objects[y]);
                        for i in 0..c.dim(x, y) {
                            let a = c.e(x, y, i);
                            let two = fg.apply(hx, hy, &fh.apply(x, y, &a, c.dim(hx, hy)), target);
                            if fgh.apply(x, y, &a, target) != two {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

fn matrix<F: Field>(v: &Value, n: usize) -> Result<Vec<Vec<F>>, String> {
    let rows = v.as_array().ok_or("matrix")?;
    if rows.len() != n {
        return Err("matrix shape".into());
    }
    rows.iter()
        .map(|r| r.as_array().unwrap().iter().map(sc::<F>).collect::<Result<Vec<_>, _>>())
        .collect()
}

fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    let n = a.len();
    let inner = b.len();
    let m = if inner == 0 { n } else { b[0].len() };
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..inner).fold(F::zero(), |s, k| s + a[i][k].clone() * b[k][j].clone()))
                .collect()
        })
        .collect()
}

fn lin<F: Field>(coeffs: &[F], mats: &[Vec<Vec<F>>], n: usize) -> Vec<Vec<F>> {
    let mut out = vec![vec![F::zero(); n]; n];
    for (c, m) in coeffs.iter().zip(mats) {
        for i in 0..n {
            for j in 0..n {
                out[i][j] = out[i][j].clone() + c.clone() * m[i][j].clone();
            }
        }
    }
    out
}

fn identity<F: Field>(n: usize) -> Vec<Vec<F>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect()
}

/// Right module in the column convention `m·b = A_b m`, `u_g` a left
/// `G`-structure with `u_g A_a = A_{g⁻¹.a} u_g`.
fn equivariant_valid<F: Field>(v: &Value) -> Result<bool, String> {
    let rho = Action::<F>::parse(&v["action"])?;
    if !rho.valid() {
        return Ok(false);
    }
    let alg = &rho.cat;
    let k = alg.dim(0, 0);
    let n = v["module"]["dim"].as_u64().ok_or("dim")? as usize;
    let a: Vec<Vec<Vec<F>>> = alg.basis[&(0, 0)]
        .iter()
        .map(|(l, _)| matrix::<F>(&v["module"]["action"][l], n))
        .collect::<Result<_, _>>()?;
    if lin(&alg.units[0], &a, n) != identity::<F>(n) {
        return Ok(false);
    }
    for i in 0..k {
        for j in 0..k {
            let prod = alg.compose((0, 0, 0), &alg.e(0, 0, i), &alg.e(0, 0, j));
            if lin(&prod, &a, n) != mat_mul(&a[j], &a[i]) {
                return Ok(false);
            }
        }
    }
    let u: Vec<Vec<Vec<F>>> = rho
        .elements
        .iter()
        .map(|g| matrix::<F>(&v["u"][g], n))
        .collect::<Result<_, _>>()?;
    if u[rho.identity] != identity::<F>(n) {
        return Ok(false);
    }
    let inv = rho.inverses.clone().ok_or("module over a monoid")?;
    let g_count = rho.elements.len();
    for g in 0..g_count {
        for h in 0..g_count {
            if mat_mul(&u[g], &u[h]) != u[rho.table[h][g]] {
                return Ok(false);
            }
        }
        for i in 0..k {
            let moved = rho.functors[inv[g]].apply(0, 0, &alg.e(0, 0, i), k);
            if mat_mul(&u[g], &a[i]) != mat_mul(&lin(&moved, &a, n), &u[g]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn complex_valid<F: Field>(v: &Value) -> Result<bool, String> {
    let dims: BTreeMap<i64, usize> = v["dims"]
        .as_object()
        .unwrap()
        .iter()
        .map(|(d, n)| (d.parse().unwrap(), n.as_u64().unwrap() as usize))
        .collect();
    let dim = |d: i64| dims.get(&d).copied().unwrap_or(0);
    let block = |d: i64| -> Result<Vec<Vec<F>>, String> {
        match v["differential"].get(d.to_string()) {
            Some(m) => matrix::<F>(m, dim(d - 1)),
            None => Ok(vec![vec![F::zero(); dim(d)]; dim(d - 1)]),
        }
    };
    for &d in dims.keys() {
        let composite = mat_mul(&block(d - 1)?, &block(d)?);
        if composite.iter().flatten().any(|x| !x.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Default)]
pub struct Stats {
    pub killed: usize,
    pub equivalent: usize,
    by_kind: BTreeMap<String, usize>,
}

impl Stats {
    pub fn count(&mut self, what: &str) {
        let kind = what.split(' ').next().unwrap_or(what).to_string();
        *self.by_kind.entry(kind).or_default() += 1;
    }

    pub fn breakdown(&self) -> String {
        self.by_kind
            .iter()
            .map(|(k, n)| format!("{k} {n}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn bump(v: &Value, field: &Value) -> Value {
    let s = v.as_str().unwrap();
    let next = match field["kind"].as_str() {
        Some("rationals") => {
            let q = Rational::parse_scalar(s).unwrap() + Rational::from_i64(1);
            q.to_string()
        }
        _ => {
            let p = field["characteristic"].as_i64().unwrap();
            let x: i64 = s.parse().unwrap();
            ((x + 1).rem_euclid(p)).to_string()
        }
    };
    json!(next)
}

fn category_mutants(doc: &Value, at: &[&str], field: &Value, out: &mut Vec<(String, Value)>) {
    let cat = at.iter().fold(doc, |v, k| &v[*k]);
    let set = |f: &mut dyn FnMut(&mut Value)| {
        let mut m = doc.clone();
        let c = at.iter().fold(&mut m, |v, k| &mut v[*k]);
        f(c);
        m
    };
    // existing constants
    for list in ["composition", "differential"] {
        for i in 0..cat[list].as_array().map_or(0, Vec::len) {
            let m = set(&mut |c| c[list][i]["coefficient"] = bump(&c[list][i]["coefficient"], field));
            out.push((format!("{list} record {i}"), m));
        }
    }
    for (x, u) in cat["units"].as_object().unwrap() {
        for i in 0..u.as_array().unwrap().len() {
            let m = set(&mut |c| c["units"][x][i] = bump(&c["units"][x][i], field));
            out.push((format!("unit {x}[{i}]"), m));
        }
    }
    // zero constants: every degree-compatible composition and differential entry not listed
    let objs: Vec<String> = cat["objects"].as_array().unwrap().iter().map(|o| o.as_str().unwrap().to_string()).collect();
    let labels = |x: &str, y: &str| -> Vec<(String, i64)> {
        let mut out = Vec::new();
        if let Some(degs) = cat["homs"][format!("{x}|{y}")].as_object() {
            for (d, ls) in degs {
                for l in ls.as_array().unwrap() {
                    out.push((l.as_str().unwrap().to_string(), d.parse().unwrap()));
                }
            }
        }
        out
    };
    let present_comp: std::collections::HashSet<String> = cat["composition"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|r| format!("{}{}{}", r["objects"], r["inputs"], r["output"]))
        .collect();
    for x in &objs {
        for y in &objs {
            for z in &objs {
                for (a, da) in labels(x, y) {
                    for (b, db) in labels(y, z) {
                        for (c, dc) in labels(x, z) {
                            if dc != da + db {
                                continue;
                            }
                            let rec = json!({"objects": [x, y, z], "inputs": [a, b], "output": c, "coefficient": "1"});
                            let key = format!("{}{}{}", rec["objects"], rec["inputs"], rec["output"]);
                            if present_comp.contains(&key) {
                                continue;
                            }
                            let m = set(&mut |cv| cv["composition"].as_array_mut().unwrap().push(rec.clone()));
                            out.push((format!("composition new {x}{y}{z}:{a},{b}->{c}"), m));
                        }
                    }
                }
            }
        }
    }
    let present_d: std::collections::HashSet<String> = cat["differential"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|r| format!("{}{}{}", r["hom"], r["input"], r["output"]))
        .collect();
    for x in &objs {
        for y in &objs {
            let ls = labels(x, y);
            for (a, da) in &ls {
                for (b, db) in &ls {
                    if *db != da - 1 {
                        continue;
                    }
                    let rec = json!({"hom": format!("{x}|{y}"), "input": a, "output": b, "coefficient": "1"});
                    if present_d.contains(&format!("{}{}{}", rec["hom"], rec["input"], rec["output"])) {
                        continue;
                    }
                    let m = set(&mut |cv| cv["differential"].as_array_mut().unwrap().push(rec.clone()));
                    out.push((format!("differential new {x}|{y}:{a}->{b}"), m));
                }
            }
        }
    }
}

fn matrix_entry_mutants(
    doc: &Value,
    path: &[String],
    rows: usize,
    cols: usize,
    label: &str,
    field: &Value,
    out: &mut Vec<(String, Value)>,
) {
    for i in 0..rows {
        for j in 0..cols {
            let mut m = doc.clone();
            let slot = path.iter().fold(&mut m, |v, k| &mut v[k.as_str()]);
            if slot.is_null() {
                *slot = json!(vec![vec!["0"; cols]; rows]);
            }
            slot[i][j] = bump(&slot[i][j], field);
            out.push((format!("{label} [{i},{j}]"), m));
        }
    }
}

fn action_mutants(doc: &Value, at: &[&str], field: &Value, with_category: bool, out: &mut Vec<(String, Value)>) {
    let action = at.iter().fold(doc, |v, k| &v[*k]);
    if with_category {
        let mut cat_path = at.to_vec();
        cat_path.push("category");
        category_mutants(doc, &cat_path, field, out);
    }
    let elements: Vec<String> = action["monoid"]["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e.as_str().unwrap().to_string())
        .collect();
    let n = elements.len();
    for i in 0..n {
        for j in 0..n {
            if n < 2 {
                continue;
            }
            let mut m = doc.clone();
            let a = at.iter().fold(&mut m, |v, k| &mut v[*k]);
            let cur = a["monoid"]["table"][i][j].as_str().unwrap().to_string();
            let pos = elements.iter().position(|e| *e == cur).unwrap();
            a["monoid"]["table"][i][j] = json!(elements[(pos + 1) % n]);
            out.push((format!("monoid-table [{i},{j}]"), m));
        }
    }
    let cat = &action["category"];
    let objs: Vec<String> = cat["objects"].as_array().unwrap().iter().map(|o| o.as_str().unwrap().to_string()).collect();
    for g in &elements {
        let f = &action["functors"][g];
        for x in &objs {
            for y in &objs {
                let fx = f["objects"][x].as_str().unwrap();
                let fy = f["objects"][y].as_str().unwrap();
                let Some(degs) = cat["homs"][format!("{x}|{y}")].as_object() else { continue };
                for (d, src) in degs {
                    let cols = src.as_array().unwrap().len();
                    let rows = cat["homs"][format!("{fx}|{fy}")][d].as_array().map_or(0, Vec::len);
                    let mut path: Vec<String> = at.iter().map(|s| s.to_string()).collect();
                    path.extend(["functors".into(), g.clone(), "homs".into(), format!("{x}|{y}"), d.clone()]);
                    matrix_entry_mutants(doc, &path, rows, cols, &format!("action {g} {x}|{y} deg {d}"), field, out);
                }
            }
        }
    }
}

/// Single-constant mutants of a fixture document, each with a description
/// whose first word names the table it perturbs.
pub fn mutants(doc: &Value) -> Vec<(String, Value)> {
    let field = doc["field"].clone();
    let mut out = Vec::new();
    match doc["kind"].as_str() {
        Some("dgcat") => category_mutants(doc, &[], &field, &mut out),
        Some("action") => action_mutants(doc, &[], &field, true, &mut out),
        Some("complex") => {
            let dims = doc["dims"].as_object().unwrap();
            let dim = |d: i64| dims.get(&d.to_string()).and_then(Value::as_u64).unwrap_or(0) as usize;
            for d in dims.keys().map(|d| d.parse::<i64>().unwrap()) {
                let path = vec!["differential".to_string(), d.to_string()];
                matrix_entry_mutants(doc, &path, dim(d - 1), dim(d), &format!("differential deg {d}"), &field, &mut out);
            }
        }
        Some("equivariant") => {
            let n = doc["module"]["dim"].as_u64().unwrap() as usize;
            for b in doc["module"]["action"].as_object().unwrap().keys() {
                let path = vec!["module".to_string(), "action".to_string(), b.clone()];
                matrix_entry_mutants(doc, &path, n, n, &format!("module A_{b}"), &field, &mut out);
            }
            for g in doc["u"].as_object().unwrap().keys() {
                let path = vec!["u".to_string(), g.clone()];
                matrix_entry_mutants(doc, &path, n, n, &format!("module u_{g}"), &field, &mut out);
            }
        }
        _ => {}
    }
    out
}
