//! Run reports, error classification and fixture path resolution.

use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};
use skewcat::{Error, Report, Violation};

pub const FIXTURES_ENV: &str = "SKEWCAT_FIXTURES";

/// The fixtures directory: `$SKEWCAT_FIXTURES`, else the one in the repository.
pub fn fixtures_dir() -> PathBuf {
    match std::env::var_os(FIXTURES_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"),
    }
}

/// Paths that do not exist as given are looked up in the fixtures directory.
pub fn resolve(path: &Path) -> PathBuf {
    if path.exists() || path.is_absolute() {
        return path.to_path_buf();
    }
    let candidate = fixtures_dir().join(path);
    if candidate.exists() {
        candidate
    } else {
        path.to_path_buf()
    }
}

pub fn read_json(path: &Path) -> Result<Value, Failure> {
    let p = resolve(path);
    let text = std::fs::read_to_string(&p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
}

/// Why a command stopped early.
#[derive(Debug)]
pub enum Failure {
    /// Bad input or usage; exit 2.
    Usage(String),
    /// The inputs are well-formed but violate a hypothesis or an axiom; exit 1.
    Semantic(Report),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let axiom = match &e {
            Error::Invalid(r) | Error::InvalidComplex(r) => return Failure::Semantic(r.clone()),
            Error::Hypothesis(_) => "hypothesis",
            Error::NotAGroup(_) => "not_a_group",
            Error::NotAnAlgebra(_) => "not_an_algebra",
            Error::Mismatch(_) => "mismatch",
            Error::FieldMismatch { .. } => "field_mismatch",
            _ => return Failure::Usage(e.to_string()),
        };
        let mut r = Report::new();
        r.push(Violation::new(axiom, [e.to_string()]));
        Failure::Semantic(r)
    }
}

/// What a successful command produced.
#[derive(Default)]
pub struct Outcome {
    pub report: Report,
    /// Named output documents.
    pub documents: Vec<(String, Value)>,
    /// Machine-readable results that are not documents (tables, counts).
    pub data: Map<String, Value>,
    /// Human-readable lines.
    pub lines: Vec<String>,
}

impl Outcome {
    pub fn document(&mut self, name: &str, v: Value) {
        self.documents.push((name.to_string(), v));
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }
}

pub struct RunReport {
    command: &'static str,
    status: &'static str,
    violations: Vec<Violation>,
    outputs: Map<String, Value>,
    error: Option<String>,
    lines: Vec<String>,
}

impl RunReport {
    pub fn finish(command: &'static str, outcome: Result<Outcome, Failure>, out_dir: Option<&Path>) -> Self {
        let mut r = RunReport {
            command,
            status: "ok",
            violations: Vec::new(),
            outputs: Map::new(),
            error: None,
            lines: Vec::new(),
        };
        match outcome {
            Err(Failure::Usage(msg)) => {
                r.status = "error";
                r.error = Some(msg);
            }
            Err(Failure::Semantic(rep)) => {
                r.status = "violations";
                r.violations = rep.violations;
            }
            Ok(o) => {
                r.violations = o.report.violations;
                if !r.violations.is_empty() {
                    r.status = "violations";
                }
                r.lines = o.lines;
                r.outputs = o.data;
                if let Err(msg) = r.write_documents(o.documents, out_dir) {
                    r.status = "error";
                    r.error = Some(msg);
                }
            }
        }
        r
    }

    fn write_documents(&mut self, docs: Vec<(String, Value)>, out_dir: Option<&Path>) -> Result<(), String> {
        if out_dir.is_none() && !docs.is_empty() {
            let names: Vec<&str> = docs.iter().map(|(n, _)| n.as_str()).collect();
            self.lines
                .push(format!("documents: {} (inline with --json, or use --out-dir)", names.join(", ")));
        }
        for (name, doc) in docs {
            match out_dir {
                None => {
                    self.outputs.insert(name, doc);
                }
                Some(dir) => {
                    std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
                    let path = dir.join(format!("{name}.json"));
                    std::fs::write(&path, skewcat::json::to_pretty(&doc))
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    self.lines.push(format!("wrote {}", path.display()));
                    self.outputs.insert(name, json!(path.display().to_string()));
                }
            }
        }
        Ok(())
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            "ok" => 0,
            "violations" => 1,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "status": self.status,
            "violations": self.violations,
            "outputs": self.outputs,
        });
        if let Some(e) = &self.error {
            v["error"] = json!(e);
        }
        v
    }

    pub fn print(&self, as_json: bool) {
        if as_json {
            print!("{}", skewcat::json::to_pretty(&self.to_json()));
            return;
        }
        for l in &self.lines {
            println!("{l}");
        }
        for v in &self.violations {
            println!("violation {v}");
        }
        if let Some(e) = &self.error {
            eprintln!("error: {e}");
        }
        println!("{}: {}", self.command, self.status);
    }
}
