//! Violation reports produced by the axiom validators.

use std::fmt;

use serde::{Deserialize, Serialize};

/// One failed axiom instance together with the labels that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<String>,
}

impl Violation {
    pub fn new<I, S>(axiom: impl Into<String>, witness: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Violation {
            axiom: axiom.into(),
            witness: witness.into_iter().map(Into::into).collect(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: [{}]", self.axiom, self.witness.join(", "))
    }
}

/// An ordered list of violations. Empty means every checked axiom holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn violation<I, S>(&mut self, axiom: &str, witness: I)
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.violations.push(Violation::new(axiom, witness));
    }

    /// Appends another report, prefixing each axiom name with `scope`.
    pub fn absorb(&mut self, scope: &str, other: Report) {
        for mut v in other.violations {
            v.axiom = format!("{scope}.{}", v.axiom);
            self.violations.push(v);
        }
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> crate::Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(crate::Error::Invalid(self))
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
