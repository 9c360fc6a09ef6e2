use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};

/// One named yes/no outcome.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A list of checks produced by a verifier.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check { name: name.into(), passed, detail: None });
    }

    pub fn push_detail(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: Some(detail.into()) });
    }

    /// Appends the checks of `other`, prefixing their names.
    pub fn absorb(&mut self, other: Report) {
        for mut c in other.checks {
            c.name = format!("{}: {}", other.title, c.name);
            self.checks.push(c);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// Turns a report with failures into `Error::Verification`.
    pub fn into_result(self) -> Result<Report> {
        if self.all_passed() {
            Ok(self)
        } else {
            let names: Vec<String> = self.failures().iter().map(|c| c.name.clone()).collect();
            Err(Error::Verification(format!("{}: {}", self.title, names.join(", "))))
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            match &c.detail {
                Some(d) => writeln!(f, "  [{tag}] {} ({d})", c.name)?,
                None => writeln!(f, "  [{tag}] {}", c.name)?,
            }
        }
        Ok(())
    }
}
