//! Structured pass/fail reports for the verification routines.
//!
//! Verifiers in this crate do not abort on the first violated property; they
//! evaluate every check and return the full list, so a failing report tells
//! you *everything* that is wrong with the input, not just the first thing.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    /// Human-readable evidence: the witness pair for a distance violation,
    /// the observed vs expected cardinality, and so on.
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Report {
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new() -> Self {
        Report { items: Vec::new() }
    }

    pub fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) -> bool {
        self.items.push(CheckItem {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
        pass
    }

    /// True when every individual check passed.
    pub fn pass(&self) -> bool {
        self.items.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(
                f,
                "[{}] {}: {}",
                if item.pass { "ok" } else { "FAIL" },
                item.name,
                item.detail
            )?;
        }
        write!(
            f,
            "overall: {}",
            if self.pass() { "valid" } else { "INVALID" }
        )
    }
}
