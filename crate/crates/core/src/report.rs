use std::fmt;

use serde::Serialize;

use crate::hopf::Violation;

/// A named identity checked over basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub violations: Vec<Violation>,
}

impl Check {
    pub fn new(name: impl Into<String>, violations: Vec<Violation>) -> Self {
        Check { name: name.into(), violations }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.checks.push(Check::new(format!("{prefix}{}", c.name), c.violations));
        }
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// First failing check and its first violation.
    pub fn first_failure(&self) -> Option<(&str, &Violation)> {
        self.checks.iter().find_map(|c| c.violations.first().map(|v| (c.name.as_str(), v)))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match c.violations.first() {
                None => writeln!(f, "  pass  {}", c.name)?,
                Some(v) => writeln!(
                    f,
                    "  FAIL  {} at ({}): {} ({} violation(s))",
                    c.name,
                    v.basis.join(", "),
                    v.detail,
                    c.violations.len()
                )?,
            }
        }
        Ok(())
    }
}
