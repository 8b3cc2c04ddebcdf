use std::collections::BTreeSet;
use std::fmt;

/// One failed instance of a named axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub witness: String,
}

/// Outcome of an axiom check: an empty violation list means the input passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, axiom: &str, witness: String) {
        self.violations.push(Violation {
            axiom: axiom.to_string(),
            witness,
        });
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn failing_axioms(&self) -> BTreeSet<&str> {
        self.violations.iter().map(|v| v.axiom.as_str()).collect()
    }

    pub fn count(&self, axiom: &str) -> usize {
        self.violations.iter().filter(|v| v.axiom == axiom).count()
    }

    pub fn passes(&self, axiom: &str) -> bool {
        self.count(axiom) == 0
    }

    pub fn extend(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "({}): {}", v.axiom, v.witness)?;
        }
        Ok(())
    }
}
