use std::fmt;

use serde::{Deserialize, Serialize};

/// Which defining identity a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Shape,
    ParityAdditivity,
    SkewSymmetry,
    Jacobi,
    PmapParity,
    /// `[x^[p], y] = (ad x)^p (y)`
    PmapAdjoint,
    /// order independence of the Jacobson expansion of `(x + y)^[p]`
    PmapAdditivity,
    ModuleGrading,
    ModuleBracket,
    ModuleRestricted,
    /// an associative-algebra identity evaluated in an enveloping algebra
    CommutatorIdentity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
    pub detail: String,
}

/// Every failed instance of an identity; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: Axiom, indices: Vec<usize>, detail: impl Into<String>) {
        self.violations.push(Violation {
            axiom,
            indices,
            detail: detail.into(),
        });
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn into_result(self) -> crate::Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(crate::Error::Validation(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "  {:?} at {:?}: {}", v.axiom, v.indices, v.detail)?;
        }
        Ok(())
    }
}
