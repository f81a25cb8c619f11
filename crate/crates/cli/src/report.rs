//! Versioned machine-readable reports.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use supercoh::cohomology::Kind;
use supercoh::sixterm::{Dims, SixTermReport};
use supercoh::superalg::ValidationReport;

use crate::selftest::SuiteResult;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    /// sha256 of the input bytes (or of the canonical catalog text)
    pub input_digest: String,
    pub command: String,
    pub payload: Payload,
}

impl Report {
    pub fn new(command: &str, input: &[u8], payload: Payload) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            input_digest: digest(input),
            command: command.to_string(),
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Validation(ValidationPayload),
    Cohomology(CohomologyPayload),
    SixTerm(Box<SixTermReport>),
    Examples(ExamplesPayload),
    Selftest(SelftestPayload),
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ValidationPayload {
    pub valid: bool,
    pub p: Option<u32>,
    pub algebra_dim: Option<(usize, usize)>,
    pub modules: Vec<String>,
    pub diagnostics: Vec<String>,
    pub failures: Vec<(String, ValidationReport)>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CohomologyPayload {
    pub algebra: String,
    pub module: String,
    pub p: u32,
    pub kind: Kind,
    pub degree: usize,
    pub dim: usize,
    pub cocycles_dim: usize,
    pub coboundaries_dim: usize,
    /// label of each coordinate of a cochain
    pub cochain_basis: Vec<String>,
    pub representatives: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExampleSummary {
    pub id: String,
    pub p: u32,
    pub dims: Dims,
    pub ranks: Vec<usize>,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExamplesPayload {
    pub entries: Vec<ExampleSummary>,
    pub all_exact: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SelftestPayload {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
    pub passed: bool,
}
