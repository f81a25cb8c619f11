use serde::{Deserialize, Serialize};

use crate::gflin::MatGF;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub h1s: usize,
    pub h1: usize,
    /// `dim S(g₀, M₀^g)`
    pub s1: usize,
    pub h2s: usize,
    pub h2: usize,
    /// `dim S(g₀, H¹)`
    pub starget: usize,
}

impl Dims {
    pub fn as_tuple(&self) -> (usize, usize, usize, usize, usize, usize) {
        (self.h1s, self.h1, self.s1, self.h2s, self.h2, self.starget)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SixTermMaps {
    pub i1: MatGF,
    pub psibar: MatGF,
    pub fg: MatGF,
    pub pi: MatGF,
    pub phi: MatGF,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub i1_injective: bool,
    pub exact_at_h1: bool,
    pub exact_at_s: bool,
    pub exact_at_h2s: bool,
    pub exact_at_h2: bool,
    pub composites_zero: bool,
}

impl Verdicts {
    pub fn all(&self) -> bool {
        self.i1_injective
            && self.exact_at_h1
            && self.exact_at_s
            && self.exact_at_h2s
            && self.exact_at_h2
            && self.composites_zero
    }
}

/// A vector showing where exactness breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub node: String,
    pub kind: String,
    pub vector: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Telemetry {
    pub u_dim: usize,
    pub lie_cochain_dims: Vec<usize>,
    pub bar_cochain_dims: Vec<usize>,
    pub bar_delta_nnz: Vec<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub setup_ms: f64,
    pub i1_ms: f64,
    pub psibar_ms: f64,
    pub fg_ms: f64,
    pub pi_ms: f64,
    pub phi_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SixTermReport {
    pub algebra: String,
    pub module: String,
    pub p: u32,
    pub dims: Dims,
    /// ranks of i1, Ψ̄, F∘G, π, Φ
    pub ranks: Vec<usize>,
    /// `h1s − h1 + s1 − h2s + h2 = rank Φ`
    pub euler_consistent: bool,
    pub maps: SixTermMaps,
    pub verdicts: Verdicts,
    pub witnesses: Vec<Witness>,
    pub telemetry: Telemetry,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl SixTermReport {
    pub fn all_exact(&self) -> bool {
        self.verdicts.all()
    }
}
