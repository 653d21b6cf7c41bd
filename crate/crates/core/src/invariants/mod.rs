//! The two invariants end to end: lambda of an embedded K6 in three-space,
//! the standard suspension embedding, Lambda of an embedded S(K6) in
//! four-space, embedding checks, and randomized invariance trials.

mod fuzz;
mod k6_embedding;
mod suspension;

pub use fuzz::{fuzz_invariance, random_apex_offset, FuzzSummary, TrialOutcome};
pub use k6_embedding::{lambda, moment_curve_k6, random_generic_k6, verify_embedding3, EmbeddedK6};
pub use suspension::{big_lambda, sigma6, verify_embedding4, EmbeddedSuspension, APEX_A, APEX_B};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, DualPair};
use crate::io::Rational;
use crate::linking::LinkingError;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("not an embedding: {} violation(s), first: {}", .0.len(), .0[0])]
    InvalidEmbedding(Vec<Violation>),
    #[error("malformed embedding: {0}")]
    Malformed(String),
    #[error("coordinate bound must be at least 8, got {0}")]
    BoundTooSmall(i64),
    #[error("trials must be at least 1")]
    NoTrials,
    #[error(transparent)]
    Linking(#[from] LinkingError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// One offending pair of cells (or a single bad cell, with `second` empty).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: String,
    pub first: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub second: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.second.is_empty() {
            write!(f, "{}: {}", self.kind, self.first)
        } else {
            write!(f, "{}: {} / {}", self.kind, self.first, self.second)
        }
    }
}

/// Outcome of an embedding check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        VerifyReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    fn into_result(self) -> Result<(), InvariantError> {
        if self.valid {
            Ok(())
        } else {
            Err(InvariantError::InvalidEmbedding(self.violations))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum InvariantName {
    Lambda,
    BigLambda,
}

/// Linking data for one dual pair.
///
/// For lambda only `omega` is set. For Lambda, `omegaTSBar` is the link of
/// `T` with the suspension of `tBar`, `omegaTBarS` the reverse, and
/// `bigOmega` half their absolute sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PairRecord {
    #[serde(flatten)]
    pub pair: DualPair,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none", rename = "omegaTSBar")]
    pub omega_t_s_bar: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none", rename = "omegaTBarS")]
    pub omega_t_bar_s: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub big_omega: Option<Rational>,
    pub retries: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Diagnostics {
    pub retries: u32,
    /// Sum of absolute linking numbers over all pairs (and both directions for Lambda).
    pub abs_sum: i64,
    pub parity_anomaly: bool,
}

/// Per-pair linking numbers plus the mod-2 invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LinkReport {
    pub invariant: InvariantName,
    /// Absent exactly when `diagnostics.parityAnomaly` is set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<u8>,
    pub pairs: Vec<PairRecord>,
    pub diagnostics: Diagnostics,
    pub seed: u64,
    pub tool_version: String,
}

/// Seed for sub-computation `index` of a run seeded with `master`
/// (one splitmix64 step).
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
