use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{big_lambda, derive_seed, lambda, random_generic_k6, sigma6, InvariantError, LinkReport, TOOL_VERSION};
use crate::geometry::{Point, Point3, Scalar};

/// Coordinate bound for the random bases drawn by the trials.
const BASE_BOUND: i64 = 100;

/// A rational point with coordinates `p/q`, `1 <= q <= 16`, `|p/q| <= 50`.
pub fn random_apex_offset<R: Rng>(rng: &mut R) -> Point3 {
    Point(std::array::from_fn(|_| {
        let q: i64 = rng.gen_range(1..=16);
        let p: i64 = rng.gen_range(-50 * q..=50 * q);
        Scalar::new(BigInt::from(p), BigInt::from(q))
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TrialOutcome {
    pub trial: u64,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub big_lambda: Option<u8>,
    pub parity_anomaly: bool,
    /// Every pair has `|omegaTSBar| = |omegaTBarS| = |omega|` of the base.
    pub pairs_agree: bool,
    pub retries: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// The lambda and Lambda reports behind this trial.
    #[serde(skip)]
    pub reports: Option<(LinkReport, LinkReport)>,
}

impl TrialOutcome {
    pub fn ok(&self) -> bool {
        self.error.is_none() && self.lambda == Some(1) && self.big_lambda == Some(1) && !self.parity_anomaly
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FuzzSummary {
    pub trials: u64,
    pub seed: u64,
    pub lambda_ones: u64,
    pub big_lambda_ones: u64,
    pub parity_anomalies: u64,
    pub pair_agreement_failures: u64,
    pub errors: u64,
    pub retries: u64,
    /// All trials had lambda = 1, Lambda = 1 and no anomaly.
    pub ok: bool,
    pub outcomes: Vec<TrialOutcome>,
    pub tool_version: String,
}

fn run_trial(trial: u64, master: u64) -> TrialOutcome {
    let seed = derive_seed(master, trial);
    let mut outcome = TrialOutcome {
        trial,
        seed,
        lambda: None,
        big_lambda: None,
        parity_anomaly: false,
        pairs_agree: false,
        retries: 0,
        error: None,
        reports: None,
    };
    let run = || -> Result<(LinkReport, LinkReport), InvariantError> {
        let base = random_generic_k6(seed, BASE_BOUND)?;
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, u64::MAX));
        let (a, b) = (random_apex_offset(&mut rng), random_apex_offset(&mut rng));
        let s = sigma6(&base, &a, &b)?;
        Ok((lambda(&base, seed)?, big_lambda(&s, seed)?))
    };
    match run() {
        Ok((l3, l4)) => {
            outcome.lambda = l3.value;
            outcome.big_lambda = l4.value;
            outcome.parity_anomaly = l4.diagnostics.parity_anomaly;
            outcome.pairs_agree = l3.pairs.iter().zip(&l4.pairs).all(|(p3, p4)| {
                let w = p3.omega.map(i64::abs);
                p4.omega_t_s_bar.map(i64::abs) == w && p4.omega_t_bar_s.map(i64::abs) == w
            });
            outcome.retries = l3.diagnostics.retries + l4.diagnostics.retries;
            outcome.reports = Some((l3, l4));
        }
        Err(e) => outcome.error = Some(e.to_string()),
    }
    outcome
}

/// Random bases with random apex offsets: each trial builds the standard
/// suspension embedding and records lambda of the base and Lambda of the
/// suspension. Trial `i` is seeded by `derive_seed(seed, i)`, so the result
/// does not depend on `jobs` (worker threads; `None` uses all cores).
pub fn fuzz_invariance(trials: u64, seed: u64, jobs: Option<usize>) -> Result<FuzzSummary, InvariantError> {
    if trials == 0 {
        return Err(InvariantError::NoTrials);
    }
    let work = || (0..trials).into_par_iter().map(|i| run_trial(i, seed)).collect::<Vec<_>>();
    let outcomes = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    };
    let count = |f: &dyn Fn(&TrialOutcome) -> bool| outcomes.iter().filter(|o| f(o)).count() as u64;
    Ok(FuzzSummary {
        trials,
        seed,
        lambda_ones: count(&|o| o.lambda == Some(1)),
        big_lambda_ones: count(&|o| o.big_lambda == Some(1)),
        parity_anomalies: count(&|o| o.parity_anomaly),
        pair_agreement_failures: count(&|o| o.error.is_none() && !o.pairs_agree),
        errors: count(&|o| o.error.is_some()),
        retries: outcomes.iter().map(|o| o.retries as u64).sum(),
        ok: outcomes.iter().all(TrialOutcome::ok),
        outcomes,
        tool_version: TOOL_VERSION.to_string(),
    })
}
