//! Seeded property suites over the built-in algebras.
//!
//! Trial `t` of a run with seed `s` draws from [`Prng::for_trial`]`(s, t)`, so
//! reports do not depend on the order in which trials execute.

mod gen;
mod prng;
mod suites;

use std::fmt::Debug;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};

pub use gen::{
    gen_element, gen_elements, gen_expr, gen_matrix, gen_ncpoly, gen_nonzero_element, gen_qmatrix, gen_rational,
    gen_tensor, gen_vector, MAX_POLY_TERMS, MAX_WORD_LEN,
};
pub use prng::{split, Prng};

pub const SUITES: [&str; 10] = [
    "biring",
    "duality",
    "reducibility",
    "module-laws",
    "coords",
    "extension",
    "hom-laws",
    "tensor-laws",
    "shifts",
    "diff",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub law: String,
    pub inputs: String,
    pub detail: String,
}

/// Outcome of one suite run. `observations` lists witnesses and identified
/// forms found along the way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub algebra: String,
    pub trials: usize,
    pub seed: u64,
    pub passed: bool,
    pub failures: Vec<Failure>,
    pub observations: Vec<String>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Failures and observations of one trial or of the fixed checks.
#[derive(Debug, Default)]
pub(crate) struct Log {
    label: String,
    failures: Vec<Failure>,
    observations: Vec<String>,
}

impl Log {
    pub(crate) fn new(label: impl Into<String>) -> Self {
        Log {
            label: label.into(),
            ..Log::default()
        }
    }

    pub(crate) fn fail(&mut self, law: &str, inputs: String, detail: String) {
        self.failures.push(Failure {
            law: law.to_string(),
            inputs: format!("{}: {inputs}", self.label),
            detail,
        });
    }

    pub(crate) fn check(&mut self, law: &str, ok: bool, inputs: impl FnOnce() -> String) {
        if !ok {
            self.fail(law, inputs(), "property does not hold".into());
        }
    }

    pub(crate) fn check_eq<T: PartialEq + Debug>(
        &mut self,
        law: &str,
        lhs: Result<T>,
        rhs: Result<T>,
        inputs: impl FnOnce() -> String,
    ) {
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l == r => {}
            (Ok(l), Ok(r)) => self.fail(law, inputs(), format!("left side {l:?}, right side {r:?}")),
            (Err(e), _) | (_, Err(e)) => self.fail(law, inputs(), format!("error: {e}")),
        }
    }

    /// Records the outcome of a fallible check; errors count as failures.
    pub(crate) fn check_ok(&mut self, law: &str, ok: Result<bool>, inputs: impl FnOnce() -> String) {
        match ok {
            Ok(true) => {}
            Ok(false) => self.fail(law, inputs(), "property does not hold".into()),
            Err(e) => self.fail(law, inputs(), format!("error: {e}")),
        }
    }

    pub(crate) fn observe(&mut self, s: impl Into<String>) {
        self.observations.push(s.into());
    }
}

pub(crate) struct Ctx<'a> {
    pub alg: &'a Algebra,
    pub trials: usize,
    pub seed: u64,
    pub dim: Option<usize>,
}

impl Ctx<'_> {
    /// Runs `f` once per trial in parallel, keeping trial order.
    pub(crate) fn run<T: Send>(&self, f: impl Fn(&mut Prng, &mut Log) -> T + Sync) -> Vec<(Log, T)> {
        (0..self.trials)
            .into_par_iter()
            .map(|t| {
                let mut rng = Prng::for_trial(self.seed, t as u64);
                let mut log = Log::new(format!("trial {t}"));
                let out = f(&mut rng, &mut log);
                (log, out)
            })
            .collect()
    }
}

/// Runs one suite. `dim` overrides the suite's default matrix or module size.
pub fn run_suite(name: &str, alg: &Algebra, trials: usize, seed: u64, dim: Option<usize>) -> Result<SuiteReport> {
    if !SUITES.contains(&name) {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    if dim == Some(0) {
        return Err(Error::DimensionMismatch("suite dimension must be at least 1".into()));
    }
    let ctx = Ctx { alg, trials, seed, dim };
    let logs = match name {
        "biring" => suites::biring(&ctx),
        "duality" => suites::duality(&ctx),
        "reducibility" => suites::reducibility(&ctx),
        "module-laws" => suites::module_laws(&ctx),
        "coords" => suites::coords(&ctx),
        "extension" => suites::extension(&ctx),
        "hom-laws" => suites::hom_laws(&ctx),
        "tensor-laws" => suites::tensor_laws(&ctx),
        "shifts" => suites::shifts(&ctx),
        _ => suites::diff(&ctx),
    };
    let mut failures = Vec::new();
    let mut observations = Vec::new();
    for log in logs {
        failures.extend(log.failures);
        observations.extend(log.observations);
    }
    Ok(SuiteReport {
        suite: name.to_string(),
        algebra: alg.name().to_string(),
        trials,
        seed,
        passed: failures.is_empty(),
        failures,
        observations,
    })
}

/// Runs `name`, or every suite in [`SUITES`] order for `all`.
pub fn run_suites(name: &str, alg: &Algebra, trials: usize, seed: u64, dim: Option<usize>) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        SUITES.iter().map(|s| run_suite(s, alg, trials, seed, dim)).collect()
    } else {
        Ok(vec![run_suite(name, alg, trials, seed, dim)?])
    }
}
