//! Named certificate suites, their reports, and structure-constant tables.

mod checks;
mod tables;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use tables::{export_tables, write_tables, TableKind, TableRow};

/// Every check name understood by [`run_check`], in default suite order.
pub const CHECK_NAMES: &[&str] = &[
    "hecke-relations",
    "trho",
    "module-axioms",
    "zeta-relations",
    "coproduct-lemma",
    "canonical-basis",
    "ke-shift",
    "iota-cb",
    "ke3",
    "thm-A1",
    "thm-A2",
    "cor-39",
    "positivity",
    "f-consistency",
    "thm-42",
];

/// Parameters shared by all checks. `None` selects the check's own default range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckParams {
    pub n: Option<usize>,
    pub big_n: Option<usize>,
    pub r: Option<usize>,
    pub rp: Option<usize>,
    pub rpp: Option<usize>,
    pub kmin: i64,
    pub kmax: i64,
    pub spread: Option<usize>,
    pub seed: u64,
    pub samples: usize,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams { n: None, big_n: None, r: None, rp: None, rpp: None, kmin: -2, kmax: 2, spread: None, seed: 0, samples: 150 }
    }
}

impl CheckParams {
    pub(crate) fn ns(&self, default: &[usize]) -> Vec<usize> {
        self.n.map_or_else(|| default.to_vec(), |n| vec![n])
    }

    pub(crate) fn ranks(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.r.map_or_else(|| (lo..=hi).collect(), |r| vec![r])
    }

    /// Splits `r = r' + r''` allowed by the `rp` / `rpp` flags.
    pub(crate) fn splits(&self, r: usize) -> Vec<usize> {
        (0..=r)
            .filter(|&rp| self.rp.is_none_or(|x| x == rp) && self.rpp.is_none_or(|x| x == r - rp))
            .collect()
    }

    pub(crate) fn spread_or(&self, default: usize) -> usize {
        self.spread.unwrap_or(default)
    }

    pub(crate) fn big_n_or(&self, default: usize) -> usize {
        self.big_n.unwrap_or(default)
    }

    pub(crate) fn ks(&self) -> Vec<i64> {
        (self.kmin..=self.kmax).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: serde_json::Value,
    pub status: Status,
    /// A case count when passing; concrete counterexamples when failing.
    pub witnesses: Vec<serde_json::Value>,
    pub millis: u128,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Failing cases kept in a report.
const MAX_WITNESSES: usize = 20;

/// Counts cases and keeps the first failures.
#[derive(Default)]
pub(crate) struct Tally {
    cases: usize,
    failures: usize,
    witnesses: Vec<serde_json::Value>,
}

impl Tally {
    pub(crate) fn record(&mut self, ok: bool, witness: impl FnOnce() -> serde_json::Value) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    pub(crate) fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failures += other.failures;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
    }
}

/// Runs the named check.
pub fn run_check(name: &str, params: &CheckParams) -> Result<CheckReport> {
    let start = Instant::now();
    let (resolved, tally) = checks::dispatch(name, params)?;
    let status = if tally.failures > 0 {
        Status::Fail
    } else if tally.cases == 0 {
        Status::Skipped
    } else {
        Status::Pass
    };
    let witnesses = match status {
        Status::Fail => tally.witnesses,
        _ => vec![serde_json::json!({ "cases": tally.cases })],
    };
    Ok(CheckReport { check: name.to_string(), params: resolved, status, witnesses, millis: start.elapsed().as_millis() })
}

/// Runs several checks concurrently; reports come back in the order given.
pub fn run_checks(names: &[&str], params: &CheckParams) -> Result<Vec<CheckReport>> {
    use rayon::prelude::*;
    if let Some(bad) = names.iter().find(|n| !CHECK_NAMES.contains(n)) {
        return Err(Error::UnknownCheck(bad.to_string()));
    }
    names.par_iter().map(|n| run_check(n, params)).collect()
}
