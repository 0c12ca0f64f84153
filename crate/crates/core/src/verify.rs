//! Predicate-versus-oracle campaign over every positive graphic sequence in a
//! range of lengths.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::characterize::{potential_verdict, PotentialVerdict};
use crate::error::{DomainError, OracleError};
use crate::graph::TargetPattern;
use crate::oracle::{oracle_potential, OracleConfig, OracleMode, OracleReport};
use crate::sequence::{enumerate_graphic, DegreeSequence};

#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub sequence: DegreeSequence,
    pub predicate_verdict: PotentialVerdict,
    pub oracle_result: OracleReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub target: TargetPattern,
    pub n_min: usize,
    pub n_max: usize,
    pub mode: OracleMode,
    pub sequences_tested: usize,
    pub agreements: usize,
    pub mismatches: Vec<Mismatch>,
    /// Wall time; kept out of the JSON so reports stay byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn verify_range(
    target: &TargetPattern,
    n_min: usize,
    n_max: usize,
    workers: usize,
    mode: OracleMode,
    cfg: &OracleConfig,
) -> Result<VerificationReport, OracleError> {
    if n_min < target.order() || n_min > n_max {
        return Err(DomainError::OutOfRange(format!(
            "need {} <= n_min <= n_max, got n_min = {n_min}, n_max = {n_max}",
            target.order()
        ))
        .into());
    }
    if n_max > cfg.max_n {
        return Err(OracleError::CapExceeded {
            n: n_max,
            cap: cfg.max_n,
        });
    }
    let started = Instant::now();
    let seqs: Vec<DegreeSequence> = (n_min..=n_max)
        .flat_map(|n| enumerate_graphic(n, true))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| OracleError::Precondition(e.to_string()))?;
    let outcomes: Vec<Option<Mismatch>> = pool.install(|| {
        seqs.par_iter()
            .map(|s| compare(s, target, mode, cfg))
            .collect::<Result<_, _>>()
    })?;
    let mismatches: Vec<Mismatch> = outcomes.into_iter().flatten().collect();
    Ok(VerificationReport {
        target: target.clone(),
        n_min,
        n_max,
        mode,
        sequences_tested: seqs.len(),
        agreements: seqs.len() - mismatches.len(),
        mismatches,
        elapsed: started.elapsed(),
    })
}

fn compare(
    seq: &DegreeSequence,
    target: &TargetPattern,
    mode: OracleMode,
    cfg: &OracleConfig,
) -> Result<Option<Mismatch>, OracleError> {
    let verdict = potential_verdict(target, seq)?;
    let outcome = oracle_potential(seq, target, mode, cfg)?;
    if verdict.potential == outcome.is_found() {
        return Ok(None);
    }
    Ok(Some(Mismatch {
        sequence: seq.clone(),
        predicate_verdict: verdict,
        oracle_result: outcome.report(seq, target, mode),
    }))
}
