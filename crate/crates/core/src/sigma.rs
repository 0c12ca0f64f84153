//! Brute-force `sigma(H, n)`: the smallest even `s` such that every positive
//! graphic `n`-term sequence with sum at least `s` is potentially `H`-graphic.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::characterize::potential_verdict;
use crate::error::{DomainError, OracleError};
use crate::graph::TargetPattern;
use crate::oracle::{oracle_potential, OracleConfig, OracleMode};
use crate::sequence::{enumerate_graphic, DegreeSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SigmaMethod {
    #[default]
    Predicate,
    Oracle,
}

impl fmt::Display for SigmaMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SigmaMethod::Predicate => "predicate",
            SigmaMethod::Oracle => "oracle",
        })
    }
}

impl FromStr for SigmaMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "predicate" => Ok(SigmaMethod::Predicate),
            "oracle" => Ok(SigmaMethod::Oracle),
            _ => Err(format!("unknown method `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaResult {
    pub target: TargetPattern,
    pub n: usize,
    pub sigma: u64,
    /// Lexicographically largest failing sequence of maximum sum; absent when
    /// every sequence is potentially `H`-graphic.
    pub extremal: Option<DegreeSequence>,
    pub method: SigmaMethod,
    pub sequences_scanned: usize,
    /// True when no failing sequence exists and `sigma` is the smallest even
    /// sum in the scan.
    pub degenerate: bool,
}

/// Scans every positive graphic `n`-term sequence. The oracle method runs the
/// exhaustive realization search on each sequence, in parallel.
pub fn sigma_value(
    target: &TargetPattern,
    n: usize,
    method: SigmaMethod,
    cfg: &OracleConfig,
) -> Result<SigmaResult, OracleError> {
    if n < target.order() {
        return Err(DomainError::OutOfRange(format!(
            "n = {n} is below the pattern order {}",
            target.order()
        ))
        .into());
    }
    if method == SigmaMethod::Oracle && n > cfg.max_n {
        return Err(OracleError::CapExceeded { n, cap: cfg.max_n });
    }
    let seqs: Vec<DegreeSequence> = enumerate_graphic(n, true).collect();
    let failing: Vec<bool> = match method {
        SigmaMethod::Predicate => seqs
            .iter()
            .map(|s| potential_verdict(target, s).map(|v| !v.potential))
            .collect::<Result<_, _>>()?,
        SigmaMethod::Oracle => seqs
            .par_iter()
            .map(|s| {
                oracle_potential(s, target, OracleMode::Exhaustive, cfg).map(|o| !o.is_found())
            })
            .collect::<Result<_, _>>()?,
    };
    // Sequences arrive in lexicographically decreasing order, so the first
    // maximum seen is the lexicographically largest one.
    let mut extremal: Option<&DegreeSequence> = None;
    for (s, &fails) in seqs.iter().zip(&failing) {
        if fails && extremal.is_none_or(|e| s.sum() > e.sum()) {
            extremal = Some(s);
        }
    }
    let (sigma, degenerate) = match extremal {
        Some(e) => (e.sum() + 2, false),
        None => {
            let min_even = seqs
                .iter()
                .map(|s| s.sum())
                .filter(|s| s % 2 == 0)
                .min()
                .unwrap_or(0);
            (min_even, true)
        }
    };
    Ok(SigmaResult {
        target: target.clone(),
        n,
        sigma,
        extremal: extremal.cloned(),
        method,
        sequences_scanned: seqs.len(),
        degenerate,
    })
}

/// The sequence certifying the lower bound on `sigma(H, n)`:
/// `((n-1)^2, 4^3, 3^{n-5})` (odd `n`) or `((n-1)^2, 4^3, 3^{n-6}, 2)` (even `n`)
/// for `K_{3,3}`, `n >= 11`; `((n-1)^3, 3^{n-3})` for `K_6 - C_6`, `n >= 6`.
pub fn extremal_sequence(target: &TargetPattern, n: usize) -> Result<DegreeSequence, DomainError> {
    let top = n as u32 - 1;
    match target {
        TargetPattern::K33 if n >= 11 => {
            let mut v = vec![top, top, 4, 4, 4];
            if n % 2 == 1 {
                v.extend(std::iter::repeat_n(3, n - 5));
            } else {
                v.extend(std::iter::repeat_n(3, n - 6));
                v.push(2);
            }
            Ok(DegreeSequence::new(v))
        }
        TargetPattern::K6MinusC6 if n >= 6 => {
            let mut v = vec![top; 3];
            v.extend(std::iter::repeat_n(3, n - 3));
            Ok(DegreeSequence::new(v))
        }
        TargetPattern::K33 | TargetPattern::K6MinusC6 => Err(DomainError::OutOfRange(format!(
            "no extremal sequence for {target} at n = {n}"
        ))),
        _ => Err(DomainError::NoCharacterization(target.to_string())),
    }
}

/// Closed form of `sigma(H, n)`, where one is claimed.
pub fn sigma_closed_form(target: &TargetPattern, n: usize) -> Option<u64> {
    let n64 = n as u64;
    match target {
        TargetPattern::K33 if n >= 11 => Some(if n % 2 == 1 { 5 * n64 - 3 } else { 5 * n64 - 4 }),
        TargetPattern::K6MinusC6 if n >= 6 => Some(6 * n64 - 10),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaCheck {
    pub target: TargetPattern,
    pub n: usize,
    pub computed: u64,
    /// `None` when no closed form is claimed at this `n`.
    pub closed_form: Option<u64>,
    pub holds: Option<bool>,
    pub note: Option<String>,
}

/// Compares the predicate scan with the closed form.
pub fn check_sigma_formula(target: &TargetPattern, n: usize) -> Result<FormulaCheck, OracleError> {
    match target {
        TargetPattern::K33 | TargetPattern::K6MinusC6 => {}
        _ => {
            return Err(
                DomainError::NoCharacterization(format!("{target} has no closed form")).into(),
            )
        }
    }
    let computed = sigma_value(target, n, SigmaMethod::Predicate, &OracleConfig::default())?.sigma;
    let closed_form = sigma_closed_form(target, n);
    Ok(FormulaCheck {
        target: target.clone(),
        n,
        computed,
        closed_form,
        holds: closed_form.map(|c| c == computed),
        note: closed_form
            .is_none()
            .then(|| format!("closed form not claimed for {target} at n = {n}")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characterize::potential_verdict;

    #[test]
    fn extremal_examples() {
        let e = extremal_sequence(&TargetPattern::K33, 11).unwrap();
        assert_eq!(e.to_string(), "10^2 4^3 3^6");
        assert_eq!(e.sum(), 50);
        let e = extremal_sequence(&TargetPattern::K33, 12).unwrap();
        assert_eq!(e.to_string(), "11^2 4^3 3^6 2");
        assert_eq!(e.sum(), 54);
        let e = extremal_sequence(&TargetPattern::K6MinusC6, 6).unwrap();
        assert_eq!(e.to_string(), "5^3 3^3");
        assert_eq!(e.sum(), 24);
        assert!(extremal_sequence(&TargetPattern::K33, 10).is_err());
        assert!(extremal_sequence(&TargetPattern::K6MinusC6, 5).is_err());
        assert!(extremal_sequence(&TargetPattern::K23, 8).is_err());
    }

    #[test]
    fn sigma_k6c6_n6() {
        let r = sigma_value(
            &TargetPattern::K6MinusC6,
            6,
            SigmaMethod::Predicate,
            &OracleConfig::default(),
        )
        .unwrap();
        assert_eq!(r.sigma, 26);
        assert_eq!(r.extremal.unwrap().to_string(), "5^3 3^3");
        assert!(!r.degenerate);
    }

    #[test]
    fn formula_checks() {
        let c = check_sigma_formula(&TargetPattern::K6MinusC6, 8).unwrap();
        assert_eq!(c.holds, Some(true));
        let c = check_sigma_formula(&TargetPattern::K33, 8).unwrap();
        assert_eq!(c.holds, None);
        assert!(c.note.is_some());
        assert!(check_sigma_formula(&TargetPattern::K23, 8).is_err());
    }

    #[test]
    fn sigma_preconditions() {
        let cfg = OracleConfig::default();
        assert!(sigma_value(&TargetPattern::K33, 5, SigmaMethod::Predicate, &cfg).is_err());
        assert!(matches!(
            sigma_value(&TargetPattern::K33, 11, SigmaMethod::Oracle, &cfg),
            Err(OracleError::CapExceeded { .. })
        ));
    }

    #[test]
    fn extremal_fails_predicate() {
        for n in 6..=16 {
            let e = extremal_sequence(&TargetPattern::K6MinusC6, n).unwrap();
            assert!(e.is_graphic());
            assert!(
                !potential_verdict(&TargetPattern::K6MinusC6, &e)
                    .unwrap()
                    .potential
            );
        }
        for n in 11..=16 {
            let e = extremal_sequence(&TargetPattern::K33, n).unwrap();
            assert!(e.is_graphic());
            assert!(
                !potential_verdict(&TargetPattern::K33, &e)
                    .unwrap()
                    .potential
            );
        }
    }
}
