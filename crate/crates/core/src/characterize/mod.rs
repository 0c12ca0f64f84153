//! Characterization predicates for potentially `H`-graphic sequences.
//!
//! Each predicate evaluates every printed condition (no short-circuit) and
//! reports all violations with the parameters under which they occur.

pub mod shape;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::DomainError;
use crate::graph::TargetPattern;
use crate::sequence::DegreeSequence;
use shape::{Bindings, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// `K_{2,3}`
    K23,
    /// `K_5 - P_4`
    K5P4,
    /// `K_{3,3}`
    K33,
    /// `K_6 - C_6`
    K6C6,
}

impl Theorem {
    pub fn label(self) -> &'static str {
        match self {
            Theorem::K23 => "T2.3",
            Theorem::K5P4 => "T2.4",
            Theorem::K33 => "T3.1",
            Theorem::K6C6 => "T3.2",
        }
    }

    pub fn conditions(self) -> u8 {
        match self {
            Theorem::K23 => 3,
            Theorem::K5P4 => 4,
            Theorem::K33 | Theorem::K6C6 => 9,
        }
    }

    pub fn min_len(self) -> usize {
        match self {
            Theorem::K23 | Theorem::K5P4 => 5,
            Theorem::K33 | Theorem::K6C6 => 6,
        }
    }

    pub fn for_target(target: &TargetPattern) -> Option<Theorem> {
        match target {
            TargetPattern::K23 => Some(Theorem::K23),
            TargetPattern::K5MinusP4 => Some(Theorem::K5P4),
            TargetPattern::K33 => Some(Theorem::K33),
            TargetPattern::K6MinusC6 => Some(Theorem::K6C6),
            TargetPattern::Custom(_) => None,
        }
    }
}

impl Serialize for Theorem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// A violated condition and the family parameters it was matched with.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ConditionId {
    pub theorem: Theorem,
    pub condition: u8,
    pub bindings: BTreeMap<String, i64>,
}

impl ConditionId {
    fn new(theorem: Theorem, condition: u8, bindings: &[(&str, i64)]) -> Self {
        ConditionId {
            theorem,
            condition,
            bindings: bindings.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }

    fn from_family(f: &Family, b: &Bindings, extra: &[(&str, i64)]) -> Self {
        let mut bindings: BTreeMap<String, i64> =
            b.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        for &(k, v) in extra {
            bindings.insert(k.to_string(), v);
        }
        ConditionId {
            theorem: f.theorem,
            condition: f.condition,
            bindings,
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.theorem.label(), self.condition)?;
        for (k, v) in &self.bindings {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PotentialVerdict {
    pub potential: bool,
    pub violated: Vec<ConditionId>,
}

impl PotentialVerdict {
    fn from_violations(violated: Vec<ConditionId>) -> Self {
        PotentialVerdict {
            potential: violated.is_empty(),
            violated,
        }
    }
}

fn check_domain(seq: &DegreeSequence, theorem: Theorem) -> Result<(), DomainError> {
    if seq.len() < theorem.min_len() {
        return Err(DomainError::TooShort {
            n: seq.len(),
            min: theorem.min_len(),
        });
    }
    if !seq.is_positive() {
        return Err(DomainError::ZeroTerm(seq.to_string()));
    }
    if !seq.is_graphic() {
        return Err(DomainError::NotGraphic(seq.to_string()));
    }
    Ok(())
}

/// Violations of an exclusion list or family: every match is a violation.
fn excluded(out: &mut Vec<ConditionId>, families: &[Family], terms: &[u32], tag_entries: bool) {
    for (idx, f) in families.iter().enumerate() {
        for b in f.match_terms(terms) {
            let extra: &[(&str, i64)] = if tag_entries {
                &[("entry", idx as i64 + 1)]
            } else {
                &[]
            };
            out.push(ConditionId::from_family(f, &b, extra));
        }
    }
}

/// Violations of a "shape implies inequality" condition.
fn implied(
    out: &mut Vec<ConditionId>,
    f: &Family,
    terms: &[u32],
    extra: &[(&str, i64)],
    holds: impl Fn(i64, &Bindings) -> bool,
) {
    let n = terms.len() as i64;
    for b in f.match_terms(terms) {
        if !holds(n, &b) {
            out.push(ConditionId::from_family(f, &b, extra));
        }
    }
}

fn b(bind: &Bindings, key: &str) -> i64 {
    bind[key]
}

pub fn is_potentially_k23(seq: &DegreeSequence) -> Result<PotentialVerdict, DomainError> {
    check_domain(seq, Theorem::K23)?;
    let t = Theorem::K23;
    let n = seq.len() as u32;
    let d = |i| seq.d(i);
    let mut v = Vec::new();
    if !(d(2) >= 3 && d(5) >= 2) {
        v.push(ConditionId::new(t, 1, &[]));
    }
    if d(1) == n - 1 && d(2) == 3 && d(5) != 3 {
        v.push(ConditionId::new(t, 2, &[]));
    }
    excluded(&mut v, &shape::K23_EXCEPTIONS, seq.terms(), true);
    Ok(PotentialVerdict::from_violations(v))
}

pub fn is_potentially_k5p4(seq: &DegreeSequence) -> Result<PotentialVerdict, DomainError> {
    check_domain(seq, Theorem::K5P4)?;
    let t = Theorem::K5P4;
    let d = |i| seq.d(i);
    let mut v = Vec::new();
    if !(d(2) >= 3 && d(5) >= 2) {
        v.push(ConditionId::new(t, 1, &[]));
    }
    excluded(
        &mut v,
        std::slice::from_ref(&shape::K5P4_FAMILY_2),
        seq.terms(),
        false,
    );
    excluded(
        &mut v,
        std::slice::from_ref(&shape::K5P4_FAMILY_3),
        seq.terms(),
        false,
    );
    excluded(&mut v, &shape::K5P4_EXCEPTIONS, seq.terms(), true);
    Ok(PotentialVerdict::from_violations(v))
}

/// Conditions (1), (2), (5) and the index bookkeeping of (3), (4), which
/// the two cubic characterizations share up to their conclusions.
struct CubicCommon<'a> {
    seq: &'a DegreeSequence,
    n: i64,
}

impl CubicCommon<'_> {
    fn d(&self, i: i64) -> i64 {
        if i < 1 {
            return 0;
        }
        self.seq.d(i as usize) as i64
    }

    /// (1) `d_6 >= 3`.
    fn cond1(&self, t: Theorem, out: &mut Vec<ConditionId>) {
        if self.d(6) < 3 {
            out.push(ConditionId::new(t, 1, &[]));
        }
    }

    /// (2) `d_1 = n - i` implies `d_{4-i} >= 4`, `i = 1, 2`.
    fn cond2(&self, t: Theorem, out: &mut Vec<ConditionId>) {
        for i in 1..=2 {
            if self.d(1) == self.n - i && self.d(4 - i) < 4 {
                out.push(ConditionId::new(t, 2, &[("i", i)]));
            }
        }
    }

    /// Premise of (4): `d_1 + d_2 = 2n - i`, `d_{n-i+3} = 1`, `3 <= i <= n-4`.
    fn premise4(&self) -> Option<i64> {
        let i = 2 * self.n - self.d(1) - self.d(2);
        (3 <= i && i <= self.n - 4 && self.d(self.n - i + 3) == 1).then_some(i)
    }

    /// (5): `d_1 + d_2 = 2n - i` and `d_{n-i+4} = 1` (`4 <= i <= n-3`)
    /// implies `d_3 >= 4`.
    fn cond5(&self, t: Theorem, out: &mut Vec<ConditionId>) {
        let i = 2 * self.n - self.d(1) - self.d(2);
        if 4 <= i && i <= self.n - 3 && self.d(self.n - i + 4) == 1 && self.d(3) < 4 {
            out.push(ConditionId::new(t, 5, &[("i", i)]));
        }
    }
}

pub fn is_potentially_k33(seq: &DegreeSequence) -> Result<PotentialVerdict, DomainError> {
    check_domain(seq, Theorem::K33)?;
    let t = Theorem::K33;
    let c = CubicCommon {
        seq,
        n: seq.len() as i64,
    };
    let terms = seq.terms();
    let mut v = Vec::new();
    c.cond1(t, &mut v);
    c.cond2(t, &mut v);
    // (3)
    if c.d(2) == c.n - 1 && !(c.d(3) >= 5 || c.d(6) >= 4) {
        v.push(ConditionId::new(t, 3, &[]));
    }
    // (4)
    if let Some(i) = c.premise4() {
        if !(c.d(3) >= 5 || c.d(6) >= 4) {
            v.push(ConditionId::new(t, 4, &[("i", i)]));
        }
    }
    c.cond5(t, &mut v);
    // (6)
    implied(
        &mut v,
        &shape::K33_FAMILY_6A,
        terms,
        &[("shape", 1)],
        |n, bb| b(bb, "d1") + b(bb, "d2") <= n + b(bb, "t") + 2,
    );
    implied(
        &mut v,
        &shape::K33_FAMILY_6B,
        terms,
        &[("shape", 2)],
        |n, bb| b(bb, "d1") + b(bb, "d2") <= n + b(bb, "t") + 2,
    );
    // (7)
    implied(&mut v, &shape::K33_FAMILY_7, terms, &[], |n, bb| {
        b(bb, "d1") + b(bb, "d2") <= n + b(bb, "t") + 3
    });
    // (8), (9)
    excluded(
        &mut v,
        std::slice::from_ref(&shape::K33_FAMILY_8),
        terms,
        false,
    );
    excluded(&mut v, &shape::K33_EXCEPTIONS, terms, true);
    Ok(PotentialVerdict::from_violations(v))
}

pub fn is_potentially_k6c6(seq: &DegreeSequence) -> Result<PotentialVerdict, DomainError> {
    check_domain(seq, Theorem::K6C6)?;
    let t = Theorem::K6C6;
    let c = CubicCommon {
        seq,
        n: seq.len() as i64,
    };
    let terms = seq.terms();
    let mut v = Vec::new();
    c.cond1(t, &mut v);
    c.cond2(t, &mut v);
    // (3)
    if c.d(2) == c.n - 1 && c.d(4) < 4 {
        v.push(ConditionId::new(t, 3, &[]));
    }
    // (4)
    if let Some(i) = c.premise4() {
        if c.d(4) < 4 {
            v.push(ConditionId::new(t, 4, &[("i", i)]));
        }
    }
    c.cond5(t, &mut v);
    // (6)
    implied(&mut v, &shape::K6C6_FAMILY_6, terms, &[], |n, bb| {
        b(bb, "d1") + b(bb, "d2") + b(bb, "d3") <= n + 2 * b(bb, "k") + b(bb, "t") + 1
    });
    // (7)
    implied(&mut v, &shape::K6C6_FAMILY_7, terms, &[], |n, bb| {
        b(bb, "d1") + b(bb, "d2") <= n + b(bb, "t") + 2
    });
    // (8), (9)
    excluded(
        &mut v,
        std::slice::from_ref(&shape::K6C6_FAMILY_8),
        terms,
        false,
    );
    excluded(&mut v, &shape::K6C6_EXCEPTIONS, terms, true);
    Ok(PotentialVerdict::from_violations(v))
}

pub fn predicate_for(
    theorem: Theorem,
    seq: &DegreeSequence,
) -> Result<PotentialVerdict, DomainError> {
    match theorem {
        Theorem::K23 => is_potentially_k23(seq),
        Theorem::K5P4 => is_potentially_k5p4(seq),
        Theorem::K33 => is_potentially_k33(seq),
        Theorem::K6C6 => is_potentially_k6c6(seq),
    }
}

/// Verdict for a named target; custom targets have no characterization.
pub fn potential_verdict(
    target: &TargetPattern,
    seq: &DegreeSequence,
) -> Result<PotentialVerdict, DomainError> {
    let theorem = Theorem::for_target(target)
        .ok_or_else(|| DomainError::NoCharacterization(target.to_string()))?;
    predicate_for(theorem, seq)
}

/// The parametric families behind conditions (2)-(9) of `theorem`.
pub fn families(theorem: Theorem) -> Vec<&'static Family> {
    match theorem {
        Theorem::K23 => shape::K23_EXCEPTIONS.iter().collect(),
        Theorem::K5P4 => {
            let mut v = vec![&shape::K5P4_FAMILY_2, &shape::K5P4_FAMILY_3];
            v.extend(shape::K5P4_EXCEPTIONS.iter());
            v
        }
        Theorem::K33 => {
            let mut v = vec![
                &shape::K33_FAMILY_6A,
                &shape::K33_FAMILY_6B,
                &shape::K33_FAMILY_7,
                &shape::K33_FAMILY_8,
            ];
            v.extend(shape::K33_EXCEPTIONS.iter());
            v
        }
        Theorem::K6C6 => {
            let mut v = vec![
                &shape::K6C6_FAMILY_6,
                &shape::K6C6_FAMILY_7,
                &shape::K6C6_FAMILY_8,
            ];
            v.extend(shape::K6C6_EXCEPTIONS.iter());
            v
        }
    }
}

/// Every parameter binding under which `seq` has the shape of `family`.
pub fn match_exceptional_family(seq: &DegreeSequence, family: &Family) -> Vec<Bindings> {
    family.match_terms(seq.terms())
}

/// Re-evaluates one reported violation against `seq`: family conditions must
/// instantiate back to `seq` under the reported bindings, and the condition
/// must still be violated.
pub fn revalidate(seq: &DegreeSequence, id: &ConditionId) -> bool {
    let Ok(verdict) = predicate_for(id.theorem, seq) else {
        return false;
    };
    if !verdict.violated.contains(id) {
        return false;
    }
    let fams = families(id.theorem);
    let family_backed: Vec<_> = fams
        .iter()
        .filter(|f| f.condition == id.condition)
        .collect();
    if family_backed.is_empty() {
        return true;
    }
    family_backed.iter().any(|f| {
        let b: Bindings = f
            .segments
            .iter()
            .flat_map(|s| s.value.params.iter().chain(s.count.params))
            .filter_map(|(name, _)| id.bindings.get(*name).map(|&v| (*name, v)))
            .collect();
        f.instantiate(seq.len(), &b).as_deref() == Some(seq.terms())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    fn conds(v: &PotentialVerdict) -> Vec<(Theorem, u8)> {
        v.violated
            .iter()
            .map(|c| (c.theorem, c.condition))
            .collect()
    }

    #[test]
    fn k23_examples() {
        assert!(is_potentially_k23(&seq("3^2 2^3")).unwrap().potential);
        let v = is_potentially_k23(&seq("3^2 2^4")).unwrap();
        assert_eq!(conds(&v), vec![(Theorem::K23, 3)]);
        let v = is_potentially_k23(&seq("6 3^5 1")).unwrap();
        assert_eq!(conds(&v), vec![(Theorem::K23, 3)]);
        assert_eq!(v.violated[0].bindings["entry"], 4);
    }

    #[test]
    fn k5p4_examples() {
        assert!(is_potentially_k5p4(&seq("3^2 2^3")).unwrap().potential);
        let v = is_potentially_k5p4(&seq("3^2 2^4")).unwrap();
        assert_eq!(conds(&v), vec![(Theorem::K5P4, 4)]);
        let v = is_potentially_k5p4(&seq("5 3 2^4")).unwrap();
        assert_eq!(conds(&v), vec![(Theorem::K5P4, 2)]);
        assert_eq!(v.violated[0].bindings["k"], 3);
        assert_eq!(v.violated[0].bindings["t"], 4);
    }

    #[test]
    fn k33_examples() {
        let v = is_potentially_k33(&seq("4^6")).unwrap();
        assert_eq!(conds(&v), vec![(Theorem::K33, 9)]);
        assert!(is_potentially_k33(&seq("5^6")).unwrap().potential);
        assert!(!is_potentially_k33(&seq("6^2 4^3 3^2")).unwrap().potential);
        // d1 + d2 = 10 = n + t + 2: condition (6) holds with equality.
        assert!(is_potentially_k33(&seq("5^2 3^4 2")).unwrap().potential);
    }

    #[test]
    fn k6c6_examples() {
        assert!(is_potentially_k6c6(&seq("4^6")).unwrap().potential);
        assert!(!is_potentially_k6c6(&seq("6^3 3^4")).unwrap().potential);
        assert!(is_potentially_k6c6(&seq("3^6 2^3")).unwrap().potential);
    }

    #[test]
    fn all_violations_listed() {
        // d6 < 3.
        let v = is_potentially_k33(&seq("3^4 2^2")).unwrap();
        assert!(conds(&v).contains(&(Theorem::K33, 1)));
        let v = is_potentially_k6c6(&seq("5^3 3^3")).unwrap();
        assert!(conds(&v).contains(&(Theorem::K6C6, 3)));
        assert!(conds(&v).contains(&(Theorem::K6C6, 6)));
        for c in &v.violated {
            assert!(revalidate(&seq("5^3 3^3"), c), "{c}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            is_potentially_k33(&seq("3^6 0")),
            Err(DomainError::ZeroTerm(_))
        ));
        assert!(matches!(
            is_potentially_k33(&seq("3^5")),
            Err(DomainError::TooShort { n: 5, min: 6 })
        ));
        assert!(matches!(
            is_potentially_k23(&seq("3^7")),
            Err(DomainError::NotGraphic(_))
        ));
        assert!(matches!(
            is_potentially_k23(&seq("1^4")),
            Err(DomainError::TooShort { .. })
        ));
    }
}
