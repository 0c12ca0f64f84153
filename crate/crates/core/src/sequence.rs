//! Degree sequences: parsing in `r^t` notation, laying off, graphicality.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{LayOffError, ParseError};

/// A non-increasing sequence of nonnegative degrees `(d_1, ..., d_n)`.
///
/// Positions in every public method are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DegreeSequence(Vec<u32>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SequenceStats {
    pub sigma: u64,
    pub m: u32,
    pub h: u32,
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphicMethod {
    #[default]
    ErdosGallai,
    KleitmanWang,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem22 {
    AppliesAndGraphic,
    NotApplicable,
}

impl DegreeSequence {
    /// Sorts `terms` non-increasing.
    pub fn new(mut terms: Vec<u32>) -> Self {
        terms.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(terms)
    }

    pub fn terms(&self) -> &[u32] {
        &self.0
    }

    pub fn into_terms(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `d_i`, 1-based. Positions past the end read as 0.
    pub fn d(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&d| d as u64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&d| d > 0)
    }

    pub fn stats(&self) -> SequenceStats {
        let positive = self.0.iter().copied().filter(|&d| d > 0);
        SequenceStats {
            sigma: self.sum(),
            m: positive.clone().max().unwrap_or(0),
            h: positive.min().unwrap_or(0),
            n: self.len(),
        }
    }

    /// Residual sequence obtained by laying off `d_k`.
    pub fn lay_off(&self, k: usize) -> Result<DegreeSequence, LayOffError> {
        let n = self.len();
        if k == 0 || k > n {
            return Err(LayOffError::OutOfRange { k, n });
        }
        let dk = self.0[k - 1];
        if dk as usize > n - 1 {
            return Err(LayOffError::NotEnoughTerms {
                k,
                degree: dk,
                available: n - 1,
            });
        }
        let mut rest = Vec::with_capacity(n - 1);
        for (idx, &d) in self.0.iter().enumerate() {
            let pos = idx + 1;
            if pos == k {
                continue;
            }
            // d_k >= k: positions 1..k-1 and k+1..d_k+1; otherwise 1..d_k.
            let hit = if dk as usize >= k {
                pos <= dk as usize + 1
            } else {
                pos <= dk as usize
            };
            if hit {
                if d == 0 {
                    return Err(LayOffError::Underflow { k, position: pos });
                }
                rest.push(d - 1);
            } else {
                rest.push(d);
            }
        }
        Ok(DegreeSequence::new(rest))
    }

    /// `lay_off(n)`, the default pivot.
    pub fn lay_off_last(&self) -> Result<DegreeSequence, LayOffError> {
        self.lay_off(self.len())
    }

    pub fn is_graphic(&self) -> bool {
        self.is_graphic_by(GraphicMethod::ErdosGallai)
    }

    pub fn is_graphic_by(&self, method: GraphicMethod) -> bool {
        match method {
            GraphicMethod::ErdosGallai => erdos_gallai(&self.0),
            GraphicMethod::KleitmanWang => kleitman_wang(self),
        }
    }

    pub fn theorem22_check(&self) -> Theorem22 {
        let s = self.stats();
        if (1..=2).contains(&s.m) && s.h == 1 && s.sigma.is_multiple_of(2) {
            Theorem22::AppliesAndGraphic
        } else {
            Theorem22::NotApplicable
        }
    }
}

/// Erdős–Gallai inequalities on a non-increasing slice.
pub fn erdos_gallai(d: &[u32]) -> bool {
    let n = d.len();
    let total: u64 = d.iter().map(|&x| x as u64).sum();
    if total % 2 == 1 {
        return false;
    }
    if n > 0 && d[0] as usize > n - 1 {
        return false;
    }
    let mut prefix = 0u64;
    for k in 1..=n {
        prefix += d[k - 1] as u64;
        let tail: u64 = d[k..].iter().map(|&x| (x as u64).min(k as u64)).sum();
        if prefix > (k as u64) * (k as u64 - 1) + tail {
            return false;
        }
    }
    true
}

fn kleitman_wang(seq: &DegreeSequence) -> bool {
    let mut current = seq.clone();
    while !current.is_empty() {
        match current.lay_off_last() {
            Ok(next) => current = next,
            Err(_) => return false,
        }
    }
    true
}

impl fmt::Display for DegreeSequence {
    /// Compact exponent notation, e.g. `6^2 4^3 3^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let v = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == v {
                j += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if j - i == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl FromStr for DegreeSequence {
    type Err = ParseError;

    /// Whitespace- or comma-separated tokens `d` or `d^t`, any order.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut terms = Vec::new();
        for token in text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, Some(e)),
                None => (token, None),
            };
            let value = parse_number(base, token)?;
            let count = match exp {
                Some(e) => {
                    let t = parse_number(e, token)?;
                    if t == 0 {
                        return Err(ParseError::ZeroExponent(token.to_string()));
                    }
                    t
                }
                None => 1,
            };
            terms.extend(std::iter::repeat_n(value, count as usize));
        }
        if terms.is_empty() {
            return Err(ParseError::Empty);
        }
        Ok(DegreeSequence::new(terms))
    }
}

fn parse_number(part: &str, token: &str) -> Result<u32, ParseError> {
    if part.starts_with('-') {
        return Err(ParseError::Negative(token.to_string()));
    }
    if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::Malformed(token.to_string()));
    }
    part.parse()
        .map_err(|_| ParseError::Malformed(token.to_string()))
}

pub fn parse_sequence(text: &str) -> Result<DegreeSequence, ParseError> {
    text.parse()
}

pub fn format_sequence(seq: &DegreeSequence) -> String {
    seq.to_string()
}

impl Serialize for DegreeSequence {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl From<Vec<u32>> for DegreeSequence {
    fn from(v: Vec<u32>) -> Self {
        DegreeSequence::new(v)
    }
}

/// Every graphic `n`-term sequence with `d_1 <= n - 1`, in lexicographically
/// decreasing order.
pub fn enumerate_graphic(n: usize, positive_only: bool) -> GraphicSequences {
    GraphicSequences::new(n, positive_only)
}

pub struct GraphicSequences {
    current: Option<Vec<u32>>,
    floor: u32,
}

impl GraphicSequences {
    fn new(n: usize, positive_only: bool) -> Self {
        let floor = u32::from(positive_only);
        let top = n.saturating_sub(1) as u32;
        let current = if n == 0 || top < floor {
            None
        } else {
            Some(vec![top; n])
        };
        GraphicSequences { current, floor }
    }

    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        // Decrement the rightmost term above the floor and refill the suffix.
        match cur.iter().rposition(|&d| d > self.floor) {
            Some(j) => {
                let v = cur[j] - 1;
                for x in &mut cur[j..] {
                    *x = v;
                }
            }
            None => self.current = None,
        }
    }
}

impl Iterator for GraphicSequences {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        loop {
            let cand = self.current.clone()?;
            self.advance();
            if erdos_gallai(&cand) {
                return Some(DegreeSequence(cand));
            }
        }
    }
}
