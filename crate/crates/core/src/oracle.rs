//! Exhaustive ground truth: does some realization of a sequence contain `H`?
//!
//! Vertex `i` of every realization carries degree `d_{i+1}`, so vertex labels
//! coincide with sequence positions.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{DomainError, OracleError};
use crate::graph::{
    find_embedding, validate_embedding, Embedding, GraphReport, LabeledGraph, TargetPattern,
};
use crate::sequence::{erdos_gallai, DegreeSequence};

pub const DEFAULT_CAP: usize = 10;
pub const HARD_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_n: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_n: DEFAULT_CAP }
    }
}

impl OracleConfig {
    pub fn with_cap(max_n: usize) -> Result<Self, OracleError> {
        if max_n > HARD_CAP {
            return Err(OracleError::CapTooLarge(max_n));
        }
        Ok(OracleConfig { max_n })
    }

    fn admit(&self, seq: &DegreeSequence) -> Result<(), OracleError> {
        if self.max_n > HARD_CAP {
            return Err(OracleError::CapTooLarge(self.max_n));
        }
        if seq.len() > self.max_n {
            return Err(OracleError::CapExceeded {
                n: seq.len(),
                cap: self.max_n,
            });
        }
        if !seq.is_graphic() {
            return Err(DomainError::NotGraphic(seq.to_string()).into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleMode {
    #[default]
    Exhaustive,
    TopDegree,
}

impl fmt::Display for OracleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleMode::Exhaustive => "exhaustive",
            OracleMode::TopDegree => "top-degree",
        })
    }
}

impl FromStr for OracleMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exhaustive" => Ok(OracleMode::Exhaustive),
            "top-degree" | "top_degree" => Ok(OracleMode::TopDegree),
            _ => Err(format!("unknown mode `{s}`")),
        }
    }
}

/// A realization of the sequence together with an embedding of the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationWitness {
    pub graph: LabeledGraph,
    pub embedding: Embedding,
    pub target: TargetPattern,
}

impl RealizationWitness {
    /// Degree of vertex `i` equals `d_{i+1}` and the embedding is valid.
    pub fn validate(&self, seq: &DegreeSequence) -> bool {
        self.graph.degrees() == seq.terms()
            && validate_embedding(&self.graph, &self.target.graph(), &self.embedding).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Found(RealizationWitness),
    /// No realization contains the target; `states_explored` counts search
    /// states visited.
    Exhausted {
        states_explored: u64,
    },
}

impl OracleOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, OracleOutcome::Found(_))
    }

    pub fn witness(&self) -> Option<&RealizationWitness> {
        match self {
            OracleOutcome::Found(w) => Some(w),
            OracleOutcome::Exhausted { .. } => None,
        }
    }

    pub fn report(
        &self,
        seq: &DegreeSequence,
        target: &TargetPattern,
        mode: OracleMode,
    ) -> OracleReport {
        match self {
            OracleOutcome::Found(w) => OracleReport::Witness {
                potential: true,
                sequence: seq.clone(),
                target: target.clone(),
                mode,
                graph: w.graph.to_report(),
                embedding: w.embedding.0.iter().map(|&p| p + 1).collect(),
            },
            OracleOutcome::Exhausted { states_explored } => OracleReport::Exhausted {
                potential: false,
                exhausted: true,
                states_explored: *states_explored,
                sequence: seq.clone(),
                target: target.clone(),
                mode,
            },
        }
    }
}

/// JSON form of an oracle answer. Positions and graph labels are 1-based.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum OracleReport {
    Witness {
        potential: bool,
        sequence: DegreeSequence,
        target: TargetPattern,
        mode: OracleMode,
        graph: GraphReport,
        embedding: Vec<usize>,
    },
    Exhausted {
        potential: bool,
        exhausted: bool,
        states_explored: u64,
        sequence: DegreeSequence,
        target: TargetPattern,
        mode: OracleMode,
    },
}

/// Is the multiset of `residual[w]` for `w` in `from..` graphic?
fn tail_graphic(residual: &[u32], from: usize) -> bool {
    let mut tail: Vec<u32> = residual[from..]
        .iter()
        .copied()
        .filter(|&r| r > 0)
        .collect();
    tail.sort_unstable_by(|a, b| b.cmp(a));
    erdos_gallai(&tail)
}

/// Next `r`-subset of `0..m` in lexicographic order.
fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let r = combo.len();
    let Some(i) = (0..r).rev().find(|&i| combo[i] < m - r + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..r {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

struct Frame {
    vertex: usize,
    candidates: Vec<usize>,
    combo: Vec<usize>,
    applied: bool,
}

/// Every labeled realization of a sequence, each exactly once.
///
/// Vertices are processed in order `0, 1, ...` (non-increasing degree); each
/// one picks its remaining neighbours among later vertices, and a choice is
/// kept only when the residual demands of the later vertices stay graphic.
pub struct Realizations {
    graph: LabeledGraph,
    residual: Vec<u32>,
    stack: Vec<Frame>,
    started: bool,
    done: bool,
    states: u64,
}

impl Realizations {
    fn new(seq: &DegreeSequence) -> Self {
        let n = seq.len();
        Realizations {
            graph: LabeledGraph::empty(n).expect("length checked by caller"),
            residual: seq.terms().to_vec(),
            stack: Vec::with_capacity(n),
            started: false,
            done: !seq.is_graphic(),
            states: 0,
        }
    }

    pub fn states_explored(&self) -> u64 {
        self.states
    }

    fn push_frame(&mut self, vertex: usize) {
        let n = self.residual.len();
        let candidates: Vec<usize> = (vertex + 1..n).filter(|&w| self.residual[w] > 0).collect();
        let r = self.residual[vertex] as usize;
        self.stack.push(Frame {
            vertex,
            candidates,
            combo: (0..r).collect(),
            applied: false,
        });
    }

    fn toggle(&mut self, idx: usize, apply: bool) {
        let frame = &self.stack[idx];
        let v = frame.vertex;
        for &c in &frame.combo {
            let w = frame.candidates[c];
            self.graph.toggle_edge(v, w);
            if apply {
                self.residual[w] -= 1;
            } else {
                self.residual[w] += 1;
            }
        }
        let r = frame.combo.len() as u32;
        if apply {
            self.residual[v] -= r;
        } else {
            self.residual[v] += r;
        }
        self.stack[idx].applied = apply;
    }
}

impl Iterator for Realizations {
    type Item = LabeledGraph;

    fn next(&mut self) -> Option<LabeledGraph> {
        if self.done {
            return None;
        }
        let n = self.residual.len();
        if !self.started {
            self.started = true;
            if n == 0 {
                self.done = true;
                return Some(self.graph.clone());
            }
            self.push_frame(0);
        }
        loop {
            let Some(top) = self.stack.len().checked_sub(1) else {
                self.done = true;
                return None;
            };
            let frame = &self.stack[top];
            if frame.applied {
                self.toggle(top, false);
                let frame = &mut self.stack[top];
                let m = frame.candidates.len();
                if !next_combination(&mut frame.combo, m) {
                    self.stack.pop();
                    continue;
                }
            } else if frame.combo.len() > frame.candidates.len() {
                self.stack.pop();
                continue;
            }
            self.toggle(top, true);
            self.states += 1;
            let v = self.stack[top].vertex;
            if !tail_graphic(&self.residual, v + 1) {
                continue;
            }
            if v + 1 == n {
                return Some(self.graph.clone());
            }
            self.push_frame(v + 1);
        }
    }
}

pub fn enumerate_realizations(
    seq: &DegreeSequence,
    cfg: &OracleConfig,
) -> Result<Realizations, OracleError> {
    cfg.admit(seq)?;
    Ok(Realizations::new(seq))
}

/// A graph edge-disjoint from `placed` in which vertex `i` has degree
/// `residual[i]`, trying candidate edges in lexicographic order.
pub fn complete_under_forbidden(
    residual: &[u32],
    placed: &LabeledGraph,
) -> Result<Option<LabeledGraph>, OracleError> {
    let mut states = 0;
    complete_counting(residual, placed, &mut states)
}

fn complete_counting(
    residual: &[u32],
    placed: &LabeledGraph,
    states: &mut u64,
) -> Result<Option<LabeledGraph>, OracleError> {
    let n = placed.vertex_count();
    if residual.len() != n {
        return Err(OracleError::Precondition(format!(
            "residual has {} entries for {} vertices",
            residual.len(),
            n
        )));
    }
    for (i, &r) in residual.iter().enumerate() {
        if r as usize + placed.degree(i) as usize > n.saturating_sub(1) {
            return Err(OracleError::Precondition(format!(
                "vertex {} needs degree {} beyond n - 1",
                i + 1,
                r as usize + placed.degree(i) as usize
            )));
        }
    }
    let mut search = Completion {
        forbidden: placed,
        residual: residual.to_vec(),
        out: LabeledGraph::empty(n).map_err(|e| OracleError::Precondition(e.to_string()))?,
        states,
    };
    if !search.feasible(0) {
        return Ok(None);
    }
    Ok(search.run(0).then_some(search.out))
}

struct Completion<'a> {
    forbidden: &'a LabeledGraph,
    residual: Vec<u32>,
    out: LabeledGraph,
    states: &'a mut u64,
}

impl Completion<'_> {
    /// Necessary conditions on vertices `from..`: graphic residual multiset
    /// and enough admissible partners for each vertex.
    fn feasible(&self, from: usize) -> bool {
        let n = self.residual.len();
        for w in from..n {
            let r = self.residual[w];
            if r == 0 {
                continue;
            }
            let partners = (from..n)
                .filter(|&u| u != w && self.residual[u] > 0 && !self.forbidden.has_edge(u, w))
                .count();
            if (r as usize) > partners {
                return false;
            }
        }
        tail_graphic(&self.residual, from)
    }

    fn run(&mut self, v: usize) -> bool {
        let n = self.residual.len();
        if v == n {
            return true;
        }
        let need = self.residual[v] as usize;
        let candidates: Vec<usize> = (v + 1..n)
            .filter(|&w| self.residual[w] > 0 && !self.forbidden.has_edge(v, w))
            .collect();
        if need > candidates.len() {
            return false;
        }
        let mut combo: Vec<usize> = (0..need).collect();
        loop {
            *self.states += 1;
            for &c in &combo {
                let w = candidates[c];
                self.out.toggle_edge(v, w);
                self.residual[w] -= 1;
            }
            self.residual[v] = 0;
            if self.feasible(v + 1) && self.run(v + 1) {
                return true;
            }
            for &c in &combo {
                let w = candidates[c];
                self.out.toggle_edge(v, w);
                self.residual[w] += 1;
            }
            self.residual[v] = need as u32;
            if !next_combination(&mut combo, candidates.len()) {
                return false;
            }
        }
    }
}

/// Necessary condition: the largest degrees of the sequence dominate the
/// sorted degrees of the pattern.
fn degree_compatible(seq: &DegreeSequence, pattern: &LabeledGraph) -> bool {
    let mut h = pattern.degrees();
    h.sort_unstable_by(|a, b| b.cmp(a));
    h.len() <= seq.len() && h.iter().zip(seq.terms()).all(|(hd, d)| hd <= d)
}

fn check_query(
    seq: &DegreeSequence,
    pattern: &LabeledGraph,
    cfg: &OracleConfig,
) -> Result<(), OracleError> {
    cfg.admit(seq)?;
    if !seq.is_positive() {
        return Err(DomainError::ZeroTerm(seq.to_string()).into());
    }
    if pattern.vertex_count() > seq.len() {
        return Err(OracleError::PatternTooLarge {
            pattern: pattern.vertex_count(),
            n: seq.len(),
        });
    }
    Ok(())
}

/// Searches for a realization of `seq` containing `target`. An
/// [`OracleOutcome::Exhausted`] answer is a proof by exhaustion.
pub fn oracle_potential(
    seq: &DegreeSequence,
    target: &TargetPattern,
    mode: OracleMode,
    cfg: &OracleConfig,
) -> Result<OracleOutcome, OracleError> {
    let pattern = target.graph();
    check_query(seq, &pattern, cfg)?;
    if !degree_compatible(seq, &pattern) {
        return Ok(OracleOutcome::Exhausted { states_explored: 0 });
    }
    match mode {
        OracleMode::Exhaustive => Ok(exhaustive(seq, target, &pattern)),
        OracleMode::TopDegree => top_degree(seq, target, &pattern),
    }
}

fn exhaustive(
    seq: &DegreeSequence,
    target: &TargetPattern,
    pattern: &LabeledGraph,
) -> OracleOutcome {
    let mut realizations = Realizations::new(seq);
    for g in realizations.by_ref() {
        if let Some(embedding) = find_embedding(&g, pattern) {
            return OracleOutcome::Found(RealizationWitness {
                graph: g,
                embedding,
                target: target.clone(),
            });
        }
    }
    OracleOutcome::Exhausted {
        states_explored: realizations.states_explored(),
    }
}

/// Places the pattern on positions `1..=|V(H)|` in every degree-consistent
/// way and tries to complete each placement.
fn top_degree(
    seq: &DegreeSequence,
    target: &TargetPattern,
    pattern: &LabeledGraph,
) -> Result<OracleOutcome, OracleError> {
    let n = seq.len();
    let h = pattern.vertex_count();
    let h_deg = pattern.degrees();
    let pattern_edges = pattern.edges();
    let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
    let mut states = 0u64;
    let mut perm: Vec<usize> = (0..h).collect();
    loop {
        // perm[hv] = position of pattern vertex hv.
        let consistent = (0..h).all(|hv| h_deg[hv] <= seq.d(perm[hv] + 1));
        if consistent {
            let mut placed =
                LabeledGraph::empty(n).map_err(|e| OracleError::Precondition(e.to_string()))?;
            for &(a, b) in &pattern_edges {
                placed.toggle_edge(perm[a], perm[b]);
            }
            if seen.insert(placed.edges()) {
                let residual: Vec<u32> = (0..n).map(|i| seq.d(i + 1) - placed.degree(i)).collect();
                if let Some(rest) = complete_counting(&residual, &placed, &mut states)? {
                    let graph = placed.edge_union(&rest).expect("same vertex set");
                    return Ok(OracleOutcome::Found(RealizationWitness {
                        graph,
                        embedding: Embedding(perm),
                        target: target.clone(),
                    }));
                }
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(OracleOutcome::Exhausted {
        states_explored: states,
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
