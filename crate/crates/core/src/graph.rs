//! Small labeled simple graphs, the named patterns, and subgraph embedding.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::GraphError;
use crate::sequence::DegreeSequence;

pub const MAX_VERTICES: usize = 64;

/// Simple graph on vertices `0..n`, one adjacency bitmask per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    adj: Vec<u64>,
}

/// `map[h] = g`: pattern vertex `h` sits on host vertex `g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding(pub Vec<usize>);

impl LabeledGraph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(LabeledGraph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub(crate) fn toggle_edge(&mut self, u: usize, v: usize) {
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.adj.iter().map(|m| m.count_ones()).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !mask_upto(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    pub fn contains_triangle(&self) -> bool {
        self.edges()
            .iter()
            .any(|&(u, v)| self.adj[u] & self.adj[v] != 0)
    }

    /// Union of the edge sets of two graphs on the same vertex set.
    pub fn edge_union(&self, other: &LabeledGraph) -> Result<LabeledGraph, GraphError> {
        if self.n != other.n {
            return Err(GraphError::InvalidParameter(format!(
                "vertex counts differ: {} vs {}",
                self.n, other.n
            )));
        }
        let adj = self
            .adj
            .iter()
            .zip(&other.adj)
            .map(|(a, b)| a | b)
            .collect();
        Ok(LabeledGraph { n: self.n, adj })
    }

    pub fn to_report(&self) -> GraphReport {
        GraphReport {
            n: self.n,
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v)| [u + 1, v + 1])
                .collect(),
        }
    }
}

fn mask_upto(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Report form `{n, edges}`, 1-based labels, `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

pub fn degree_sequence_of(g: &LabeledGraph) -> DegreeSequence {
    g.degree_sequence()
}

pub fn disjoint_union(g: &LabeledGraph, h: &LabeledGraph) -> Result<LabeledGraph, GraphError> {
    let mut out = LabeledGraph::empty(g.n + h.n)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for (u, v) in h.edges() {
        out.add_edge(u + g.n, v + g.n)?;
    }
    Ok(out)
}

/// Checks injectivity and edge preservation of `phi: V(h) -> V(g)`.
pub fn validate_embedding(
    g: &LabeledGraph,
    h: &LabeledGraph,
    phi: &Embedding,
) -> Result<(), GraphError> {
    let map = &phi.0;
    if map.len() != h.n {
        return Err(GraphError::InvalidEmbedding(format!(
            "map has {} entries, pattern has {} vertices",
            map.len(),
            h.n
        )));
    }
    let mut seen = 0u64;
    for &x in map {
        if x >= g.n {
            return Err(GraphError::InvalidEmbedding(format!(
                "image {x} out of range"
            )));
        }
        if seen >> x & 1 == 1 {
            return Err(GraphError::InvalidEmbedding(format!(
                "image {x} used twice"
            )));
        }
        seen |= 1 << x;
    }
    for (u, v) in h.edges() {
        if !g.has_edge(map[u], map[v]) {
            return Err(GraphError::InvalidEmbedding(format!(
                "pattern edge {u}-{v} maps to non-edge {}-{}",
                map[u], map[v]
            )));
        }
    }
    Ok(())
}

/// Finds an injective map sending every edge of `h` onto an edge of `g`
/// (not necessarily induced). Candidates are tried in increasing label order.
pub fn find_embedding(g: &LabeledGraph, h: &LabeledGraph) -> Option<Embedding> {
    if h.n > g.n {
        return None;
    }
    let order = search_order(h);
    let mut map = vec![usize::MAX; h.n];
    let g_deg = g.degrees();
    let h_deg = h.degrees();
    if extend(g, h, &order, 0, &mut map, 0, &g_deg, &h_deg) {
        Some(Embedding(map))
    } else {
        None
    }
}

/// Pattern vertices ordered so each one after the first touches as many
/// already-placed vertices as possible.
fn search_order(h: &LabeledGraph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n);
    let mut placed = 0u64;
    while order.len() < h.n {
        let next = (0..h.n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (h.adj[v] & placed).count_ones(),
                    h.degree(v),
                    usize::MAX - v,
                )
            })
            .expect("unplaced vertex");
        placed |= 1 << next;
        order.push(next);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &LabeledGraph,
    h: &LabeledGraph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: u64,
    g_deg: &[u32],
    h_deg: &[u32],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let hv = order[depth];
    let mut cand = mask_upto(g.n) & !used;
    let mut back = h.adj[hv];
    while back != 0 {
        let hu = back.trailing_zeros() as usize;
        back &= back - 1;
        if map[hu] != usize::MAX {
            cand &= g.adj[map[hu]];
        }
    }
    while cand != 0 {
        let gv = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if g_deg[gv] < h_deg[hv] {
            continue;
        }
        map[hv] = gv;
        if extend(g, h, order, depth + 1, map, used | 1 << gv, g_deg, h_deg) {
            return true;
        }
    }
    map[hv] = usize::MAX;
    false
}

/// `G - H`: deletes the images of the pattern edges.
pub fn remove_subgraph_edges(
    g: &LabeledGraph,
    phi: &Embedding,
    h: &LabeledGraph,
) -> Result<LabeledGraph, GraphError> {
    validate_embedding(g, h, phi)?;
    let mut out = g.clone();
    for (u, v) in h.edges() {
        out.toggle_edge(phi.0[u], phi.0[v]);
    }
    Ok(out)
}

/// Pattern families accepted by [`build_named`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternName {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    /// `P_k`: a path with `k` edges on `k + 1` vertices.
    Path(usize),
    K23,
    K33,
    K5MinusP4,
    K6MinusC6,
}

impl FromStr for PatternName {
    type Err = GraphError;

    /// Accepts `k23`, `k33`, `k5p4`, `k6c6`, `k<r>`, `k<r>,<s>`, `c<k>`, `p<k>`
    /// (case-insensitive; `_`, `{`, `}` and `-` are ignored).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s
            .chars()
            .filter(|c| !matches!(c, '_' | '{' | '}' | '-' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        let unknown = || GraphError::UnknownPattern(s.to_string());
        let num = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        match norm.as_str() {
            "k23" | "k2,3" => return Ok(PatternName::K23),
            "k33" | "k3,3" => return Ok(PatternName::K33),
            "k5p4" => return Ok(PatternName::K5MinusP4),
            "k6c6" => return Ok(PatternName::K6MinusC6),
            _ => {}
        }
        if let Some(rest) = norm.strip_prefix('k') {
            if let Some((r, t)) = rest.split_once(',') {
                return Ok(PatternName::CompleteBipartite(num(r)?, num(t)?));
            }
            return Ok(PatternName::Complete(num(rest)?));
        }
        if let Some(rest) = norm.strip_prefix('c') {
            return Ok(PatternName::Cycle(num(rest)?));
        }
        if let Some(rest) = norm.strip_prefix('p') {
            return Ok(PatternName::Path(num(rest)?));
        }
        Err(unknown())
    }
}

pub fn build_named(name: PatternName) -> Result<LabeledGraph, GraphError> {
    let invalid = |msg: String| Err(GraphError::InvalidParameter(msg));
    match name {
        PatternName::Complete(r) => {
            let mut g = LabeledGraph::empty(r)?;
            for u in 0..r {
                for v in u + 1..r {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        PatternName::CompleteBipartite(r, s) => {
            if r == 0 || s == 0 {
                return invalid(format!("K_{{{r},{s}}} needs nonempty parts"));
            }
            let mut g = LabeledGraph::empty(r + s)?;
            for u in 0..r {
                for v in r..r + s {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        PatternName::Cycle(k) => {
            if k < 3 {
                return invalid(format!("C_{k} needs at least 3 vertices"));
            }
            let mut g = LabeledGraph::empty(k)?;
            for u in 0..k {
                g.add_edge(u, (u + 1) % k)?;
            }
            Ok(g)
        }
        PatternName::Path(k) => {
            let mut g = LabeledGraph::empty(k + 1)?;
            for u in 0..k {
                g.add_edge(u, u + 1)?;
            }
            Ok(g)
        }
        PatternName::K23 => build_named(PatternName::CompleteBipartite(2, 3)),
        PatternName::K33 => build_named(PatternName::CompleteBipartite(3, 3)),
        PatternName::K5MinusP4 => {
            // K_5 without the path 0-1-2-3-4.
            let mut g = build_named(PatternName::Complete(5))?;
            for u in 0..4 {
                g.toggle_edge(u, u + 1);
            }
            Ok(g)
        }
        PatternName::K6MinusC6 => {
            // Complement of the cycle 0-1-2-3-4-5: triangles {0,2,4}, {1,3,5}
            // and the matching 0-3, 1-4, 2-5.
            let mut g = build_named(PatternName::Complete(6))?;
            for u in 0..6 {
                g.toggle_edge(u, (u + 1) % 6);
            }
            Ok(g)
        }
    }
}

/// Target of a potential-graphicity query.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TargetPattern {
    K23,
    K5MinusP4,
    K33,
    K6MinusC6,
    Custom(LabeledGraph),
}

impl TargetPattern {
    pub const NAMED: [TargetPattern; 4] = [
        TargetPattern::K23,
        TargetPattern::K5MinusP4,
        TargetPattern::K33,
        TargetPattern::K6MinusC6,
    ];

    pub fn graph(&self) -> LabeledGraph {
        let name = match self {
            TargetPattern::K23 => PatternName::K23,
            TargetPattern::K5MinusP4 => PatternName::K5MinusP4,
            TargetPattern::K33 => PatternName::K33,
            TargetPattern::K6MinusC6 => PatternName::K6MinusC6,
            TargetPattern::Custom(g) => return g.clone(),
        };
        build_named(name).expect("named patterns are valid")
    }

    pub fn order(&self) -> usize {
        match self {
            TargetPattern::K23 | TargetPattern::K5MinusP4 => 5,
            TargetPattern::K33 | TargetPattern::K6MinusC6 => 6,
            TargetPattern::Custom(g) => g.vertex_count(),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            TargetPattern::K23 => "k23",
            TargetPattern::K5MinusP4 => "k5p4",
            TargetPattern::K33 => "k33",
            TargetPattern::K6MinusC6 => "k6c6",
            TargetPattern::Custom(_) => "custom",
        }
    }
}

impl fmt::Display for TargetPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TargetPattern {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "k23" => Ok(TargetPattern::K23),
            "k5p4" => Ok(TargetPattern::K5MinusP4),
            "k33" => Ok(TargetPattern::K33),
            "k6c6" => Ok(TargetPattern::K6MinusC6),
            _ => Err(GraphError::UnknownPattern(s.to_string())),
        }
    }
}

impl Serialize for TargetPattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}
