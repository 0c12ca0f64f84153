use std::collections::{BTreeMap, BTreeSet};

use potent::characterize::{revalidate, Theorem};
use potent::oracle::enumerate_realizations;
use potent::sequence::enumerate_graphic;
use potent::sigma::sigma_value;
use potent::{
    oracle_potential, potential_verdict, DegreeSequence, LabeledGraph, OracleConfig, OracleMode,
    SigmaMethod, TargetPattern,
};

fn all_graphs(n: usize) -> impl Iterator<Item = LabeledGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        LabeledGraph::from_edges(n, &edges).unwrap()
    })
}

fn permutations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !cur.contains(&x) {
                cur.push(x);
                rec(n, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// For each positive degree sequence on `n` vertices, whether any labeled
/// graph with that sequence contains `h`, found by trying every injection.
fn ground_truth(n: usize, h: &LabeledGraph) -> BTreeMap<Vec<u32>, bool> {
    let maps = permutations(n, h.vertex_count());
    let h_edges = h.edges();
    let mut out: BTreeMap<Vec<u32>, bool> = BTreeMap::new();
    for g in all_graphs(n) {
        let seq = g.degree_sequence().terms().to_vec();
        if seq.contains(&0) {
            continue;
        }
        let entry = out.entry(seq).or_insert(false);
        if !*entry && g.edge_count() >= h_edges.len() {
            *entry = maps
                .iter()
                .any(|m| h_edges.iter().all(|&(a, b)| g.has_edge(m[a], m[b])));
        }
    }
    out
}

#[test]
fn predicates_and_oracle_match_all_graphs_on_five_and_six_vertices() {
    let cfg = OracleConfig::default();
    for target in TargetPattern::NAMED {
        let h = target.graph();
        for n in target.order()..=6 {
            let truth = ground_truth(n, &h);
            let listed: BTreeSet<Vec<u32>> = enumerate_graphic(n, true)
                .map(|s| s.terms().to_vec())
                .collect();
            assert_eq!(listed, truth.keys().cloned().collect::<BTreeSet<_>>());
            for (terms, &potential) in &truth {
                let s = DegreeSequence::new(terms.clone());
                let verdict = potential_verdict(&target, &s).unwrap();
                assert_eq!(verdict.potential, potential, "{target} {s}: predicate");
                for mode in [OracleMode::Exhaustive, OracleMode::TopDegree] {
                    let o = oracle_potential(&s, &target, mode, &cfg).unwrap();
                    assert_eq!(o.is_found(), potential, "{target} {s}: {mode}");
                }
            }
        }
    }
}

fn double_factorial(m: u64) -> u64 {
    (1..=m).map(|j| 2 * j - 1).product()
}

#[test]
fn perfect_matching_counts() {
    let cfg = OracleConfig::default();
    for m in 1..=4 {
        let s = DegreeSequence::new(vec![1; 2 * m]);
        let graphs: Vec<LabeledGraph> = enumerate_realizations(&s, &cfg).unwrap().collect();
        assert_eq!(graphs.len() as u64, double_factorial(m as u64), "m = {m}");
        let distinct: BTreeSet<Vec<(usize, usize)>> = graphs.iter().map(|g| g.edges()).collect();
        assert_eq!(distinct.len(), graphs.len());
        assert!(graphs.iter().all(|g| g.degrees() == s.terms()));
    }
}

#[test]
fn realization_counts_match_brute_force() {
    let cfg = OracleConfig::default();
    for n in 2..=6 {
        let mut counts: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        for g in all_graphs(n) {
            let d = g.degrees();
            if d.windows(2).all(|w| w[0] >= w[1]) && !d.contains(&0) {
                *counts.entry(d).or_default() += 1;
            }
        }
        for (terms, want) in counts {
            let s = DegreeSequence::new(terms);
            assert_eq!(
                enumerate_realizations(&s, &cfg).unwrap().count(),
                want,
                "{s}"
            );
        }
    }
}

fn without_edge(g: &LabeledGraph, skip: usize) -> LabeledGraph {
    let edges: Vec<_> = g
        .edges()
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| i != skip)
        .map(|(_, e)| e)
        .collect();
    LabeledGraph::from_edges(g.vertex_count(), &edges).unwrap()
}

#[test]
fn oracle_is_monotone_under_subgraphs() {
    let cfg = OracleConfig::default();
    for target in [TargetPattern::K33, TargetPattern::K6MinusC6] {
        let h = target.graph();
        for n in 6..=8 {
            for s in enumerate_graphic(n, true) {
                let Some(w) = oracle_potential(&s, &target, OracleMode::Exhaustive, &cfg)
                    .unwrap()
                    .witness()
                    .cloned()
                else {
                    continue;
                };
                assert!(w.validate(&s));
                for e in 0..h.edge_count() {
                    let sub = TargetPattern::Custom(without_edge(&h, e));
                    assert!(
                        oracle_potential(&s, &sub, OracleMode::Exhaustive, &cfg)
                            .unwrap()
                            .is_found(),
                        "{s}"
                    );
                }
                if target == TargetPattern::K33 {
                    let k23 =
                        oracle_potential(&s, &TargetPattern::K23, OracleMode::Exhaustive, &cfg)
                            .unwrap();
                    assert!(k23.is_found(), "{s}");
                }
            }
        }
    }
}

#[test]
fn sigma_predicate_matches_oracle() {
    let cfg = OracleConfig::default();
    for target in TargetPattern::NAMED {
        for n in target.order()..=9 {
            let p = sigma_value(&target, n, SigmaMethod::Predicate, &cfg).unwrap();
            let o = sigma_value(&target, n, SigmaMethod::Oracle, &cfg).unwrap();
            assert_eq!(p.sigma, o.sigma, "{target} n = {n}");
            assert_eq!(p.extremal, o.extremal, "{target} n = {n}");
            assert_eq!(p.sigma % 2, 0);
            let min_even = enumerate_graphic(n, true)
                .map(|s| s.sum())
                .filter(|x| x % 2 == 0)
                .min()
                .unwrap();
            assert!(p.sigma >= min_even);
            if let Some(e) = &p.extremal {
                assert!(e.is_graphic());
                assert!(!potential_verdict(&target, e).unwrap().potential);
            }
        }
    }
}

#[test]
fn every_violation_revalidates() {
    for target in TargetPattern::NAMED {
        let theorem = Theorem::for_target(&target).unwrap();
        for n in target.order()..=10 {
            for s in enumerate_graphic(n, true) {
                let v = potential_verdict(&target, &s).unwrap();
                assert_eq!(v.potential, v.violated.is_empty());
                for id in &v.violated {
                    assert_eq!(id.theorem, theorem);
                    assert!((1..=theorem.conditions()).contains(&id.condition), "{id}");
                    assert!(revalidate(&s, id), "{s}: {id}");
                }
            }
        }
    }
}

#[test]
fn witnesses_survive_an_independent_check() {
    let cfg = OracleConfig::default();
    for target in TargetPattern::NAMED {
        let h = target.graph();
        for s in enumerate_graphic(7, true) {
            for mode in [OracleMode::Exhaustive, OracleMode::TopDegree] {
                let o = oracle_potential(&s, &target, mode, &cfg).unwrap();
                let Some(w) = o.witness() else { continue };
                assert_eq!(w.graph.degrees(), s.terms());
                let img = &w.embedding.0;
                assert_eq!(img.iter().collect::<BTreeSet<_>>().len(), h.vertex_count());
                assert!(h
                    .edges()
                    .iter()
                    .all(|&(a, b)| w.graph.has_edge(img[a], img[b])));
            }
        }
    }
}
