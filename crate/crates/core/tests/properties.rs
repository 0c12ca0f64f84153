use std::collections::BTreeSet;

use proptest::prelude::*;

use potent::graph::{build_named, disjoint_union, find_embedding};
use potent::sequence::{enumerate_graphic, format_sequence, parse_sequence};
use potent::{DegreeSequence, Embedding, GraphicMethod, LabeledGraph, PatternName};

fn sorted_desc(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn sequence(max_len: usize, max_term: u32) -> impl Strategy<Value = DegreeSequence> {
    prop::collection::vec(0..=max_term, 0..=max_len).prop_map(DegreeSequence::new)
}

fn graph(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| from_bits(n, &bits))
    })
}

fn from_bits(n: usize, bits: &[bool]) -> LabeledGraph {
    let mut edges = Vec::new();
    let mut idx = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[idx] {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    LabeledGraph::from_edges(n, &edges).unwrap()
}

/// All labeled graphs on `n` vertices.
fn all_graphs(n: usize) -> impl Iterator<Item = LabeledGraph> {
    let pairs = n * (n - 1) / 2;
    (0u64..1 << pairs).map(move |mask| {
        let bits: Vec<bool> = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
        from_bits(n, &bits)
    })
}

/// Injective and edge-preserving, checked from scratch.
fn embeds(g: &LabeledGraph, h: &LabeledGraph, phi: &Embedding) -> bool {
    let img = &phi.0;
    img.len() == h.vertex_count()
        && img.iter().all(|&x| x < g.vertex_count())
        && img.iter().collect::<BTreeSet<_>>().len() == img.len()
        && h.edges().iter().all(|&(a, b)| g.has_edge(img[a], img[b]))
}

/// Whether some injection maps `h` into `g`, by trying all of them.
fn contains_brute(g: &LabeledGraph, h: &LabeledGraph) -> bool {
    fn rec(g: &LabeledGraph, h: &LabeledGraph, img: &mut Vec<usize>) -> bool {
        if img.len() == h.vertex_count() {
            return embeds(g, h, &Embedding(img.clone()));
        }
        for x in 0..g.vertex_count() {
            if !img.contains(&x) {
                img.push(x);
                if rec(g, h, img) {
                    return true;
                }
                img.pop();
            }
        }
        false
    }
    rec(g, h, &mut Vec::new())
}

proptest! {
    #[test]
    fn format_parse_round_trip(s in sequence(20, 30)) {
        prop_assume!(!s.is_empty());
        let text = format_sequence(&s);
        prop_assert_eq!(parse_sequence(&text).unwrap(), s.clone());
        let plain = s.terms().iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        prop_assert_eq!(parse_sequence(&plain).unwrap(), s);
    }

    #[test]
    fn graphic_tests_agree(s in sequence(14, 13)) {
        prop_assert_eq!(
            s.is_graphic_by(GraphicMethod::ErdosGallai),
            s.is_graphic_by(GraphicMethod::KleitmanWang)
        );
    }

    #[test]
    fn graphic_implies_necessary_conditions(s in sequence(12, 11)) {
        if s.is_graphic() {
            prop_assert_eq!(s.sum() % 2, 0);
            prop_assert!(s.is_empty() || (s.d(1) as usize) < s.len());
        }
    }

    #[test]
    fn degree_sequence_of_a_graph_is_graphic(g in graph(12)) {
        let s = g.degree_sequence();
        prop_assert!(s.is_graphic_by(GraphicMethod::ErdosGallai));
        prop_assert!(s.is_graphic_by(GraphicMethod::KleitmanWang));
    }

    #[test]
    fn lay_off_preserves_graphicality(g in graph(11)) {
        let s = g.degree_sequence();
        for k in 1..=s.len() {
            // A zero pivot on a graphic sequence is always layable.
            let r = s.lay_off(k).unwrap();
            prop_assert_eq!(r.len(), s.len() - 1);
            prop_assert_eq!(r.sum(), s.sum() - 2 * s.d(k) as u64);
            prop_assert!(r.is_graphic(), "{} at k = {} gave {}", s, k, r);
        }
    }

    #[test]
    fn lay_off_chain_decides_graphicality(s in sequence(12, 11)) {
        let mut cur = s.clone();
        let chain = loop {
            if cur.is_empty() {
                break true;
            }
            match cur.lay_off_last() {
                Ok(next) => cur = next,
                Err(_) => break false,
            }
        };
        prop_assert_eq!(chain, s.is_graphic());
    }

    #[test]
    fn disjoint_union_merges_degrees(g in graph(8), h in graph(8)) {
        let u = disjoint_union(&g, &h).unwrap();
        prop_assert_eq!(u.vertex_count(), g.vertex_count() + h.vertex_count());
        prop_assert_eq!(u.edge_count(), g.edge_count() + h.edge_count());
        let mut merged = g.degrees();
        merged.extend(h.degrees());
        prop_assert_eq!(u.degree_sequence().terms().to_vec(), sorted_desc(merged));
    }

    #[test]
    fn find_embedding_agrees_with_brute_force(g in graph(7), which in 0usize..4) {
        let name = [PatternName::K23, PatternName::K33, PatternName::K5MinusP4, PatternName::K6MinusC6][which];
        let h = build_named(name).unwrap();
        match find_embedding(&g, &h) {
            Some(phi) => prop_assert!(embeds(&g, &h, &phi)),
            None => prop_assert!(!contains_brute(&g, &h)),
        }
    }
}

#[test]
fn dense_random_hosts_yield_valid_embeddings() {
    // Fixed dense hosts, where the search must succeed past its first candidates.
    let h = build_named(PatternName::K33).unwrap();
    for n in 6..=9 {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if (u * 7 + v * 3) % 5 != 0 {
                    edges.push((u, v));
                }
            }
        }
        let g = LabeledGraph::from_edges(n, &edges).unwrap();
        let found = find_embedding(&g, &h);
        assert_eq!(found.is_some(), contains_brute(&g, &h));
        if let Some(phi) = found {
            assert!(embeds(&g, &h, &phi));
        }
    }
}

#[test]
fn cubic_graphs_on_six_vertices_are_k33_or_prism() {
    let k33 = build_named(PatternName::K33).unwrap();
    let prism = build_named(PatternName::K6MinusC6).unwrap();
    assert!(!k33.contains_triangle());
    assert!(prism.contains_triangle());
    let (mut bipartite, mut triangular) = (0, 0);
    for g in all_graphs(6).filter(|g| g.degrees().iter().all(|&d| d == 3)) {
        let is_k33 = find_embedding(&g, &k33).is_some();
        let is_prism = find_embedding(&g, &prism).is_some();
        assert!(is_k33 != is_prism, "{:?}", g.edges());
        assert_eq!(is_prism, g.contains_triangle());
        if is_k33 {
            bipartite += 1;
        } else {
            triangular += 1;
        }
    }
    // 6!/|Aut|: 720/72 labelings of K33, 720/12 of the prism.
    assert_eq!(bipartite, 10);
    assert_eq!(triangular, 60);
}

#[test]
fn enumeration_matches_degree_sequences_of_all_graphs() {
    for n in 1..=6 {
        let realized: BTreeSet<Vec<u32>> = all_graphs(n)
            .map(|g| g.degree_sequence().terms().to_vec())
            .collect();
        let listed: Vec<Vec<u32>> = enumerate_graphic(n, false)
            .map(|s| s.terms().to_vec())
            .collect();
        assert_eq!(listed.len(), realized.len(), "n = {n}");
        assert_eq!(listed.iter().cloned().collect::<BTreeSet<_>>(), realized);
        assert!(
            listed.windows(2).all(|w| w[0] > w[1]),
            "not lexicographically decreasing"
        );

        let positive: BTreeSet<_> = realized
            .into_iter()
            .filter(|t| t.iter().all(|&d| d > 0))
            .collect();
        assert_eq!(
            enumerate_graphic(n, true).count(),
            positive.len(),
            "n = {n}"
        );
    }
}
