use std::collections::HashMap;

use johnson_cover::graph::{complement_cover, vertices, vertex_index};
use johnson_cover::subset::{colex_rank, colex_unrank, Combinations};
use johnson_cover::{adjacent, enumerate_maximal_cliques, verify_cover, CliqueKind, GraphParams, Subset, VertexOrder};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = GraphParams> {
    (2u32..=9).prop_flat_map(|n| (Just(n), 1..n)).prop_map(|(n, k)| GraphParams::new(n, k).unwrap())
}

fn vertex_pair() -> impl Strategy<Value = (GraphParams, Subset, Subset)> {
    params().prop_flat_map(|p| {
        let count = p.vertex_count();
        (Just(p), 0..count, 0..count)
            .prop_map(|(p, a, b)| (p, colex_unrank(a, p.k()), colex_unrank(b, p.k())))
    })
}

proptest! {
    #[test]
    fn adjacency_is_symmetric_and_irreflexive((_p, s, t) in vertex_pair()) {
        prop_assert_eq!(adjacent(s, t).unwrap(), adjacent(t, s).unwrap());
        prop_assert!(!adjacent(s, s).unwrap());
        prop_assert_eq!(adjacent(s, t).unwrap(), s.intersection_len(t) + 1 == s.len());
    }

    #[test]
    fn colex_rank_roundtrip(p in params(), frac in 0.0f64..1.0) {
        let r = ((p.vertex_count() as f64) * frac) as u64;
        let v = colex_unrank(r.min(p.vertex_count() - 1), p.k());
        prop_assert_eq!(colex_rank(v), r.min(p.vertex_count() - 1));
        prop_assert!(p.is_vertex(v));
    }

    #[test]
    fn complement_maps_cliques_to_cliques(p in params()) {
        for c in enumerate_maximal_cliques(p) {
            let d = c.complement();
            prop_assert_eq!(d.params(), p.complement());
            prop_assert!(d.is_maximal());
            let mut image: Vec<Subset> = c.vertices().into_iter().map(|v| v.complement(p.n())).collect();
            let mut direct = d.vertices();
            image.sort();
            direct.sort();
            prop_assert_eq!(image, direct);
        }
    }
}

/// Each edge `{S, T}` lies in `A_{S∩T}` and in `B_{S∪T}` and in no other
/// maximal clique; either may be missing when that type is not maximal.
#[test]
fn every_edge_lies_in_one_maximal_clique_of_each_type() {
    for n in 3..=8 {
        for k in 1..n {
            let p = GraphParams::new(n, k).unwrap();
            let mut edges: HashMap<(Subset, Subset, CliqueKind), u32> = HashMap::new();
            let has_a = enumerate_maximal_cliques(p).iter().any(|c| c.kind() == CliqueKind::A);
            let has_b = enumerate_maximal_cliques(p).iter().any(|c| c.kind() == CliqueKind::B);
            for c in enumerate_maximal_cliques(p) {
                let vs = c.vertices();
                for (i, &a) in vs.iter().enumerate() {
                    for &b in &vs[i + 1..] {
                        *edges.entry((a.min(b), a.max(b), c.kind())).or_default() += 1;
                    }
                }
            }
            let vs = vertices(p);
            let mut total = 0;
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    if !adjacent(a, b).unwrap() {
                        continue;
                    }
                    for (kind, present) in [(CliqueKind::A, has_a), (CliqueKind::B, has_b)] {
                        if present {
                            total += 1;
                            let hits = edges.get(&(a.min(b), a.max(b), kind));
                            assert_eq!(hits, Some(&1), "J({n},{k}) edge {a}-{b} {kind:?}");
                        }
                    }
                }
            }
            assert_eq!(edges.len(), total, "J({n},{k}) cliques contain non-edges");
        }
    }
}

#[test]
fn vertex_clique_incidences() {
    for n in 4..=9 {
        for k in 2..n - 1 {
            let p = GraphParams::new(n, k).unwrap();
            let mut a = vec![0u32; p.vertex_count() as usize];
            let mut b = vec![0u32; p.vertex_count() as usize];
            for c in enumerate_maximal_cliques(p) {
                for v in c.iter_vertices() {
                    match c.kind() {
                        CliqueKind::A => a[vertex_index(v)] += 1,
                        CliqueKind::B => b[vertex_index(v)] += 1,
                    }
                }
            }
            assert!(a.iter().all(|&x| x == k), "J({n},{k})");
            assert!(b.iter().all(|&x| x == n - k), "J({n},{k})");
        }
    }
}

#[test]
fn all_maximal_cliques_cover_and_complement_cover() {
    for n in 3..=9 {
        for k in 1..n {
            let p = GraphParams::new(n, k).unwrap();
            let cover = johnson_cover::Cover::new(p, enumerate_maximal_cliques(p)).unwrap();
            assert!(verify_cover(&cover).covered);
            assert!(verify_cover(&complement_cover(&cover)).covered);
        }
    }
}

#[test]
fn lex_and_colex_enumerate_the_same_sets() {
    for n in 1..=12 {
        for k in 0..=n {
            let mut lex: Vec<_> = Combinations::new(n, k, VertexOrder::Lex).collect();
            let colex: Vec<_> = Combinations::new(n, k, VertexOrder::Colex).collect();
            assert!(colex.windows(2).all(|w| w[0].bits() < w[1].bits()));
            assert!(lex.windows(2).all(|w| w[0].elements() < w[1].elements()));
            lex.sort();
            assert_eq!(lex, colex, "n={n} k={k}");
        }
    }
}
