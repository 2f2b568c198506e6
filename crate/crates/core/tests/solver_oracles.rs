use johnson_cover::fixtures::table_theta;
use johnson_cover::solver::{
    covering_number_small, exact_max_independent_set, greedy_cover, jk_graph, johnson_graph, solve_set_cover,
};
use johnson_cover::{
    anneal_cover, exact_set_cover, exact_theta, verify_cover, AnnealSchedule, Budget, GraphParams, SetCoverInstance,
    SolveStatus,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minimum weight over all subsets of sets, honouring the pairings.
fn brute_force(inst: &SetCoverInstance) -> u64 {
    let m = inst.sets().len();
    let full: u64 = (1u64 << inst.universe_size()) - 1;
    let masks: Vec<u64> = inst.sets().iter().map(|s| s.iter().fold(0, |acc, &e| acc | 1 << e)).collect();
    let mut best = u64::MAX;
    for pick in 0u32..(1 << m) {
        let ok_pairs = inst.pairs().iter().all(|&(i, j)| (pick >> i & 1) == (pick >> j & 1));
        if !ok_pairs {
            continue;
        }
        let cov = (0..m).filter(|&i| pick >> i & 1 == 1).fold(0, |acc, i| acc | masks[i]);
        if cov == full {
            best = best.min(pick.count_ones() as u64);
        }
    }
    best
}

fn random_instance(rng: &mut ChaCha8Rng) -> SetCoverInstance {
    loop {
        let universe = rng.gen_range(1..=14);
        let m = rng.gen_range(1..=12);
        let sets: Vec<Vec<usize>> = (0..m)
            .map(|_| {
                let p: f64 = rng.gen_range(0.1..0.6);
                (0..universe).filter(|_| rng.gen::<f64>() < p).collect()
            })
            .collect();
        let Ok(inst) = SetCoverInstance::new(universe, sets) else { continue };
        let pairs = if m >= 2 && rng.gen_bool(0.3) {
            let i = rng.gen_range(0..m);
            let j = (i + 1 + rng.gen_range(0..m - 1)) % m;
            vec![(i, j)]
        } else {
            Vec::new()
        };
        return inst.with_pairs(pairs).unwrap();
    }
}

#[test]
fn set_cover_matches_subset_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let inst = random_instance(&mut rng);
        let out = exact_set_cover(&inst, Budget::unlimited()).unwrap();
        assert_eq!(out.best_value, brute_force(&inst), "{inst:?}");
        assert_eq!(out.status, SolveStatus::Optimal);
        assert_eq!(out.selection.len() as u64, out.best_value);
        assert!(inst.is_cover(&out.selection));
        assert!(inst.respects_pairs(&out.selection));
    }
}

#[test]
fn replay_is_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..10 {
        let inst = random_instance(&mut rng);
        assert_eq!(exact_set_cover(&inst, Budget::unlimited()).unwrap(), exact_set_cover(&inst, Budget::unlimited()).unwrap());
    }
    let p = GraphParams::new(7, 3).unwrap();
    let a = exact_theta(p, Budget::unlimited(), None).unwrap();
    let b = exact_theta(p, Budget::unlimited(), None).unwrap();
    assert_eq!(a.outcome, b.outcome);
    assert_eq!(a.cover, b.cover);
}

#[test]
fn exact_theta_outcomes_are_consistent() {
    for n in 3..=7 {
        for k in 1..n {
            let p = GraphParams::new(n, k).unwrap();
            let sol = exact_theta(p, Budget::unlimited(), None).unwrap();
            assert!(verify_cover(&sol.cover).covered);
            assert!(sol.outcome.lower_bound <= sol.cover.len() as u64);
            assert_eq!(sol.cover.len() as u64, sol.outcome.best_value);
            assert!(table_theta(p).unwrap().contains(sol.outcome.best_value));
            let log = &sol.log;
            assert!(log.windows(2).all(|w| w[0].value >= w[1].value && w[0].bound <= w[1].bound));
        }
    }
}

#[test]
fn bounds_only_outcomes_bracket_the_optimum() {
    let p = GraphParams::new(8, 3).unwrap();
    let sol = exact_theta(p, Budget::nodes(50), None).unwrap();
    assert_eq!(sol.outcome.status, SolveStatus::BoundsOnly);
    assert!(sol.outcome.lower_bound <= 12 && 12 <= sol.outcome.best_value);
    let warm = anneal_cover(p, &AnnealSchedule { restarts: 1, ..AnnealSchedule::default() }, 3);
    let sol = exact_theta(p, Budget::nodes(50), Some(&warm.cover)).unwrap();
    assert!(sol.outcome.best_value <= warm.size as u64);
}

#[test]
fn anneal_never_beats_the_exact_value() {
    let quick = AnnealSchedule { restarts: 1, ..AnnealSchedule::default() };
    for (n, k) in [(5, 2), (6, 3), (7, 2), (7, 3), (8, 3)] {
        let p = GraphParams::new(n, k).unwrap();
        let exact = exact_theta(p, Budget::unlimited(), None).unwrap().outcome.best_value;
        let r = anneal_cover(p, &quick, 11);
        assert!(verify_cover(&r.cover).covered);
        assert!(r.size as u64 >= exact);
    }
}

#[test]
fn greedy_baseline() {
    for n in 3..=9 {
        for k in 1..n {
            let p = GraphParams::new(n, k).unwrap();
            let g = greedy_cover(p);
            assert!(verify_cover(&g).covered, "J({n},{k})");
        }
        assert_eq!(greedy_cover(GraphParams::new(n, 1).unwrap()).len(), 1);
    }
}

/// Fewest `s`-subsets of `[v]` covering all pairs, by trying every
/// collection of increasing size.
fn covering_brute_force(v: u32, s: u32) -> usize {
    let blocks: Vec<Vec<u32>> = johnson_cover::subset::Combinations::new(v, s, johnson_cover::VertexOrder::Colex)
        .map(|b| b.elements())
        .collect();
    let pair_index = |a: u32, b: u32| (a - 1) * v + (b - 1);
    let masks: Vec<u64> = blocks
        .iter()
        .map(|b| {
            let mut m = 0u64;
            for (i, &x) in b.iter().enumerate() {
                for &y in &b[i + 1..] {
                    m |= 1 << pair_index(x, y);
                }
            }
            m
        })
        .collect();
    let mut full = 0u64;
    for a in 1..=v {
        for b in a + 1..=v {
            full |= 1 << pair_index(a, b);
        }
    }
    fn search(masks: &[u64], start: usize, left: usize, acc: u64, full: u64) -> bool {
        if acc == full {
            return true;
        }
        if left == 0 {
            return false;
        }
        (start..masks.len()).any(|i| search(masks, i + 1, left - 1, acc | masks[i], full))
    }
    (1..=masks.len()).find(|&r| search(&masks, 0, r, 0, full)).unwrap()
}

#[test]
fn covering_numbers_against_brute_force() {
    for (v, s, want) in [(4, 3, 3), (7, 3, 7), (5, 3, 4), (6, 3, 6)] {
        assert_eq!(covering_brute_force(v, s), want, "brute force C({v},{s},2)");
        let (out, blocks) = covering_number_small(v, s, 2, Budget::unlimited()).unwrap();
        assert_eq!(out.best_value as usize, want, "C({v},{s},2)");
        assert!(out.is_optimal());
        assert_eq!(blocks.len(), want);
    }
    // t = s: every block covers only itself
    assert_eq!(covering_number_small(6, 3, 3, Budget::unlimited()).unwrap().0.best_value, 20);
}

#[test]
fn independence_numbers() {
    let p = |n, k| GraphParams::new(n, k).unwrap();
    assert_eq!(exact_max_independent_set(&johnson_graph(p(6, 2)), Budget::unlimited()).size, 3);
    assert_eq!(exact_theta(p(6, 2), Budget::unlimited(), None).unwrap().outcome.best_value, 4);
    let a84 = exact_max_independent_set(&johnson_graph(p(8, 4)), Budget::unlimited());
    assert_eq!(a84.size, 14);
    assert!(johnson_graph(p(8, 4)).is_independent(&a84.witness));
}

#[test]
fn jk_independence_matches_johnson_middle_layer() {
    for k in 2..=3u32 {
        let (jk, _) = jk_graph(GraphParams::new(2 * k - 1, k - 1).unwrap());
        let j = johnson_graph(GraphParams::new(2 * k, k).unwrap());
        let a = exact_max_independent_set(&jk, Budget::unlimited());
        let b = exact_max_independent_set(&j, Budget::unlimited());
        assert_eq!(a.size, b.size, "k={k}");
    }
}

#[test]
fn node_budget_is_reported_as_bounds_only() {
    let inst = SetCoverInstance::new(3, vec![vec![0], vec![1], vec![2], vec![0, 1]]).unwrap();
    let r = solve_set_cover(&inst, Budget::nodes(0), None, 0, 5).unwrap();
    assert_eq!(r.outcome.seed, 5);
    assert!(r.outcome.lower_bound <= r.outcome.best_value);
}

/// The reduced search must agree with the full paired set-cover instance.
#[test]
fn symmetric_search_matches_the_paired_instance() {
    use johnson_cover::graph::vertex_index;
    use johnson_cover::solver::symmetric_cover_search;
    use johnson_cover::enumerate_maximal_cliques;

    for (k, want) in [(2, 2), (3, 6), (4, 14)] {
        let p = GraphParams::new(2 * k, k).unwrap();
        let cliques = enumerate_maximal_cliques(p);
        let sets = cliques.iter().map(|c| c.iter_vertices().map(vertex_index).collect()).collect();
        let pairs = (0..cliques.len())
            .filter_map(|i| {
                let j = cliques.iter().position(|d| *d == cliques[i].complement()).unwrap();
                (i < j).then_some((i, j))
            })
            .collect();
        let inst = SetCoverInstance::new(p.vertex_count() as usize, sets).unwrap().with_pairs(pairs).unwrap();
        let full = exact_set_cover(&inst, Budget::unlimited()).unwrap();
        let sym = symmetric_cover_search(k, Budget::unlimited()).unwrap();
        assert_eq!(full.best_value, want, "k={k}");
        assert_eq!(sym.outcome.best_value, want, "k={k}");
        assert!(sym.outcome.is_optimal() && verify_cover(&sym.cover).covered);
        let mut image: Vec<_> = sym.cover.cliques().iter().map(|c| c.complement()).collect();
        image.sort();
        let mut own = sym.cover.cliques().to_vec();
        own.sort();
        assert_eq!(image, own, "k={k} not self-complementary");
    }
}
