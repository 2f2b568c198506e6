use johnson_cover::bounds::{
    catalan_tightness_test, ceil, coverable_upper_bound, goodman_triangle_bound, johnson_alpha_upper,
    steiner_divisibility, Rational,
};
use johnson_cover::solver::{exact_max_independent_set, johnson_graph};
use johnson_cover::{clique_number, Budget, GraphParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn triangles_brute_force(n: usize, adj: &[Vec<bool>]) -> i128 {
    let mut t = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if adj[a][b] && adj[b][c] && adj[a][c] {
                    t += 1;
                }
            }
        }
    }
    t
}

#[test]
fn goodman_never_exceeds_the_triangle_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..100 {
        let n = rng.gen_range(1..=12usize);
        let density: f64 = rng.gen();
        let mut adj = vec![vec![false; n]; n];
        let mut m = 0u64;
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen::<f64>() < density {
                    adj[a][b] = true;
                    adj[b][a] = true;
                    m += 1;
                }
            }
        }
        let bound = goodman_triangle_bound(n as u64, m).unwrap();
        assert!(bound <= Rational::from_integer(triangles_brute_force(n, &adj)), "n={n} m={m}");
    }
}

#[test]
fn goodman_rejects_impossible_graphs() {
    assert!(goodman_triangle_bound(0, 0).is_err());
    assert!(goodman_triangle_bound(4, 7).is_err());
    // K4 has exactly four triangles and meets the bound
    assert_eq!(goodman_triangle_bound(4, 6).unwrap(), Rational::from_integer(4));
}

#[test]
fn coverable_vertex_table() {
    let rows = [(8, 8, 55, 56), (9, 12, 83, 84), (9, 13, 83, 84), (10, 17, 117, 120), (10, 18, 117, 120), (11, 23, 163, 165), (11, 24, 163, 165)];
    for (n, na, c, total) in rows {
        let bound = coverable_upper_bound(n, na).unwrap();
        assert_eq!(ceil(&bound), c, "N={n} n_a={na}");
        assert!(ceil(&bound) < total);
    }
    assert!(coverable_upper_bound(3, 0).is_err());
    assert!(coverable_upper_bound(8, 12).is_err());
}

fn is_prime(x: u64) -> bool {
    x >= 2 && (2..x).take_while(|d| d * d <= x).all(|d| x % d != 0)
}

#[test]
fn catalan_tightness_matches_primality() {
    assert_eq!(johnson_alpha_upper(GraphParams::new(8, 4).unwrap()).unwrap(), 14);
    for k in 2..=30 {
        assert_eq!(catalan_tightness_test(k).unwrap(), is_prime(k + 1), "k={k}");
    }
    assert!(catalan_tightness_test(1).is_err());
}

#[test]
fn clique_coclique_inequality_against_exact_alpha() {
    for n in 2..=8 {
        for k in 1..n {
            let p = GraphParams::new(n, k).unwrap();
            let alpha = exact_max_independent_set(&johnson_graph(p), Budget::unlimited());
            assert!(alpha.status == johnson_cover::SolveStatus::Optimal);
            assert!(alpha.size as u64 * clique_number(p) <= p.vertex_count(), "J({n},{k})");
            if k >= 2 {
                assert!(alpha.size as u64 <= johnson_alpha_upper(p).unwrap(), "J({n},{k})");
            }
        }
    }
}

/// Exact binomial by repeated multiply/divide on u128.
fn binom_oracle(n: u64, k: u64) -> u128 {
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

#[test]
fn divisibility_agrees_with_direct_check() {
    for (v, s, t, l) in [(8, 5, 4, 1), (12, 6, 5, 1), (7, 3, 2, 1), (8, 3, 2, 1), (9, 3, 2, 1), (11, 5, 4, 1), (10, 4, 3, 2)] {
        let direct = (0..t).all(|i| (l as u128 * binom_oracle(v - i, t - i)) % binom_oracle(s - i, t - i) == 0);
        assert_eq!(steiner_divisibility(v, s, t, l).unwrap(), direct, "({v},{s},{t},{l})");
    }
    assert!(steiner_divisibility(12, 6, 5, 1).unwrap());
    assert!(!steiner_divisibility(8, 3, 2, 1).unwrap());
}
