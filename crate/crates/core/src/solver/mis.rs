use std::time::Instant;

use serde::Serialize;

use crate::codes::{jk_adjacent, jk_two_halves_order, JKVertex};
use crate::graph::{vertices, GraphParams};
use crate::subset::VertexOrder;

use super::{Budget, SolveStatus};

/// Simple undirected graph stored as adjacency bit rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitGraph { n, words, rows: vec![0; n * words] }
    }

    pub fn from_fn(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut g = BitGraph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "loops are not allowed");
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
        self.rows[j * self.words + i / 64] |= 1 << (i % 64);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Complement graph (no loops).
    pub fn complement(&self) -> BitGraph {
        let mut g = BitGraph::new(self.n);
        for i in 0..self.n {
            for w in 0..self.words {
                g.rows[i * self.words + w] = !self.rows[i * self.words + w];
            }
            g.rows[i * self.words + i / 64] &= !(1 << (i % 64));
            if self.n % 64 != 0 {
                g.rows[i * self.words + self.words - 1] &= (1u64 << (self.n % 64)) - 1;
            }
        }
        g
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    /// True iff no two listed vertices are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(a, &i)| set[a + 1..].iter().all(|&j| i != j && !self.has_edge(i, j)))
    }
}

/// `J(n, k)` with vertices in colex order.
pub fn johnson_graph(params: GraphParams) -> BitGraph {
    let vs = vertices(params);
    BitGraph::from_fn(vs.len(), |i, j| vs[i].hamming(vs[j]) == 2)
}

/// `JK(n, k)` with side 0 then side 1, each in colex order.
pub fn jk_graph(params: GraphParams) -> (BitGraph, Vec<JKVertex>) {
    let vs = jk_two_halves_order(params, VertexOrder::Colex);
    (BitGraph::from_fn(vs.len(), |i, j| jk_adjacent(vs[i], vs[j])), vs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependentSetOutcome {
    pub status: SolveStatus,
    pub size: usize,
    pub upper_bound: usize,
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
}

struct CliqueSearch<'a> {
    h: &'a BitGraph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: Budget,
    start: Instant,
    stop: Option<SolveStatus>,
}

impl CliqueSearch<'_> {
    /// Greedy sequential coloring of `cand`; returns vertices in color order
    /// with the color number of each.
    fn color(&self, cand: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = cand.to_vec();
        let mut order = Vec::new();
        let mut colors = Vec::new();
        let mut color = 0;
        while uncolored.iter().any(|&w| w != 0) {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = first_bit(&q) {
                q[v / 64] &= !(1 << (v % 64));
                uncolored[v / 64] &= !(1 << (v % 64));
                for (x, r) in q.iter_mut().zip(self.h.row(v)) {
                    *x &= !r;
                }
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }

    fn expand(&mut self, mut cand: Vec<u64>) {
        self.nodes += 1;
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                self.stop = Some(SolveStatus::BoundsOnly);
            }
        }
        if let Some(t) = self.budget.max_time {
            if self.nodes % 1024 == 0 && self.start.elapsed() > t {
                self.stop = Some(SolveStatus::Timeout);
            }
        }
        if self.stop.is_some() {
            return;
        }
        let (order, colors) = self.color(&cand);
        for i in (0..order.len()).rev() {
            if self.current.len() + colors[i] <= self.best.len() || self.stop.is_some() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let next: Vec<u64> = cand.iter().zip(self.h.row(v)).map(|(c, r)| c & r).collect();
            if next.iter().all(|&w| w == 0) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand[v / 64] &= !(1 << (v % 64));
        }
    }
}

fn first_bit(row: &[u64]) -> Option<usize> {
    row.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Maximum independent set of `g`: maximum clique search in the complement,
/// pruned by greedy coloring. If the budget runs out the outcome carries the
/// best set found and the root coloring bound.
pub fn exact_max_independent_set(g: &BitGraph, budget: Budget) -> IndependentSetOutcome {
    let h = g.complement();
    let mut search = CliqueSearch {
        h: &h,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget,
        start: Instant::now(),
        stop: None,
    };
    let mut all = vec![0u64; h.words];
    for v in 0..g.n {
        all[v / 64] |= 1 << (v % 64);
    }
    let root_bound = search.color(&all).1.last().copied().unwrap_or(0);
    if g.n > 0 {
        search.expand(all);
    }
    let mut witness = search.best.clone();
    witness.sort_unstable();
    debug_assert!(g.is_independent(&witness));
    let (status, upper_bound) = match search.stop {
        Some(s) => (s, root_bound.max(witness.len())),
        None => (SolveStatus::Optimal, witness.len()),
    };
    IndependentSetOutcome { status, size: witness.len(), upper_bound, witness, nodes_explored: search.nodes }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_empty_graphs() {
        let k5 = BitGraph::from_fn(5, |_, _| true);
        assert_eq!(exact_max_independent_set(&k5, Budget::unlimited()).size, 1);
        let e4 = BitGraph::new(4);
        assert_eq!(exact_max_independent_set(&e4, Budget::unlimited()).size, 4);
        assert_eq!(exact_max_independent_set(&BitGraph::new(0), Budget::unlimited()).size, 0);
    }

    #[test]
    fn johnson_independence_numbers() {
        let p = |n, k| GraphParams::new(n, k).unwrap();
        assert_eq!(exact_max_independent_set(&johnson_graph(p(6, 2)), Budget::unlimited()).size, 3);
        let r = exact_max_independent_set(&johnson_graph(p(8, 4)), Budget::unlimited());
        assert_eq!(r.size, 14);
        assert_eq!(r.status, SolveStatus::Optimal);
    }

    #[test]
    fn complement_has_no_loops() {
        let g = BitGraph::from_fn(70, |i, j| (i + j) % 3 == 0);
        let c = g.complement();
        for i in 0..70 {
            assert!(!c.has_edge(i, i));
            for j in 0..70 {
                if i != j {
                    assert_ne!(g.has_edge(i, j), c.has_edge(i, j));
                }
            }
        }
    }
}
