//! The doubled graph `JK(n, k)`, lexicodes, and the disjoint maximum-clique
//! covers of `J(2k, k)` they produce.
//!
//! `JK(n, k)` has two copies of `J(n, k)` as vertex set; vertices on the same
//! side are joined by Johnson edges and vertices on opposite sides are joined
//! when their subsets are disjoint. Independent sets of `JK(2k, k-1)` are
//! collections of pairwise disjoint maximum cliques of `J(2k, k)` via
//! `(S, 0) ↔ A_S` and `(S, 1) ↔ B_{S^c}`.

use std::collections::HashSet;

use serde::Serialize;

use crate::bounds::catalan;
use crate::error::{Error, Result};
use crate::graph::{verify_cover, Clique, CliqueKind, Code, Cover, GraphParams};
use crate::subset::{binom64, binomial, colex_rank, Combinations, KSubset, Subset, VertexOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JKVertex {
    pub subset: KSubset,
    /// 0 or 1.
    pub side: u8,
}

impl JKVertex {
    pub fn new(subset: KSubset, side: u8) -> Self {
        debug_assert!(side <= 1);
        JKVertex { subset, side }
    }
}

/// Adjacency in `JK(n, k)`.
pub fn jk_adjacent(u: JKVertex, v: JKVertex) -> bool {
    if u.side == v.side {
        u.subset.hamming(v.subset) == 2
    } else {
        u.subset.is_disjoint(v.subset)
    }
}

/// Both copies of `J(n, k)`: side 0 in the given order, then side 1.
pub fn jk_two_halves_order(params: GraphParams, order: VertexOrder) -> Vec<JKVertex> {
    let half: Vec<_> = Combinations::new(params.n(), params.k(), order).collect();
    let mut out: Vec<_> = half.iter().map(|&s| JKVertex::new(s, 0)).collect();
    out.extend(half.iter().map(|&s| JKVertex::new(s, 1)));
    out
}

/// The isomorphism `J(2k, k) → JK(2k-1, k-1)`:
/// `S ↦ (S \ {2k}, 0)` if `2k ∈ S`, else `(S^c \ {2k}, 1)`.
pub fn j_to_jk_isomorphism(params: GraphParams, s: KSubset) -> Result<JKVertex> {
    let (n, k) = (params.n(), params.k());
    if n != 2 * k || k < 2 {
        return Err(Error::Precondition(format!("isomorphism needs J(2k, k) with k >= 2, got {params}")));
    }
    if !params.is_vertex(s) {
        return Err(Error::InvalidSubset(format!("{s} is not a vertex of {params}")));
    }
    Ok(if s.contains(n) {
        JKVertex::new(s.without(n), 0)
    } else {
        JKVertex::new(s.complement(n).without(n), 1)
    })
}

/// Inverse of [`j_to_jk_isomorphism`] for `JK(2k-1, k-1)`.
pub fn jk_to_j(k: u32, v: JKVertex) -> KSubset {
    let n = 2 * k;
    match v.side {
        0 => v.subset.with(n),
        _ => v.subset.with(n).complement(n),
    }
}

/// Maximum clique of `J(2k, k)` for a vertex of `JK(2k, k-1)`.
pub fn jk_vertex_to_clique(params: GraphParams, v: JKVertex) -> Result<Clique> {
    match v.side {
        0 => Clique::a(params, v.subset),
        _ => Clique::b(params, v.subset.complement(params.n())),
    }
}

/// Vertex of `JK(2k, k-1)` for a maximum clique of `J(2k, k)`.
pub fn clique_to_jk_vertex(c: &Clique) -> JKVertex {
    match c.kind() {
        CliqueKind::A => JKVertex::new(c.generator(), 0),
        CliqueKind::B => JKVertex::new(c.generator().complement(c.params().n()), 1),
    }
}

/// Scans `order` once and keeps each vertex with no earlier kept neighbour.
pub fn greedy_independent_set<T, I, F>(order: I, adjacent: F) -> Vec<T>
where
    I: IntoIterator<Item = T>,
    F: Fn(&T, &T) -> bool,
{
    let mut kept: Vec<T> = Vec::new();
    for v in order {
        if !kept.iter().any(|u| adjacent(u, &v)) {
            kept.push(v);
        }
    }
    kept
}

/// True iff no two listed vertices are adjacent in `JK`.
pub fn jk_independence_check(vertices: &[JKVertex]) -> bool {
    vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !jk_adjacent(u, v)))
}

/// Candidate budget for [`lexicode`] without heavy mode. `k = 14` fits,
/// `k = 16` (565 722 720 candidates) does not.
pub const DEFAULT_CANDIDATE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LexicodeOptions {
    pub order: VertexOrder,
    /// Lifts the candidate budget. The `k = 16` run keeps a ~60 MB conflict
    /// bitmap and ~140 MB of codewords.
    pub heavy: bool,
}

impl Default for LexicodeOptions {
    fn default() -> Self {
        LexicodeOptions { order: VertexOrder::Lex, heavy: false }
    }
}

/// Greedy distance-4 code of weight `k-1` and length `2k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lexicode {
    pub k: u32,
    /// `J(2k, k-1)`.
    #[serde(skip)]
    pub params: GraphParams,
    pub order: VertexOrder,
    pub words: Vec<KSubset>,
}

impl Lexicode {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn as_code(&self) -> Code {
        Code::new_unchecked(self.params, self.words.clone())
    }
}

/// Fixed-size bitmap indexed by colex rank.
struct RankBitmap {
    words: Vec<u64>,
}

impl RankBitmap {
    fn new(len: u64) -> Self {
        RankBitmap { words: vec![0; len.div_ceil(64) as usize] }
    }

    #[inline]
    fn get(&self, i: u64) -> bool {
        self.words[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    /// Sets the bit and returns its previous value.
    #[inline]
    fn set(&mut self, i: u64) -> bool {
        let w = &mut self.words[(i / 64) as usize];
        let bit = 1u64 << (i % 64);
        let old = *w & bit != 0;
        *w |= bit;
        old
    }
}

/// Colex ranks of the `|s| - 1`-subsets of `s`, without re-deriving each.
#[inline]
fn shadow_ranks(s: Subset, out: &mut Vec<u64>) {
    out.clear();
    let pos: Vec<u32> = s.iter().map(|e| e - 1).collect();
    let w = pos.len();
    // rank(s \ pos[i]) = Σ_{j<i} C(pos_j, j+1) + Σ_{j>i} C(pos_j, j)
    let mut suffix = vec![0u64; w + 1];
    for j in (0..w).rev() {
        suffix[j] = suffix[j + 1] + if j > 0 { binom64(pos[j], j as u32) } else { 0 };
    }
    let mut prefix = 0u64;
    for i in 0..w {
        out.push(prefix + suffix[i + 1]);
        prefix += binom64(pos[i], i as u32 + 1);
    }
}

/// Greedy lexicode: streams the `(k-1)`-subsets of `[2k]` in the requested
/// order and accepts a candidate unless it shares a `(k-2)`-subset with an
/// accepted word (equivalently, meets one in `k-2` or more elements).
pub fn lexicode(k: u32, options: LexicodeOptions) -> Result<Lexicode> {
    if k < 2 {
        return Err(Error::Precondition("lexicode needs k >= 2".into()));
    }
    if 2 * k > crate::subset::MAX_N {
        return Err(Error::Precondition(format!("2k = {} exceeds 64", 2 * k)));
    }
    let n = 2 * k;
    let w = k - 1;
    let candidates = binom64(n, w);
    if !options.heavy && candidates > DEFAULT_CANDIDATE_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "lexicode for k = {k} scans {candidates} candidates (budget {DEFAULT_CANDIDATE_BUDGET}); enable heavy mode"
        )));
    }
    let params = GraphParams::new(n, w)?;
    let mut index = RankBitmap::new(binom64(n, w - 1).max(1));
    let mut words = Vec::new();
    let mut ranks = Vec::with_capacity(w as usize);
    for cand in Combinations::new(n, w, options.order) {
        shadow_ranks(cand, &mut ranks);
        if ranks.iter().any(|&r| index.get(r)) {
            continue;
        }
        for &r in &ranks {
            index.set(r);
        }
        words.push(cand);
    }
    Ok(Lexicode { k, params, order: options.order, words })
}

/// True iff every two words intersect.
///
/// A word is disjoint from some other word exactly when one of the
/// `w`-subsets of its complement is itself a word, so the check looks those
/// up in a word index; it falls back to all pairs when that enumeration
/// would be larger.
pub fn pairwise_intersecting(n: u32, words: &[KSubset]) -> bool {
    let Some(first) = words.first() else { return true };
    let w = first.len();
    if words.iter().any(|x| x.len() != w) {
        // mixed weights: plain pairwise test
        return words.iter().enumerate().all(|(i, a)| words[i + 1..].iter().all(|b| !a.is_disjoint(*b)));
    }
    let per_word = binomial((n - w) as u64, w as u64).unwrap_or(u128::MAX);
    if per_word > words.len() as u128 {
        return words.iter().enumerate().all(|(i, a)| words[i + 1..].iter().all(|b| !a.is_disjoint(*b)));
    }
    let total = binom64(n, w);
    let lookup: Box<dyn Fn(Subset) -> bool> = if total <= 1 << 34 {
        let mut bm = RankBitmap::new(total.max(1));
        for &x in words {
            bm.set(colex_rank(x));
        }
        Box::new(move |s| bm.get(colex_rank(s)))
    } else {
        let set: HashSet<Subset> = words.iter().copied().collect();
        Box::new(move |s| set.contains(&s))
    };
    for &x in words {
        let comp = x.complement(n);
        let pool: Vec<u32> = comp.elements();
        let mut found = false;
        for_each_subset_of(&pool, w as usize, &mut |s| {
            if lookup(s) {
                found = true;
            }
            !found
        });
        if found {
            return false;
        }
    }
    true
}

/// Calls `f` on every `size`-subset of `pool` until it returns false.
fn for_each_subset_of(pool: &[u32], size: usize, f: &mut dyn FnMut(Subset) -> bool) {
    fn rec(pool: &[u32], size: usize, start: usize, acc: Subset, f: &mut dyn FnMut(Subset) -> bool) -> bool {
        if size == 0 {
            return f(acc);
        }
        for i in start..=pool.len() - size {
            if !rec(pool, size - 1, i + 1, acc.with(pool[i]), f) {
                return false;
            }
        }
        true
    }
    if size <= pool.len() {
        rec(pool, size, 0, Subset::EMPTY, f);
    }
}

/// Outcome of checking a lexicode against the Catalan target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LexicodeCheck {
    pub k: u32,
    pub words: usize,
    pub target: u64,
    pub pairwise_intersecting: bool,
}

impl LexicodeCheck {
    pub fn succeeds(&self) -> bool {
        self.words as u64 == self.target && self.pairwise_intersecting
    }
}

pub fn check_lexicode(code: &Lexicode) -> Result<LexicodeCheck> {
    let target = catalan(code.k as u64)? / 2;
    Ok(LexicodeCheck {
        k: code.k,
        words: code.len(),
        target,
        pairwise_intersecting: pairwise_intersecting(code.params.n(), &code.words),
    })
}

/// Cliques `A_S` and `B_{S^c}` for every word `S`, as a cover of `J(2k, k)`.
/// Fails unless the code has `C_k / 2` pairwise intersecting words.
pub fn theta_cover_from_code(code: &Lexicode) -> Result<Cover> {
    let check = check_lexicode(code)?;
    if check.words as u64 != check.target {
        return Err(Error::Precondition(format!(
            "lexicode for k = {} has {} words, need C_k/2 = {}",
            code.k, check.words, check.target
        )));
    }
    if !check.pairwise_intersecting {
        return Err(Error::Precondition(format!("lexicode for k = {} has two disjoint words", code.k)));
    }
    let params = GraphParams::new(2 * code.k, code.k)?;
    let mut cliques = Vec::with_capacity(2 * code.len());
    for side in 0..2u8 {
        for &s in &code.words {
            cliques.push(jk_vertex_to_clique(params, JKVertex::new(s, side))?);
        }
    }
    Cover::new(params, cliques)
}

/// Builds the lexicode, checks it, lifts it to a cover of `J(2k, k)` and
/// verifies the cover vertex by vertex.
pub fn theta_cover_from_lexicode(k: u32, options: LexicodeOptions) -> Result<Cover> {
    let code = lexicode(k, options)?;
    let cover = theta_cover_from_code(&code)?;
    let report = verify_cover(&cover);
    if !report.covered {
        return Err(Error::Precondition(format!("lifted cover misses {}", report.uncovered[0])));
    }
    Ok(cover)
}

/// Counting verification of a collection of cliques.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountingReport {
    pub cliques: u64,
    pub vertex_total: u64,
    pub distinct_hit: u64,
    pub overlaps: u64,
}

impl CountingReport {
    /// Disjoint cliques whose sizes add up to the vertex count cover the graph.
    pub fn is_disjoint_cover(&self) -> bool {
        self.overlaps == 0 && self.distinct_hit == self.vertex_total
    }
}

/// Marks every vertex hit by the cliques in a bitmap over colex ranks,
/// counting repeats. Used where a `Cover` value would be too large.
pub fn count_clique_hits<I>(params: GraphParams, cliques: I) -> CountingReport
where
    I: IntoIterator<Item = Clique>,
{
    let total = params.vertex_count();
    let mut seen = RankBitmap::new(total.max(1));
    let mut report = CountingReport { cliques: 0, vertex_total: total, distinct_hit: 0, overlaps: 0 };
    for c in cliques {
        report.cliques += 1;
        for v in c.iter_vertices() {
            if seen.set(colex_rank(v)) {
                report.overlaps += 1;
            } else {
                report.distinct_hit += 1;
            }
        }
    }
    report
}

/// Streams the cliques of the lifted lexicode cover into [`count_clique_hits`].
pub fn count_lexicode_cover(code: &Lexicode) -> Result<CountingReport> {
    let params = GraphParams::new(2 * code.k, code.k)?;
    let cliques = (0..2u8).flat_map(|side| {
        code.words.iter().map(move |&s| jk_vertex_to_clique(params, JKVertex::new(s, side)).expect("valid generator"))
    });
    Ok(count_clique_hits(params, cliques))
}
