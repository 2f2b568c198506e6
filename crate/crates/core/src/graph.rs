//! Johnson graphs `J(n, k)`, their maximal cliques, covers and codes.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{binom64, colex_rank, Combinations, KSubset, Subset, VertexOrder, MAX_N};

/// Ground-set size `n` and subset size `k` of `J(n, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct GraphParams {
    n: u32,
    k: u32,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    n: u32,
    k: u32,
}

impl TryFrom<RawParams> for GraphParams {
    type Error = Error;
    fn try_from(r: RawParams) -> Result<Self> {
        GraphParams::new(r.n, r.k)
    }
}

impl From<GraphParams> for RawParams {
    fn from(p: GraphParams) -> Self {
        RawParams { n: p.n, k: p.k }
    }
}

impl GraphParams {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if k == 0 || k >= n || !(2..=MAX_N).contains(&n) {
            return Err(Error::InvalidParams { n, k });
        }
        Ok(GraphParams { n, k })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn k(self) -> u32 {
        self.k
    }

    /// Parameters of the isomorphic graph `J(n, n - k)`.
    pub fn complement(self) -> GraphParams {
        GraphParams { n: self.n, k: self.n - self.k }
    }

    pub fn vertex_count(self) -> u64 {
        binom64(self.n, self.k)
    }

    pub fn full_set(self) -> Subset {
        Subset::full(self.n)
    }

    /// Whether `s` is a vertex of this graph.
    pub fn is_vertex(self, s: Subset) -> bool {
        s.len() == self.k && s.is_subset_of(self.full_set())
    }

    pub fn vertex(self, elements: &[u32]) -> Result<KSubset> {
        let s = Subset::from_elements(elements.iter().copied())?;
        if !self.is_vertex(s) {
            return Err(Error::InvalidSubset(format!("{s} is not a vertex of {self}")));
        }
        Ok(s)
    }
}

impl fmt::Display for GraphParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J({}, {})", self.n, self.k)
    }
}

/// All vertices in the default (colex) order.
pub fn vertices(params: GraphParams) -> Vec<KSubset> {
    vertices_in_order(params, VertexOrder::Colex)
}

pub fn vertices_in_order(params: GraphParams, order: VertexOrder) -> Vec<KSubset> {
    Combinations::new(params.n, params.k, order).collect()
}

/// Index of a vertex in the colex order returned by [`vertices`].
pub fn vertex_index(v: KSubset) -> usize {
    colex_rank(v) as usize
}

/// Johnson adjacency: `|S ∩ T| = k - 1`, i.e. Hamming distance 2.
pub fn adjacent(s: KSubset, t: KSubset) -> Result<bool> {
    if s.len() != t.len() {
        return Err(Error::ParamsMismatch(format!("{s} and {t} have different sizes")));
    }
    Ok(s.hamming(t) == 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CliqueKind {
    /// `A_S`: every vertex containing the `(k-1)`-set `S`.
    #[serde(rename = "A")]
    A,
    /// `B_S`: every vertex contained in the `(k+1)`-set `S`.
    #[serde(rename = "B")]
    B,
}

/// A clique of `J(n, k)` identified by its kind and generating set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clique {
    kind: CliqueKind,
    generator: Subset,
    params: GraphParams,
}

impl Clique {
    pub fn new(params: GraphParams, kind: CliqueKind, generator: Subset) -> Result<Self> {
        let want = match kind {
            CliqueKind::A => params.k - 1,
            CliqueKind::B => params.k + 1,
        };
        if generator.len() != want || !generator.is_subset_of(params.full_set()) {
            return Err(Error::InvalidSubset(format!(
                "{kind:?} generator {generator} for {params} must be a {want}-subset of [{}]",
                params.n
            )));
        }
        Ok(Clique { kind, generator, params })
    }

    pub fn a(params: GraphParams, generator: Subset) -> Result<Self> {
        Clique::new(params, CliqueKind::A, generator)
    }

    pub fn b(params: GraphParams, generator: Subset) -> Result<Self> {
        Clique::new(params, CliqueKind::B, generator)
    }

    pub fn kind(&self) -> CliqueKind {
        self.kind
    }

    pub fn generator(&self) -> Subset {
        self.generator
    }

    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn len(&self) -> usize {
        match self.kind {
            CliqueKind::A => (self.params.n - self.params.k + 1) as usize,
            CliqueKind::B => (self.params.k + 1) as usize,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: KSubset) -> bool {
        match self.kind {
            CliqueKind::A => self.generator.is_subset_of(v),
            CliqueKind::B => v.is_subset_of(self.generator),
        }
    }

    /// Iterator over the member vertices.
    pub fn iter_vertices(&self) -> impl Iterator<Item = KSubset> + '_ {
        let g = self.generator;
        let (kind, pool) = match self.kind {
            CliqueKind::A => (CliqueKind::A, g.complement(self.params.n)),
            CliqueKind::B => (CliqueKind::B, g),
        };
        pool.iter().map(move |x| match kind {
            CliqueKind::A => g.with(x),
            CliqueKind::B => g.without(x),
        })
    }

    pub fn vertices(&self) -> Vec<KSubset> {
        self.iter_vertices().collect()
    }

    /// Whether the clique is maximal in `J(n, k)`.
    pub fn is_maximal(&self) -> bool {
        let GraphParams { n, k } = self.params;
        if n == 2 {
            // J(2, 1) is a single edge; A_∅ stands for the whole graph.
            return self.kind == CliqueKind::A;
        }
        match self.kind {
            CliqueKind::A => k < n - 1,
            CliqueKind::B => k > 1,
        }
    }

    /// `A_S ↦ B_{S^c}` and `B_S ↦ A_{S^c}` on `J(n, n - k)`.
    pub fn complement(&self) -> Clique {
        let params = self.params.complement();
        if self.params.n == 2 && self.kind == CliqueKind::A {
            // the whole of J(2, 1) maps onto itself
            return *self;
        }
        let generator = self.generator.complement(self.params.n);
        let kind = match self.kind {
            CliqueKind::A => CliqueKind::B,
            CliqueKind::B => CliqueKind::A,
        };
        Clique { kind, generator, params }
    }

    /// Same clique with its parameters rewritten; the generator must stay valid.
    pub fn with_params(&self, params: GraphParams) -> Result<Clique> {
        Clique::new(params, self.kind, self.generator)
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            CliqueKind::A => 'A',
            CliqueKind::B => 'B',
        };
        write!(f, "{kind}{}", self.generator)
    }
}

/// Number of maximal cliques of `J(n, k)`.
pub fn maximal_clique_count(params: GraphParams) -> u64 {
    let GraphParams { n, k } = params;
    if n == 2 {
        return 1;
    }
    let a = if k < n - 1 { binom64(n, k - 1) } else { 0 };
    let b = if k > 1 { binom64(n, k + 1) } else { 0 };
    a + b
}

/// Every maximal clique exactly once: type A in colex generator order, then
/// type B in colex generator order. This is the canonical clique order.
pub fn enumerate_maximal_cliques(params: GraphParams) -> Vec<Clique> {
    let GraphParams { n, k } = params;
    let mut out = Vec::with_capacity(maximal_clique_count(params) as usize);
    if n == 2 || k < n - 1 {
        out.extend(
            Combinations::new(n, k - 1, VertexOrder::Colex)
                .map(|g| Clique { kind: CliqueKind::A, generator: g, params }),
        );
    }
    if n > 2 && k > 1 {
        out.extend(
            Combinations::new(n, k + 1, VertexOrder::Colex)
                .map(|g| Clique { kind: CliqueKind::B, generator: g, params }),
        );
    }
    out
}

/// An ordered, duplicate-free collection of cliques of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    params: GraphParams,
    cliques: Vec<Clique>,
}

impl Cover {
    pub fn new(params: GraphParams, cliques: Vec<Clique>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(cliques.len());
        for c in &cliques {
            if c.params != params {
                return Err(Error::ParamsMismatch(format!(
                    "clique {c} belongs to {}, cover is for {params}",
                    c.params
                )));
            }
            if !seen.insert((c.kind, c.generator)) {
                return Err(Error::Precondition(format!("duplicate clique {c}")));
            }
        }
        Ok(Cover { params, cliques })
    }

    pub fn empty(params: GraphParams) -> Self {
        Cover { params, cliques: Vec::new() }
    }

    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    pub fn into_cliques(self) -> Vec<Clique> {
        self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Generators as sorted `(kind, generator)` pairs, for order-free comparison.
    pub fn canonical(&self) -> Vec<(CliqueKind, Subset)> {
        let mut v: Vec<_> = self.cliques.iter().map(|c| (c.kind, c.generator)).collect();
        v.sort();
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub covered: bool,
    pub uncovered: Vec<KSubset>,
    /// Vertices lying in more than one clique of the cover.
    pub overlapping: u64,
}

impl VerifyReport {
    pub fn disjoint(&self) -> bool {
        self.overlapping == 0
    }
}

/// Checks that the union of the cliques is the whole vertex set.
pub fn verify_cover(cover: &Cover) -> VerifyReport {
    let params = cover.params;
    let total = params.vertex_count() as usize;
    let mut hits = vec![0u8; total];
    let mut overlapping = 0u64;
    for c in &cover.cliques {
        for v in c.iter_vertices() {
            let slot = &mut hits[vertex_index(v)];
            if *slot == 1 {
                overlapping += 1;
            }
            *slot = slot.saturating_add(1);
        }
    }
    let uncovered: Vec<KSubset> = hits
        .iter()
        .enumerate()
        .filter(|(_, &h)| h == 0)
        .map(|(i, _)| crate::subset::colex_unrank(i as u64, params.k))
        .collect();
    VerifyReport { covered: uncovered.is_empty(), uncovered, overlapping }
}

/// Image of a cover of `J(n, k)` as a cover of `J(n, n - k)`.
pub fn complement_cover(cover: &Cover) -> Cover {
    Cover {
        params: cover.params.complement(),
        cliques: cover.cliques.iter().map(Clique::complement).collect(),
    }
}

/// Type counts and per-element generator frequencies of a cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverStats {
    pub n_a: usize,
    pub n_b: usize,
    /// `a[j - 1]` = number of type-A generators containing `j`.
    pub a: Vec<usize>,
    /// `b[j - 1]` = number of type-B generators containing `j`.
    pub b: Vec<usize>,
}

impl CoverStats {
    pub fn a_count(&self, j: u32) -> usize {
        self.a[(j - 1) as usize]
    }

    pub fn b_count(&self, j: u32) -> usize {
        self.b[(j - 1) as usize]
    }
}

pub fn cover_stats(cover: &Cover) -> CoverStats {
    let n = cover.params.n as usize;
    let mut stats = CoverStats { n_a: 0, n_b: 0, a: vec![0; n], b: vec![0; n] };
    for c in &cover.cliques {
        let counts = match c.kind {
            CliqueKind::A => {
                stats.n_a += 1;
                &mut stats.a
            }
            CliqueKind::B => {
                stats.n_b += 1;
                &mut stats.b
            }
        };
        for j in c.generator.iter() {
            counts[(j - 1) as usize] += 1;
        }
    }
    stats
}

/// A constant-weight code: words pairwise at Hamming distance at least 4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    params: GraphParams,
    words: Vec<KSubset>,
}

impl Code {
    /// Validates that every word is a vertex and that the distance-4
    /// property holds.
    pub fn new(params: GraphParams, words: Vec<KSubset>) -> Result<Self> {
        if let Some(w) = words.iter().find(|w| !params.is_vertex(**w)) {
            return Err(Error::InvalidSubset(format!("{w} is not a vertex of {params}")));
        }
        if !is_code(params, &words) {
            return Err(Error::Precondition("words are not pairwise at distance >= 4".into()));
        }
        Ok(Code { params, words })
    }

    pub(crate) fn new_unchecked(params: GraphParams, words: Vec<KSubset>) -> Self {
        Code { params, words }
    }

    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn words(&self) -> &[KSubset] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// True iff distinct words pairwise meet in at most `k - 2` elements.
///
/// Two `k`-sets meet in `k - 1` or more elements exactly when they share a
/// `(k - 1)`-subset, so the check indexes the `(k - 1)`-subsets of every word
/// instead of comparing all pairs.
pub fn is_code(params: GraphParams, words: &[KSubset]) -> bool {
    let mut seen_words = HashSet::with_capacity(words.len());
    let mut shadows = HashSet::with_capacity(words.len() * params.k as usize);
    for &w in words {
        if !seen_words.insert(w) {
            return false;
        }
        for x in w.iter() {
            if !shadows.insert(w.without(x)) {
                return false;
            }
        }
    }
    true
}
