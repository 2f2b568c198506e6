//! Explicit clique covers and the conversions between covers and codes.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{complement_cover, Clique, CliqueKind, Code, Cover, GraphParams};
use crate::subset::{Combinations, KSubset, Subset, VertexOrder};

/// `{A_∅}`: `J(n, 1)` is complete.
pub fn cover_k1(n: u32) -> Result<Cover> {
    let params = GraphParams::new(n, 1)?;
    Cover::new(params, vec![Clique::a(params, Subset::EMPTY)?])
}

/// `{A_{1}, ..., A_{n-3}, B_{n-2, n-1, n}}`, of size `n - 2`.
pub fn cover_k2(n: u32) -> Result<Cover> {
    if n <= 2 {
        return Err(Error::Precondition(format!("cover_k2 needs n > 2, got {n}")));
    }
    let params = GraphParams::new(n, 2)?;
    let mut cliques: Vec<Clique> =
        (1..=n - 3).map(|i| Clique::a(params, Subset::singleton(i))).collect::<Result<_>>()?;
    cliques.push(Clique::b(params, Subset::from_elements([n - 2, n - 1, n])?)?);
    Cover::new(params, cliques)
}

/// Pairs inside `{1..⌊n/2⌋}` or inside `{⌊n/2⌋+1..n}`.
pub fn split_pairs(n: u32) -> Vec<Subset> {
    let half = n / 2;
    Combinations::new(n, 2, VertexOrder::Lex)
        .filter(|s| {
            let e = s.elements();
            (e[1] <= half) || (e[0] > half)
        })
        .collect()
}

/// Type-A cover of `J(n, 3)` generated by [`split_pairs`]; size `⌊(n-1)²/4⌋`.
pub fn cover_k3(n: u32) -> Result<Cover> {
    if n <= 3 {
        return Err(Error::Precondition(format!("cover_k3 needs n > 3, got {n}")));
    }
    let params = GraphParams::new(n, 3)?;
    let cliques = split_pairs(n).into_iter().map(|s| Clique::a(params, s)).collect::<Result<_>>()?;
    Cover::new(params, cliques)
}

/// The best closed-form cover when one exists (`min(k, n-k) <= 3`).
pub fn cover_closed_form(params: GraphParams) -> Option<Cover> {
    let (n, k) = (params.n(), params.k());
    let small = k.min(n - k);
    let base = match small {
        1 => cover_k1(n).ok()?,
        2 => cover_k2(n).ok()?,
        3 => cover_k3(n).ok()?,
        _ => return None,
    };
    Some(if base.params() == params { base } else { complement_cover(&base) })
}

fn lift_cover(n: u32, k: u32) -> Vec<(CliqueKind, Subset)> {
    if k == 1 {
        return vec![(CliqueKind::A, Subset::EMPTY)];
    }
    if k == n - 1 {
        return vec![(CliqueKind::B, Subset::full(n))];
    }
    // covers of J(n-1, k-1) get n added; covers of J(n-1, k) are reused
    let mut out: Vec<_> = lift_cover(n - 1, k - 1).into_iter().map(|(t, g)| (t, g.with(n))).collect();
    out.extend(lift_cover(n - 1, k));
    out
}

/// Recursive cover of size `binomial(n-2, k-1)`: lift a cover of
/// `J(n-1, k-1)` by adding `n` to every generator and keep a cover of
/// `J(n-1, k)` as is, anchored at `k = 1` and `k = n - 1`. Elements are
/// finally relabelled `x -> n + 1 - x`.
pub fn cover_recursive(params: GraphParams) -> Result<Cover> {
    let n = params.n();
    let cliques = lift_cover(n, params.k())
        .into_iter()
        .map(|(t, g)| Clique::new(params, t, g.reflect(n)))
        .collect::<Result<Vec<_>>>()?;
    Cover::new(params, cliques)
}

/// `C_S^j`: `A_{S \ {j}}` when `j ∈ S`, otherwise `B_{S ∪ {j}}`.
pub fn clique_for_word(params: GraphParams, word: KSubset, j: u32) -> Result<Clique> {
    if word.contains(j) {
        Clique::a(params, word.without(j))
    } else {
        Clique::b(params, word.with(j))
    }
}

fn check_element(params: GraphParams, j: u32) -> Result<()> {
    if j == 0 || j > params.n() {
        return Err(Error::Precondition(format!("element {j} outside [1, {}]", params.n())));
    }
    Ok(())
}

/// One clique per codeword; for a distance-4 code they are pairwise disjoint.
pub fn cliques_from_code(code: &Code, j: u32) -> Result<Vec<Clique>> {
    check_element(code.params(), j)?;
    code.words().iter().map(|&w| clique_for_word(code.params(), w, j)).collect()
}

/// How a block set is turned into a cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockRole {
    /// `(k+1)`-blocks, every `k`-set inside some block: type-B cover.
    CoveringDesign,
    /// `(k-1)`-blocks, every `k`-set containing some block: type-A cover.
    TuranSystem,
}

/// Validates the blocks and turns them into a cover of `J(n, k)`. A failing
/// block set is reported with an unhandled `k`-subset as witness.
pub fn cover_from_blocks(params: GraphParams, blocks: &[Subset], role: BlockRole) -> Result<Cover> {
    let (kind, size, name) = match role {
        BlockRole::CoveringDesign => (CliqueKind::B, params.k() + 1, "covering design"),
        BlockRole::TuranSystem => (CliqueKind::A, params.k() - 1, "Turán system"),
    };
    let mut unique = Vec::with_capacity(blocks.len());
    let mut seen = HashSet::with_capacity(blocks.len());
    for &b in blocks {
        if b.len() != size || !b.is_subset_of(params.full_set()) {
            return Err(Error::Precondition(format!("block {b} is not a {size}-subset of [{}]", params.n())));
        }
        if seen.insert(b) {
            unique.push(b);
        }
    }
    let cliques = unique.iter().map(|&b| Clique::new(params, kind, b)).collect::<Result<Vec<_>>>()?;
    let cover = Cover::new(params, cliques)?;
    let report = crate::graph::verify_cover(&cover);
    if let Some(&witness) = report.uncovered.first() {
        return Err(Error::InvalidBlocks { role: name, witness });
    }
    Ok(cover)
}

/// Reverses [`cliques_from_code`]: `A_S ↦ S ∪ {j}`, `B_S ↦ S \ {j}`.
/// Needs `j` outside every type-A generator and inside every type-B one,
/// and `k >= 2` (the one-clique cover of `J(n, 1)` carries no structure).
pub fn code_from_cover_simple(cover: &Cover, j: u32) -> Result<Code> {
    let params = cover.params();
    check_element(params, j)?;
    if params.k() < 2 {
        return Err(Error::Precondition("conversion needs k >= 2".into()));
    }
    let mut words = Vec::with_capacity(cover.len());
    for c in cover.cliques() {
        let g = c.generator();
        let word = match c.kind() {
            CliqueKind::A if !g.contains(j) => g.with(j),
            CliqueKind::B if g.contains(j) => g.without(j),
            _ => {
                return Err(Error::Precondition(format!(
                    "clique {c} blocks the single-element rule for j = {j}"
                )))
            }
        };
        words.push(word);
    }
    if !crate::graph::is_code(params, &words) {
        return Err(Error::Precondition(format!("words produced with j = {j} are not a distance-4 code")));
    }
    Ok(Code::new_unchecked(params, words))
}

/// Result of the two-element rule; `is_code` reports whether the words form
/// a distance-4 code (the rule is not guaranteed to).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoElementConversion {
    pub words: Vec<KSubset>,
    pub is_code: bool,
}

impl TwoElementConversion {
    pub fn into_code(self, params: GraphParams) -> Result<Code> {
        if !self.is_code {
            return Err(Error::Precondition("converted words are not a distance-4 code".into()));
        }
        Ok(Code::new_unchecked(params, self.words))
    }
}

/// `A_S ↦ S ∪ {j1}` if `j1 ∉ S` else `S ∪ {j2}`;
/// `B_S ↦ S \ {j1}` if `j1 ∈ S` else `S \ {j2}`.
pub fn code_from_cover_two_element(cover: &Cover, j1: u32, j2: u32) -> Result<TwoElementConversion> {
    let params = cover.params();
    check_element(params, j1)?;
    check_element(params, j2)?;
    if j1 == j2 {
        return Err(Error::Precondition("j1 and j2 must differ".into()));
    }
    let mut words = Vec::with_capacity(cover.len());
    for c in cover.cliques() {
        let g = c.generator();
        let word = match c.kind() {
            CliqueKind::A if !g.contains(j1) => g.with(j1),
            CliqueKind::A if !g.contains(j2) => g.with(j2),
            CliqueKind::B if g.contains(j1) => g.without(j1),
            CliqueKind::B if g.contains(j2) => g.without(j2),
            CliqueKind::A => {
                return Err(Error::Precondition(format!("type-A generator of {c} contains both {j1} and {j2}")))
            }
            CliqueKind::B => {
                return Err(Error::Precondition(format!("type-B generator of {c} contains neither {j1} nor {j2}")))
            }
        };
        words.push(word);
    }
    let is_code = crate::graph::is_code(params, &words);
    Ok(TwoElementConversion { words, is_code })
}

/// Smallest `j` avoided by every type-A generator and contained in every
/// type-B generator.
pub fn find_conversion_element(cover: &Cover) -> Option<u32> {
    let n = cover.params().n();
    if cover.params().k() < 2 {
        return None;
    }
    let mut in_all_b = Subset::full(n);
    let mut in_some_a = Subset::EMPTY;
    for c in cover.cliques() {
        match c.kind() {
            CliqueKind::A => in_some_a = in_some_a | c.generator(),
            CliqueKind::B => in_all_b = in_all_b & c.generator(),
        }
    }
    (in_all_b & in_some_a.complement(n)).iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_cover;

    fn p(n: u32, k: u32) -> GraphParams {
        GraphParams::new(n, k).unwrap()
    }

    fn s(e: &[u32]) -> Subset {
        Subset::from_elements(e.iter().copied()).unwrap()
    }

    #[test]
    fn small_closed_forms() {
        assert_eq!(cover_k1(5).unwrap().len(), 1);
        assert_eq!(cover_k1(2).unwrap().len(), 1);
        assert_eq!(cover_k2(5).unwrap().len(), 3);
        assert_eq!(cover_k2(10).unwrap().len(), 8);
        let c3 = cover_k2(3).unwrap();
        assert_eq!(c3.cliques()[0].kind(), CliqueKind::B);
        assert!(cover_k2(2).is_err());
        assert!(cover_k3(3).is_err());
    }

    #[test]
    fn k3_cover_of_seven() {
        let c = cover_k3(7).unwrap();
        // the printed list puts the larger half first: it is our cover under x -> 8 - x
        let mut gens: Vec<_> = c.cliques().iter().map(|c| c.generator().reflect(7).elements()).collect();
        gens.sort();
        let printed: Vec<Vec<u32>> =
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4], vec![5, 6], vec![5, 7], vec![6, 7]];
        assert_eq!(gens, printed);
        assert!(verify_cover(&c).covered);
        assert_eq!(cover_k3(6).unwrap().len(), 6);
        assert_eq!(cover_k3(10).unwrap().len(), 20);
    }

    #[test]
    fn closed_form_dispatch() {
        for n in 3..=12 {
            for k in 1..n {
                let params = p(n, k);
                match cover_closed_form(params) {
                    Some(c) => {
                        assert_eq!(c.params(), params);
                        assert!(verify_cover(&c).covered);
                        assert_eq!(Some(c.len() as u64), crate::bounds::theta_closed_form(params));
                    }
                    None => assert!(k.min(n - k) > 3),
                }
            }
        }
    }

    #[test]
    fn recursive_seven_three_matches_printed_cover() {
        let c = cover_recursive(p(7, 3)).unwrap();
        let mut want = vec![];
        for g in [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]] {
            want.push((CliqueKind::A, s(&g)));
        }
        for i in 1..=4 {
            want.push((CliqueKind::B, s(&[i, 5, 6, 7])));
        }
        want.sort();
        assert_eq!(c.canonical(), want);
        assert_eq!(cover_recursive(p(9, 1)).unwrap().len(), 1);
        let c94 = cover_recursive(p(9, 4)).unwrap();
        assert_eq!(c94.len(), 35);
        assert!(verify_cover(&c94).covered);
    }

    #[test]
    fn word_cliques_small() {
        let params = p(4, 2);
        let code = Code::new(params, vec![s(&[1, 2]), s(&[3, 4])]).unwrap();
        let cl = cliques_from_code(&code, 1).unwrap();
        assert_eq!(cl.len(), 2);
        let a: HashSet<_> = cl[0].vertices().into_iter().collect();
        assert!(cl[1].vertices().iter().all(|v| !a.contains(v)));
        let single = Code::new(p(6, 3), vec![s(&[2, 4, 6])]).unwrap();
        for j in 1..=6 {
            let c = cliques_from_code(&single, j).unwrap();
            assert!(c[0].contains(s(&[2, 4, 6])));
        }
        assert!(cliques_from_code(&single, 7).is_err());
    }

    #[test]
    fn blocks_validation() {
        let params = p(4, 2);
        let all: Vec<_> = Combinations::new(4, 3, VertexOrder::Colex).collect();
        assert_eq!(cover_from_blocks(params, &all, BlockRole::CoveringDesign).unwrap().len(), 4);
        let err = cover_from_blocks(params, &all[..1], BlockRole::CoveringDesign).unwrap_err();
        assert!(matches!(err, Error::InvalidBlocks { .. }));
        assert!(cover_from_blocks(params, &[s(&[1, 2])], BlockRole::CoveringDesign).is_err());
        let pairs = split_pairs(8);
        let a = cover_from_blocks(p(8, 3), &pairs, BlockRole::TuranSystem).unwrap();
        assert_eq!(a, cover_k3(8).unwrap());
    }

    #[test]
    fn conversion_errors() {
        let c = cover_k1(4).unwrap();
        assert_eq!(find_conversion_element(&c), None);
        assert!(code_from_cover_simple(&c, 1).is_err());
        let c2 = cover_k2(6).unwrap();
        assert!(code_from_cover_two_element(&c2, 3, 3).is_err());
    }
}
