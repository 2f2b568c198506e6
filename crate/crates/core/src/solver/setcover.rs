use std::time::Instant;

use crate::bounds::{clique_number, simple_lower_bound};
use crate::error::{Error, Result};
use crate::graph::{enumerate_maximal_cliques, vertex_index, Clique, Cover, GraphParams};
use crate::subset::{binomial, colex_rank, Combinations, Subset, VertexOrder};

use super::anneal::anneal_sets;
use super::{AnnealSchedule, Budget, IncumbentEvent, SolveOutcome, SolveStatus};

/// Minimum set cover input. Elements are `0..universe_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    universe_size: usize,
    sets: Vec<Vec<usize>>,
    /// `(i, j)`: set `i` is chosen iff set `j` is.
    pairs: Vec<(usize, usize)>,
}

impl SetCoverInstance {
    /// Fails with [`Error::Infeasible`] when some element lies in no set.
    pub fn new(universe_size: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; universe_size];
        for (i, s) in sets.iter().enumerate() {
            for &e in s {
                if e >= universe_size {
                    return Err(Error::Precondition(format!("set {i} mentions element {e} >= {universe_size}")));
                }
                seen[e] = true;
            }
        }
        if let Some(e) = seen.iter().position(|&x| !x) {
            return Err(Error::Infeasible(e));
        }
        Ok(SetCoverInstance { universe_size, sets, pairs: Vec::new() })
    }

    pub fn with_pairs(mut self, pairs: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i >= self.sets.len() || j >= self.sets.len()) {
            return Err(Error::Precondition(format!("pairing ({i}, {j}) names a missing set")));
        }
        self.pairs = pairs;
        Ok(self)
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// True iff the chosen sets cover the universe.
    pub fn is_cover(&self, selection: &[usize]) -> bool {
        let mut hit = vec![false; self.universe_size];
        for &i in selection {
            for &e in &self.sets[i] {
                hit[e] = true;
            }
        }
        hit.into_iter().all(|x| x)
    }

    /// True iff the selection respects every pairing.
    pub fn respects_pairs(&self, selection: &[usize]) -> bool {
        let chosen: std::collections::HashSet<usize> = selection.iter().copied().collect();
        self.pairs.iter().all(|(i, j)| chosen.contains(i) == chosen.contains(j))
    }
}

/// Outcome plus the incumbent/bound log.
#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport {
    pub outcome: SolveOutcome,
    pub log: Vec<IncumbentEvent>,
}

/// Sets glued together by the pairings; the search picks whole units.
struct Units {
    words: usize,
    bits: Vec<u64>,
    weight: Vec<u32>,
    members: Vec<Vec<usize>>,
    of_elem: Vec<Vec<u32>>,
    /// Per element: every element sharing a unit with it.
    cocover: Vec<u64>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Units {
    fn build(inst: &SetCoverInstance) -> Units {
        let m = inst.sets.len();
        let mut parent: Vec<usize> = (0..m).collect();
        for &(i, j) in &inst.pairs {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut unit_of = vec![usize::MAX; m];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for i in 0..m {
            let r = find(&mut parent, i);
            if unit_of[r] == usize::MAX {
                unit_of[r] = members.len();
                members.push(Vec::new());
            }
            members[unit_of[r]].push(i);
        }
        let n = inst.universe_size;
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; members.len() * words];
        for (u, ms) in members.iter().enumerate() {
            for &i in ms {
                for &e in &inst.sets[i] {
                    bits[u * words + e / 64] |= 1 << (e % 64);
                }
            }
        }
        let mut of_elem = vec![Vec::new(); n];
        let mut cocover = vec![0u64; n * words];
        for u in 0..members.len() {
            let row = &bits[u * words..(u + 1) * words];
            for e in iter_bits(row) {
                of_elem[e].push(u as u32);
                for (w, &b) in row.iter().enumerate() {
                    cocover[e * words + w] |= b;
                }
            }
        }
        let weight = members.iter().map(|m| m.len() as u32).collect();
        Units { words, bits, weight, members, of_elem, cocover }
    }

    fn len(&self) -> usize {
        self.weight.len()
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    fn full(&self, n: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.words];
        for e in 0..n {
            v[e / 64] |= 1 << (e % 64);
        }
        v
    }

    fn cost(&self, chosen: &[u32]) -> u64 {
        chosen.iter().map(|&u| self.weight[u as usize] as u64).sum()
    }

    fn expand(&self, chosen: &[u32]) -> Vec<usize> {
        let mut out: Vec<usize> = chosen.iter().flat_map(|&u| self.members[u as usize].iter().copied()).collect();
        out.sort_unstable();
        out
    }

    /// Largest gain per weight first, ties by index.
    fn greedy(&self, n: usize) -> Vec<u32> {
        let mut unc = self.full(n);
        let mut chosen = Vec::new();
        while unc.iter().any(|&w| w != 0) {
            let mut best: Option<(usize, u32)> = None;
            for u in 0..self.len() {
                let c = overlap(self.row(u), &unc);
                if c == 0 {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((b, bc)) => c as u64 * self.weight[b] as u64 > bc as u64 * self.weight[u] as u64,
                };
                if better {
                    best = Some((u, c));
                }
            }
            let (u, _) = best.expect("instance is feasible");
            subtract(&mut unc, self.row(u));
            chosen.push(u as u32);
        }
        chosen
    }

    /// Drops units made redundant by later ones, scanning from the end.
    fn prune(&self, n: usize, chosen: &mut Vec<u32>) {
        let mut count = vec![0u32; n];
        for &u in chosen.iter() {
            for e in iter_bits(self.row(u as usize)) {
                count[e] += 1;
            }
        }
        let mut i = chosen.len();
        while i > 0 {
            i -= 1;
            let u = chosen[i] as usize;
            if iter_bits(self.row(u)).all(|e| count[e] >= 2) {
                for e in iter_bits(self.row(u)) {
                    count[e] -= 1;
                }
                chosen.remove(i);
            }
        }
    }

    /// Smallest set of units containing every listed set.
    fn closure(&self, selection: &[usize]) -> Vec<u32> {
        let mut unit_of = vec![0u32; self.members.iter().map(Vec::len).sum()];
        for (u, ms) in self.members.iter().enumerate() {
            for &i in ms {
                unit_of[i] = u as u32;
            }
        }
        let mut out: Vec<u32> = selection.iter().map(|&i| unit_of[i]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &b)| {
        let mut b = b;
        std::iter::from_fn(move || {
            if b == 0 {
                return None;
            }
            let t = b.trailing_zeros() as usize;
            b &= b - 1;
            Some(w * 64 + t)
        })
    })
}

#[inline]
fn overlap(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

#[inline]
fn subtract(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x &= !y;
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Flow {
    Found,
    Exhausted,
    Abort,
}

/// Bound and branching data for one node.
struct NodeInfo {
    bound: u64,
    children: Vec<u32>,
}

struct Search<'a> {
    units: &'a Units,
    excluded: Vec<bool>,
    cnt: Vec<u32>,
    chosen: Vec<u32>,
    found: Option<Vec<u32>>,
    nodes: u64,
    budget: Budget,
    start: Instant,
    stop: Option<SolveStatus>,
}

impl<'a> Search<'a> {
    fn new(units: &'a Units, budget: Budget, start: Instant) -> Self {
        Search {
            units,
            excluded: vec![false; units.len()],
            cnt: vec![0; units.len()],
            chosen: Vec::new(),
            found: None,
            nodes: 0,
            budget,
            start,
            stop: None,
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                self.stop = Some(SolveStatus::BoundsOnly);
                return true;
            }
        }
        if let Some(t) = self.budget.max_time {
            if self.nodes % 1024 == 0 && self.start.elapsed() > t {
                self.stop = Some(SolveStatus::Timeout);
                return true;
            }
        }
        false
    }

    /// Lower bound on the weight still needed to cover `unc`, and the units
    /// to branch on. `None` if some element can no longer be covered.
    fn node_info(&mut self, unc: &[u64]) -> Option<NodeInfo> {
        let units = self.units;
        let mut maxc = 0;
        for u in 0..units.len() {
            let c = if self.excluded[u] { 0 } else { overlap(units.row(u), unc) };
            self.cnt[u] = c;
            maxc = maxc.max(c);
        }
        // (count of usable units, cheapest unit weight, element)
        let mut elems: Vec<(u32, u32, usize)> = Vec::new();
        let mut frac = 0.0f64;
        for e in iter_bits(unc) {
            let mut count = 0;
            let mut min_ratio = f64::INFINITY;
            let mut min_w = u32::MAX;
            for &u in &units.of_elem[e] {
                let c = self.cnt[u as usize];
                if c > 0 {
                    count += 1;
                    let w = units.weight[u as usize];
                    min_ratio = min_ratio.min(w as f64 / c as f64);
                    min_w = min_w.min(w);
                }
            }
            if count == 0 {
                return None;
            }
            frac += min_ratio;
            elems.push((count, min_w, e));
        }
        if elems.is_empty() {
            return Some(NodeInfo { bound: 0, children: Vec::new() });
        }
        let by_size = (elems.len() as u64).div_ceil(maxc as u64);
        let by_share = (frac - 1e-9).ceil() as u64;

        elems.sort_unstable();
        let mut free = unc.to_vec();
        let mut packing = 0u64;
        for &(_, w, e) in &elems {
            if free[e / 64] >> (e % 64) & 1 == 1 {
                packing += w as u64;
                subtract(&mut free, &units.cocover[e * units.words..(e + 1) * units.words]);
            }
        }

        let branch = elems[0].2;
        let mut children: Vec<u32> =
            units.of_elem[branch].iter().copied().filter(|&u| self.cnt[u as usize] > 0).collect();
        children.sort_by_key(|&u| (std::cmp::Reverse(self.cnt[u as usize]), u));
        Some(NodeInfo { bound: by_size.max(by_share).max(packing), children })
    }

    /// Looks for a cover of total weight at most `target`.
    fn dfs(&mut self, unc: &[u64], cost: u64, target: u64) -> Flow {
        self.nodes += 1;
        if self.out_of_budget() {
            return Flow::Abort;
        }
        if unc.iter().all(|&w| w == 0) {
            self.found = Some(self.chosen.clone());
            return Flow::Found;
        }
        let Some(info) = self.node_info(unc) else { return Flow::Exhausted };
        if cost + info.bound > target {
            return Flow::Exhausted;
        }
        let mut flow = Flow::Exhausted;
        let mut excluded_here = Vec::with_capacity(info.children.len());
        let mut next = vec![0u64; unc.len()];
        for &u in &info.children {
            let w = self.units.weight[u as usize] as u64;
            if cost + w <= target {
                next.copy_from_slice(unc);
                subtract(&mut next, self.units.row(u as usize));
                self.chosen.push(u);
                flow = self.dfs(&next, cost + w, target);
                self.chosen.pop();
                if flow != Flow::Exhausted {
                    break;
                }
            }
            self.excluded[u as usize] = true;
            excluded_here.push(u);
        }
        for u in excluded_here {
            self.excluded[u as usize] = false;
        }
        flow
    }
}

/// Exact minimum set cover by branch and bound.
///
/// Searches for covers of weight `t = L, L+1, ...` where `L` is the root
/// lower bound, so every exhausted level raises the proven bound. At each
/// node it branches on the uncovered element with the fewest usable sets
/// (excluding earlier siblings) and prunes with the largest of three bounds:
/// `ceil(remaining / largest set)`, a greedy packing of elements no two of
/// which share a set, and `ceil(Σ_e min_{S∋e} 1/|S ∩ uncovered|)`.
///
/// `warm_start` (indices of sets forming a cover) only improves the upper
/// bound reported when the budget runs out. `extra_lower_bound` is any
/// externally known lower bound.
pub fn solve_set_cover(
    instance: &SetCoverInstance,
    budget: Budget,
    warm_start: Option<&[usize]>,
    extra_lower_bound: u64,
    seed: u64,
) -> Result<SolveReport> {
    let start = Instant::now();
    let n = instance.universe_size;
    let units = Units::build(instance);
    let mut incumbent = units.greedy(n);
    units.prune(n, &mut incumbent);
    if let Some(ws) = warm_start {
        if !instance.is_cover(ws) {
            return Err(Error::Precondition("warm start is not a cover".into()));
        }
        let mut w = units.closure(ws);
        units.prune(n, &mut w);
        if units.cost(&w) < units.cost(&incumbent) {
            incumbent = w;
        }
    }
    let mut best = units.cost(&incumbent);

    let mut search = Search::new(&units, budget, start);
    let full = units.full(n);
    let root = search.node_info(&full).expect("instance is feasible");
    let mut lower = root.bound.max(extra_lower_bound).min(best);
    let mut log = vec![IncumbentEvent { elapsed_secs: start.elapsed().as_secs_f64(), value: best, bound: lower }];

    while lower < best {
        match search.dfs(&full, 0, lower) {
            Flow::Found => {
                incumbent = search.found.take().expect("found cover");
                best = units.cost(&incumbent);
                debug_assert_eq!(best, lower);
            }
            Flow::Exhausted => lower += 1,
            Flow::Abort => break,
        }
        log.push(IncumbentEvent { elapsed_secs: start.elapsed().as_secs_f64(), value: best, bound: lower });
    }
    let status = if lower == best { SolveStatus::Optimal } else { search.stop.unwrap_or(SolveStatus::BoundsOnly) };
    Ok(SolveReport {
        outcome: SolveOutcome {
            status,
            best_value: best,
            lower_bound: lower,
            selection: units.expand(&incumbent),
            nodes_explored: search.nodes,
            seed,
        },
        log,
    })
}

pub fn exact_set_cover(instance: &SetCoverInstance, budget: Budget) -> Result<SolveOutcome> {
    Ok(solve_set_cover(instance, budget, None, 0, 0)?.outcome)
}

/// A solved θ instance.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaSolution {
    pub outcome: SolveOutcome,
    pub cover: Cover,
    pub log: Vec<IncumbentEvent>,
}

fn clique_instance(params: GraphParams, cliques: &[Clique]) -> Result<SetCoverInstance> {
    let sets = cliques.iter().map(|c| c.iter_vertices().map(vertex_index).collect()).collect();
    SetCoverInstance::new(params.vertex_count() as usize, sets)
}

fn theta_solution(params: GraphParams, cliques: &[Clique], report: SolveReport) -> Result<ThetaSolution> {
    let chosen = report.outcome.selection.iter().map(|&i| cliques[i]).collect();
    Ok(ThetaSolution { outcome: report.outcome, cover: Cover::new(params, chosen)?, log: report.log })
}

/// θ(J(n, k)) by [`solve_set_cover`] over all maximal cliques, with
/// `ceil(binomial(n, k) / ω)` as an extra root bound. `warm_start` may be any
/// cover of the same graph (for instance from [`super::anneal_cover`]).
pub fn exact_theta(params: GraphParams, budget: Budget, warm_start: Option<&Cover>) -> Result<ThetaSolution> {
    let cliques = enumerate_maximal_cliques(params);
    let instance = clique_instance(params, &cliques)?;
    let warm = match warm_start {
        Some(cover) => {
            if cover.params() != params {
                return Err(Error::ParamsMismatch(format!("warm start is for {}", cover.params())));
            }
            let mut idx = Vec::with_capacity(cover.len());
            for c in cover.cliques() {
                match cliques.iter().position(|d| d == c) {
                    Some(i) => idx.push(i),
                    None => return Err(Error::Precondition(format!("warm start uses non-maximal clique {c}"))),
                }
            }
            Some(idx)
        }
        None => None,
    };
    let report = solve_set_cover(&instance, budget, warm.as_deref(), simple_lower_bound(params), 0)?;
    theta_solution(params, &cliques, report)
}

/// The `|S|`-largest-gain greedy cover: repeatedly takes the maximal clique
/// covering the most uncovered vertices, ties broken by canonical order.
pub fn greedy_cover(params: GraphParams) -> Cover {
    let cliques = enumerate_maximal_cliques(params);
    let instance = clique_instance(params, &cliques).expect("maximal cliques cover J(n, k)");
    let units = Units::build(&instance);
    let chosen = units.greedy(instance.universe_size);
    Cover::new(params, chosen.iter().map(|&u| cliques[u as usize]).collect()).expect("distinct cliques")
}

/// Smallest cover of `J(2k, k)` closed under `A_S ↔ B_{S^c}`.
///
/// Such a cover contains `S` iff it contains `S^c`, so the search runs on
/// one representative per complementary pair of vertices (the one holding
/// element 1) with one unit per pair of cliques, warm-started by annealing.
/// Values and bounds in the outcome and log count cliques, so they are even.
pub fn symmetric_cover_search(k: u32, budget: Budget) -> Result<ThetaSolution> {
    if k < 2 {
        return Err(Error::Precondition("symmetric search needs k >= 2".into()));
    }
    let params = GraphParams::new(2 * k, k)?;
    let n = params.n();
    let cliques = enumerate_maximal_cliques(params);
    let pairs: Vec<(usize, usize)> = cliques
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let partner = c.complement();
            (i, cliques.iter().position(|d| *d == partner).expect("complement is maximal"))
        })
        .filter(|&(i, j)| i < j)
        .collect();

    let mut rep = vec![usize::MAX; params.vertex_count() as usize];
    let mut reps = 0;
    for v in crate::graph::vertices(params).into_iter().filter(|v| v.contains(1)) {
        rep[vertex_index(v)] = reps;
        rep[vertex_index(v.complement(n))] = reps;
        reps += 1;
    }
    let sets = pairs
        .iter()
        .map(|&(i, _)| {
            let mut s: Vec<usize> = cliques[i].iter_vertices().map(|v| rep[vertex_index(v)]).collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    let instance = SetCoverInstance::new(reps, sets)?;
    let units = Units::build(&instance);
    let greedy = units.expand(&units.greedy(reps));
    let penalty = clique_number(params) as i64 + 1;
    let warm = anneal_sets(reps, instance.sets(), &greedy, penalty, &AnnealSchedule::default(), 0).best;
    let lower = simple_lower_bound(params).div_ceil(2);
    let mut report = solve_set_cover(&instance, budget, Some(&warm), lower, 0)?;

    let outcome = &mut report.outcome;
    let mut selection: Vec<usize> = outcome.selection.iter().flat_map(|&u| [pairs[u].0, pairs[u].1]).collect();
    selection.sort_unstable();
    outcome.selection = selection;
    outcome.best_value *= 2;
    outcome.lower_bound *= 2;
    for e in &mut report.log {
        e.value *= 2;
        e.bound *= 2;
    }
    theta_solution(params, &cliques, report)
}

/// Largest universe [`covering_number_small`] accepts.
pub const COVERING_UNIVERSE_LIMIT: u128 = 1 << 16;
/// Largest number of candidate blocks [`covering_number_small`] accepts.
pub const COVERING_BLOCK_LIMIT: u128 = 1 << 20;

/// Exact covering number `C(v, s, t)`: fewest `s`-subsets of `[v]` such
/// that every `t`-subset lies in one of them. Returns the outcome and the
/// blocks of the best covering found.
pub fn covering_number_small(v: u32, s: u32, t: u32, budget: Budget) -> Result<(SolveOutcome, Vec<Subset>)> {
    if !(v >= s && s >= t && t >= 1) || v > crate::subset::MAX_N {
        return Err(Error::Precondition(format!("need 64 >= v >= s >= t >= 1, got ({v}, {s}, {t})")));
    }
    let universe = binomial(v as u64, t as u64).unwrap_or(u128::MAX);
    let blocks = binomial(v as u64, s as u64).unwrap_or(u128::MAX);
    if universe > COVERING_UNIVERSE_LIMIT || blocks > COVERING_BLOCK_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "C({v}, {s}, {t}) has {universe} t-subsets and {blocks} candidate blocks"
        )));
    }
    let candidates: Vec<Subset> = Combinations::new(v, s, VertexOrder::Colex).collect();
    let sets = candidates
        .iter()
        .map(|&b| {
            let elems = b.elements();
            let mut out = Vec::new();
            let mut pos: Vec<usize> = (0..t as usize).collect();
            loop {
                let sub = Subset::from_elements(pos.iter().map(|&p| elems[p])).expect("distinct");
                out.push(colex_rank(sub) as usize);
                // next t-combination of positions
                let mut i = t as usize;
                loop {
                    if i == 0 {
                        return out;
                    }
                    i -= 1;
                    if pos[i] < elems.len() - (t as usize - i) {
                        pos[i] += 1;
                        for j in i + 1..t as usize {
                            pos[j] = pos[j - 1] + 1;
                        }
                        break;
                    }
                }
            }
        })
        .collect();
    let instance = SetCoverInstance::new(universe as usize, sets)?;
    let outcome = solve_set_cover(&instance, budget, None, 0, 0)?.outcome;
    let chosen = outcome.selection.iter().map(|&i| candidates[i]).collect();
    Ok((outcome, chosen))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_cover;

    fn p(n: u32, k: u32) -> GraphParams {
        GraphParams::new(n, k).unwrap()
    }

    #[test]
    fn infeasible_instances_are_rejected() {
        assert_eq!(SetCoverInstance::new(3, vec![vec![0, 1]]).unwrap_err(), Error::Infeasible(2));
        assert!(SetCoverInstance::new(2, vec![vec![0, 5]]).is_err());
    }

    #[test]
    fn tiny_instances() {
        let inst = SetCoverInstance::new(4, vec![vec![0, 1], vec![2, 3], vec![1, 2], vec![0, 3]]).unwrap();
        let out = exact_set_cover(&inst, Budget::unlimited()).unwrap();
        assert_eq!(out.best_value, 2);
        assert!(out.is_optimal());
        assert!(inst.is_cover(&out.selection));
        let paired = inst.clone().with_pairs(vec![(0, 2)]).unwrap();
        let out = exact_set_cover(&paired, Budget::unlimited()).unwrap();
        assert_eq!(out.best_value, 3);
        assert!(paired.respects_pairs(&out.selection));
    }

    #[test]
    fn small_theta_values() {
        for (n, k, want) in [(4, 2, 2), (5, 2, 3), (6, 2, 4), (6, 3, 6), (7, 3, 9), (8, 4, 14)] {
            let sol = exact_theta(p(n, k), Budget::unlimited(), None).unwrap();
            assert_eq!(sol.outcome.best_value, want, "J({n},{k})");
            assert!(sol.outcome.is_optimal());
            assert!(verify_cover(&sol.cover).covered);
        }
    }

    #[test]
    fn node_budget_gives_bounds() {
        let sol = exact_theta(p(8, 3), Budget::nodes(10), None).unwrap();
        assert_eq!(sol.outcome.status, SolveStatus::BoundsOnly);
        assert!(sol.outcome.lower_bound <= 12 && sol.outcome.best_value >= 12);
        assert!(verify_cover(&sol.cover).covered);
    }

    #[test]
    fn greedy_is_a_cover() {
        assert_eq!(greedy_cover(p(7, 1)).len(), 1);
        let g = greedy_cover(p(5, 2));
        assert!(g.len() <= 4 && verify_cover(&g).covered);
    }

    #[test]
    fn symmetric_small() {
        assert_eq!(symmetric_cover_search(2, Budget::unlimited()).unwrap().outcome.best_value, 2);
        let s3 = symmetric_cover_search(3, Budget::unlimited()).unwrap();
        assert_eq!(s3.outcome.best_value, 6);
        assert!(s3.outcome.is_optimal());
    }

    #[test]
    fn covering_numbers() {
        assert_eq!(covering_number_small(4, 3, 2, Budget::unlimited()).unwrap().0.best_value, 3);
        assert_eq!(covering_number_small(7, 3, 2, Budget::unlimited()).unwrap().0.best_value, 7);
        assert_eq!(covering_number_small(5, 2, 2, Budget::unlimited()).unwrap().0.best_value, 10);
        assert!(covering_number_small(3, 4, 2, Budget::unlimited()).is_err());
    }
}
