use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::clique_number;
use crate::graph::{enumerate_maximal_cliques, vertex_index, Clique, Cover, GraphParams};

use super::greedy_cover;

/// Annealing parameters.
///
/// Defaults: start temperature chosen so that about 80% of sampled uphill
/// moves are accepted, geometric cooling by 0.999 after every
/// `moves_per_level` moves (default: twice the number of maximal cliques),
/// stop below temperature 0.05, uncovered-vertex penalty ω + 1, 8 restarts.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnealSchedule {
    pub initial_temperature: Option<f64>,
    pub cooling: f64,
    pub moves_per_level: Option<usize>,
    pub final_temperature: f64,
    pub penalty: Option<u32>,
    pub restarts: usize,
    /// Follow each restart with the fixed-size swap phase.
    pub compress: bool,
}

impl Default for AnnealSchedule {
    fn default() -> Self {
        AnnealSchedule {
            initial_temperature: None,
            cooling: 0.999,
            moves_per_level: None,
            final_temperature: 0.05,
            penalty: None,
            restarts: 8,
            compress: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnnealResult {
    pub cover: Cover,
    pub size: usize,
    pub seed: u64,
    /// Index of the restart that produced `cover`.
    pub restart: usize,
    pub restart_sizes: Vec<usize>,
}

const COMPRESS_ATTEMPTS: usize = 3;

/// Problem data shared by all restarts.
struct Landscape {
    verts: Vec<Vec<u32>>,
    cliques_of: Vec<Vec<u32>>,
    start: Vec<u32>,
    penalty: i64,
}

/// Set of small integers with O(1) insert, remove and random pick.
struct IndexSet {
    items: Vec<u32>,
    pos: Vec<u32>,
}

impl IndexSet {
    const ABSENT: u32 = u32::MAX;

    fn new(cap: usize) -> Self {
        IndexSet { items: Vec::new(), pos: vec![Self::ABSENT; cap] }
    }

    fn contains(&self, x: u32) -> bool {
        self.pos[x as usize] != Self::ABSENT
    }

    fn insert(&mut self, x: u32) {
        if !self.contains(x) {
            self.pos[x as usize] = self.items.len() as u32;
            self.items.push(x);
        }
    }

    fn remove(&mut self, x: u32) {
        let p = self.pos[x as usize];
        if p == Self::ABSENT {
            return;
        }
        let last = self.items.pop().expect("non-empty");
        if last != x {
            self.items[p as usize] = last;
            self.pos[last as usize] = p;
        }
        self.pos[x as usize] = Self::ABSENT;
    }

    fn len(&self) -> usize {
        self.items.len()
    }

    fn pick(&self, rng: &mut ChaCha8Rng) -> u32 {
        self.items[rng.gen_range(0..self.items.len())]
    }
}

struct State<'a> {
    land: &'a Landscape,
    count: Vec<u32>,
    uncovered: IndexSet,
    selected: IndexSet,
}

impl<'a> State<'a> {
    fn new(land: &'a Landscape) -> Self {
        Self::with_selection(land, &land.start)
    }

    fn with_selection(land: &'a Landscape, selection: &[u32]) -> Self {
        let mut s = State {
            land,
            count: vec![0; land.cliques_of.len()],
            uncovered: IndexSet::new(land.cliques_of.len()),
            selected: IndexSet::new(land.verts.len()),
        };
        for v in 0..land.cliques_of.len() as u32 {
            s.uncovered.insert(v);
        }
        for &c in selection {
            s.add(c);
        }
        s
    }

    fn energy(&self) -> i64 {
        self.selected.len() as i64 + self.land.penalty * self.uncovered.len() as i64
    }

    fn add(&mut self, c: u32) {
        self.selected.insert(c);
        for &v in &self.land.verts[c as usize] {
            if self.count[v as usize] == 0 {
                self.uncovered.remove(v);
            }
            self.count[v as usize] += 1;
        }
    }

    fn remove(&mut self, c: u32) {
        self.selected.remove(c);
        for &v in &self.land.verts[c as usize] {
            self.count[v as usize] -= 1;
            if self.count[v as usize] == 0 {
                self.uncovered.insert(v);
            }
        }
    }

    fn add_delta(&self, c: u32) -> i64 {
        let newly = self.land.verts[c as usize].iter().filter(|&&v| self.count[v as usize] == 0).count();
        1 - self.land.penalty * newly as i64
    }

    fn remove_delta(&self, c: u32) -> i64 {
        let lost = self.land.verts[c as usize].iter().filter(|&&v| self.count[v as usize] == 1).count();
        self.land.penalty * lost as i64 - 1
    }

    /// An unselected clique through `v`, if any.
    fn clique_through(&self, v: u32, rng: &mut ChaCha8Rng) -> Option<u32> {
        let list = &self.land.cliques_of[v as usize];
        let off = rng.gen_range(0..list.len());
        (0..list.len()).map(|i| list[(i + off) % list.len()]).find(|&c| !self.selected.contains(c))
    }
}

enum Move {
    Add(u32),
    Remove(u32),
    Swap(u32, u32),
}

fn propose(s: &State, rng: &mut ChaCha8Rng) -> Option<Move> {
    let roll: f64 = rng.gen();
    if s.uncovered.len() > 0 {
        let v = s.uncovered.pick(rng);
        let inn = s.clique_through(v, rng)?;
        if roll < 0.4 || s.selected.len() == 0 {
            return Some(Move::Add(inn));
        }
        let out = s.selected.pick(rng);
        return Some(if roll < 0.8 { Move::Swap(out, inn) } else { Move::Remove(out) });
    }
    if s.selected.len() == 0 {
        return None;
    }
    let out = s.selected.pick(rng);
    if roll < 0.5 {
        return Some(Move::Remove(out));
    }
    let verts = &s.land.verts[out as usize];
    let v = verts[rng.gen_range(0..verts.len())];
    s.clique_through(v, rng).map(|inn| Move::Swap(out, inn))
}

/// Applies the move if the Metropolis rule accepts it; returns whether it did.
fn attempt(s: &mut State, m: Move, temperature: f64, rng: &mut ChaCha8Rng) -> bool {
    let accept = |delta: i64, rng: &mut ChaCha8Rng| delta <= 0 || rng.gen::<f64>() < (-(delta as f64) / temperature).exp();
    match m {
        Move::Add(c) => {
            let d = s.add_delta(c);
            if accept(d, rng) {
                s.add(c);
                return true;
            }
        }
        Move::Remove(c) => {
            let d = s.remove_delta(c);
            if accept(d, rng) {
                s.remove(c);
                return true;
            }
        }
        Move::Swap(out, inn) => {
            let d1 = s.remove_delta(out);
            s.remove(out);
            let d = d1 + s.add_delta(inn);
            if accept(d, rng) {
                s.add(inn);
                return true;
            }
            s.add(out);
        }
    }
    false
}

fn uphill_delta(s: &mut State, m: Move) -> i64 {
    match m {
        Move::Add(c) => s.add_delta(c),
        Move::Remove(c) => s.remove_delta(c),
        Move::Swap(out, inn) => {
            let d1 = s.remove_delta(out);
            s.remove(out);
            let d = d1 + s.add_delta(inn);
            s.add(out);
            d
        }
    }
}

/// Temperature at which the mean sampled uphill move is accepted with
/// probability 0.8.
fn calibrate(land: &Landscape, rng: &mut ChaCha8Rng) -> f64 {
    let mut s = State::new(land);
    let mut sum = 0i64;
    let mut n = 0i64;
    for _ in 0..2000 {
        if let Some(m) = propose(&s, rng) {
            let d = uphill_delta(&mut s, m);
            if d > 0 {
                sum += d;
                n += 1;
            }
        }
    }
    let mean = if n == 0 { 1.0 } else { sum as f64 / n as f64 };
    -mean / 0.8f64.ln()
}

fn run(land: &Landscape, schedule: &AnnealSchedule, seed: u64) -> Vec<u32> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = schedule.initial_temperature.unwrap_or_else(|| calibrate(land, &mut rng));
    let moves = schedule.moves_per_level.unwrap_or(2 * land.verts.len()).max(1);
    let mut s = State::new(land);
    let mut best = land.start.clone();
    while t > schedule.final_temperature {
        for _ in 0..moves {
            if let Some(m) = propose(&s, &mut rng) {
                if attempt(&mut s, m, t, &mut rng) && s.uncovered.len() == 0 && s.selected.len() < best.len() {
                    best = s.selected.items.clone();
                }
            }
        }
        t *= schedule.cooling;
    }
    debug_assert!(s.energy() >= best.len() as i64);
    prune(land, &mut best);
    if schedule.compress {
        best = compress(land, schedule, best, moves, &mut rng);
    }
    best
}

/// Repeatedly drops the least useful clique of the best cover and anneals
/// with swap moves only (constant size, so the energy is the penalty on
/// uncovered vertices) until the smaller selection covers again.
fn compress(land: &Landscape, schedule: &AnnealSchedule, mut best: Vec<u32>, moves: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let penalty = land.penalty as f64;
    let mut failures = 0;
    while best.len() > 1 && failures < COMPRESS_ATTEMPTS {
        let mut s = State::with_selection(land, &best);
        // first attempt drops the least useful clique, later ones a random one
        let out = if failures == 0 {
            *best.iter().min_by_key(|&&c| (s.remove_delta(c), c)).expect("non-empty")
        } else {
            best[rng.gen_range(0..best.len())]
        };
        s.remove(out);
        let mut t = penalty;
        while t > schedule.final_temperature * penalty && s.uncovered.len() > 0 {
            for _ in 0..moves {
                let v = s.uncovered.pick(rng);
                let Some(inn) = s.clique_through(v, rng) else { continue };
                let out = s.selected.pick(rng);
                attempt(&mut s, Move::Swap(out, inn), t, rng);
                if s.uncovered.len() == 0 {
                    break;
                }
            }
            t *= schedule.cooling;
        }
        if s.uncovered.len() > 0 {
            failures += 1;
            continue;
        }
        failures = 0;
        best = s.selected.items.clone();
        prune(land, &mut best);
    }
    best
}

fn prune(land: &Landscape, sel: &mut Vec<u32>) {
    let mut count = vec![0u32; land.cliques_of.len()];
    for &c in sel.iter() {
        for &v in &land.verts[c as usize] {
            count[v as usize] += 1;
        }
    }
    sel.retain(|&c| {
        let redundant = land.verts[c as usize].iter().all(|&v| count[v as usize] >= 2);
        if redundant {
            for &v in &land.verts[c as usize] {
                count[v as usize] -= 1;
            }
        }
        !redundant
    });
}

/// Simulated annealing over sets of maximal cliques.
///
/// The energy of a selection is `|selection| + penalty * |uncovered|`; moves
/// add a clique through a random uncovered vertex, remove a random selected
/// clique, or swap one for a clique through one of its vertices. Each
/// restart starts from the greedy cover and uses its own ChaCha8 stream
/// seeded with `seed + restart`. Restarts run in parallel; the smallest
/// cover wins, ties going to the lowest restart index, so the result does
/// not depend on the thread count.
pub fn anneal_cover(params: GraphParams, schedule: &AnnealSchedule, seed: u64) -> AnnealResult {
    let cliques: Vec<Clique> = enumerate_maximal_cliques(params);
    let sets: Vec<Vec<usize>> = cliques.iter().map(|c| c.iter_vertices().map(vertex_index).collect()).collect();
    let greedy = greedy_cover(params);
    let start: Vec<usize> =
        greedy.cliques().iter().map(|c| cliques.iter().position(|d| d == c).expect("maximal")).collect();
    let penalty = schedule.penalty.map_or(clique_number(params) as i64 + 1, i64::from);
    let runs = anneal_sets(params.vertex_count() as usize, &sets, &start, penalty, schedule, seed);
    let cover =
        Cover::new(params, runs.best.iter().map(|&i| cliques[i]).collect()).expect("distinct cliques");
    AnnealResult { size: cover.len(), cover, seed, restart: runs.restart, restart_sizes: runs.restart_sizes }
}

pub(crate) struct SetAnneal {
    /// Indices of the chosen sets, ascending.
    pub best: Vec<usize>,
    pub restart: usize,
    pub restart_sizes: Vec<usize>,
}

/// The annealer on an arbitrary set system over `0..universe`; `start` must
/// be a cover.
pub(crate) fn anneal_sets(
    universe: usize,
    sets: &[Vec<usize>],
    start: &[usize],
    penalty: i64,
    schedule: &AnnealSchedule,
    seed: u64,
) -> SetAnneal {
    let verts: Vec<Vec<u32>> = sets.iter().map(|s| s.iter().map(|&v| v as u32).collect()).collect();
    let mut cliques_of = vec![Vec::new(); universe];
    for (i, vs) in verts.iter().enumerate() {
        for &v in vs {
            cliques_of[v as usize].push(i as u32);
        }
    }
    let mut start: Vec<u32> = start.iter().map(|&i| i as u32).collect();
    let mut land = Landscape { verts, cliques_of, start: Vec::new(), penalty };
    prune(&land, &mut start);
    land.start = start;

    let restarts = schedule.restarts.max(1);
    let results: Vec<Vec<u32>> =
        (0..restarts).into_par_iter().map(|i| run(&land, schedule, seed.wrapping_add(i as u64))).collect();
    let restart_sizes: Vec<usize> = results.iter().map(Vec::len).collect();
    let restart = (0..restarts).min_by_key(|&i| (restart_sizes[i], i)).expect("at least one restart");
    let mut best: Vec<usize> = results[restart].iter().map(|&i| i as usize).collect();
    best.sort_unstable();
    SetAnneal { best, restart, restart_sizes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_cover;

    #[test]
    fn small_cases_reach_optimum() {
        let quick = AnnealSchedule { restarts: 2, ..AnnealSchedule::default() };
        for (n, k, want) in [(5, 2, 3), (6, 3, 6), (7, 3, 9)] {
            let r = anneal_cover(GraphParams::new(n, k).unwrap(), &quick, 1);
            assert!(verify_cover(&r.cover).covered);
            assert_eq!(r.size, want, "J({n},{k})");
        }
    }

    #[test]
    fn same_seed_same_cover() {
        let quick = AnnealSchedule { restarts: 3, ..AnnealSchedule::default() };
        let p = GraphParams::new(7, 3).unwrap();
        assert_eq!(anneal_cover(p, &quick, 9).cover, anneal_cover(p, &quick, 9).cover);
    }
}
