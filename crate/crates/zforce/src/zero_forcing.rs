//! Zero forcing: closures, exact minimum forcing sets for small graphs, and
//! the leaf-plus-maximum-degree (LM) removal heuristic.
//!
//! A black vertex with exactly one white neighbour forces that neighbour
//! black. The closure of an initial black set is the fixed point of this
//! rule; the zero forcing number Z(G) is the size of a smallest initial set
//! whose closure is everything. Computing Z(G) exactly is NP-hard, hence the
//! heuristic: peel leaves with a handful of locally optimal colouring rules
//! and fall back to removing a maximum-degree vertex when the rules stall.
//! The fallback count (`delta_z`) is the certificate of how far the run
//! strayed from pure leaf reasoning.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Default vertex cap for the exact brute-force search.
pub const DEFAULT_EXACT_CAP: usize = 16;

/// Widest graph the bitmask search supports regardless of the caller's cap.
const MASK_LIMIT: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ZeroForcingError {
    #[error("graph has {n} alive vertices, exact search capped at {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("forcing set size {z} exceeds vertex count {n}")]
    BadBound { z: usize, n: usize },
}

/// How the heuristic interprets the sibling-leaf colouring rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum LmMode {
    /// Keep the working colouring closed under the forcing rule: when the
    /// rules colour and remove sibling leaves, the forced vertices they
    /// imply (hub, then anything the closure reaches) are coloured too, and
    /// sibling leaves are recognised through chains of degree-2 vertices.
    /// This is the mode that stays exact on forests.
    #[default]
    #[serde(rename = "closure-consistent")]
    ClosureConsistent,
    /// Apply the published wording verbatim: siblings are only leaves at
    /// graph distance exactly 2, and nothing is coloured beyond them. Cheap,
    /// but strands hubs white (a star K_{1,k} costs k instead of k-1).
    #[serde(rename = "strict-literal")]
    StrictLiteral,
}

impl fmt::Display for LmMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LmMode::ClosureConsistent => write!(f, "closure-consistent"),
            LmMode::StrictLiteral => write!(f, "strict-literal"),
        }
    }
}

impl FromStr for LmMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "closure-consistent" => Ok(LmMode::ClosureConsistent),
            "strict-literal" => Ok(LmMode::StrictLiteral),
            other => Err(format!(
                "unknown mode {other:?}, expected closure-consistent or strict-literal"
            )),
        }
    }
}

/// Which rule put a vertex into the forcing set (trace entries).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForcingRule {
    /// White leaf at the end of an isolated chain with a white far end.
    ChainEnd,
    /// Sibling-leaf colouring around a hub/junction.
    SiblingLeaf,
    /// Single leaf coloured to restart a stalled closure-consistent run.
    StallBreak,
    /// Maximum-degree fallback; counted in `delta_z`.
    MaxDegree,
    /// White isolated vertex swept up at the end of an iteration.
    IsolatedWhite,
}

/// Output of [`lm_zero_forcing`].
#[derive(Debug, Clone)]
pub struct ForcingResult {
    /// The forcing set, ascending. Always a valid forcing set of the input.
    pub zfs: Vec<usize>,
    /// `zfs.len()`, the heuristic's estimate of Z(G).
    pub z_lm: usize,
    /// Number of maximum-degree fallback removals.
    pub delta_z: usize,
    /// Per-addition rule tags in the order the set was built, when traced.
    pub rule_trace: Option<Vec<(ForcingRule, usize)>>,
}

/// Runs the forcing rule to its fixed point from `initial_black` and returns
/// the black vertices, ascending. Dead or out-of-range ids in the input are
/// ignored. The fixed point does not depend on processing order.
pub fn closure(g: &Graph, initial_black: &[usize]) -> Vec<usize> {
    let n = g.n_total();
    let mut black = vec![false; n];
    for &v in initial_black {
        if g.is_alive(v) {
            black[v] = true;
        }
    }
    let mut white_cnt = vec![0usize; n];
    let mut queue = VecDeque::new();
    for v in g.alive_vertices() {
        white_cnt[v] = g.neighbors(v).filter(|&u| !black[u]).count();
        if black[v] && white_cnt[v] == 1 {
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        if !black[v] || white_cnt[v] != 1 {
            continue;
        }
        let w = g
            .neighbors(v)
            .find(|&u| !black[u])
            .expect("white count said one white neighbour");
        black[w] = true;
        for u in g.neighbors(w) {
            white_cnt[u] -= 1;
            if black[u] && white_cnt[u] == 1 {
                queue.push_back(u);
            }
        }
        if white_cnt[w] == 1 {
            queue.push_back(w);
        }
    }
    g.alive_vertices().filter(|&v| black[v]).collect()
}

/// True when the closure of `s` colours every alive vertex.
pub fn is_forcing_set(g: &Graph, s: &[usize]) -> bool {
    closure(g, s).len() == g.n_alive()
}

/// `n - z`, the standard lower bound on the minimum rank implied by a
/// forcing set of size `z` on `n` vertices.
pub fn minimum_rank_lower_bound(n: usize, z: usize) -> Result<usize, ZeroForcingError> {
    if z > n {
        return Err(ZeroForcingError::BadBound { z, n });
    }
    Ok(n - z)
}

/// Exact zero forcing number with the default size cap.
pub fn exact_zero_forcing(g: &Graph) -> Result<(usize, Vec<usize>), ZeroForcingError> {
    exact_zero_forcing_with_cap(g, DEFAULT_EXACT_CAP)
}

/// Exact zero forcing number by subset enumeration in increasing size and
/// lexicographic order; returns the first minimum witness. Refuses graphs
/// with more than `cap` (or 24, whichever is smaller) alive vertices.
pub fn exact_zero_forcing_with_cap(
    g: &Graph,
    cap: usize,
) -> Result<(usize, Vec<usize>), ZeroForcingError> {
    let ids: Vec<usize> = g.alive_vertices().collect();
    let n = ids.len();
    let cap = cap.min(MASK_LIMIT);
    if n > cap {
        return Err(ZeroForcingError::CapExceeded { n, cap });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let mut index_of = vec![usize::MAX; g.n_total()];
    for (i, &v) in ids.iter().enumerate() {
        index_of[v] = i;
    }
    let adj: Vec<u32> = ids
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .fold(0u32, |m, u| m | (1 << index_of[u]))
        })
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };

    for size in 1..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mask = combo.iter().fold(0u32, |m, &i| m | (1 << i));
            if closure_mask(&adj, mask) == full {
                return Ok((size, combo.iter().map(|&i| ids[i]).collect()));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set is always forcing");
}

fn closure_mask(adj: &[u32], init: u32) -> u32 {
    let mut black = init;
    loop {
        let mut next = black;
        let mut active = black;
        while active != 0 {
            let v = active.trailing_zeros() as usize;
            active &= active - 1;
            let whites = adj[v] & !black;
            if whites.count_ones() == 1 {
                next |= whites;
            }
        }
        if next == black {
            return black;
        }
        black = next;
    }
}

/// Advances `combo` to the next k-combination of `0..n` in lexicographic
/// order; false when exhausted.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in (i + 1)..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Leaf-plus-maximum-degree heuristic. Returns a valid forcing set of `g`
/// whose size bounds Z(G) from above; `delta_z` counts maximum-degree
/// fallback removals (0 on forests in the default mode).
pub fn lm_zero_forcing(g: &Graph, mode: LmMode) -> ForcingResult {
    Engine::new(g, mode, false).run()
}

/// Same as [`lm_zero_forcing`] but records a `(rule, vertex)` trace.
pub fn lm_zero_forcing_traced(g: &Graph, mode: LmMode) -> ForcingResult {
    Engine::new(g, mode, true).run()
}

/// One pendant chain hanging off a junction: a maximal run of degree-2
/// vertices starting at the junction's neighbour `first` and terminating at
/// the leaf `end` (equal when the chain has length one).
#[derive(Debug, Clone, Copy)]
struct PendantChain {
    first: usize,
    end: usize,
}

struct JunctionView {
    chains: Vec<PendantChain>,
    non_pendant: usize,
}

struct Engine {
    g: Graph,
    black: Vec<bool>,
    white_cnt: Vec<usize>,
    queue: VecDeque<usize>,
    mode: LmMode,
    zfs: Vec<usize>,
    delta_z: usize,
    trace: Option<Vec<(ForcingRule, usize)>>,
    removals: usize,
}

impl Engine {
    fn new(g: &Graph, mode: LmMode, traced: bool) -> Self {
        let n = g.n_total();
        let mut white_cnt = vec![0usize; n];
        let working = g.clone();
        for v in working.alive_vertices() {
            white_cnt[v] = working.degree(v);
        }
        Engine {
            g: working,
            black: vec![false; n],
            white_cnt,
            queue: VecDeque::new(),
            mode,
            zfs: Vec::new(),
            delta_z: 0,
            trace: traced.then(Vec::new),
            removals: 0,
        }
    }

    fn cc(&self) -> bool {
        self.mode == LmMode::ClosureConsistent
    }

    /// Colours `v` black and, in closure-consistent mode, queues any forcing
    /// this enables. No-op on dead or already-black vertices.
    fn colour(&mut self, v: usize) {
        if !self.g.is_alive(v) || self.black[v] {
            return;
        }
        self.black[v] = true;
        let nbrs: Vec<usize> = self.g.neighbors(v).collect();
        for u in nbrs {
            self.white_cnt[u] -= 1;
            if self.cc() && self.black[u] && self.white_cnt[u] == 1 {
                self.queue.push_back(u);
            }
        }
        if self.cc() && self.white_cnt[v] == 1 {
            self.queue.push_back(v);
        }
    }

    /// Runs queued forcings to the fixed point (closure-consistent only).
    fn propagate(&mut self) {
        while let Some(v) = self.queue.pop_front() {
            if !self.g.is_alive(v) || !self.black[v] || self.white_cnt[v] != 1 {
                continue;
            }
            let w = self
                .g
                .neighbors(v)
                .find(|&u| !self.black[u])
                .expect("white count said one white neighbour");
            self.colour(w);
        }
    }

    fn add_to_set(&mut self, v: usize, rule: ForcingRule) {
        self.colour(v);
        self.zfs.push(v);
        if let Some(t) = self.trace.as_mut() {
            t.push((rule, v));
        }
    }

    /// Removes `v` from the working graph. Only black vertices are ever
    /// removed, so white-neighbour counts are unaffected.
    fn remove(&mut self, v: usize) {
        debug_assert!(self.black[v], "only black vertices are removed");
        self.g.remove_vertex(v).expect("removing a live vertex");
        self.removals += 1;
    }

    /// Black-leaf rule: remove the leaf, colour its neighbour (it has been
    /// forced), and keep going while the neighbour is itself a leaf.
    fn cascade(&mut self, mut cur: usize) {
        loop {
            let nb = self.g.neighbors(cur).next().expect("leaf has a neighbour");
            self.remove(cur);
            self.colour(nb);
            if self.g.is_alive(nb) && self.g.degree(nb) == 1 {
                cur = nb;
            } else {
                break;
            }
        }
        if self.cc() {
            self.propagate();
        }
    }

    /// Walks from a leaf through degree-2 vertices; `Some(junction)` when
    /// the walk hits a vertex of degree three or more, `None` when the
    /// component is a path.
    fn junction_of(&self, leaf: usize) -> Option<usize> {
        let mut prev = leaf;
        let mut cur = self.g.neighbors(leaf).next().expect("leaf has a neighbour");
        let mut steps = 0usize;
        while self.g.degree(cur) == 2 && steps <= 2 * self.g.n_total() {
            let next = self
                .g
                .neighbors(cur)
                .find(|&u| u != prev)
                .expect("degree 2");
            prev = cur;
            cur = next;
            steps += 1;
        }
        (self.g.degree(cur) >= 3).then_some(cur)
    }

    /// Classifies every branch at junction `u` as a pendant chain or not.
    fn analyze(&self, u: usize) -> JunctionView {
        let mut chains = Vec::new();
        let mut non_pendant = 0usize;
        let nbrs: Vec<usize> = self.g.neighbors(u).collect();
        for x in nbrs {
            let mut prev = u;
            let mut cur = x;
            let mut steps = 0usize;
            while self.g.degree(cur) == 2 && steps <= 2 * self.g.n_total() {
                let next = self
                    .g
                    .neighbors(cur)
                    .find(|&v| v != prev)
                    .expect("degree 2");
                prev = cur;
                cur = next;
                steps += 1;
            }
            if self.g.degree(cur) == 1 {
                chains.push(PendantChain { first: x, end: cur });
            } else {
                non_pendant += 1;
            }
        }
        JunctionView { chains, non_pendant }
    }

    /// Picks which chain ends around the junction of `leaf` to colour.
    ///
    /// A chain whose junction-side vertex is still white blocks the junction
    /// (the junction cannot force past it); a chain whose end is already
    /// black will force the junction by itself via the black-leaf rule. Of
    /// the blocking chains all but one are coloured: the coloured ends force
    /// inward and blacken the junction, the spared one is drained outward
    /// afterwards. When nothing can reach the junction at all (single
    /// junction, no black ends) one end must be spent to start the process.
    fn sibling_targets(&self, leaf: usize, u: usize) -> Vec<usize> {
        let view = self.analyze(u);
        let current = view
            .chains
            .iter()
            .position(|c| c.end == leaf)
            .expect("the probed leaf terminates a pendant chain");
        let blocking: Vec<usize> = (0..view.chains.len())
            .filter(|&i| {
                let c = &view.chains[i];
                !self.black[c.end] && !self.black[c.first]
            })
            .collect();
        let any_black_end = view.chains.iter().any(|c| self.black[c.end]);

        if blocking.len() >= 2 {
            let drain = if blocking.contains(&current) {
                current
            } else {
                *blocking
                    .iter()
                    .min_by_key(|&&i| view.chains[i].end)
                    .expect("non-empty")
            };
            let mut ends: Vec<usize> = blocking
                .iter()
                .filter(|&&i| i != drain)
                .map(|&i| view.chains[i].end)
                .collect();
            ends.sort_unstable();
            ends
        } else if view.non_pendant == 0 && !any_black_end {
            // Single-junction component with no forcing source: spend the
            // blocking end if there is one, otherwise the processed leaf.
            match blocking.first() {
                Some(&i) => vec![view.chains[i].end],
                None => vec![leaf],
            }
        } else {
            Vec::new()
        }
    }

    /// Colours chain end `e`, removes it, and colours the vertex it forces.
    fn consume_end(&mut self, e: usize, rule: ForcingRule) {
        self.add_to_set(e, rule);
        let nb = self.g.neighbors(e).next().expect("chain end is a leaf");
        self.remove(e);
        self.colour(nb);
    }

    /// Sibling rule, closure-consistent flavour: siblings are ends of other
    /// pendant chains at the leaf's junction.
    fn rule3_closure_consistent(&mut self, leaf: usize) {
        let Some(u) = self.junction_of(leaf) else {
            return;
        };
        let targets = self.sibling_targets(leaf, u);
        for e in targets {
            self.consume_end(e, ForcingRule::SiblingLeaf);
        }
        self.propagate();
    }

    /// Sibling rule, verbatim flavour: colour, remove and collect every
    /// white leaf at graph distance exactly 2. The hub stays white.
    fn rule3_strict(&mut self, leaf: usize) {
        let hub = self.g.neighbors(leaf).next().expect("leaf has a neighbour");
        let siblings: Vec<usize> = self
            .g
            .neighbors(hub)
            .filter(|&x| x != leaf && self.g.degree(x) == 1 && !self.black[x])
            .collect();
        for s in siblings {
            self.add_to_set(s, ForcingRule::SiblingLeaf);
            self.remove(s);
        }
    }

    /// One pass over a snapshot of the current leaves.
    fn pass(&mut self) {
        let snapshot = self.g.leaves();
        for leaf in snapshot {
            if !self.g.is_alive(leaf) || self.g.degree(leaf) != 1 {
                continue; // stale entry
            }
            if !self.black[leaf] {
                let probe = self.g.chain_probe(leaf).expect("checked leaf");
                if probe.is_isolated_chain {
                    let far = probe.other_end.expect("isolated chain has a far end");
                    if !self.black[far] {
                        self.add_to_set(leaf, ForcingRule::ChainEnd);
                        if self.cc() {
                            self.propagate();
                        }
                    }
                }
            }
            if self.black[leaf] {
                if self.g.is_alive(leaf) && self.g.degree(leaf) == 1 {
                    self.cascade(leaf);
                }
            } else {
                match self.mode {
                    LmMode::ClosureConsistent => self.rule3_closure_consistent(leaf),
                    LmMode::StrictLiteral => self.rule3_strict(leaf),
                }
            }
        }
    }

    /// Removes isolated vertices; white ones join the forcing set.
    fn sweep(&mut self) {
        let isolated: Vec<usize> = self
            .g
            .alive_vertices()
            .filter(|&v| self.g.degree(v) == 0)
            .collect();
        for v in isolated {
            if !self.black[v] {
                self.add_to_set(v, ForcingRule::IsolatedWhite);
            }
            self.remove(v);
        }
    }

    /// Restarts a stalled closure-consistent run by spending one chain end
    /// at the first junction found from a white leaf. Keeps the max-degree
    /// fallback off forests, where leaf reasoning always suffices.
    fn stall_break(&mut self) -> bool {
        let leaves = self.g.leaves();
        for leaf in leaves {
            if self.black[leaf] {
                continue;
            }
            let Some(u) = self.junction_of(leaf) else {
                continue;
            };
            let view = self.analyze(u);
            let blocking: Vec<&PendantChain> = view
                .chains
                .iter()
                .filter(|c| !self.black[c.end] && !self.black[c.first])
                .collect();
            let end = match blocking.iter().min_by_key(|c| c.end) {
                Some(c) => c.end,
                None => leaf,
            };
            self.consume_end(end, ForcingRule::StallBreak);
            self.propagate();
            return true;
        }
        false
    }

    /// Maximum-degree fallback: colour, collect and remove; ties go to the
    /// lowest id.
    fn max_degree_step(&mut self) {
        let mut best = usize::MAX;
        let mut best_deg = 0;
        for v in self.g.alive_vertices() {
            let d = self.g.degree(v);
            if d > best_deg || best == usize::MAX {
                best = v;
                best_deg = d;
            }
        }
        self.add_to_set(best, ForcingRule::MaxDegree);
        self.delta_z += 1;
        self.remove(best);
        if self.cc() {
            self.propagate();
        }
    }

    fn run(mut self) -> ForcingResult {
        while self.g.n_alive() > 0 {
            let before = self.removals;
            self.pass();
            self.sweep();
            if self.g.n_alive() == 0 {
                break;
            }
            if self.removals == before {
                if self.cc() && self.stall_break() {
                    continue;
                }
                self.max_degree_step();
            }
        }
        let mut zfs = self.zfs;
        zfs.sort_unstable();
        ForcingResult {
            z_lm: zfs.len(),
            zfs,
            delta_z: self.delta_z,
            rule_trace: self.trace,
        }
    }
}
