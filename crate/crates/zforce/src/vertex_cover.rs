//! Minimum vertex cover: the leaf-driven removal heuristic and an exact
//! brute-force solver for small graphs.
//!
//! The heuristic mirrors the classic forest-optimal greedy step: while any
//! leaf exists, its neighbour must be at least as good a choice as the leaf
//! itself, so cover the neighbour and delete both. When no leaf exists a
//! maximum-degree vertex is covered instead; `delta_v` counts these
//! fallbacks (0 on forests, where the leaf step alone is optimal).

use crate::graph::Graph;
use std::collections::VecDeque;
use thiserror::Error;

/// Default vertex cap for the exact brute-force search.
pub const DEFAULT_EXACT_CAP: usize = 16;

/// Widest graph the bitmask search supports regardless of the caller's cap.
const MASK_LIMIT: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VertexCoverError {
    #[error("graph has {n} alive vertices, exact search capped at {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// Output of [`lm_vertex_cover`].
#[derive(Debug, Clone)]
pub struct CoverResult {
    /// The cover, ascending. Always a valid vertex cover of the input.
    pub cover: Vec<usize>,
    /// `cover.len()`, the heuristic's estimate of the minimum cover size.
    pub v_lm: usize,
    /// Number of maximum-degree fallback picks.
    pub delta_v: usize,
}

/// True when every alive edge has at least one endpoint in `s`.
pub fn is_vertex_cover(g: &Graph, s: &[usize]) -> bool {
    let mut in_set = vec![false; g.n_total()];
    for &v in s {
        if v < g.n_total() {
            in_set[v] = true;
        }
    }
    g.alive_vertices()
        .all(|u| in_set[u] || g.neighbors(u).all(|v| in_set[v]))
}

/// Leaf-plus-maximum-degree heuristic for minimum vertex cover. The cover
/// returned is always valid; `delta_v` counts fallback picks.
pub fn lm_vertex_cover(g: &Graph) -> CoverResult {
    let mut work = g.clone();
    let mut cover = Vec::new();
    let mut delta_v = 0usize;
    let mut queue: VecDeque<usize> = VecDeque::new();

    // Isolated vertices never contribute; drop them up front.
    let isolated: Vec<usize> = work
        .alive_vertices()
        .filter(|&v| work.degree(v) == 0)
        .collect();
    for v in isolated {
        work.remove_vertex(v).expect("alive");
    }
    queue.extend(work.leaves());

    while work.n_alive() > 0 {
        while let Some(leaf) = queue.pop_front() {
            if !work.is_alive(leaf) {
                continue;
            }
            match work.degree(leaf) {
                // Lost its last edge while queued: its neighbour was covered.
                0 => {
                    work.remove_vertex(leaf).expect("alive");
                }
                1 => {
                    let u = work
                        .neighbors(leaf)
                        .next()
                        .expect("degree-1 vertex has a neighbour");
                    cover.push(u);
                    work.remove_vertex(leaf).expect("alive");
                    take_covered(&mut work, u, &mut queue);
                }
                _ => unreachable!("degrees never grow, queued leaves stay at most 1"),
            }
        }
        if work.n_alive() == 0 {
            break;
        }
        // No leaves anywhere: cover a maximum-degree vertex (lowest id wins).
        let mut best = usize::MAX;
        let mut best_deg = 0;
        for v in work.alive_vertices() {
            let d = work.degree(v);
            if d > best_deg || best == usize::MAX {
                best = v;
                best_deg = d;
            }
        }
        cover.push(best);
        delta_v += 1;
        take_covered(&mut work, best, &mut queue);
    }

    cover.sort_unstable();
    CoverResult {
        v_lm: cover.len(),
        cover,
        delta_v,
    }
}

/// Removes a vertex that just entered the cover and reacts to the degree
/// drops of its neighbours: fresh leaves are queued, fresh isolates dropped.
fn take_covered(work: &mut Graph, u: usize, queue: &mut VecDeque<usize>) {
    let nbrs: Vec<usize> = work.neighbors(u).collect();
    work.remove_vertex(u).expect("alive");
    for w in nbrs {
        match work.degree(w) {
            0 => {
                work.remove_vertex(w).expect("alive");
            }
            1 => queue.push_back(w),
            _ => {}
        }
    }
}

/// Exact minimum vertex cover with the default size cap.
pub fn exact_vertex_cover(g: &Graph) -> Result<(usize, Vec<usize>), VertexCoverError> {
    exact_vertex_cover_with_cap(g, DEFAULT_EXACT_CAP)
}

/// Exact minimum vertex cover by subset enumeration in increasing size and
/// lexicographic order; returns the first minimum witness. Refuses graphs
/// with more than `cap` (or 24, whichever is smaller) alive vertices.
pub fn exact_vertex_cover_with_cap(
    g: &Graph,
    cap: usize,
) -> Result<(usize, Vec<usize>), VertexCoverError> {
    let ids: Vec<usize> = g.alive_vertices().collect();
    let n = ids.len();
    let cap = cap.min(MASK_LIMIT);
    if n > cap {
        return Err(VertexCoverError::CapExceeded { n, cap });
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
        .map(|&v| g.neighbors(v).fold(0u32, |m, u| m | (1 << index_of[u])))
        .collect();

    let covers = |mask: u32| -> bool {
        (0..n).all(|v| mask & (1 << v) != 0 || adj[v] & !mask == 0)
    };

    for size in 0..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mask = combo.iter().fold(0u32, |m, &i| m | (1 << i));
            if covers(mask) {
                return Ok((size, combo.iter().map(|&i| ids[i]).collect()));
            }
            if !crate::zero_forcing::next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set always covers");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let mut g = Graph::new(n).unwrap();
        for v in 1..n {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    }

    fn cycle(n: usize) -> Graph {
        let mut g = path(n);
        g.add_edge(n - 1, 0).unwrap();
        g
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n).unwrap();
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn star(leaves: usize) -> Graph {
        let mut g = Graph::new(leaves + 1).unwrap();
        for v in 1..=leaves {
            g.add_edge(0, v).unwrap();
        }
        g
    }

    #[test]
    fn exact_values_on_small_families() {
        assert_eq!(exact_vertex_cover(&path(2)).unwrap().0, 1);
        assert_eq!(exact_vertex_cover(&path(5)).unwrap().0, 2);
        assert_eq!(exact_vertex_cover(&cycle(6)).unwrap().0, 3);
        assert_eq!(exact_vertex_cover(&cycle(5)).unwrap().0, 3);
        assert_eq!(exact_vertex_cover(&complete(4)).unwrap().0, 3);
        assert_eq!(exact_vertex_cover(&star(5)).unwrap().0, 1);
        assert_eq!(exact_vertex_cover(&Graph::new(3).unwrap()).unwrap().0, 0);
    }

    #[test]
    fn exact_witness_is_lexicographically_first() {
        // {0} is tried first but leaves edge 1-2 uncovered.
        let (size, witness) = exact_vertex_cover(&path(3)).unwrap();
        assert_eq!((size, witness), (1, vec![1]));
    }

    #[test]
    fn exact_respects_cap() {
        assert_eq!(
            exact_vertex_cover_with_cap(&path(20), 16),
            Err(VertexCoverError::CapExceeded { n: 20, cap: 16 })
        );
    }

    #[test]
    fn lm_covers_paths_exactly() {
        for n in 2..=9 {
            let g = path(n);
            let r = lm_vertex_cover(&g);
            assert!(is_vertex_cover(&g, &r.cover), "P{n}");
            assert_eq!(r.v_lm, exact_vertex_cover(&g).unwrap().0, "P{n}");
            assert_eq!(r.delta_v, 0, "P{n}");
        }
    }

    #[test]
    fn lm_p3_takes_the_centre() {
        let r = lm_vertex_cover(&path(3));
        assert_eq!(r.cover, vec![1]);
        assert_eq!((r.v_lm, r.delta_v), (1, 0));
    }

    #[test]
    fn lm_cycle_needs_one_fallback() {
        let g = cycle(6);
        let r = lm_vertex_cover(&g);
        assert!(is_vertex_cover(&g, &r.cover));
        assert_eq!((r.v_lm, r.delta_v), (3, 1));
    }

    #[test]
    fn lm_star_covers_the_hub() {
        let r = lm_vertex_cover(&star(5));
        assert_eq!(r.cover, vec![0]);
        assert_eq!((r.v_lm, r.delta_v), (1, 0));
    }

    #[test]
    fn lm_is_valid_on_cliques() {
        let g = complete(5);
        let r = lm_vertex_cover(&g);
        assert!(is_vertex_cover(&g, &r.cover));
        assert_eq!(r.v_lm, 4);
        assert!(r.delta_v >= 1);
    }

    #[test]
    fn lm_handles_empty_and_isolated_graphs() {
        let r = lm_vertex_cover(&Graph::new(0).unwrap());
        assert_eq!((r.v_lm, r.delta_v), (0, 0));
        let r = lm_vertex_cover(&Graph::new(4).unwrap());
        assert_eq!((r.v_lm, r.delta_v), (0, 0));
        assert!(r.cover.is_empty());
    }

    #[test]
    fn is_vertex_cover_rejects_uncovered_edge() {
        let g = path(3);
        assert!(!is_vertex_cover(&g, &[0]));
        assert!(is_vertex_cover(&g, &[1]));
        assert!(is_vertex_cover(&g, &[0, 2]));
    }
}
