//! Undirected simple graphs on dense integer ids with tombstone removal.
//!
//! Vertex ids are assigned at construction and never reused: removing a
//! vertex marks it dead and detaches its edges, but ids of the survivors are
//! stable. Adjacency sets are ordered, so every traversal in this crate is
//! deterministic.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;
use thiserror::Error;

/// Hard upper bound on the number of vertices a single graph may hold.
pub const MAX_VERTICES: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("vertex {0} has been removed")]
    Removed(usize),
    #[error("self-loop on vertex {0} rejected")]
    SelfLoop(usize),
    #[error("vertex {0} is not a leaf")]
    NotALeaf(usize),
    #[error("requested {0} vertices, contract allows at most {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("edge list line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Result of walking a chain of degree-2 vertices away from a leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainProbe {
    /// True when the walk ends at another degree-1 vertex, i.e. the leaf's
    /// whole connected component is a path.
    pub is_isolated_chain: bool,
    /// The degree-1 vertex at the far end, when `is_isolated_chain` holds.
    pub other_end: Option<usize>,
}

/// Undirected simple graph. No self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<BTreeSet<usize>>,
    removed: Vec<bool>,
    n_alive: usize,
    n_edges: usize,
}

impl Graph {
    /// Creates an edgeless graph on vertices `0..n`.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph {
            adjacency: vec![BTreeSet::new(); n],
            removed: vec![false; n],
            n_alive: n,
            n_edges: 0,
        })
    }

    /// Number of ids ever allocated, dead or alive.
    pub fn n_total(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of vertices not yet removed.
    pub fn n_alive(&self) -> usize {
        self.n_alive
    }

    /// Number of edges between alive vertices.
    pub fn edge_count(&self) -> usize {
        self.n_edges
    }

    pub fn is_alive(&self, v: usize) -> bool {
        v < self.removed.len() && !self.removed[v]
    }

    /// Degree of `v`; 0 for dead or out-of-range ids.
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency.get(v).map_or(0, BTreeSet::len)
    }

    /// Neighbours of `v` in ascending order; empty for dead ids.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency
            .get(v)
            .into_iter()
            .flat_map(|s| s.iter().copied())
    }

    /// Alive vertex ids in ascending order.
    pub fn alive_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.removed
            .iter()
            .enumerate()
            .filter(|(_, dead)| !**dead)
            .map(|(v, _)| v)
    }

    fn check_alive(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.removed.len() {
            Err(GraphError::OutOfRange(v))
        } else if self.removed[v] {
            Err(GraphError::Removed(v))
        } else {
            Ok(())
        }
    }

    /// Inserts the edge `{u, v}`. Returns `true` if the edge is new,
    /// `false` if it was already present (the call is then a no-op).
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_alive(u)?;
        self.check_alive(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let inserted = self.adjacency[u].insert(v);
        if inserted {
            self.adjacency[v].insert(u);
            self.n_edges += 1;
        }
        Ok(inserted)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|s| s.contains(&v))
    }

    /// Removes `v` and all edges incident to it. Ids of other vertices are
    /// unchanged.
    pub fn remove_vertex(&mut self, v: usize) -> Result<(), GraphError> {
        self.check_alive(v)?;
        let nbrs: Vec<usize> = self.adjacency[v].iter().copied().collect();
        for u in nbrs {
            self.adjacency[u].remove(&v);
            self.n_edges -= 1;
        }
        self.adjacency[v].clear();
        self.removed[v] = true;
        self.n_alive -= 1;
        Ok(())
    }

    /// Alive vertices of degree exactly 1, ascending.
    pub fn leaves(&self) -> Vec<usize> {
        self.alive_vertices()
            .filter(|&v| self.degree(v) == 1)
            .collect()
    }

    /// Walks from `leaf` through degree-2 vertices until the path ends.
    ///
    /// Errors unless `leaf` is alive with degree exactly 1.
    pub fn chain_probe(&self, leaf: usize) -> Result<ChainProbe, GraphError> {
        self.check_alive(leaf)?;
        if self.degree(leaf) != 1 {
            return Err(GraphError::NotALeaf(leaf));
        }
        let mut prev = leaf;
        let mut cur = self.neighbors(leaf).next().expect("degree 1");
        let mut steps = 0usize;
        while self.degree(cur) == 2 && steps <= 2 * self.n_total() {
            let next = self
                .neighbors(cur)
                .find(|&u| u != prev)
                .expect("degree 2 has a second neighbour");
            prev = cur;
            cur = next;
            steps += 1;
        }
        if self.degree(cur) == 1 {
            Ok(ChainProbe {
                is_isolated_chain: true,
                other_end: Some(cur),
            })
        } else {
            Ok(ChainProbe {
                is_isolated_chain: false,
                other_end: None,
            })
        }
    }

    /// Breadth-first hop distances from `source` to every alive vertex;
    /// `None` marks unreachable or dead vertices.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<usize>>, GraphError> {
        self.check_alive(source)?;
        let mut dist = vec![None; self.n_total()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].expect("queued vertices have distances");
            for u in self.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        Ok(dist)
    }

    /// Greatest hop distance from `v` to any vertex in its component.
    pub fn eccentricity(&self, v: usize) -> Result<usize, GraphError> {
        let dist = self.bfs_distances(v)?;
        Ok(dist.into_iter().flatten().max().unwrap_or(0))
    }

    /// Connected components over alive vertices. Each component is sorted
    /// ascending and components are ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n_total()];
        let mut components = Vec::new();
        for start in self.alive_vertices() {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// Serializes the graph as an edge-list document: a `N <count>` header
    /// followed by one `u v` line per edge with `u < v`, sorted. Tombstoned
    /// ids are not representable; writing is intended for graphs that have
    /// not had vertices removed.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "N {}", self.n_total());
        for u in 0..self.n_total() {
            for v in self.neighbors(u) {
                if v > u {
                    let _ = writeln!(out, "{u} {v}");
                }
            }
        }
        out
    }

    /// Parses the format produced by [`Graph::to_edge_list`]. Lines starting
    /// with `#` and blank lines are ignored. The `N <count>` header is
    /// optional; without it the vertex count is one past the largest id seen.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut declared_n: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut max_id: Option<usize> = None;
        let mut first_data_line = true;

        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let parse = |tok: &str| {
                tok.parse::<usize>().map_err(|e| GraphError::Parse {
                    line: idx + 1,
                    msg: format!("bad integer {tok:?}: {e}"),
                })
            };
            let first = tokens.next().expect("non-empty line has a token");
            if first_data_line && first == "N" {
                let count = tokens.next().ok_or(GraphError::Parse {
                    line: idx + 1,
                    msg: "missing count after N".into(),
                })?;
                declared_n = Some(parse(count)?);
            } else {
                let u = parse(first)?;
                let v = parse(tokens.next().ok_or(GraphError::Parse {
                    line: idx + 1,
                    msg: "expected two vertex ids".into(),
                })?)?;
                if u == v {
                    return Err(GraphError::SelfLoop(u));
                }
                max_id = Some(max_id.unwrap_or(0).max(u).max(v));
                edges.push((u, v));
            }
            if tokens.next().is_some() {
                return Err(GraphError::Parse {
                    line: idx + 1,
                    msg: "trailing tokens".into(),
                });
            }
            first_data_line = false;
        }

        let n = declared_n.unwrap_or(max_id.map_or(0, |m| m + 1));
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}
