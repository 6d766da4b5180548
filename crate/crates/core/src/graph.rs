//! Simple undirected graphs as compressed sorted adjacency lists, degree
//! statistics, and the two generic constructions (Cartesian product,
//! Mycielski transform).

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::Rational;

/// Errors raised while building or interrogating a [`Graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    /// An edge joins a vertex to itself.
    SelfLoop { vertex: u32 },
    /// The same unordered pair appears twice in the input.
    DuplicateEdge { u: u32, v: u32 },
    /// An endpoint is not in `0..n`.
    VertexOutOfRange { vertex: u32, n: usize },
    /// The operation needs at least one vertex.
    EmptyGraph,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n = {n}")
            }
            GraphError::EmptyGraph => write!(f, "graph has no vertices"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph on vertices `0..n`.
///
/// Stored as compressed sorted neighbor lists (CSR): immutable after
/// construction, so values are safe to share across threads. Equality is
/// label-sensitive; no isomorphism checks anywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    /// `offsets[v]..offsets[v + 1]` indexes `neighbors` for vertex `v`.
    offsets: Vec<usize>,
    /// Concatenated neighbor lists, each sorted ascending.
    neighbors: Vec<u32>,
    /// Number of undirected edges (each counted once).
    m: usize,
}

impl Graph {
    /// Builds the canonical graph on `n` vertices from an unordered edge list.
    ///
    /// Rejects self-loops, endpoints outside `0..n`, and duplicate pairs
    /// (in either orientation).
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        assert!(n <= u32::MAX as usize, "vertex ids are u32");
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
                degree[w as usize] += 1;
            }
        }

        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }

        let mut neighbors = vec![0u32; acc];
        let mut cursor: Vec<usize> = offsets[..n].to_vec();
        for &(u, v) in edges {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for v in 0..n {
            let list = &mut neighbors[offsets[v]..offsets[v + 1]];
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (v as u32, w[0]);
                return Err(GraphError::DuplicateEdge { u: a.min(b), v: a.max(b) });
            }
        }

        Ok(Graph { offsets, neighbors, m: edges.len() })
    }

    /// Path graph `Pₙ`: vertices `0..n` in a line. `path(1)` is a single vertex.
    pub fn path(n: usize) -> Graph {
        let mut g = Builder::with_degrees((0..n).map(|v| {
            if n <= 1 {
                0
            } else if v == 0 || v == n - 1 {
                1
            } else {
                2
            }
        }));
        for v in 0..n {
            if v > 0 {
                g.push(v, v as u32 - 1);
            }
            if v + 1 < n {
                g.push(v, v as u32 + 1);
            }
        }
        g.finish(n.saturating_sub(1))
    }

    /// Cycle graph `Cₙ`. Requires `n ≥ 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Builder::with_degrees((0..n).map(|_| 2));
        for v in 0..n {
            let prev = if v == 0 { n - 1 } else { v - 1 } as u32;
            let next = if v + 1 == n { 0 } else { v + 1 } as u32;
            g.push(v, prev.min(next));
            g.push(v, prev.max(next));
        }
        g.finish(n)
    }

    /// Complete graph `Kₙ`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Builder::with_degrees((0..n).map(|_| n - 1));
        for v in 0..n {
            for u in 0..n as u32 {
                if u as usize != v {
                    g.push(v, u);
                }
            }
        }
        g.finish(n * n.saturating_sub(1) / 2)
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Iterates the edges as `(u, v)` pairs with `u < v`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u as u32)
                .map(move |&v| (u as u32, v))
        })
    }

    /// True iff every vertex is reachable from vertex 0 (vacuously true for
    /// the empty graph).
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0u32);
        let mut reached = 1usize;
        while let Some(v) = queue.pop_front() {
            for &u in self.neighbors(v as usize) {
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        reached == n
    }

    /// Degree statistics of the graph.
    pub fn degree_sequence(&self) -> Result<DegreeSequence, GraphError> {
        let n = self.n();
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
        for v in 0..n {
            *counts.entry(self.degree(v) as u32).or_insert(0) += 1;
        }
        let max_degree = *counts.keys().next_back().unwrap();
        Ok(DegreeSequence {
            counts,
            n,
            max_degree,
            mean_degree: Rational::new(2 * self.m as i128, n as i128),
        })
    }

    /// Cartesian product `self □ other`.
    ///
    /// Vertex `(i, j)` (i from `self`, j from `other`) gets id `i·n_other + j`;
    /// `(i, j) ~ (i', j')` iff the pairs agree on one coordinate and are
    /// adjacent on the other. `|E| = n_g·m_h + n_h·m_g`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let (ng, nh) = (self.n(), other.n());
        assert!(ng >= 1 && nh >= 1, "cartesian product of empty graph");
        let n = ng * nh;
        assert!(n <= u32::MAX as usize, "product too large for u32 vertex ids");

        let mut b = Builder::with_degrees(
            (0..n).map(|id| self.degree(id / nh) + other.degree(id % nh)),
        );
        for i in 0..ng {
            let low: usize = self.neighbors(i).iter().take_while(|&&x| (x as usize) < i).count();
            for j in 0..nh {
                let id = i * nh + j;
                // Neighbor ids split into three sorted runs around i·n_h.
                for &x in &self.neighbors(i)[..low] {
                    b.push(id, x * nh as u32 + j as u32);
                }
                for &y in other.neighbors(j) {
                    b.push(id, (i * nh) as u32 + y);
                }
                for &x in &self.neighbors(i)[low..] {
                    b.push(id, x * nh as u32 + j as u32);
                }
            }
        }
        b.finish(ng * other.m + nh * self.m)
    }

    /// Mycielski construction `M(G)`.
    ///
    /// Originals keep ids `0..n`, shadow vertices are `n..2n` (shadow of `i`
    /// is `n + i`), and the apex `w = 2n` is adjacent to every shadow.
    /// `|V| = 2n + 1`, `|E| = 3m + n`; degrees double on originals, shadows
    /// get `deg + 1`, the apex gets `n`.
    pub fn mycielski(&self) -> Graph {
        let n = self.n();
        assert!(n >= 1, "mycielski of empty graph");
        let nu = n as u32;
        let w = 2 * nu;

        let degs = (0..2 * n + 1).map(|v| {
            if v < n {
                2 * self.degree(v)
            } else if v < 2 * n {
                self.degree(v - n) + 1
            } else {
                n
            }
        });
        let mut b = Builder::with_degrees(degs);
        for i in 0..n {
            for &j in self.neighbors(i) {
                b.push(i, j);
            }
            for &j in self.neighbors(i) {
                b.push(i, nu + j);
            }
        }
        for i in 0..n {
            for &j in self.neighbors(i) {
                b.push(n + i, j);
            }
            b.push(n + i, w);
        }
        for i in 0..nu {
            b.push(2 * n, nu + i);
        }
        b.finish(3 * self.m + n)
    }
}

/// CSR assembly for constructors that know every degree up front and push
/// neighbors in ascending order.
struct Builder {
    offsets: Vec<usize>,
    cursor: Vec<usize>,
    neighbors: Vec<u32>,
}

impl Builder {
    fn with_degrees(degrees: impl Iterator<Item = usize>) -> Builder {
        let mut offsets = vec![0usize];
        let mut acc = 0usize;
        for d in degrees {
            acc += d;
            offsets.push(acc);
        }
        Builder {
            cursor: offsets[..offsets.len() - 1].to_vec(),
            neighbors: vec![0u32; acc],
            offsets,
        }
    }

    fn push(&mut self, v: usize, u: u32) {
        self.neighbors[self.cursor[v]] = u;
        self.cursor[v] += 1;
    }

    fn finish(self, m: usize) -> Graph {
        debug_assert_eq!(self.neighbors.len(), 2 * m);
        debug_assert!(self
            .offsets
            .windows(2)
            .enumerate()
            .all(|(v, w)| self.neighbors[w[0]..w[1]].windows(2).all(|p| p[0] < p[1])
                && self.neighbors[w[0]..w[1]].iter().all(|&u| u as usize != v)));
        Graph { offsets: self.offsets, neighbors: self.neighbors, m }
    }
}

/// Degree multiset of a graph with per-degree counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    /// degree -> number of vertices of that degree (only non-zero entries).
    pub counts: BTreeMap<u32, u64>,
    /// Total number of vertices.
    pub n: usize,
    /// Largest degree present.
    pub max_degree: u32,
    /// `2m/n` as an exact rational.
    pub mean_degree: Rational,
}

impl DegreeSequence {
    /// Number of distinct degrees.
    pub fn distinct_degrees(&self) -> usize {
        self.counts.len()
    }
}
