//! Simple undirected graphs stored as packed adjacency bit rows.

mod canon;
mod graph6;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use canon::{canonical_code, canonical_form, CanonError, CanonicalCode, CANON_CAP, TREE_CANON_CAP};
pub use graph6::{parse_graph6, write_graph6, Graph6Error, GRAPH6_MAX_ORDER};

/// Largest order a [`Graph`] may have.
pub const MAX_ORDER: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// The order is zero or exceeds [`MAX_ORDER`].
    InvalidOrder {
        order: usize,
    },
    VertexOutOfRange {
        vertex: usize,
        order: usize,
    },
    Loop {
        vertex: usize,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::InvalidOrder { order } => {
                write!(f, "graph order {order} outside 1..={MAX_ORDER}")
            }
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for a graph of order {order}")
            }
            GraphError::Loop { vertex } => write!(f, "loop at vertex {vertex} is not allowed"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph on vertices `0..n`.
///
/// Row `u` of the adjacency matrix is a run of `words` machine words; bit `v`
/// of that run is set iff `uv` is an edge. Values are immutable once built, so
/// the degree sequence and edge count are cached alongside the rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    degrees: Vec<u32>,
    edges: usize,
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::InvalidOrder { order: n });
        }
        let words = words_for(n);
        Ok(Graph { n, words, rows: vec![0; n * words], degrees: vec![0; n], edges: 0 })
    }

    /// Builds a graph from an edge list. Repeated edges are collapsed; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Inserts `uv` if absent. Callers guarantee `u != v`, both in range.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.has_edge(u, v) {
            return;
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
        self.degrees[u] += 1;
        self.degrees[v] += 1;
        self.edges += 1;
    }

    /// A copy of `self` with one extra vertex `n` joined to `neighbors`.
    pub(crate) fn with_new_vertex(&self, neighbors: &[usize]) -> Result<Self, GraphError> {
        let n = self.n + 1;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for &u in neighbors {
            if u >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            g.insert_edge(u, self.n);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v] as usize
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.degrees.iter().map(|&d| d as usize)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// `Σ d_u²`, exact.
    pub fn degree_square_sum(&self) -> u64 {
        self.degrees().map(|d| (d * d) as u64).sum()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// The packed neighbourhood of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        Neighbors { row: self.row(v), word: 0, bits: self.row(v).first().copied().unwrap_or(0) }
    }

    /// Edges `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Number of common neighbours of `u` and `v`.
    #[inline]
    pub fn codegree(&self, u: usize, v: usize) -> usize {
        self.row(u).iter().zip(self.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Number of 4-cycles, `½ Σ_{u<v} C(codeg(u, v), 2)`.
    ///
    /// Each 4-cycle has two diagonals and is seen once from each of them.
    pub fn count_c4(&self) -> u64 {
        let mut twice = 0u64;
        for u in 0..self.n {
            if self.degrees[u] < 2 {
                continue;
            }
            for v in u + 1..self.n {
                let c = self.codegree(u, v) as u64;
                twice += c * c.saturating_sub(1) / 2;
            }
        }
        twice / 2
    }

    /// Early-exit variant of `count_c4() == 0`.
    pub fn is_c4_free(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.codegree(u, v) < 2))
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        let mut components = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        components
    }

    /// Two-colourability by BFS.
    pub fn is_bipartite(&self) -> bool {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap_or(false);
                for v in self.neighbors(u) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.degrees.contains(&0)
    }

    pub fn is_tree(&self) -> bool {
        self.edges + 1 == self.n && self.is_connected()
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut hit = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !hit[p], "not a permutation");
            hit[p] = true;
        }
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(self.n + u, self.n + v);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.n)
            .field("size", &self.edges)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Iterator over the set bits of an adjacency row.
pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    bits: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.bits = self.row[self.word];
        }
    }
}
