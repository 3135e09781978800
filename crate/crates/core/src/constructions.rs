//! Closed-form graph families.
//!
//! Vertex numbering is fixed so reports are reproducible: balanced binary
//! trees use heap order (children of `i` are `2i+1`, `2i+2`), and the
//! three-branch tree puts the hub at 0 followed by the three copies.

use crate::graph::{Graph, GraphError};
use alloc::vec::Vec;
use core::fmt;

/// A named family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    /// `K_{1,s}`.
    Star(usize),
    CompleteBipartite(usize, usize),
    /// Depth `k`, order `2^(k+1) − 1`.
    BalancedBinary(u32),
    /// Three depth-`k` balanced binary trees joined to a hub.
    BTree(u32),
    /// Index into [`exceptional_trees`].
    Exceptional(usize),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            FamilySpec::Path(n) => path(n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Star(s) => star(s),
            FamilySpec::CompleteBipartite(a, b) => complete_bipartite(a, b),
            FamilySpec::BalancedBinary(k) => balanced_binary_tree(k),
            FamilySpec::BTree(k) => b_tree(k),
            FamilySpec::Exceptional(i) => {
                exceptional_trees().into_iter().nth(i).ok_or(GraphError::InvalidOrder { order: 0 })
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "P_{n}"),
            FamilySpec::Cycle(n) => write!(f, "C_{n}"),
            FamilySpec::Star(s) => write!(f, "K_1,{s}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "K_{a},{b}"),
            FamilySpec::BalancedBinary(k) => write!(f, "T_{}", (1usize << (k + 1)) - 1),
            FamilySpec::BTree(k) => write!(f, "B_{k}"),
            FamilySpec::Exceptional(i) => write!(f, "exceptional#{i}"),
        }
    }
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidOrder { order: n });
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

/// `K_{1,s}` with the centre at vertex 0.
pub fn star(s: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..=s).map(|i| (0, i)).collect();
    Graph::from_edge_list(s + 1, &edges)
}

/// `K_{a,b}`; vertices `0..a` form the first side.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::from_edge_list(a + b, &edges)
}

fn binary_order(k: u32) -> Result<usize, GraphError> {
    1usize
        .checked_shl(k + 1)
        .filter(|&o| o - 1 <= crate::graph::MAX_ORDER)
        .map(|o| o - 1)
        .ok_or(GraphError::InvalidOrder { order: usize::MAX })
}

/// The complete binary tree of depth `k`.
pub fn balanced_binary_tree(k: u32) -> Result<Graph, GraphError> {
    let order = binary_order(k)?;
    let edges: Vec<_> = (1..order).map(|i| ((i - 1) / 2, i)).collect();
    Graph::from_edge_list(order, &edges)
}

/// Order of [`b_tree`]`(k)`: `3·2^(k+1) − 2`.
pub fn b_tree_order(k: u32) -> usize {
    3 * (1usize << (k + 1)) - 2
}

/// Three disjoint depth-`k` balanced binary trees plus a hub adjacent to
/// their roots.
pub fn b_tree(k: u32) -> Result<Graph, GraphError> {
    let copy = binary_order(k)?;
    let order = 3 * copy + 1;
    if order > crate::graph::MAX_ORDER {
        return Err(GraphError::InvalidOrder { order });
    }
    let mut edges = Vec::with_capacity(order - 1);
    for c in 0..3 {
        let base = 1 + c * copy;
        edges.push((0, base));
        edges.extend((1..copy).map(|i| (base + (i - 1) / 2, base + i)));
    }
    Graph::from_edge_list(order, &edges)
}

/// The four trees with maximum degree at most 3 whose energy is below their
/// order: `K_1`, `K_{1,2}`, `K_{1,3}` and the balanced binary tree on 7
/// vertices.
pub fn exceptional_trees() -> [Graph; 4] {
    [
        Graph::empty(1).expect("valid"),
        star(2).expect("valid"),
        star(3).expect("valid"),
        balanced_binary_tree(2).expect("valid"),
    ]
}
