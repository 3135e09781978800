//! Isomorph-free generation of the graph classes the sweeps range over.

mod graphs;
mod trees;

use crate::graph::Graph;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use graphs::{connected_c4free_graphs, EnumConfig, GRAPH_ENUM_CAP};
pub use trees::{count_trees, trees_bounded_degree, TreeCatalog, TreeCode, Trees, TREE_ENUM_CAP};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumError {
    OrderOutOfRange { order: usize, cap: usize },
}

impl fmt::Display for EnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumError::OrderOutOfRange { order, cap } => {
                write!(f, "order {order} outside the supported range 1..={cap}")
            }
        }
    }
}

impl core::error::Error for EnumError {}

/// The labelled tree on `n` vertices with Prüfer sequence `seq`
/// (`seq.len() == n − 2`, entries below `n`).
///
/// # Panics
/// If the sequence has the wrong length or an out-of-range entry.
pub fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::empty(1).expect("valid");
    }
    assert_eq!(seq.len(), n - 2, "Prüfer sequence length");
    let mut degree = vec![1usize; n];
    for &s in seq {
        assert!(s < n, "Prüfer entry out of range");
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges).expect("Prüfer decoding yields a tree")
}
