//! Canonical codes for small graphs and for trees.
//!
//! A canonical code is the graph6 encoding of a canonically relabelled copy
//! of the input, so a code can always be decoded back into a representative
//! of its isomorphism class.
//!
//! Trees are canonised by rooting at the centre (AHU ordering of rooted
//! subtrees); everything else goes through colour refinement followed by an
//! individualisation search over the first non-singleton cell.

use super::graph6::encode_bytes;
use super::Graph;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Order cap for general (non-tree) graphs.
pub const CANON_CAP: usize = 16;
/// Order cap for trees, bounded by the single-byte graph6 header.
pub const TREE_CANON_CAP: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonError {
    OrderTooLarge { order: usize, cap: usize },
}

impl fmt::Display for CanonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonError::OrderTooLarge { order, cap } => {
                write!(f, "order {order} exceeds the canonicalisation cap {cap}")
            }
        }
    }
}

impl core::error::Error for CanonError {}

/// Isomorphism-class identifier: the graph6 bytes of the canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // graph6 bytes are always in 63..=126.
        core::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    pub fn order(&self) -> usize {
        (self.0[0] - 63) as usize
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl From<CanonicalCode> for String {
    fn from(code: CanonicalCode) -> String {
        String::from(code.as_str())
    }
}

/// Canonical code of `g`.
///
/// Trees are accepted up to [`TREE_CANON_CAP`] vertices, other graphs up to
/// [`CANON_CAP`].
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, CanonError> {
    let order = canonical_order(g)?;
    Ok(CanonicalCode(encode_bytes(g.order(), |i, j| g.has_edge(order[i], order[j]))))
}

/// The canonically relabelled copy of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph, CanonError> {
    let order = canonical_order(g)?;
    let mut perm = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    Ok(g.relabel(&perm))
}

/// Returns the vertex placed at each canonical position.
fn canonical_order(g: &Graph) -> Result<Vec<usize>, CanonError> {
    let n = g.order();
    if g.is_tree() {
        if n > TREE_CANON_CAP {
            return Err(CanonError::OrderTooLarge { order: n, cap: TREE_CANON_CAP });
        }
        return Ok(tree_order(g));
    }
    if n > CANON_CAP {
        return Err(CanonError::OrderTooLarge { order: n, cap: CANON_CAP });
    }
    Ok(search_order(g))
}

// ---------------------------------------------------------------------------
// Trees
// ---------------------------------------------------------------------------

/// Centres of a tree: one or two vertices, found by peeling leaves.
pub(crate) fn tree_centres(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = g.degrees().collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for u in g.neighbors(leaf) {
                if deg[u] > 1 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Canonical level sequence of the subtree at `root` (levels relative to
/// the root) and its vertices in the matching preorder.
///
/// Child subtrees are concatenated in decreasing lexicographic order of their
/// own sequences, which yields the lexicographically largest sequence.
fn rooted_canonical(g: &Graph, root: usize) -> (Vec<u8>, Vec<usize>) {
    let n = g.order();
    // iterative post-order so deep paths do not exhaust the stack
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    let mut built: Vec<Option<(Vec<u8>, Vec<usize>)>> = vec![None; n];
    for &u in order.iter().rev() {
        let mut children: Vec<(Vec<u8>, Vec<usize>)> = g
            .neighbors(u)
            .filter(|&v| parent[v] == u && v != u)
            .map(|v| built[v].take().expect("children finish first"))
            .collect();
        children.sort_by(|a, b| b.0.cmp(&a.0));
        let mut levels = vec![0u8];
        let mut verts = vec![u];
        for (cl, cv) in children {
            levels.extend(cl.iter().map(|&l| l + 1));
            verts.extend(cv);
        }
        built[u] = Some((levels, verts));
    }
    built[root].take().expect("root is built last")
}

/// Canonical rooted level sequence of a tree: the largest sequence among
/// its centre-rooted forms.
pub(crate) fn tree_levels(g: &Graph) -> (Vec<u8>, Vec<usize>) {
    tree_centres(g)
        .into_iter()
        .map(|c| rooted_canonical(g, c))
        .max_by(|a, b| a.0.cmp(&b.0))
        .expect("a tree has a centre")
}

fn tree_order(g: &Graph) -> Vec<usize> {
    tree_levels(g).1
}

// ---------------------------------------------------------------------------
// General small graphs
// ---------------------------------------------------------------------------

/// Ordered partition of the vertex set; each cell is a bit mask.
type Partition = Vec<u32>;

/// Refines `cells` to the coarsest equitable partition below it.
///
/// Cells are split by the vector of neighbour counts into every current
/// cell; the pieces keep the position of their parent and are ordered by
/// that vector, so the result commutes with relabelling.
fn refine(rows: &[u32], cells: &mut Partition) {
    loop {
        let k = cells.len();
        let mut next: Partition = Vec::with_capacity(rows.len());
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut sigs: Vec<(Vec<u8>, usize)> = Vec::new();
            let mut bits = cell;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let sig: Vec<u8> = cells.iter().map(|&c| (rows[v] & c).count_ones() as u8).collect();
                sigs.push((sig, v));
            }
            sigs.sort();
            let mut i = 0;
            while i < sigs.len() {
                let mut mask = 0u32;
                let mut j = i;
                while j < sigs.len() && sigs[j].0 == sigs[i].0 {
                    mask |= 1 << sigs[j].1;
                    j += 1;
                }
                next.push(mask);
                i = j;
            }
        }
        let changed = next.len() != k;
        *cells = next;
        if !changed {
            return;
        }
    }
}

/// Twins are swapped by an automorphism that fixes every other vertex.
#[inline]
fn twins(rows: &[u32], u: usize, v: usize) -> bool {
    let mask = !(1u32 << u | 1u32 << v);
    rows[u] & mask == rows[v] & mask
}

fn leaf_code(rows: &[u32], cells: &Partition) -> Vec<u8> {
    let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
    encode_bytes(order.len(), |i, j| rows[order[i]] >> order[j] & 1 == 1)
}

fn search(rows: &[u32], cells: Partition, best: &mut Option<(Vec<u8>, Partition)>) {
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let code = leaf_code(rows, &cells);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, cells));
        }
        return;
    };
    let cell = cells[target];
    let mut tried: Vec<usize> = Vec::new();
    let mut bits = cell;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if tried.iter().any(|&u| twins(rows, u, v)) {
            continue;
        }
        tried.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(1 << v);
        child.push(cell & !(1 << v));
        child.extend_from_slice(&cells[target + 1..]);
        refine(rows, &mut child);
        search(rows, child, best);
    }
}

fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let rows: Vec<u32> = (0..n).map(|v| g.row(v)[0] as u32).collect();
    let mut cells: Partition = vec![if n == 32 { u32::MAX } else { (1u32 << n) - 1 }];
    refine(&rows, &mut cells);
    let mut best = None;
    search(&rows, cells, &mut best);
    let (_, cells) = best.expect("search reaches at least one leaf");
    cells.iter().map(|c| c.trailing_zeros() as usize).collect()
}
