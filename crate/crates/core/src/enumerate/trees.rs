//! Isomorph-free free trees with bounded maximum degree.
//!
//! Every free tree is described exactly once through its centre:
//!
//! * a *unicentral* tree of radius `h` is a root with between 2 and `dmax`
//!   child branches, all of height at most `h − 1` and at least two of
//!   height exactly `h − 1`;
//! * a *bicentral* tree is an unordered pair of branches of equal height
//!   joined by the central edge.
//!
//! A *branch* is a rooted tree in which every vertex has at most `dmax − 1`
//! children (each branch vertex already has a parent). Branches are built
//! once per catalog, smallest first, and numbered by `(size, height)`; a
//! multiset of sibling branches is written with non-increasing ids, which
//! makes every representation unique. The degree bound is therefore part of
//! the construction rather than a filter on its output.

use super::EnumError;
use crate::graph::Graph;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

/// Largest tree order the generator accepts.
pub const TREE_ENUM_CAP: usize = 255;

/// A rooted tree written as the depth of each vertex in preorder.
///
/// Sequences produced by [`Trees`] are the generator's canonical
/// representatives: distinct codes in one stream are never isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeCode {
    levels: Vec<u8>,
}

impl TreeCode {
    /// Wraps a level sequence. It must start with 0 and never increase by
    /// more than one from one entry to the next.
    pub fn from_levels(levels: Vec<u8>) -> Option<TreeCode> {
        let ok = levels.first() == Some(&0)
            && levels.windows(2).all(|w| w[1] >= 1 && w[1] <= w[0] + 1)
            && levels.len() <= TREE_ENUM_CAP;
        ok.then_some(TreeCode { levels })
    }

    pub fn levels(&self) -> &[u8] {
        &self.levels
    }

    pub fn order(&self) -> usize {
        self.levels.len()
    }

    /// Max degree of the encoded tree.
    pub fn max_degree(&self) -> usize {
        self.parents()
            .iter()
            .enumerate()
            .fold(vec![0usize; self.order()], |mut deg, (v, p)| {
                if let Some(p) = *p {
                    deg[v] += 1;
                    deg[p] += 1;
                }
                deg
            })
            .into_iter()
            .max()
            .unwrap_or(0)
    }

    fn parents(&self) -> Vec<Option<usize>> {
        let mut last = vec![0usize; self.order() + 1];
        self.levels
            .iter()
            .enumerate()
            .map(|(v, &l)| {
                let l = l as usize;
                last[l] = v;
                (l > 0).then(|| last[l - 1])
            })
            .collect()
    }

    /// The tree with vertices numbered in preorder.
    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> =
            self.parents().into_iter().enumerate().filter_map(|(v, p)| p.map(|p| (p, v))).collect();
        Graph::from_edge_list(self.order(), &edges).expect("level sequences encode trees")
    }
}

type ClassId = usize;

/// All branches needed for trees up to `max_order`.
#[derive(Debug)]
struct BranchTable {
    size: Vec<u16>,
    height: Vec<u16>,
    child_start: Vec<u32>,
    children: Vec<u32>,
    /// `(size, height, first id, end id)`, sorted; ids of a class are
    /// contiguous.
    classes: Vec<(u16, u16, u32, u32)>,
}

impl BranchTable {
    fn build(max_order: usize, child_limit: usize) -> BranchTable {
        let mut t = BranchTable {
            size: Vec::new(),
            height: Vec::new(),
            child_start: vec![0],
            children: Vec::new(),
            classes: Vec::new(),
        };
        // a branch of size s and height e is only ever used when s + e < max_order
        let limit = max_order.saturating_sub(1);
        for s in 1..=limit {
            let mut fresh: Vec<(u16, Vec<u32>)> = Vec::new();
            if s == 1 {
                fresh.push((0, Vec::new()));
            } else if child_limit > 0 {
                let classes = t.classes.clone();
                for seq in class_sequences(&classes, s - 1, 1, child_limit, usize::MAX, None) {
                    let h = 1 + seq.iter().map(|&c| classes[c].1).max().unwrap_or(0);
                    if s + h as usize > limit {
                        continue;
                    }
                    let mut odo = Odometer::new(&classes, seq);
                    while let Some(ids) = odo.current() {
                        fresh.push((h, ids));
                        odo.advance();
                    }
                }
            }
            fresh.sort_by_key(|(h, _)| *h);
            let mut i = 0;
            while i < fresh.len() {
                let h = fresh[i].0;
                let first = t.size.len() as u32;
                while i < fresh.len() && fresh[i].0 == h {
                    t.size.push(s as u16);
                    t.height.push(h);
                    t.children.extend_from_slice(&fresh[i].1);
                    t.child_start.push(t.children.len() as u32);
                    i += 1;
                }
                t.classes.push((s as u16, h, first, t.size.len() as u32));
            }
        }
        t
    }

    fn write_levels(&self, id: u32, depth: u8, out: &mut Vec<u8>) {
        out.push(depth);
        let id = id as usize;
        let (a, b) = (self.child_start[id] as usize, self.child_start[id + 1] as usize);
        for &c in &self.children[a..b] {
            self.write_levels(c, depth + 1, out);
        }
    }

    fn len(&self) -> usize {
        self.size.len()
    }
}

/// Non-increasing sequences of class indices with the given total size.
///
/// `max_height` bounds every class height; `exact` = `(height, count)`
/// demands at least `count` classes of exactly that height.
fn class_sequences(
    classes: &[(u16, u16, u32, u32)],
    total: usize,
    kmin: usize,
    kmax: usize,
    max_height: usize,
    exact: Option<(usize, usize)>,
) -> Vec<Vec<ClassId>> {
    #[allow(clippy::too_many_arguments)]
    fn go(
        classes: &[(u16, u16, u32, u32)],
        remaining: usize,
        upper: usize,
        slots: usize,
        kmin: usize,
        max_height: usize,
        exact: Option<(usize, usize)>,
        cur: &mut Vec<ClassId>,
        out: &mut Vec<Vec<ClassId>>,
    ) {
        if remaining == 0 {
            let ok_len = cur.len() >= kmin;
            let ok_exact = exact.is_none_or(|(h, c)| cur.iter().filter(|&&x| classes[x].1 as usize == h).count() >= c);
            if ok_len && ok_exact {
                out.push(cur.clone());
            }
            return;
        }
        if slots == 0 {
            return;
        }
        for c in (0..upper).rev() {
            let (s, h, _, _) = classes[c];
            let (s, h) = (s as usize, h as usize);
            if s > remaining || h > max_height {
                continue;
            }
            // later picks are no larger than this one
            if s * slots < remaining {
                break;
            }
            cur.push(c);
            go(classes, remaining - s, c + 1, slots - 1, kmin, max_height, exact, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if total == 0 {
        if kmin == 0 && exact.is_none_or(|(_, c)| c == 0) {
            out.push(Vec::new());
        }
        return out;
    }
    go(classes, total, classes.len(), kmax, kmin, max_height, exact, &mut Vec::new(), &mut out);
    out
}

/// Walks the id tuples of one class sequence: within a run of equal
/// classes, ids are non-increasing.
#[derive(Debug, Clone)]
struct Odometer {
    seq: Vec<ClassId>,
    first: Vec<u32>,
    len: Vec<u32>,
    idx: Vec<u32>,
    done: bool,
}

impl Odometer {
    fn new(classes: &[(u16, u16, u32, u32)], seq: Vec<ClassId>) -> Odometer {
        let first = seq.iter().map(|&c| classes[c].2).collect();
        let len: Vec<u32> = seq.iter().map(|&c| classes[c].3 - classes[c].2).collect();
        let done = len.contains(&0);
        let idx = vec![0; seq.len()];
        Odometer { seq, first, len, idx, done }
    }

    fn current(&self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        Some(self.idx.iter().zip(&self.first).rev().map(|(i, f)| f + i).rev().collect())
    }

    fn advance(&mut self) {
        for p in (0..self.idx.len()).rev() {
            let next = self.idx[p] + 1;
            let same_run = p > 0 && self.seq[p - 1] == self.seq[p];
            if next < self.len[p] && (!same_run || next <= self.idx[p - 1]) {
                self.idx[p] = next;
                for q in p + 1..self.idx.len() {
                    self.idx[q] = 0;
                }
                return;
            }
        }
        self.done = true;
    }

    /// Number of tuples without walking them.
    fn count(&self) -> u64 {
        let mut total = 1u64;
        let mut p = 0;
        while p < self.seq.len() {
            let mut q = p;
            while q < self.seq.len() && self.seq[q] == self.seq[p] {
                q += 1;
            }
            // multisets of size r from L items: C(L + r − 1, r)
            total *= binomial(self.len[p] as u64 + (q - p) as u64 - 1, (q - p) as u64);
            p = q;
        }
        total
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Single,
    Unicentral,
    Bicentral,
}

/// One top-level choice: centre type plus the classes of the central
/// branches. Plans partition the stream.
#[derive(Debug, Clone)]
struct Plan {
    shape: Shape,
    seq: Vec<ClassId>,
}

/// Branch table and degree bound shared by all tree streams of a sweep.
#[derive(Debug, Clone)]
pub struct TreeCatalog {
    table: Arc<BranchTable>,
    max_order: usize,
    dmax: usize,
}

impl TreeCatalog {
    /// Prepares generation of trees with `Δ ≤ dmax` and order `≤ max_order`.
    pub fn new(max_order: usize, dmax: usize) -> Result<TreeCatalog, EnumError> {
        if max_order == 0 || max_order > TREE_ENUM_CAP {
            return Err(EnumError::OrderOutOfRange { order: max_order, cap: TREE_ENUM_CAP });
        }
        let child_limit = dmax.saturating_sub(1).min(max_order);
        Ok(TreeCatalog { table: Arc::new(BranchTable::build(max_order, child_limit)), max_order, dmax })
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn dmax(&self) -> usize {
        self.dmax
    }

    /// Number of branches held by the catalog.
    pub fn branch_count(&self) -> usize {
        self.table.len()
    }

    fn plans(&self, n: usize) -> Vec<Plan> {
        let t = &self.table;
        let mut plans = Vec::new();
        if n == 0 || n > self.max_order {
            return plans;
        }
        if n == 1 {
            plans.push(Plan { shape: Shape::Single, seq: Vec::new() });
            return plans;
        }
        // unicentral, radius h: the root needs two branches of height h − 1
        if self.dmax >= 2 {
            for h in 1..=(n - 1) / 2 {
                for seq in class_sequences(&t.classes, n - 1, 2, self.dmax, h - 1, Some((h - 1, 2))) {
                    plans.push(Plan { shape: Shape::Unicentral, seq });
                }
            }
        }
        // bicentral: both halves of height h
        if self.dmax >= 1 {
            for h in 0..n / 2 {
                let halves: Vec<ClassId> = (0..t.classes.len()).filter(|&c| t.classes[c].1 as usize == h).collect();
                for (i, &a) in halves.iter().enumerate().rev() {
                    for &b in halves[..=i].iter().rev() {
                        if t.classes[a].0 as usize + t.classes[b].0 as usize == n {
                            plans.push(Plan { shape: Shape::Bicentral, seq: vec![a, b] });
                        }
                    }
                }
            }
        }
        plans
    }

    /// All trees of order `n` with `Δ ≤ dmax`, each isomorphism class once.
    pub fn trees(&self, n: usize) -> Trees {
        Trees::new(self.clone(), self.plans(n))
    }

    /// The stream for order `n` split by its first branching decision.
    /// Concatenating the shards in order reproduces [`TreeCatalog::trees`].
    pub fn shards(&self, n: usize) -> Vec<Trees> {
        self.plans(n).into_iter().map(|p| Trees::new(self.clone(), vec![p])).collect()
    }

    /// Length of [`TreeCatalog::trees`]`(n)`, computed without generating.
    pub fn count(&self, n: usize) -> u64 {
        self.plans(n)
            .into_iter()
            .map(|p| match p.shape {
                Shape::Single => 1,
                _ => Odometer::new(&self.table.classes, p.seq).count(),
            })
            .sum()
    }
}

/// Stream of [`TreeCode`]s for one order.
#[derive(Debug, Clone)]
pub struct Trees {
    catalog: TreeCatalog,
    plans: Vec<Plan>,
    plan: usize,
    odo: Option<Odometer>,
}

impl Trees {
    fn new(catalog: TreeCatalog, plans: Vec<Plan>) -> Trees {
        Trees { catalog, plans, plan: 0, odo: None }
    }

    fn emit(&self, shape: Shape, ids: &[u32]) -> TreeCode {
        let t = &self.catalog.table;
        let mut levels = Vec::new();
        match shape {
            Shape::Single => levels.push(0),
            Shape::Unicentral => {
                levels.push(0);
                for &c in ids {
                    t.write_levels(c, 1, &mut levels);
                }
            }
            Shape::Bicentral => {
                t.write_levels(ids[0], 0, &mut levels);
                t.write_levels(ids[1], 1, &mut levels);
            }
        }
        TreeCode { levels }
    }
}

impl Iterator for Trees {
    type Item = TreeCode;

    fn next(&mut self) -> Option<TreeCode> {
        loop {
            let plan = self.plans.get(self.plan)?;
            if plan.shape == Shape::Single {
                self.plan += 1;
                return Some(TreeCode { levels: vec![0] });
            }
            let odo = self.odo.get_or_insert_with(|| Odometer::new(&self.catalog.table.classes, plan.seq.clone()));
            match odo.current() {
                Some(ids) => {
                    odo.advance();
                    let shape = plan.shape;
                    return Some(self.emit(shape, &ids));
                }
                None => {
                    self.odo = None;
                    self.plan += 1;
                }
            }
        }
    }
}

/// Trees of order `n` and maximum degree `≤ dmax`, as graphs.
pub fn trees_bounded_degree(n: usize, dmax: usize) -> Result<impl Iterator<Item = Graph>, EnumError> {
    Ok(TreeCatalog::new(n.max(1), dmax)?.trees(n).map(|c| c.to_graph()))
}

/// Number of trees of order `n` with `Δ ≤ dmax`.
pub fn count_trees(n: usize, dmax: usize) -> Result<u64, EnumError> {
    Ok(TreeCatalog::new(n.max(1), dmax)?.count(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::prufer_tree;
    use crate::graph::canonical_code;
    use alloc::collections::BTreeSet;

    /// All labelled trees via Prüfer sequences, deduplicated by canonical
    /// code, keeping those with `Δ ≤ dmax`.
    fn prufer_oracle(n: usize, dmax: usize) -> BTreeSet<crate::CanonicalCode> {
        let mut out = BTreeSet::new();
        if n <= 2 {
            let g = prufer_tree(n, &[]);
            if g.max_degree() <= dmax {
                out.insert(canonical_code(&g).unwrap());
            }
            return out;
        }
        let len = n - 2;
        let mut seq = vec![0usize; len];
        loop {
            let g = prufer_tree(n, &seq);
            if g.max_degree() <= dmax {
                out.insert(canonical_code(&g).unwrap());
            }
            let mut i = 0;
            while i < len {
                seq[i] += 1;
                if seq[i] < n {
                    break;
                }
                seq[i] = 0;
                i += 1;
            }
            if i == len {
                return out;
            }
        }
    }

    /// Free trees with `Δ ≤ dmax` counted through cycle indices: vertex-
    /// rooted trees minus edge-rooted trees plus symmetric edges.
    fn polya_counts(nmax: usize, dmax: usize) -> Vec<u128> {
        // branch[k][s]: rooted trees of size s whose root has at most k
        // children and every other vertex at most dmax − 1 children
        let c = dmax.saturating_sub(1);
        let kmax = dmax;
        let mut planted = vec![0u128; nmax + 1]; // root ≤ c children
        let mut rooted = vec![0u128; nmax + 1]; // root ≤ dmax children
                                                // multiset generating function: coefficient table ms[j][s] counts
                                                // multisets of exactly j planted branches with total size s
        let mut ms = vec![vec![0u128; nmax + 1]; kmax + 1];
        ms[0][0] = 1;
        for s in 1..=nmax {
            // branches of size s need multisets of total size s − 1; those
            // only involve branches of size < s, already folded into ms
            planted[s] = (0..=c).map(|j| ms[j][s - 1]).sum();
            rooted[s] = (0..=kmax).map(|j| ms[j][s - 1]).sum();
            // fold branches of size s into the multiset table (Euler
            // transform, applied in descending j so items are counted once)
            let count = planted[s];
            if count == 0 {
                continue;
            }
            for j in (1..=kmax).rev() {
                for total in (s..=nmax).rev() {
                    // choose r ≥ 1 copies of size-s branches with repetition
                    let mut add = 0u128;
                    let mut r = 1;
                    while r <= j && r * s <= total {
                        // C(count + r − 1, r)
                        let mut comb = 1u128;
                        for i in 0..r as u128 {
                            comb = comb * (count + i) / (i + 1);
                        }
                        add += comb * ms[j - r][total - r * s];
                        r += 1;
                    }
                    ms[j][total] += add;
                }
            }
        }
        (0..=nmax)
            .map(|n| {
                if n == 0 {
                    return 0;
                }
                let mut edge_rooted = 0u128;
                for a in 1..n {
                    edge_rooted += planted[a] * planted[n - a];
                }
                let symmetric = if n % 2 == 0 { planted[n / 2] } else { 0 };
                rooted[n] + symmetric - (edge_rooted + symmetric) / 2
            })
            .collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!((1..=4).map(|n| count_trees(n, 3).unwrap()).collect::<Vec<_>>(), [1, 1, 1, 2]);
        assert_eq!(count_trees(6, 3).unwrap(), 4);
        assert_eq!(count_trees(5, 2).unwrap(), 1);
        let k2: Vec<_> = trees_bounded_degree(2, 1).unwrap().collect();
        assert_eq!(k2.len(), 1);
        assert_eq!(k2[0].size(), 1);
        assert_eq!(count_trees(3, 1).unwrap(), 0);
        assert_eq!(count_trees(2, 0).unwrap(), 0);
    }

    #[test]
    fn four_vertices_are_path_and_star() {
        let codes: BTreeSet<_> = trees_bounded_degree(4, 3).unwrap().map(|g| canonical_code(&g).unwrap()).collect();
        let expect: BTreeSet<_> = [crate::constructions::path(4).unwrap(), crate::constructions::star(3).unwrap()]
            .iter()
            .map(|g| canonical_code(g).unwrap())
            .collect();
        assert_eq!(codes, expect);
    }

    #[test]
    fn matches_prufer_oracle() {
        for dmax in [2, 3, 4, 8] {
            for n in 1..=8 {
                let oracle = prufer_oracle(n, dmax);
                let stream: Vec<_> =
                    trees_bounded_degree(n, dmax).unwrap().map(|g| canonical_code(&g).unwrap()).collect();
                let set: BTreeSet<_> = stream.iter().cloned().collect();
                assert_eq!(set.len(), stream.len(), "duplicates at n={n} dmax={dmax}");
                assert_eq!(set, oracle, "n={n} dmax={dmax}");
                assert_eq!(count_trees(n, dmax).unwrap(), stream.len() as u64);
            }
        }
    }

    #[test]
    fn order_nine_matches_prufer_count() {
        assert_eq!(count_trees(9, 3).unwrap() as usize, prufer_oracle(9, 3).len());
    }

    #[test]
    fn counts_match_cycle_index_oracle() {
        for dmax in [2usize, 3, 4] {
            let nmax = if dmax == 3 { 25 } else { 16 };
            let expect = polya_counts(nmax, dmax);
            let cat = TreeCatalog::new(nmax, dmax).unwrap();
            for (n, &want) in expect.iter().enumerate().skip(1) {
                assert_eq!(cat.count(n) as u128, want, "n={n} dmax={dmax}");
            }
        }
    }

    #[test]
    fn streams_are_valid_distinct_and_deterministic() {
        let cat = TreeCatalog::new(14, 3).unwrap();
        for n in 1..=14 {
            let a: Vec<_> = cat.trees(n).collect();
            let b: Vec<_> = cat.trees(n).collect();
            assert_eq!(a, b);
            assert_eq!(a.len() as u64, cat.count(n));
            let shards: Vec<_> = cat.shards(n).into_iter().flatten().collect();
            assert_eq!(shards, a);
            let mut codes = BTreeSet::new();
            for t in &a {
                let g = t.to_graph();
                assert!(g.is_tree() && g.order() == n && g.max_degree() <= 3);
                assert!(t.max_degree() <= 3);
                assert!(codes.insert(canonical_code(&g).unwrap()));
            }
        }
    }

    #[test]
    fn level_sequence_checks() {
        assert!(TreeCode::from_levels(vec![0, 1, 2, 1]).is_some());
        assert!(TreeCode::from_levels(vec![0, 2]).is_none());
        assert!(TreeCode::from_levels(vec![0, 0]).is_none());
        assert!(TreeCode::from_levels(vec![]).is_none());
        let star = TreeCode::from_levels(vec![0, 1, 1, 1]).unwrap();
        assert_eq!(star.max_degree(), 3);
        assert!(TreeCatalog::new(0, 3).is_err());
        assert!(TreeCatalog::new(256, 3).is_err());
    }
}
