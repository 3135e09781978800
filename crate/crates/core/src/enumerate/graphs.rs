//! Small bounded-degree graphs, one per isomorphism class.
//!
//! Bounded degree and C4-freeness pass to induced subgraphs, and every
//! connected graph has a vertex whose removal leaves it connected. So each
//! target graph on `k + 1` vertices arises from a target graph on `k`
//! vertices by adding one vertex; graphs are grown one vertex at a time and
//! each level is deduplicated by canonical code.

use super::EnumError;
use crate::graph::{canonical_code, canonical_form, CanonicalCode, Graph};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Largest order accepted by [`connected_c4free_graphs`].
pub const GRAPH_ENUM_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    pub order: usize,
    pub dmax: usize,
    pub min_edges: usize,
    pub c4_free: bool,
    pub connected: bool,
}

impl EnumConfig {
    /// Connected, C4-free graphs of the given order and degree bound.
    pub fn new(order: usize, dmax: usize) -> EnumConfig {
        EnumConfig { order, dmax, min_edges: 0, c4_free: true, connected: true }
    }

    pub fn min_edges(mut self, m: usize) -> EnumConfig {
        self.min_edges = m;
        self
    }

    /// Re-checks every constraint on a finished graph.
    pub fn admits(&self, g: &Graph) -> bool {
        g.order() == self.order
            && g.max_degree() <= self.dmax
            && g.size() >= self.min_edges
            && (!self.c4_free || g.is_c4_free())
            && (!self.connected || g.is_connected())
    }
}

/// Subsets of `0..n` usable as the neighbourhood of a new vertex.
fn extensions(g: &Graph, cfg: &EnumConfig, out: &mut Vec<Vec<usize>>) {
    fn go(g: &Graph, cfg: &EnumConfig, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() || !cfg.connected {
            out.push(cur.clone());
        }
        if cur.len() == cfg.dmax {
            return;
        }
        for v in start..g.order() {
            if g.degree(v) >= cfg.dmax {
                continue;
            }
            // a common neighbour of two new neighbours closes a 4-cycle
            if cfg.c4_free && cur.iter().any(|&u| g.codegree(u, v) > 0) {
                continue;
            }
            cur.push(v);
            go(g, cfg, v + 1, cur, out);
            cur.pop();
        }
    }
    go(g, cfg, 0, &mut Vec::new(), out);
}

/// One graph per isomorphism class satisfying `cfg`, in canonical-code
/// order.
pub fn connected_c4free_graphs(cfg: EnumConfig) -> Result<impl Iterator<Item = Graph>, EnumError> {
    if cfg.order == 0 || cfg.order > GRAPH_ENUM_CAP {
        return Err(EnumError::OrderOutOfRange { order: cfg.order, cap: GRAPH_ENUM_CAP });
    }
    let mut level: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    let k1 = Graph::empty(1).expect("valid");
    level.insert(canonical_code(&k1).expect("small"), k1);
    let mut subsets = Vec::new();
    for k in 1..cfg.order {
        let mut next = BTreeMap::new();
        let remaining = cfg.order - k;
        for g in level.values() {
            // each later vertex adds at most dmax edges
            if g.size() + remaining * cfg.dmax < cfg.min_edges {
                continue;
            }
            subsets.clear();
            extensions(g, &cfg, &mut subsets);
            for s in &subsets {
                let h = g.with_new_vertex(s).expect("order within cap");
                let code = canonical_code(&h).expect("order within cap");
                next.entry(code).or_insert_with(|| canonical_form(&h).expect("order within cap"));
            }
        }
        level = next;
    }
    Ok(level.into_values().filter(move |g| g.size() >= cfg.min_edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    /// Every edge subset on `n` labelled vertices, filtered and deduplicated.
    fn subset_oracle(cfg: EnumConfig) -> BTreeSet<CanonicalCode> {
        let n = cfg.order;
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut out = BTreeSet::new();
        for mask in 0u64..1 << pairs.len() {
            if (mask.count_ones() as usize) < cfg.min_edges {
                continue;
            }
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
            let g = Graph::from_edge_list(n, &edges).unwrap();
            if cfg.admits(&g) {
                out.insert(canonical_code(&g).unwrap());
            }
        }
        out
    }

    fn codes(cfg: EnumConfig) -> Vec<CanonicalCode> {
        connected_c4free_graphs(cfg).unwrap().map(|g| canonical_code(&g).unwrap()).collect()
    }

    #[test]
    fn order_four_with_four_edges() {
        let got: Vec<Graph> = connected_c4free_graphs(EnumConfig::new(4, 3).min_edges(4)).unwrap().collect();
        assert_eq!(got.len(), 1);
        let paw = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert_eq!(canonical_code(&got[0]).unwrap(), canonical_code(&paw).unwrap());
    }

    #[test]
    fn two_regular_on_five_is_the_cycle() {
        let got: Vec<Graph> = connected_c4free_graphs(EnumConfig::new(5, 2).min_edges(5)).unwrap().collect();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0], canonical_form(&crate::constructions::cycle(5).unwrap()).unwrap());
    }

    #[test]
    fn matches_subset_oracle() {
        for n in 1..=6 {
            for dmax in [2, 3, 4] {
                for min_edges in [0, n] {
                    for (c4_free, connected) in [(true, true), (false, true), (true, false)] {
                        let cfg = EnumConfig { order: n, dmax, min_edges, c4_free, connected };
                        let got = codes(cfg);
                        let set: BTreeSet<_> = got.iter().cloned().collect();
                        assert_eq!(set.len(), got.len());
                        assert_eq!(set, subset_oracle(cfg), "{cfg:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn order_seven_matches_subset_oracle() {
        let cfg = EnumConfig::new(7, 3).min_edges(7);
        assert_eq!(codes(cfg).into_iter().collect::<BTreeSet<_>>(), subset_oracle(cfg));
    }

    #[test]
    fn emitted_graphs_satisfy_config() {
        for n in 1..=9 {
            let cfg = EnumConfig::new(n, 3);
            let mut seen = BTreeSet::new();
            for g in connected_c4free_graphs(cfg).unwrap() {
                assert!(cfg.admits(&g));
                assert!(seen.insert(canonical_code(&g).unwrap()));
            }
        }
        assert!(connected_c4free_graphs(EnumConfig::new(11, 3)).is_err());
    }

    #[test]
    fn deterministic_order() {
        let cfg = EnumConfig::new(8, 3).min_edges(8);
        assert_eq!(codes(cfg), codes(cfg));
    }
}
