//! Brute-force enumeration of rooted spanning forests.
//!
//! Every edge subset is tried in increasing bitmask order and tested with a
//! union-find. This is exponential and only meant as ground truth for the
//! determinant pipeline on small graphs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::poly::IntPoly;

/// Default edge cap for enumeration (`2^22` subsets).
pub const DEFAULT_EDGE_CAP: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestReport {
    pub forest_count: u64,
    pub weighted_sum: IntPoly,
    /// For sunlet graphs: number of forests using exactly `k` cycle edges,
    /// for every `k` from 0 to `n`.
    pub histogram: Option<BTreeMap<usize, u64>>,
}

struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
        self.rank.fill(0);
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Reusable scratch space for the subset tests.
struct Checker<'g> {
    g: &'g WeightedGraph,
    dsu: DisjointSet,
    nodes_per_root: Vec<u32>,
    in_degree: Vec<u32>,
}

impl<'g> Checker<'g> {
    fn new(g: &'g WeightedGraph) -> Self {
        let n = g.vertex_count();
        Checker {
            g,
            dsu: DisjointSet::new(n),
            nodes_per_root: vec![0; n],
            in_degree: vec![0; n],
        }
    }

    fn rsf(&mut self, subset: &[usize]) -> bool {
        self.dsu.reset();
        for &i in subset {
            let e = &self.g.edges()[i];
            if !self.dsu.union(e.u, e.v) {
                return false;
            }
        }
        self.nodes_per_root.fill(0);
        for v in 0..self.g.vertex_count() {
            if self.g.is_node(v) {
                let r = self.dsu.find(v);
                self.nodes_per_root[r] += 1;
            }
        }
        (0..self.g.vertex_count()).all(|v| {
            let r = self.dsu.find(v);
            self.nodes_per_root[r] == 1
        })
    }

    fn oriented_rsf(&mut self, subset: &[usize]) -> bool {
        if !self.rsf(subset) {
            return false;
        }
        self.in_degree.fill(0);
        for &i in subset {
            self.in_degree[self.g.edges()[i].v] += 1;
        }
        (0..self.g.vertex_count()).all(|v| {
            let want = if self.g.is_node(v) { 0 } else { 1 };
            self.in_degree[v] == want
        })
    }
}

fn check_subset(g: &WeightedGraph, subset: &[usize]) -> Option<Vec<usize>> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.last().is_some_and(|&i| i >= g.edge_count()) {
        return None;
    }
    Some(s)
}

/// True iff the chosen edges span an acyclic subgraph whose every component
/// contains exactly one node. Out-of-range indices give false.
pub fn is_rsf(g: &WeightedGraph, subset: &[usize]) -> bool {
    check_subset(g, subset).is_some_and(|s| Checker::new(g).rsf(&s))
}

/// [`is_rsf`] on the underlying undirected edges, plus every arc pointing
/// away from its component's node: nodes have in-degree 0 and every
/// internal vertex in-degree 1 among the chosen arcs.
pub fn is_oriented_rsf(g: &WeightedGraph, subset: &[usize]) -> bool {
    g.is_oriented() && check_subset(g, subset).is_some_and(|s| Checker::new(g).oriented_rsf(&s))
}

fn enumerate(g: &WeightedGraph, cap: usize, oriented: bool) -> Result<ForestReport> {
    let m = g.edge_count();
    if m > cap {
        return Err(Error::CapExceeded { edges: m, cap });
    }
    if m >= 64 {
        return Err(Error::domain("enumeration supports at most 63 edges"));
    }
    let mut cycle_mask = 0u64;
    if let Some(cycle) = g.cycle_edges() {
        for &i in cycle {
            cycle_mask |= 1 << i;
        }
    }
    let mut histogram: Option<BTreeMap<usize, u64>> = g
        .cycle_edges()
        .map(|c| (0..=c.len()).map(|k| (k, 0)).collect());

    let mut checker = Checker::new(g);
    let mut subset = Vec::with_capacity(m);
    let mut count = 0u64;
    let mut sum = IntPoly::zero();
    for mask in 0u64..(1u64 << m) {
        subset.clear();
        subset.extend((0..m).filter(|&i| mask >> i & 1 == 1));
        let ok = if oriented {
            checker.oriented_rsf(&subset)
        } else {
            checker.rsf(&subset)
        };
        if !ok {
            continue;
        }
        count += 1;
        let term: IntPoly = subset.iter().map(|&i| g.edges()[i].weight.clone()).product();
        sum += &term;
        if let Some(h) = histogram.as_mut() {
            *h.entry((mask & cycle_mask).count_ones() as usize).or_default() += 1;
        }
    }
    Ok(ForestReport {
        forest_count: count,
        weighted_sum: sum,
        histogram,
    })
}

/// Sums edge-weight products over every rooted spanning forest.
pub fn enumerate_rsf(g: &WeightedGraph, cap: usize) -> Result<ForestReport> {
    if g.is_oriented() {
        return Err(Error::domain("enumerate_rsf expects a non-oriented graph"));
    }
    enumerate(g, cap, false)
}

/// Sums edge-weight products over every oriented rooted spanning forest.
pub fn enumerate_oriented_rsf(g: &WeightedGraph, cap: usize) -> Result<ForestReport> {
    if !g.is_oriented() {
        return Err(Error::domain("enumerate_oriented_rsf expects an oriented graph"));
    }
    enumerate(g, cap, true)
}
