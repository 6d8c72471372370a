//! Weighted graphs with a node / internal vertex partition.
//!
//! Vertices are `0..vertex_count`. Nodes are the boundary vertices: each
//! component of a rooted spanning forest must contain exactly one of them.
//! An oriented graph reads every edge `(u, v)` as the arc `u -> v`.

use std::collections::HashMap;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: IntPoly,
}

impl Edge {
    pub fn new(u: usize, v: usize, weight: IntPoly) -> Self {
        Edge { u, v, weight }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    node_flags: Vec<bool>,
    edges: Vec<Edge>,
    oriented: bool,
    /// Edge indices of the cycle when the graph came from a sunlet builder.
    cycle_edges: Option<Vec<usize>>,
}

impl WeightedGraph {
    /// Validates and builds a graph. Rejects self loops, out-of-range
    /// endpoints and duplicate edges (unordered pairs when non-oriented,
    /// ordered pairs when oriented).
    pub fn new(node_flags: Vec<bool>, edges: Vec<Edge>, oriented: bool) -> Result<Self> {
        if node_flags.is_empty() {
            return Err(Error::domain("graph has no vertices"));
        }
        let n = node_flags.len();
        let mut seen = HashSet::new();
        for (i, e) in edges.iter().enumerate() {
            if e.u >= n || e.v >= n {
                return Err(Error::domain(format!(
                    "edge {i} ({}, {}) has an endpoint outside 0..{n}",
                    e.u, e.v
                )));
            }
            if e.u == e.v {
                return Err(Error::domain(format!("edge {i} is a self loop at {}", e.u)));
            }
            let key = if oriented { (e.u, e.v) } else { (e.u.min(e.v), e.u.max(e.v)) };
            if !seen.insert(key) {
                return Err(Error::domain(format!(
                    "edge {i} duplicates an earlier edge between {} and {}",
                    e.u, e.v
                )));
            }
        }
        Ok(WeightedGraph {
            node_flags,
            edges,
            oriented,
            cycle_edges: None,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.node_flags.len()
    }

    pub fn node_flags(&self) -> &[bool] {
        &self.node_flags
    }

    pub fn is_node(&self, v: usize) -> bool {
        self.node_flags[v]
    }

    pub fn node_count(&self) -> usize {
        self.node_flags.iter().filter(|&&f| f).count()
    }

    /// Internal (non-node) vertices in index order.
    pub fn internal_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| !self.node_flags[v]).collect()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_oriented(&self) -> bool {
        self.oriented
    }

    pub fn cycle_edges(&self) -> Option<&[usize]> {
        self.cycle_edges.as_deref()
    }

    /// Number of edges incident to `v` (either direction).
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    pub(crate) fn require_nodes(&self) -> Result<()> {
        if self.node_count() == 0 {
            Err(Error::domain("graph has no nodes"))
        } else {
            Ok(())
        }
    }
}

/// The cycle `C_n`: vertices `v_1..v_n` at indices `0..n`, edge `i` joins
/// `v_i` and `v_{i+1}` cyclically. No nodes.
pub fn build_cycle(n: usize, weight: &IntPoly) -> Result<WeightedGraph> {
    if n < 3 {
        return Err(Error::domain(format!("cycle needs n >= 3, got {n}")));
    }
    let edges = (0..n).map(|i| Edge::new(i, (i + 1) % n, weight.clone())).collect();
    WeightedGraph::new(vec![false; n], edges, false)
}

fn sunlet(n: usize, a: &IntPoly, b: &IntPoly, oriented: bool) -> Result<WeightedGraph> {
    if n < 3 {
        return Err(Error::domain(format!("sunlet needs n >= 3, got {n}")));
    }
    let mut flags = vec![false; n];
    flags.extend(std::iter::repeat_n(true, n));
    let mut edges: Vec<Edge> = (0..n).map(|i| Edge::new(i, (i + 1) % n, b.clone())).collect();
    // pendant arcs run from the node v'_i into v_i
    edges.extend((0..n).map(|i| Edge::new(n + i, i, a.clone())));
    let mut g = WeightedGraph::new(flags, edges, oriented)?;
    g.cycle_edges = Some((0..n).collect());
    Ok(g)
}

/// The cycle with `n` pendant edges. Internal cycle vertices `v_1..v_n` sit
/// at `0..n`, pendant nodes `v'_1..v'_n` at `n..2n`. Edges `0..n` are the
/// cycle (weight `b`), edges `n..2n` the pendants (weight `a`).
pub fn build_sunlet(n: usize, a: &IntPoly, b: &IntPoly) -> Result<WeightedGraph> {
    sunlet(n, a, b, false)
}

/// [`build_sunlet`] with arcs `v_i -> v_{i+1}` around the cycle and
/// `v'_i -> v_i` on the pendants.
pub fn build_oriented_sunlet(n: usize, a: &IntPoly, b: &IntPoly) -> Result<WeightedGraph> {
    sunlet(n, a, b, true)
}

/// Merges every node into a single node at index 0. Internal vertices keep
/// their relative order at indices `1..`. Edges between two nodes vanish,
/// parallel edges produced by the merge are combined by adding weights.
pub fn collapse_nodes(g: &WeightedGraph) -> Result<WeightedGraph> {
    g.require_nodes()?;
    let mut index = vec![0usize; g.vertex_count()];
    let mut next = 1;
    for (v, slot) in index.iter_mut().enumerate() {
        if !g.is_node(v) {
            *slot = next;
            next += 1;
        }
    }
    let mut flags = vec![false; next];
    flags[0] = true;

    let mut edges: Vec<Edge> = Vec::new();
    let mut slot: HashMap<(usize, usize), usize> = HashMap::new();
    for e in g.edges() {
        if g.is_node(e.u) && g.is_node(e.v) {
            continue;
        }
        let (u, v) = (index[e.u], index[e.v]);
        let key = if g.is_oriented() { (u, v) } else { (u.min(v), u.max(v)) };
        match slot.get(&key) {
            Some(&i) => edges[i].weight += &e.weight,
            None => {
                slot.insert(key, edges.len());
                edges.push(Edge::new(u, v, e.weight.clone()));
            }
        }
    }
    WeightedGraph::new(flags, edges, g.is_oriented())
}
