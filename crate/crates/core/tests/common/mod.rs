#![allow(dead_code)]

use forestpoly::graph::{Edge, WeightedGraph};
use forestpoly::lintree::PolyMatrix;
use forestpoly::IntPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Determinant by Laplace expansion along the first row. Exponential; only
/// for small matrices, and independent of the elimination code.
pub fn naive_det(m: &PolyMatrix) -> IntPoly {
    let n = m.size();
    if n == 0 {
        return IntPoly::one();
    }
    let mut acc = IntPoly::zero();
    for j in 0..n {
        let entry = &m[(0, j)];
        if entry.is_zero() {
            continue;
        }
        let keep_cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let rows: Vec<Vec<IntPoly>> = (1..n)
            .map(|r| keep_cols.iter().map(|&c| m[(r, c)].clone()).collect())
            .collect();
        let minor = PolyMatrix::from_rows(rows).unwrap();
        let term = entry * &naive_det(&minor);
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small positive weight: a constant 1..=3, `x`, or `x + c`.
pub fn random_weight(rng: &mut ChaCha8Rng) -> IntPoly {
    match rng.gen_range(0..4) {
        0 => IntPoly::constant(rng.gen_range(1..=3)),
        1 => IntPoly::x(),
        2 => IntPoly::linear(rng.gen_range(1..=2)),
        _ => IntPoly::monomial(rng.gen_range(1..=2), 1),
    }
}

/// Random simple graph with `vertices` vertices, `nodes` of them nodes,
/// and at most `max_edges` edges.
pub fn random_graph(rng: &mut ChaCha8Rng, vertices: usize, nodes: usize, max_edges: usize, oriented: bool) -> WeightedGraph {
    let mut flags = vec![false; vertices];
    let mut placed = 0;
    while placed < nodes {
        let v = rng.gen_range(0..vertices);
        if !flags[v] {
            flags[v] = true;
            placed += 1;
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for u in 0..vertices {
        for v in 0..vertices {
            if u != v && (oriented || u < v) {
                pairs.push((u, v));
            }
        }
    }
    let want = rng.gen_range(vertices.saturating_sub(1).min(max_edges)..=max_edges.min(pairs.len()));
    let mut edges = Vec::new();
    while edges.len() < want {
        let i = rng.gen_range(0..pairs.len());
        let (u, v) = pairs.swap_remove(i);
        edges.push(Edge::new(u, v, random_weight(rng)));
    }
    WeightedGraph::new(flags, edges, oriented).unwrap()
}

/// The fixed corpus of 25 non-oriented graphs with at most 12 edges and
/// 1 to 3 nodes.
pub fn corpus() -> Vec<WeightedGraph> {
    let mut r = rng(0x5eed_f0e5);
    (0..25)
        .map(|i| {
            let vertices = 4 + i % 4;
            let nodes = 1 + i % 3;
            random_graph(&mut r, vertices, nodes, 12, false)
        })
        .collect()
}

/// Binomial coefficient by Pascal's rule.
pub fn binomial(n: u64, k: u64) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k as usize).copied().unwrap_or(0)
}
