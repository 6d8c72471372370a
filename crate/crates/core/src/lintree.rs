//! Laplacians over `Z[x]`, fraction-free determinants and the matrix tree
//! pipeline.
//!
//! For a graph with node set `N`, the determinant of the Laplacian
//! restricted to the internal vertices equals the weighted sum of rooted
//! spanning forests. The oriented variant uses in-arc weights on the
//! diagonal and counts forests whose arcs point away from the roots.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{collapse_nodes, WeightedGraph};
use crate::poly::IntPoly;

/// Square matrix of polynomials, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<IntPoly>,
}

impl PolyMatrix {
    pub fn zeros(size: usize) -> Self {
        PolyMatrix {
            size,
            entries: vec![IntPoly::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m[(i, i)] = IntPoly::one();
        }
        m
    }

    /// Builds from rows; every row must have `rows.len()` entries.
    pub fn from_rows(rows: Vec<Vec<IntPoly>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::domain("matrix rows must all have length equal to the row count"));
        }
        Ok(PolyMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn row(&self, i: usize) -> &[IntPoly] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[IntPoly]> {
        self.entries.chunks(self.size.max(1)).take(self.size)
    }

    /// Keeps the listed rows and columns, in the given order.
    pub fn submatrix(&self, keep: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(keep.len());
        for (r, &i) in keep.iter().enumerate() {
            for (c, &j) in keep.iter().enumerate() {
                out[(r, c)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Drops row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> Result<PolyMatrix> {
        if i >= self.size || j >= self.size {
            return Err(Error::Index {
                row: i,
                col: j,
                size: self.size,
            });
        }
        let n = self.size - 1;
        let mut out = PolyMatrix::zeros(n);
        for r in 0..n {
            let sr = if r < i { r } else { r + 1 };
            for c in 0..n {
                let sc = if c < j { c } else { c + 1 };
                out[(r, c)] = self[(sr, sc)].clone();
            }
        }
        Ok(out)
    }

    pub fn det(&self) -> IntPoly {
        det(self)
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = IntPoly;
    fn index(&self, (i, j): (usize, usize)) -> &IntPoly {
        assert!(i < self.size && j < self.size, "matrix index out of range");
        &self.entries[i * self.size + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut IntPoly {
        assert!(i < self.size && j < self.size, "matrix index out of range");
        &mut self.entries[i * self.size + j]
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// Weighted Laplacian of a non-oriented graph: `-w(uv)` off the diagonal,
/// incident weight sums on it.
pub fn laplacian(g: &WeightedGraph) -> Result<PolyMatrix> {
    if g.is_oriented() {
        return Err(Error::domain("laplacian expects a non-oriented graph"));
    }
    let mut m = PolyMatrix::zeros(g.vertex_count());
    for e in g.edges() {
        m[(e.u, e.v)] -= &e.weight;
        m[(e.v, e.u)] -= &e.weight;
        m[(e.u, e.u)] += &e.weight;
        m[(e.v, e.v)] += &e.weight;
    }
    Ok(m)
}

/// Oriented Laplacian: an arc `u -> v` of weight `w` puts `-w` at `(u, v)`
/// and `+w` at `(v, v)`, so the diagonal holds in-arc weight.
pub fn oriented_laplacian(g: &WeightedGraph) -> Result<PolyMatrix> {
    if !g.is_oriented() {
        return Err(Error::domain("oriented_laplacian expects an oriented graph"));
    }
    let mut m = PolyMatrix::zeros(g.vertex_count());
    for e in g.edges() {
        m[(e.u, e.v)] -= &e.weight;
        m[(e.v, e.v)] += &e.weight;
    }
    Ok(m)
}

/// Rows and columns of the internal vertices of `g`, in vertex order.
pub fn internal_submatrix(m: &PolyMatrix, g: &WeightedGraph) -> PolyMatrix {
    debug_assert_eq!(m.size(), g.vertex_count());
    m.submatrix(&g.internal_vertices())
}

/// Determinant by Bareiss fraction-free elimination. Each step picks the
/// lowest-degree nonzero pivot in the current column. Size 0 gives 1.
///
/// # Panics
/// Panics if an elimination division is inexact, which the Sylvester
/// identity rules out for any matrix over `Z[x]`.
pub fn det(m: &PolyMatrix) -> IntPoly {
    let n = m.size();
    if n == 0 {
        return IntPoly::one();
    }
    let mut a: Vec<Vec<IntPoly>> = m.rows().map(<[IntPoly]>::to_vec).collect();
    let mut negate = false;
    let mut prev = IntPoly::one();
    for k in 0..n {
        let Some(pivot) = (k..n)
            .filter(|&r| !a[r][k].is_zero())
            .min_by_key(|&r| a[r][k].degree())
        else {
            return IntPoly::zero();
        };
        if pivot != k {
            a.swap(pivot, k);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut t = &row[j] * &pivot_row[k];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    t -= &(&lead * &pivot_row[j]);
                }
                row[j] = if prev.is_one() {
                    t
                } else {
                    t.exact_div(&prev)
                        .expect("Bareiss step divides exactly over Z[x]")
                };
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `(-1)^(i+j) det(m without row i and column j)`.
pub fn cofactor_det(m: &PolyMatrix, i: usize, j: usize) -> Result<IntPoly> {
    let d = det(&m.minor(i, j)?);
    Ok(if (i + j) % 2 == 1 { -d } else { d })
}

/// Weighted rooted spanning forest sum of a non-oriented graph, as the
/// determinant of the internal block of its Laplacian.
pub fn forest_sum(g: &WeightedGraph) -> Result<IntPoly> {
    if g.is_oriented() {
        return Err(Error::domain("forest_sum expects a non-oriented graph"));
    }
    g.require_nodes()?;
    Ok(det(&internal_submatrix(&laplacian(g)?, g)))
}

/// Weighted oriented rooted spanning forest sum: collapse the nodes, then
/// take the internal block of the oriented Laplacian.
pub fn oriented_forest_sum(g: &WeightedGraph) -> Result<IntPoly> {
    if !g.is_oriented() {
        return Err(Error::domain("oriented_forest_sum expects an oriented graph"));
    }
    let collapsed = collapse_nodes(g)?;
    Ok(det(&internal_submatrix(&oriented_laplacian(&collapsed)?, &collapsed)))
}

/// `b L(C_n) + a I` built as a circulant: `a + 2b` on the diagonal, `-b` on
/// each cyclic neighbour. For `n = 1` this is `[a]`, for `n = 2` the two
/// neighbours coincide and the off-diagonal is `-2b`.
pub fn circulant_internal_matrix(n: usize, a: &IntPoly, b: &IntPoly) -> PolyMatrix {
    assert!(n >= 1, "circulant_internal_matrix needs n >= 1");
    let mut m = PolyMatrix::zeros(n);
    let two_b = b.scale(&2.into());
    for i in 0..n {
        m[(i, i)] += a;
        if n == 1 {
            continue;
        }
        m[(i, i)] += &two_b;
        m[(i, (i + 1) % n)] -= b;
        m[(i, (i + n - 1) % n)] -= b;
    }
    m
}

/// `(a + b) I - b P` with `P` the cyclic shift `e_i -> e_{i+1}`: the internal
/// block of the collapsed oriented sunlet, extended to every `n >= 1`.
pub fn cyclic_oriented_matrix(n: usize, a: &IntPoly, b: &IntPoly) -> PolyMatrix {
    assert!(n >= 1, "cyclic_oriented_matrix needs n >= 1");
    let mut m = PolyMatrix::zeros(n);
    let a_plus_b = a + b;
    for i in 0..n {
        m[(i, i)] += &a_plus_b;
        m[(i, (i + 1) % n)] -= b;
    }
    m
}
