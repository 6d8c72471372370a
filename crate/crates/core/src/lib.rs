//! Exact weighted sums of rooted spanning forests.
//!
//! The determinant of the internal block of a weighted Laplacian equals the
//! sum, over all rooted spanning forests, of the product of edge weights.
//! For the cycle with `n` pendant edges this sum is the shifted Chebyshev
//! polynomial `F_n(x) = 2(T_n(x/2 + 1) - 1)`, and for its oriented version
//! `(x+1)^n - 1`. This crate computes both families exactly over `Z[x]`,
//! cross-checks them against brute-force enumeration, and verifies their
//! factorizations and algebraic properties over finite ranges.
//!
//! ```
//! use forestpoly::{closedforms::forest_poly, graph::build_sunlet, lintree::forest_sum, IntPoly};
//!
//! let g = build_sunlet(3, &IntPoly::x(), &IntPoly::one()).unwrap();
//! assert_eq!(forest_sum(&g).unwrap(), forest_poly(3));
//! assert_eq!(forest_poly(3).to_string(), "x^3 + 6*x^2 + 9*x");
//! ```

pub mod cli;
pub mod closedforms;
mod error;
pub mod graph;
pub mod lintree;
pub mod oracle;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{format_poly, parse_poly, Degree, DivisionError, IntPoly, ParseError};
