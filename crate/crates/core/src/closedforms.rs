//! Named polynomial families: Chebyshev `T_n`, the forest polynomials
//! `F_n(x) = 2(T_n(x/2 + 1) - 1)` and `~F_n(x) = (x+1)^n - 1`, cyclotomic
//! `Phi_n`, the real-cyclotomic `Psi_n`, and the factored constructions of
//! both forest families.
//!
//! Everything is built with integer recurrences; no rational or floating
//! intermediates appear.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::IntPoly;

/// Chebyshev polynomial of the first kind, `T_{n+2} = 2x T_{n+1} - T_n`.
///
/// # Panics
/// Panics for `n == 0`.
pub fn chebyshev_t(n: u32) -> IntPoly {
    assert!(n >= 1, "chebyshev_t is defined for n >= 1");
    let two_x = IntPoly::monomial(2, 1);
    let mut prev = IntPoly::one();
    let mut cur = IntPoly::x();
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `G_n(x) = 2 T_n((x+2)/2)` through `G_{n+2} = (x+2) G_{n+1} - G_n`
/// with `G_0 = 2`, `G_1 = x + 2`. Monic of degree `n`.
pub fn shifted_cheb_g(n: u32) -> IntPoly {
    assert!(n >= 1, "shifted_cheb_g is defined for n >= 1");
    let shift = IntPoly::linear(2);
    let mut prev = IntPoly::constant(2);
    let mut cur = shift.clone();
    for _ in 1..n {
        let next = &(&shift * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `F_n(x)`: the weighted rooted spanning forest sum of the sunlet graph
/// with pendant weight `x` and cycle weight 1.
pub fn forest_poly(n: u32) -> IntPoly {
    &shifted_cheb_g(n) - &IntPoly::constant(2)
}

/// `~F_n(x) = (x+1)^n - 1`, the oriented counterpart of [`forest_poly`].
pub fn oriented_forest_poly(n: u32) -> IntPoly {
    assert!(n >= 1, "oriented_forest_poly is defined for n >= 1");
    &IntPoly::linear(1).pow(n) - &IntPoly::one()
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

type Cache = Mutex<HashMap<u32, IntPoly>>;

fn cyclotomic_cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn psi_cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(cache: &Cache, n: u32, build: impl FnOnce() -> IntPoly) -> IntPoly {
    if let Some(p) = cache.lock().expect("cache poisoned").get(&n) {
        return p.clone();
    }
    // Built outside the lock: the builder recurses into the same cache.
    let p = build();
    cache
        .lock()
        .expect("cache poisoned")
        .entry(n)
        .or_insert(p)
        .clone()
}

/// The `n`-th cyclotomic polynomial, `(x^n - 1) / prod_{d | n, d < n} Phi_d`.
pub fn cyclotomic(n: u32) -> IntPoly {
    assert!(n >= 1, "cyclotomic is defined for n >= 1");
    cached(cyclotomic_cache(), n, || {
        let xn_minus_1 = &IntPoly::monomial(1, n as usize) - &IntPoly::one();
        let lower: IntPoly = divisors(n)
            .into_iter()
            .filter(|&d| d < n)
            .map(cyclotomic)
            .product();
        xn_minus_1
            .exact_div(&lower)
            .expect("cyclotomic recursion divides exactly")
    })
}

/// Minimal polynomial of `2 cos(2 pi / n)`.
///
/// For `n >= 3`, `Phi_n` is palindromic of degree `2d`, so
/// `Phi_n(x) / x^d = c_0 + sum_k c_k (x^k + x^-k)`; substituting
/// `x^k + x^-k = V_k(y)` (with `V_0 = 2`, `V_1 = y`,
/// `V_{k+1} = y V_k - V_{k-1}`) gives `Psi_n(y)`.
pub fn psi(n: u32) -> IntPoly {
    assert!(n >= 1, "psi is defined for n >= 1");
    match n {
        1 => IntPoly::linear(-2),
        2 => IntPoly::linear(2),
        _ => cached(psi_cache(), n, || {
            let phi = cyclotomic(n);
            let coeffs = phi.coeffs();
            let half = (coeffs.len() - 1) / 2;
            let mut out = IntPoly::constant(coeffs[half].clone());
            let y = IntPoly::x();
            let mut v_prev = IntPoly::constant(2);
            let mut v_cur = y.clone();
            for k in 1..=half {
                let c: &BigInt = &coeffs[half + k];
                if !c.is_zero() {
                    out += &v_cur.scale(c);
                }
                let next = &(&y * &v_cur) - &v_prev;
                v_prev = std::mem::replace(&mut v_cur, next);
            }
            out
        }),
    }
}

/// `c_n(x)`: `x` for odd `n`, `x(x+4)` for even `n`.
pub fn c_poly(n: u32) -> IntPoly {
    assert!(n >= 1, "c_poly is defined for n >= 1");
    if n % 2 == 1 {
        IntPoly::x()
    } else {
        IntPoly::from_i64s(&[0, 4, 1])
    }
}

/// A factor together with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub poly: IntPoly,
    pub multiplicity: u32,
}

impl Factor {
    fn new(poly: IntPoly, multiplicity: u32) -> Self {
        Factor { poly, multiplicity }
    }
}

/// Factors of `F_n`: the linear pieces of `c_n` and `Psi_k(x+2)^2` for every
/// divisor `k > 2` of `n`.
pub fn forest_factors(n: u32) -> Vec<Factor> {
    assert!(n >= 1, "forest_factors is defined for n >= 1");
    let mut out = vec![Factor::new(IntPoly::x(), 1)];
    if n.is_multiple_of(2) {
        out.push(Factor::new(IntPoly::linear(4), 1));
    }
    let shift = IntPoly::linear(2);
    out.extend(
        divisors(n)
            .into_iter()
            .filter(|&k| k > 2)
            .map(|k| Factor::new(psi(k).compose(&shift), 2)),
    );
    out
}

/// Factors of `~F_n`: `Phi_k(x+1)` for every divisor `k` of `n`.
pub fn oriented_forest_factors(n: u32) -> Vec<Factor> {
    assert!(n >= 1, "oriented_forest_factors is defined for n >= 1");
    let shift = IntPoly::linear(1);
    divisors(n)
        .into_iter()
        .map(|k| Factor::new(cyclotomic(k).compose(&shift), 1))
        .collect()
}

/// Expands a factor list.
pub fn expand_factors(factors: &[Factor]) -> IntPoly {
    factors.iter().map(|f| f.poly.pow(f.multiplicity)).product()
}

/// `c_n(x) * prod_{k | n, k > 2} Psi_k(x+2)^2`, expanded.
pub fn factored_forest_poly(n: u32) -> IntPoly {
    let shift = IntPoly::linear(2);
    let squares: IntPoly = divisors(n)
        .into_iter()
        .filter(|&k| k > 2)
        .map(|k| psi(k).compose(&shift).pow(2))
        .product();
    &c_poly(n) * &squares
}

/// `prod_{k | n} Phi_k(x+1)`, expanded.
pub fn factored_oriented_poly(n: u32) -> IntPoly {
    expand_factors(&oriented_forest_factors(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> IntPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn chebyshev_small() {
        assert_eq!(chebyshev_t(1), p("x"));
        assert_eq!(chebyshev_t(2), p("2x^2 - 1"));
        assert_eq!(chebyshev_t(3), p("4x^3 - 3x"));
        for n in 1..30 {
            assert_eq!(chebyshev_t(n).leading_coeff().unwrap(), &(BigInt::from(1) << (n - 1)));
        }
    }

    #[test]
    fn shifted_g_small() {
        assert_eq!(shifted_cheb_g(1), p("x + 2"));
        assert_eq!(shifted_cheb_g(2), p("x^2 + 4x + 2"));
        assert_eq!(&shifted_cheb_g(3) - &IntPoly::constant(2), p("x^3 + 6x^2 + 9x"));
    }

    #[test]
    fn forest_poly_table_entries() {
        assert_eq!(forest_poly(1), p("x"));
        assert_eq!(forest_poly(5), p("x^5 + 10x^4 + 35x^3 + 50x^2 + 25x"));
        assert_eq!(
            forest_poly(12),
            p("x^12 + 24x^11 + 252x^10 + 1520x^9 + 5814x^8 + 14688x^7 + 24752x^6 \
               + 27456x^5 + 19305x^4 + 8008x^3 + 1716x^2 + 144x")
        );
    }

    #[test]
    fn oriented_forest_poly_is_binomial() {
        assert_eq!(oriented_forest_poly(1), p("x"));
        assert_eq!(oriented_forest_poly(2), p("x^2 + 2x"));
        let n = 9u32;
        let f = oriented_forest_poly(n);
        let mut binom = BigInt::from(1);
        for k in 0..n as usize {
            assert_eq!(f.coeff(n as usize - k), binom);
            binom = binom * (n as usize - k) / (k + 1);
        }
        assert_eq!(f.coeff(0), BigInt::from(0));
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), p("x - 1"));
        assert_eq!(cyclotomic(4), p("x^2 + 1"));
        assert_eq!(cyclotomic(6), p("x^2 - x + 1"));
        assert_eq!(cyclotomic(12), p("x^4 - x^2 + 1"));
        // first cyclotomic with a coefficient outside {-1, 0, 1}
        assert_eq!(cyclotomic(105).coeff(7), BigInt::from(-2));
    }

    #[test]
    fn cyclotomic_degrees_sum_to_n() {
        for n in 1..80 {
            let total: usize = divisors(n)
                .into_iter()
                .map(|d| cyclotomic(d).degree().finite().unwrap())
                .sum();
            assert_eq!(total, n as usize);
            assert_eq!(cyclotomic(n).degree().finite(), Some(totient(n) as usize));
        }
    }

    #[test]
    fn psi_small() {
        assert_eq!(psi(1), p("x - 2"));
        assert_eq!(psi(2), p("x + 2"));
        assert_eq!(psi(3), p("x + 1"));
        assert_eq!(psi(4), p("x"));
        assert_eq!(psi(5), p("x^2 + x - 1"));
        assert_eq!(psi(5).compose(&IntPoly::linear(2)), p("x^2 + 5x + 5"));
        assert_eq!(psi(12), p("x^2 - 3"));
        assert_eq!(psi(12).compose(&IntPoly::linear(2)), p("x^2 + 4x + 1"));
    }

    #[test]
    fn psi_degree_is_half_totient() {
        for n in 3..80 {
            let psi_n = psi(n);
            assert!(psi_n.is_monic());
            assert_eq!(psi_n.degree().finite(), Some(totient(n) as usize / 2));
        }
    }

    #[test]
    fn psi_recovers_cyclotomic() {
        // x^d * Psi_n(x + 1/x) == Phi_n(x): check by clearing denominators
        // term by term, x^d * (x + 1/x)^j = x^(d-j) (x^2 + 1)^j.
        for n in 3..40 {
            let psi_n = psi(n);
            let d = psi_n.degree().finite().unwrap();
            let x2p1 = p("x^2 + 1");
            let rebuilt: IntPoly = psi_n
                .coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| &IntPoly::monomial(c.clone(), d - j) * &x2p1.pow(j as u32))
                .sum();
            assert_eq!(rebuilt, cyclotomic(n), "n = {n}");
        }
    }

    #[test]
    fn c_poly_parity() {
        assert_eq!(c_poly(7), p("x"));
        assert_eq!(c_poly(8), p("x^2 + 4x"));
        assert_eq!(c_poly(2), forest_poly(2));
    }

    #[test]
    fn factored_forms() {
        assert_eq!(factored_forest_poly(1), p("x"));
        let f9 = &(&IntPoly::x() * &p("x + 3").pow(2)) * &p("x^3 + 6x^2 + 9x + 3").pow(2);
        assert_eq!(factored_forest_poly(9), f9);
        let f10 = &(&p("x^2 + 4x") * &p("x^2 + 3x + 1").pow(2)) * &p("x^2 + 5x + 5").pow(2);
        assert_eq!(factored_forest_poly(10), f10);
        assert_eq!(factored_oriented_poly(1), p("x"));
        assert_eq!(factored_oriented_poly(2), p("x^2 + 2x"));
        assert_eq!(factored_oriented_poly(6), oriented_forest_poly(6));
    }

    #[test]
    fn forest_factor_list_for_twelve() {
        let got: Vec<(String, u32)> = forest_factors(12)
            .into_iter()
            .map(|f| (f.poly.to_string(), f.multiplicity))
            .collect();
        let want = [
            ("x", 1),
            ("x + 4", 1),
            ("x + 3", 2),
            ("x + 2", 2),
            ("x + 1", 2),
            ("x^2 + 4*x + 1", 2),
        ];
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert_eq!((g.0.as_str(), g.1), w);
        }
        assert_eq!(expand_factors(&forest_factors(12)), forest_poly(12));
    }

    #[test]
    fn divisors_and_totient() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(97), 96);
    }
}
