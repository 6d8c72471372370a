//! Dense univariate polynomials over the integers.
//!
//! [`IntPoly`] is the single coefficient ring used by every other module:
//! closed forms, Laplacian entries, determinants and enumeration sums all
//! live in `Z[x]`. Coefficients are arbitrary precision and the vector is
//! kept normalized (no trailing zeros), so structural equality is
//! mathematical equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Returned when a polynomial division does not come out exact over `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("division is not exact over the integers")]
pub struct DivisionError;

/// Malformed polynomial text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

/// Polynomial degree. `Degree::Zero` is the degree of the zero polynomial and
/// sorts below every natural number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    Zero,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::Zero => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Zero => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial in `Z[x]`; `coeffs[k]` is the coefficient of `x^k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// Builds from low-to-high coefficients, stripping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x + c`, the shift used to move between `F_n` and its factors.
    pub fn linear(c: i64) -> Self {
        Self::from_i64s(&[c, 1])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::Zero,
            len => Degree::Finite(len - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(x))`, by Horner's scheme over `Z[x]`.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * inner;
            acc += &IntPoly::constant(c.clone());
        }
        acc
    }

    /// Quotient `q` with `self = divisor * q`, or [`DivisionError`] when the
    /// remainder is nonzero or a leading-coefficient step is inexact.
    ///
    /// # Panics
    /// Panics if `divisor` is the zero polynomial.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly, DivisionError> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        let lead = &divisor.coeffs[dd];
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(DivisionError);
        }
        // Constant divisor: divide coefficient-wise.
        if dd == 0 {
            let mut out = Vec::with_capacity(self.coeffs.len());
            for c in &self.coeffs {
                let (q, r) = c.div_rem(lead);
                if !r.is_zero() {
                    return Err(DivisionError);
                }
                out.push(q);
            }
            return Ok(IntPoly::from_coeffs(out));
        }

        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(DivisionError);
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem[..dd].iter().any(|c| !c.is_zero()) {
            return Err(DivisionError);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// True iff `self` divides `p` exactly in `Z[x]`.
    pub fn divides(&self, p: &IntPoly) -> bool {
        p.exact_div(self).is_ok()
    }

    pub fn eval_int(&self, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    /// Double-precision Horner evaluation. Only for root residuals; every
    /// exact result goes through [`IntPoly::eval_int`].
    pub fn eval_float(&self, v: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Sum of `|c_k|` as a float, the scale used for relative root residuals.
    pub fn abs_coeff_sum(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .sum()
    }

    /// Renders the degree-`n` homogeneous two-variable form: the coefficient
    /// of `x^k` becomes the coefficient of `var_a^k * var_b^(n-k)`.
    ///
    /// # Panics
    /// Panics if `deg(self) > n`.
    pub fn homogenize(&self, n: usize, var_a: &str, var_b: &str) -> String {
        if let Degree::Finite(d) = self.degree() {
            assert!(d <= n, "degree {d} exceeds homogeneous degree {n}");
        }
        let terms = self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let mut factors = Vec::new();
            push_power(&mut factors, var_a, k);
            push_power(&mut factors, var_b, n - k);
            (c.clone(), factors.join("*"))
        });
        join_terms(terms)
    }
}

fn push_power(out: &mut Vec<String>, var: &str, e: usize) {
    match e {
        0 => {}
        1 => out.push(var.to_string()),
        _ => out.push(format!("{var}^{e}")),
    }
}

/// Joins `(coefficient, monomial)` pairs, highest first, in canonical form.
/// An empty monomial string stands for the constant term.
fn join_terms(terms: impl Iterator<Item = (BigInt, String)>) -> String {
    let mut out = String::new();
    for (i, (c, mono)) in terms.enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&mag.to_string());
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let mut mono = Vec::new();
            push_power(&mut mono, "x", k);
            (c.clone(), mono.join(""))
        });
        f.write_str(&join_terms(terms))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Canonical text: descending powers, explicit `*`, unit coefficients and
/// exponents omitted, `"0"` for the zero polynomial.
pub fn format_poly(p: &IntPoly) -> String {
    p.to_string()
}

/// Parses `poly := term (("+" | "-") term)*` where
/// `term := integer | integer "*"? atom | atom` and `atom := "x" ("^" n)?`.
/// Integers may carry a sign; whitespace between tokens is ignored.
pub fn parse_poly(text: &str) -> Result<IntPoly, ParseError> {
    Parser::new(text).parse()
}

impl std::str::FromStr for IntPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<IntPoly, ParseError> {
        if self.peek().is_none() {
            return Err(ParseError::new(self.pos, "empty input"));
        }
        let mut acc: Vec<BigInt> = Vec::new();
        let mut sign_positive = true;
        loop {
            let (c, k) = self.term()?;
            if acc.len() <= k {
                acc.resize(k + 1, BigInt::zero());
            }
            if sign_positive {
                acc[k] += c;
            } else {
                acc[k] -= c;
            }
            match self.peek() {
                None => break,
                Some(b'+') => sign_positive = true,
                Some(b'-') => sign_positive = false,
                Some(other) => {
                    return Err(ParseError::new(
                        self.pos,
                        format!("expected '+' or '-', found {:?}", other as char),
                    ))
                }
            }
            self.pos += 1;
            if self.peek().is_none() {
                return Err(ParseError::new(self.pos, "dangling operator"));
            }
        }
        Ok(IntPoly::from_coeffs(acc))
    }

    /// One term as `(coefficient, exponent)`.
    fn term(&mut self) -> Result<(BigInt, usize), ParseError> {
        let mut negative = false;
        if let Some(s @ (b'+' | b'-')) = self.peek() {
            negative = s == b'-';
            self.pos += 1;
        }
        let coeff = match self.peek() {
            Some(b'0'..=b'9') => Some(self.digits()?),
            Some(b'x') => None,
            Some(other) => {
                return Err(ParseError::new(
                    self.pos,
                    format!("expected integer or 'x', found {:?}", other as char),
                ))
            }
            None => return Err(ParseError::new(self.pos, "unexpected end of input")),
        };
        let apply_sign = |c: BigInt| if negative { -c } else { c };
        match coeff {
            None => Ok((apply_sign(BigInt::one()), self.atom()?)),
            Some(c) => {
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        if self.peek() != Some(b'x') {
                            return Err(ParseError::new(self.pos, "expected 'x' after '*'"));
                        }
                        Ok((apply_sign(c), self.atom()?))
                    }
                    Some(b'x') => Ok((apply_sign(c), self.atom()?)),
                    _ => Ok((apply_sign(c), 0)),
                }
            }
        }
    }

    fn atom(&mut self) -> Result<usize, ParseError> {
        debug_assert_eq!(self.peek(), Some(b'x'));
        self.pos += 1;
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        if !matches!(self.peek(), Some(b'0'..=b'9')) {
            return Err(ParseError::new(self.pos, "expected exponent after '^'"));
        }
        let start = self.pos;
        let e = self.digits()?;
        e.to_usize()
            .filter(|&e| e <= 1 << 20)
            .ok_or_else(|| ParseError::new(start, "exponent too large"))
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        s.parse::<BigInt>()
            .map_err(|e| ParseError::new(start, e.to_string()))
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        IntPoly::constant(c)
    }
}
