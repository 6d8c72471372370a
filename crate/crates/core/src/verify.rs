//! Executable checks of the closed forms, factorizations and algebraic
//! properties of the forest polynomials.
//!
//! Every check except [`Verifier::check_roots`] is exact integer arithmetic,
//! so a pass is a proof for that instance. Ranges are finite and each
//! report records the parameters it covered.

use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::closedforms::{
    c_poly, factored_forest_poly, factored_oriented_poly, forest_poly, oriented_forest_poly,
};
use crate::graph::{build_oriented_sunlet, build_sunlet};
use crate::lintree::{
    circulant_internal_matrix, cyclic_oriented_matrix, det, forest_sum, oriented_forest_sum,
};
use crate::oracle::{enumerate_oriented_rsf, enumerate_rsf, DEFAULT_EDGE_CAP};
use crate::poly::{parse_poly, IntPoly};

/// The expanded `F_1 .. F_12`, as published.
pub const GOLDEN_TABLE: [&str; 12] = [
    "x",
    "x^2+4x",
    "x^3 + 6x^2 + 9x",
    "x^4 + 8x^3 + 20x^2 + 16x",
    "x^5 + 10x^4 + 35x^3 + 50x^2 + 25x",
    "x^6 + 12x^5 + 54x^4 + 112x^3 + 105x^2 + 36x",
    "x^7 + 14x^6 + 77x^5 + 210x^4 + 294x^3 + 196x^2 + 49x",
    "x^8 + 16x^7 + 104x^6 + 352x^5 + 660x^4 + 672x^3 + 336x^2 + 64x",
    "x^9 + 18x^8 + 135x^7 + 546x^6 + 1287x^5 + 1782x^4 + 1386x^3 + 540x^2 + 81x",
    "x^{10} + 20x^9 + 170x^8 + 800x^7 + 2275x^6 + 4004x^5 +4290x^4 + 2640x^3 + 825x^2 + 100x",
    "x^{11} + 22x^{10} + 209x^9 + 1122x^8 + 3740x^7 + 8008x^6 + 11011x^5 +9438x^4 + 4719x^3 + 1210x^2 + 121x",
    "x^{12} + 24x^{11} + 252x^{10} + 1520x^9 + 5814x^8 + 14688x^7 + 24752x^6 +27456x^5 + 19305x^4 + 8008x^3 + 1716x^2 + 144x",
];

/// Parses a golden-table entry (TeX braces around exponents allowed).
pub fn golden_entry(n: u32) -> Option<IntPoly> {
    let text = GOLDEN_TABLE.get((n as usize).checked_sub(1)?)?;
    let plain: String = text.chars().filter(|c| *c != '{' && *c != '}').collect();
    Some(parse_poly(&plain).expect("golden table entries parse"))
}

/// Sunlets up to this size are also checked against brute-force enumeration.
pub const ORACLE_MAX_N: u32 = 8;

/// Relative tolerance for root residuals, loosened for large `n` where
/// coefficients pass `10^10`.
pub fn default_root_tolerance(n: u32) -> f64 {
    if n > 20 {
        1e-6
    } else {
        1e-9
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub check_name: String,
    pub params: Vec<u64>,
    pub passed: bool,
    pub skipped: bool,
    pub counterexample: Option<String>,
    /// Tested range or other context.
    pub note: Option<String>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    fn skip(check_name: &str, params: Vec<u64>, why: &str) -> Self {
        VerifyReport {
            check_name: check_name.to_string(),
            params,
            passed: true,
            skipped: true,
            counterexample: None,
            note: Some(why.to_string()),
            elapsed_ms: 0,
        }
    }

    pub fn status(&self) -> &'static str {
        match (self.skipped, self.passed) {
            (true, _) => "SKIP",
            (false, true) => "PASS",
            (false, false) => "FAIL",
        }
    }

    /// `check_name<TAB>params<TAB>PASS|FAIL|SKIP<TAB>elapsed_ms`, then the
    /// counterexample and note on indented continuation lines.
    pub fn to_text(&self) -> String {
        let params: Vec<String> = self.params.iter().map(u64::to_string).collect();
        let mut out = format!(
            "{}\t{}\t{}\t{}",
            self.check_name,
            params.join(","),
            self.status(),
            self.elapsed_ms
        );
        for block in [&self.counterexample, &self.note].into_iter().flatten() {
            for line in block.lines() {
                out.push_str("\n    ");
                out.push_str(line);
            }
        }
        out
    }
}

/// Polynomial family under test in the characterization check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Plain,
    Oriented,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Plain => "plain",
            Family::Oriented => "oriented",
        }
    }

    pub fn member(self, n: u32) -> IntPoly {
        match self {
            Family::Plain => forest_poly(n),
            Family::Oriented => oriented_forest_poly(n),
        }
    }
}

/// The check families `run_suite` knows about, in run order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Golden,
    MainTheorem,
    OrientedTheorem,
    Oracle,
    CDivisor,
    Factorization,
    Characterization,
    LogConcavity,
    Roots,
    OrientedRealRoots,
}

impl CheckKind {
    pub const ALL: [CheckKind; 10] = [
        CheckKind::Golden,
        CheckKind::MainTheorem,
        CheckKind::OrientedTheorem,
        CheckKind::Oracle,
        CheckKind::CDivisor,
        CheckKind::Factorization,
        CheckKind::Characterization,
        CheckKind::LogConcavity,
        CheckKind::Roots,
        CheckKind::OrientedRealRoots,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Golden => "golden",
            CheckKind::MainTheorem => "main-theorem",
            CheckKind::OrientedTheorem => "oriented-theorem",
            CheckKind::Oracle => "oracle",
            CheckKind::CDivisor => "c-divisor",
            CheckKind::Factorization => "factorization",
            CheckKind::Characterization => "characterization",
            CheckKind::LogConcavity => "log-concavity",
            CheckKind::Roots => "roots",
            CheckKind::OrientedRealRoots => "oriented-real-roots",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

/// Perturbs one coefficient of `F_n` as seen by the checks, to exercise
/// the failure path of the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fault {
    pub n: u32,
    pub power: usize,
    pub delta: i64,
}

/// Runs checks against the closed forms, optionally with an injected fault.
#[derive(Debug, Clone, Copy, Default)]
pub struct Verifier {
    pub fault: Option<Fault>,
}

struct Timer(Instant);

impl Timer {
    fn start() -> Self {
        Timer(Instant::now())
    }

    fn finish(
        self,
        check_name: &str,
        params: Vec<u64>,
        counterexample: Option<String>,
        note: Option<String>,
    ) -> VerifyReport {
        VerifyReport {
            check_name: check_name.to_string(),
            params,
            passed: counterexample.is_none(),
            skipped: false,
            counterexample,
            note,
            elapsed_ms: self.0.elapsed().as_millis() as u64,
        }
    }
}

fn mismatch(what: &str, left: &IntPoly, right: &IntPoly) -> String {
    format!("{what}:\n  left:  {left}\n  right: {right}")
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_fault(fault: Fault) -> Self {
        Verifier { fault: Some(fault) }
    }

    /// `F_n` from the Chebyshev recurrence, with the fault applied if any.
    pub fn forest(&self, n: u32) -> IntPoly {
        let f = forest_poly(n);
        match self.fault {
            Some(fault) if fault.n == n => &f + &IntPoly::monomial(fault.delta, fault.power),
            _ => f,
        }
    }

    fn family(&self, family: Family, n: u32) -> IntPoly {
        match family {
            Family::Plain => self.forest(n),
            Family::Oriented => oriented_forest_poly(n),
        }
    }

    /// The published expansion of `F_n`, `1 <= n <= 12`, against the
    /// recurrence, compared as canonical text.
    pub fn check_golden(&self, n: u32) -> VerifyReport {
        let t = Timer::start();
        let cx = match golden_entry(n) {
            None => Some(format!("no golden entry for n = {n}")),
            Some(want) => {
                let (got, want) = (self.forest(n).to_string(), want.to_string());
                (got != want).then(|| format!("computed:  {got}\npublished: {want}"))
            }
        };
        t.finish("golden", vec![n as u64], cx, None)
    }

    /// Chebyshev closed form = circulant determinant, and for `n >= 3` also
    /// = determinant of the sunlet's internal Laplacian block.
    pub fn check_main_theorem(&self, n: u32) -> VerifyReport {
        let t = Timer::start();
        let x = IntPoly::x();
        let one = IntPoly::one();
        let closed = self.forest(n);
        let circ = det(&circulant_internal_matrix(n as usize, &x, &one));
        let mut cx = (circ != closed).then(|| mismatch("circulant det vs closed form", &circ, &closed));
        let mut note = Some("circulant path only".to_string());
        if n >= 3 && cx.is_none() {
            note = None;
            let graph = build_sunlet(n as usize, &x, &one)
                .and_then(|g| forest_sum(&g))
                .expect("sunlet forest sum");
            if graph != closed {
                cx = Some(mismatch("sunlet forest sum vs closed form", &graph, &closed));
            }
        }
        t.finish("main-theorem", vec![n as u64], cx, note)
    }

    /// `(x+1)^n - 1` against the cyclic bidiagonal determinant, and for
    /// `n >= 3` against the oriented sunlet pipeline.
    pub fn check_oriented_theorem(&self, n: u32) -> VerifyReport {
        let t = Timer::start();
        let x = IntPoly::x();
        let one = IntPoly::one();
        let closed = oriented_forest_poly(n);
        let direct = det(&cyclic_oriented_matrix(n as usize, &x, &one));
        let mut cx = (direct != closed).then(|| mismatch("bidiagonal det vs closed form", &direct, &closed));
        if n >= 3 && cx.is_none() {
            let graph = build_oriented_sunlet(n as usize, &x, &one)
                .and_then(|g| oriented_forest_sum(&g))
                .expect("oriented sunlet forest sum");
            if graph != closed {
                cx = Some(mismatch("oriented sunlet forest sum vs closed form", &graph, &closed));
            }
        }
        t.finish("oriented-theorem", vec![n as u64], cx, None)
    }

    /// Determinant path against brute-force enumeration on the sunlet of
    /// size `n` (both orientations), including the binomial histogram of
    /// the oriented case.
    pub fn check_oracle(&self, n: u32) -> VerifyReport {
        if n < 3 {
            return VerifyReport::skip("oracle", vec![n as u64], "sunlets need n >= 3");
        }
        let t = Timer::start();
        let x = IntPoly::x();
        let one = IntPoly::one();
        let g = build_sunlet(n as usize, &x, &one).expect("sunlet");
        let o = build_oriented_sunlet(n as usize, &x, &one).expect("oriented sunlet");
        let mut cx = None;
        let det_plain = forest_sum(&g).expect("forest sum");
        let enum_plain = enumerate_rsf(&g, DEFAULT_EDGE_CAP).expect("enumeration");
        if det_plain != enum_plain.weighted_sum {
            cx = Some(mismatch("determinant vs enumeration", &det_plain, &enum_plain.weighted_sum));
        }
        let det_ori = oriented_forest_sum(&o).expect("oriented forest sum");
        let enum_ori = enumerate_oriented_rsf(&o, DEFAULT_EDGE_CAP).expect("enumeration");
        if cx.is_none() && det_ori != enum_ori.weighted_sum {
            cx = Some(mismatch("oriented determinant vs enumeration", &det_ori, &enum_ori.weighted_sum));
        }
        if cx.is_none() {
            let hist = enum_ori.histogram.unwrap_or_default();
            let mut binom = 1u64;
            for k in 0..=n as u64 {
                let want = if k == n as u64 { 0 } else { binom };
                let got = hist.get(&(k as usize)).copied().unwrap_or(0);
                if got != want {
                    cx = Some(format!("oriented forests with {k} cycle arcs: {got}, expected {want}"));
                    break;
                }
                binom = binom * (n as u64 - k) / (k + 1);
            }
        }
        t.finish("oracle", vec![n as u64], cx, None)
    }

    /// `c_n | F_n`, `F_n(0) = 0`, and `F_n(-4) = 0` for even `n`.
    pub fn check_c_divisor(&self, n: u32) -> VerifyReport {
        let t = Timer::start();
        let f = self.forest(n);
        let c = c_poly(n);
        let cx = if !c.divides(&f) {
            Some(format!("{c} does not divide {f}"))
        } else if !f.eval_int(&BigInt::zero()).is_zero() {
            Some(format!("F_{n}(0) = {}", f.eval_int(&BigInt::zero())))
        } else if n.is_multiple_of(2) && !f.eval_int(&BigInt::from(-4)).is_zero() {
            Some(format!("F_{n}(-4) = {}", f.eval_int(&BigInt::from(-4))))
        } else {
            None
        };
        t.finish("c-divisor", vec![n as u64], cx, None)
    }

    /// Both factored products expand to the recurrence forms.
    pub fn check_factorization(&self, n: u32) -> VerifyReport {
        let t = Timer::start();
        let plain = (factored_forest_poly(n), self.forest(n));
        let ori = (factored_oriented_poly(n), oriented_forest_poly(n));
        let cx = if plain.0 != plain.1 {
            Some(mismatch("c_n * prod Psi_k(x+2)^2 vs F_n", &plain.0, &plain.1))
        } else if ori.0 != ori.1 {
            Some(mismatch("prod Phi_k(x+1) vs (x+1)^n - 1", &ori.0, &ori.1))
        } else {
            None
        };
        t.finish("factorization", vec![n as u64], cx, None)
    }

    /// Degree, monicity and composition for members up to `n_max`;
    /// divisibility in both directions for `n, m <= n_max`.
    pub fn check_characterization(&self, family: Family, n_max: u32) -> VerifyReport {
        self.check_characterization_with(family, n_max, n_max)
    }

    /// As [`Verifier::check_characterization`] with a separate bound for the
    /// divisibility sweep.
    pub fn check_characterization_with(&self, family: Family, n_max: u32, div_max: u32) -> VerifyReport {
        let name = format!("characterization-{}", family.name());
        let params = vec![n_max as u64, div_max as u64];
        if n_max < 2 {
            return VerifyReport::skip(&name, params, "needs n_max >= 2");
        }
        let t = Timer::start();
        let note = format!(
            "finite range: degree/monic n <= {n_max}; composition n*m <= {n_max}; divisibility n,m <= {}",
            div_max.min(n_max)
        );
        let members: Vec<IntPoly> = (1..=n_max).map(|n| self.family(family, n)).collect();
        let p = |n: u32| &members[n as usize - 1];
        let cx = (|| {
            for n in 1..=n_max {
                if p(n).degree().finite() != Some(n as usize) {
                    return Some(format!("deg P_{n} = {}", p(n).degree()));
                }
                if !p(n).is_monic() {
                    return Some(format!("P_{n} = {} is not monic", p(n)));
                }
            }
            for n in 1..=n_max {
                for m in 1..=n_max / n {
                    let nm = p(n * m);
                    let left = p(n).compose(p(m));
                    if &left != nm {
                        return Some(format!("P_{n}(P_{m}) != P_{}:\n  {left}\n  {nm}", n * m));
                    }
                    let right = p(m).compose(p(n));
                    if &right != nm {
                        return Some(format!("P_{m}(P_{n}) != P_{}:\n  {right}\n  {nm}", n * m));
                    }
                }
            }
            let dmax = div_max.min(n_max);
            for n in 1..=dmax {
                for m in 1..=dmax {
                    let divides = p(n).divides(p(m));
                    if divides != (m % n == 0) {
                        return Some(format!("P_{n} | P_{m} is {divides}, but {n} | {m} is {}", m % n == 0));
                    }
                }
            }
            None
        })();
        t.finish(&name, params, cx, Some(note))
    }

    /// `a_j^2 >= a_{j-1} a_{j+1}` for the coefficients `a_1..a_n` of `F_n`,
    /// plus a direct unimodality scan.
    pub fn check_log_concavity(&self, n: u32) -> VerifyReport {
        if n < 3 {
            return VerifyReport::skip("log-concavity", vec![n as u64], "needs n >= 3");
        }
        let t = Timer::start();
        let f = self.forest(n);
        let alpha: Vec<BigInt> = (1..=n as usize).map(|j| f.coeff(j)).collect();
        let cx = (|| {
            if let Some(j) = alpha.iter().position(|a| !a.is_positive()) {
                return Some(format!("a_{} = {} is not positive", j + 1, alpha[j]));
            }
            for j in 1..alpha.len() - 1 {
                if &alpha[j] * &alpha[j] < &alpha[j - 1] * &alpha[j + 1] {
                    return Some(format!(
                        "a_{}^2 < a_{} a_{}: {}^2 < {} * {}",
                        j + 1,
                        j,
                        j + 2,
                        alpha[j],
                        alpha[j - 1],
                        alpha[j + 1]
                    ));
                }
            }
            let peak = alpha
                .windows(2)
                .position(|w| w[1] < w[0])
                .unwrap_or(alpha.len() - 1);
            if let Some(k) = alpha[peak..].windows(2).position(|w| w[1] > w[0]) {
                return Some(format!("not unimodal: rises again after a_{}", peak + k + 1));
            }
            None
        })();
        t.finish("log-concavity", vec![n as u64], cx, None)
    }

    /// Float residuals of `F_n` at `2(cos(2 pi k / n) - 1)` scaled by the
    /// absolute coefficient sum, plus the exact rational roots 0 and, for
    /// even `n`, -4.
    pub fn check_roots(&self, n: u32, tol: f64) -> VerifyReport {
        let t = Timer::start();
        let f = self.forest(n);
        let bound = tol * f.abs_coeff_sum();
        let mut cx = None;
        if !f.eval_int(&BigInt::zero()).is_zero() {
            cx = Some(format!("F_{n}(0) = {} (exact)", f.eval_int(&BigInt::zero())));
        } else if n.is_multiple_of(2) && !f.eval_int(&BigInt::from(-4)).is_zero() {
            cx = Some(format!("F_{n}(-4) = {} (exact)", f.eval_int(&BigInt::from(-4))));
        } else {
            for row in root_table_of(&f, n) {
                if row.residual.is_nan() || row.residual > bound {
                    cx = Some(format!(
                        "k = {}: |F_{n}({})| = {:e} > {:e}",
                        row.k, row.omega, row.residual, bound
                    ));
                    break;
                }
            }
        }
        t.finish("roots", vec![n as u64], cx, Some(format!("tol = {tol:e} relative")))
    }

    /// `~F_n(0) = 0` always, `~F_n(-2) = 0` exactly when `n` is even.
    pub fn check_oriented_real_roots(&self, n: u32) -> VerifyReport {
        let t = Timer::start();
        let f = oriented_forest_poly(n);
        let at_zero = f.eval_int(&BigInt::zero());
        let at_minus_two = f.eval_int(&BigInt::from(-2));
        let cx = if !at_zero.is_zero() {
            Some(format!("~F_{n}(0) = {at_zero}"))
        } else if at_minus_two.is_zero() != n.is_multiple_of(2) {
            Some(format!("~F_{n}(-2) = {at_minus_two} for n = {n}"))
        } else {
            None
        };
        t.finish("oriented-real-roots", vec![n as u64], cx, None)
    }

    /// Reports for one check family over its range up to `n_max`.
    pub fn run_check(&self, kind: CheckKind, n_max: u32) -> Vec<VerifyReport> {
        let range = |lo: u32| lo..=n_max;
        match kind {
            CheckKind::Golden => (1..=n_max.min(12)).map(|n| self.check_golden(n)).collect(),
            CheckKind::MainTheorem => range(1).map(|n| self.check_main_theorem(n)).collect(),
            CheckKind::OrientedTheorem => range(1).map(|n| self.check_oriented_theorem(n)).collect(),
            CheckKind::Oracle => {
                if n_max < 3 {
                    vec![VerifyReport::skip("oracle", vec![n_max as u64], "sunlets need n >= 3")]
                } else {
                    (3..=n_max.min(ORACLE_MAX_N)).map(|n| self.check_oracle(n)).collect()
                }
            }
            CheckKind::CDivisor => range(1).map(|n| self.check_c_divisor(n)).collect(),
            CheckKind::Factorization => range(1).map(|n| self.check_factorization(n)).collect(),
            CheckKind::Characterization => [Family::Plain, Family::Oriented]
                .into_iter()
                .map(|fam| self.check_characterization(fam, n_max))
                .collect(),
            CheckKind::LogConcavity => {
                if n_max < 3 {
                    vec![VerifyReport::skip("log-concavity", vec![n_max as u64], "needs n >= 3")]
                } else {
                    range(3).map(|n| self.check_log_concavity(n)).collect()
                }
            }
            CheckKind::Roots => range(1)
                .map(|n| self.check_roots(n, default_root_tolerance(n)))
                .collect(),
            CheckKind::OrientedRealRoots => range(1).map(|n| self.check_oriented_real_roots(n)).collect(),
        }
    }

    /// Every check over its range, in a fixed order.
    pub fn run_suite(&self, n_max: u32) -> Vec<VerifyReport> {
        CheckKind::ALL
            .into_iter()
            .flat_map(|kind| self.run_check(kind, n_max))
            .collect()
    }
}

/// One root of `F_n` with its double-precision residual.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootRow {
    pub k: u32,
    pub omega: f64,
    pub residual: f64,
}

/// `omega_k = 2(cos(2 pi k / n) - 1)` for `k = 0..n`, with `|F_n(omega_k)|`.
pub fn root_table(n: u32) -> Vec<RootRow> {
    root_table_of(&forest_poly(n), n)
}

fn root_table_of(f: &IntPoly, n: u32) -> Vec<RootRow> {
    (0..n)
        .map(|k| {
            let omega = root_omega(n, k);
            RootRow {
                k,
                omega,
                residual: f.eval_float(omega).abs(),
            }
        })
        .collect()
}

/// `2(cos(2 pi k / n) - 1)`, with the rational cases `k = 0` and `2k = n`
/// returned exactly.
pub fn root_omega(n: u32, k: u32) -> f64 {
    if k == 0 {
        0.0
    } else if 2 * k == n {
        -4.0
    } else {
        2.0 * ((2.0 * std::f64::consts::PI * k as f64 / n as f64).cos() - 1.0)
    }
}

pub fn check_main_theorem(n: u32) -> VerifyReport {
    Verifier::new().check_main_theorem(n)
}

pub fn check_oriented_theorem(n: u32) -> VerifyReport {
    Verifier::new().check_oriented_theorem(n)
}

pub fn check_c_divisor(n: u32) -> VerifyReport {
    Verifier::new().check_c_divisor(n)
}

pub fn check_factorization(n: u32) -> VerifyReport {
    Verifier::new().check_factorization(n)
}

pub fn check_characterization(family: Family, n_max: u32) -> VerifyReport {
    Verifier::new().check_characterization(family, n_max)
}

pub fn check_log_concavity(n: u32) -> VerifyReport {
    Verifier::new().check_log_concavity(n)
}

pub fn check_roots(n: u32, tol: f64) -> VerifyReport {
    Verifier::new().check_roots(n, tol)
}

pub fn check_oriented_real_roots(n: u32) -> VerifyReport {
    Verifier::new().check_oriented_real_roots(n)
}

pub fn run_suite(n_max: u32) -> Vec<VerifyReport> {
    Verifier::new().run_suite(n_max)
}

/// Text form of a batch of reports, one per line plus continuations.
pub fn reports_to_text(reports: &[VerifyReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "{}", r.to_text());
    }
    out
}
