//! Acceptance gate: one line per criterion, nonzero exit on any failure.

mod common;

use std::time::{Duration, Instant};

use forestpoly::cli::cmd_compute;
use forestpoly::closedforms::{forest_poly, oriented_forest_poly};
use forestpoly::graph::{build_oriented_sunlet, build_sunlet};
use forestpoly::lintree::{circulant_internal_matrix, det, forest_sum, oriented_forest_sum, PolyMatrix};
use forestpoly::oracle::{enumerate_oriented_rsf, enumerate_rsf, DEFAULT_EDGE_CAP};
use forestpoly::verify::{Family, Verifier};
use forestpoly::{parse_poly, IntPoly};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// Expanded `F_1 .. F_12` in canonical form, typed out independently of the
/// golden table inside the library.
const PUBLISHED: [&str; 12] = [
    "x",
    "x^2 + 4*x",
    "x^3 + 6*x^2 + 9*x",
    "x^4 + 8*x^3 + 20*x^2 + 16*x",
    "x^5 + 10*x^4 + 35*x^3 + 50*x^2 + 25*x",
    "x^6 + 12*x^5 + 54*x^4 + 112*x^3 + 105*x^2 + 36*x",
    "x^7 + 14*x^6 + 77*x^5 + 210*x^4 + 294*x^3 + 196*x^2 + 49*x",
    "x^8 + 16*x^7 + 104*x^6 + 352*x^5 + 660*x^4 + 672*x^3 + 336*x^2 + 64*x",
    "x^9 + 18*x^8 + 135*x^7 + 546*x^6 + 1287*x^5 + 1782*x^4 + 1386*x^3 + 540*x^2 + 81*x",
    "x^10 + 20*x^9 + 170*x^8 + 800*x^7 + 2275*x^6 + 4004*x^5 + 4290*x^4 + 2640*x^3 + 825*x^2 + 100*x",
    "x^11 + 22*x^10 + 209*x^9 + 1122*x^8 + 3740*x^7 + 8008*x^6 + 11011*x^5 + 9438*x^4 + 4719*x^3 + 1210*x^2 + 121*x",
    "x^12 + 24*x^11 + 252*x^10 + 1520*x^9 + 5814*x^8 + 14688*x^7 + 24752*x^6 + 27456*x^5 + 19305*x^4 + 8008*x^3 + 1716*x^2 + 144*x",
];

type Outcome = Result<(), String>;

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_table() -> Outcome {
    for (i, want) in PUBLISHED.iter().enumerate() {
        let n = i as u32 + 1;
        let mut out = Vec::new();
        let code = cmd_compute(n, false, false, &mut out, &mut Vec::new());
        let got = String::from_utf8(out).unwrap();
        ensure(code == 0 && got == format!("{want}\n"), || format!("compute {n}: {got:?}"))?;
    }
    let f12 = parse_poly(PUBLISHED[11]).unwrap();
    ensure(f12.coeff(5) == BigInt::from(27456), || "F_12 x^5 coefficient".into())
}

fn three_paths() -> Outcome {
    let (x, one) = (IntPoly::x(), IntPoly::one());
    for n in 1..=40u32 {
        let closed = forest_poly(n);
        let circ = det(&circulant_internal_matrix(n as usize, &x, &one));
        ensure(circ == closed, || format!("n = {n}: circulant {circ} != {closed}"))?;
        if n >= 3 {
            let g = build_sunlet(n as usize, &x, &one).unwrap();
            let graph = forest_sum(&g).unwrap();
            ensure(graph == closed, || format!("n = {n}: sunlet {graph} != {closed}"))?;
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    let (x, one) = (IntPoly::x(), IntPoly::one());
    for n in 3..=8usize {
        let g = build_sunlet(n, &x, &one).unwrap();
        let e = enumerate_rsf(&g, DEFAULT_EDGE_CAP).unwrap().weighted_sum;
        ensure(forest_sum(&g).unwrap() == e, || format!("sunlet {n}"))?;
        let o = build_oriented_sunlet(n, &x, &one).unwrap();
        let e = enumerate_oriented_rsf(&o, DEFAULT_EDGE_CAP).unwrap().weighted_sum;
        ensure(oriented_forest_sum(&o).unwrap() == e, || format!("oriented sunlet {n}"))?;
    }
    let corpus = common::corpus();
    ensure(corpus.len() == 25, || "corpus size".into())?;
    for (i, g) in corpus.iter().enumerate() {
        ensure(g.edge_count() <= 12 && (1..=3).contains(&g.node_count()), || format!("corpus graph {i} shape"))?;
        let d = forest_sum(g).unwrap();
        let e = enumerate_rsf(g, DEFAULT_EDGE_CAP).unwrap().weighted_sum;
        ensure(d == e, || format!("corpus graph {i}: det {d} != enumeration {e}"))?;
    }
    Ok(())
}

fn oriented_closed_form() -> Outcome {
    let (x, one) = (IntPoly::x(), IntPoly::one());
    for n in 3..=12usize {
        let g = build_oriented_sunlet(n, &x, &one).unwrap();
        let got = oriented_forest_sum(&g).unwrap();
        let want = &IntPoly::linear(1).pow(n as u32) - &IntPoly::one();
        ensure(got == want, || format!("n = {n}: {got}"))?;
    }
    for n in 3..=8usize {
        let g = build_oriented_sunlet(n, &x, &one).unwrap();
        let hist = enumerate_oriented_rsf(&g, DEFAULT_EDGE_CAP).unwrap().histogram.unwrap();
        for k in 0..n {
            let got = hist[&k];
            let want = common::binomial(n as u64, k as u64);
            ensure(got == want, || format!("n = {n}, k = {k}: {got} != C(n,k) = {want}"))?;
        }
        ensure(hist[&n] == 0, || format!("n = {n}: forest using the whole cycle"))?;
    }
    Ok(())
}

fn first_failure(reports: impl IntoIterator<Item = forestpoly::verify::VerifyReport>) -> Outcome {
    for r in reports {
        if !r.passed || r.skipped {
            return Err(r.to_text());
        }
    }
    Ok(())
}

fn factorization() -> Outcome {
    let v = Verifier::new();
    first_failure((1..=60).map(|n| v.check_factorization(n)))
}

fn characterization() -> Outcome {
    let v = Verifier::new();
    first_failure([Family::Plain, Family::Oriented].map(|f| v.check_characterization_with(f, 60, 24)))
}

fn log_concavity() -> Outcome {
    let v = Verifier::new();
    first_failure((3..=300).map(|n| v.check_log_concavity(n)))
}

fn root_residuals() -> Outcome {
    let v = Verifier::new();
    first_failure((1..=30).map(|n| v.check_roots(n, 1e-6)))?;
    for n in 1..=30u32 {
        let f = forest_poly(n);
        ensure(f.eval_int(&BigInt::from(0)) == BigInt::from(0), || format!("F_{n}(0)"))?;
        if n % 2 == 0 {
            ensure(f.eval_int(&BigInt::from(-4)) == BigInt::from(0), || format!("F_{n}(-4)"))?;
        }
    }
    Ok(())
}

fn oriented_real_roots() -> Outcome {
    let v = Verifier::new();
    first_failure((1..=50).map(|n| v.check_oriented_real_roots(n)))?;
    for n in 1..=50u32 {
        let at = oriented_forest_poly(n).eval_int(&BigInt::from(-2));
        ensure((at == BigInt::from(0)) == (n % 2 == 0), || format!("n = {n}: ~F_n(-2) = {at}"))?;
    }
    Ok(())
}

fn runner() -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases: 1000,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn small_poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-9i64..=9, 0..=max_len).prop_map(|c| IntPoly::from_i64s(&c))
}

fn fmt<T: std::fmt::Debug>(name: &str, e: proptest::test_runner::TestError<T>) -> String {
    format!("{name}: {e}")
}

fn property_suites() -> Outcome {
    runner()
        .run(&(small_poly(6), small_poly(6), small_poly(6)), |(p, q, r)| {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            Ok(())
        })
        .map_err(|e| fmt("ring axioms", e))?;

    const LIM: i128 = 1_000_000_000_000_000_000_000_000_000_000;
    let big = prop::collection::vec(-LIM..=LIM, 0..8)
        .prop_map(|c| IntPoly::from_coeffs(c.into_iter().map(BigInt::from).collect()));
    runner()
        .run(&big, |p| {
            prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
            Ok(())
        })
        .map_err(|e| fmt("parse/format round trip", e))?;

    runner()
        .run(&(small_poly(6), small_poly(5)), |(p, d)| {
            if d.is_zero() {
                return Ok(());
            }
            let prod = &p * &d;
            prop_assert_eq!(prod.exact_div(&d), Ok(p));
            Ok(())
        })
        .map_err(|e| fmt("exact_div inverts mul", e))?;

    let matrices = (0usize..=5).prop_flat_map(|n| {
        prop::collection::vec(small_poly(3), n * n).prop_map(move |e| {
            PolyMatrix::from_rows(e.chunks(n.max(1)).take(n).map(<[IntPoly]>::to_vec).collect()).unwrap()
        })
    });
    runner()
        .run(&matrices, |m| {
            prop_assert_eq!(det(&m), common::naive_det(&m));
            Ok(())
        })
        .map_err(|e| fmt("Bareiss vs cofactor expansion", e))?;
    Ok(())
}

fn main() {
    let criteria = [
        Criterion { id: 1, title: "golden table F_1..F_12", limit: Duration::from_secs(1), run: golden_table },
        Criterion { id: 2, title: "closed form = circulant det = sunlet det, n <= 40", limit: Duration::from_secs(30), run: three_paths },
        Criterion { id: 3, title: "determinant = enumeration (sunlets 3..8, 25 corpus graphs)", limit: Duration::from_secs(60), run: oracle_equivalence },
        Criterion { id: 4, title: "oriented sum = (x+1)^n - 1, histogram = C(n,k)", limit: Duration::from_secs(30), run: oriented_closed_form },
        Criterion { id: 5, title: "factorizations agree, n <= 60", limit: Duration::from_secs(20), run: factorization },
        Criterion { id: 6, title: "characterization conditions, both families", limit: Duration::from_secs(60), run: characterization },
        Criterion { id: 7, title: "log-concavity and unimodality, n = 3..300", limit: Duration::from_secs(30), run: log_concavity },
        Criterion { id: 8, title: "root residuals <= 1e-6 relative, n <= 30", limit: Duration::from_secs(5), run: root_residuals },
        Criterion { id: 9, title: "~F_n(-2) = 0 iff n even, n <= 50", limit: Duration::from_secs(1), run: oriented_real_roots },
        Criterion { id: 10, title: "property suites, 1000 cases each", limit: Duration::from_secs(120), run: property_suites },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= c.limit, || format!("took {elapsed:?}, limit {:?}", c.limit))
        });
        match outcome {
            Ok(()) => println!("PASS criterion {:>2}: {} ({:.2?})", c.id, c.title, elapsed),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {} ({:.2?})", c.id, c.title, elapsed);
                for line in msg.lines() {
                    println!("    {line}");
                }
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
