//! Command implementations behind the `forestpoly` binary.
//!
//! Each command writes results to `out`, diagnostics to `err`, and returns
//! the process exit code. Keeping them here lets the integration tests
//! drive the commands without spawning processes.

use std::collections::HashMap;
use std::io::Write;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::closedforms::{
    expand_factors, forest_factors, forest_poly, oriented_forest_factors, oriented_forest_poly, Factor,
};
use crate::error::Error;
use crate::graph::{Edge, WeightedGraph};
use crate::lintree::{forest_sum, oriented_forest_sum};
use crate::oracle::{enumerate_oriented_rsf, enumerate_rsf, ForestReport};
use crate::poly::parse_poly;
use crate::verify::{reports_to_text, root_table, CheckKind, Verifier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

/// Vertex ids may be written as strings or non-negative integers.
fn vertex_id<'de, D: serde::Deserializer<'de>>(d: D) -> Result<String, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Id {
        Text(String),
        Number(u64),
    }
    Ok(match Id::deserialize(d)? {
        Id::Text(s) => s,
        Id::Number(n) => n.to_string(),
    })
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexSpec {
    #[serde(deserialize_with = "vertex_id")]
    pub id: String,
    #[serde(default)]
    pub node: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    #[serde(deserialize_with = "vertex_id")]
    pub u: String,
    #[serde(deserialize_with = "vertex_id")]
    pub v: String,
    pub weight: String,
}

/// On-disk graph description (JSON). Vertex ids map to indices in file
/// order, which fixes the Laplacian row order.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<EdgeSpec>,
    #[serde(default)]
    pub oriented: bool,
}

#[derive(Debug, Error)]
pub enum GraphFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid graph file at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate vertex id {0:?}")]
    DuplicateId(String),
    #[error("edge {index}: unknown vertex id {id:?}")]
    UnknownId { index: usize, id: String },
    #[error("edge {index}: weight {text:?}: {source}")]
    Weight {
        index: usize,
        text: String,
        source: crate::poly::ParseError,
    },
    #[error(transparent)]
    Graph(#[from] Error),
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<Self, GraphFileError> {
        serde_json::from_str(text).map_err(|e| GraphFileError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Resolves ids and weights. `force_oriented` reads every edge as an
    /// arc `u -> v` even when the file does not say so.
    pub fn to_graph(&self, force_oriented: bool) -> Result<WeightedGraph, GraphFileError> {
        let mut index = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(v.id.as_str(), i).is_some() {
                return Err(GraphFileError::DuplicateId(v.id.clone()));
            }
        }
        let resolve = |i: usize, id: &str| {
            index.get(id).copied().ok_or_else(|| GraphFileError::UnknownId {
                index: i,
                id: id.to_string(),
            })
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            let weight = parse_poly(&e.weight).map_err(|source| GraphFileError::Weight {
                index: i,
                text: e.weight.clone(),
                source,
            })?;
            edges.push(Edge::new(resolve(i, &e.u)?, resolve(i, &e.v)?, weight));
        }
        let flags = self.vertices.iter().map(|v| v.node).collect();
        Ok(WeightedGraph::new(flags, edges, self.oriented || force_oriented)?)
    }
}

pub fn load_graph(path: &Path, force_oriented: bool) -> Result<WeightedGraph, GraphFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| GraphFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    GraphFile::parse(&text)?.to_graph(force_oriented)
}

/// `compute n [--oriented] [--homogeneous]`.
pub fn cmd_compute(n: u32, oriented: bool, homogeneous: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if n == 0 {
        let _ = writeln!(err, "n must be at least 1");
        return EXIT_USAGE;
    }
    let p = if oriented {
        oriented_forest_poly(n)
    } else {
        forest_poly(n)
    };
    let text = if homogeneous {
        p.homogenize(n as usize, "a", "b")
    } else {
        p.to_string()
    };
    let _ = writeln!(out, "{text}");
    EXIT_OK
}

fn enumerate(g: &WeightedGraph, cap: usize) -> Result<ForestReport, Error> {
    if g.is_oriented() {
        enumerate_oriented_rsf(g, cap)
    } else {
        enumerate_rsf(g, cap)
    }
}

/// What `forest-sum` should compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMode {
    Determinant,
    /// Determinant plus brute-force cross-check.
    WithOracle,
    /// Brute-force enumeration only (the `enumerate` command).
    OracleOnly,
}

/// `forest-sum <file> [--oriented] [--oracle] [--cap N]` and `enumerate`.
pub fn cmd_forest_sum(
    path: &Path,
    oriented: bool,
    mode: SumMode,
    cap: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let g = match load_graph(path, oriented) {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    if g.node_count() == 0 {
        let _ = writeln!(err, "graph has no nodes");
        return EXIT_USAGE;
    }
    let det_sum = if mode == SumMode::OracleOnly {
        None
    } else {
        let r = if g.is_oriented() {
            oriented_forest_sum(&g)
        } else {
            forest_sum(&g)
        };
        match r {
            Ok(p) => {
                let _ = writeln!(out, "{p}");
                Some(p)
            }
            Err(e) => {
                let _ = writeln!(err, "{e}");
                return EXIT_USAGE;
            }
        }
    };
    if mode == SumMode::Determinant {
        return EXIT_OK;
    }
    let report = match enumerate(&g, cap) {
        Ok(r) => r,
        Err(e @ Error::CapExceeded { .. }) => {
            let _ = writeln!(err, "{e}");
            return EXIT_CAP;
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    match det_sum {
        None => {
            let _ = writeln!(out, "{}", report.weighted_sum);
            let _ = writeln!(out, "forests: {}", report.forest_count);
            if let Some(h) = &report.histogram {
                for (k, c) in h {
                    let _ = writeln!(out, "cycle edges {k}: {c}");
                }
            }
            EXIT_OK
        }
        Some(p) if p == report.weighted_sum => {
            let _ = writeln!(out, "oracle: MATCH ({} forests)", report.forest_count);
            EXIT_OK
        }
        Some(_) => {
            let _ = writeln!(out, "oracle: MISMATCH ({} forests)", report.forest_count);
            let _ = writeln!(out, "oracle sum: {}", report.weighted_sum);
            EXIT_MISMATCH
        }
    }
}

fn factor_line(f: &Factor) -> String {
    let body = f.poly.to_string();
    let single_term = f.poly.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count() == 1;
    let base = if single_term { body } else { format!("({body})") };
    if f.multiplicity == 1 {
        base
    } else {
        format!("{base}^{}", f.multiplicity)
    }
}

/// `factor n [--oriented]`: one factor per line, then the product check.
pub fn cmd_factor(n: u32, oriented: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if n == 0 {
        let _ = writeln!(err, "n must be at least 1");
        return EXIT_USAGE;
    }
    let (factors, direct) = if oriented {
        (oriented_forest_factors(n), oriented_forest_poly(n))
    } else {
        (forest_factors(n), forest_poly(n))
    };
    for f in &factors {
        let _ = writeln!(out, "{}", factor_line(f));
    }
    let product = expand_factors(&factors);
    if product == direct {
        let _ = writeln!(out, "verified: product equals expansion");
        EXIT_OK
    } else {
        let _ = writeln!(err, "product {product} differs from expansion {direct}");
        EXIT_FAILURE
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Structured,
}

/// `verify [--nmax N] [--check NAME] [--format text|structured]`.
pub fn cmd_verify(
    n_max: u32,
    check: Option<&str>,
    format: ReportFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    cmd_verify_with(&Verifier::new(), n_max, check, format, out, err)
}

pub fn cmd_verify_with(
    verifier: &Verifier,
    n_max: u32,
    check: Option<&str>,
    format: ReportFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    if n_max == 0 {
        let _ = writeln!(err, "--nmax must be at least 1");
        return EXIT_USAGE;
    }
    let reports = match check {
        None => verifier.run_suite(n_max),
        Some(name) => match CheckKind::from_name(name) {
            Some(kind) => verifier.run_check(kind, n_max),
            None => {
                let known: Vec<&str> = CheckKind::ALL.iter().map(|k| k.name()).collect();
                let _ = writeln!(err, "unknown check {name:?}; expected one of: {}", known.join(", "));
                return EXIT_USAGE;
            }
        },
    };
    match format {
        ReportFormat::Text => {
            let _ = write!(out, "{}", reports_to_text(&reports));
        }
        ReportFormat::Structured => {
            let json = serde_json::to_string_pretty(&reports).expect("reports serialize");
            let _ = writeln!(out, "{json}");
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let _ = writeln!(err, "{} reports, {failed} failed", reports.len());
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

/// Six fractional digits; negative zero prints as zero.
pub fn format_decimal(v: f64) -> String {
    let s = format!("{v:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// `roots n`: `k`, `omega_k` and `|F_n(omega_k)|`, tab separated.
pub fn cmd_roots(n: u32, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if n == 0 {
        let _ = writeln!(err, "n must be at least 1");
        return EXIT_USAGE;
    }
    for row in root_table(n) {
        let _ = writeln!(out, "{}\t{}\t{:.3e}", row.k, format_decimal(row.omega), row.residual);
    }
    EXIT_OK
}
