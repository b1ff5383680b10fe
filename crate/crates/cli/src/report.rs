//! Serialized forms of a [`RunReport`]. Field order is fixed by the struct
//! declarations; floats go through `serde_json`, which writes the shortest
//! decimal that round-trips.

use std::fmt::Write as _;

use serde::Serialize;
use sextica::sextic::{AlphaSymbols, SexticIntermediates, ShiftCrossCheck};
use sextica::verify::RunReport;
use sextica::ComplexScalar;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexScalar> for JsonComplex {
    fn from(z: ComplexScalar) -> Self {
        Self { re: z.re, im: z.im }
    }
}

fn cs(zs: &[ComplexScalar]) -> Vec<JsonComplex> {
    zs.iter().map(|&z| z.into()).collect()
}

#[derive(Debug, Serialize)]
pub struct OracleMatch {
    pub re: f64,
    pub im: f64,
    pub distance: f64,
    pub agrees: bool,
}

#[derive(Debug, Serialize)]
pub struct Candidate {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub status: &'static str,
    pub oracle_match: Option<OracleMatch>,
}

#[derive(Debug, Serialize)]
pub struct Alphas {
    pub a1: JsonComplex,
    pub a2: JsonComplex,
    pub a3: JsonComplex,
    pub a4: JsonComplex,
}

impl From<AlphaSymbols> for Alphas {
    fn from(a: AlphaSymbols) -> Self {
        Self { a1: a.a1.into(), a2: a.a2.into(), a3: a.a3.into(), a4: a.a4.into() }
    }
}

#[derive(Debug, Serialize)]
pub struct Intermediates {
    pub pipeline: &'static str,
    #[serde(rename = "V")]
    pub v: JsonComplex,
    pub gamma4: JsonComplex,
    pub gamma4_all: Vec<JsonComplex>,
    pub lambda_or_beta: Vec<JsonComplex>,
    pub quartic_coeffs: Vec<JsonComplex>,
    pub alpha1: JsonComplex,
    pub alphas: Alphas,
    pub shift: JsonComplex,
    pub group_values: Vec<JsonComplex>,
}

impl From<&SexticIntermediates> for Intermediates {
    fn from(i: &SexticIntermediates) -> Self {
        Self {
            pipeline: i.pipeline.name(),
            v: i.v.into(),
            gamma4: i.gamma4.into(),
            gamma4_all: cs(&i.gamma4_all),
            lambda_or_beta: cs(&i.lambda_or_beta),
            quartic_coeffs: cs(&i.quartic_coeffs),
            alpha1: i.alphas.a1.into(),
            alphas: i.alphas.into(),
            shift: i.shift.into(),
            group_values: cs(&i.group_values),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Oracle {
    pub roots: Vec<JsonComplex>,
    pub converged: bool,
    pub iterations: usize,
    pub min_separation: Option<f64>,
    pub clusters: Vec<(usize, usize)>,
    pub max_match_distance: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct CrossCheckRow {
    pub coefficient: &'static str,
    pub taylor: JsonComplex,
    pub printed: JsonComplex,
    pub discrepancy: f64,
}

#[derive(Debug, Serialize)]
pub struct CrossCheck {
    pub shift: JsonComplex,
    pub rows: Vec<CrossCheckRow>,
    pub max_discrepancy: f64,
}

impl From<&ShiftCrossCheck> for CrossCheck {
    fn from(c: &ShiftCrossCheck) -> Self {
        Self {
            shift: c.shift.into(),
            rows: c
                .rows
                .iter()
                .map(|r| CrossCheckRow {
                    coefficient: r.coefficient,
                    taylor: r.taylor.into(),
                    printed: r.printed.into(),
                    discrepancy: r.discrepancy(),
                })
                .collect(),
            max_discrepancy: c.max_discrepancy(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct JsonReport {
    pub input: Vec<JsonComplex>,
    pub method_path: String,
    pub branch_flags: Vec<String>,
    pub degeneracy: Option<&'static str>,
    pub s56_mode: Option<&'static str>,
    pub candidates: Vec<Candidate>,
    pub verified_count: usize,
    pub spurious_count: usize,
    pub unmatched_count: usize,
    pub duplicates: Vec<(usize, usize)>,
    pub intermediates: Option<Intermediates>,
    pub oracle: Option<Oracle>,
    pub t3_crosscheck: Option<CrossCheck>,
    pub timing_ns: Option<u64>,
}

impl JsonReport {
    pub fn new(r: &RunReport, timing_ns: Option<u64>) -> Self {
        Self {
            input: cs(r.input.coeffs()),
            method_path: r.method_path.clone(),
            branch_flags: r.branch_flags.clone(),
            degeneracy: r.degeneracy.map(|d| d.name()),
            s56_mode: r.s56_mode.map(|m| m.name()),
            candidates: r
                .verdicts
                .iter()
                .map(|v| Candidate {
                    re: v.value.re,
                    im: v.value.im,
                    residual: v.residual_rel,
                    status: v.status.name(),
                    oracle_match: match (v.matched_oracle, v.distance, v.oracle_agrees) {
                        (Some(m), Some(distance), Some(agrees)) => {
                            Some(OracleMatch { re: m.re, im: m.im, distance, agrees })
                        }
                        _ => None,
                    },
                })
                .collect(),
            verified_count: r.verified_count,
            spurious_count: r.spurious_count,
            unmatched_count: r.unmatched_count,
            duplicates: r.duplicates.clone(),
            intermediates: r.intermediates.as_ref().map(Intermediates::from),
            oracle: r.oracle.as_ref().map(|o| Oracle {
                roots: cs(&o.roots),
                converged: o.converged,
                iterations: o.iterations,
                min_separation: Some(o.min_separation).filter(|s| s.is_finite()),
                clusters: o.clusters.clone(),
                max_match_distance: r.oracle_max_distance,
            }),
            t3_crosscheck: r.t3_crosscheck.as_ref().map(CrossCheck::from),
            timing_ns,
        }
    }
}

pub fn to_json(r: &RunReport, timing_ns: Option<u64>) -> String {
    serde_json::to_string(&JsonReport::new(r, timing_ns)).expect("report serializes")
}

/// Shortest round-trip decimal, `null` for non-finite values.
pub fn num(x: f64) -> String {
    serde_json::to_string(&x).expect("f64 serializes")
}

fn cnum(z: ComplexScalar) -> String {
    if z.im == 0.0 {
        num(z.re)
    } else {
        format!("{}{}{}i", num(z.re), if z.im < 0.0 { "" } else { "+" }, num(z.im))
    }
}

pub fn to_text(r: &RunReport, timing_ns: Option<u64>) -> String {
    let mut s = String::new();
    let input: Vec<String> = r.input.coeffs().iter().map(|&z| cnum(z)).collect();
    let _ = writeln!(s, "input: {}", input.join(","));
    let _ = writeln!(s, "method: {}", r.method_path);
    if !r.branch_flags.is_empty() {
        let _ = writeln!(s, "flags: {}", r.branch_flags.join(" "));
    }
    if let Some(m) = r.s56_mode {
        let _ = writeln!(s, "s56: {}", m.name());
    }
    if let Some(d) = r.degeneracy {
        let _ = writeln!(s, "degeneracy: {}", d.name());
    }
    for (i, v) in r.verdicts.iter().enumerate() {
        let oracle = match v.distance {
            Some(d) => format!("  oracle distance {}", num(d)),
            None => String::new(),
        };
        let _ = writeln!(
            s,
            "  x{} = {}  residual {}  {}{}",
            i + 1,
            cnum(v.value),
            num(v.residual_rel),
            v.status.name(),
            oracle
        );
    }
    let _ = writeln!(s, "verified: {}/{}", r.verified_count, r.verdicts.len());
    if r.has_duplicates() {
        let pairs: Vec<String> = r.duplicates.iter().map(|(i, j)| format!("x{}~x{}", i + 1, j + 1)).collect();
        let _ = writeln!(s, "duplicates: {}", pairs.join(" "));
    }
    if let Some(i) = &r.intermediates {
        let _ = writeln!(s, "V = {}  gamma4 = {}  alpha1 = {}", cnum(i.v), cnum(i.gamma4), cnum(i.alphas.a1));
    }
    if let Some(o) = &r.oracle {
        let roots: Vec<String> = o.roots.iter().map(|&z| cnum(z)).collect();
        let _ = writeln!(
            s,
            "oracle: {} ({})",
            roots.join(", "),
            if o.converged { "converged" } else { "did not converge" }
        );
    }
    if let Some(c) = &r.t3_crosscheck {
        for row in &c.rows {
            let _ = writeln!(
                s,
                "  shift {}: taylor {}  printed {}  discrepancy {}",
                row.coefficient,
                cnum(row.taylor),
                cnum(row.printed),
                num(row.discrepancy())
            );
        }
    }
    if let Some(t) = timing_ns {
        let _ = writeln!(s, "time: {t} ns");
    }
    s
}
