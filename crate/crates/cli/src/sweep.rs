//! Seeded random sweeps. Instance `i` draws its coefficients from a ChaCha8
//! stream keyed by `(seed, i)`, so the output does not depend on how the
//! instances are scheduled across threads.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use sextica::solve::{solve, Method, SolveOptions};
use sextica::verify::RunReport;
use sextica::{c64, DegeneracyKind, Polynomial};
use thiserror::Error;

use crate::report::num;

/// Leading coefficients smaller than this in magnitude are redrawn.
pub const LEADING_FLOOR: f64 = 0.1;

/// Thresholds for the all-verified fractions.
pub const THRESHOLDS: [f64; 4] = [1e-12, 1e-9, 1e-6, 1e-3];

/// Oracle separation above which oracle distances are aggregated.
pub const SEPARATION_FLOOR: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub degree: usize,
    pub count: usize,
    pub seed: u64,
    pub range: (f64, f64),
    pub options: SolveOptions,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("degree must be 3, 4 or 6")]
    Degree,
    #[error("count must be at least 1")]
    Count,
    #[error("range must satisfy lo < hi and reach a magnitude of at least 0.1")]
    Range,
    #[error("method {0} does not apply to this degree")]
    Method(&'static str),
}

impl SweepConfig {
    pub fn new(degree: usize, count: usize, seed: u64) -> Self {
        Self { degree, count, seed, range: (-10.0, 10.0), options: SolveOptions::default() }
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        if ![3, 4, 6].contains(&self.degree) {
            return Err(SweepError::Degree);
        }
        if self.count == 0 {
            return Err(SweepError::Count);
        }
        let (lo, hi) = self.range;
        if !(lo.is_finite() && hi.is_finite() && lo < hi && (hi > LEADING_FLOOR || lo < -LEADING_FLOOR)) {
            return Err(SweepError::Range);
        }
        let ok = match self.options.method {
            Method::Auto | Method::Oracle => true,
            Method::T1 => self.degree == 4,
            Method::T2 | Method::T3 => self.degree == 6,
        };
        if !ok {
            return Err(SweepError::Method(self.options.method.name()));
        }
        Ok(())
    }
}

/// The polynomial of instance `index`.
pub fn instance(cfg: &SweepConfig, index: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index);
    let (lo, hi) = cfg.range;
    let mut coeffs = Vec::with_capacity(cfg.degree + 1);
    let mut lead = rng.random_range(lo..hi);
    while lead.abs() < LEADING_FLOOR {
        lead = rng.random_range(lo..hi);
    }
    coeffs.push(lead);
    for _ in 0..cfg.degree {
        coeffs.push(rng.random_range(lo..hi));
    }
    Polynomial::new(coeffs.into_iter().map(|x| c64(x, 0.0)).collect()).expect("finite leading coefficient")
}

/// Per-instance record kept after the run.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceOutcome {
    pub index: usize,
    pub verified: usize,
    pub candidates: usize,
    pub degeneracy: Option<DegeneracyKind>,
    pub residuals: Vec<f64>,
    pub duplicates: bool,
    pub oracle_converged: bool,
    pub oracle_min_separation: f64,
    pub oracle_max_distance: Option<f64>,
    pub t3_rows: Option<Vec<(&'static str, f64)>>,
    pub seats: Vec<(&'static str, Option<DegeneracyKind>, Option<f64>)>,
    pub seat_asymmetry: bool,
}

impl InstanceOutcome {
    fn from_report(index: usize, r: &RunReport) -> Self {
        Self {
            index,
            verified: r.verified_count,
            candidates: r.verdicts.len(),
            degeneracy: r.degeneracy,
            residuals: r.verdicts.iter().map(|v| v.residual_rel).collect(),
            duplicates: r.has_duplicates(),
            oracle_converged: r.oracle.as_ref().is_some_and(|o| o.converged),
            oracle_min_separation: r.oracle.as_ref().map_or(0.0, |o| o.min_separation),
            oracle_max_distance: r.oracle_max_distance,
            t3_rows: r
                .t3_crosscheck
                .as_ref()
                .map(|c| c.rows.iter().map(|row| (row.coefficient, row.discrepancy())).collect()),
            seats: r.seats.iter().map(|s| (s.label, s.degeneracy, s.distance_to_primary)).collect(),
            seat_asymmetry: r.branch_flags.iter().any(|f| f == "seat_asymmetry"),
        }
    }

    pub fn max_residual(&self) -> Option<f64> {
        self.residuals.iter().copied().reduce(f64::max)
    }

    /// Completed with every candidate at or below `tol`.
    pub fn all_within(&self, tol: f64) -> bool {
        self.degeneracy.is_none() && self.candidates > 0 && self.residuals.iter().all(|&r| r <= tol)
    }
}

pub fn run_instance(cfg: &SweepConfig, index: usize) -> InstanceOutcome {
    let p = instance(cfg, index as u64);
    let report = solve(&p, &cfg.options).expect("validated sweep config");
    InstanceOutcome::from_report(index, &report)
}

/// Threads from `SEXTICA_THREADS`, or rayon's default when unset or invalid.
pub fn thread_count() -> Option<usize> {
    std::env::var("SEXTICA_THREADS").ok()?.trim().parse().ok().filter(|&n| n >= 1)
}

pub fn run_instances(cfg: &SweepConfig, threads: Option<usize>) -> Vec<InstanceOutcome> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().expect("thread pool");
    pool.install(|| (0..cfg.count).into_par_iter().map(|i| run_instance(cfg, i)).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fraction {
    pub tol: f64,
    pub fraction: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Percentiles {
    pub count: usize,
    pub non_finite: usize,
    pub p50: Option<f64>,
    pub p90: Option<f64>,
    pub p99: Option<f64>,
    pub p999: Option<f64>,
    pub max: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleStats {
    pub non_converged: usize,
    pub separated_instances: usize,
    pub max_distance_separated: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossCheckStat {
    pub coefficient: &'static str,
    pub max_discrepancy: f64,
    /// Instances where the printed expansion is off by more than 1e-9.
    pub discrepant: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossCheckStats {
    pub instances: usize,
    pub rows: Vec<CrossCheckStat>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeatStat {
    pub label: &'static str,
    pub runs: usize,
    pub degenerate: usize,
    pub max_distance_to_primary: Option<f64>,
    /// Runs whose candidates all lie within 1e-6 of the primary ones.
    pub matching_primary: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub degree: usize,
    pub count: usize,
    pub seed: u64,
    pub range: [f64; 2],
    pub method: &'static str,
    pub s56_mode: Option<&'static str>,
    pub all_seats: bool,
    pub residual_tol: f64,
    pub completed: usize,
    /// `verified_histogram[k]` counts instances with exactly `k` verified
    /// candidates; degenerate instances count at 0.
    pub verified_histogram: Vec<usize>,
    pub degeneracy_counts: BTreeMap<&'static str, usize>,
    pub all_verified_fraction: Vec<Fraction>,
    pub residual_percentiles: Percentiles,
    pub duplicate_rate: f64,
    pub oracle: OracleStats,
    pub t3_crosscheck: Option<CrossCheckStats>,
    pub seat_asymmetry: usize,
    pub seats: Option<Vec<SeatStat>>,
}

fn nearest_rank(sorted: &[f64], q: f64) -> Option<f64> {
    if sorted.is_empty() {
        return None;
    }
    let rank = (q * sorted.len() as f64).ceil() as usize;
    Some(sorted[rank.clamp(1, sorted.len()) - 1])
}

pub fn summarize(cfg: &SweepConfig, outcomes: &[InstanceOutcome]) -> SweepSummary {
    let completed = outcomes.iter().filter(|o| o.degeneracy.is_none()).count();
    let mut verified_histogram = vec![0; cfg.degree + 1];
    let mut degeneracy_counts = BTreeMap::new();
    for o in outcomes {
        verified_histogram[o.verified.min(cfg.degree)] += 1;
        if let Some(d) = o.degeneracy {
            *degeneracy_counts.entry(d.name()).or_insert(0) += 1;
        }
    }
    let n = outcomes.len() as f64;
    let all_verified_fraction = THRESHOLDS
        .iter()
        .map(|&tol| Fraction {
            tol,
            fraction: outcomes.iter().filter(|o| o.all_within(tol)).count() as f64 / n,
        })
        .collect();

    let all: Vec<f64> = outcomes.iter().flat_map(|o| o.residuals.iter().copied()).collect();
    let mut finite: Vec<f64> = all.iter().copied().filter(|r| r.is_finite()).collect();
    finite.sort_by(f64::total_cmp);
    let residual_percentiles = Percentiles {
        count: finite.len(),
        non_finite: all.len() - finite.len(),
        p50: nearest_rank(&finite, 0.5),
        p90: nearest_rank(&finite, 0.9),
        p99: nearest_rank(&finite, 0.99),
        p999: nearest_rank(&finite, 0.999),
        max: finite.last().copied(),
    };

    let with_candidates = outcomes.iter().filter(|o| o.candidates > 0).count();
    let duplicate_rate = if with_candidates == 0 {
        0.0
    } else {
        outcomes.iter().filter(|o| o.duplicates).count() as f64 / with_candidates as f64
    };

    let separated: Vec<&InstanceOutcome> =
        outcomes.iter().filter(|o| o.candidates > 0 && o.oracle_min_separation >= SEPARATION_FLOOR).collect();
    let oracle = OracleStats {
        non_converged: outcomes.iter().filter(|o| !o.oracle_converged).count(),
        separated_instances: separated.len(),
        max_distance_separated: separated.iter().filter_map(|o| o.oracle_max_distance).reduce(f64::max),
    };

    let t3: Vec<&Vec<(&'static str, f64)>> = outcomes.iter().filter_map(|o| o.t3_rows.as_ref()).collect();
    let t3_crosscheck = t3.first().map(|first| CrossCheckStats {
        instances: t3.len(),
        rows: first
            .iter()
            .enumerate()
            .map(|(k, &(coefficient, _))| CrossCheckStat {
                coefficient,
                max_discrepancy: t3.iter().map(|rows| rows[k].1).fold(0.0, f64::max),
                discrepant: t3.iter().filter(|rows| !(rows[k].1 <= 1e-9)).count(),
            })
            .collect(),
    });

    let seats = cfg.options.sextic.all_seats.then(|| {
        let mut stats: Vec<SeatStat> = Vec::new();
        for o in outcomes {
            for &(label, degeneracy, distance) in &o.seats {
                let idx = match stats.iter().position(|s| s.label == label) {
                    Some(i) => i,
                    None => {
                        stats.push(SeatStat {
                            label,
                            runs: 0,
                            degenerate: 0,
                            max_distance_to_primary: None,
                            matching_primary: 0,
                        });
                        stats.len() - 1
                    }
                };
                let s = &mut stats[idx];
                s.runs += 1;
                if degeneracy.is_some() {
                    s.degenerate += 1;
                }
                if let Some(d) = distance {
                    s.max_distance_to_primary = Some(s.max_distance_to_primary.map_or(d, |m| m.max(d)));
                    if d <= 1e-6 {
                        s.matching_primary += 1;
                    }
                }
            }
        }
        stats.sort_by_key(|s| s.label);
        stats
    });

    SweepSummary {
        degree: cfg.degree,
        count: cfg.count,
        seed: cfg.seed,
        range: [cfg.range.0, cfg.range.1],
        method: cfg.options.method.name(),
        s56_mode: (cfg.degree == 6).then(|| cfg.options.sextic.s56.name()),
        all_seats: cfg.options.sextic.all_seats,
        residual_tol: cfg.options.tolerances.residual_tol,
        completed,
        verified_histogram,
        degeneracy_counts,
        all_verified_fraction,
        residual_percentiles,
        duplicate_rate,
        oracle,
        t3_crosscheck,
        seat_asymmetry: outcomes.iter().filter(|o| o.seat_asymmetry).count(),
        seats,
    }
}

pub fn to_json(summary: &SweepSummary) -> String {
    serde_json::to_string_pretty(summary).expect("summary serializes")
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

/// One row per instance.
pub fn to_csv(cfg: &SweepConfig, outcomes: &[InstanceOutcome]) -> String {
    let mut s = String::from(
        "index,coefficients,verified,candidates,degeneracy,max_residual,duplicates,\
         oracle_converged,oracle_min_separation,oracle_max_distance,t3_max_discrepancy\n",
    );
    for o in outcomes {
        let coeffs: Vec<String> = instance(cfg, o.index as u64).coeffs().iter().map(|z| num(z.re)).collect();
        let t3 = o.t3_rows.as_ref().map(|rows| rows.iter().map(|r| r.1).fold(0.0, f64::max));
        let sep = Some(o.oracle_min_separation).filter(|s| s.is_finite());
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            o.index,
            coeffs.join(" "),
            o.verified,
            o.candidates,
            o.degeneracy.map_or("", |d| d.name()),
            opt(o.max_residual()),
            o.duplicates,
            o.oracle_converged,
            opt(sep),
            opt(o.oracle_max_distance),
            opt(t3),
        ));
    }
    s
}
