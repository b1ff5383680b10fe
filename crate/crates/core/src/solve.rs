//! Method dispatch: run a closed-form path (or the oracle), then the oracle,
//! then classify every candidate.

use sextica_oracle::{find_roots, OracleConfig};
use sextica_poly::{solve_quadratic, ComplexScalar, Polynomial};
use thiserror::Error;

use crate::cubic::{solve_cubic, GeneralCubic};
use crate::quartic::solve_quartic;
use crate::sextic::{
    solve_sextic, solve_sextic_t2, solve_sextic_t3, t3_crosscheck_for, Pipeline, SexticOptions, SexticRun,
};
use crate::verify::{classify, PipelineOutput, RunReport, SeatSummary, Tolerances};
use crate::SolveError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    #[default]
    Auto,
    /// The quartic solver.
    T1,
    T2,
    T3,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Self::Auto => "auto",
            Self::T1 => "t1",
            Self::T2 => "t2",
            Self::T3 => "t3",
            Self::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SolveOptions {
    pub method: Method,
    pub sextic: SexticOptions,
    pub tolerances: Tolerances,
    pub oracle: OracleConfig,
}

/// Requests that cannot be run at all, as opposed to runs that stop on a
/// degeneracy.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UsageError {
    #[error("degree {0} is outside the supported range 2..=6")]
    UnsupportedDegree(usize),
    #[error("method {method} does not apply to degree {degree}")]
    MethodMismatch { method: &'static str, degree: usize },
}

/// Solves `p` with the requested method and classifies the candidates
/// against the oracle. Degeneracies are recorded in the report.
pub fn solve(p: &Polynomial, opts: &SolveOptions) -> Result<RunReport, UsageError> {
    let degree = p.degree();
    if !(2..=6).contains(&degree) {
        return Err(UsageError::UnsupportedDegree(degree));
    }
    let applies = match opts.method {
        Method::Auto | Method::Oracle => true,
        Method::T1 => degree == 4,
        Method::T2 | Method::T3 => degree == 6,
    };
    if !applies {
        return Err(UsageError::MethodMismatch { method: opts.method.name(), degree });
    }

    let oracle = find_roots(p, &opts.oracle).ok();
    let run = match (opts.method, degree) {
        (Method::Oracle, _) | (Method::Auto, 5) => PipelineOutput {
            method_path: "oracle".into(),
            candidates: oracle.as_ref().map(|o| o.roots.clone()).unwrap_or_default(),
            ..Default::default()
        },
        (Method::Auto, 2) => quadratic_output(p),
        (Method::Auto, 3) => cubic_output(p),
        (_, 4) => quartic_output(p),
        (method, _) => sextic_output(p, method, &opts.sextic),
    };
    Ok(classify(p, run, oracle.as_ref(), &opts.tolerances))
}

fn degenerate(method_path: &str, err: &SolveError) -> PipelineOutput {
    PipelineOutput { method_path: method_path.into(), degeneracy: Some(err.kind()), ..Default::default() }
}

fn quadratic_output(p: &Polynomial) -> PipelineOutput {
    let k = p.coeffs();
    match solve_quadratic(k[0], k[1], k[2]) {
        Ok(pair) => PipelineOutput {
            method_path: "quadratic".into(),
            candidates: pair.to_array().to_vec(),
            ..Default::default()
        },
        Err(e) => degenerate("quadratic", &SolveError::from(e)),
    }
}

fn cubic_output(p: &Polynomial) -> PipelineOutput {
    let k = p.coeffs();
    let cubic = GeneralCubic { b: k[1] / k[0], c: k[2] / k[0], d: k[3] / k[0] };
    PipelineOutput {
        method_path: "cubic".into(),
        candidates: solve_cubic(&cubic).to_vec(),
        ..Default::default()
    }
}

fn quartic_output(p: &Polynomial) -> PipelineOutput {
    match solve_quartic(p) {
        Ok(s) => PipelineOutput {
            method_path: "t1".into(),
            branch_flags: vec![
                format!("quartic_regime:{}", s.assembly.regime.name()),
                format!("quartic_seat:{}", s.seat[0] + 1),
            ],
            candidates: s.roots.to_vec(),
            ..Default::default()
        },
        Err(e) => degenerate("t1", &e),
    }
}

fn sextic_output(p: &Polynomial, method: Method, opts: &SexticOptions) -> PipelineOutput {
    let result = match method {
        Method::T2 => solve_sextic_t2(p, opts),
        Method::T3 => solve_sextic_t3(p, opts),
        _ => solve_sextic(p, opts),
    };
    match result {
        Ok(run) => sextic_run_output(&run, opts),
        Err(e) => {
            let path = match method {
                Method::T2 => "t2",
                Method::T3 => "t3",
                _ => "sextic",
            };
            let mut out = degenerate(path, &e);
            out.s56_mode = Some(opts.s56);
            if method != Method::T2 {
                out.t3_crosscheck = t3_crosscheck_for(p);
            }
            out
        }
    }
}

fn sextic_run_output(run: &SexticRun, opts: &SexticOptions) -> PipelineOutput {
    let r = &run.reduction;
    let mut branch_flags = vec![
        format!("pipeline:{}", r.pipeline.name()),
        format!("quartic_regime:{}", r.quartic_regime.name()),
    ];
    branch_flags.extend(r.flags.iter().map(|f| f.name().to_string()));
    let candidates: Vec<ComplexScalar> = run.candidates.values.to_vec();
    PipelineOutput {
        method_path: r.pipeline.name().into(),
        branch_flags,
        candidates,
        degeneracy: None,
        s56_mode: Some(opts.s56),
        t3_crosscheck: if r.pipeline == Pipeline::T3 { run.crosscheck.clone() } else { None },
        intermediates: Some(run.intermediates()),
        seats: run
            .seats
            .iter()
            .map(|s| SeatSummary {
                label: s.label,
                gamma4: s.gamma4,
                degeneracy: s.outcome.as_ref().err().map(SolveError::kind),
                distance_to_primary: s.distance_to_primary,
            })
            .collect(),
    }
}
