//! Reference root finder.
//!
//! Weierstrass (Durand–Kerner) simultaneous iteration with an optional Newton
//! polish. This crate depends only on `sextica-poly`, so nothing it computes
//! can leak in from the closed-form solvers it is used to check.

use std::f64::consts::TAU;

use sextica_poly::{ComplexScalar, PolyError, Polynomial};

/// Angular offset of the starting circle, in radians.
const START_OFFSET: f64 = 0.4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Convergence threshold on the relative step size.
    pub tol: f64,
    pub max_iter: usize,
    /// Run a Newton pass on each root after the simultaneous iteration.
    pub polish: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { tol: 1e-10, max_iter: 500, polish: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("invalid oracle configuration: tol must be > 0 and max_iter ≥ 1")]
    InvalidConfig,
    #[error("constant polynomial has no roots")]
    ConstantPolynomial,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl OracleConfig {
    pub fn validate(&self) -> Result<(), OracleError> {
        if !(self.tol > 0.0) || self.max_iter == 0 {
            return Err(OracleError::InvalidConfig);
        }
        Ok(())
    }

    /// Distance below which two returned roots are reported as a cluster.
    pub fn cluster_distance(&self) -> f64 {
        100.0 * self.tol
    }
}

/// Roots plus convergence diagnostics. Roots are returned even when the
/// iteration did not converge.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub roots: Vec<ComplexScalar>,
    pub iterations: usize,
    pub converged: bool,
    /// Index pairs closer than [`OracleConfig::cluster_distance`].
    pub clusters: Vec<(usize, usize)>,
    /// Smallest pairwise distance between returned roots (infinite for n = 1).
    pub min_separation: f64,
}

impl OracleReport {
    pub fn did_not_converge(&self) -> bool {
        !self.converged
    }

    pub fn is_clustered(&self) -> bool {
        !self.clusters.is_empty()
    }

    /// Whether root `i` belongs to any flagged cluster.
    pub fn in_cluster(&self, i: usize) -> bool {
        self.clusters.iter().any(|&(a, b)| a == i || b == i)
    }
}

/// Rounding floor for the relative backward residual of a degree-`n`
/// Horner evaluation.
fn residual_floor(n: usize) -> f64 {
    2.0 * n as f64 * f64::EPSILON
}

/// All `n` roots of `p`, with multiplicity.
pub fn find_roots(p: &Polynomial, cfg: &OracleConfig) -> Result<OracleReport, OracleError> {
    cfg.validate()?;
    p.check_leading()?;
    let n = p.degree();
    if n == 0 {
        return Err(OracleError::ConstantPolynomial);
    }
    let monic = p.make_monic()?;
    let coeffs = monic.coeffs();

    // Cauchy bound 1 + max |aₖ/aₙ|
    let radius = 1.0 + coeffs[1..].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<ComplexScalar> =
        (0..n).map(|k| ComplexScalar::from_polar(radius, TAU * k as f64 / n as f64 + START_OFFSET)).collect();

    let floor = residual_floor(n);
    let mut converged = false;
    let mut iterations = 0;
    while iterations < cfg.max_iter {
        iterations += 1;
        let mut all_done = true;
        for i in 0..n {
            let zi = z[i];
            let ev = monic.eval_with_scale(zi);
            if ev.value.norm() <= floor * ev.scale {
                continue;
            }
            let denom = z
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(ComplexScalar::new(1.0, 0.0), |acc, (_, &zj)| acc * (zi - zj));
            if denom.norm() == 0.0 {
                // coincident iterates; nudge apart deterministically
                z[i] = zi + ComplexScalar::new(cfg.tol, cfg.tol) * radius;
                all_done = false;
                continue;
            }
            let step = ev.value / denom;
            z[i] = zi - step;
            if step.norm() > cfg.tol * zi.norm() {
                all_done = false;
            }
        }
        if all_done {
            converged = true;
            break;
        }
    }

    if cfg.polish {
        for zi in z.iter_mut() {
            *zi = refine(&monic, *zi, cfg).value;
        }
    }

    let mut clusters = Vec::new();
    let mut min_separation = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            let d = (z[i] - z[j]).norm();
            min_separation = min_separation.min(d);
            if d < cfg.cluster_distance() {
                clusters.push((i, j));
            }
        }
    }

    Ok(OracleReport { roots: z, iterations, converged, clusters, min_separation })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Refined {
    pub value: ComplexScalar,
    pub residual: f64,
    /// False when no Newton step lowered the residual; `value` is then the
    /// starting point.
    pub improved: bool,
    pub iterations: usize,
}

/// Newton iteration from `x0`. Stops on a relative step ≤ `tol`, on residual
/// stagnation, or after `max_iter` steps, and always returns the best point
/// seen.
pub fn refine(p: &Polynomial, x0: ComplexScalar, cfg: &OracleConfig) -> Refined {
    let mut best = x0;
    let mut best_res = p.backward_residual(x0);
    let start_res = best_res;
    let mut x = x0;
    let mut iterations = 0;
    while iterations < cfg.max_iter && best_res > 0.0 {
        iterations += 1;
        let (v, d) = p.eval_with_derivative(x);
        if d.norm() == 0.0 {
            break;
        }
        let step = v / d;
        let next = x - step;
        let res = p.backward_residual(next);
        if !(res < best_res) {
            // accept an equal-residual step only if it is a genuine refinement
            if res == best_res && step.norm() <= cfg.tol * x.norm() {
                best = next;
            }
            break;
        }
        best = next;
        best_res = res;
        x = next;
        if step.norm() <= cfg.tol * x.norm() {
            break;
        }
    }
    Refined { value: best, residual: best_res, improved: best_res < start_res, iterations }
}
