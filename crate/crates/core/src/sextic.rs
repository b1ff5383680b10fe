//! Sextic reduction to a quartic in `z`.
//!
//! For a monic sextic `x⁶ + bx⁵ + cx⁴ + dx³ + ex² + fx + g` the pipeline fixes
//! the constant `V = Γ₄/α₃`, solves a cubic in `Γ₄²`, builds the quartic
//! `z⁴ + Γ₃z³ + Γ₂z² + Γ₁z + Γ₀`, maps its roots through `x = (z² - α₁)/2`
//! and closes the last two candidates with a quadratic.
//!
//! Nothing here asserts that the candidates are roots. Every candidate comes
//! back with its backward residual against the input polynomial.
//!
//! `T2` needs `b ≠ 0`. `T3` handles `b = 0` by the shift `w = x + √(-c/15)`,
//! which removes the `x⁴` term and creates an `x⁵` term, then runs the
//! `c`-free formulas.

use sextica_poly::{csqrt, solve_quadratic, ComplexScalar, MonicSextic, Polynomial};

use crate::cubic::{solve_cubic, GeneralCubic};
use crate::error::ensure_finite;
use crate::quartic::{solve_quartic, QuarticRegime, QuarticSolution};
use crate::verify::match_roots;
use crate::SolveError;

fn zero() -> ComplexScalar {
    ComplexScalar::new(0.0, 0.0)
}

fn is_zero(z: ComplexScalar) -> bool {
    z.re == 0.0 && z.im == 0.0
}

fn finite(z: ComplexScalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pipeline {
    T2,
    T3,
}

impl Pipeline {
    pub fn name(self) -> &'static str {
        match self {
            Self::T2 => "t2",
            Self::T3 => "t3",
        }
    }
}

/// How the last two candidates are closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum S56Mode {
    /// `t² + (b - Σsᵢ)t + g/∏sᵢ`, the sum exactly as printed.
    Paper,
    /// `t² + (b + Σsᵢ)t + g/∏sᵢ`, so that all six candidates sum to `-b`.
    #[default]
    Vieta,
}

impl S56Mode {
    pub fn name(self) -> &'static str {
        match self {
            Self::Paper => "paper",
            Self::Vieta => "vieta",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SexticOptions {
    pub s56: S56Mode,
    /// Also run the other two `Γ₄` seats and the negated primary seat.
    pub all_seats: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaSymbols {
    pub a1: ComplexScalar,
    pub a2: ComplexScalar,
    pub a3: ComplexScalar,
    pub a4: ComplexScalar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SexticFlag {
    /// The Cardano root of the `Γ₄²` cubic was zero; a later root was used.
    PrincipalGamma4Zero,
    /// At least one zero root of the `Γ₄²` cubic was dropped.
    Gamma4ZeroExcluded,
    /// The negated seat `-Γ₄,₁` gave a different candidate set.
    SeatAsymmetry,
}

impl SexticFlag {
    pub fn name(self) -> &'static str {
        match self {
            Self::PrincipalGamma4Zero => "principal_gamma4_zero",
            Self::Gamma4ZeroExcluded => "gamma4_zero_excluded",
            Self::SeatAsymmetry => "seat_asymmetry",
        }
    }
}

/// `f - d²/4b`
fn kappa(ms: &MonicSextic) -> ComplexScalar {
    ms.f - ms.d * ms.d / (4.0 * ms.b)
}

/// `V = Γ₄/α₃`. The `T3` form drops the `c` term.
pub fn compute_v(ms: &MonicSextic, pipeline: Pipeline) -> Result<ComplexScalar, SolveError> {
    let MonicSextic { b, c, d, e, f, .. } = *ms;
    if is_zero(b) {
        return Err(SolveError::ZeroQuinticCoefficient);
    }
    let k = kappa(ms);
    if is_zero(k) {
        return Err(SolveError::DegenerateV);
    }
    let b2 = b * b;
    let b3 = b2 * b;
    let mut num = 32.0 * f / b2 + 40.0 * d * d / b3 + 64.0 * e / b;
    if pipeline == Pipeline::T2 {
        num -= 64.0 * c * d / b2;
    }
    let v = -num * b / (4.0 * k);
    ensure_finite(&[v], "V")?;
    if is_zero(v) {
        return Err(SolveError::DegenerateV);
    }
    Ok(v)
}

/// `(λ₃, λ₂, λ₁, λ₀)` of `λ₃Γ₄⁶ + λ₂Γ₄⁴ + λ₁Γ₄² + λ₀ = 0`.
pub fn lambda_coeffs(ms: &MonicSextic, v: ComplexScalar) -> [ComplexScalar; 4] {
    let MonicSextic { b, c, d, e, f, g } = *ms;
    let (b2, v2) = (b * b, v * v);
    let (b3, b4) = (b2 * b, b2 * b2);
    let l3 = -40960.0 / (v2 * v2 * b4) + 16384.0 / (v2 * v * b3) - 1536.0 / (v2 * b2);
    let l2 = -24576.0 * d / (v2 * b4) + 16384.0 * c / (v2 * b3) + 3072.0 * d / (v * b3)
        - 2048.0 * c / (v * b2)
        + 1024.0 / v;
    let l1 = -512.0 * d / b + 1536.0 * f / b3 + 28.0 * v2 * f / b - 7.0 * v2 * d * d / b2 + 96.0 * v * f / b2
        - 168.0 * d * d * v / b3
        + 192.0 * c * d * v / b2
        - 192.0 * v * e / b
        - 3456.0 * d * d / b4
        + 4096.0 * c * d / b3
        - 1024.0 * e / b2
        - 1024.0 * c * c / b2;
    let l0 = -64.0 * v2 * d * d * d / b4 + 64.0 * c * d * d * v2 / b3 - 64.0 * e * v2 * d / b2
        + 128.0 * v2 * g / b
        + 192.0 * v2 * d * f / b3
        - 128.0 * v2 * c * f / b2;
    [l3, l2, l1, l0]
}

/// `(β₃, β₂, β₁, β₀)`, the `c`-free counterpart of [`lambda_coeffs`].
pub fn beta_coeffs(ms: &MonicSextic, v: ComplexScalar) -> [ComplexScalar; 4] {
    let MonicSextic { b, d, e, f, g, .. } = *ms;
    let (b2, v2) = (b * b, v * v);
    let (b3, b4) = (b2 * b, b2 * b2);
    let b3_ = -40960.0 / (v2 * v2 * b4) + 16384.0 / (v2 * v * b3) - 1536.0 / (v2 * b2);
    let b2_ = -24576.0 * d / (v2 * b4) + 3072.0 * d / (v * b3) + 1024.0 / v;
    let b1_ = -512.0 * d / b + 1536.0 * f / b3 + 28.0 * v2 * f / b - 7.0 * v2 * d * d / b2
        + 96.0 * v * f / b2
        - 168.0 * d * d * v / b3
        - 192.0 * v * e / b
        - 3456.0 * d * d / b4
        - 1024.0 * e / b2;
    let b0_ =
        -64.0 * v2 * d * d * d / b4 - 64.0 * e * v2 * d / b2 + 128.0 * v2 * g / b + 192.0 * v2 * d * f / b3;
    [b3_, b2_, b1_, b0_]
}

pub fn gamma4_equation_coeffs(
    ms: &MonicSextic,
    v: ComplexScalar,
    pipeline: Pipeline,
) -> Result<[ComplexScalar; 4], SolveError> {
    if is_zero(ms.b) {
        return Err(SolveError::ZeroQuinticCoefficient);
    }
    if is_zero(v) {
        return Err(SolveError::DegenerateV);
    }
    let coeffs = match pipeline {
        Pipeline::T2 => lambda_coeffs(ms, v),
        Pipeline::T3 => beta_coeffs(ms, v),
    };
    ensure_finite(&coeffs, "Γ₄ equation coefficients")?;
    if is_zero(coeffs[0]) {
        return Err(SolveError::DegenerateLeading);
    }
    Ok(coeffs)
}

/// Relative backward residual of `γ` in `λ₃γ⁶ + λ₂γ⁴ + λ₁γ² + λ₀`.
pub fn gamma4_residual(coeffs: &[ComplexScalar; 4], gamma: ComplexScalar) -> f64 {
    let u = gamma * gamma;
    let au = u.norm();
    let mut value = zero();
    let mut scale = 0.0;
    for &c in coeffs {
        value = value * u + c;
        scale = scale * au + c.norm();
    }
    value.norm() / scale.max(f64::MIN_POSITIVE)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Gamma4Roots {
    /// Roots of the cubic in `Γ₄²`, Cardano value first.
    pub squares: [ComplexScalar; 3],
    /// Index into `squares` of the seat used for the primary run.
    pub primary_index: usize,
    pub primary: ComplexScalar,
    /// `{Γ₄,ᵢ} ∪ {-Γ₄,ᵢ}` over the nonzero squares.
    pub group: Vec<ComplexScalar>,
    pub principal_was_zero: bool,
    pub zeros_excluded: usize,
}

/// Solves the cubic in `Γ₄²` and takes principal square roots. Zero roots
/// are dropped.
pub fn solve_gamma4(coeffs: &[ComplexScalar; 4]) -> Result<Gamma4Roots, SolveError> {
    let [l3, l2, l1, l0] = *coeffs;
    if is_zero(l3) {
        return Err(SolveError::DegenerateLeading);
    }
    let squares = solve_cubic(&GeneralCubic { b: l2 / l3, c: l1 / l3, d: l0 / l3 });
    ensure_finite(&squares, "Γ₄² roots")?;
    let primary_index = squares.iter().position(|&u| !is_zero(u)).ok_or(SolveError::AllGamma4Zero)?;
    let roots: Vec<ComplexScalar> = squares.iter().filter(|&&u| !is_zero(u)).map(|&u| csqrt(u)).collect();
    let group = roots.iter().copied().chain(roots.iter().map(|&r| -r)).collect();
    Ok(Gamma4Roots {
        squares,
        primary_index,
        primary: csqrt(squares[primary_index]),
        group,
        principal_was_zero: primary_index != 0,
        zeros_excluded: 3 - roots.len(),
    })
}

/// `α₁` for a given `Γ₄`.
pub fn alpha1(ms: &MonicSextic, v: ComplexScalar, gamma: ComplexScalar, pipeline: Pipeline) -> ComplexScalar {
    let MonicSextic { b, c, d, .. } = *ms;
    let (b2, v2) = (b * b, v * v);
    let g2 = gamma * gamma;
    let g4 = g2 * g2;
    let mut num = g4 + 32.0 * g4 / (v2 * b2) - 8.0 * g4 / (v * b) + 12.0 * d * g2 / b2 - v2 * kappa(ms) / b;
    if pipeline == Pipeline::T2 {
        num -= 8.0 * c * g2 / b;
    }
    num / (4.0 * g2)
}

fn z_coeffs_t2(
    ms: &MonicSextic,
    v: ComplexScalar,
    gm: ComplexScalar,
    a3: ComplexScalar,
) -> [ComplexScalar; 4] {
    let MonicSextic { b, c, d, e, g, .. } = *ms;
    let k = kappa(ms);
    let (b2, v2, g2) = (b * b, v * v, gm * gm);
    let (b3, b4, g3) = (b2 * b, b2 * b2, g2 * gm);
    let g4 = g2 * g2;
    let gamma3 = 4.0 * a3 / b + gm;
    let gamma2 =
        8.0 * g2 / (v * b) - 6.0 * d / b2 + 4.0 * c / b + k * v2 / (2.0 * b * g2) - 8.0 * g2 / (v2 * b2);
    let gamma1 = 5.0 * g3 / (v * b) + 3.0 * v * d * d / (4.0 * b3 * gm) - 6.0 * d * gm / b2
        + 4.0 * c * gm / b
        - d * c * v / (b2 * gm)
        + e * v / (b * gm)
        - g3 / 4.0
        - 8.0 * g3 / (v2 * b2)
        + k * v2 / (4.0 * gm * b);
    let left = g2 / 4.0 + v2 * k / (4.0 * b * g2);
    let right = g2 / 4.0 + 8.0 * g2 / (v2 * b2) - 2.0 * g2 / (v * b) + 3.0 * d / b2
        - 2.0 * c / b
        - k * v2 / (4.0 * b * g2);
    let gamma0 = g4 / (2.0 * v * b) - v2 * d * d * d / (16.0 * b4 * g2) + 3.0 * v * d * d / (8.0 * b3)
        - 3.0 * d * g2 / (4.0 * b2)
        + c * g2 / (2.0 * b)
        + c * d * d * v2 / (8.0 * b3 * g2)
        - c * d * v / (2.0 * b2)
        + e * v / (2.0 * b)
        - e * v2 * d / (4.0 * b2 * g2)
        + g * v2 / (2.0 * b * g2)
        - left * right;
    [gamma3, gamma2, gamma1, gamma0]
}

fn z_coeffs_t3(
    ms: &MonicSextic,
    v: ComplexScalar,
    y: ComplexScalar,
    a3: ComplexScalar,
) -> [ComplexScalar; 4] {
    let MonicSextic { b, d, e, g, .. } = *ms;
    let k = kappa(ms);
    let (b2, v2, y2) = (b * b, v * v, y * y);
    let (b3, b4, y3) = (b2 * b, b2 * b2, y2 * y);
    let y4 = y2 * y2;
    let y3_ = 4.0 * a3 / b + y;
    let y2_ = 8.0 * y2 / (v * b) - 6.0 * d / b2 + k * v2 / (2.0 * b * y2) - 8.0 * y2 / (v2 * b2);
    let y1_ = 5.0 * y3 / (v * b) + 3.0 * v * d * d / (4.0 * b3 * y) - 6.0 * d * y / b2 + e * v / (b * y)
        - y3 / 4.0
        - 8.0 * y3 / (v2 * b2)
        + k * v2 / (4.0 * y * b);
    let left = y2 / 4.0 + v2 * k / (4.0 * b * y2);
    let right = y2 / 4.0 + 8.0 * y2 / (v2 * b2) - 2.0 * y2 / (v * b) + 3.0 * d / b2 - k * v2 / (4.0 * b * y2);
    let y0_ = y4 / (2.0 * v * b) - v2 * d * d * d / (16.0 * b4 * y2) + 3.0 * v * d * d / (8.0 * b3)
        - 3.0 * d * y2 / (4.0 * b2)
        + e * v / (2.0 * b)
        - e * v2 * d / (4.0 * b2 * y2)
        + g * v2 / (2.0 * b * y2)
        - left * right;
    [y3_, y2_, y1_, y0_]
}

/// `1024α₂` and `2048α₄` for `T2`, kept for diagnostics.
fn alpha24_t2(
    ms: &MonicSextic,
    v: ComplexScalar,
    gm: ComplexScalar,
    a1: ComplexScalar,
    a3: ComplexScalar,
    gamma3: ComplexScalar,
) -> (ComplexScalar, ComplexScalar) {
    let MonicSextic { b, c, d, e, f, .. } = *ms;
    let k = kappa(ms);
    let (b2, v2, g2) = (b * b, v * v, gm * gm);
    let (b3, b4, g4) = (b2 * b, b2 * b2, g2 * g2);
    let (v3, v4) = (v2 * v, v2 * v2);
    let a2 = 1024.0 * g2 / v - 512.0 * d / b - 6144.0 * g4 / (v4 * b4)
        + 3072.0 * g4 / (v3 * b3)
        + 384.0 * g4 / (v2 * b2)
        - 4608.0 * d * g2 / (v2 * b4)
        - 1536.0 * g2 * a1 / (v2 * b2)
        + 3072.0 * c * g2 / (v2 * b3)
        + 384.0 * f / b3
        + 96.0 * v * k / b2
        - 672.0 * d * d / b4
        + 768.0 * c * d / b3
        - 768.0 * e / b2
        - 192.0 * g4 / (v * b)
        + 96.0 * f * v / b2
        + 288.0 * d * g2 / b2
        + 96.0 * g2 * a1
        - 192.0 * c * g2 / b
        + 24.0 * v2 * k / b
        - 168.0 * d * d * v / b3
        + 192.0 * c * d * v / b2
        - 192.0 * e * v / b;
    let t2 = gamma3 * gamma3;
    let a4 = -32.0 * t2 * a1 - 8.0 * t2 * (e - c * c / 4.0) / (a3 * a3) + 64.0 * gamma3 * d / a3;
    (a2 / 1024.0, a4 / 2048.0)
}

/// `1024α₂` and `2048α₄` for `T3`, kept for diagnostics.
fn alpha24_t3(
    ms: &MonicSextic,
    v: ComplexScalar,
    y: ComplexScalar,
    a1: ComplexScalar,
) -> (ComplexScalar, ComplexScalar) {
    let MonicSextic { b, d, e, f, .. } = *ms;
    let k = kappa(ms);
    let (b2, v2, y2) = (b * b, v * v, y * y);
    let (b3, b4, y4) = (b2 * b, b2 * b2, y2 * y2);
    let (v3, v4) = (v2 * v, v2 * v2);
    let a4 = 2048.0 * y4 / (v4 * b4) - 1024.0 * y4 / (v3 * b3) - 128.0 * y4 / (v2 * b2)
        + 1536.0 * d * y2 / (v2 * b4)
        + 512.0 * y2 * a1 / (v2 * b2)
        - 128.0 * f / b3
        - 32.0 * v * k / b2
        + 224.0 * d * d / b4
        + 256.0 * e / b2
        + 64.0 * y4 / (v * b)
        - 32.0 * f * v / b2
        - 96.0 * d * y2 / b2
        - 32.0 * y2 * a1
        - 8.0 * v2 * k / b
        + 56.0 * d * d * v / b3
        + 64.0 * e * v / b;
    let a2 = 1024.0 * y2 / v - 512.0 * d / b - 6144.0 * y4 / (v4 * b4)
        + 3072.0 * y4 / (v3 * b3)
        + 384.0 * y4 / (v2 * b2)
        - 4608.0 * d * y2 / (v2 * b4)
        - 1536.0 * y2 * a1 / (v2 * b2)
        + 384.0 * f / b3
        + 96.0 * v * k / b2
        - 672.0 * d * d / b4
        - 768.0 * e / b2
        - 192.0 * y4 / (v * b)
        + 96.0 * f * v / b2
        + 288.0 * d * y2 / b2
        + 96.0 * y2 * a1
        + 24.0 * v2 * k / b
        - 168.0 * d * d * v / b3
        - 192.0 * e * v / b;
    (a2 / 1024.0, a4 / 2048.0)
}

/// `(Γ₃, Γ₂, Γ₁, Γ₀)` (or the `Y` coefficients for `T3`) and the α symbols
/// for one value of `Γ₄`.
pub fn quartic_in_z_coeffs(
    ms: &MonicSextic,
    v: ComplexScalar,
    gamma4: ComplexScalar,
    pipeline: Pipeline,
) -> Result<([ComplexScalar; 4], AlphaSymbols), SolveError> {
    if is_zero(ms.b) {
        return Err(SolveError::ZeroQuinticCoefficient);
    }
    if is_zero(v) {
        return Err(SolveError::DegenerateV);
    }
    if is_zero(gamma4) {
        return Err(SolveError::DegenerateGamma4);
    }
    let a3 = gamma4 / v;
    let a1 = alpha1(ms, v, gamma4, pipeline);
    let (coeffs, (a2, a4)) = match pipeline {
        Pipeline::T2 => {
            let c = z_coeffs_t2(ms, v, gamma4, a3);
            (c, alpha24_t2(ms, v, gamma4, a1, a3, c[0]))
        }
        Pipeline::T3 => (z_coeffs_t3(ms, v, gamma4, a3), alpha24_t3(ms, v, gamma4, a1)),
    };
    if !coeffs.iter().chain([&a1, &a3]).all(|&z| finite(z)) {
        return Err(SolveError::DegenerateGamma4);
    }
    Ok((coeffs, AlphaSymbols { a1, a2, a3, a4 }))
}

/// `s₅, s₆` from `s₁..s₄`. The pair comes from the cancellation-free
/// quadratic solver; `s₅` is whichever root lies closer to the `-h - √`
/// branch of the printed formula.
pub fn close_candidates(
    s: &[ComplexScalar; 4],
    b: ComplexScalar,
    g: ComplexScalar,
    mode: S56Mode,
) -> Result<[ComplexScalar; 2], SolveError> {
    let prod = s[0] * s[1] * s[2] * s[3];
    if is_zero(prod) {
        return Err(SolveError::ZeroCandidateProduct);
    }
    let sum = s[0] + s[1] + s[2] + s[3];
    let linear = match mode {
        S56Mode::Paper => b - sum,
        S56Mode::Vieta => b + sum,
    };
    let tail = g / prod;
    ensure_finite(&[linear, tail], "s₅/s₆ quadratic")?;
    let pair = solve_quadratic(ComplexScalar::new(1.0, 0.0), linear, tail)?;
    let h = linear / 2.0;
    let naive = -h - csqrt(h * h - tail);
    if (pair.r1 - naive).norm() <= (pair.r2 - naive).norm() {
        Ok([pair.r1, pair.r2])
    } else {
        Ok([pair.r2, pair.r1])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CandidateSet {
    /// `s₁..s₆`, in the coordinates of the input polynomial.
    pub values: [ComplexScalar; 6],
    /// The four roots `ξ` of the quartic in `z`.
    pub group_values: [ComplexScalar; 4],
    pub provenance: [&'static str; 6],
    pub s56: S56Mode,
}

const PROVENANCE: [&str; 6] = ["xi1", "xi2", "xi3", "xi4", "s56_minus", "s56_plus"];

/// One seat run through the quartic and the closing quadratic.
#[derive(Debug, Clone, PartialEq)]
struct SeatOutcome {
    coeffs: [ComplexScalar; 4],
    alphas: AlphaSymbols,
    quartic: QuarticSolution,
    /// In the reduced coordinates, before undoing any shift.
    values: [ComplexScalar; 6],
}

fn run_seat(
    ms: &MonicSextic,
    v: ComplexScalar,
    gamma4: ComplexScalar,
    pipeline: Pipeline,
    mode: S56Mode,
) -> Result<SeatOutcome, SolveError> {
    let (coeffs, alphas) = quartic_in_z_coeffs(ms, v, gamma4, pipeline)?;
    let one = ComplexScalar::new(1.0, 0.0);
    let zq = Polynomial::new(vec![one, coeffs[0], coeffs[1], coeffs[2], coeffs[3]])
        .map_err(|_| SolveError::DegenerateGamma4)?;
    let quartic = solve_quartic(&zq)?;
    let s = quartic.roots.map(|xi| (xi * xi - alphas.a1) / 2.0);
    ensure_finite(&s, "s₁..s₄")?;
    let [s5, s6] = close_candidates(&s, ms.b, ms.g, mode)?;
    Ok(SeatOutcome { coeffs, alphas, quartic, values: [s[0], s[1], s[2], s[3], s5, s6] })
}

/// One row of the `T3` shift comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossCheckRow {
    pub coefficient: &'static str,
    pub taylor: ComplexScalar,
    pub printed: ComplexScalar,
}

impl CrossCheckRow {
    pub fn discrepancy(&self) -> f64 {
        (self.taylor - self.printed).norm()
    }
}

/// Coefficients after the `T3` shift from the Taylor shift next to the
/// closed-form expansions.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftCrossCheck {
    pub shift: ComplexScalar,
    pub rows: Vec<CrossCheckRow>,
}

impl ShiftCrossCheck {
    pub fn max_discrepancy(&self) -> f64 {
        self.rows.iter().map(CrossCheckRow::discrepancy).fold(0.0, f64::max)
    }

    pub fn row(&self, name: &str) -> Option<&CrossCheckRow> {
        self.rows.iter().find(|r| r.coefficient == name)
    }
}

/// Compares the shifted coefficients with the printed expansions, which for
/// `x⁶ + Cx⁴ + Dx³ + Ex² + Fx + G` and `s² = -C/15` read
///
/// ```text
/// b = 6s
/// d = 8Cs/3 + D
/// e = -C²/3 + 3Ds + E
/// f = -18C²s/5 - DC/5 + 2Es + F
/// g = -16C³/3375 - DCs/15 - EC/15 + Fs + G
/// ```
pub fn t3_crosscheck(monic: &MonicSextic, s: ComplexScalar, shifted: &MonicSextic) -> ShiftCrossCheck {
    let MonicSextic { c, d, e, f, g, .. } = *monic;
    let c2 = c * c;
    let rows = vec![
        CrossCheckRow { coefficient: "b", taylor: shifted.b, printed: 6.0 * s },
        CrossCheckRow { coefficient: "c", taylor: shifted.c, printed: zero() },
        CrossCheckRow { coefficient: "d", taylor: shifted.d, printed: 8.0 * c * s / 3.0 + d },
        CrossCheckRow { coefficient: "e", taylor: shifted.e, printed: -c2 / 3.0 + 3.0 * d * s + e },
        CrossCheckRow {
            coefficient: "f",
            taylor: shifted.f,
            printed: -18.0 * c2 * s / 5.0 - d * c / 5.0 + 2.0 * e * s + f,
        },
        CrossCheckRow {
            coefficient: "g",
            taylor: shifted.g,
            printed: -16.0 * c2 * c / 3375.0 - d * c * s / 15.0 - e * c / 15.0 + f * s + g,
        },
    ];
    ShiftCrossCheck { shift: s, rows }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SexticReduction {
    pub pipeline: Pipeline,
    /// The monic sextic the formulas ran on (after the shift for `T3`).
    pub reduced: MonicSextic,
    pub v: ComplexScalar,
    pub gamma4: ComplexScalar,
    pub gamma4_all: Vec<ComplexScalar>,
    pub gamma4_squares: [ComplexScalar; 3],
    pub lambda_or_beta: [ComplexScalar; 4],
    pub quartic_coeffs: [ComplexScalar; 4],
    pub alphas: AlphaSymbols,
    pub shift: ComplexScalar,
    pub quartic_regime: QuarticRegime,
    pub quartic_residual: f64,
    pub flags: Vec<SexticFlag>,
}

/// A non-primary seat from the all-seats mode.
#[derive(Debug, Clone, PartialEq)]
pub struct SeatRun {
    pub label: &'static str,
    pub gamma4: ComplexScalar,
    /// Candidates in input coordinates, or the reason the seat stopped.
    pub outcome: Result<[ComplexScalar; 6], SolveError>,
    /// Largest distance from a candidate here to its partner among the
    /// primary candidates under the optimal pairing.
    pub distance_to_primary: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SexticRun {
    pub reduction: SexticReduction,
    pub candidates: CandidateSet,
    /// Backward residual of each candidate against the input polynomial.
    pub residuals: [f64; 6],
    pub crosscheck: Option<ShiftCrossCheck>,
    pub seats: Vec<SeatRun>,
}

/// The values a report needs to debug a run.
#[derive(Debug, Clone, PartialEq)]
pub struct SexticIntermediates {
    pub pipeline: Pipeline,
    pub v: ComplexScalar,
    pub gamma4: ComplexScalar,
    pub gamma4_all: Vec<ComplexScalar>,
    pub lambda_or_beta: [ComplexScalar; 4],
    pub quartic_coeffs: [ComplexScalar; 4],
    pub alphas: AlphaSymbols,
    pub shift: ComplexScalar,
    pub group_values: [ComplexScalar; 4],
}

impl SexticRun {
    pub fn intermediates(&self) -> SexticIntermediates {
        let r = &self.reduction;
        SexticIntermediates {
            pipeline: r.pipeline,
            v: r.v,
            gamma4: r.gamma4,
            gamma4_all: r.gamma4_all.clone(),
            lambda_or_beta: r.lambda_or_beta,
            quartic_coeffs: r.quartic_coeffs,
            alphas: r.alphas,
            shift: r.shift,
            group_values: self.candidates.group_values,
        }
    }

    pub fn has_flag(&self, flag: SexticFlag) -> bool {
        self.reduction.flags.contains(&flag)
    }
}

fn run_reduced(
    original: &Polynomial,
    ms: &MonicSextic,
    shift: ComplexScalar,
    pipeline: Pipeline,
    opts: &SexticOptions,
) -> Result<SexticRun, SolveError> {
    let v = compute_v(ms, pipeline)?;
    let lambda = gamma4_equation_coeffs(ms, v, pipeline)?;
    let g4 = solve_gamma4(&lambda)?;
    let primary = run_seat(ms, v, g4.primary, pipeline, opts.s56)?;

    let mut flags = Vec::new();
    if g4.principal_was_zero {
        flags.push(SexticFlag::PrincipalGamma4Zero);
    }
    if g4.zeros_excluded > 0 {
        flags.push(SexticFlag::Gamma4ZeroExcluded);
    }

    let values = primary.values.map(|x| x + shift);
    let residuals = values.map(|x| original.backward_residual(x));

    let mut seats = Vec::new();
    if opts.all_seats {
        let scale = values.iter().fold(1.0f64, |m, x| m.max(x.norm()));
        let mut others: Vec<(&'static str, ComplexScalar)> = Vec::new();
        const LABELS: [&str; 3] = ["gamma4_1", "gamma4_2", "gamma4_3"];
        for (i, &u) in g4.squares.iter().enumerate() {
            if i != g4.primary_index && !is_zero(u) {
                others.push((LABELS[i], csqrt(u)));
            }
        }
        others.push(("negated_primary", -g4.primary));
        for (label, gamma) in others {
            let outcome = run_seat(ms, v, gamma, pipeline, opts.s56).map(|o| o.values.map(|x| x + shift));
            let distance_to_primary =
                outcome.as_ref().ok().map(|vals| match_roots(vals, &values).max_distance);
            if label == "negated_primary" && distance_to_primary.is_none_or(|d| !(d <= 1e-6 * scale)) {
                flags.push(SexticFlag::SeatAsymmetry);
            }
            seats.push(SeatRun { label, gamma4: gamma, outcome, distance_to_primary });
        }
    }

    Ok(SexticRun {
        reduction: SexticReduction {
            pipeline,
            reduced: *ms,
            v,
            gamma4: g4.primary,
            gamma4_all: g4.group,
            gamma4_squares: g4.squares,
            lambda_or_beta: lambda,
            quartic_coeffs: primary.coeffs,
            alphas: primary.alphas,
            shift,
            quartic_regime: primary.quartic.assembly.regime,
            quartic_residual: primary.quartic.max_residual,
            flags,
        },
        candidates: CandidateSet {
            values,
            group_values: primary.quartic.roots,
            provenance: PROVENANCE,
            s56: opts.s56,
        },
        residuals,
        crosscheck: None,
        seats,
    })
}

/// `T2`: needs a nonzero `x⁵` coefficient after monic reduction.
pub fn solve_sextic_t2(p: &Polynomial, opts: &SexticOptions) -> Result<SexticRun, SolveError> {
    p.check_leading()?;
    let ms = MonicSextic::from_polynomial(p)?;
    if is_zero(ms.b) {
        return Err(SolveError::ZeroQuinticCoefficient);
    }
    run_reduced(p, &ms, zero(), Pipeline::T2, opts)
}

/// `T3`: needs a zero `x⁵` coefficient and a nonzero `x⁴` coefficient.
pub fn solve_sextic_t3(p: &Polynomial, opts: &SexticOptions) -> Result<SexticRun, SolveError> {
    p.check_leading()?;
    let monic = p.make_monic()?;
    let ms = MonicSextic::from_polynomial(&monic)?;
    if !is_zero(ms.b) {
        return Err(SolveError::NonzeroQuinticCoefficient);
    }
    if is_zero(ms.c) {
        return Err(SolveError::DegenerateShift);
    }
    let s = csqrt(-ms.c / 15.0);
    let shifted = MonicSextic::from_polynomial(&monic.shift(s))?;
    ensure_finite(&shifted.to_polynomial().coeffs()[1..], "shifted sextic")?;
    let crosscheck = t3_crosscheck(&ms, s, &shifted);
    let mut run = run_reduced(p, &shifted, s, Pipeline::T3, opts)?;
    run.crosscheck = Some(crosscheck);
    Ok(run)
}

/// The `T3` cross-check on its own, for reports that stop before the
/// pipeline completes.
pub fn t3_crosscheck_for(p: &Polynomial) -> Option<ShiftCrossCheck> {
    let monic = p.make_monic().ok()?;
    let ms = MonicSextic::from_polynomial(&monic).ok()?;
    if !is_zero(ms.b) || is_zero(ms.c) {
        return None;
    }
    let s = csqrt(-ms.c / 15.0);
    let shifted = MonicSextic::from_polynomial(&monic.shift(s)).ok()?;
    Some(t3_crosscheck(&ms, s, &shifted))
}

/// Routes to `T2` when the monic `x⁵` coefficient is nonzero, to `T3` when
/// it is zero and the `x⁴` coefficient is not. Otherwise returns
/// `PipelineInapplicable` carrying the oracle roots.
pub fn solve_sextic(p: &Polynomial, opts: &SexticOptions) -> Result<SexticRun, SolveError> {
    p.check_leading()?;
    let ms = MonicSextic::from_polynomial(p)?;
    if !is_zero(ms.b) {
        solve_sextic_t2(p, opts)
    } else if !is_zero(ms.c) {
        solve_sextic_t3(p, opts)
    } else {
        let rep = sextica_oracle::find_roots(p, &sextica_oracle::OracleConfig::default())
            .map_err(|_| SolveError::NonFinite("oracle"))?;
        Err(SolveError::PipelineInapplicable { oracle_roots: rep.roots })
    }
}
