//! Quartics through a resolvent cubic.
//!
//! `x = -b/4a + y/4` turns the quartic into `y⁴ + Py² + Qy + R`. Writing
//! `y = ±√y₀ ± √y₁ ± √y₂` with `8√y₀√y₁√y₂ = ∓Q` makes `y₀, y₁, y₂` the roots
//! of `y³ + (P/2)y² + ((P² - 4R)/16)y - Q²/64`.

use sextica_poly::{csqrt, solve_quadratic, ComplexScalar, Polynomial};

use crate::cubic::solve_depressed_cubic;
use crate::SolveError;

/// Default residual above which [`solve_quartic`] tries another seat.
pub const SEAT_RETRY_THRESHOLD: f64 = 1e-9;

fn zero() -> ComplexScalar {
    ComplexScalar::new(0.0, 0.0)
}

fn is_zero(z: ComplexScalar) -> bool {
    z.re == 0.0 && z.im == 0.0
}

/// `y⁴ + Py² + Qy + R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedQuartic {
    pub p: ComplexScalar,
    pub q: ComplexScalar,
    pub r: ComplexScalar,
}

/// A depressed quartic together with the substitution `x = shift + scale·y`
/// that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticReduction {
    pub depressed: DepressedQuartic,
    /// `-b/4a`
    pub shift: ComplexScalar,
    pub scale: f64,
}

impl QuarticReduction {
    pub fn undo(&self, y: ComplexScalar) -> ComplexScalar {
        self.shift + self.scale * y
    }
}

pub fn depress_quartic(p: &Polynomial) -> Result<QuarticReduction, SolveError> {
    p.expect_degree(4)?;
    p.check_leading()?;
    let k = p.coeffs();
    let a = k[0];
    let (b, c, d, e) = (k[1] / a, k[2] / a, k[3] / a, k[4] / a);
    let b2 = b * b;
    let depressed = DepressedQuartic {
        p: -6.0 * b2 + 16.0 * c,
        q: 8.0 * b2 * b - 32.0 * c * b + 64.0 * d,
        r: -3.0 * b2 * b2 + 16.0 * c * b2 - 64.0 * d * b + 256.0 * e,
    };
    crate::error::ensure_finite(&[depressed.p, depressed.q, depressed.r], "depressed quartic")?;
    Ok(QuarticReduction { depressed, shift: -b / 4.0, scale: 0.25 })
}

/// `w³ + Q'w + R'` with `y = (w - P')/3` is the resolvent cubic after
/// depression and scaling by 3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolventCubicCoeffs {
    pub p_prime: ComplexScalar,
    pub q_prime: ComplexScalar,
    pub r_prime: ComplexScalar,
}

impl ResolventCubicCoeffs {
    pub fn of(dq: &DepressedQuartic) -> Self {
        let DepressedQuartic { p, q, r } = *dq;
        Self {
            p_prime: p / 2.0,
            q_prime: -(3.0 * p * p + 36.0 * r) / 16.0,
            r_prime: (-27.0 * q * q - 2.0 * p * p * p + 72.0 * p * r) / 64.0,
        }
    }
}

/// Coefficients `[1, P/2, (P²-4R)/16, -Q²/64]` of the resolvent cubic.
pub fn resolvent_polynomial(dq: &DepressedQuartic) -> Polynomial {
    let DepressedQuartic { p, q, r } = *dq;
    Polynomial::new(vec![ComplexScalar::new(1.0, 0.0), p / 2.0, (p * p - 4.0 * r) / 16.0, -q * q / 64.0])
        .expect("finite depressed coefficients give a finite resolvent")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolventTriple {
    pub y01: ComplexScalar,
    pub y02: ComplexScalar,
    pub y03: ComplexScalar,
}

impl ResolventTriple {
    pub fn to_array(self) -> [ComplexScalar; 3] {
        [self.y01, self.y02, self.y03]
    }
}

/// `y01` is the Cardano value, the other two come from the quadratic
/// `t² + (P/2 + y01)t + Q²/64y01`. That constant term inherits the relative
/// error of `y01`, which is large when `y01` is a small root, so the
/// quotient from deflating the cubic by `y01` is also formed and whichever
/// pair has the smaller resolvent residual is kept.
pub fn resolvent_roots(dq: &DepressedQuartic) -> ResolventTriple {
    let rc = ResolventCubicCoeffs::of(dq);
    let w = solve_depressed_cubic(rc.q_prime, rc.r_prime).roots[0];
    let y01 = (w - rc.p_prime) / 3.0;
    let half = dq.p / 2.0 + y01;
    let one = ComplexScalar::new(1.0, 0.0);
    let deflated = (dq.p * dq.p - 4.0 * dq.r) / 16.0 + y01 * half;
    let mut pair = solve_quadratic(one, half, deflated).expect("monic quadratic");
    if !is_zero(y01) && !is_zero(dq.q) {
        let cubic = resolvent_polynomial(dq);
        let worst =
            |a: ComplexScalar, b: ComplexScalar| cubic.backward_residual(a).max(cubic.backward_residual(b));
        let vieta = solve_quadratic(one, half, dq.q * dq.q / (64.0 * y01)).expect("monic quadratic");
        if worst(vieta.r1, vieta.r2) <= worst(pair.r1, pair.r2) {
            pair = vieta;
        }
    }
    ResolventTriple { y01, y02: pair.r1, y03: pair.r2 }
}

/// Which cases of the assembly produced the roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuarticRegime {
    QNegative,
    QPositive,
    QZero,
    /// `P = Q = R = 0`.
    AllZero,
}

impl QuarticRegime {
    /// Sign of `Q` by its real part, then its imaginary part.
    pub fn of(dq: &DepressedQuartic) -> Self {
        let q = dq.q;
        if is_zero(dq.p) && is_zero(q) && is_zero(dq.r) {
            Self::AllZero
        } else if is_zero(q) {
            Self::QZero
        } else if q.re < 0.0 || (q.re == 0.0 && q.im < 0.0) {
            Self::QNegative
        } else {
            Self::QPositive
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::QNegative => "q_negative",
            Self::QPositive => "q_positive",
            Self::QZero => "q_zero",
            Self::AllZero => "all_zero",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedRoots {
    pub roots: [ComplexScalar; 4],
    /// `√y` for the three seats in seat order; the last is the forced one.
    /// All zero in the `QZero` and `AllZero` regimes when unused.
    pub radicals: [ComplexScalar; 3],
    pub regime: QuarticRegime,
}

/// The four roots of the depressed quartic using the resolvent roots in the
/// order `seat` (indices into the triple).
pub fn assemble_depressed_roots_seated(
    dq: &DepressedQuartic,
    rt: &ResolventTriple,
    seat: [usize; 3],
) -> DepressedRoots {
    let ys = rt.to_array();
    let regime = QuarticRegime::of(dq);
    match regime {
        QuarticRegime::AllZero => DepressedRoots { roots: [zero(); 4], radicals: [zero(); 3], regime },
        QuarticRegime::QZero => {
            // y⁴ + Py² + R = 0: with a nonzero resolvent root y₀ the roots
            // are ±√y₀ ± √(-(P/2 + y₀)). One resolvent root is zero here and
            // may come out as a rounded nonzero, so take the largest.
            let largest =
                seat.iter().map(|&i| ys[i]).fold(zero(), |m, y| if y.norm() > m.norm() { y } else { m });
            match Some(largest).filter(|&y| !is_zero(y)) {
                Some(y0) => {
                    let s0 = csqrt(y0);
                    let s1 = csqrt(-(dq.p / 2.0 + y0));
                    DepressedRoots {
                        roots: [s0 + s1, s0 - s1, -s0 + s1, -s0 - s1],
                        radicals: [s0, s1, zero()],
                        regime,
                    }
                }
                None => {
                    let pair = solve_quadratic(ComplexScalar::new(1.0, 0.0), dq.p, dq.r)
                        .expect("monic quadratic always has a nonzero leading coefficient");
                    let (u, v) = (csqrt(pair.r1), csqrt(pair.r2));
                    DepressedRoots { roots: [u, -u, v, -v], radicals: [zero(); 3], regime }
                }
            }
        }
        QuarticRegime::QNegative | QuarticRegime::QPositive => {
            let r1 = csqrt(ys[seat[0]]);
            let r2 = csqrt(ys[seat[1]]);
            let sign = if regime == QuarticRegime::QNegative { -1.0 } else { 1.0 };
            let r3 = sign * dq.q / (8.0 * r1 * r2);
            let roots = if regime == QuarticRegime::QNegative {
                [r1 + r2 + r3, -r1 - r2 + r3, -r1 + r2 - r3, r1 - r2 - r3]
            } else {
                [-r1 - r2 - r3, -r1 + r2 + r3, r1 - r2 + r3, r1 + r2 - r3]
            };
            DepressedRoots { roots, radicals: [r1, r2, r3], regime }
        }
    }
}

/// [`assemble_depressed_roots_seated`] with `y01` as the first seat.
pub fn assemble_depressed_roots(dq: &DepressedQuartic, rt: &ResolventTriple) -> DepressedRoots {
    assemble_depressed_roots_seated(dq, rt, SEATS[0])
}

/// Seat orders tried by [`solve_quartic`].
pub const SEATS: [[usize; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];

#[derive(Debug, Clone, PartialEq)]
pub struct QuarticSolution {
    pub roots: [ComplexScalar; 4],
    pub reduction: QuarticReduction,
    pub resolvent: ResolventTriple,
    pub assembly: DepressedRoots,
    pub seat: [usize; 3],
    /// Largest relative backward residual among the four roots.
    pub max_residual: f64,
    /// Number of seats assembled before stopping.
    pub attempts: usize,
}

/// Roots of a quartic. Tries the seats in [`SEATS`] order until every root
/// has residual ≤ [`SEAT_RETRY_THRESHOLD`], and keeps the best attempt.
pub fn solve_quartic(p: &Polynomial) -> Result<QuarticSolution, SolveError> {
    let reduction = depress_quartic(p)?;
    let dq = reduction.depressed;
    let resolvent = resolvent_roots(&dq);
    let mut best: Option<QuarticSolution> = None;
    for (k, seat) in SEATS.into_iter().enumerate() {
        let assembly = assemble_depressed_roots_seated(&dq, &resolvent, seat);
        let roots = assembly.roots.map(|y| reduction.undo(y));
        let max_residual = roots
            .iter()
            .map(|&x| {
                let r = p.backward_residual(x);
                if r.is_nan() {
                    f64::INFINITY
                } else {
                    r
                }
            })
            .fold(0.0, f64::max);
        let attempt =
            QuarticSolution { roots, reduction, resolvent, assembly, seat, max_residual, attempts: k + 1 };
        let better = best.as_ref().is_none_or(|b| max_residual < b.max_residual);
        if better {
            best = Some(attempt);
        } else if let Some(b) = best.as_mut() {
            b.attempts = k + 1;
        }
        if best.as_ref().is_some_and(|b| b.max_residual <= SEAT_RETRY_THRESHOLD) {
            break;
        }
    }
    let best = best.expect("at least one seat is always tried");
    crate::error::ensure_finite(&best.roots, "quartic roots")?;
    Ok(best)
}
