//! Square and cube roots with fixed branch conventions, and a quadratic
//! solver that avoids cancellation.

use std::f64::consts::PI;

use crate::{ComplexScalar, PolyError};

/// Primitive cube root of unity `e^{2πi/3}`.
pub const OMEGA: ComplexScalar = ComplexScalar::new(-0.5, 0.866_025_403_784_438_6);

/// Principal square root: non-negative real part, and non-negative imaginary
/// part when the real part is zero. `-1 - 0i` maps to `i`.
pub fn csqrt(z: ComplexScalar) -> ComplexScalar {
    let (x, y) = (z.re, z.im);
    if x == 0.0 && y == 0.0 {
        return ComplexScalar::new(0.0, 0.0);
    }
    let r = x.hypot(y);
    if x >= 0.0 {
        let t = ((r + x) * 0.5).sqrt();
        ComplexScalar::new(t, y / (2.0 * t))
    } else {
        let t = ((r - x) * 0.5).sqrt();
        let im = if y < 0.0 { -t } else { t };
        ComplexScalar::new(y.abs() / (2.0 * t), im)
    }
}

/// Argument in `(-π, π]`, with signed zero imaginary parts folded onto `+π`.
fn arg(z: ComplexScalar) -> f64 {
    if z.im == 0.0 {
        if z.re < 0.0 {
            PI
        } else {
            0.0
        }
    } else {
        z.im.atan2(z.re)
    }
}

/// Principal cube root, argument in `(-π/3, π/3]`.
pub fn ccbrt(z: ComplexScalar) -> ComplexScalar {
    if z.re == 0.0 && z.im == 0.0 {
        return ComplexScalar::new(0.0, 0.0);
    }
    if z.im == 0.0 && z.re > 0.0 {
        return ComplexScalar::new(z.re.cbrt(), 0.0);
    }
    let r = z.norm().cbrt();
    let (s, c) = (arg(z) / 3.0).sin_cos();
    ComplexScalar::new(r * c, r * s)
}

/// All three cube roots, principal first, then rotated by ω and ω².
pub fn ccbrt_all(z: ComplexScalar) -> [ComplexScalar; 3] {
    let p = ccbrt(z);
    [p, p * OMEGA, p * OMEGA.conj()]
}

/// The two roots of a quadratic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootPair {
    pub r1: ComplexScalar,
    pub r2: ComplexScalar,
}

impl RootPair {
    pub fn to_array(self) -> [ComplexScalar; 2] {
        [self.r1, self.r2]
    }
}

/// Roots of `ax² + bx + c`.
///
/// `r1` is the larger-magnitude root `-(b ± √(b²-4ac))/2a` with the sign
/// matched to `b`; `r2 = c/(a·r1)`.
pub fn solve_quadratic(a: ComplexScalar, b: ComplexScalar, c: ComplexScalar) -> Result<RootPair, PolyError> {
    if a.re == 0.0 && a.im == 0.0 {
        return Err(PolyError::DegenerateLeading);
    }
    let sq = csqrt(b * b - 4.0 * a * c);
    // pick the sign that makes |b ± sq| the larger of the two
    let sum = if (b.conj() * sq).re >= 0.0 { b + sq } else { b - sq };
    let q = -0.5 * sum;
    if q.re == 0.0 && q.im == 0.0 {
        let zero = ComplexScalar::new(0.0, 0.0);
        return Ok(RootPair { r1: zero, r2: zero });
    }
    Ok(RootPair { r1: q / a, r2: c / q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use proptest::prelude::*;

    fn close(a: ComplexScalar, b: ComplexScalar, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn csqrt_examples() {
        assert_eq!(csqrt(c64(4.0, 0.0)), c64(2.0, 0.0));
        assert_eq!(csqrt(c64(-1.0, 0.0)), c64(0.0, 1.0));
        assert_eq!(csqrt(c64(-1.0, -0.0)), c64(0.0, 1.0));
        assert_eq!(csqrt(c64(3.0, 4.0)), c64(2.0, 1.0));
        assert_eq!(csqrt(c64(0.0, 0.0)), c64(0.0, 0.0));
        // just below the cut
        assert!(csqrt(c64(-1.0, -1e-300)).im < 0.0);
    }

    #[test]
    fn ccbrt_examples() {
        let [a, b, c] = ccbrt_all(c64(8.0, 0.0));
        assert_eq!(a, c64(2.0, 0.0));
        assert!(close(b, 2.0 * OMEGA, 1e-15));
        assert!(close(c, 2.0 * OMEGA * OMEGA, 1e-15));

        let roots = ccbrt_all(c64(-27.0, 0.0));
        let principal = 3.0 * c64((PI / 3.0).cos(), (PI / 3.0).sin());
        assert!(close(roots[0], principal, 1e-15));
        assert!(roots.iter().any(|&r| close(r, c64(-3.0, 0.0), 1e-15)));

        assert_eq!(ccbrt_all(c64(0.0, 0.0)), [c64(0.0, 0.0); 3]);
    }

    #[test]
    fn ccbrt_principal_argument_range() {
        for k in 0..64 {
            let t = -PI + (k as f64 + 0.5) * 2.0 * PI / 64.0;
            let z = c64(t.cos(), t.sin()) * 5.0;
            let a = ccbrt(z).im.atan2(ccbrt(z).re);
            assert!(a > -PI / 3.0 && a <= PI / 3.0 + 1e-15);
        }
        let neg = ccbrt(c64(-8.0, -0.0));
        assert!(close(neg, 2.0 * c64(0.5, 3f64.sqrt() / 2.0), 1e-15));
    }

    #[test]
    fn quadratic_examples() {
        let p = solve_quadratic(c64(1.0, 0.0), c64(-3.0, 0.0), c64(2.0, 0.0)).unwrap();
        let mut got = [p.r1.re, p.r2.re];
        got.sort_by(f64::total_cmp);
        assert_eq!(got, [1.0, 2.0]);

        let p = solve_quadratic(c64(1.0, 0.0), c64(0.0, 0.0), c64(1.0, 0.0)).unwrap();
        assert!(
            (close(p.r1, c64(0.0, 1.0), 1e-15) && close(p.r2, c64(0.0, -1.0), 1e-15))
                || (close(p.r1, c64(0.0, -1.0), 1e-15) && close(p.r2, c64(0.0, 1.0), 1e-15))
        );

        let p = solve_quadratic(c64(2.0, 0.0), c64(4.0, 0.0), c64(2.0, 0.0)).unwrap();
        assert_eq!((p.r1, p.r2), (c64(-1.0, 0.0), c64(-1.0, 0.0)));

        assert_eq!(
            solve_quadratic(c64(0.0, 0.0), c64(1.0, 0.0), c64(1.0, 0.0)),
            Err(PolyError::DegenerateLeading)
        );
    }

    #[test]
    fn quadratic_avoids_cancellation() {
        // roots 1e8 and 1e-8
        let p = solve_quadratic(c64(1.0, 0.0), c64(-1e8 - 1e-8, 0.0), c64(1.0, 0.0)).unwrap();
        assert!(close(p.r1, c64(1e8, 0.0), 1e-15));
        assert!((p.r2.re - 1e-8).abs() <= 1e-23);
    }

    fn complex_in_annulus() -> impl Strategy<Value = ComplexScalar> {
        (-6.0f64..6.0, -PI..PI).prop_map(|(lg, t)| {
            let r = 10f64.powf(lg);
            c64(r * t.cos(), r * t.sin())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn roots_reproduce_input(z in complex_in_annulus()) {
            let s = csqrt(z);
            prop_assert!((s * s - z).norm() <= 1e-13 * z.norm());
            prop_assert!(s.re >= 0.0);
            for r in ccbrt_all(z) {
                prop_assert!((r * r * r - z).norm() <= 1e-13 * z.norm());
            }
        }

        #[test]
        fn csqrt_commutes_with_conjugation(z in complex_in_annulus()) {
            prop_assume!(!(z.im == 0.0 && z.re < 0.0));
            prop_assert_eq!(csqrt(z.conj()), csqrt(z).conj());
        }

        #[test]
        fn quadratic_vieta(
            a in complex_in_annulus(),
            b in complex_in_annulus(),
            c in complex_in_annulus(),
        ) {
            let p = solve_quadratic(a, b, c).unwrap();
            let sum = p.r1 + p.r2;
            let prod = p.r1 * p.r2;
            let want_sum = -b / a;
            let want_prod = c / a;
            // the sum loses digits only when the roots nearly cancel; measure
            // against the root magnitudes in that case
            let sum_scale = want_sum.norm().max(p.r1.norm().max(p.r2.norm()));
            prop_assert!((sum - want_sum).norm() <= 1e-12 * sum_scale);
            prop_assert!((prod - want_prod).norm() <= 1e-12 * want_prod.norm());
        }
    }

    #[test]
    fn random_sweep_of_roots() {
        // deterministic 10⁵-point sweep over |z| ∈ [1e-6, 1e6]
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..100_000 {
            let r = 10f64.powf(-6.0 + 12.0 * next());
            let t = -PI + 2.0 * PI * next();
            let z = c64(r * t.cos(), r * t.sin());
            let s = csqrt(z);
            assert!((s * s - z).norm() <= 1e-13 * r);
            for c in ccbrt_all(z) {
                assert!((c * c * c - z).norm() <= 1e-13 * r);
            }
        }
    }
}
