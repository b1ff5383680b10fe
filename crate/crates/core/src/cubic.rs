//! Cardano's formula in complex arithmetic.
//!
//! The two cube-root terms are paired so that their product is `-p/3`; with
//! independently chosen principal branches the sum is generally not a root.
//! The first root comes from the radicals, the other two from deflating it
//! out and solving the remaining quadratic.

use sextica_poly::{ccbrt, csqrt, solve_quadratic, ComplexScalar};

/// Monic cubic `x³ + bx² + cx + d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralCubic {
    pub b: ComplexScalar,
    pub c: ComplexScalar,
    pub d: ComplexScalar,
}

/// Coefficients of the scaled depressed cubic `w³ + Cw + D = 0` reached from
/// a general cubic by `y = (-b + w)/3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CardanoIntermediates {
    /// `C = 9c - 3b²`
    pub linear: ComplexScalar,
    /// `D = 27d + 2b³ - 9cb`
    pub constant: ComplexScalar,
}

impl CardanoIntermediates {
    pub fn of(cubic: &GeneralCubic) -> Self {
        let GeneralCubic { b, c, d } = *cubic;
        Self { linear: 9.0 * c - 3.0 * b * b, constant: 27.0 * d + 2.0 * b * b * b - 9.0 * c * b }
    }
}

/// Roots of a depressed cubic along with the paired cube-root terms that
/// produced the first one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedSolution {
    /// `roots[0]` is the Cardano value, the others come from deflation.
    pub roots: [ComplexScalar; 3],
    /// The two `∛` terms; their product is `-p/3`.
    pub cube_roots: [ComplexScalar; 2],
}

/// All three roots of `w³ + pw + q`.
pub fn solve_depressed_cubic(p: ComplexScalar, q: ComplexScalar) -> DepressedSolution {
    let zero = ComplexScalar::new(0.0, 0.0);
    let half_q = 0.5 * q;
    let third_p = p / 3.0;
    let sq = csqrt(half_q * half_q + third_p * third_p * third_p);
    let plus = -half_q + sq;
    let minus = -half_q - sq;
    // Take the radicand that does not cancel; the sum u + v is symmetric.
    let (first, second) = if plus.norm() >= minus.norm() { (plus, minus) } else { (minus, plus) };

    let u = ccbrt(first);
    let v = if u == zero { ccbrt(second) } else { -third_p / u };
    let w1 = u + v;

    // w³ + pw + q = (w - w₁)(w² + w₁w + w₁² + p); the constant term equals
    // -q/w₁ by Vieta whenever w₁ ≠ 0.
    let tail = if w1 == zero { p } else { -q / w1 };
    let pair = solve_quadratic(ComplexScalar::new(1.0, 0.0), w1, tail)
        .expect("monic quadratic always has a nonzero leading coefficient");
    DepressedSolution { roots: [w1, pair.r1, pair.r2], cube_roots: [u, v] }
}

/// All three roots of a monic cubic; `roots[0]` is the Cardano value.
pub fn solve_cubic(cubic: &GeneralCubic) -> [ComplexScalar; 3] {
    let inter = CardanoIntermediates::of(cubic);
    let w = solve_depressed_cubic(inter.linear, inter.constant);
    w.roots.map(|wi| (wi - cubic.b) / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sextica_poly::{c64, Polynomial, OMEGA};

    fn contains_all(got: &[ComplexScalar], want: &[ComplexScalar], tol: f64) -> bool {
        // multiset comparison by greedy removal; fine for three entries with
        // well-separated or exactly repeated values
        let mut pool = got.to_vec();
        want.iter().all(|w| {
            if let Some(i) = pool.iter().position(|g| (g - w).norm() <= tol) {
                pool.remove(i);
                true
            } else {
                false
            }
        })
    }

    #[test]
    fn depressed_examples() {
        let s = solve_depressed_cubic(c64(-2.0, 0.0), c64(-4.0, 0.0));
        assert!(contains_all(&s.roots, &[c64(2.0, 0.0), c64(-1.0, 1.0), c64(-1.0, -1.0)], 1e-11));

        let s = solve_depressed_cubic(c64(0.0, 0.0), c64(-8.0, 0.0));
        let want = [c64(2.0, 0.0), 2.0 * OMEGA, 2.0 * OMEGA * OMEGA];
        assert!(contains_all(&s.roots, &want, 1e-11));

        let s = solve_depressed_cubic(c64(-3.0, 0.0), c64(2.0, 0.0));
        assert!(contains_all(&s.roots, &[c64(1.0, 0.0), c64(1.0, 0.0), c64(-2.0, 0.0)], 1e-7));
    }

    #[test]
    fn general_examples() {
        let r = solve_cubic(&GeneralCubic { b: c64(-6.0, 0.0), c: c64(11.0, 0.0), d: c64(-6.0, 0.0) });
        assert!(contains_all(&r, &[c64(1.0, 0.0), c64(2.0, 0.0), c64(3.0, 0.0)], 1e-11));

        let r = solve_cubic(&GeneralCubic { b: c64(0.0, 0.0), c: c64(0.0, 0.0), d: c64(-1.0, 0.0) });
        assert!(contains_all(&r, &[c64(1.0, 0.0), OMEGA, OMEGA * OMEGA], 1e-11));

        let r = solve_cubic(&GeneralCubic { b: c64(3.0, 0.0), c: c64(3.0, 0.0), d: c64(1.0, 0.0) });
        assert!(contains_all(&r, &[c64(-1.0, 0.0); 3], 1e-11));
    }

    #[test]
    fn zero_cubic() {
        let s = solve_depressed_cubic(c64(0.0, 0.0), c64(0.0, 0.0));
        assert_eq!(s.roots, [c64(0.0, 0.0); 3]);
    }

    #[test]
    fn intermediates_match_definitions() {
        let cubic = GeneralCubic { b: c64(1.0, 0.0), c: c64(2.0, 0.0), d: c64(3.0, 0.0) };
        let i = CardanoIntermediates::of(&cubic);
        assert_eq!(i.linear, c64(9.0 * 2.0 - 3.0, 0.0));
        assert_eq!(i.constant, c64(27.0 * 3.0 + 2.0 - 18.0, 0.0));
    }

    /// The same root computed by shifting `y = t - b/3` into `t³ + pt + q`
    /// directly, without the factor-3 scaling into `w`.
    fn cardano_via_unscaled_depression(cubic: &GeneralCubic) -> ComplexScalar {
        let GeneralCubic { b, c, d } = *cubic;
        let p = c - b * b / 3.0;
        let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
        solve_depressed_cubic(p, q).roots[0] - b / 3.0
    }

    #[test]
    fn scaled_and_unscaled_depression_agree() {
        let mut rng = crate::test_rng::SeededRng::new(17);
        for _ in 0..2000 {
            let cubic = GeneralCubic { b: rng.complex(10.0), c: rng.complex(10.0), d: rng.complex(10.0) };
            let a = solve_cubic(&cubic)[0];
            let b = cardano_via_unscaled_depression(&cubic);
            let poly = Polynomial::new(vec![c64(1.0, 0.0), cubic.b, cubic.c, cubic.d]).unwrap();
            // both are roots; the branch bookkeeping keeps them the same root
            assert!(poly.backward_residual(a) <= 1e-11);
            assert!((a - b).norm() <= 1e-9 * a.norm().max(1.0), "{a} vs {b}");
        }
    }
}
