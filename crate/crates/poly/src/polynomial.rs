use std::fmt;

use crate::{is_finite, ComplexScalar, PolyError};

/// A dense polynomial, leading coefficient first.
///
/// `degree() == coeffs().len() - 1`. A zero leading coefficient is allowed in
/// storage (so callers can report it), but every solve path rejects it.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<ComplexScalar>,
}

/// Result of a Horner evaluation together with the backward-error scale
/// `Σ |aₖ| |x|^k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: ComplexScalar,
    pub scale: f64,
}

impl Polynomial {
    /// Builds a polynomial from coefficients, highest degree first.
    pub fn new(coeffs: Vec<ComplexScalar>) -> Result<Self, PolyError> {
        if coeffs.is_empty() {
            return Err(PolyError::Empty);
        }
        if let Some(index) = coeffs.iter().position(|&c| !is_finite(c)) {
            return Err(PolyError::NonFinite { index });
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self, PolyError> {
        Self::new(coeffs.iter().map(|&c| ComplexScalar::new(c, 0.0)).collect())
    }

    /// Monic polynomial whose roots are exactly `roots` (with multiplicity),
    /// built by multiplying in one linear factor at a time.
    pub fn from_roots(roots: &[ComplexScalar]) -> Result<Self, PolyError> {
        if roots.is_empty() {
            return Err(PolyError::Empty);
        }
        let mut coeffs = Vec::with_capacity(roots.len() + 1);
        coeffs.push(ComplexScalar::new(1.0, 0.0));
        for &r in roots {
            // (c₀xⁿ + ... + cₙ)(x - r)
            coeffs.push(ComplexScalar::new(0.0, 0.0));
            for k in (1..coeffs.len()).rev() {
                let prev = coeffs[k - 1];
                coeffs[k] -= r * prev;
            }
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[ComplexScalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> ComplexScalar {
        self.coeffs[0]
    }

    /// Coefficient of `x^power`.
    pub fn coeff_of(&self, power: usize) -> ComplexScalar {
        self.coeffs[self.degree() - power]
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == ComplexScalar::new(1.0, 0.0)
    }

    pub fn has_real_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.im == 0.0)
    }

    /// Rejects a zero leading coefficient.
    pub fn check_leading(&self) -> Result<(), PolyError> {
        if self.leading().norm() == 0.0 {
            Err(PolyError::ZeroLeadingCoefficient)
        } else {
            Ok(())
        }
    }

    pub fn expect_degree(&self, expected: usize) -> Result<(), PolyError> {
        if self.degree() != expected {
            return Err(PolyError::WrongDegree { expected, actual: self.degree() });
        }
        Ok(())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: ComplexScalar) -> ComplexScalar {
        self.coeffs.iter().fold(ComplexScalar::new(0.0, 0.0), |acc, &c| acc * x + c)
    }

    /// Horner evaluation that also accumulates `Σ |aₖ| |x|^k`.
    pub fn eval_with_scale(&self, x: ComplexScalar) -> Evaluation {
        let ax = x.norm();
        let mut value = ComplexScalar::new(0.0, 0.0);
        let mut scale = 0.0;
        for &c in &self.coeffs {
            value = value * x + c;
            scale = scale * ax + c.norm();
        }
        Evaluation { value, scale }
    }

    /// Value and first derivative at `x`.
    pub fn eval_with_derivative(&self, x: ComplexScalar) -> (ComplexScalar, ComplexScalar) {
        let zero = ComplexScalar::new(0.0, 0.0);
        let mut value = zero;
        let mut deriv = zero;
        for &c in &self.coeffs {
            deriv = deriv * x + value;
            value = value * x + c;
        }
        (value, deriv)
    }

    /// Relative backward error `|p(x)| / Σ|aₖ||x|^k`, with the denominator
    /// floored at the smallest positive normal double.
    pub fn backward_residual(&self, x: ComplexScalar) -> f64 {
        let ev = self.eval_with_scale(x);
        ev.value.norm() / ev.scale.max(f64::MIN_POSITIVE)
    }

    /// Divides every coefficient by the leading one.
    pub fn make_monic(&self) -> Result<Self, PolyError> {
        self.check_leading()?;
        let lead = self.leading();
        let mut coeffs: Vec<_> = self.coeffs.iter().map(|&c| c / lead).collect();
        coeffs[0] = ComplexScalar::new(1.0, 0.0);
        Self::new(coeffs)
    }

    /// Returns `q` with `q(x) = p(x + s)` (Taylor shift by repeated synthetic
    /// division).
    pub fn shift(&self, s: ComplexScalar) -> Self {
        let mut c = self.coeffs.clone();
        let n = self.degree();
        for k in 0..n {
            for j in 1..=(n - k) {
                let prev = c[j - 1];
                c[j] += s * prev;
            }
        }
        Self { coeffs: c }
    }

    /// Synthetic division by `(x - root)`; returns quotient and remainder.
    pub fn deflate(&self, root: ComplexScalar) -> (Self, ComplexScalar) {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut acc = ComplexScalar::new(0.0, 0.0);
        for &c in &self.coeffs {
            acc = acc * root + c;
            out.push(acc);
        }
        let rem = out.pop().unwrap_or_default();
        if out.is_empty() {
            out.push(ComplexScalar::new(0.0, 0.0));
        }
        (Self { coeffs: out }, rem)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|c| if c.im == 0.0 { format!("{}", c.re) } else { format!("{c}") })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `x⁶ + bx⁵ + cx⁴ + dx³ + ex² + fx + g`, each field the original coefficient
/// divided by the leading one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonicSextic {
    pub b: ComplexScalar,
    pub c: ComplexScalar,
    pub d: ComplexScalar,
    pub e: ComplexScalar,
    pub f: ComplexScalar,
    pub g: ComplexScalar,
}

impl MonicSextic {
    pub fn from_polynomial(p: &Polynomial) -> Result<Self, PolyError> {
        p.expect_degree(6)?;
        let m = p.make_monic()?;
        let k = m.coeffs();
        Ok(Self { b: k[1], c: k[2], d: k[3], e: k[4], f: k[5], g: k[6] })
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let one = ComplexScalar::new(1.0, 0.0);
        Polynomial { coeffs: vec![one, self.b, self.c, self.d, self.e, self.f, self.g] }
    }
}
