//! Dense univariate polynomials over the complex numbers.
//!
//! Coefficients are stored highest degree first everywhere in this workspace,
//! so `[1, 0, -1]` is `x² - 1`.

mod error;
pub mod polynomial;
pub mod radicals;

pub use error::PolyError;
pub use polynomial::{MonicSextic, Polynomial};
pub use radicals::{ccbrt, ccbrt_all, csqrt, solve_quadratic, RootPair, OMEGA};

/// The scalar every formula in the workspace is evaluated in.
pub type ComplexScalar = num_complex::Complex64;

/// Shorthand for building a [`ComplexScalar`].
#[inline]
pub const fn c64(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

/// True when both parts are finite.
#[inline]
pub fn is_finite(z: ComplexScalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
