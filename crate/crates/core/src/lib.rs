//! Closed-form radical solvers for cubic, quartic and sextic equations, with
//! a verification layer that measures whether each candidate is a root.

pub mod cubic;
mod error;
pub mod quartic;
pub mod sextic;
pub mod solve;
pub mod verify;

#[cfg(test)]
mod test_rng;

pub use error::{DegeneracyKind, SolveError};
pub use sextica_oracle as oracle;
pub use sextica_poly as poly;
pub use sextica_poly::{c64, ComplexScalar, Polynomial};
