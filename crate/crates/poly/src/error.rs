use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial has no coefficients")]
    Empty,
    #[error("leading coefficient is zero")]
    ZeroLeadingCoefficient,
    #[error("quadratic coefficient is zero")]
    DegenerateLeading,
    #[error("coefficient {index} is not finite")]
    NonFinite { index: usize },
    #[error("expected degree {expected}, got {actual}")]
    WrongDegree { expected: usize, actual: usize },
}
