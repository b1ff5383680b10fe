use sextica_poly::{ComplexScalar, PolyError};
use thiserror::Error;

/// Every way a closed-form pipeline can refuse to proceed. Each variant maps
/// to a stable [`DegeneracyKind`] so sweeps can histogram them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("x⁵ coefficient is zero; this pipeline needs b ≠ 0")]
    ZeroQuinticCoefficient,
    #[error("x⁵ coefficient is nonzero; the shifted pipeline needs b = 0")]
    NonzeroQuinticCoefficient,
    #[error("V is undefined: f - d²/4b = 0 or V = 0")]
    DegenerateV,
    #[error("leading coefficient of the Γ₄ equation vanishes")]
    DegenerateLeading,
    #[error("every root of the Γ₄ equation is zero")]
    AllGamma4Zero,
    #[error("division by zero while building the quartic in z")]
    DegenerateGamma4,
    #[error("s₁s₂s₃s₄ = 0; the closing quadratic is undefined")]
    ZeroCandidateProduct,
    #[error("x⁴ coefficient is zero; the shift √(-C/15A) vanishes")]
    DegenerateShift,
    #[error("neither closed-form sextic pipeline applies (b = 0 and C = 0)")]
    PipelineInapplicable { oracle_roots: Vec<ComplexScalar> },
    #[error("non-finite intermediate value: {0}")]
    NonFinite(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DegeneracyKind {
    ZeroLeadingCoefficient,
    WrongDegree,
    InvalidPolynomial,
    ZeroQuinticCoefficient,
    NonzeroQuinticCoefficient,
    DegenerateV,
    DegenerateLeading,
    AllGamma4Zero,
    DegenerateGamma4,
    ZeroCandidateProduct,
    DegenerateShift,
    PipelineInapplicable,
    NonFinite,
}

impl DegeneracyKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::ZeroLeadingCoefficient => "ZeroLeadingCoefficient",
            Self::WrongDegree => "WrongDegree",
            Self::InvalidPolynomial => "InvalidPolynomial",
            Self::ZeroQuinticCoefficient => "ZeroQuinticCoefficient",
            Self::NonzeroQuinticCoefficient => "NonzeroQuinticCoefficient",
            Self::DegenerateV => "DegenerateV",
            Self::DegenerateLeading => "DegenerateLeading",
            Self::AllGamma4Zero => "AllGamma4Zero",
            Self::DegenerateGamma4 => "DegenerateGamma4",
            Self::ZeroCandidateProduct => "ZeroCandidateProduct",
            Self::DegenerateShift => "DegenerateShift",
            Self::PipelineInapplicable => "PipelineInapplicable",
            Self::NonFinite => "NonFinite",
        }
    }
}

impl SolveError {
    pub fn kind(&self) -> DegeneracyKind {
        match self {
            Self::Poly(PolyError::ZeroLeadingCoefficient) => DegeneracyKind::ZeroLeadingCoefficient,
            Self::Poly(PolyError::WrongDegree { .. }) => DegeneracyKind::WrongDegree,
            Self::Poly(PolyError::DegenerateLeading) => DegeneracyKind::DegenerateLeading,
            Self::Poly(_) => DegeneracyKind::InvalidPolynomial,
            Self::ZeroQuinticCoefficient => DegeneracyKind::ZeroQuinticCoefficient,
            Self::NonzeroQuinticCoefficient => DegeneracyKind::NonzeroQuinticCoefficient,
            Self::DegenerateV => DegeneracyKind::DegenerateV,
            Self::DegenerateLeading => DegeneracyKind::DegenerateLeading,
            Self::AllGamma4Zero => DegeneracyKind::AllGamma4Zero,
            Self::DegenerateGamma4 => DegeneracyKind::DegenerateGamma4,
            Self::ZeroCandidateProduct => DegeneracyKind::ZeroCandidateProduct,
            Self::DegenerateShift => DegeneracyKind::DegenerateShift,
            Self::PipelineInapplicable { .. } => DegeneracyKind::PipelineInapplicable,
            Self::NonFinite(_) => DegeneracyKind::NonFinite,
        }
    }
}

/// Fails with `NonFinite(what)` unless every value is finite.
pub(crate) fn ensure_finite(values: &[ComplexScalar], what: &'static str) -> Result<(), SolveError> {
    if values.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(SolveError::NonFinite(what))
    }
}
