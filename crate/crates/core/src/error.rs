use core::fmt;

use crate::free::NcPolynomial;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// Two polynomials over different generator sets were combined.
    UniverseMismatch { left: usize, right: usize },
    /// A word mentions a generator the presentation does not have.
    ForeignGenerator { index: usize, dim: usize },
    /// A polynomial exceeded the degree cap of the rewriting engine.
    DegreeCap { degree: usize, cap: usize },
    /// A bracket value is not a linear combination of generators.
    NonLinearBracket { left: usize, right: usize },
    /// A bracket entry names an invalid or repeated pair of generators.
    InvalidBracketPair { left: usize, right: usize },
    /// The Jacobi identity fails on a triple; `defect` is the cyclic sum.
    JacobiViolation {
        triple: (usize, usize, usize),
        defect: NcPolynomial,
    },
    /// `typeD_alpha` needs a nonzero parameter.
    ZeroAlpha,
    /// A permutation of the generators was expected.
    InvalidOrder,
    /// A parameter is outside its domain (e.g. `k = 0` for `w_{k,l}`).
    InvalidParameter(&'static str),
    /// An element that should lie in `U_k` does not; `residual` is the part
    /// left after exact elimination.
    NotInSpan { residual: NcPolynomial },
    /// The remainder of an `(A_k)`/`(B_k)` congruence is outside `U_k`.
    CongruenceViolated { k: usize, residual: NcPolynomial },
    /// An element of `W` is not spanned by the truncated `w_{k,l}` family.
    NotInTruncatedSpan {
        residual: NcPolynomial,
        top_degree: usize,
    },
    /// A coordinate vector has support outside the domain of a truncated
    /// action matrix.
    OutsideDomain { k: usize, l: usize },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UniverseMismatch { left, right } => write!(
                f,
                "mismatched generator universe: {left} vs {right} generators"
            ),
            Self::ForeignGenerator { index, dim } => write!(
                f,
                "generator index {index} is foreign to a presentation of dimension {dim}"
            ),
            Self::DegreeCap { degree, cap } => {
                write!(f, "degree {degree} exceeds the rewriting cap of {cap}")
            }
            Self::NonLinearBracket { left, right } => write!(
                f,
                "bracket [{left},{right}] is not a linear combination of generators"
            ),
            Self::InvalidBracketPair { left, right } => {
                write!(f, "invalid or repeated bracket pair ({left},{right})")
            }
            Self::JacobiViolation { triple, defect } => write!(
                f,
                "Jacobi identity fails on generators {:?}: defect has {} term(s)",
                triple,
                defect.len()
            ),
            Self::ZeroAlpha => f.write_str("type (d)-alpha requires alpha != 0"),
            Self::InvalidOrder => f.write_str("monomial order is not a permutation of the generators"),
            Self::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Self::NotInSpan { residual } => write!(
                f,
                "element is not in the span (residual has {} term(s))",
                residual.len()
            ),
            Self::CongruenceViolated { k, residual } => write!(
                f,
                "remainder is not in U_{k} (residual has {} term(s))",
                residual.len()
            ),
            Self::NotInTruncatedSpan {
                residual,
                top_degree,
            } => write!(
                f,
                "element is not spanned by the truncated w-basis (residual has {} term(s), top degree {top_degree}); try larger bounds",
                residual.len()
            ),
            Self::OutsideDomain { k, l } => {
                write!(f, "coordinate ({k},{l}) is outside the matrix domain")
            }
        }
    }
}

impl core::error::Error for AlgebraError {}
