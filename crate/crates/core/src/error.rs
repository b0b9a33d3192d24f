use thiserror::Error;

use crate::parser::ParseError;
use crate::ratint::AntiDeriv;

/// Error taxonomy shared by every module.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("mixed radicands sqrt({0}) and sqrt({1})")]
    MixedRadicand(u64, u64),
    #[error("expression is not rational in {var}: {node}")]
    NotRationalInVar { var: String, node: String },
    #[error("unsupported expression node: {0}")]
    UnsupportedNode(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("denominator does not split: irreducible factor {0}")]
    NotFullySplit(String),
    #[error("unsupported algebraic degree: {detail}")]
    UnsupportedAlgebraicDegree {
        detail: String,
        partial: Option<Box<AntiDeriv>>,
    },
    #[error("improper integral: pole at {location}")]
    ImproperIntegral { location: String },
    #[error("invalid antiderivative: {0}")]
    InvalidAntiderivative(String),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("no convergence after {subdivisions} subdivisions (error estimate {estimate:e})")]
    NoConvergence { subdivisions: usize, estimate: f64 },
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("pole at {0}")]
    PoleAtPoint(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Stable taxonomy name used in CLI messages and JSON diagnostics.
    pub fn kind_name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::MixedRadicand(..) => "MixedRadicand",
            Error::NotRationalInVar { .. } => "NotRationalInVar",
            Error::UnsupportedNode(_) => "UnsupportedNode",
            Error::Parse(_) => "ParseError",
            Error::NotFullySplit(_) => "NotFullySplit",
            Error::UnsupportedAlgebraicDegree { .. } => "UnsupportedAlgebraicDegree",
            Error::ImproperIntegral { .. } => "ImproperIntegral",
            Error::InvalidAntiderivative(_) => "InvalidAntiderivative",
            Error::UnsupportedShape(_) => "UnsupportedShape",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::DomainError(_) => "DomainError",
            Error::PoleAtPoint(_) => "PoleAtPoint",
            Error::Internal(_) => "Internal",
        }
    }

    pub(crate) fn unsupported_degree(detail: impl Into<String>) -> Self {
        Error::UnsupportedAlgebraicDegree {
            detail: detail.into(),
            partial: None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
