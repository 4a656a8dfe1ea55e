//! Exact sparse polynomials over ZZ, ZZ/2 and QQ with weighted gradings,
//! plus rational Laurent polynomials for torus characters.

mod coeff;
mod grading;
mod laurent;
mod parse;
mod poly;

use thiserror::Error;

pub use coeff::{Coefficient, CoefficientDomain, FieldCoefficient, Gf2};
pub use grading::{monomials_of_degree, GradingSpec, Monomial};
pub use laurent::LaurentPolynomial;
pub use poly::{GeneratorMap, Polynomial, SubstitutionTarget};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operands live over different gradings")]
    GradingMismatch,
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("no image given for variable {0}")]
    MissingImage(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("negative exponent in an ordinary polynomial")]
    NegativeExponent,
    #[error("coefficient {0} is not in {1}")]
    NotInDomain(String, CoefficientDomain),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}
