use thiserror::Error;

use crate::multipoly::Multidegree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("no initial coefficient of zero")]
    InitialOfZero,
    #[error("degenerate point configuration: minor ({0},{1}) of U vanishes")]
    DegeneratePoints(usize, usize),
    #[error("pfaffian of odd-cardinality index set {0:?}")]
    OddPfaffian(Vec<usize>),
    #[error("invalid subset bijection: {0}")]
    InvalidBijection(String),
    #[error("variable {0} is not a p-variable")]
    NotPVariable(String),
    #[error("polynomial is not homogeneous in the Z^7-grading")]
    Inhomogeneous,
    #[error("p-degree {degree} exceeds the report's degree bound {bound}")]
    BeyondDegreeBound { degree: u32, bound: u32 },
    #[error("valuation tie: not a monomial degeneration at this U (variable {0})")]
    ValuationTie(String),
    #[error("image of {0} is not a single monomial")]
    NotMonomial(String),
    #[error("point configuration is degenerate: affine span has dimension {span}, need {needed}")]
    DegenerateHull { span: usize, needed: usize },
    #[error("point configuration is empty or has mixed dimensions")]
    BadPointConfig,
    #[error("reports are incompatible: {0}")]
    IncompatibleReports(String),
    #[error("no fiber at multidegree {0}")]
    MissingFiber(Multidegree),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
