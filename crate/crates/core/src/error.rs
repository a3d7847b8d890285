use thiserror::Error;

use crate::cones::ConeError;
use crate::qlinalg::{format_rat, LinalgError, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("line bundle is not big")]
    NotBig,
    #[error("canonical class is pseudo-effective along the bundle (a = {})", format_rat(.a))]
    KPseudoEffective { a: Rat },
    #[error("rigidity cannot be decided for a raw model without an intersection form")]
    RigidityUndecidable,
    #[error("restricted bundle on `{name}` is not big")]
    BigFailureOnY { name: String },
    #[error("incompatible models: {0}")]
    IncompatibleModels(String),
    #[error("divisor class is not pseudo-effective")]
    NotPseudoEffective,
    #[error("Zariski decomposition did not terminate")]
    InternalNonTermination,
    #[error("del Pezzo degree {0} out of range")]
    DegreeOutOfRange(i64),
    #[error("degree must be positive")]
    NonPositiveDegree,
    #[error("curve lies in the excluded locus: {0}")]
    CurveInExcludedLocus(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("fan is not complete: {0}")]
    IncompleteFan(String),
    #[error("cone {0:?} is not simplicial")]
    NonSimplicialCone(Vec<usize>),
    #[error("torus-invariant divisor is not effective")]
    NotEffective,
    #[error("projection is incompatible with the adjoint divisor: {0}")]
    ProjectionIncompatible(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("model file: {0}")]
    Parse(String),
    #[error("computation paths disagree: {0}")]
    PathDisagreement(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Linalg(_) => "dimension_mismatch",
            Error::Cone(_) => "cone",
            Error::InvalidModel(_) => "invalid_model",
            Error::NotBig => "not_big",
            Error::KPseudoEffective { .. } => "k_pseudo_effective",
            Error::RigidityUndecidable => "rigidity_undecidable",
            Error::BigFailureOnY { .. } => "big_failure_on_y",
            Error::IncompatibleModels(_) => "incompatible_models",
            Error::NotPseudoEffective => "not_pseudo_effective",
            Error::InternalNonTermination => "internal_non_termination",
            Error::DegreeOutOfRange(_) => "degree_out_of_range",
            Error::NonPositiveDegree => "non_positive_degree",
            Error::CurveInExcludedLocus(_) => "curve_in_excluded_locus",
            Error::InvalidFan(_) => "invalid_fan",
            Error::IncompleteFan(_) => "incomplete_fan",
            Error::NonSimplicialCone(_) => "non_simplicial_cone",
            Error::NotEffective => "not_effective",
            Error::ProjectionIncompatible(_) => "projection_incompatible",
            Error::UnknownFixture(_) => "unknown_fixture",
            Error::Fixture(_) => "fixture",
            Error::Parse(_) => "parse",
            Error::PathDisagreement(_) => "path_disagreement",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
