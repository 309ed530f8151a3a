use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown or unsupported root system type `{0}`")]
    UnknownType(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),
    #[error("index set {sub} is not contained in {sup}")]
    NotSubset { sub: String, sup: String },
    #[error("elements belong to different root systems")]
    MixedSystems,
    #[error("{0} is not a root of the subsystem")]
    NotInSubsystem(String),
    #[error("element does not lie in the subgroup for J = {0}")]
    NotInSubgroup(String),
    #[error("set is not pointed and closed")]
    NotPointedClosed,
    #[error("set is not pointed and biclosed")]
    NotPointedBiclosed,
    #[error("invalid biconvex parameter: {0}")]
    InvalidParam(String),
    #[error("not a biconvex set: {0}")]
    NotBiconvex(String),
    #[error("no infinite word exists for K = J")]
    KEqualsJ,
    #[error("word is not infinite reduced: {0}")]
    NotReduced(String),
    #[error("window too large: {roots} candidate roots (limit {limit})")]
    WindowTooLarge { roots: usize, limit: usize },
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
