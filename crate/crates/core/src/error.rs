use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("polytope is unbounded")]
    UnboundedPolytope,
    #[error("symmetric form vanishes identically")]
    ZeroForm,
    #[error("weight {0:?} is not weakly decreasing")]
    NotDominant(Vec<i64>),
    #[error("weight {0:?} is not strictly dominant")]
    NotAmple(Vec<i64>),
    #[error("degree {0} is not an integer")]
    NonIntegerDegree(String),
    #[error("every coefficient draw was degenerate after {attempts} attempts")]
    RetriesExhausted { attempts: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
