use thiserror::Error;

#[derive(Debug, Error)]
pub enum KTheoryError {
    #[error("K-theory engine supports the built-in dihedral instance")]
    DihedralOnly,

    #[error(transparent)]
    SelfSim(#[from] selfsim_core::SelfSimError),

    #[error(transparent)]
    Limit(#[from] direct_limit::LimitError),

    #[error("integer shadow mismatch in {0}")]
    ShadowMismatch(&'static str),

    #[error("relation `{0}` failed at level {1}")]
    RelationFailed(&'static str, usize),

    #[error("coordinate map inconsistent at level {0}, generator {1}")]
    PsiInconsistent(usize, usize),

    #[error("colimit model {0} does not match the expected shape")]
    UnexpectedModel(String),
}
