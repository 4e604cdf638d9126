use thiserror::Error;

#[derive(Debug, Error)]
pub enum FullGroupError {
    #[error(transparent)]
    SelfSim(#[from] selfsim_core::SelfSimError),

    #[error("not a full bisection: {0}")]
    NotFullBisection(String),

    #[error("word problem unavailable for germ operations")]
    WordProblemUnavailable,

    #[error("full-group operations require the built-in dihedral instance")]
    DihedralOnly,

    #[error("source and range overlap: {0}")]
    OverlappingSupport(String),

    #[error("the index obstruction is nonzero")]
    IndexNonzero,

    #[error("tree word `{0}` is shallower than the table")]
    WordTooShallow(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
