use thiserror::Error;

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("word problem unavailable for this group")]
    WordProblemUnavailable,

    #[error(transparent)]
    SelfSim(#[from] selfsim_core::SelfSimError),

    #[error(transparent)]
    Abelian(#[from] exact_abelian::AbelianError),

    #[error(transparent)]
    Limit(#[from] direct_limit::LimitError),

    #[error("wreath recursion not block compatible: generator {generator}, letter {letter}, depth {depth}")]
    BlockCompatibility { generator: usize, letter: u8, depth: usize },

    #[error("resolution requires exactly two involutive generators")]
    NeedsTwoInvolutions,

    #[error("undetermined at {stage}: {details}")]
    Undetermined { stage: &'static str, details: String },

    #[error("germ symbols are not composable: {0}")]
    NotComposable(String),
}
