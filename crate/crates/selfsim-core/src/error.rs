use thiserror::Error;

#[derive(Debug, Error)]
pub enum SelfSimError {
    #[error("rewriting exceeded the step budget ({budget})")]
    NonterminatingRewrite { budget: usize },

    #[error("unknown generator index {0}")]
    UnknownGenerator(u8),

    #[error("unknown generator name `{0}`")]
    UnknownGeneratorName(String),

    #[error("letter {0} outside the alphabet")]
    BadLetter(u8),

    #[error("word problem unavailable: rewriting system not certified terminating and confluent")]
    WordProblemUnavailable,

    #[error("action is not a permutation at depth {0}")]
    NotAPermutation(usize),

    #[error("closed-form identity failed for {word} at letter {letter}")]
    ClosedFormMismatch { word: String, letter: u8 },

    #[error("bad group definition: {0}")]
    BadDefinition(String),
}
