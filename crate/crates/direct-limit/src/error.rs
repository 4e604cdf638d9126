use thiserror::Error;

#[derive(Debug, Error)]
pub enum LimitError {
    #[error("connector is not an endomorphism of the level group")]
    NotAnEndomorphism,

    #[error("level map does not commute with the connector on generator {generator}")]
    NotCompatible { generator: usize },

    #[error("undetermined at {stage}: {details}")]
    Undetermined { stage: &'static str, details: String },
}
