use thiserror::Error;

#[derive(Debug, Error)]
pub enum AbelianError {
    #[error("image is not contained in the kernel: not a complex")]
    NotAComplex,

    #[error("vector is not a cycle of the subquotient")]
    NotACycle,

    #[error("map is not chain compatible ({what}); witness {witness}")]
    NotChainCompatible { what: &'static str, witness: String },

    #[error("matrix does not define a homomorphism: generator {generator}, {witness}")]
    NotWellDefined { generator: usize, witness: String },
}
