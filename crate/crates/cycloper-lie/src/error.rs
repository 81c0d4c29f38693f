use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),
    #[error("unknown Cartan type label `{0}`")]
    UnknownLabel(String),
    #[error("permutation does not preserve the Cartan matrix")]
    NotDiagramAutomorphism,
    #[error("automorphism order does not divide {expected}")]
    OrderMismatch { expected: u32 },
    #[error("Weyl group has more than {limit} elements")]
    GroupTooLarge { limit: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("coweight must be integral for this automorphism")]
    NonIntegralCoweight,
}
