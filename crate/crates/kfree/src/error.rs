use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    TooLarge(usize),
    #[error("operation requires a nonempty graph")]
    EmptyGraph,
    #[error("operation requires a nonempty vertex set")]
    EmptyVertexSet,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("family spec: {0}")]
    FamilySpec(String),
    #[error("input graph already contains K_{0}")]
    NotCliqueFree(usize),
    #[error("vertex {0} is not a lemma vertex")]
    NotLemmaVertex(usize),
    #[error("search node budget exhausted")]
    OutOfBudget,
    #[error("certificate: {0}")]
    Certificate(String),
    #[error("config: {0}")]
    Config(String),
}
