use thiserror::Error;

/// Everything that can go wrong while parsing words or querying structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one generator")]
    EmptyAlphabet,
    #[error("generators must be ascii lowercase letters, got {0:?}")]
    BadGenerator(char),
    #[error("unknown generator symbol {0:?}")]
    UnknownSymbol(char),
    #[error("malformed exponent: {0}")]
    BadExponent(String),
    #[error("exponent {0} exceeds the limit {limit}", limit = crate::words::MAX_EXPONENT)]
    ExponentTooLarge(u64),
    #[error("operands use different alphabets")]
    AlphabetMismatch,
    #[error("interval must satisfy a <= 0 <= b and a <= t <= b, got (a={a}, b={b}, t={t})")]
    BadInterval { a: i64, b: i64, t: i64 },
    #[error("normal form parameters out of range: {0}")]
    BadNormalForm(String),
    #[error("the identity has no parent in the spanning tree")]
    IdentityHasNoParent,
    #[error("tree edges carry no weight")]
    TreeEdgeWeight,
    #[error("not a basis edge: tree edges carry no homology class")]
    NotABasisEdge,
    #[error("steps do not chain into a path")]
    MalformedPath,
    #[error("path is not closed")]
    OpenPath,
    #[error("malformed edge spec {0:?}: expected \"<normal form>:<generator>\"")]
    BadEdgeSpec(String),
}
