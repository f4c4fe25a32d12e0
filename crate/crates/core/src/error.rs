use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("slopes {0} and {1} are not Farey neighbors")]
    NotNeighbors(String, String),

    #[error("slope {0} has no continued-fraction form in (0,1]")]
    NoContinuedFraction(String),

    #[error("matrix has determinant {0}, expected 1")]
    BadDeterminant(i64),

    #[error("matrix entries must be nonnegative")]
    NegativeEntry,

    #[error("label {0} out of range 1..={1}")]
    LabelOutOfRange(usize, usize),

    #[error("left code of the prefix is not an n-cycle")]
    NotFullCycle,

    #[error("surface is disconnected; this operation needs a connected surface")]
    Disconnected,

    #[error("degree {0} exceeds the exhaustive-search bound {1}")]
    BoundExceeded(usize, usize),

    #[error("operand is not a realized code pair on this surface")]
    UnrealizedOperand,
}

impl Error {
    /// Parse error carrying the byte position inside the offending input.
    pub fn parse_at(input: &str, pos: usize, msg: &str) -> Error {
        Error::Parse(format!("{msg} at position {pos} in {input:?}"))
    }
}
