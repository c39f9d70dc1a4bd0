use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} is out of range (minimum {min})")]
    IndexOutOfRange { index: i64, min: i64 },

    #[error("denominator vanishes at q = 1")]
    DenominatorVanishes,

    #[error("series constant term is not invertible")]
    NonInvertibleConstantTerm,

    #[error("leading coefficient of basis element {index} is not a unit in the value ring")]
    NonUnitLeadingCoefficient { index: usize },

    #[error("basis element {index} has degree {found}, expected {index}")]
    BasisDegree { index: usize, found: i64 },

    #[error("polynomial degree {degree} exceeds table size {table_size}")]
    DegreeExceedsTable { degree: i64, table_size: usize },

    #[error("polynomial has negative powers of the variable")]
    NegativeOffset,

    #[error("seed of length {len} is too short for depth {depth}")]
    SeedTooShort { len: usize, depth: usize },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("parameter {name} = {value} is outside the declared range {min}..={max} for {id}")]
    ParamOutOfRange {
        id: String,
        name: String,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("{id} has no parameter named {name}")]
    UnknownParam { id: String, name: String },

    #[error("missing parameter {name} for {id}")]
    MissingParam { id: String, name: String },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("value {0} is not an integer")]
    NotIntegral(String),
}
