use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed quiver: {0}")]
    MalformedQuiver(String),

    #[error("malformed relation: {0}")]
    MalformedRelation(String),

    #[error("not finite-dimensional within cap {cap}")]
    NotFiniteDimensional { cap: usize },

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown directive `{directive}` at line {line}")]
    UnknownDirective { line: usize, directive: String },

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid module map: {0}")]
    InvalidMap(String),

    #[error("zero module has no projective cover")]
    ZeroModule,

    #[error("undetermined beyond cap {cap}")]
    UndeterminedBeyondCap { cap: usize },

    #[error("projective dimension undetermined: resolution truncated at degree {cap} without periodicity certificate")]
    Undetermined { cap: usize },

    #[error("infinite global dimension")]
    InfiniteGlobalDimension,

    #[error("not exact: {0}")]
    NotExact(String),

    #[error("unsupported type: {0}")]
    UnsupportedType(String),

    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: i64, max: usize },

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("mismatch in {what}: predicted {predicted}, computed {computed}")]
    Mismatch {
        what: String,
        predicted: String,
        computed: String,
    },

    #[error("invalid Lie algebra: {0}")]
    InvalidLieAlgebra(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
