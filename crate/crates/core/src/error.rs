use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("incomparable totals: {0} vs {1}")]
    IncomparableTotals(u32, u32),
    #[error("enumeration bound exceeded: d = {d}, bound = {bound}")]
    EnumerationBound { d: u32, bound: u32 },
    #[error("mismatched group: {0}")]
    GroupMismatch(String),
    #[error("trivial flag variety")]
    TrivialFlag,
    #[error("invalid {kind}: {msg}")]
    Invalid { kind: &'static str, msg: String },
    #[error("dimension bound exceeded: dim = {dim}, bound = {bound}")]
    DimensionBound { dim: u64, bound: u64 },
    #[error("not a representation character (peeling went negative at {0})")]
    NotARepresentationCharacter(String),
    #[error("module is not spherical")]
    NotSpherical,
    #[error("flag variety is not spherical")]
    FlagNotSpherical,
    #[error("trials must be positive")]
    NoTrials,
    #[error("unknown case id: {0}")]
    UnknownCase(String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn invalid(kind: &'static str, msg: impl Into<String>) -> Self {
        Error::Invalid { kind, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
