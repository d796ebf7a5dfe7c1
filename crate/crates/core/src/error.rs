use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not quadratic: leading coefficient is zero")]
    NotQuadratic,
    #[error("no real root: discriminant {0} is negative")]
    NoRealRoot(BigInt),
    #[error("surds live in different quadratic fields (sqrt {0} vs sqrt {1})")]
    FieldMismatch(BigInt, BigInt),
    #[error("a surd sum holds at most two distinct radicands")]
    TooManyRadicands,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("digit {digit} is outside the alphabet {{1,2}}")]
    Alphabet { digit: u32 },
    #[error("window assigns no digits")]
    EmptyWindow,
    #[error("word must be nonempty")]
    EmptyWord,
    #[error("search range of {len} positions exceeds the limit of {limit}")]
    RangeTooLarge { len: usize, limit: usize },
    #[error("search aborted after exceeding the node guard of {0}")]
    NodeGuard(u64),
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
