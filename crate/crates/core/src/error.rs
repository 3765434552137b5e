use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("invalid function: {0}")]
    InvalidFunction(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    /// Source element `element` has `images` many images (zero or at least two).
    #[error("relation is not a function (source {element} has {})", describe_images(*.images))]
    NotAFunction { element: usize, images: usize },

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("type error in `{term}`: {message}")]
    TypeError { term: String, message: String },

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

fn describe_images(n: usize) -> String {
    match n {
        0 => "no image".to_string(),
        n => format!("{n} images"),
    }
}
