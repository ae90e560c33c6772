use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("argument undefined at {0}")]
    UndefinedArgument(&'static str),

    #[error("{what}: input {value} outside the domain ({domain})")]
    OutOfDomain {
        what: &'static str,
        value: String,
        domain: &'static str,
    },

    #[error("degenerate Möbius matrix (|det| = {0:e} after scaling)")]
    DegenerateMobius(f64),

    #[error("invalid generalized circle: {0}")]
    InvalidCircle(String),

    #[error("reflection curves coincide, composition is the identity")]
    IdentityMotion,

    #[error("not a motion of the upper half-plane: {0}")]
    NotHyperbolicMotion(String),

    #[error("identity fixes every point")]
    AllPointsFixed,

    #[error("coloring and height use the same line family")]
    InvalidComposite,

    #[error("invalid range for {what}: {detail}")]
    InvalidRange { what: &'static str, detail: String },

    #[error("unknown figure or preset `{0}`")]
    UnknownPreset(String),

    #[error("malformed PLY data: {0}")]
    Ply(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Image {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },
}

impl Error {
    pub(crate) fn out_of_domain(
        what: &'static str,
        value: impl std::fmt::Display,
        domain: &'static str,
    ) -> Self {
        Error::OutOfDomain {
            what,
            value: value.to_string(),
            domain,
        }
    }
}
