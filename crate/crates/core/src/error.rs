use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system {family}{rank}")]
    UnsupportedFamily { family: String, rank: usize },

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("space `{name}` not found{}", suggest(.near))]
    SpaceNotFound { name: String, near: Vec<String> },

    #[error("parameter error for `{name}`: {msg}")]
    Parameter { name: String, msg: String },

    #[error("gradation of n_phi is empty: phi is the full simple system")]
    EmptyGradation,

    #[error("database parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid record `{name}`: {msg}")]
    InvalidRecord { name: String, msg: String },

    #[error("inner action is not supported on the boundary component: {0}")]
    InnerOutsideBoundary(String),

    #[error("nilpotent construction needs |phi| = r - 1 (got |phi| = {phi_len}, r = {rank})")]
    NotMaximal { phi_len: usize, rank: usize },

    #[error("invalid descriptor: {0}")]
    Descriptor(String),

    #[error("reference corpus is for `{corpus}`, report is for `{report}`")]
    SpaceMismatch { report: String, corpus: String },

    #[error("no reference corpus for `{0}`")]
    NoCorpus(String),

    #[error("{0}")]
    Io(String),
}

fn suggest(near: &[String]) -> String {
    if near.is_empty() {
        String::new()
    } else {
        format!("; did you mean: {}", near.join(", "))
    }
}
