use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HornError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("duplicate series name `{0}`")]
    DuplicateSeries(String),

    #[error("series `{series}`: parameter `{param}` is not declared")]
    UndeclaredParam { series: String, param: String },

    #[error("series `{series}`: index `{name}` clashes with a parameter name")]
    IndexClash { series: String, name: String },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("pole: factor {factor} vanishes")]
    Pole { factor: String },

    #[error("symbol `{0}` has no value in the binding")]
    Unbound(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal consistency: {0}")]
    Inconsistent(String),

    #[error("unknown series `{0}`")]
    UnknownSeries(String),

    #[error("refused: {0}")]
    Refused(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, HornError>;

impl HornError {
    pub fn syntax(line: usize, msg: impl Into<String>) -> Self {
        HornError::Syntax { line, msg: msg.into() }
    }
}
