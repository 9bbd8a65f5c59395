use std::fmt;

/// Crate-wide error type.
///
/// `Domain` marks inputs outside an operation's stated domain, `Contract`
/// marks violated preconditions on constructed values, `Unconverged` marks
/// numerical routines that hit their iteration or grid caps without meeting
/// the requested tolerance. The CLI maps these to distinct exit codes.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    Domain(String),
    Contract(String),
    Unconverged(String),
    Parse(String),
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Contract(msg) => write!(f, "contract violation: {msg}"),
            Error::Unconverged(msg) => write!(f, "unconverged: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
