use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient variable counts differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not an O-sequence: {0}")]
    NotOSequence(String),

    #[error("sequence is not unimodal: {0}")]
    NotUnimodal(String),

    #[error("not a {m}-times weak Lefschetz O-sequence (fails at level {level}): {reason}")]
    NotWeakLefschetzSequence { m: usize, level: usize, reason: String },

    #[error("Eliahou-Kervaire requires stable ideal")]
    NotStable,

    #[error("ideal is not strongly stable")]
    NotStronglyStable,

    #[error("ideal is not artinian: no power of x{variable} among the generators")]
    NotArtinian { variable: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{selections} column selections exceed the budget of {budget}; use a smaller number of columns")]
    BudgetExceeded { selections: u128, budget: u128 },

    #[error("no sample found after {attempts} attempts")]
    NoSample { attempts: usize },

    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(String),

    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
