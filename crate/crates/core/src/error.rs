use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("{requested} variables requested, at most {max} supported")]
    TooManyVariables { requested: usize, max: usize },

    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,

    #[error("operation would produce the unit ideal")]
    UnitIdeal,

    #[error("support {support} does not fit in {ambient} variables")]
    WidthMismatch { support: String, ambient: usize },

    #[error("ambient variable counts differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("not a bijection on {0} variables")]
    NotBijective(usize),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("face list is not closed under taking subsets")]
    NotDownClosed,

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("refused: {0}")]
    Refused(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
