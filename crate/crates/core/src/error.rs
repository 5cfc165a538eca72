use crate::terms::Word;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid signature: {0}")]
    Signature(String),

    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("unknown identifier `{name}` at column {column}")]
    UnknownIdentifier { name: String, column: usize },

    #[error("unknown operator `{0}`")]
    UnknownOperator(String),

    #[error("a star-word needs exactly one ★, found {0}")]
    HoleCount(usize),

    #[error("{0:?} is not a Rota-Baxter system word")]
    NotBasisWord(Word),

    #[error("the zero polynomial has no leading word")]
    ZeroPolynomial,

    /// The degree-(0, n) slice of a coproduct was not exactly `1 ⊗ w`.
    #[error("connectedness violated at {word:?}: {detail}")]
    Connectedness { word: Word, detail: String },
}
