use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse Coxeter type `{0}`")]
    BadType(String),
    #[error("malformed Coxeter matrix: {0}")]
    MalformedMatrix(String),
    #[error("Coxeter diagram is not of finite type: {0}")]
    NotFinite(String),
    #[error("cannot parse word `{0}`")]
    BadWord(String),
    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("word `{0}` is not reduced")]
    NotReduced(String),
    #[error("word `{0}` is not a reduced word of the longest element")]
    NotLongest(String),
    #[error("word `{0}` is not a reduced word of a Coxeter element")]
    NotCoxeterElement(String),
    #[error("enumeration exceeded cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("quivers belong to different Coxeter systems")]
    SpecMismatch,
    #[error("edge {{{0}, {1}}} is not a face")]
    NotAFace(u32, u32),
    #[error("vertex {0} is already present")]
    VertexExists(u32),
    #[error("invalid complex: {0}")]
    BadComplex(String),
    #[error("certificate does not replay: {0}")]
    BadCertificate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
