use thiserror::Error;

/// Errors raised by the stratlink library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation has a cycle through `{0}` and `{1}`")]
    Cycle(String, String),
    #[error("unknown poset element `{0}`")]
    UnknownElement(String),
    #[error("duplicate identifier `{0}`")]
    Duplicate(String),
    #[error("flag is empty")]
    EmptyFlag,
    #[error("flag `{0}` is not weakly increasing")]
    NotAFlag(String),
    #[error("flag `{0}` is not regular (strictly increasing)")]
    FlagNotRegular(String),
    #[error("simplex {simplex} has incomparable labels `{first}` and `{second}`")]
    ChainViolation {
        simplex: String,
        first: String,
        second: String,
    },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("simplex {0} is not in the complex")]
    UnknownSimplex(String),
    #[error("vertex map is not a simplicial embedding: {0}")]
    NotEmbedding(String),
    #[error("vertex `{vertex}` has label `{found}` but its image has label `{expected}`")]
    LabelMismatch {
        vertex: String,
        expected: String,
        found: String,
    },
    #[error("gluing would identify simplex {0} of the attached complex with an existing simplex")]
    Collapse(String),
    #[error("face identity violated on cell `{cell}`: d_{i} d_{j} != d_{jm1} d_{i}", jm1 = .j - 1)]
    FaceIdentityViolation { cell: String, i: usize, j: usize },
    #[error("flag of face {face} of cell `{cell}` does not match")]
    FlagMismatch { cell: String, face: usize },
    #[error("precursor relation has a cycle through cell `{0}`")]
    PrecursorCycle(String),
    #[error("invalid cell complex: {0}")]
    InvalidComplex(String),
    #[error("cells `{0}` and `{1}` do not form a simplicial complex")]
    NotSimplicial(String, String),
    #[error("unknown corpus item `{0}`")]
    UnknownCorpusName(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("invalid piecewise-linear function: {0}")]
    InvalidFunction(String),
    #[error("projection to the <= {0} part is undefined (zero mass)")]
    DegenerateProjection(String),
    #[error("point lies outside the standard neighborhood of `{0}`")]
    OutsideNeighborhood(String),
    #[error("not a strictly increasing chain of subflags: {0}")]
    NotASubflagChain(String),
    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),
    #[error("invalid Mayer-Vietoris decomposition: {0}")]
    DecompositionInvalid(String),
    #[error("unknown coefficients `{0}` (expected int, rat or mod:<prime>)")]
    InvalidCoefficients(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
