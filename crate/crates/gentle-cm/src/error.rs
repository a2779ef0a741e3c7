use thiserror::Error;

/// Crate-wide error type. Exit-code mapping for the CLI: syntax and I/O
/// problems are code 2, resource caps are code 3, everything else is a
/// domain violation (code 1).
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("duplicate id `{0}`")]
    DuplicateId(String),

    #[error("invalid id `{0}`")]
    InvalidId(String),

    #[error("relation `{beta} {alpha}` is not composable: t({alpha}) != s({beta})")]
    NonComposableRelation { beta: String, alpha: String },

    #[error("paths are not composable: target of the right factor is {right_target}, source of the left factor is {left_source}")]
    NonComposablePaths {
        left_source: String,
        right_target: String,
    },

    #[error("the algebra is infinite dimensional: relation-free cycle {}", .cycle.join(" "))]
    InfiniteDimensional { cycle: Vec<String> },

    #[error("word is not a string: {0}")]
    NotAString(String),

    #[error("not representation finite: band {0} exists")]
    NotRepresentationFinite(String),

    #[error("string has no substring with both endpoints at module vertices")]
    NoCoreSubstring,

    #[error("presentation is not the expected Cohen-Macaulay Auslander presentation: {0}")]
    NotCmAuslanderOf(String),

    #[error("a relation mixes a cyclic and a non-cyclic arrow: {beta} {alpha}")]
    MixedRelation { beta: String, alpha: String },

    #[error("generated id `{0}` collides with an existing id")]
    IdCollision(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix dimensions do not match")]
    ShapeMismatch,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(String),

    #[error("interpolating polynomial has non-integer coefficients: {0}")]
    NonIntegralFit(String),

    #[error("Coxeter polynomial has non-integer coefficients: {0}")]
    NonIntegralCoxeter(String),

    #[error("quiver is not cluster-tilted of type A: {}", .violations.join("; "))]
    NotClusterTiltedA { violations: Vec<String> },

    #[error("algebra is not schurian")]
    NotSchurian,

    #[error("vertex {0} carries a loop")]
    LoopAtVertex(String),

    #[error("quiver has a loop or a 2-cycle, mutation is undefined")]
    NotTwoAcyclic,

    #[error("quivers have different vertex counts ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("quivers are not derived equivalent (triangle counts {0} vs {1})")]
    NotDerivedEquivalent(usize, usize),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("resource cap exceeded: {what} > {cap}")]
    CapExceeded { what: String, cap: usize },

    #[error("Hom matrix of the indecomposables is singular")]
    SingularHomMatrix,

    #[error("decomposition is inconsistent: {0}")]
    InconsistentDecomposition(String),

    #[error("Hall polynomial fit does not verify at q={q}: fit predicts {predicted}, counted {actual}; add more sample primes")]
    InsufficientSampleDegree {
        q: u64,
        predicted: String,
        actual: String,
    },

    #[error("{0}")]
    Domain(String),
}

impl Error {
    /// CLI exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Io(_) => 2,
            Error::CapExceeded { .. } => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
