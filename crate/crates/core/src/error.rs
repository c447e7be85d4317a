use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse field `{0}` (expected `rational` or `fp:<p>`)")]
    Parse(String),
    #[error("prime {0} is not in the set of fields compiled into this build")]
    Unsupported(u64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    OutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidError {
    #[error("word rejected at position {index}: {reason}")]
    RejectedWord { index: usize, reason: &'static str },
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(usize, usize),
    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { n: usize, index: usize },
    #[error("level {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("cannot parse sign `{0}`")]
    BadSign(char),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("explicit self-loop on `{0}` (the diagonal is implicit)")]
    SelfLoop(String),
    #[error("vertex map has {got} entries, source has {expected} vertices")]
    MapLength { expected: usize, got: usize },
    #[error("not a morphism: ({0}, {1}) maps to the non-related pair ({2}, {3})")]
    NotAMorphism(String, String, String, String),
    #[error("cover members have different targets")]
    MismatchedTargets,
    #[error("empty family of morphisms")]
    EmptyFamily,
    #[error("crown graphs need n >= 2, got {0}")]
    CrownLevel(usize),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { n: usize, index: usize },
    #[error("quotient map ill-defined at vertex `{0}`")]
    IllDefinedQuotient(String),
    #[error("graph has {size} vertices, cap is {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("morphisms do not form a cover of the target")]
    NotACover,
    #[error("structure constants table is {0}x{1}, expected square over the basis")]
    TableShape(usize, usize),
    #[error("product of basis elements {0} and {1} leaves the annihilator")]
    NotTwoStep(usize, usize),
    #[error("projective enumeration needs a finite field")]
    InfiniteField,
    #[error("projective space has {points} points, cap is {cap}")]
    EnumerationCap { points: u128, cap: u128 },
    #[error("empty product (a surjection never has an empty fibre)")]
    EmptyProduct,
    #[error("basis index {0} out of range")]
    BasisIndex(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LodayError {
    #[error("invalid surjection: {0}")]
    InvalidSurjection(String),
    #[error("cannot compose {0} after {1}")]
    ComposeMismatch(String, String),
    #[error("tensor dimension {dim} exceeds cap {cap}")]
    TensorCap { dim: u128, cap: u128 },
    #[error("surjection enumeration p = {p} exceeds cap {cap}")]
    SurjectionCap { p: usize, cap: usize },
    #[error("element is not in the hom-set W_n({s}, {t})")]
    HomSet { s: String, t: String },
    #[error("natural transformations of truncation {0} and {1} cannot be composed")]
    TruncationMismatch(usize, usize),
    #[error("tensor power must be positive, got n = {n}, p = {p}")]
    LemmaRange { n: usize, p: usize },
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Crate-level error used by the harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Loday(#[from] LodayError),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
