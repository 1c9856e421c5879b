use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("bundle endpoint `{0}` is not a declared vertex")]
    UndeclaredEndpoint(String),
    #[error("bundle {0} -> {1} has multiplicity 0")]
    ZeroMultiplicity(String, String),
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex set is not contained in the graph")]
    NotASubset,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex set {0} is not hereditary and saturated")]
    NotHereditarySaturated(String),
    #[error("invalid admissible pair: {0}")]
    InvalidPair(String),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("{0} is not prime")]
    NotPrimeModulus(u64),
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("operation on the zero polynomial: {0}")]
    ZeroPolynomial(&'static str),
    #[error("factorization unsupported: {0}")]
    FactorLimit(String),
    #[error("cannot parse polynomial `{0}`: {1}")]
    PolyParse(String, String),

    #[error("cycle {0} is not an exitless cycle of the quotient graph")]
    CycleNotExitless(String),
    #[error("component cycles {0} and {1} share a vertex")]
    CyclesNotDisjoint(String, String),
    #[error("component polynomial {0} has zero constant term")]
    ZeroConstantTerm(String),
    #[error("component polynomial {0} is not canonical (monic, no x^k factor, degree >= 1)")]
    NonCanonicalPolynomial(String),
    #[error("the ideal is the whole algebra")]
    WholeAlgebra,
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),
    #[error("families are not irredundant: {0}")]
    NotIrredundant(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no finite graded-prime factorization: {0}")]
    NoFactorization(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that signal a broken engine invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
