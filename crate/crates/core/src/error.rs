use crate::perm::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("point {0} is mapped to twice")]
    NotInjective(Point),
    #[error("point {0} appears as a domain point twice")]
    DuplicateDomain(Point),
    #[error("domain and image differ: the map does not close up into a permutation")]
    NotAPermutation,
    #[error("words must have at least one coefficient")]
    EmptyWord,
    #[error("a group word with {coeffs} coefficients needs {} signs, got {signs}", coeffs - 1)]
    SignCount { coeffs: usize, signs: usize },
    #[error("mixed-sign group word of degree {0} has no degree-preserving semigroup reduction")]
    IrreducibleSignature(usize),
    #[error("row index {index} out of range for a matrix with {rows} rows")]
    IndexOutOfRange { index: usize, rows: usize },
    #[error("ragged matrices must have at least one row, and every row at least one entry")]
    EmptyMatrix,
    #[error("matrix pair has {a} rows on the left and {b} on the right")]
    RowMismatch { a: usize, b: usize },
    #[error("the adjusting element must differ from the identity")]
    InvalidAdjuster,
    #[error("row {0} is not normalized (equal leading entries or two constant polynomials)")]
    NotNormalized(usize),
    #[error("oracle could not extend the partial map at point {0}")]
    OracleExhausted(Point),
    #[error("unknown builtin group {0:?}")]
    UnknownGroup(String),
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("enumeration of {size} items exceeds the limit of {limit}")]
    TooLarge { size: u128, limit: u128 },
    #[error("set families live on carriers of size {0} and {1}")]
    CarrierMismatch(usize, usize),
    #[error("expected two distinct points, got {0} twice")]
    InvalidPair(Point),
    #[error("permutation fixes {0}")]
    Fixed(Point),
    #[error("T_m is only defined for m >= 1")]
    ZeroComponent,
}
