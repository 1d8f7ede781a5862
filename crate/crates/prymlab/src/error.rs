use thiserror::Error;

/// Errors shared across the crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("genus must be at least 2 (got {0})")]
    GenusTooSmall(u32),
    #[error("generator index {index} out of range for genus {genus}")]
    IndexOutOfRange { index: u32, genus: u32 },
    #[error("cannot parse word token {0:?}")]
    BadToken(String),
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(u32, u32),
    #[error("generator map must give an image for each of {expected} generators (got {got})")]
    WrongImageCount { expected: usize, got: usize },
    #[error("not an automorphism pair: {0}")]
    NotAutomorphism(String),
    #[error("permutation is not a bijection of 0..{0}")]
    NotBijection(usize),
    #[error("permutation degree {got} does not match declared degree {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("relator image is not the identity permutation")]
    RelatorNotKilled,
    #[error("permutation images do not act transitively")]
    NotTransitive,
    #[error("generated permutation group has order {order} on {degree} points; action is not regular")]
    NotRegular { order: usize, degree: usize },
    #[error("word does not lie in the kernel of the quotient")]
    NotInKernel,
    #[error("kernel is not invariant under the given automorphism power")]
    NotInvariant,
    #[error("kernel of the finer quotient is not contained in the coarser kernel")]
    NotContained,
    #[error("no invariant power found up to cap {0}")]
    CapExceeded(u32),
    #[error("{needed} candidate tuples exceed the feasibility guard {guard}")]
    GuardExceeded { needed: u128, guard: u128 },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("curve is not fixed by the automorphism")]
    CurveNotFixed,
    #[error("empty word where a nontrivial curve is required")]
    TrivialCurve,
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
