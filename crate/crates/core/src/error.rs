use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined resultant: both polynomials are zero")]
    UndefinedResultant,
    #[error("discriminant needs degree at least 2, got {0:?}")]
    DegreeTooSmall(Option<usize>),
    #[error("the zero form has no discriminant")]
    ZeroForm,
    #[error("gcd(0, 0) is undefined")]
    ZeroGcd,
    #[error("({0}, {1}) is not a primitive pair")]
    NotCoprime(String, String),
    #[error("matrix is not in GL2(Z): determinant {0}")]
    NotUnimodular(String),
    #[error("not a Thue form: degree {0} < 3")]
    NotThueForm(usize),
    #[error("empty right-hand side set")]
    EmptyRhs,
    #[error("height must be at least 1")]
    ZeroHeight,
    #[error("degenerate conic")]
    DegenerateConic,
    #[error("point is not on the conic")]
    PointNotOnConic,
    #[error("point must be a primitive nonzero triple")]
    NotPrimitivePoint,
    #[error("zero triple has no canonical representative")]
    ZeroTriple,
    #[error("reducible polynomial: {0}")]
    Reducible(String),
    #[error("({0}, {1}) is not a solution of F(U, V) = ±1")]
    NotUnitSolution(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;
