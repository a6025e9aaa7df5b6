use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Determinant vanishes, so the matrix does not define a Möbius map.
    #[error("degenerate transform: |det| = {0:e}")]
    DegenerateTransform(f64),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// Every point is fixed; there is no finite fixed-point set to report.
    #[error("transform is the identity map")]
    IdentityTransform,

    #[error("matrix is not unitary (deviation {0:e})")]
    NotUnitary(f64),

    /// Det-1 normalization is not unitary: the map is not a sphere rotation.
    #[error("Möbius map is not a Bloch-sphere rotation (deviation {0:e})")]
    NotARotation(f64),

    #[error("zero vector has no projective point")]
    ZeroVector,

    #[error("state is not normalized (|a|^2 + |b|^2 = {0})")]
    NotNormalized(f64),

    #[error("vector is not on the unit sphere (norm {0})")]
    NotUnitVector(f64),

    #[error("plane offset |h| = {0} does not cut the sphere in a circle")]
    DegeneratePlane(f64),

    #[error("degenerate orbit: {0}")]
    DegenerateOrbit(String),

    /// Matrix-product and Möbius-composition routes disagree.
    #[error("composition routes disagree by {0:e}")]
    RouteMismatch(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
