use std::fmt;

/// Library-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by validation and construction routines.
///
/// Internal consistency violations (a parity failure in an Euler
/// characteristic, a negative `h^1`) are bugs, not inputs, and panic instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two divisor classes over different bases were combined.
    BasisMismatch(String, String),
    /// A coefficient vector has the wrong length for its basis.
    CoeffLength { expected: usize, got: usize },
    /// Fewer than three rays.
    TooFewRays(usize),
    /// A ray is zero or not primitive.
    NonPrimitiveRay { index: usize, ray: (i64, i64) },
    /// Consecutive rays do not span the lattice positively.
    BadCone { index: usize, det: i64 },
    /// Every consecutive determinant is -1: the fan is listed clockwise.
    ClockwiseFan,
    /// The rays close up with the wrong winding number.
    BadWinding(i64),
    /// An index into the rays or cones of a fan is out of range.
    IndexOutOfRange { index: usize, len: usize },
    /// Blow-down requested at a ray of self-intersection other than -1.
    NotContractible { index: usize, self_int: i64 },
    /// Simultaneous blow-down of two adjacent rays.
    AdjacentContraction(usize, usize),
    /// Blow-down would leave fewer than three rays.
    TooSmallToContract,
    /// The operation needs ray classes but the surface does not carry them.
    MissingClasses,
    /// A toric system failed validation.
    InvalidSystem(String),
    /// A blow-up structure mixes toric and abstract steps, or refers to an
    /// earlier step that does not exist.
    InvalidStructure(String),
    /// A divisor class is not an integral combination of the ray classes.
    NotLiftable,
    /// The input to a quiver routine is outside its supported range.
    QuiverInput(String),
    /// A point of the projective plane is zero or repeated.
    BadPointConfig(String),
    /// A parameter is outside its documented range.
    ParamRange(String),
    /// Text input (rays, points, ranges) failed to parse.
    Parse(String),
    /// Integer overflow in fixed-width ray arithmetic.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BasisMismatch(a, b) => write!(f, "basis mismatch: {a} vs {b}"),
            Error::CoeffLength { expected, got } => {
                write!(f, "expected {expected} coefficients, got {got}")
            }
            Error::TooFewRays(n) => write!(f, "a complete fan needs at least 3 rays, got {n}"),
            Error::NonPrimitiveRay { index, ray } => {
                write!(f, "ray {index} = ({}, {}) is not primitive", ray.0, ray.1)
            }
            Error::BadCone { index, det } => write!(
                f,
                "rays {index} and {} span a cone of determinant {det}, expected 1",
                index + 1
            ),
            Error::ClockwiseFan => {
                write!(f, "rays are listed clockwise; reverse the order")
            }
            Error::BadWinding(w) => {
                write!(f, "rays wind {w} times around the origin, expected once")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for {len} rays")
            }
            Error::NotContractible { index, self_int } => write!(
                f,
                "ray {index} has self-intersection {self_int}, only -1 contracts"
            ),
            Error::AdjacentContraction(i, j) => {
                write!(f, "rays {i} and {j} are adjacent and cannot contract together")
            }
            Error::TooSmallToContract => write!(f, "contraction would leave fewer than 3 rays"),
            Error::MissingClasses => write!(f, "surface carries no ray class tracking"),
            Error::InvalidSystem(msg) => write!(f, "not a toric system: {msg}"),
            Error::InvalidStructure(msg) => write!(f, "invalid blow-up structure: {msg}"),
            Error::NotLiftable => write!(f, "class is not integral in the ray classes"),
            Error::QuiverInput(msg) => write!(f, "quiver input: {msg}"),
            Error::BadPointConfig(msg) => write!(f, "bad point configuration: {msg}"),
            Error::ParamRange(msg) => write!(f, "parameter out of range: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Overflow => write!(f, "integer overflow in ray arithmetic"),
        }
    }
}

impl std::error::Error for Error {}
