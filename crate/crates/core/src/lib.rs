//! Exact symbolic computation for curves in projective 3-space.
//!
//! The crate computes with graded ideals over the rationals, optionally
//! adjoining one formal parameter: degree slices, Hilbert functions and
//! regularity, weight-vector degenerations, and degrees of one-parameter
//! orbit closures against the tautological line bundles `M_n`.  Everything
//! is exact; there is no floating point anywhere.

pub mod cycles;
pub mod degeneration;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod macaulay;
pub mod orbits;
pub mod ring;
pub mod structure;
pub mod verify;

pub use ideal::GradedIdeal;
pub use macaulay::MacaulayData;
pub use ring::{IntPolynomial, Monomial, ParamForm, ParamScalar, Rat, RingSpec};

/// Crate-wide error type.  The `code` prefix names the module that raised
/// the error so CLI output can stay machine-greppable.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("ring/syntax: {msg} at byte {pos}")]
    Syntax { pos: usize, msg: String },
    #[error("ring/inhomogeneous: term of degree {found} in a form of degree {expected}")]
    Inhomogeneous { expected: u32, found: u32 },
    #[error("ring/unknown-variable: `{name}`")]
    UnknownVariable { name: String },
    #[error("ring/bad-ring: {0}")]
    BadRing(String),
    #[error("ring/fit: verification point n={n} expected {expected}, got {got}")]
    FitMismatch { n: i64, expected: String, got: String },
    #[error("ring/fit: need at least {need} samples with distinct n, got {got}")]
    FitTooFewSamples { need: usize, got: usize },
    #[error("macaulay/inadmissible: {0}")]
    Inadmissible(String),
    #[error("ideal/non-monomial: {0}")]
    NonMonomial(String),
    #[error("ideal/cutoff: {0}")]
    CutoffTooSmall(String),
    #[error("ideal/randomness: {0}")]
    BadRandomness(String),
    #[error("orbits/parameter-clash: action would introduce `{0}` but it already occurs")]
    ParameterClash(String),
    #[error("orbits/rank: {0}")]
    RankDeficient(String),
    #[error("orbits/projection: {0}")]
    ProjectionUnstable(String),
    #[error("orbits/non-integral: {0}")]
    NonIntegralDegree(String),
    #[error("cycles/unknown-family: `{0}`")]
    UnknownFamily(String),
    #[error("cycles/family-domain: {0}")]
    FamilyDomain(String),
    #[error("cycles/residual: {0}")]
    NonzeroResidual(String),
    #[error("degeneration/zero-divisor: {0}")]
    ZeroDivisor(String),
    #[error("degeneration/center: projection center equals the point")]
    ProjectionCenter,
    #[error("degeneration/check: {0}")]
    CheckFailed(String),
    #[error("structure/unsupported: {0}")]
    Unsupported(String),
    #[error("io/format: {0}")]
    Format(String),
}

impl Error {
    /// Stable machine-readable code, one per variant.
    pub fn code(&self) -> &'static str {
        use Error::*;
        match self {
            Syntax { .. } => "ring/syntax",
            Inhomogeneous { .. } => "ring/inhomogeneous",
            UnknownVariable { .. } => "ring/unknown-variable",
            BadRing(_) => "ring/bad-ring",
            FitMismatch { .. } | FitTooFewSamples { .. } => "ring/fit",
            Inadmissible(_) => "macaulay/inadmissible",
            NonMonomial(_) => "ideal/non-monomial",
            CutoffTooSmall(_) => "ideal/cutoff",
            BadRandomness(_) => "ideal/randomness",
            ParameterClash(_) => "orbits/parameter-clash",
            RankDeficient(_) => "orbits/rank",
            ProjectionUnstable(_) => "orbits/projection",
            NonIntegralDegree(_) => "orbits/non-integral",
            UnknownFamily(_) => "cycles/unknown-family",
            FamilyDomain(_) => "cycles/family-domain",
            NonzeroResidual(_) => "cycles/residual",
            ZeroDivisor(_) => "degeneration/zero-divisor",
            ProjectionCenter => "degeneration/center",
            CheckFailed(_) => "degeneration/check",
            Unsupported(_) => "structure/unsupported",
            Format(_) => "io/format",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
