use alloc::string::String;

use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChebyshevError {
    #[error("sinh(N arcsinh x) is a polynomial only for odd N, got N = {0}")]
    EvenSinhDegree(u32),
    #[error("outer degree N must be odd on the hyperbolic branch, got N = {0}")]
    EvenOuterOnHyperbolic(u32),
    #[error("outer degree must be at least 1")]
    ZeroOuterDegree,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FkError {
    #[error("m_i^(k) is only defined for 1 <= k <= s (got k = {k}, s = {s})")]
    StepOutOfRange { k: u32, s: u32 },
    #[error("part size must lie in 1..=4 (got {0})")]
    PartOutOfRange(u32),
    #[error("partition weight {weight} exceeds s = {s}")]
    WeightTooLarge { weight: u32, s: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BipartiteError {
    #[error("inner degree s must be at least 2 (got {0})")]
    DegreeTooSmall(u32),
    #[error("solvability conditions fail: F_1 = {f1}, aux = {aux}")]
    ConditionsNotMet { f1: Rational, aux: Rational },
    #[error("internal consistency failure: identity residual is nonzero")]
    IdentityResidualNonzero,
    #[error("unit-amplitude normalization is undefined when m = 0")]
    NormalizationUndefined,
    #[error(transparent)]
    Chebyshev(#[from] ChebyshevError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContinuationError {
    #[error("branch index {index} out of range: {available} real starting roots")]
    InvalidBranchIndex { index: usize, available: usize },
    #[error(transparent)]
    Bipartite(#[from] BipartiteError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultipartiteError {
    #[error("outside data must satisfy r = 2l + 2 (got r = {r}, l = {l})")]
    DegreeMismatch { r: usize, l: usize },
    #[error("p and q must be monic")]
    NotMonic,
    #[error("outside data contains a repeated abscissa")]
    RepeatedAbscissa,
    #[error("no constants (c, m^2) make the identity exact")]
    NoConsistentConstants,
    #[error("inner degree s must be at least 1")]
    ZeroDegree,
    #[error("index j = {j} outside 0..s (s = {s})")]
    IndexOutOfRange { j: i64, s: u32 },
    #[error(transparent)]
    Chebyshev(#[from] ChebyshevError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EllipticError {
    #[error("every divisor of n = {0} is congruent to 1 mod 8; no completion guarantee")]
    ClassNotCovered(u32),
    #[error("no divisor of n = {n} admits solving for c{target}")]
    TargetNotAdmissible { n: u32, target: usize },
    #[error("the interval is not strictly inside a validity interval of the closed form")]
    IntervalNotValid,
    #[error("internal consistency failure: identity residual is nonzero for s = {0}")]
    IdentityResidualNonzero(u32),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("tolerance {tol:e} not reached (estimate {estimate:e})")]
    ToleranceNotReached { tol: f64, estimate: f64 },
    #[error("integrand evaluated outside its validity region at x = {0}")]
    RegionViolation(f64),
}
