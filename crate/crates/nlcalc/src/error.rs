use thiserror::Error;

use crate::nl::NLReport;

/// Unified error type for the whole crate.
///
/// Variants split into two groups: domain errors that callers are expected to
/// handle (degenerate geometry, out-of-window queries, bad parameters), and
/// soundness alarms (`StabilizationFailure`, `AdditivityFailure`,
/// `ContributionNegative`, `AuditFailure`, `ViolationFound`, `EqualityFailed`)
/// that signal either an arithmetic bug or a genuine counterexample and should
/// never fire on valid inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("the two spanning points coincide projectively and do not determine a line")]
    DegenerateSpan,
    #[error("the two lines coincide; incidence is undefined for identical lines")]
    SameLine,
    #[error("the probe line is already a member of the arrangement")]
    MemberLine,
    #[error("arrangement contains two coincident lines")]
    DuplicateLine,
    #[error("a projective point must have at least one nonzero coordinate")]
    ZeroPoint,
    #[error("arrangement must contain at least {min} lines (got {got})")]
    TooFewLines { min: usize, got: usize },
    #[error("custom family requires an explicit witness arrangement")]
    MissingWitness,
    #[error("a seed is required to realize a generated witness for a named family")]
    SeedRequired,
    #[error("lattice rank must be at least 3 (got {0})")]
    BadRank(i64),
    #[error("degree out of range: {0}")]
    BadDegree(i64),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is below the 2^20 safety floor for rank computations")]
    PrimeTooSmall(u64),
    #[error("modular division by a residue that is zero mod {0}")]
    ZeroDivisor(u64),
    #[error("degree {got} is below the admissible window (needs at least {min})")]
    OutOfWindow { got: i64, min: i64 },
    #[error("hilbert function failed to stabilize: {0}")]
    StabilizationFailure(String),
    #[error("codimension additivity failed: {0}")]
    AdditivityFailure(String),
    #[error("induction contribution is negative: {0}")]
    ContributionNegative(String),
    #[error("audit inequality failed at r={r}, d={d}: lhs={lhs} <= rhs={rhs}")]
    AuditFailure { r: i64, d: i64, lhs: i64, rhs: i64 },
    #[error("bound violated: {0}")]
    ViolationFound(Box<NLReport>),
    #[error("equality expected for a coplanar family but slack is nonzero: {0}")]
    EqualityFailed(Box<NLReport>),
    #[error("invalid divisor data: {0}")]
    BadDivisor(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
