use thiserror::Error;

/// Errors raised by the arithmetic, local, bound and oracle routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no prime factorization or valuation")]
    Zero,
    #[error("expected a nonnegative integer, got {0}")]
    Negative(i128),
    #[error("{0} is not prime")]
    NotPrime(u128),
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i128),
    #[error("invalid negative discriminant {0} (must be < 0 and congruent to 0 or 1 mod 4)")]
    InvalidDiscriminant(i64),
    #[error("{0} is not a squarefree integer other than 0 and 1")]
    NotSquarefree(i64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("inconsistent local data: {0}")]
    InvalidLocalData(String),
    #[error("orbital value is not an integer: {0}")]
    NonIntegral(String),
    #[error("prime {p} does not divide the discriminant of the order at m = {m}")]
    PrimeDoesNotDivide { m: i32, p: u128 },
    #[error("prime {p} divides the discriminant at m = {m}, but 2 and 3 never do")]
    ExcludedPrime { m: i32, p: u128 },
    #[error("case assertion failed at m = {m}, p = {p}: p divides C but ord_p(discriminant) = {ord} is not in {{2, 3, 4}}")]
    CaseAssertion { m: i32, p: u128, ord: u32 },
    #[error("the exact class number of the order is required for real quadratic fields (d = {0})")]
    MissingClassNumber(i64),
    #[error("bound violated for d = {d}, f = {f}: exact size {exact} exceeds bound {bound} ({which})")]
    AuditViolation {
        d: i64,
        f: u64,
        exact: u64,
        bound: String,
        which: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
