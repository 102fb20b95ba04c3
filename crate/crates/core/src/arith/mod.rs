//! Exact integer and rational primitives shared by every other module.

mod pi;
mod prime;
mod sums;
mod symbols;

pub use pi::{pi_enclosure, sqrt_upper, RationalEnclosure};
pub use prime::{factorize, is_prime, is_squarefree, ord_p, Factorization};
pub use sums::{bernoulli_plus, faulhaber, is_perfect_square, isqrt_floor, power_sum};
pub use symbols::kronecker;

pub(crate) use prime::valuation;
