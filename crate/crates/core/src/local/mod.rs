//! Local invariants and closed-form local orbital values.

mod bass;
mod cs;
mod cubic;
mod quadratic;

pub use bass::{bass_local_factor, BassLocalData};
pub use cs::{cs_classify_prime, cs_invariants, cs_local_data, cs_orbital, CsCase, CsCaseId, CsInvariants};
pub use cubic::{orbital_cubic, Component, CubicLocalData, CubicShape};
pub use quadratic::{
    fundamental_discriminant, is_fundamental_discriminant, orbital_quadratic, quad_splitting,
    serre_quadratic, QuadLocalData, Splitting,
};
