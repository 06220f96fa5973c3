//! Dedekind sums, the multiplier ω_{h,k}, and the Kloosterman-type sums B̃
//! and D with their parameter plumbing (h′, c₁, k₁, l, δ^±, m^±).

mod dedekind;
mod kloosterman;
mod params;

pub use dedekind::{
    dedekind_sum, dedekind_sum_direct, h_prime, h_prime_modulus, omega, sawtooth, ExactRational,
};
pub use kloosterman::{
    b_tilde, b_tilde_sensitivity, b_tilde_with, d_sum, d_sum_with, modulus, HPrimeChoice,
    Sensitivity,
};
pub use params::{delta, m_param, sum_params, Sign, SumParams};
