//! Value-distribution and zero statistics.

mod dist;
mod expsum;
mod moments;
mod zerostats;

pub use dist::{
    char_fn_empirical, char_fn_model, char_fn_samples, dist_log_zeta, ks_distance, normal_cdf, psi, sample_indices, CharFnSample,
    DistSample, DistSummary,
};
pub use expsum::{exp_sum_over, exp_sum_over_grams, oscillation_bound, ExpSum, MAX_EXPSUM_T};
pub use moments::{
    default_panels, random_model_moment_exact, time_average_moment, time_average_moment_with_panels,
    MAX_EXACT_ORDER, MAX_EXACT_PRIMES, MAX_TIME_ORDER, MAX_TIME_T, MAX_TIME_Y,
};
pub use zerostats::{gue_pair_value, hypothesis_s_stat, pair_correlation, HypSStat, PairCorrStat};
