//! Arithmetic symmetric series: norm-truncated multiplicative series with
//! one alphabet per prime, the Dedekind and Artin series, the norm map, and
//! verifiers for their algebraic identities.

mod pairing;
mod series;
mod verify;

pub use pairing::{
    arithmetic_pairing, b_value, g_value, norm_grade, z_value, HlCombination, HlUnit, NormGrade,
};
pub use series::{
    artin_series, dedekind_series, degree_cap, dump_series, expansion_to_local,
    local_coeffs_from_traces, local_to_expansion, norm_map, power_rat, relative_dedekind_series,
    ArithSeries, GlobalBasis,
};
pub use verify::{
    compare_series, verify_brauer, verify_direct_sum, verify_factorization, verify_induction,
    verify_inflation, verify_norm_tower, verify_regular, verify_suite_core, VerifyOutcome,
};
