//! Single-alphabet symmetric function engine.
//!
//! Expansions are finitely supported maps from partitions to coefficients,
//! tagged with a basis. Conversions route through the power-sum basis;
//! Hall-Littlewood transitions come from the finite-variable coset formula,
//! symbolically in `t` or specialized at a rational value.

mod coeff;
mod convert;
mod eval;
mod expansion;
mod hl;
mod modified;
mod mpoly;
mod pairing;
mod transition;

pub use coeff::Coeff;
pub use convert::{
    hl_structure_constants_at, hl_structure_constants_symbolic, plethystic_exp_truncated,
    ApplyEntry,
};
pub use eval::{eval_at_traces, PowerTraceSeq};
pub use expansion::{Basis, SymExpansion, TSpec};
pub use hl::{
    hl_p_finite, hl_p_finite_eval, hl_p_in_monomials, principal_specialization_p,
    SYMBOLIC_DEGREE_CAP,
};
pub use modified::{
    hl_p_inverted_t, modified_hl_plethysm_oracle, modified_hl_schur, modified_hl_schur_ratfun,
};
pub use mpoly::MultiPoly;
pub use pairing::{hall_pairing, hall_pairing_t, z_lambda_t};
pub use transition::{
    classical_tables, hl_spec_tables, hl_symbolic_tables, z_lambda, ClassicalTables, DegreeIndex,
    HlSpecTables, HlSymbolicTables,
};
