//! Enumeration of S-rings and exhaustive verification of the theorem-level
//! statements.

mod enumerate;
mod verify;

pub use enumerate::{enumerate_all_srings, enumerate_k_invariant_srings, enumerate_k_permuted_srings};
pub use verify::{
    build_counterexample, prop23_pair, verify_corollary_42, verify_counterexample, verify_duality, verify_lemma_power,
    verify_prop13, verify_schur_multiplier, verify_separating, verify_theorem1, verify_theorem2, verify_theorem3,
    verify_theorem4, verify_wielandt, COUNTEREXAMPLE_PRIME_CAP, SCAN_CAP,
};
