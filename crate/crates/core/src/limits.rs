//! Process-wide resource caps for the exhaustive algorithms.
//!
//! Every enumeration in this crate is brute force, so each one checks its
//! input size against a cap before starting. The caps can be changed at
//! runtime with [`set_limits`]; the CLI does this from its flags.

use std::sync::RwLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order accepted by subgroup and automorphism enumeration.
    pub group_cap: usize,
    /// Largest group order accepted by the all-S-rings enumeration.
    pub sring_enum_cap: usize,
    /// Largest number of K-orbits accepted by the orbit-block enumeration.
    pub orbit_block_cap: usize,
    /// Largest permutation group built by closure.
    pub closure_cap: usize,
    /// Largest automorphism group materialized as a list.
    pub aut_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            group_cap: 64,
            sring_enum_cap: 16,
            orbit_block_cap: 14,
            closure_cap: 1_000_000,
            aut_cap: 100_000,
        }
    }
}

static LIMITS: RwLock<Option<Limits>> = RwLock::new(None);

pub fn limits() -> Limits {
    LIMITS
        .read()
        .map(|l| l.unwrap_or_default())
        .unwrap_or_default()
}

pub fn set_limits(new: Limits) {
    if let Ok(mut l) = LIMITS.write() {
        *l = Some(new);
    }
}

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> crate::Result<()> {
    if size > cap {
        Err(crate::Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
