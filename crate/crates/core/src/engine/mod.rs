//! Exact computation of closed chromatic numbers on finite graphs.
//!
//! Existence reduces to a linear system over `Z/n` on `A + I`. The value is
//! the minimum, over residue solutions `x`, of `Σ_r χ(G[x⁻¹(r)])`.

mod chromatic;
mod closed;
mod ieds;
mod labeling;
mod probe;
mod verdict;

pub use chromatic::{exact_chromatic_number, optimal_coloring, MAX_BITMASK_VERTICES};
pub use closed::{
    closed_chromatic_number, closed_chromatic_number_with_budget, closed_matrix, exists_closed_coloring, lift_residues,
    min_order_for_residue_solution, ClosedSystem, SOURCE_ORACLE,
};
pub use ieds::{coloring_from_ieds, find_ieds, is_ieds, SOURCE_IEDS};
pub use labeling::{verify_labeling, Labeling, VerifyReport};
pub use probe::{probe_additivity, AdditivityRecord};
pub use verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("labeling has {found} values for {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("{vertices} vertices exceed the chromatic search bound {bound}")]
    ChromaticBound { vertices: usize, bound: usize },
    #[error("{vertices} vertices exceed the IEDS search bound {bound}")]
    IedsBound { vertices: usize, bound: usize },
    #[error("residue tuple is not a solution of the closed system")]
    NotASolution,
    #[error("vertex set is not an independent efficient dominating set")]
    NotIeds,
    #[error("modulus must be positive")]
    ZeroModulus,
}

/// `k mod n` in `0..n`.
pub fn normalize(k: i64, n: u64) -> u64 {
    i128::from(k).rem_euclid(i128::from(n)) as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Residue solutions examined before giving up with an upper bound.
    pub enumeration_cap: usize,
    /// Largest vertex count for exact χ (at most 64).
    pub chromatic_bound: usize,
    pub ieds_bound: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self { enumeration_cap: 1_000_000, chromatic_bound: MAX_BITMASK_VERTICES, ieds_bound: 64 }
    }
}

/// Cooperative cancellation, polled between batches of work.
pub trait Budget {
    fn exhausted(&mut self) -> bool;
}

/// A budget that never runs out.
#[derive(Clone, Copy, Debug, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn exhausted(&mut self) -> bool {
        false
    }
}
