use super::{closed_chromatic_number, EngineError, SearchLimits, Verdict};
use crate::graphs::Graph;

/// One comparison of `χ_{n,k1+k2}` against `χ_{n,k1} + χ_{n,k2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditivityRecord {
    pub lhs: Verdict,
    pub k1: Verdict,
    pub k2: Verdict,
    pub rhs_sum: Option<usize>,
    /// `None` when some side is unknown or does not exist.
    pub subadditive: Option<bool>,
}

impl AdditivityRecord {
    pub fn is_violation(&self) -> bool {
        self.subadditive == Some(false)
    }
}

pub fn probe_additivity(g: &Graph, n: u64, k1: i64, k2: i64, limits: &SearchLimits) -> Result<AdditivityRecord, EngineError> {
    let lhs = closed_chromatic_number(g, n, k1 + k2, limits)?.without_witness();
    let a = closed_chromatic_number(g, n, k1, limits)?.without_witness();
    let b = closed_chromatic_number(g, n, k2, limits)?.without_witness();
    let rhs_sum = a.value().zip(b.value()).map(|(x, y)| x + y);
    let subadditive = lhs.value().zip(rhs_sum).map(|(l, r)| l <= r);
    Ok(AdditivityRecord { lhs, k1: a, k2: b, rhs_sum, subadditive })
}
