use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{normalize, EngineError};
use crate::graphs::Graph;

/// Integer label per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    values: Vec<i64>,
}

impl Labeling {
    pub fn new(values: Vec<i64>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of distinct labels.
    pub fn order(&self) -> usize {
        self.values.iter().collect::<BTreeSet<_>>().len()
    }

    /// Sum of labels over `N[v]`.
    pub fn closed_sum(&self, g: &Graph, v: usize) -> i128 {
        i128::from(self.values[v]) + g.neighbors(v).iter().map(|&w| i128::from(self.values[w])).sum::<i128>()
    }

    pub fn residues(&self, n: u64) -> Vec<u64> {
        self.values.iter().map(|&x| normalize(x, n)).collect()
    }
}

impl From<Vec<i64>> for Labeling {
    fn from(values: Vec<i64>) -> Self {
        Self::new(values)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub proper: bool,
    pub closed_ok: bool,
    pub order: usize,
    /// First problem found, scanning vertices in index order.
    pub first_violation: Option<String>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.proper && self.closed_ok
    }
}

/// Checks properness and that every closed-neighbourhood sum is `≡ k (mod n)`.
pub fn verify_labeling(g: &Graph, labeling: &Labeling, n: u64, k: i64) -> Result<VerifyReport, EngineError> {
    if n == 0 {
        return Err(EngineError::ZeroModulus);
    }
    if labeling.len() != g.vertex_count() {
        return Err(EngineError::LengthMismatch { expected: g.vertex_count(), found: labeling.len() });
    }
    let target = normalize(k, n);
    let values = labeling.values();
    let mut proper = true;
    let mut closed_ok = true;
    let mut first_violation = None;
    for v in 0..g.vertex_count() {
        if let Some(&w) = g.neighbors(v).iter().find(|&&w| w > v && values[w] == values[v]) {
            if proper && first_violation.is_none() {
                first_violation = Some(format!("edge {v}-{w} has equal labels {}", values[v]));
            }
            proper = false;
        }
        let sum = labeling.closed_sum(g, v);
        let r = sum.rem_euclid(i128::from(n)) as u64;
        if r != target {
            if closed_ok && first_violation.is_none() {
                first_violation = Some(format!("closed sum at vertex {v} is {sum} ≡ {r}, expected {target} (mod {n})"));
            }
            closed_ok = false;
        }
    }
    Ok(VerifyReport { proper, closed_ok, order: labeling.order(), first_violation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_family, FamilyDescriptor::*};
    use alloc::vec;

    #[test]
    fn path_three_with_zero_k_zero() {
        let g = build_family(&Path(3)).unwrap();
        for n in 1..7u64 {
            for k in 0..n as i64 {
                if k == 0 {
                    continue;
                }
                let r = verify_labeling(&g, &vec![0, k, 0].into(), n, k).unwrap();
                assert!(r.is_valid(), "n={n} k={k}: {r:?}");
                assert_eq!(r.order, 2);
            }
        }
    }

    #[test]
    fn constant_zero_on_six_cycle() {
        let g = build_family(&Cycle(6)).unwrap();
        let r = verify_labeling(&g, &vec![0; 6].into(), 2, 1).unwrap();
        assert!(!r.closed_ok);
        assert!(!r.proper);
        assert_eq!(r.order, 1);
        assert!(r.first_violation.unwrap().contains("edge 0-1"));
    }

    #[test]
    fn path_repeating_blocks() {
        let (n, k) = (5, 2);
        for (m, values) in [(8, vec![0, k, n, 0, k, n, 0, k]), (7, vec![k, 0, n, k, 0, n, k])] {
            let g = build_family(&Path(m)).unwrap();
            let r = verify_labeling(&g, &values.into(), n as u64, k).unwrap();
            assert!(r.is_valid(), "P{m}: {r:?}");
            assert_eq!(r.order, 3);
        }
        // the (0,k,n) block breaks at the far end when m ≡ 1 mod 3
        let g = build_family(&Path(7)).unwrap();
        let r = verify_labeling(&g, &vec![0, k, n, 0, k, n, 0].into(), n as u64, k).unwrap();
        assert!(r.proper && !r.closed_ok);
    }

    #[test]
    fn length_mismatch() {
        let g = build_family(&Path(3)).unwrap();
        assert_eq!(
            verify_labeling(&g, &vec![1, 2].into(), 3, 1),
            Err(EngineError::LengthMismatch { expected: 3, found: 2 })
        );
    }
}
