//! Generalized Petersen graphs `G(m, j)`.
//!
//! The constant labeling 1 has remainder 4, and scaling a coloring scales its
//! remainder, so the remainders that admit a closed coloring form a subgroup
//! of `Z/n` containing 4. When `4 | n`, existence therefore depends only on
//! `k mod 4`: odd `k` behaves like 1, `k ≡ 2` like 2, and `k ≡ 0` always works.

use alloc::format;
use alloc::vec::Vec;

use super::*;
use crate::engine::{exists_closed_coloring, Budget};

pub fn petersen_chromatic_number(m: usize, j: usize) -> usize {
    if m.is_multiple_of(2) && j % 2 == 1 {
        2
    } else {
        3
    }
}

/// Exterior/interior blocks, split by index parity when `m` is even.
fn block_classes(m: usize) -> Vec<usize> {
    let side = |i: usize, base: usize| if m.is_multiple_of(2) { base + i % 2 } else { base / 2 };
    (0..m).map(|i| side(i, 0)).chain((0..m).map(|i| side(i, 2))).collect()
}

/// Lexicographically least closed coloring mod `n` that is constant on each
/// block, as residues in vertex order `v_0.., u_0..`. Not proper in general.
pub fn petersen_block_witness(m: usize, j: usize, n: u64, k: i64) -> Option<Labeling> {
    let g = build_family(&FamilyDescriptor::Petersen(m, j)).ok()?;
    if n == 0 {
        return None;
    }
    let classes = block_classes(m);
    let block = class_system_solution(&g, &classes, n, k)?;
    let values = classes.iter().map(|&c| block[c] as i64).collect();
    let labeling = Labeling::new(values);
    let report = verify_labeling(&g, &labeling, n, k).expect("labeling covers the graph");
    report.closed_ok.then_some(labeling)
}

/// Exact remainder 1 when `4 | m` and `j` is odd.
fn remainder_one_pattern(m: usize, j: usize) -> Option<Vec<i64>> {
    (m.is_multiple_of(4) && j % 2 == 1).then(|| {
        let ext = (0..m).map(|i| i64::from(i % 4 == 0));
        let int = (0..m).map(|i| i64::from(i % 4 == 2));
        ext.chain(int).collect()
    })
}

/// Exact remainder 2 when `m` is even and `j` is odd.
fn remainder_two_pattern(m: usize, j: usize) -> Option<Vec<i64>> {
    (m.is_multiple_of(2) && j % 2 == 1).then(|| {
        let half = (0..m).map(|i| i64::from(i % 2 == 0));
        half.clone().chain(half).collect()
    })
}

/// A closed coloring mod `n` with remainder `k`, as residues, built from
/// blocks or the explicit patterns scaled by `k` or `k/2`.
fn petersen_residues(m: usize, j: usize, n: u64, k: i64) -> Option<Vec<u64>> {
    let scaled = |base: Vec<i64>, factor: i64| base.iter().map(|&x| normalize(x * factor, n)).collect::<Vec<_>>();
    if let Some(l) = petersen_block_witness(m, j, n, k) {
        return Some(l.residues(n));
    }
    let one = petersen_block_witness(m, j, n, 1).map(Labeling::into_values).or_else(|| remainder_one_pattern(m, j));
    if let Some(base) = one {
        return Some(scaled(base, k));
    }
    if k % 2 == 0 {
        let two = petersen_block_witness(m, j, n, 2).map(Labeling::into_values).or_else(|| remainder_two_pattern(m, j));
        if let Some(base) = two {
            return Some(scaled(base, k / 2));
        }
    }
    None
}

/// Existence of remainder 1 when `4 | n`; `None` for the open cells.
fn k1_exists(tv: &mut TheoremVerdict, m: usize, j: usize, n: u64) -> Option<bool> {
    if !tv.check("2|m", m.is_multiple_of(2)) {
        return Some(false);
    }
    if !tv.check("2|j", j.is_multiple_of(2)) {
        return Some(tv.check("4|m", m.is_multiple_of(4)));
    }
    if !tv.check("8|n", n.is_multiple_of(8)) {
        return Some(true);
    }
    if !tv.check("4|m", m.is_multiple_of(4)) {
        return Some(false);
    }
    if tv.check("16|n", n.is_multiple_of(16)) && !tv.check("8|m", m.is_multiple_of(8)) {
        return Some(false);
    }
    None
}

/// Existence of remainder 2 when `4 | n`; `None` for the open cells.
///
/// With `j` odd and `m` even the explicit pattern settles existence, so that
/// case is decided before the `4 ∤ m` case, whose argument needs `j` even.
fn k2_exists(tv: &mut TheoremVerdict, m: usize, j: usize, n: u64) -> Option<bool> {
    if !tv.check("8|n", n.is_multiple_of(8)) {
        return Some(true);
    }
    if !tv.check("2|m", m.is_multiple_of(2)) {
        return Some(false);
    }
    if !tv.check("2|j", j.is_multiple_of(2)) {
        return Some(true);
    }
    if !tv.check("4|m", m.is_multiple_of(4)) {
        return Some(!tv.check("16|n", n.is_multiple_of(16)));
    }
    None
}

pub(super) fn classify_petersen(m: usize, j: usize, g: &Graph, n: u64, k: i64) -> TheoremVerdict {
    let chi = petersen_chromatic_number(m, j);
    let four_n = gcd_n(4, n);
    let mut screen = TheoremVerdict::new(THM_REGULAR_SCREEN);
    if screen.check("(4,n)|k", divides(four_n, k.into())) {
        let c = solve_congruence(4, k.into(), n).expect("solvable");
        let w = witness_from_residues(g, &alloc::vec![c; 2 * m], n, k, Some(chi));
        return screen.exists(Some(chi), w);
    }

    let id = match k {
        1 => THM_PETERSEN_K1,
        2 => THM_PETERSEN_K2,
        _ => RED_PETERSEN_KMOD4,
    };
    let mut tv = TheoremVerdict::new(id);
    tv.check("(4,n)|k", false);
    let exists = if !tv.check("4|n", n.is_multiple_of(4)) {
        // (4, n) = 2 and k odd: remainder 1 exists.
        Some(true)
    } else if tv.check("k odd", k % 2 == 1) {
        k1_exists(&mut tv, m, j, n)
    } else {
        k2_exists(&mut tv, m, j, n)
    };
    if id == RED_PETERSEN_KMOD4 {
        tv.note = Some(format!("reduced to k = {}", if k % 2 == 1 { 1 } else { 2 }));
    }
    match exists {
        Some(true) => {
            let w = petersen_residues(m, j, n, k).and_then(|x| witness_from_residues(g, &x, n, k, None));
            tv.exists(None, w)
        }
        Some(false) => tv.not_exists(),
        None => tv.unknown("existence not currently known"),
    }
}

/// One cell of a Petersen sweep: the classifier's claim next to the
/// linear-algebra answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontierRecord {
    pub m: usize,
    pub j: usize,
    pub n: u64,
    pub k: i64,
    pub classifier: TheoremVerdict,
    pub oracle: Verdict,
}

impl FrontierRecord {
    /// The classifier decided and the oracle disagrees.
    pub fn is_failure(&self) -> bool {
        matches!((self.classifier.verdict.existence(), self.oracle.existence()), (Some(a), Some(b)) if a != b)
    }

    /// The classifier is silent and the oracle answered.
    pub fn resolves_open_cell(&self) -> bool {
        self.classifier.verdict.is_unknown() && !self.oracle.is_unknown()
    }
}

/// Classifier and oracle existence for every `(m, j, n, k)` in the grid with
/// `1 ≤ j < m/2` and `j_filter(m, j)`, in that nesting order.
///
/// Once the budget runs out the remaining oracle cells are `Unknown("budget")`.
pub fn petersen_frontier(
    ms: &[usize],
    j_filter: &dyn Fn(usize, usize) -> bool,
    ns: &[u64],
    ks: &[i64],
    budget: &mut dyn Budget,
) -> Result<Vec<FrontierRecord>, GraphError> {
    let mut out = Vec::new();
    let mut exhausted = false;
    for &m in ms {
        for j in (1..m).take_while(|&j| 2 * j < m).filter(|&j| j_filter(m, j)) {
            let desc = FamilyDescriptor::Petersen(m, j);
            let g = build_family(&desc)?;
            let system = crate::engine::ClosedSystem::new(&g);
            for &n in ns {
                for &k in ks {
                    let classifier = classify(&desc, n, k)?;
                    exhausted = exhausted || budget.exhausted();
                    let oracle = if exhausted {
                        Verdict::unknown("budget")
                    } else {
                        match system.solve(n, k).map_err(|e| GraphError::InvalidParameter(format!("{e}")))? {
                            Some(_) => Verdict::exists(None, None, crate::engine::SOURCE_ORACLE),
                            None => Verdict::not_exists(crate::engine::SOURCE_ORACLE),
                        }
                    };
                    out.push(FrontierRecord { m, j, n, k, classifier, oracle });
                }
            }
        }
    }
    Ok(out)
}

/// Oracle existence for one Petersen cell.
pub fn petersen_oracle_exists(m: usize, j: usize, n: u64, k: i64) -> Result<bool, GraphError> {
    let g = build_family(&FamilyDescriptor::Petersen(m, j))?;
    Ok(exists_closed_coloring(&g, n, k).map_err(|e| GraphError::InvalidParameter(format!("{e}")))?.is_some())
}
