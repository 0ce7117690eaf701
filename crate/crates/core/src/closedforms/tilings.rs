use alloc::format;
use alloc::string::String;

use super::*;
use crate::graphs::{build_torus_quotient, tiling_classes, Tiling};

pub const TILING_SCOPE_NOTE: &str = "infinite-graph result: finite quotient used only as witness";

pub(super) fn mary_tree(m: usize, n: u64, k: i64) -> TheoremVerdict {
    let mut tv = TheoremVerdict::new(THM_MARY_TREE);
    let value = if tv.check("n|mk", divides(n, m as i128 * i128::from(k))) { 2 } else { 3 };
    tv.exists(Some(value), None)
}

/// The tiling condition: `(7,n) | k`, `(5,n) | k` or `(8,n) | 2k`.
fn tiling_condition(t: Tiling, n: u64, k: i64) -> (&'static str, bool) {
    let k = i128::from(k);
    match t {
        Tiling::R3 => ("(7,n)|k", divides(gcd_n(7, n), k)),
        Tiling::R4 => ("(5,n)|k", divides(gcd_n(5, n), k)),
        Tiling::R6 => ("(8,n)|2k", divides(gcd_n(8, n), 2 * k)),
    }
}

pub(super) fn tiling(t: Tiling, n: u64, k: i64) -> TheoremVerdict {
    let mut tv = TheoremVerdict::new(THM_TILINGS);
    let (name, holds) = tiling_condition(t, n, k);
    let chi = if t == Tiling::R3 { 3 } else { 2 };
    let value = if tv.check(name, holds) { chi } else { chi + 1 };
    tv.exists(Some(value), None).with_note(TILING_SCOPE_NOTE)
}

/// A proper closed coloring of the `a × b` torus quotient that is constant
/// mod `n` on each class of the tiling's minimal coloring.
///
/// Class `c` with residue `r_c` gets the label `r_c + n·c`, so the order
/// equals the class count. `None` when the class system has no solution.
pub fn tiling_quotient_witness(t: Tiling, n: u64, k: i64, a: usize, b: usize) -> Result<Option<Labeling>, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter(String::from("modulus must be positive")));
    }
    let g = build_torus_quotient(t, a, b)?;
    let classes = tiling_classes(t, a, b).ok_or_else(|| {
        GraphError::InvalidParameter(format!("{} quotient {a}x{b} is incompatible with its class structure", t.name()))
    })?;
    let Some(residues) = class_system_solution(&g, &classes, n, k) else {
        return Ok(None);
    };
    let values = classes.iter().map(|&c| residues[c] as i64 + n as i64 * c as i64).collect();
    let labeling = Labeling::new(values);
    let report = verify_labeling(&g, &labeling, n, k).expect("labeling covers the quotient");
    Ok(report.is_valid().then_some(labeling))
}

/// Smallest quotient dimensions compatible with the class structure.
pub fn default_quotient(t: Tiling) -> (usize, usize) {
    match t {
        Tiling::R3 => (6, 6),
        Tiling::R4 => (4, 4),
        Tiling::R6 => (2, 2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_examples() {
        let l = tiling_quotient_witness(Tiling::R4, 2, 1, 4, 4).unwrap().unwrap();
        assert!(l.residues(2).iter().all(|&r| r == 1));
        assert_eq!(l.order(), 2);

        assert_eq!(tiling_quotient_witness(Tiling::R6, 8, 1, 3, 3).unwrap(), None);

        let l = tiling_quotient_witness(Tiling::R3, 7, 7, 6, 6).unwrap().unwrap();
        assert!(l.residues(7).iter().all(|&r| r == 0));
        assert_eq!(l.order(), 3);

        assert!(tiling_quotient_witness(Tiling::R4, 2, 1, 5, 4).is_err());
        assert!(tiling_quotient_witness(Tiling::R3, 2, 1, 4, 6).is_err());
    }

    #[test]
    fn witness_exactly_when_condition_holds() {
        for t in [Tiling::R3, Tiling::R4, Tiling::R6] {
            let (a, b) = default_quotient(t);
            for n in 1..=12u64 {
                for k in 0..n as i64 {
                    let w = tiling_quotient_witness(t, n, k, a, b).unwrap();
                    assert_eq!(w.is_some(), tiling_condition(t, n, k).1, "{t:?} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn classifier_values() {
        assert_eq!(tiling(Tiling::R3, 5, 3).verdict.value(), Some(3));
        assert_eq!(tiling(Tiling::R3, 14, 3).verdict.value(), Some(4));
        assert_eq!(tiling(Tiling::R6, 8, 4).verdict.value(), Some(2));
        assert_eq!(tiling(Tiling::R6, 16, 2).verdict.value(), Some(3));
        assert_eq!(mary_tree(3, 6, 2).verdict.value(), Some(2));
        assert_eq!(mary_tree(3, 6, 1).verdict.value(), Some(3));
    }
}
