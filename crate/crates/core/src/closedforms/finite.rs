use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::engine::{optimal_coloring, Labeling};

/// `χ_{n,0}(G) = χ(G)`, witnessed by `n` times an optimal coloring.
pub(super) fn zero_remainder(tv: TheoremVerdict, g: &Graph, n: u64, known_chi: Option<usize>) -> TheoremVerdict {
    match optimal_coloring(g, MAX_BITMASK_VERTICES) {
        Ok((chi, colors)) => {
            let values = colors.iter().map(|&c| (n as i64) * c as i64).collect();
            tv.exists(Some(chi), Some(Labeling::new(values)))
        }
        Err(_) => tv.exists(known_chi, None),
    }
    .with_note("k ≡ 0: value is χ(G)")
}

pub(super) fn complete_star_friendship(desc: &FamilyDescriptor, g: &Graph, n: u64, k: i64) -> TheoremVerdict {
    let mut tv = TheoremVerdict::new(THM_COMPLETE_STAR_FRIENDSHIP);
    let chi = family_chromatic_number(desc);
    if tv.check("n|k", k == 0) {
        return zero_remainder(tv, g, n, chi);
    }
    // One vertex meets every closed neighbourhood; it alone carries k.
    let mut x = vec![0; g.vertex_count()];
    x[0] = k as u64;
    let w = witness_from_residues(g, &x, n, k, chi);
    tv.exists(chi, w)
}

pub(super) fn paths(m: usize, g: &Graph, n: u64, k: i64) -> TheoremVerdict {
    let mut tv = TheoremVerdict::new(THM_PATHS);
    if tv.check("n|k", k == 0) {
        return zero_remainder(tv, g, n, Some(m.min(2)));
    }
    let (value, x): (usize, Vec<u64>) = match m {
        1 => (1, vec![k as u64]),
        2 | 3 => (2, (0..m).map(|i| if i == 1 { k as u64 } else { 0 }).collect()),
        _ if tv.check("m≡1 mod 3", m % 3 == 1) => (3, (0..m).map(|i| if i % 3 == 0 { k as u64 } else { 0 }).collect()),
        _ => (3, (0..m).map(|i| if i % 3 == 1 { k as u64 } else { 0 }).collect()),
    };
    let w = witness_from_residues(g, &x, n, k, Some(value));
    tv.exists(Some(value), w)
}

pub(super) fn bipartite(i: usize, j: usize, g: &Graph, n: u64, k: i64) -> TheoremVerdict {
    let mut tv = TheoremVerdict::new(THM_BIPARTITE);
    let (ii, jj, kk) = (i as i128, j as i128, i128::from(k));
    let d = gcd_n(ii * jj - 1, n);
    if !tv.check("(ij-1,n)|(j-1)k", divides(d, (jj - 1) * kk)) {
        return tv.not_exists();
    }
    if tv.check("n|k", k == 0) {
        return zero_remainder(tv, g, n, Some(2));
    }
    let alpha = solve_congruence(ii * jj - 1, (jj - 1) * kk, n).expect("solvable by the divisibility condition");
    let beta = (kk - ii * i128::from(alpha)).rem_euclid(i128::from(n)) as u64;
    let x: Vec<u64> = (0..i + j).map(|v| if v < i { alpha } else { beta }).collect();
    let w = witness_from_residues(g, &x, n, k, Some(2));
    tv.exists(Some(2), w)
}

pub(super) fn cycles(m: usize, g: &Graph, n: u64, k: i64) -> TheoremVerdict {
    let mut tv = TheoremVerdict::new(THM_CYCLES);
    let three_k = tv.check("(3,n)|k", divides(gcd_n(3, n), k.into()));
    let even = tv.check("2|m", m.is_multiple_of(2));
    let (value, x) = if three_k {
        let c = solve_congruence(3, k.into(), n).expect("solvable");
        (if even { 2 } else { 3 }, vec![c; m])
    } else if tv.check("3|m", m.is_multiple_of(3)) {
        (3, (0..m).map(|i| if i % 3 == 1 { k as u64 } else { 0 }).collect())
    } else {
        return tv.not_exists();
    };
    let w = witness_from_residues(g, &x, n, k, Some(value));
    tv.exists(Some(value), w)
}

/// Caterpillar `C_{m1,m2}` with `M = m1·m2 − m1 − m2`. Parameters with
/// `M ≤ 0` use `(a, n) = (|a|, n)` and `(0, n) = n`.
pub(super) fn caterpillar(m1: usize, m2: usize, g: &Graph, n: u64, k: i64) -> TheoremVerdict {
    let mut tv = TheoremVerdict::new(THM_CATERPILLAR);
    let (a, b, kk, nn) = (m1 as i128, m2 as i128, i128::from(k), i128::from(n));
    let big_m = a * b - a - b;
    if big_m <= 0 {
        tv.note = Some(format!("degenerate M = {big_m}"));
    }
    if !tv.check("(M,n)|m1k", divides(gcd_n(big_m, n), a * kk)) {
        return tv.not_exists();
    }
    let two = divides(n, a * b * kk / i128::from(gcd_n(a, gcd_n(b, n))));
    let g3 = gcd_n(a - 2, gcd_n(b - 2, n));
    let value = if tv.check("n|m1m2k/(m1,m2,n)", two) {
        2
    } else if tv.check("n|(m1-m2)k/(m1-2,m2-2,n)", divides(n, (a - b) * kk / i128::from(g3))) {
        3
    } else {
        4
    };

    // Legs under x share α1, legs under y share α2 = (m1−1)α1 + k.
    let admissible = |alpha1: i128| {
        let main = (big_m * alpha1 + b * kk).rem_euclid(nn) == 0;
        main && match value {
            2 => (a * alpha1).rem_euclid(nn) == 0,
            3 => ((a - 2) * alpha1 + kk).rem_euclid(nn) == 0,
            _ => true,
        }
    };
    let w = (0..nn).find(|&alpha1| admissible(alpha1)).and_then(|alpha1| {
        let alpha2 = ((a - 1) * alpha1 + kk).rem_euclid(nn);
        let r = |v: i128| v.rem_euclid(nn) as u64;
        let x: Vec<u64> = [r(kk - alpha1), r(kk - alpha2)]
            .into_iter()
            .chain(core::iter::repeat_n(r(alpha1), m1))
            .chain(core::iter::repeat_n(r(alpha2), m2))
            .collect();
        witness_from_residues(g, &x, n, k, Some(value))
    });
    let missing = w.is_none();
    let mut tv = tv.exists(Some(value), w);
    if missing {
        let note = match tv.note.take() {
            Some(prev) => format!("{prev}; no witness of the stated order"),
            None => String::from("no witness of the stated order"),
        };
        return tv.with_note(note);
    }
    tv
}

/// Screen for `j`-regular graphs: `(j+1, n) | k` gives `χ(G)`, and
/// `(j+1, n) ∤ k·|V|` rules existence out.
pub fn regular_graph_screen(g: &Graph, n: u64, k: i64) -> Result<TheoremVerdict, GraphError> {
    let Some(j) = g.regular_degree() else {
        return Err(GraphError::InvalidParameter(String::from("regular-graph screen needs a regular graph")));
    };
    if n == 0 {
        return Err(GraphError::InvalidParameter(String::from("modulus must be positive")));
    }
    let k = normalize(k, n) as i64;
    let mut tv = TheoremVerdict::new(THM_REGULAR_SCREEN);
    tv.check("regular", true);
    let d = gcd_n(j as i128 + 1, n);
    if tv.check("(j+1,n)|k", divides(d, k.into())) {
        let c = solve_congruence(j as i128 + 1, k.into(), n).expect("solvable");
        return Ok(match optimal_coloring(g, MAX_BITMASK_VERTICES) {
            Ok((chi, _)) => {
                let w = witness_from_residues(g, &vec![c; g.vertex_count()], n, k, Some(chi));
                tv.exists(Some(chi), w)
            }
            Err(_) => tv.exists(None, None),
        });
    }
    if !tv.check("(j+1,n)|k|V|", divides(d, i128::from(k) * g.vertex_count() as i128)) {
        return Ok(tv.not_exists());
    }
    Ok(tv.unknown("neither regular-graph condition decides"))
}
