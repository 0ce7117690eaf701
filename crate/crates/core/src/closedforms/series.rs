//! Level labels of perfect binary trees.
//!
//! A closed coloring may be taken constant on each level. Counting levels
//! from the leaves, `x_0 = α`, `x_1 = k − α` and `x_i = k − x_{i−1} − 2x_{i−2}`;
//! the tree of height `d` admits a coloring iff `x_{d+1} ≡ 0` for some `α`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::*;

/// `x_index = alpha·α + k·k + constant` as an exact linear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCoefficient {
    pub index: usize,
    pub alpha: BigInt,
    pub k: BigInt,
    pub constant: BigInt,
}

impl SeriesCoefficient {
    pub fn eval(&self, alpha: &BigInt, k: &BigInt) -> BigInt {
        &self.alpha * alpha + &self.k * k + &self.constant
    }
}

/// Renders like `6k-17a`; `0` for the zero form.
impl fmt::Display for SeriesCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, sym) in [(&self.k, "k"), (&self.alpha, "a"), (&self.constant, "")] {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if out.is_empty() { "" } else { "+" };
            let mag = c.abs();
            let body = if mag.is_one() && !sym.is_empty() { String::from(sym) } else { format!("{mag}{sym}") };
            out.push_str(sign);
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// `x_0 ..= x_upto` as linear forms in `α` and `k`.
pub fn binary_tree_coeffs(upto: usize) -> Vec<SeriesCoefficient> {
    let form = |index, alpha: i64, k: i64| SeriesCoefficient { index, alpha: alpha.into(), k: k.into(), constant: BigInt::zero() };
    let mut out = vec![form(0, 1, 0)];
    if upto >= 1 {
        out.push(form(1, -1, 1));
    }
    for i in 2..=upto {
        let (p, q) = (&out[i - 1], &out[i - 2]);
        let next = SeriesCoefficient {
            index: i,
            alpha: -&p.alpha - 2 * &q.alpha,
            k: BigInt::one() - &p.k - 2 * &q.k,
            constant: -&p.constant - 2 * &q.constant,
        };
        out.push(next);
    }
    out
}

/// `x_0 ..= x_last` modulo `n` for a given `α`.
pub fn binary_tree_levels(last: usize, n: u64, k: i64, alpha: u64) -> Vec<u64> {
    let nn = i128::from(n);
    let k = i128::from(k).rem_euclid(nn);
    let mut xs: Vec<i128> = vec![i128::from(alpha) % nn];
    if last >= 1 {
        xs.push((k - xs[0]).rem_euclid(nn));
    }
    for i in 2..=last {
        xs.push((k - xs[i - 1] - 2 * xs[i - 2]).rem_euclid(nn));
    }
    xs.into_iter().map(|x| x as u64).collect()
}

/// Existence on the height-`d` perfect binary tree: some `α` with
/// `x_{d+1}(α) ≡ 0 (mod n)`. The least such `α` and its levels are recorded.
pub fn binary_tree_existence(d: usize, n: u64, k: i64) -> TheoremVerdict {
    let mut tv = TheoremVerdict::new(THM_BINARY_TREE_EXIST);
    match least_alpha(d, n, k) {
        Some(alpha) => {
            tv.check("exists α: x_{d+1}(α)≡0", true);
            let levels = binary_tree_levels(d, n, k, alpha);
            tv.exists(None, None).with_note(format!("alpha={alpha}; levels x_0..x_d={levels:?}"))
        }
        None => {
            tv.check("exists α: x_{d+1}(α)≡0", false);
            tv.not_exists()
        }
    }
}

/// `x_{d+1}` is affine in `α`, so two evaluations give the congruence.
fn least_alpha(d: usize, n: u64, k: i64) -> Option<u64> {
    if n == 0 {
        return None;
    }
    let at = |alpha| i128::from(binary_tree_levels(d + 1, n, k, alpha)[d + 1]);
    let (c0, c1) = (at(0), at(1 % n));
    solve_congruence(c1 - c0, -c0, n)
}

pub(super) fn classify_binary_tree(d: usize, g: &Graph, n: u64, k: i64) -> TheoremVerdict {
    if k == 0 {
        let mut tv = TheoremVerdict::new(THM_BINARY_TREE_EXIST);
        tv.check("n|k", true);
        return finite::zero_remainder(tv, g, n, Some(2));
    }
    let mut tv = binary_tree_existence(d, n, k);
    if let (Some(alpha), true) = (least_alpha(d, n, k), tv.verdict.existence() == Some(true)) {
        let levels = binary_tree_levels(d, n, k, alpha);
        // Level order: vertex v sits at depth ⌊log2(v+1)⌋.
        let x: Vec<u64> = (0..g.vertex_count()).map(|v| levels[d - (usize::BITS - 1 - (v + 1).leading_zeros()) as usize]).collect();
        let w = witness_from_residues(g, &x, n, k, None);
        tv.verdict = Verdict::exists(None, w, tv.theorem_id);
    }
    tv
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use num_integer::Integer;

    #[test]
    fn leading_coefficients() {
        let c = binary_tree_coeffs(16);
        let shown: Vec<String> = c.iter().map(ToString::to_string).collect();
        assert_eq!(&shown[..4], &["a", "k-a", "-a", "-k+3a"]);
        assert_eq!(shown[8], "6k-17a");
        assert_eq!(shown[16], "-114k+271a");
        assert!(c.iter().all(|x| x.constant.is_zero()));
    }

    #[test]
    fn levels_satisfy_the_recursion() {
        let c = binary_tree_coeffs(12);
        for (n, k, alpha) in [(7u64, 3i64, 5u64), (10, 9, 0), (13, 1, 12)] {
            let xs = binary_tree_levels(12, n, k, alpha);
            for (i, form) in c.iter().enumerate() {
                let exact = form.eval(&BigInt::from(alpha), &BigInt::from(k));
                assert_eq!(BigInt::from(xs[i]), exact.mod_floor(&BigInt::from(n)));
            }
        }
    }

    #[test]
    fn existence_examples() {
        assert_eq!(binary_tree_existence(4, 5, 1).verdict.existence(), Some(false));
        for n in 1..20 {
            for k in 0..n as i64 {
                assert_eq!(binary_tree_existence(3, n, k).verdict.existence(), Some(true));
            }
        }
        let tv = binary_tree_existence(7, 17, 17);
        assert_eq!(tv.verdict.existence(), Some(true));
        assert!(tv.note.unwrap().starts_with("alpha="));
        assert_eq!(binary_tree_existence(2, 3, 1).verdict.existence(), Some(false));
    }

    #[test]
    fn least_alpha_matches_scan() {
        for d in 1..8 {
            for n in 1..12u64 {
                for k in 0..n as i64 {
                    let scan = (0..n).find(|&a| binary_tree_levels(d + 1, n, k, a)[d + 1] == 0);
                    assert_eq!(least_alpha(d, n, k), scan);
                }
            }
        }
    }
}
