use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{smith_normal_form, IntMatrix, SnfDecomposition, ZmodError};

/// Affine solution set of `A·x ≡ b (mod n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSpace {
    modulus: u64,
    particular: Vec<u64>,
    kernel_gens: Vec<(Vec<u64>, u64)>,
    independent: bool,
}

impl SolutionSpace {
    /// Assembles a space from parts. Generators are not assumed independent,
    /// so enumeration deduplicates.
    pub fn new(modulus: u64, particular: Vec<u64>, kernel_gens: Vec<(Vec<u64>, u64)>) -> Result<Self, ZmodError> {
        if modulus == 0 {
            return Err(ZmodError::ZeroModulus);
        }
        for (g, order) in &kernel_gens {
            if g.len() != particular.len() {
                return Err(ZmodError::DimensionMismatch { expected: particular.len(), found: g.len() });
            }
            if *order == 0 {
                return Err(ZmodError::ZeroOrder);
            }
        }
        let reduce = |v: Vec<u64>| v.into_iter().map(|x| x % modulus).collect::<Vec<_>>();
        Ok(Self {
            modulus,
            particular: reduce(particular),
            kernel_gens: kernel_gens.into_iter().map(|(g, o)| (reduce(g), o)).collect(),
            independent: false,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn particular(&self) -> &[u64] {
        &self.particular
    }

    pub fn kernel_gens(&self) -> &[(Vec<u64>, u64)] {
        &self.kernel_gens
    }

    /// Whether distinct coefficient vectors are known to give distinct solutions.
    pub fn is_independent(&self) -> bool {
        self.independent
    }

    /// Number of coefficient vectors (`∏ order_i`); the exact solution count
    /// when the generators are independent. `None` on overflow.
    pub fn parameter_count(&self) -> Option<u128> {
        self.kernel_gens.iter().try_fold(1u128, |acc, (_, o)| acc.checked_mul(u128::from(*o)))
    }

    pub fn contains(&self, a: &IntMatrix, b: &[i64], x: &[u64]) -> bool {
        residual_is_zero(a, b, x, self.modulus)
    }

    /// Lazily enumerates up to `cap` distinct solutions.
    pub fn enumerate(&self, cap: usize) -> SolutionIter<'_> {
        SolutionIter {
            space: self,
            cap,
            digits: vec![0; self.kernel_gens.len()],
            current: self.particular.clone(),
            emitted: 0,
            exhausted: false,
            truncated: false,
            seen: BTreeSet::new(),
        }
    }
}

/// Mixed-radix walk over generator coefficients; coefficient 0 varies fastest.
pub struct SolutionIter<'a> {
    space: &'a SolutionSpace,
    cap: usize,
    digits: Vec<u64>,
    current: Vec<u64>,
    emitted: usize,
    exhausted: bool,
    truncated: bool,
    seen: BTreeSet<Vec<u64>>,
}

impl SolutionIter<'_> {
    /// True once iteration stopped at the cap with solutions left unvisited.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    fn advance(&mut self) {
        let n = self.space.modulus;
        for (i, (gen, order)) in self.space.kernel_gens.iter().enumerate() {
            // Adding the generator once more also covers the wrap to zero,
            // since order·g ≡ 0.
            for (c, g) in self.current.iter_mut().zip(gen) {
                *c = ((u128::from(*c) + u128::from(*g)) % u128::from(n)) as u64;
            }
            self.digits[i] += 1;
            if self.digits[i] < *order {
                return;
            }
            self.digits[i] = 0;
        }
        self.exhausted = true;
    }
}

impl Iterator for SolutionIter<'_> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        loop {
            if self.exhausted {
                return None;
            }
            if self.emitted >= self.cap {
                self.truncated = true;
                return None;
            }
            let candidate = self.current.clone();
            self.advance();
            if !self.space.independent && !self.seen.insert(candidate.clone()) {
                continue;
            }
            self.emitted += 1;
            return Some(candidate);
        }
    }
}

/// `A·x ≡ b (mod n)` with the Smith decomposition of `A` computed once and
/// reused for every right-hand side and modulus.
#[derive(Clone, Debug)]
pub struct ModSystem {
    a: IntMatrix,
    snf: SnfDecomposition,
}

impl ModSystem {
    pub fn new(a: IntMatrix) -> Result<Self, ZmodError> {
        if a.is_empty() {
            return Err(ZmodError::EmptyMatrix);
        }
        let snf = smith_normal_form(&a);
        Ok(Self { a, snf })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn decomposition(&self) -> &SnfDecomposition {
        &self.snf
    }

    /// Substituting `x = V·y` turns the system into `d_i·y_i ≡ (U·b)_i`,
    /// one independent scalar congruence per coordinate.
    pub fn solve(&self, b: &[i64], n: u64) -> Result<Option<SolutionSpace>, ZmodError> {
        if n == 0 {
            return Err(ZmodError::ZeroModulus);
        }
        let rows = self.a.rows();
        let cols = self.a.cols();
        if b.len() != rows {
            return Err(ZmodError::DimensionMismatch { expected: rows, found: b.len() });
        }
        let big_n = BigInt::from(n);
        let reduce = |x: &BigInt| x.mod_floor(&big_n).to_u64().expect("residue fits in u64");

        let rhs: Vec<u64> = (0..rows)
            .map(|i| {
                let dot = self.snf.u.row(i).iter().zip(b).fold(BigInt::from(0), |acc, (u, &bj)| acc + u * bj);
                reduce(&dot)
            })
            .collect();
        let diag: Vec<u64> = (0..rows)
            .map(|i| if i < cols { reduce(&self.snf.s[(i, i)]) } else { 0 })
            .collect();

        let mut y = vec![0u64; cols];
        for i in 0..rows {
            let g = diag[i].gcd(&n);
            if !rhs[i].is_multiple_of(g) {
                return Ok(None);
            }
            if i < cols {
                let m = n / g;
                y[i] = if m == 1 { 0 } else { mul_mod(rhs[i] / g, inverse_mod(diag[i] / g, m), m) };
            }
        }

        let v_mod: Vec<Vec<u64>> = (0..cols).map(|i| (0..cols).map(|j| reduce(&self.snf.v[(i, j)])).collect()).collect();
        let particular: Vec<u64> = (0..cols)
            .map(|i| (0..cols).fold(0u64, |acc, j| add_mod(acc, mul_mod(v_mod[i][j], y[j], n), n)))
            .collect();

        let mut kernel_gens = Vec::new();
        for j in 0..cols {
            let order = if j < rows { diag[j].gcd(&n) } else { n };
            if order == 1 {
                continue;
            }
            let step = n / order;
            let gen: Vec<u64> = (0..cols).map(|i| mul_mod(v_mod[i][j], step, n)).collect();
            kernel_gens.push((gen, order));
        }

        Ok(Some(SolutionSpace { modulus: n, particular, kernel_gens, independent: true }))
    }
}

pub fn solve_mod_linear(a: &IntMatrix, b: &[i64], n: u64) -> Result<Option<SolutionSpace>, ZmodError> {
    if n == 0 {
        return Err(ZmodError::ZeroModulus);
    }
    if b.len() != a.rows() {
        return Err(ZmodError::DimensionMismatch { expected: a.rows(), found: b.len() });
    }
    ModSystem::new(a.clone())?.solve(b, n)
}

pub fn enumerate_solutions(space: &SolutionSpace, cap: usize) -> SolutionIter<'_> {
    space.enumerate(cap)
}

/// Checks `A·x ≡ b (mod n)` directly.
pub fn residual_is_zero(a: &IntMatrix, b: &[i64], x: &[u64], n: u64) -> bool {
    if x.len() != a.cols() || b.len() != a.rows() {
        return false;
    }
    let big_n = BigInt::from(n);
    (0..a.rows()).all(|i| {
        let lhs = a.row(i).iter().zip(x).fold(BigInt::from(0), |acc, (e, &xi)| acc + e * xi);
        (lhs - b[i]).mod_floor(&big_n) == BigInt::from(0)
    })
}

pub(crate) fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(n)) as u64
}

pub(crate) fn add_mod(a: u64, b: u64, n: u64) -> u64 {
    ((u128::from(a) + u128::from(b)) % u128::from(n)) as u64
}

/// Inverse of `a` modulo `m`; requires `gcd(a, m) = 1` and `m ≥ 1`.
pub(crate) fn inverse_mod(a: u64, m: u64) -> u64 {
    let e = i128::from(a % m).extended_gcd(&i128::from(m));
    debug_assert_eq!(e.gcd, 1, "not invertible");
    e.x.rem_euclid(i128::from(m)) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invertible_scalar() {
        let a = IntMatrix::from_rows(&[&[4]]);
        let space = solve_mod_linear(&a, &[1], 5).unwrap().unwrap();
        assert_eq!(space.particular(), [4]);
        assert!(space.kernel_gens().is_empty());
        // exhaustive check of all 5 residues
        let all: Vec<u64> = (0..5).filter(|&x| (4 * x) % 5 == 1).collect();
        assert_eq!(all, [4]);
    }

    #[test]
    fn parity_obstruction() {
        let a = IntMatrix::from_rows(&[&[2]]);
        assert_eq!(solve_mod_linear(&a, &[1], 4).unwrap(), None);
    }

    #[test]
    fn single_edge_has_one_free_parameter() {
        let a = IntMatrix::from_rows(&[&[1, 1], &[1, 1]]);
        for n in 1..7u64 {
            for k in 0..n as i64 {
                let space = solve_mod_linear(&a, &[k, k], n).unwrap().unwrap();
                assert_eq!(space.parameter_count(), Some(u128::from(n)));
                let sols: Vec<_> = space.enumerate(100).collect();
                assert_eq!(sols.len() as u64, n);
                for s in &sols {
                    assert!(space.contains(&a, &[k, k], s));
                }
            }
        }
        let space = solve_mod_linear(&a, &[1, 1], 2).unwrap().unwrap();
        let mut sols: Vec<_> = space.enumerate(10).collect();
        sols.sort();
        assert_eq!(sols, [vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn empty_kernel_yields_particular_only() {
        let a = IntMatrix::identity(3);
        let space = solve_mod_linear(&a, &[1, 2, 3], 7).unwrap().unwrap();
        let sols: Vec<_> = space.enumerate(10).collect();
        assert_eq!(sols, [vec![1, 2, 3]]);
    }

    #[test]
    fn dimension_mismatch() {
        let a = IntMatrix::identity(2);
        assert!(matches!(
            solve_mod_linear(&a, &[1], 3),
            Err(ZmodError::DimensionMismatch { expected: 2, found: 1 })
        ));
        assert!(matches!(solve_mod_linear(&a, &[1, 1], 0), Err(ZmodError::ZeroModulus)));
    }

    #[test]
    fn truncation_is_reported() {
        let a = IntMatrix::from_rows(&[&[1, 1, 1]]);
        let space = solve_mod_linear(&a, &[0], 5).unwrap().unwrap();
        let mut it = space.enumerate(7);
        assert_eq!(it.by_ref().count(), 7);
        assert!(it.is_truncated());
        let mut it = space.enumerate(25);
        assert_eq!(it.by_ref().count(), 25);
        assert!(!it.is_truncated());
    }

    #[test]
    fn hand_built_space_with_two_generators() {
        // n = 6, three variables; generators of orders 2 and 3.
        let a = IntMatrix::from_rows(&[&[1, 1, 0], &[0, 1, 1]]);
        let space = SolutionSpace::new(6, vec![0, 0, 0], vec![(vec![3, 3, 3], 2), (vec![2, 4, 2], 3)]).unwrap();
        let mut got: Vec<_> = space.enumerate(100).collect();
        got.sort();
        // direct filter of all 6^3 tuples
        let mut want = Vec::new();
        for x0 in 0..6 {
            for x1 in 0..6 {
                for x2 in 0..6 {
                    if residual_is_zero(&a, &[0, 0], &[x0, x1, x2], 6) {
                        want.push(vec![x0, x1, x2]);
                    }
                }
            }
        }
        assert_eq!(got, want);
        assert_eq!(got.len(), 6);

        // A duplicated generator must not duplicate output.
        let dup = SolutionSpace::new(6, vec![0, 0, 0], vec![(vec![3, 3, 3], 2), (vec![3, 3, 3], 2)]).unwrap();
        assert_eq!(dup.enumerate(100).count(), 2);
    }
}
