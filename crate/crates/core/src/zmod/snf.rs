use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `U · M · V = S` with `U`, `V` unimodular and `S` diagonal in Smith form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    /// Diagonal entries `d_1 | d_2 | ...`, zeros trailing; length `min(rows, cols)`.
    pub fn diagonal(&self) -> impl Iterator<Item = &BigInt> + '_ {
        (0..self.s.rows().min(self.s.cols())).map(move |i| &self.s[(i, i)])
    }

    pub fn rank(&self) -> usize {
        self.diagonal().take_while(|d| !d.is_zero()).count()
    }

    /// Checks every structural invariant by direct computation against `m`.
    pub fn check(&self, m: &IntMatrix) -> bool {
        let product = &(&self.u * m) * &self.v;
        if product != self.s || !self.s.is_diagonal() {
            return false;
        }
        let diag: alloc::vec::Vec<&BigInt> = self.diagonal().collect();
        if diag.iter().any(|d| d.is_negative()) {
            return false;
        }
        let rank = self.rank();
        if diag[rank..].iter().any(|d| !d.is_zero()) {
            return false;
        }
        if diag[..rank].windows(2).any(|w| !(w[1] % w[0]).is_zero()) {
            return false;
        }
        let unit = |x: Option<BigInt>| x.is_some_and(|d| d.abs() == BigInt::from(1));
        unit(self.u.determinant()) && unit(self.v.determinant())
    }
}

/// Smith normal form with deterministic pivoting: the smallest nonzero
/// absolute value in the active block, ties broken by lowest (row, col).
pub fn smith_normal_form(m: &IntMatrix) -> SnfDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&s, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)))) else {
            break;
        };
        move_to_pivot(&mut s, &mut u, &mut v, t, pi, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !s[(i, t)].is_zero() {
                    let q = -(&s[(i, t)] / &s[(t, t)]);
                    s.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    clean &= s[(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !s[(t, j)].is_zero() {
                    let q = -(&s[(t, j)] / &s[(t, t)]);
                    s.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                    clean &= s[(t, j)].is_zero();
                }
            }
            if !clean {
                // A remainder survived; it is strictly smaller than the pivot.
                let line = (t..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = smallest_entry(&s, line).expect("nonzero remainder exists");
                move_to_pivot(&mut s, &mut u, &mut v, t, pi, pj);
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&s[(i, j)] % &s[(t, t)]).is_zero()));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    SnfDecomposition { u, s, v }
}

fn smallest_entry(
    s: &IntMatrix,
    positions: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j) in positions {
        let e = &s[(i, j)];
        if e.is_zero() {
            continue;
        }
        let a = e.abs();
        if best.as_ref().is_none_or(|(_, b)| a < *b) {
            best = Some(((i, j), a));
        }
    }
    best.map(|(p, _)| p)
}

fn move_to_pivot(s: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize, i: usize, j: usize) {
    s.swap_rows(t, i);
    u.swap_rows(t, i);
    s.swap_cols(t, j);
    v.swap_cols(t, j);
}

/// gcd of all entries; zero for the zero matrix.
pub fn content(m: &IntMatrix) -> BigInt {
    m.entries().iter().fold(BigInt::zero(), |g, e| g.gcd(e))
}
