//! Exact integer linear algebra and linear congruence systems.
//!
//! Every solvability question in the crate reduces to `A·x ≡ b (mod n)`.
//! The Smith form `U·A·V = S` diagonalizes such a system: with `x = V·y`
//! it becomes the scalar congruences `d_i·y_i ≡ (U·b)_i`, each solvable
//! iff `gcd(d_i, n)` divides the right-hand side, and each contributing a
//! kernel generator of additive order `gcd(d_i, n)`.

mod matrix;
mod snf;
mod solve;

pub use matrix::IntMatrix;
pub use snf::{content, smith_normal_form, SnfDecomposition};
pub use solve::{enumerate_solutions, residual_is_zero, solve_mod_linear, ModSystem, SolutionIter, SolutionSpace};


#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZmodError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("generator order must be at least 1")]
    ZeroOrder,
    #[error("matrix has no entries")]
    EmptyMatrix,
}

/// `gcd(a, n)` for a signed `a`, with `gcd(0, n) = n`.
pub fn gcd_with(a: i128, n: u64) -> u64 {
    use num_integer::Integer;
    let g = a.unsigned_abs().gcd(&u128::from(n));
    g as u64
}
