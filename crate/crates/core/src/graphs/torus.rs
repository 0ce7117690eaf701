//! Finite toroidal quotients of the plane tilings.
//!
//! Identification schemes (all deterministic):
//!
//! * `R4`: the `a × b` grid with wrap-around; vertex `(i, j)` has index
//!   `i·b + j` and neighbours `(i±1, j)`, `(i, j±1)`. Needs `a, b ≥ 4`: at 3
//!   the two opposite neighbours become adjacent and the closed
//!   neighbourhood gains a triangle.
//! * `R3`: the same `a × b` torus plus the diagonal offsets `±(1, −1)`.
//!   Needs `a, b ≥ 4` for the same reason.
//! * `R6`: a brick wall on `2a` rows and `2b` columns; `(r, c)` is joined to
//!   `(r, c±1)` and vertically to `(r+1, c)` when `r + c` is even, to
//!   `(r−1, c)` otherwise. The even dimensions keep the parity rule
//!   consistent across the seam and make the quotient bipartite. Needs
//!   `a, b ≥ 2` so the two horizontal neighbours are distinct.

use alloc::format;
use alloc::vec::Vec;

use super::{Graph, GraphError, Tiling};

pub fn build_torus_quotient(tiling: Tiling, a: usize, b: usize) -> Result<Graph, GraphError> {
    match tiling {
        Tiling::R4 | Tiling::R3 => {
            if a < 4 || b < 4 {
                return Err(GraphError::QuotientTooSmall(format!(
                    "{}: need a, b >= 4 so closed neighbourhoods stay induced stars/wheels (got {a} x {b})",
                    tiling.name()
                )));
            }
            let idx = |i: usize, j: usize| (i % a) * b + (j % b);
            let mut edges = Vec::new();
            for i in 0..a {
                for j in 0..b {
                    edges.push((idx(i, j), idx(i + 1, j)));
                    edges.push((idx(i, j), idx(i, j + 1)));
                    if tiling == Tiling::R3 {
                        edges.push((idx(i, j), idx(i + 1, j + b - 1)));
                    }
                }
            }
            Ok(Graph::from_edges_unchecked(a * b, edges))
        }
        Tiling::R6 => {
            if a < 2 || b < 2 {
                return Err(GraphError::QuotientTooSmall(format!(
                    "r6: need a, b >= 2 so horizontal neighbours are distinct (got {a} x {b})"
                )));
            }
            let (rows, cols) = (2 * a, 2 * b);
            let idx = |r: usize, c: usize| (r % rows) * cols + (c % cols);
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    edges.push((idx(r, c), idx(r, c + 1)));
                    if (r + c) % 2 == 0 {
                        edges.push((idx(r, c), idx(r + 1, c)));
                    }
                }
            }
            Ok(Graph::from_edges_unchecked(rows * cols, edges))
        }
    }
}

/// Class of each quotient vertex in the proper coloring of the tiling with
/// `χ` colors, where every vertex sees the same number of neighbours in
/// each other class. `None` when the quotient dimensions do not carry it
/// (R4: `a`, `b` even; R3: `3 | a`, `3 | b`; R6: always).
pub fn tiling_classes(tiling: Tiling, a: usize, b: usize) -> Option<Vec<usize>> {
    match tiling {
        Tiling::R4 => (a.is_multiple_of(2) && b.is_multiple_of(2)).then(|| (0..a * b).map(|v| (v / b + v % b) % 2).collect()),
        Tiling::R3 => (a.is_multiple_of(3) && b.is_multiple_of(3)).then(|| (0..a * b).map(|v| (v / b + 2 * (v % b)) % 3).collect()),
        Tiling::R6 => {
            let cols = 2 * b;
            Some((0..4 * a * b).map(|v| (v / cols + v % cols) % 2).collect())
        }
    }
}
