//! Exact vertex coloring on graphs of at most 64 vertices.
//!
//! Branch and bound over a smallest-last (degeneracy) order, seeded with the
//! greedy coloring along that order as upper bound and a greedy clique as
//! lower bound. Ties in the ordering go to the lowest index, so results are
//! deterministic.

use alloc::vec;
use alloc::vec::Vec;

use super::EngineError;
use crate::graphs::Graph;

pub const MAX_BITMASK_VERTICES: usize = 64;

/// An optimal proper coloring of `G[mask]`: `(χ, colors)` with `colors[v]`
/// in `0..χ` for `v` in the mask and `usize::MAX` elsewhere.
pub(crate) fn color_mask(adj: &[u64], mask: u64) -> (usize, Vec<usize>) {
    let mut colors = vec![usize::MAX; adj.len()];
    if mask == 0 {
        return (0, colors);
    }
    let order = coloring_order(adj, mask);

    // Greedy upper bound along the order.
    let mut best = 0;
    for &v in &order {
        let nbrs = adj[v] & mask;
        let mut c = 0;
        while (0..adj.len()).any(|w| nbrs >> w & 1 == 1 && colors[w] == c) {
            c += 1;
        }
        colors[v] = c;
        best = best.max(c + 1);
    }

    // Greedy clique lower bound, starting from the densest end of the order.
    let mut clique = 0u64;
    for &v in &order {
        if adj[v] & clique == clique {
            clique |= 1 << v;
        }
    }
    let lower = clique.count_ones() as usize;
    if lower == best {
        return (best, colors);
    }

    let mut search = Search { adj, order: &order, current: vec![usize::MAX; adj.len()], best, best_colors: colors, lower };
    search.branch(0, 0);
    (search.best, search.best_colors)
}

struct Search<'a> {
    adj: &'a [u64],
    order: &'a [usize],
    current: Vec<usize>,
    best: usize,
    best_colors: Vec<usize>,
    lower: usize,
}

impl Search<'_> {
    /// Returns true once the lower bound is met and the search can stop.
    fn branch(&mut self, pos: usize, used: usize) -> bool {
        if pos == self.order.len() {
            self.best = used;
            self.best_colors.clone_from(&self.current);
            return self.best == self.lower;
        }
        let v = self.order[pos];
        let mut forbidden = 0u64;
        let mut nb = self.adj[v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if self.current[w] != usize::MAX {
                forbidden |= 1 << self.current[w];
            }
        }
        // Colors 0..=used are available; a new color must keep us below best.
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            self.current[v] = c;
            if self.branch(pos + 1, used.max(c + 1)) {
                return true;
            }
            if self.best <= used.max(c + 1) {
                break;
            }
        }
        self.current[v] = usize::MAX;
        false
    }
}

/// Reverse of the smallest-last removal order.
fn coloring_order(adj: &[u64], mask: u64) -> Vec<usize> {
    let mut remaining = mask;
    let mut removal = Vec::with_capacity(mask.count_ones() as usize);
    while remaining != 0 {
        let mut pick = usize::MAX;
        let mut pick_deg = u32::MAX;
        let mut rest = remaining;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & remaining).count_ones();
            if d < pick_deg {
                pick = v;
                pick_deg = d;
            }
        }
        removal.push(pick);
        remaining &= !(1 << pick);
    }
    removal.reverse();
    removal
}

fn masks_within(g: &Graph, bound: usize) -> Result<Vec<u64>, EngineError> {
    let bound = bound.min(MAX_BITMASK_VERTICES);
    if g.vertex_count() > bound {
        return Err(EngineError::ChromaticBound { vertices: g.vertex_count(), bound });
    }
    Ok(g.adjacency_masks().expect("within bitmask range"))
}

/// `χ(G)` by complete search; errors when `G` has more than `bound` vertices.
pub fn exact_chromatic_number(g: &Graph, bound: usize) -> Result<usize, EngineError> {
    Ok(optimal_coloring(g, bound)?.0)
}

/// An optimal proper coloring with colors `0..χ`.
pub fn optimal_coloring(g: &Graph, bound: usize) -> Result<(usize, Vec<usize>), EngineError> {
    let adj = masks_within(g, bound)?;
    let all = if g.vertex_count() == 64 { u64::MAX } else { (1u64 << g.vertex_count()) - 1 };
    Ok(color_mask(&adj, all))
}
