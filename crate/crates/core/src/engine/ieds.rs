//! Independent efficient dominating sets: `U` with `|N[v] ∩ U| = 1` for all `v`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::chromatic::optimal_coloring;
use super::{normalize, EngineError, Labeling};
use crate::graphs::Graph;

pub const SOURCE_IEDS: &str = "lemma:ieds";

pub fn is_ieds(g: &Graph, u: &[usize]) -> bool {
    let mut member = vec![false; g.vertex_count()];
    for &v in u {
        if v >= member.len() || member[v] {
            return false;
        }
        member[v] = true;
    }
    (0..g.vertex_count()).all(|v| g.closed_neighborhood(v).iter().filter(|&&w| member[w]).count() == 1)
}

/// The lexicographically least IEDS, by backtracking over vertices in index
/// order and trying inclusion first.
pub fn find_ieds(g: &Graph, bound: usize) -> Result<Option<Vec<usize>>, EngineError> {
    if g.vertex_count() > bound {
        return Err(EngineError::IedsBound { vertices: g.vertex_count(), bound });
    }
    let mut search = IedsSearch { g, covered: vec![0; g.vertex_count()], chosen: Vec::new() };
    Ok(search.run(0).then_some(search.chosen))
}

struct IedsSearch<'a> {
    g: &'a Graph,
    /// How many chosen vertices each closed neighbourhood contains.
    covered: Vec<u8>,
    chosen: Vec<usize>,
}

impl IedsSearch<'_> {
    fn run(&mut self, v: usize) -> bool {
        if v == self.g.vertex_count() {
            return self.covered.iter().all(|&c| c == 1);
        }
        let closed = self.g.closed_neighborhood(v);
        if closed.iter().all(|&w| self.covered[w] == 0) {
            for &w in &closed {
                self.covered[w] = 1;
            }
            self.chosen.push(v);
            if self.run(v + 1) {
                return true;
            }
            self.chosen.pop();
            for &w in &closed {
                self.covered[w] = 0;
            }
        }
        // Skipping v is fatal if v is uncovered and no later vertex of N[v] remains.
        if self.covered[v] == 0 && closed.iter().all(|&w| w <= v) {
            return false;
        }
        self.run(v + 1)
    }
}

/// Closed coloring from an IEDS `U`: vertices of `U` get `k`, the rest an
/// optimal proper coloring of `V ∖ U` scaled into `n·Z` above `k`.
///
/// Every `N[v]` holds exactly one `k`, and the other summands vanish mod `n`.
pub fn coloring_from_ieds(g: &Graph, u: &[usize], n: u64, k: i64, bound: usize) -> Result<Labeling, EngineError> {
    if n == 0 {
        return Err(EngineError::ZeroModulus);
    }
    if !is_ieds(g, u) {
        return Err(EngineError::NotIeds);
    }
    let k = normalize(k, n) as i64;
    let (_, colors) = optimal_coloring(g, bound)?;
    let in_u: BTreeSet<usize> = u.iter().copied().collect();
    let rest_colors: BTreeSet<usize> = (0..g.vertex_count()).filter(|v| !in_u.contains(v)).map(|v| colors[v]).collect();
    let values = (0..g.vertex_count())
        .map(|v| {
            if in_u.contains(&v) {
                k
            } else {
                let rank = rest_colors.range(..colors[v]).count() as i64 + 1;
                n as i64 * rank
            }
        })
        .collect();
    Ok(Labeling::new(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{exact_chromatic_number, verify_labeling};
    use crate::graphs::{build_family, FamilyDescriptor::*};

    /// Independent check: least IEDS among all subsets, compared lexicographically.
    fn scan(g: &Graph) -> Option<Vec<usize>> {
        let n = g.vertex_count();
        (0u32..1 << n)
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
            .filter(|u| is_ieds(g, u))
            .min()
    }

    #[test]
    fn membership() {
        assert!(is_ieds(&build_family(&Star(5)).unwrap(), &[0]));
        let c6 = build_family(&Cycle(6)).unwrap();
        assert!(is_ieds(&c6, &[0, 3]));
        assert!(!is_ieds(&c6, &[0, 2]));
        let c4 = build_family(&Cycle(4)).unwrap();
        assert!((0u32..16).all(|m| !is_ieds(&c4, &(0..4).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())));
    }

    #[test]
    fn search_examples() {
        assert_eq!(find_ieds(&build_family(&Friendship(4)).unwrap(), 64).unwrap(), Some(vec![0]));
        assert_eq!(find_ieds(&build_family(&Cycle(4)).unwrap(), 64).unwrap(), None);
        let p = build_family(&Petersen(5, 2)).unwrap();
        let found = find_ieds(&p, 64).unwrap();
        assert_eq!(found, scan(&p));
        if let Some(u) = &found {
            assert!(is_ieds(&p, u));
        }
        assert!(matches!(find_ieds(&build_family(&Cycle(9)).unwrap(), 8), Err(EngineError::IedsBound { .. })));
    }

    #[test]
    fn backtracking_matches_subset_scan() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..400 {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.6);
            let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
            let (g, _) = Graph::from_edges(n, edges).unwrap();
            assert_eq!(find_ieds(&g, 64).unwrap(), scan(&g), "{g:?}");
        }
    }

    #[test]
    fn star_coloring() {
        let g = build_family(&Star(3)).unwrap();
        let l = coloring_from_ieds(&g, &[0], 4, 3, 64).unwrap();
        assert_eq!(l.values(), &[3, 4, 4, 4]);
        assert_eq!(l.closed_sum(&g, 0), 15);
        assert_eq!(l.closed_sum(&g, 1), 7);
        assert_eq!(l.order(), 2);
    }

    #[test]
    fn cycle_and_trivial_modulus() {
        let c6 = build_family(&Cycle(6)).unwrap();
        let l = coloring_from_ieds(&c6, &[0, 3], 2, 1, 64).unwrap();
        let r = verify_labeling(&c6, &l, 2, 1).unwrap();
        assert!(r.is_valid() && r.order <= 3, "{r:?}");

        let g = build_family(&Friendship(3)).unwrap();
        let l = coloring_from_ieds(&g, &[0], 1, 0, 64).unwrap();
        let r = verify_labeling(&g, &l, 1, 0).unwrap();
        assert!(r.is_valid());
        assert!(r.order <= exact_chromatic_number(&g, 64).unwrap() + 1);
        assert_eq!(coloring_from_ieds(&c6, &[0], 2, 1, 64), Err(EngineError::NotIeds));
    }
}
