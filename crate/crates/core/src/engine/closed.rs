use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::chromatic::{color_mask, optimal_coloring, MAX_BITMASK_VERTICES};
use super::{normalize, Budget, EngineError, Labeling, SearchLimits, Unlimited, Verdict};
use crate::graphs::Graph;
use crate::zmod::{IntMatrix, ModSystem, SolutionSpace};

pub const SOURCE_ORACLE: &str = "oracle";

/// `A + I`: entry `(v, u)` is 1 iff `u ∈ N[v]`.
pub fn closed_matrix(g: &Graph) -> IntMatrix {
    let n = g.vertex_count();
    IntMatrix::from_fn(n, n, |v, u| BigInt::from(u8::from(u == v || g.has_edge(v, u))))
}

/// The closed-neighbourhood system of one graph, factored once.
#[derive(Clone, Debug)]
pub struct ClosedSystem {
    vertex_count: usize,
    system: Option<ModSystem>,
}

impl ClosedSystem {
    pub fn new(g: &Graph) -> Self {
        let system = (g.vertex_count() > 0).then(|| ModSystem::new(closed_matrix(g)).expect("nonempty matrix"));
        Self { vertex_count: g.vertex_count(), system }
    }

    /// Residue solutions of `Σ_{N[v]} x ≡ k (mod n)` for all `v`, if any.
    pub fn solve(&self, n: u64, k: i64) -> Result<Option<SolutionSpace>, EngineError> {
        if n == 0 {
            return Err(EngineError::ZeroModulus);
        }
        let k = normalize(k, n) as i64;
        match &self.system {
            None => Ok(Some(SolutionSpace::new(n, Vec::new(), Vec::new()).expect("valid empty space"))),
            Some(sys) => Ok(sys.solve(&vec![k; self.vertex_count], n).expect("dimensions agree")),
        }
    }
}

/// Whether any closed coloring with remainder `k mod n` exists. Properness
/// never obstructs existence, so this is pure linear algebra.
pub fn exists_closed_coloring(g: &Graph, n: u64, k: i64) -> Result<Option<SolutionSpace>, EngineError> {
    ClosedSystem::new(g).solve(n, k)
}

/// The common closed-neighbourhood residue of `x`, if all vertices agree.
fn common_closed_residue(g: &Graph, x: &[u64], n: u64) -> Option<u64> {
    let sum = |v: usize| g.closed_neighborhood(v).iter().fold(0u128, |acc, &w| acc + u128::from(x[w])) % u128::from(n);
    let first = if g.vertex_count() == 0 { 0 } else { sum(0) };
    (0..g.vertex_count()).all(|v| sum(v) == first).then_some(first as u64)
}

/// Vertex masks of the residue classes of `x`, ordered by residue.
fn residue_classes(x: &[u64]) -> BTreeMap<u64, u64> {
    let mut classes = BTreeMap::new();
    for (v, &r) in x.iter().enumerate() {
        *classes.entry(r).or_insert(0u64) |= 1 << v;
    }
    classes
}

fn check_residue_input(g: &Graph, x: &[u64], n: u64, bound: usize) -> Result<Vec<u64>, EngineError> {
    if n == 0 {
        return Err(EngineError::ZeroModulus);
    }
    if x.len() != g.vertex_count() {
        return Err(EngineError::LengthMismatch { expected: g.vertex_count(), found: x.len() });
    }
    if x.iter().any(|&r| r >= n) || common_closed_residue(g, x, n).is_none() {
        return Err(EngineError::NotASolution);
    }
    let bound = bound.min(MAX_BITMASK_VERTICES);
    if g.vertex_count() > bound {
        return Err(EngineError::ChromaticBound { vertices: g.vertex_count(), bound });
    }
    Ok(g.adjacency_masks().expect("within bitmask range"))
}

/// Minimum order of an integer labeling congruent to `x` vertex-wise:
/// `Σ_r χ(G[{v : x_v = r}])`. Labels in different residue classes are
/// automatically distinct; inside a class they must properly color the
/// induced subgraph, and `r + n·color` achieves exactly that.
pub fn min_order_for_residue_solution(g: &Graph, x: &[u64], n: u64, bound: usize) -> Result<usize, EngineError> {
    let adj = check_residue_input(g, x, n, bound)?;
    Ok(residue_classes(x).values().map(|&mask| color_mask(&adj, mask).0).sum())
}

/// A minimum-order labeling congruent to `x`: each class `r` is colored
/// optimally and color `c` becomes the label `r + n·c`.
pub fn lift_residues(g: &Graph, x: &[u64], n: u64, bound: usize) -> Result<Labeling, EngineError> {
    let adj = check_residue_input(g, x, n, bound)?;
    Ok(lift_with(&adj, x, n))
}

fn lift_with(adj: &[u64], x: &[u64], n: u64) -> Labeling {
    let mut values = vec![0i64; x.len()];
    for (&r, &mask) in &residue_classes(x) {
        let (_, colors) = color_mask(adj, mask);
        for (v, value) in values.iter_mut().enumerate() {
            if mask >> v & 1 == 1 {
                *value = (i128::from(r) + i128::from(n) * colors[v] as i128) as i64;
            }
        }
    }
    Labeling::new(values)
}

/// Exact `χ_{n,k}(G)`.
pub fn closed_chromatic_number(g: &Graph, n: u64, k: i64, limits: &SearchLimits) -> Result<Verdict, EngineError> {
    closed_chromatic_number_with_budget(g, n, k, limits, &mut Unlimited)
}

/// Exact `χ_{n,k}(G)` by minimizing the residue lift over every residue
/// solution in enumeration order.
///
/// The search stops early once a solution reaches `χ(G)`, which bounds every
/// value from below. Ties keep the first minimal solution met, so the
/// witness is reproducible. Exhausting the enumeration cap or the budget
/// before the minimum is certified yields `Unknown` carrying the best upper
/// bound seen.
pub fn closed_chromatic_number_with_budget(
    g: &Graph,
    n: u64,
    k: i64,
    limits: &SearchLimits,
    budget: &mut dyn Budget,
) -> Result<Verdict, EngineError> {
    if n == 0 {
        return Err(EngineError::ZeroModulus);
    }
    let bound = limits.chromatic_bound.min(MAX_BITMASK_VERTICES);
    if g.vertex_count() > bound {
        // Existence is still decidable even when the value is out of reach.
        return Ok(match exists_closed_coloring(g, n, k)? {
            None => Verdict::not_exists(SOURCE_ORACLE),
            Some(_) => Verdict::unknown(format!("resource: {} vertices exceed chromatic bound {bound}", g.vertex_count())),
        });
    }
    let (chi, coloring) = optimal_coloring(g, bound)?;

    if n == 1 {
        let values = coloring.iter().map(|&c| c as i64).collect();
        return Ok(Verdict::exists(Some(chi), Some(Labeling::new(values)), SOURCE_ORACLE));
    }

    let Some(space) = exists_closed_coloring(g, n, k)? else {
        return Ok(Verdict::not_exists(SOURCE_ORACLE));
    };

    let adj = g.adjacency_masks().expect("within bitmask range");
    let mut memo: BTreeMap<u64, usize> = BTreeMap::new();
    let mut best: Option<(usize, Vec<u64>)> = None;
    let mut iter = space.enumerate(limits.enumeration_cap);
    let mut checked = 0usize;
    let mut out_of_budget = false;
    for x in iter.by_ref() {
        let order: usize = residue_classes(&x)
            .values()
            .map(|&mask| *memo.entry(mask).or_insert_with(|| color_mask(&adj, mask).0))
            .sum();
        if best.as_ref().is_none_or(|(b, _)| order < *b) {
            best = Some((order, x));
            if order == chi {
                break;
            }
        }
        checked += 1;
        if checked.is_multiple_of(1024) && budget.exhausted() {
            out_of_budget = true;
            break;
        }
    }

    let (value, x) = best.expect("a nonempty solution space yields at least one solution");
    if value != chi && (iter.is_truncated() || out_of_budget) {
        let why = if out_of_budget { "budget" } else { "cap" };
        return Ok(Verdict::unknown(format!("{why}: upper bound {value} after {} residue solutions", iter.emitted())));
    }
    Ok(Verdict::exists(Some(value), Some(lift_with(&adj, &x, n)), SOURCE_ORACLE))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::verify_labeling;
    use crate::graphs::{build_family, FamilyDescriptor::*};

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn closed_matrix_shapes() {
        assert_eq!(closed_matrix(&build_family(&Path(1)).unwrap()), IntMatrix::from_rows(&[&[1]]));
        assert_eq!(closed_matrix(&build_family(&Path(2)).unwrap()), IntMatrix::from_rows(&[&[1, 1], &[1, 1]]));
        let c4 = closed_matrix(&build_family(&Cycle(4)).unwrap());
        assert_eq!(c4.row(0), IntMatrix::from_rows(&[&[1, 1, 0, 1]]).row(0));
        assert_eq!(c4, c4.transpose());
    }

    #[test]
    fn existence_examples() {
        let k22 = build_family(&CompleteBipartite(2, 2)).unwrap();
        assert!(exists_closed_coloring(&k22, 3, 1).unwrap().is_none());
        // cross-check: all 3^4 residue labelings fail
        let any = (0..81u64).any(|code| {
            let x: Vec<u64> = (0..4).map(|i| code / 3u64.pow(i) % 3).collect();
            (0..4).all(|v| k22.closed_neighborhood(v).iter().map(|&w| x[w]).sum::<u64>() % 3 == 1)
        });
        assert!(!any);

        let c4 = build_family(&Cycle(4)).unwrap();
        assert!(exists_closed_coloring(&c4, 3, 1).unwrap().is_none());
        assert!(exists_closed_coloring(&build_family(&Petersen(5, 2)).unwrap(), 1, 0).unwrap().is_some());
    }

    #[test]
    fn residue_lift_examples() {
        let k4 = build_family(&Complete(4)).unwrap();
        assert_eq!(min_order_for_residue_solution(&k4, &[2, 2, 2, 2], 5, 64).unwrap(), 4);

        let p3 = build_family(&Path(3)).unwrap();
        // pairwise distinct residues: one label per vertex
        assert_eq!(min_order_for_residue_solution(&p3, &[0, 1, 0], 5, 64).unwrap(), 2);

        let p4 = build_family(&Path(4)).unwrap();
        // closed sums 1, 1, 0, 1 mod 2
        assert_eq!(min_order_for_residue_solution(&p4, &[0, 1, 0, 1], 2, 64), Err(EngineError::NotASolution));
        // closed sums 1, 2, 1, 1 mod 2
        assert_eq!(common_closed_residue(&p4, &[1, 0, 1, 0], 2), None);
        assert_eq!(common_closed_residue(&p4, &[1, 0, 0, 1], 2), Some(1));
        assert_eq!(min_order_for_residue_solution(&p4, &[1, 0, 0, 1], 2, 64).unwrap(), 3);
    }

    #[test]
    fn classes_of_a_valid_solution() {
        let c6 = build_family(&Cycle(6)).unwrap();
        let x = [0, 1, 0, 0, 1, 0];
        assert_eq!(common_closed_residue(&c6, &x, 3), Some(1));
        // class 0 = {0,2,3,5}: edges 2-3, 5-0 → χ 2; class 1 = {1,4} → 1
        assert_eq!(min_order_for_residue_solution(&c6, &x, 3, 64).unwrap(), 3);
        let l = lift_residues(&c6, &x, 3, 64).unwrap();
        let r = verify_labeling(&c6, &l, 3, 1).unwrap();
        assert!(r.is_valid());
        assert_eq!(r.order, 3);
    }

    #[test]
    fn named_closed_chromatic_numbers() {
        let cases = [(Path(4), 2, 1, 3), (Cycle(6), 2, 1, 2), (Complete(4), 5, 3, 4), (Petersen(5, 2), 1, 0, 3)];
        for (d, n, k, want) in cases {
            let g = build_family(&d).unwrap();
            let v = closed_chromatic_number(&g, n, k, &limits()).unwrap();
            assert_eq!(v.value(), Some(want), "{d}: {v:?}");
            let r = verify_labeling(&g, v.witness().unwrap(), n, k).unwrap();
            assert!(r.is_valid());
            assert_eq!(r.order, want);
        }
        let c5 = build_family(&Cycle(5)).unwrap();
        assert_eq!(closed_chromatic_number(&c5, 3, 1, &limits()).unwrap(), Verdict::not_exists(SOURCE_ORACLE));
    }

    #[test]
    fn cap_exhaustion_is_unknown() {
        // P4 with n=2, k=1: value 3 > χ = 2, so every solution must be seen.
        let p4 = build_family(&Path(4)).unwrap();
        let tight = SearchLimits { enumeration_cap: 1, ..SearchLimits::default() };
        let space = exists_closed_coloring(&p4, 2, 1).unwrap().unwrap();
        if space.parameter_count().unwrap() > 1 {
            let v = closed_chromatic_number(&p4, 2, 1, &tight).unwrap();
            assert!(v.is_unknown(), "{v:?}");
            assert!(v.source().starts_with("cap: upper bound"));
        }
    }

    #[test]
    fn oversized_graphs_report_resource() {
        let g = build_family(&Cycle(70)).unwrap();
        let v = closed_chromatic_number(&g, 3, 0, &limits()).unwrap();
        assert!(v.source().starts_with("resource"));
        let v = closed_chromatic_number(&g, 3, 1, &limits()).unwrap();
        assert_eq!(v.existence(), Some(false)); // 3 ∤ 70
    }
}
