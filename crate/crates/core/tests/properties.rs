use std::collections::BTreeSet;

use closed_chroma_core::closedforms::{classify, petersen_oracle_exists};
use closed_chroma_core::engine::{closed_chromatic_number, normalize, verify_labeling, SearchLimits};
use closed_chroma_core::graphs::{build_family, FamilyDescriptor, Graph};
use closed_chroma_core::zmod::{solve_mod_linear, IntMatrix};
use num_integer::Integer;
use proptest::prelude::*;

fn all_residue_vectors(len: usize, n: u64) -> impl Iterator<Item = Vec<u64>> {
    let total = n.pow(len as u32);
    (0..total).map(move |mut code| {
        (0..len)
            .map(|_| {
                let d = code % n;
                code /= n;
                d
            })
            .collect()
    })
}

fn satisfies(rows: &[Vec<i64>], b: &[i64], x: &[u64], n: u64) -> bool {
    rows.iter()
        .zip(b)
        .all(|(row, &bi)| (row.iter().zip(x).map(|(&a, &xi)| a * xi as i64).sum::<i64>() - bi).rem_euclid(n as i64) == 0)
}

fn small_system() -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<i64>, u64)> {
    (1usize..=3, 1usize..=3, 1u64..=6).prop_flat_map(|(r, c, n)| {
        (
            prop::collection::vec(prop::collection::vec(-6i64..=6, c), r),
            prop::collection::vec(-6i64..=6, r),
            Just(n),
        )
    })
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=6).prop_flat_map(|v| {
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::from_edges(v, edges).unwrap().0
        })
    })
}

fn small_family() -> impl Strategy<Value = FamilyDescriptor> {
    use FamilyDescriptor::*;
    prop_oneof![
        (1usize..=6).prop_map(Complete),
        (1usize..=6).prop_map(Star),
        (1usize..=4).prop_map(Friendship),
        (1usize..=10).prop_map(Path),
        (3usize..=10).prop_map(Cycle),
        (1usize..=4, 1usize..=4).prop_map(|(i, j)| CompleteBipartite(i, j)),
        (2usize..=5, 2usize..=5).prop_map(|(a, b)| Caterpillar(a, b)),
        (1usize..=3).prop_map(PerfectBinaryTree),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_matches_brute_force((rows, b, n) in small_system()) {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let a = IntMatrix::from_rows(&refs);
        let brute: BTreeSet<Vec<u64>> =
            all_residue_vectors(a.cols(), n).filter(|x| satisfies(&rows, &b, x, n)).collect();
        match solve_mod_linear(&a, &b, n).unwrap() {
            None => prop_assert!(brute.is_empty()),
            Some(space) => {
                let found: BTreeSet<Vec<u64>> = space.enumerate(usize::MAX).collect();
                prop_assert_eq!(found, brute);
            }
        }
    }

    #[test]
    fn value_is_invariant_under_units(g in small_graph(), n in 1u64..=7, k in 0i64..7) {
        let limits = SearchLimits::default();
        let base = closed_chromatic_number(&g, n, k, &limits).unwrap();
        for u in (1..n as i64).filter(|u| u.gcd(&(n as i64)) == 1) {
            let scaled = closed_chromatic_number(&g, n, u * k, &limits).unwrap();
            prop_assert_eq!(scaled.existence(), base.existence());
            prop_assert_eq!(scaled.value(), base.value());
        }
    }

    #[test]
    fn classifier_agrees_with_oracle(desc in small_family(), n in 1u64..=9, k in 0i64..9) {
        let g = build_family(&desc).unwrap();
        let tv = classify(&desc, n, k).unwrap();
        let oracle = closed_chromatic_number(&g, n, k, &SearchLimits::default()).unwrap();
        if let Some(claim) = tv.verdict.existence() {
            prop_assert_eq!(Some(claim), oracle.existence(), "{} n={} k={}", desc, n, k);
        }
        if let Some(w) = tv.verdict.witness() {
            let r = verify_labeling(&g, w, n, k).unwrap();
            prop_assert!(r.is_valid(), "{} n={} k={}: {:?}", desc, n, k, r);
            if let Some(v) = tv.verdict.value() {
                prop_assert_eq!(r.order, v);
                prop_assert_eq!(oracle.value(), Some(v));
            }
        }
    }

    #[test]
    fn petersen_existence_depends_on_k_mod_4_and_sign(m in 3usize..=12, j in 1usize..6, n in 1u64..=16, k in 0i64..16) {
        prop_assume!(2 * j < m);
        let base = petersen_oracle_exists(m, j, n, k).unwrap();
        prop_assert_eq!(petersen_oracle_exists(m, j, n, k + 4).unwrap(), base);
        prop_assert_eq!(petersen_oracle_exists(m, j, n, -k).unwrap(), base);
    }

    #[test]
    fn normalize_is_canonical(k in any::<i64>(), n in 1u64..1000) {
        let r = normalize(k, n);
        prop_assert!(r < n);
        prop_assert_eq!((i128::from(k) - i128::from(r)).rem_euclid(i128::from(n)), 0);
    }
}
