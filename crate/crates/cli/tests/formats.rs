use closed_chroma::edgelist::{read_edge_list, write_edge_list};
use closed_chroma::family::parse_family;
use closed_chroma::labeling::{read_labeling, write_labeling};
use closed_chroma_core::engine::Labeling;
use closed_chroma_core::graphs::{FamilyDescriptor, Graph, Tiling as Plane};
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..12).prop_flat_map(|v| {
        prop::collection::vec((0..v, 0..v), 0..30).prop_map(move |pairs| {
            Graph::from_edges(v, pairs.into_iter().filter(|(a, b)| a != b)).unwrap().0
        })
    })
}

fn descriptor() -> impl Strategy<Value = FamilyDescriptor> {
    use FamilyDescriptor::*;
    prop_oneof![
        (1usize..50).prop_map(Complete),
        (1usize..50).prop_map(Path),
        (3usize..50).prop_map(Cycle),
        (1usize..9, 1usize..9).prop_map(|(a, b)| Caterpillar(a, b)),
        (3usize..40, 1usize..20).prop_filter("j < m/2", |(m, j)| 2 * j < *m).prop_map(|(m, j)| Petersen(m, j)),
        prop_oneof![Just(Plane::R3), Just(Plane::R4), Just(Plane::R6)].prop_map(FamilyDescriptor::Tiling),
    ]
}

proptest! {
    #[test]
    fn edge_list_round_trips(g in graph()) {
        let text = write_edge_list(&g);
        let back = read_edge_list(&text).unwrap();
        prop_assert_eq!(back.duplicate_edges, 0);
        prop_assert_eq!(write_edge_list(&back.graph), text);
        prop_assert_eq!(back.graph, g);
    }

    #[test]
    fn labeling_round_trips(values in prop::collection::vec(any::<i64>(), 0..20)) {
        let l = Labeling::new(values);
        prop_assert_eq!(read_labeling(&write_labeling(&l)).unwrap(), l);
    }

    #[test]
    fn descriptor_syntax_round_trips(d in descriptor()) {
        prop_assert_eq!(parse_family(&d.to_string()).unwrap(), d);
    }
}
