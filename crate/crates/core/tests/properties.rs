mod common;

use proptest::prelude::*;

use common::{naive_cut, naive_switch};
use switchkit::{Graph, VertexSet};

fn graph_and_sets() -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    (0usize..=20).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (
            proptest::collection::vec(any::<bool>(), pairs),
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(bits, a, b)| {
                let mut g = Graph::empty(n);
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[i] {
                            g.add_edge(u, v);
                        }
                        i += 1;
                    }
                }
                let set = |s: Vec<bool>| VertexSet::from_indices(n, (0..n).filter(|&v| s[v])).unwrap();
                (g, set(a), set(b))
            })
    })
}

proptest! {
    #[test]
    fn switch_matches_definition((g, a, _) in graph_and_sets()) {
        prop_assert_eq!(g.switch(&a).unwrap(), naive_switch(&g, &a));
    }

    #[test]
    fn switch_is_an_involution((g, a, _) in graph_and_sets()) {
        prop_assert_eq!(g.switch(&a).unwrap().switch(&a).unwrap(), g);
    }

    #[test]
    fn complement_set_gives_same_switch((g, a, _) in graph_and_sets()) {
        prop_assert_eq!(g.switch(&a.complement()).unwrap(), g.switch(&a).unwrap());
    }

    #[test]
    fn switches_compose((g, a, b) in graph_and_sets()) {
        prop_assert_eq!(
            g.switch(&a).unwrap().switch(&b).unwrap(),
            g.switch(&a.symmetric_difference(&b)).unwrap()
        );
    }

    #[test]
    fn switched_edge_count_formula((g, a, _) in graph_and_sets()) {
        let k = a.len();
        let n = g.n();
        let expected = g.edge_count() + k * (n - k) - 2 * naive_cut(&g, &a);
        prop_assert_eq!(g.switched_edge_count(&a).unwrap(), expected);
        prop_assert_eq!(g.cutset_size(&a).unwrap(), naive_cut(&g, &a));
    }

    #[test]
    fn switching_commutes_with_complement((g, a, _) in graph_and_sets()) {
        prop_assert_eq!(g.complement().switch(&a).unwrap(), g.switch(&a).unwrap().complement());
    }
}
