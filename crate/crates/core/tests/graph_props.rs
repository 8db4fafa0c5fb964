mod common;

use oridom::graph::{encode_graph6, parse_graph6, parse_graph6_stream};
use oridom::Graph;
use proptest::prelude::*;

proptest! {
    #[test]
    fn complement_is_an_involution(g in common::graph(0, 12, 66)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.size() + g.complement().size(), g.order() * g.order().saturating_sub(1) / 2);
    }

    #[test]
    fn graph6_round_trip(g in common::graph(0, 20, 60)) {
        let code = encode_graph6(&g);
        let back = parse_graph6(&code).unwrap();
        prop_assert_eq!(encode_graph6(&back), code);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn induced_on_everything_is_identity(g in common::graph(0, 12, 40)) {
        let all: Vec<usize> = (0..g.order()).collect();
        prop_assert_eq!(g.induced_subgraph(&all).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in common::graph(0, 12, 40)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn disjoint_union_adds_orders_and_sizes(a in common::graph(0, 6, 15), b in common::graph(0, 6, 15)) {
        let u = Graph::disjoint_union(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(u.order(), a.order() + b.order());
        prop_assert_eq!(u.size(), a.size() + b.size());
        let left: Vec<usize> = (0..a.order()).collect();
        prop_assert_eq!(u.induced_subgraph(&left).unwrap(), a);
    }
}

#[test]
fn fixture_streams_are_canonical() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    for name in ["connected_le6.g6", "bipartite_m14.g6"] {
        let text = std::fs::read_to_string(dir.join(name)).unwrap();
        let graphs = parse_graph6_stream(&text).unwrap();
        let again: Vec<String> = graphs.iter().map(encode_graph6).collect();
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        assert_eq!(again, lines, "{name}");
    }
}

#[test]
fn malformed_input_is_rejected() {
    assert!(Graph::new(3, [(0, 0)]).is_err());
    assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
    assert!(Graph::new(3, [(0, 3)]).is_err());
    assert!(Graph::new(513, []).is_err());
    assert!(parse_graph6("~").is_err());
}
