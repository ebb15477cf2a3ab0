use proptest::prelude::*;
use stabgraph::oracle::{random_circuit, random_graph, random_stabilizer_matrix};
use stabgraph::transforms::apply_sequence;
use stabgraph_cli::{
    parse_circuit, parse_graph, parse_matrix, parse_script, print_circuit, print_graph,
    print_matrix,
};

proptest! {
    #[test]
    fn graph_text_round_trips(n in 1usize..=10, seed in any::<u64>()) {
        let g = random_graph(n, seed);
        let text = print_graph(&g);
        let parsed = parse_graph(&text).unwrap();
        prop_assert_eq!(&parsed, &g);
        prop_assert_eq!(print_graph(&parsed), text);
    }

    #[test]
    fn circuit_text_round_trips(n in 1usize..=10, seed in any::<u64>()) {
        let c = random_circuit(n, seed);
        let text = print_circuit(&c);
        prop_assert_eq!(print_circuit(&parse_circuit(&text).unwrap()), text);
    }

    #[test]
    fn matrix_text_round_trips(n in 1usize..=8, seed in any::<u64>()) {
        let m = random_stabilizer_matrix(n, seed);
        let text = print_matrix(&m);
        let parsed = parse_matrix(&text).unwrap();
        prop_assert_eq!(parsed.rows_by_qubit(), m.rows_by_qubit());
        prop_assert_eq!(print_matrix(&parsed), text);
    }

    #[test]
    fn printed_gate_tokens_parse_back(n in 2usize..=6, seed in any::<u64>(), picks in prop::collection::vec((0u8..4, 0usize..6, 1usize..6), 0..20)) {
        let gates: Vec<_> = picks
            .iter()
            .map(|&(kind, a, d)| {
                let a = a % n;
                match kind {
                    0 => stabgraph::Gate::h(a),
                    1 => stabgraph::Gate::s(a),
                    2 => stabgraph::Gate::z(a),
                    _ => stabgraph::Gate::cz(a, (a + d % (n - 1) + 1) % n),
                }
            })
            .collect();
        let script = gates.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ");
        prop_assert_eq!(&parse_script(&script, n).unwrap(), &gates);
        let g = random_graph(n, seed);
        prop_assert!(apply_sequence(&g, &gates).is_ok());
    }
}
