mod common;

use common::{corpus, Dense};
use homophily::circuit::Assignment;
use homophily::compiler::{compile, compile_streaming, ReductionParams};
use homophily::{
    deserialize, graph_equal, parse_document, serialize, serialize_document, BicoloredGraph, Color, GraphDocument,
    UpdateWord, VertexId,
};
use proptest::prelude::*;

fn graph_strategy() -> impl Strategy<Value = BicoloredGraph> {
    (1usize..24).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec((0..n as u32, 0..n as u32), 0..3 * n),
        )
            .prop_map(|(cs, pairs)| {
                let colors = cs
                    .into_iter()
                    .map(|b| if b { Color::Plus } else { Color::Minus })
                    .collect();
                let edges: Vec<(u32, u32)> = pairs.into_iter().filter(|(a, b)| a != b).collect();
                BicoloredGraph::from_edges(colors, edges).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn graph_round_trip(g in graph_strategy()) {
        let text = serialize(&g);
        let back = deserialize(&text).unwrap();
        prop_assert!(graph_equal(&back, &g));
        prop_assert_eq!(Dense::of(&back), Dense::of(&g));
        prop_assert_eq!(serialize(&back), text);
    }

    #[test]
    fn document_round_trip(g in graph_strategy(), word in proptest::collection::vec(any::<u32>(), 0..12), t in any::<(u32, u32)>()) {
        let n = g.vertex_count() as u32;
        let word: UpdateWord = word.into_iter().map(|x| VertexId(x % n)).collect();
        let (s, t) = (VertexId(t.0 % n), VertexId(t.1 % n));
        let doc = GraphDocument { graph: g, word: Some(word), target: (s != t).then_some((s, t)) };
        let text = serialize_document(&doc);
        let back = parse_document(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(serialize_document(&back), text);
    }
}

#[test]
fn repeated_compiles_are_byte_identical() {
    for (name, c) in corpus() {
        let a = Assignment::from_bits(&c, &vec![true; c.inputs().count()]);
        let p = ReductionParams::fixed(5);
        let runs: Vec<String> = (0..3)
            .map(|_| serialize_document(&compile(&c, &a, &p).unwrap().instance.into()))
            .collect();
        assert!(runs.windows(2).all(|w| w[0] == w[1]), "{name}");
        let streamed = compile_streaming(&c, &a, &p, Vec::new()).unwrap();
        assert_eq!(streamed, runs[0].as_bytes(), "{name}");
        let doc = parse_document(&runs[0]).unwrap();
        assert_eq!(serialize_document(&doc), runs[0], "{name}");
    }
}
