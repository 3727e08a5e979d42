//! One homophily step on a small star, printed before and after.

use homophily::{apply_phi, serialize, BicoloredGraph, Color, VertexId};

fn main() {
    // center 0 (+1) with neighbors 1, 2 (-1) and 3 (+1); 1 and 3 start adjacent
    let g = BicoloredGraph::from_edges(
        vec![Color::Plus, Color::Minus, Color::Minus, Color::Plus],
        [(0, 1), (0, 2), (0, 3), (1, 3)],
    )
    .expect("valid graph");
    println!("before:\n{}", serialize(&g));
    let after = apply_phi(&g, VertexId(0)).expect("vertex exists");
    println!("after updating 0:\n{}", serialize(&after));
    assert_eq!(after.color(VertexId(0)), Color::Minus);
    assert!(after.has_edge(VertexId(1), VertexId(2)));
    assert!(!after.has_edge(VertexId(1), VertexId(3)));
}
