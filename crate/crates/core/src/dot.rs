//! Graphviz export. `+1` vertices are white, `-1` vertices gray; nodes and
//! edges come out in ascending id order so frames diff cleanly.

use std::fmt::Write;

use crate::graph::{BicoloredGraph, Color, VertexId};

#[derive(Clone, Default)]
pub struct DotOptions<'a> {
    pub name: Option<&'a str>,
    /// Optional display label per vertex (e.g. the gadget-local label).
    pub labels: Option<&'a dyn Fn(VertexId) -> String>,
    /// Pair drawn with a bold edge when present, dashed when absent.
    pub highlight: Option<(VertexId, VertexId)>,
}

pub fn to_dot(graph: &BicoloredGraph) -> String {
    to_dot_with(graph, &DotOptions::default())
}

pub fn to_dot_with(graph: &BicoloredGraph, opts: &DotOptions<'_>) -> String {
    let mut s = String::new();
    let name = opts.name.unwrap_or("B");
    writeln!(s, "graph {name} {{").unwrap();
    s.push_str("  node [shape=circle, style=filled, fontname=\"Helvetica\"];\n");
    for v in graph.vertices() {
        let fill = match graph.color(v) {
            Color::Plus => "white",
            Color::Minus => "gray",
        };
        match opts.labels {
            Some(f) => writeln!(s, "  {v} [fillcolor={fill}, label=\"{}\"];", f(v)).unwrap(),
            None => writeln!(s, "  {v} [fillcolor={fill}];").unwrap(),
        }
    }
    for (u, v) in graph.edges() {
        if opts.highlight == Some((u, v)) || opts.highlight == Some((v, u)) {
            writeln!(s, "  {u} -- {v} [penwidth=3];").unwrap();
        } else {
            writeln!(s, "  {u} -- {v};").unwrap();
        }
    }
    if let Some((a, b)) = opts.highlight {
        if !graph.has_edge(a, b) {
            writeln!(s, "  {a} -- {b} [style=dashed, color=red];").unwrap();
        }
    }
    s.push_str("}\n");
    s
}

/// File name of the `i`-th frame of a trace export.
pub fn frame_name(i: usize) -> String {
    format!("frame_{i:04}.dot")
}
