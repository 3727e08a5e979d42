#![allow(dead_code)]

use homophily::circuit::{parse_circuit, Circuit};
use homophily::{BicoloredGraph, Color, VertexId};

/// Dense copy of a bicolored graph: colors as ±1 and an adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dense {
    pub colors: Vec<i32>,
    pub adj: Vec<Vec<bool>>,
}

impl Dense {
    pub fn of(g: &BicoloredGraph) -> Dense {
        let n = g.vertex_count();
        let colors = g.colors().iter().map(|c| c.value() as i32).collect();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u.index()][v.index()] = true;
            adj[v.index()][u.index()] = true;
        }
        Dense { colors, adj }
    }

    pub fn to_graph(&self) -> BicoloredGraph {
        let colors = self
            .colors
            .iter()
            .map(|&c| if c > 0 { Color::Plus } else { Color::Minus })
            .collect();
        let n = self.colors.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.adj[u][v] {
                    edges.push((u as u32, v as u32));
                }
            }
        }
        BicoloredGraph::from_edges(colors, edges).unwrap()
    }
}

/// The transformation written straight from its definition, pair by pair:
/// v takes the sign of its old neighbors' color sum (0 keeps it); two
/// distinct old neighbors of v end up adjacent iff their colors agree;
/// every other pair, and every edge at v, is left alone.
pub fn oracle_phi(g: &Dense, v: usize) -> Dense {
    let n = g.colors.len();
    let in_n: Vec<bool> = (0..n).map(|x| g.adj[v][x]).collect();
    let sum: i32 = (0..n).filter(|&x| in_n[x]).map(|x| g.colors[x]).sum();
    let mut out = g.clone();
    if sum > 0 {
        out.colors[v] = 1;
    } else if sum < 0 {
        out.colors[v] = -1;
    }
    for x in 0..n {
        for y in 0..n {
            if x != y && in_n[x] && in_n[y] {
                out.adj[x][y] = g.colors[x] == g.colors[y];
            }
        }
    }
    out
}

pub fn vid(i: usize) -> VertexId {
    VertexId(i as u32)
}

/// Small circuits with at most four inputs, compiled exhaustively.
pub const CORPUS: &[(&str, &str)] = &[
    ("wire", "input x1\noutput x1\n"),
    ("and", "input x1\ninput x2\ny = AND x1 x2\noutput y\n"),
    ("or", "input x1\ninput x2\ny = OR x1 x2\noutput y\n"),
    ("and_same_input", "input x\ny = AND x x\noutput y\n"),
    (
        "or_of_ands",
        "input a\ninput b\ninput c\ninput d\nl = AND a b\nr = AND c d\no = OR l r\noutput o\n",
    ),
    (
        "and_of_ors",
        "input a\ninput b\ninput c\ninput d\nl = OR a b\nr = OR c d\no = AND l r\noutput o\n",
    ),
    (
        "shared_inputs",
        "input a\ninput b\nl = AND a b\nr = OR a b\no = AND l r\noutput o\n",
    ),
    (
        "diamond",
        "input a\ninput b\ninput c\nt = AND a b\nu = OR b c\nl = OR t u\nr = AND t u\no = OR l r\noutput o\n",
    ),
    (
        "chain",
        "input a\ninput b\ninput c\ninput d\n\
         p = OR a b\nq = AND c d\nr = AND p q\ns = OR p q\nt = OR r s\noutput t\n",
    ),
];

pub fn corpus() -> Vec<(&'static str, Circuit)> {
    CORPUS
        .iter()
        .map(|(name, text)| (*name, parse_circuit(text).unwrap().0))
        .collect()
}
