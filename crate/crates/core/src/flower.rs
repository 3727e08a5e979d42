//! Flower graphs F_{n,m}: a `+1` clique of `n` centers, each center joined to
//! its own `-1` petal clique of size `m`.
//!
//! Id layout: centers `0..n` first, then petal `i` occupies
//! `n + i*m .. n + (i+1)*m`. Center `i` (0-based) is the literature's
//! center `i + 1`.

use thiserror::Error;

use crate::graph::{apply_word, BicoloredGraph, Color, UpdateWord, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlowerError {
    #[error("flower sizes must be positive (n = {n}, m = {m})")]
    EmptyFlower { n: usize, m: usize },
    #[error("k = {k} outside 1..={n}")]
    KOutOfRange { k: usize, n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FlowerSpec {
    pub n: usize,
    pub m: usize,
}

impl FlowerSpec {
    pub fn new(n: usize, m: usize) -> Result<Self, FlowerError> {
        if n == 0 || m == 0 {
            return Err(FlowerError::EmptyFlower { n, m });
        }
        Ok(FlowerSpec { n, m })
    }

    /// The regime `m >= n` in which the structure lemma is claimed.
    pub fn in_lemma_regime(&self) -> bool {
        self.m >= self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n + self.n * self.m
    }

    pub fn edge_count(&self) -> usize {
        self.n * (self.n - 1) / 2 + self.n * (self.m * (self.m - 1) / 2 + self.m)
    }

    /// 0-based center index.
    pub fn center(&self, i: usize) -> VertexId {
        debug_assert!(i < self.n);
        VertexId(i as u32)
    }

    /// Vertex `j` of the petal owned by center `i` (both 0-based).
    pub fn petal(&self, i: usize, j: usize) -> VertexId {
        debug_assert!(i < self.n && j < self.m);
        VertexId((self.n + i * self.m + j) as u32)
    }

    pub fn petal_vertices(&self, i: usize) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.m).map(move |j| self.petal(i, j))
    }

    /// The first `k` centers in ascending order.
    pub fn center_word(&self, k: usize) -> UpdateWord {
        (0..k.min(self.n)).map(|i| self.center(i)).collect()
    }
}

/// Appends a flower to `graph` and returns the ids of its centers, in order.
/// Petals follow the centers contiguously, grouped by owner.
pub(crate) fn append_flower(graph: &mut BicoloredGraph, spec: FlowerSpec) -> Vec<VertexId> {
    let centers: Vec<VertexId> = (0..spec.n).map(|_| graph.push_vertex(Color::Plus)).collect();
    for (a, &u) in centers.iter().enumerate() {
        for &v in &centers[a + 1..] {
            graph.add_edge(u, v).expect("fresh vertices");
        }
    }
    for &c in &centers {
        let petal: Vec<VertexId> = (0..spec.m).map(|_| graph.push_vertex(Color::Minus)).collect();
        for (a, &u) in petal.iter().enumerate() {
            graph.add_edge(c, u).expect("fresh vertices");
            for &v in &petal[a + 1..] {
                graph.add_edge(u, v).expect("fresh vertices");
            }
        }
    }
    centers
}

pub fn build_flower(spec: FlowerSpec) -> BicoloredGraph {
    let mut g = BicoloredGraph::new(Vec::with_capacity(spec.vertex_count()));
    append_flower(&mut g, spec);
    g
}

/// Verdicts for the five claims of the flower lemma after updating the first
/// `k` centers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    /// Centers `1..=k` are colored `-1`.
    pub flipped: bool,
    /// For every `i < k`, center `i` is adjacent to every petal vertex of `i + 1`.
    pub petal_links: bool,
    /// Centers `1..=k` induce the path `1 - 2 - ... - k`.
    pub path: bool,
    /// No center `i < k` is adjacent to a center `> k`.
    pub no_far_edges: bool,
    /// Centers `k..=n` induce a clique.
    pub tail_clique: bool,
}

impl LemmaReport {
    pub fn all(&self) -> bool {
        self.verdicts().iter().all(|&(_, ok)| ok)
    }

    pub fn verdicts(&self) -> [(&'static str, bool); 5] {
        [
            ("centers 1..k flipped", self.flipped),
            ("center i adjacent to petal(i+1)", self.petal_links),
            ("centers 1..k induce P_k", self.path),
            ("no edge from i<k to centers >k", self.no_far_edges),
            ("centers k..n induce a clique", self.tail_clique),
        ]
    }
}

/// Evaluates each lemma claim literally on `graph`, which should be the
/// flower of `spec` after Φ over its first `k` centers.
pub fn check_flower_lemma(graph: &BicoloredGraph, spec: FlowerSpec, k: usize) -> Result<LemmaReport, FlowerError> {
    if k == 0 || k > spec.n {
        return Err(FlowerError::KOutOfRange { k, n: spec.n });
    }
    let c = |i: usize| spec.center(i - 1); // 1-based center labels below
    let flipped = (1..=k).all(|i| graph.color(c(i)) == Color::Minus);
    let petal_links = (1..k).all(|i| spec.petal_vertices(i).all(|p| graph.has_edge(c(i), p)));
    let path = (1..=k).all(|i| (i + 1..=k).all(|j| graph.has_edge(c(i), c(j)) == (j == i + 1)));
    let no_far_edges = (1..k).all(|i| (k + 1..=spec.n).all(|j| !graph.has_edge(c(i), c(j))));
    let tail_clique = (k..=spec.n).all(|i| (i + 1..=spec.n).all(|j| graph.has_edge(c(i), c(j))));
    Ok(LemmaReport {
        flipped,
        petal_links,
        path,
        no_far_edges,
        tail_clique,
    })
}

/// Builds F_{n,m}, runs the first `k` centers, and checks the lemma.
pub fn run_flower_lemma(spec: FlowerSpec, k: usize) -> Result<(BicoloredGraph, LemmaReport), FlowerError> {
    if k == 0 || k > spec.n {
        return Err(FlowerError::KOutOfRange { k, n: spec.n });
    }
    let g = build_flower(spec);
    let after = apply_word(&g, &spec.center_word(k)).expect("centers are vertices");
    let report = check_flower_lemma(&after, spec, k)?;
    Ok((after, report))
}
