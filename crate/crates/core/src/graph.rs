//! Bicolored graphs and the local homophily transformation.
//!
//! Vertices are dense 0-based ids. Literature labels `1..=n` map to ids by
//! subtracting one; the gadget and flower builders take care of that offset.

use std::fmt;

use thiserror::Error;

/// Vertex color, one of `-1` / `+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(i8)]
pub enum Color {
    Minus = -1,
    Plus = 1,
}

impl Color {
    pub fn value(self) -> i64 {
        self as i8 as i64
    }

    pub fn flipped(self) -> Color {
        match self {
            Color::Minus => Color::Plus,
            Color::Plus => Color::Minus,
        }
    }

    /// Sign of a nonzero sum, `None` on zero.
    pub fn from_sign(sum: i64) -> Option<Color> {
        match sum.signum() {
            1 => Some(Color::Plus),
            -1 => Some(Color::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Minus => f.write_str("-1"),
            Color::Plus => f.write_str("+1"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex {vertex} (graph has {len} vertices)")]
    UnknownVertex { vertex: VertexId, len: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("target pair must be two distinct vertices, got {0} {0}")]
    DegenerateTarget(VertexId),
}

/// An update schedule: Φ is applied to each vertex from left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UpdateWord(pub Vec<VertexId>);

impl UpdateWord {
    pub fn empty() -> Self {
        UpdateWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn concat(&mut self, other: &UpdateWord) {
        self.0.extend_from_slice(&other.0);
    }
}

impl FromIterator<VertexId> for UpdateWord {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        UpdateWord(iter.into_iter().collect())
    }
}

impl From<Vec<u32>> for UpdateWord {
    fn from(ids: Vec<u32>) -> Self {
        ids.into_iter().map(VertexId).collect()
    }
}

/// Undirected simple graph with a ±1 coloring.
///
/// Adjacency lists are kept sorted ascending and symmetric; every public
/// constructor and mutator preserves that.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BicoloredGraph {
    colors: Vec<Color>,
    adj: Vec<Vec<u32>>,
}

impl BicoloredGraph {
    pub fn new(colors: Vec<Color>) -> Self {
        let adj = vec![Vec::new(); colors.len()];
        BicoloredGraph { colors, adj }
    }

    /// `n` isolated vertices, all colored `color`.
    pub fn uniform(n: usize, color: Color) -> Self {
        Self::new(vec![color; n])
    }

    pub fn from_edges(colors: Vec<Color>, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, GraphError> {
        let n = colors.len();
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(GraphError::UnknownVertex {
                        vertex: VertexId(w),
                        len: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(VertexId(u)));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        Ok(BicoloredGraph { colors, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.colors.len() as u32).map(VertexId)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index() < self.colors.len()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex {
                vertex: v,
                len: self.colors.len(),
            })
        }
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v.index()]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn set_color(&mut self, v: VertexId, c: Color) {
        self.colors[v.index()] = c;
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn push_vertex(&mut self, c: Color) -> VertexId {
        self.colors.push(c);
        self.adj.push(Vec::new());
        VertexId((self.colors.len() - 1) as u32)
    }

    /// Sorted neighbor ids of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[u32] {
        &self.adj[v.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.contains(u) && self.adj[u.index()].binary_search(&v.0).is_ok()
    }

    /// Inserts `uv`; returns whether it was new.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let row = &mut self.adj[u.index()];
        match row.binary_search(&v.0) {
            Ok(_) => Ok(false),
            Err(pos) => {
                row.insert(pos, v.0);
                let other = &mut self.adj[v.index()];
                let pos = other.binary_search(&u.0).unwrap_err();
                other.insert(pos, u.0);
                Ok(true)
            }
        }
    }

    /// Removes `uv`; returns whether it was present.
    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let row = &mut self.adj[u.index()];
        match row.binary_search(&v.0) {
            Err(_) => Ok(false),
            Ok(pos) => {
                row.remove(pos);
                let other = &mut self.adj[v.index()];
                let pos = other.binary_search(&u.0).unwrap();
                other.remove(pos);
                Ok(true)
            }
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| {
            let u = u as u32;
            let start = row.partition_point(|&x| x <= u);
            row[start..].iter().map(move |&v| (VertexId(u), VertexId(v)))
        })
    }

    /// Sum of neighbor colors.
    pub fn neighbor_sum(&self, v: VertexId) -> i64 {
        self.adj[v.index()]
            .iter()
            .map(|&u| self.colors[u as usize].value())
            .sum()
    }

    /// Applies Φ at `v` in place. Observationally identical to [`apply_phi`].
    pub fn phi_in_place(&mut self, v: VertexId) -> Result<(), GraphError> {
        self.check_vertex(v)?;
        let mut scratch = Scratch::default();
        self.phi_with(v, &mut scratch);
        Ok(())
    }

    pub(crate) fn phi_with(&mut self, v: VertexId, scratch: &mut Scratch) {
        let vi = v.index();
        // Snapshot N(v); colors of N(v) cannot change during this step
        // because v is not its own neighbor.
        scratch.nbhd.clear();
        scratch.nbhd.extend_from_slice(&self.adj[vi]);

        let sum: i64 = scratch.nbhd.iter().map(|&u| self.colors[u as usize].value()).sum();
        if let Some(c) = Color::from_sign(sum) {
            self.colors[vi] = c;
        }

        // Each row of x in N(v) becomes (row \ N(v)) ∪ {y ∈ N(v) : y != x, c(y) = c(x)}.
        // Both inputs are sorted, so this is a single merge.
        let nbhd = &scratch.nbhd;
        for &x in nbhd.iter() {
            let xc = self.colors[x as usize];
            let row = &self.adj[x as usize];
            let out = &mut scratch.row;
            out.clear();
            out.reserve(row.len() + nbhd.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < nbhd.len() {
                let a = row.get(i).copied().unwrap_or(u32::MAX);
                let b = nbhd.get(j).copied().unwrap_or(u32::MAX);
                if a < b {
                    out.push(a);
                    i += 1;
                } else {
                    if b != x && self.colors[b as usize] == xc {
                        out.push(b);
                    }
                    if a == b {
                        i += 1;
                    }
                    j += 1;
                }
            }
            std::mem::swap(&mut self.adj[x as usize], &mut scratch.row);
        }
    }

    /// Applies every vertex of `word` in order, in place.
    pub fn apply_word_in_place(&mut self, word: &UpdateWord) -> Result<(), GraphError> {
        for v in word.iter() {
            self.check_vertex(v)?;
        }
        let mut scratch = Scratch::default();
        for v in word.iter() {
            self.phi_with(v, &mut scratch);
        }
        Ok(())
    }

    /// Checks the structural invariants: no self-loops, symmetric, sorted.
    pub fn check_invariants(&self) -> Result<(), String> {
        if self.adj.len() != self.colors.len() {
            return Err("adjacency and coloring disagree on vertex count".into());
        }
        for (u, row) in self.adj.iter().enumerate() {
            if !row.windows(2).all(|w| w[0] < w[1]) {
                return Err(format!("row {u} is not strictly ascending"));
            }
            for &v in row {
                if v as usize == u {
                    return Err(format!("self-loop at {u}"));
                }
                if v as usize >= self.adj.len() {
                    return Err(format!("edge {u}-{v} leaves the vertex set"));
                }
                if self.adj[v as usize].binary_search(&(u as u32)).is_err() {
                    return Err(format!("edge {u}-{v} is not symmetric"));
                }
            }
        }
        Ok(())
    }

    /// Subgraph induced by `set`, as a list of `(u, v)` pairs with `u < v`.
    pub fn induced_edges(&self, set: &[VertexId]) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if self.has_edge(u, v) {
                    out.push((u.min(v), u.max(v)));
                }
            }
        }
        out
    }
}

#[derive(Default)]
pub(crate) struct Scratch {
    nbhd: Vec<u32>,
    row: Vec<u32>,
}

/// Φ_v(graph). The input is left untouched.
pub fn apply_phi(graph: &BicoloredGraph, v: VertexId) -> Result<BicoloredGraph, GraphError> {
    graph.check_vertex(v)?;
    let mut out = graph.clone();
    out.phi_with(v, &mut Scratch::default());
    Ok(out)
}

/// Φ_w(graph): Φ folded over `word` left to right. The empty word is the identity.
pub fn apply_word(graph: &BicoloredGraph, word: &UpdateWord) -> Result<BicoloredGraph, GraphError> {
    let mut out = graph.clone();
    out.apply_word_in_place(word)?;
    Ok(out)
}

/// All intermediate graphs of `apply_word`, starting with the input; length `|word| + 1`.
pub fn apply_word_traced(graph: &BicoloredGraph, word: &UpdateWord) -> Result<Vec<BicoloredGraph>, GraphError> {
    for v in word.iter() {
        graph.check_vertex(v)?;
    }
    let mut trace = Vec::with_capacity(word.len() + 1);
    trace.push(graph.clone());
    let mut scratch = Scratch::default();
    for v in word.iter() {
        let mut next = trace.last().unwrap().clone();
        next.phi_with(v, &mut scratch);
        trace.push(next);
    }
    Ok(trace)
}

/// Same vertex set, same colors, same edges (labelled equality, not isomorphism).
pub fn graph_equal(a: &BicoloredGraph, b: &BicoloredGraph) -> bool {
    a == b
}
