//! OR, AND and duplicator gadgets.
//!
//! A gadget is a small bicolored graph with designated input and output
//! vertex pairs ("slots") and a fixed update word. A Boolean value is the
//! presence of the edge between the two vertices of a slot.
//!
//! Templates are described with 1-based local labels, matching the usual
//! drawings of the gadgets; the materialized [`Gadget`] stores label `l` at
//! vertex id `l - 1`.

use std::fmt;

use thiserror::Error;

use crate::graph::{apply_word, apply_word_traced, BicoloredGraph, Color, GraphError, UpdateWord, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("duplicator needs k >= 1")]
    ZeroK,
    #[error("extra neighbors ({extra}) must be below k ({k})")]
    TooManyExtras { extra: usize, k: usize },
    #[error("extra neighbors only apply to the duplicator")]
    ExtrasOnLogicGadget,
    #[error("expected {expected} input values, got {got}")]
    InputArity { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetKind {
    Or,
    And,
    Duplicator,
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetKind::Or => "or",
            GadgetKind::And => "and",
            GadgetKind::Duplicator => "dup",
        })
    }
}

const OR_EDGES: [(u32, u32); 4] = [(1, 5), (3, 5), (2, 6), (4, 6)];
const OR_WORD: [u32; 4] = [1, 4, 2, 3];
const AND_EDGES: [(u32, u32); 4] = [(1, 5), (2, 6), (3, 7), (4, 5)];
const AND_WORD: [u32; 5] = [2, 3, 1, 4, 5];
const DUP_EDGES: [(u32, u32); 10] = [
    (1, 3),
    (1, 4),
    (1, 6),
    (2, 5),
    (2, 7),
    (3, 6),
    (4, 8),
    (4, 9),
    (4, 10),
    (5, 11),
];
const DUP_FIXED: u32 = 11;

const LOGIC_INPUTS: [(u32, u32); 2] = [(1, 2), (3, 4)];
const DUP_INPUTS: [(u32, u32); 1] = [(1, 2)];
const OR_OUTPUTS: [(u32, u32); 1] = [(5, 6)];
const AND_OUTPUTS: [(u32, u32); 1] = [(6, 7)];
const DUP_OUTPUTS: [(u32, u32); 2] = [(6, 7), (10, 11)];

/// Arithmetic description of a gadget: colors, neighborhoods and word are
/// computed from the local label without building the graph.
///
/// Duplicator labels: `1..=11` fixed part, `12..=11+k` flower centers, then
/// the petal of center `12+i` at `12+k + i(k+2) ..` (each of size `k+2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Template {
    pub kind: GadgetKind,
    /// Flower size; 0 for logic gadgets.
    pub k: usize,
}

impl Template {
    pub const OR: Template = Template {
        kind: GadgetKind::Or,
        k: 0,
    };
    pub const AND: Template = Template {
        kind: GadgetKind::And,
        k: 0,
    };

    pub fn duplicator(k: usize) -> Result<Template, GadgetError> {
        if k == 0 {
            return Err(GadgetError::ZeroK);
        }
        Ok(Template {
            kind: GadgetKind::Duplicator,
            k,
        })
    }

    fn petal_size(&self) -> usize {
        self.k + 2
    }

    pub fn vertex_count(&self) -> usize {
        match self.kind {
            GadgetKind::Or => 6,
            GadgetKind::And => 7,
            GadgetKind::Duplicator => DUP_FIXED as usize + self.k + self.k * self.petal_size(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self.kind {
            GadgetKind::Or => OR_EDGES.len(),
            GadgetKind::And => AND_EDGES.len(),
            GadgetKind::Duplicator => {
                let (k, m) = (self.k, self.petal_size());
                // fixed part + vertex 1 to centers + flower F_{k,k+2}
                DUP_EDGES.len() + k + k * (k - 1) / 2 + k * (m * (m - 1) / 2 + m)
            }
        }
    }

    pub fn inputs(&self) -> &'static [(u32, u32)] {
        match self.kind {
            GadgetKind::Or | GadgetKind::And => &LOGIC_INPUTS,
            GadgetKind::Duplicator => &DUP_INPUTS,
        }
    }

    pub fn outputs(&self) -> &'static [(u32, u32)] {
        match self.kind {
            GadgetKind::Or => &OR_OUTPUTS,
            GadgetKind::And => &AND_OUTPUTS,
            GadgetKind::Duplicator => &DUP_OUTPUTS,
        }
    }

    pub fn word_len(&self) -> usize {
        match self.kind {
            GadgetKind::Or => OR_WORD.len(),
            GadgetKind::And => AND_WORD.len(),
            GadgetKind::Duplicator => self.k + 7,
        }
    }

    /// `(1, 2, 12, …, 11+k, 3, 1, 4, 5, 4)` for the duplicator.
    pub fn word(&self) -> impl Iterator<Item = u32> + '_ {
        let fixed: &'static [u32] = match self.kind {
            GadgetKind::Or => &OR_WORD,
            GadgetKind::And => &AND_WORD,
            GadgetKind::Duplicator => &[],
        };
        let dup = self.kind == GadgetKind::Duplicator;
        let head: &'static [u32] = if dup { &[1, 2] } else { &[] };
        let tail: &'static [u32] = if dup { &[3, 1, 4, 5, 4] } else { &[] };
        let centers = if dup { self.centers() } else { 0..0 };
        fixed
            .iter()
            .copied()
            .chain(head.iter().copied())
            .chain(centers)
            .chain(tail.iter().copied())
    }

    /// Flower center labels (empty for logic gadgets).
    pub fn centers(&self) -> std::ops::Range<u32> {
        match self.kind {
            GadgetKind::Duplicator => DUP_FIXED + 1..DUP_FIXED + 1 + self.k as u32,
            _ => 0..0,
        }
    }

    /// Whether `label` belongs to the flower (center or petal).
    pub fn is_flower(&self, label: u32) -> bool {
        self.kind == GadgetKind::Duplicator && label > DUP_FIXED
    }

    pub fn color(&self, label: u32) -> Color {
        debug_assert!(label >= 1 && label as usize <= self.vertex_count());
        match self.kind {
            GadgetKind::Or | GadgetKind::And => Color::Minus,
            GadgetKind::Duplicator => {
                if label == 4 || label == 5 || self.centers().contains(&label) {
                    Color::Plus
                } else {
                    Color::Minus
                }
            }
        }
    }

    fn fixed_edges(&self) -> &'static [(u32, u32)] {
        match self.kind {
            GadgetKind::Or => &OR_EDGES,
            GadgetKind::And => &AND_EDGES,
            GadgetKind::Duplicator => &DUP_EDGES,
        }
    }

    fn petal_start(&self, center_index: u32) -> u32 {
        DUP_FIXED + 1 + self.k as u32 + center_index * self.petal_size() as u32
    }

    /// Sorted neighbor labels of `label` in the initial gadget graph.
    pub fn neighbors(&self, label: u32) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .fixed_edges()
            .iter()
            .filter_map(|&(a, b)| {
                if a == label {
                    Some(b)
                } else if b == label {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        if self.kind == GadgetKind::Duplicator {
            let centers = self.centers();
            let m = self.petal_size() as u32;
            if label == 1 {
                out.extend(centers.clone());
            } else if centers.contains(&label) {
                let i = label - centers.start;
                out.push(1);
                out.extend(centers.clone().filter(|&c| c != label));
                let p = self.petal_start(i);
                out.extend(p..p + m);
            } else if label > centers.end - 1 {
                let off = label - centers.end;
                let i = off / m;
                let p = self.petal_start(i);
                out.push(centers.start + i);
                out.extend((p..p + m).filter(|&x| x != label));
            }
        }
        out.sort_unstable();
        out
    }

    /// Materializes the gadget with all slots empty.
    pub fn build(&self) -> Gadget {
        let n = self.vertex_count();
        let colors = (1..=n as u32).map(|l| self.color(l)).collect();
        let mut graph = BicoloredGraph::new(colors);
        for &(a, b) in self.fixed_edges() {
            graph.add_edge(VertexId(a - 1), VertexId(b - 1)).expect("template edge");
        }
        if self.kind == GadgetKind::Duplicator {
            let centers: Vec<u32> = self.centers().collect();
            for &c in &centers {
                graph.add_edge(VertexId(0), VertexId(c - 1)).expect("template edge");
            }
            // the flower occupies labels 12.. with centers first, then petals
            let flower =
                crate::flower::build_flower(crate::flower::FlowerSpec::new(self.k, self.petal_size()).expect("k >= 1"));
            for (u, v) in flower.edges() {
                graph
                    .add_edge(VertexId(u.0 + DUP_FIXED), VertexId(v.0 + DUP_FIXED))
                    .expect("template edge");
            }
        }
        let slot = |&(a, b): &(u32, u32)| (VertexId(a - 1), VertexId(b - 1));
        Gadget {
            template: *self,
            graph,
            inputs: self.inputs().iter().map(slot).collect(),
            outputs: self.outputs().iter().map(slot).collect(),
            word: self.word().map(|l| VertexId(l - 1)).collect(),
        }
    }

    /// Boolean function the gadget realizes.
    pub fn expected(&self, inputs: &[bool]) -> Vec<bool> {
        match self.kind {
            GadgetKind::Or => vec![inputs[0] || inputs[1]],
            GadgetKind::And => vec![inputs[0] && inputs[1]],
            GadgetKind::Duplicator => vec![inputs[0], inputs[0]],
        }
    }
}

/// A materialized gadget: graph, slots, and fixed word (vertex id = label - 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub template: Template,
    pub graph: BicoloredGraph,
    pub inputs: Vec<(VertexId, VertexId)>,
    pub outputs: Vec<(VertexId, VertexId)>,
    pub word: UpdateWord,
}

pub fn build_or() -> Gadget {
    Template::OR.build()
}

pub fn build_and() -> Gadget {
    Template::AND.build()
}

pub fn build_duplicator(k: usize) -> Result<Gadget, GadgetError> {
    Ok(Template::duplicator(k)?.build())
}

impl Gadget {
    pub fn kind(&self) -> GadgetKind {
        self.template.kind
    }

    /// Flower size for the duplicator.
    pub fn k(&self) -> Option<usize> {
        (self.kind() == GadgetKind::Duplicator).then_some(self.template.k)
    }

    /// Initial graph with input slot edges installed per `inputs` and
    /// `extra` fresh `-1` pendants hanging off vertex 1 (duplicator only).
    pub fn prepare(&self, inputs: &[bool], extra: usize) -> Result<BicoloredGraph, GadgetError> {
        if inputs.len() != self.inputs.len() {
            return Err(GadgetError::InputArity {
                expected: self.inputs.len(),
                got: inputs.len(),
            });
        }
        if extra > 0 && self.kind() != GadgetKind::Duplicator {
            return Err(GadgetError::ExtrasOnLogicGadget);
        }
        let mut g = self.graph.clone();
        for (&(a, b), &on) in self.inputs.iter().zip(inputs) {
            if on {
                g.add_edge(a, b)?;
            }
        }
        for _ in 0..extra {
            let p = g.push_vertex(Color::Minus);
            g.add_edge(VertexId(0), p)?;
        }
        Ok(g)
    }

    pub fn run(&self, inputs: &[bool], extra: usize) -> Result<BicoloredGraph, GadgetError> {
        let g = self.prepare(inputs, extra)?;
        Ok(apply_word(&g, &self.word)?)
    }

    pub fn trace(&self, inputs: &[bool]) -> Result<Vec<BicoloredGraph>, GadgetError> {
        let g = self.prepare(inputs, 0)?;
        Ok(apply_word_traced(&g, &self.word)?)
    }

    pub fn read_outputs(&self, g: &BicoloredGraph) -> Vec<bool> {
        self.outputs.iter().map(|&(a, b)| g.has_edge(a, b)).collect()
    }

    /// Local label of a vertex id of the materialized gadget.
    pub fn label(v: VertexId) -> u32 {
        v.0 + 1
    }
}

/// Duplicator structural checks after the word has run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DuplicatorChecks {
    /// No edge between the vertices of output 1 and output 2.
    pub outputs_separated: bool,
    /// No flower vertex is adjacent to an output vertex.
    pub flower_detached: bool,
    /// All four output vertices are colored `-1`.
    pub outputs_negative: bool,
}

impl DuplicatorChecks {
    pub fn all(&self) -> bool {
        self.outputs_separated && self.flower_detached && self.outputs_negative
    }

    pub fn of(gadget: &Gadget, after: &BicoloredGraph) -> DuplicatorChecks {
        let t = &gadget.template;
        let first = [gadget.outputs[0].0, gadget.outputs[0].1];
        let second = [gadget.outputs[1].0, gadget.outputs[1].1];
        let outputs_separated = first.iter().all(|&a| second.iter().all(|&b| !after.has_edge(a, b)));
        let outs: Vec<VertexId> = first.iter().chain(&second).copied().collect();
        let flower_detached = outs.iter().all(|&o| {
            after
                .neighbors(o)
                .iter()
                .all(|&n| !(n < t.vertex_count() as u32 && t.is_flower(n + 1)))
        });
        let outputs_negative = outs.iter().all(|&o| after.color(o) == Color::Minus);
        DuplicatorChecks {
            outputs_separated,
            flower_detached,
            outputs_negative,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthRow {
    pub inputs: Vec<bool>,
    pub outputs: Vec<bool>,
    pub expected: Vec<bool>,
    pub checks: Option<DuplicatorChecks>,
}

impl TruthRow {
    pub fn ok(&self) -> bool {
        self.outputs == self.expected && self.checks.is_none_or(|c| c.all())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetReport {
    pub kind: GadgetKind,
    pub k: Option<usize>,
    pub extra_neighbors: usize,
    pub rows: Vec<TruthRow>,
}

impl GadgetReport {
    pub fn passes(&self) -> bool {
        self.rows.iter().all(TruthRow::ok)
    }
}

fn bits(b: &[bool]) -> String {
    b.iter().map(|&x| if x { '1' } else { '0' }).collect()
}

impl fmt::Display for GadgetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gadget {}", self.kind)?;
        if let Some(k) = self.k {
            write!(f, " k={k} extra={}", self.extra_neighbors)?;
        }
        writeln!(f)?;
        for r in &self.rows {
            write!(
                f,
                "in={} out={} expected={}",
                bits(&r.inputs),
                bits(&r.outputs),
                bits(&r.expected)
            )?;
            if let Some(c) = r.checks {
                write!(
                    f,
                    " separated={} detached={} negative={}",
                    c.outputs_separated, c.flower_detached, c.outputs_negative
                )?;
            }
            writeln!(f, " {}", if r.ok() { "ok" } else { "FAIL" })?;
        }
        write!(f, "verdict {}", if self.passes() { "pass" } else { "fail" })
    }
}

/// All input combinations, first slot most significant: `00, 01, 10, 11`.
pub fn input_combinations(arity: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..1u32 << arity).map(move |mask| (0..arity).map(|i| mask >> (arity - 1 - i) & 1 == 1).collect())
}

/// Exhaustive truth table of `g`, with `extra` `-1` pendants on duplicator vertex 1.
pub fn verify_gadget(g: &Gadget, extra: usize) -> Result<GadgetReport, GadgetError> {
    match g.kind() {
        GadgetKind::Duplicator if extra >= g.template.k => {
            return Err(GadgetError::TooManyExtras { extra, k: g.template.k })
        }
        GadgetKind::Or | GadgetKind::And if extra > 0 => return Err(GadgetError::ExtrasOnLogicGadget),
        _ => {}
    }
    let mut rows = Vec::new();
    for inputs in input_combinations(g.inputs.len()) {
        let after = g.run(&inputs, extra)?;
        let checks = (g.kind() == GadgetKind::Duplicator).then(|| DuplicatorChecks::of(g, &after));
        rows.push(TruthRow {
            outputs: g.read_outputs(&after),
            expected: g.template.expected(&inputs),
            inputs,
            checks,
        });
    }
    Ok(GadgetReport {
        kind: g.kind(),
        k: g.k(),
        extra_neighbors: extra,
        rows,
    })
}
