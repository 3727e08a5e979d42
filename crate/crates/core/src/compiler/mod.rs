//! Compiles a monotone synchronous circuit plus an input assignment into an
//! LHE instance whose target pair becomes an edge iff the circuit outputs
//! TRUE.
//!
//! Every INPUT gate gets a duplicator whose input edge is present iff the
//! input is TRUE. Every AND / OR gate gets its gadget followed by a
//! duplicator, except the output gate. A BUF gate is a bare duplicator.
//! Wires are realized by merging a producer's output pair with a consumer's
//! input pair, lower endpoint to lower endpoint. The word concatenates the
//! gadget words level by level.

mod layout;
mod placement;
mod robustness;
mod stream;

use std::collections::HashMap;
use std::io;

use thiserror::Error;

use crate::circuit::{validate, Assignment, Circuit, CircuitError, GateKind};
use crate::graph::{BicoloredGraph, Color, GraphError, UpdateWord, VertexId};
use crate::lhe::{solve_lhe, LheInstance};

pub use layout::{GadgetPlacement, InstanceSize, Owner, Role};
pub use placement::PlacementTable;
pub use robustness::{check_isolation, simulate_with_robustness, DuplicatorFiring, IsolationReport, RobustnessReport};
pub use stream::compile_streaming;

use layout::Layout;

/// Least k strictly above `7 n_and + 6 n_or + 9 (n_and + n_or)`.
pub fn choose_k(n_and: usize, n_or: usize) -> usize {
    try_choose_k(n_and, n_or, 0).expect("k bound overflows usize")
}

/// [`choose_k`] plus 9 per buffer (a buffer is one more duplicator's worth
/// of non-flower vertices). `None` on overflow.
pub fn try_choose_k(n_and: usize, n_or: usize, n_buf: usize) -> Option<usize> {
    16usize
        .checked_mul(n_and)?
        .checked_add(15usize.checked_mul(n_or)?)?
        .checked_add(9usize.checked_mul(n_buf)?)?
        .checked_add(1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum KPolicy {
    /// The sufficient bound, [`try_choose_k`] on the circuit's gate counts.
    #[default]
    Bound,
    /// A caller-chosen flower size. Below the bound correctness is not
    /// guaranteed; [`simulate_with_robustness`] reports the actual margin.
    Fixed(usize),
}

/// Order of placements within one level. Only one rule exists: logic
/// gadgets by ascending gate id, then duplicators by ascending gate id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum LayerOrder {
    #[default]
    AscendingGateId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ReductionParams {
    pub k: KPolicy,
    pub layer_order: LayerOrder,
}

impl ReductionParams {
    pub fn fixed(k: usize) -> Self {
        ReductionParams {
            k: KPolicy::Fixed(k),
            ..Default::default()
        }
    }

    /// The k bound for `c` (buffers included).
    pub fn bound(c: &Circuit) -> Result<usize, CompileError> {
        try_choose_k(c.n_and(), c.n_or(), c.count(GateKind::Buffer)).ok_or(CompileError::KOverflow)
    }

    pub fn resolve_k(&self, c: &Circuit) -> Result<usize, CompileError> {
        match self.k {
            KPolicy::Bound => Self::bound(c),
            KPolicy::Fixed(0) => Err(CompileError::ZeroK),
            KPolicy::Fixed(k) => Ok(k),
        }
    }
}

#[derive(Debug, Error)]
pub enum CompileError {
    #[error("circuit is not compilable: {0}")]
    Invalid(String),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error("k bound overflows")]
    KOverflow,
    #[error("k must be positive")]
    ZeroK,
    #[error("instance too large for 32-bit vertex ids ({0})")]
    TooLarge(InstanceSize),
    #[error("merged slot colors disagree: {0}")]
    SlotColor(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("write failed: {0}")]
    Io(#[from] io::Error),
}

/// Checks preconditions shared by both compilation paths.
fn prepare<'a>(c: &'a Circuit, a: &'a Assignment, params: &ReductionParams) -> Result<Layout<'a>, CompileError> {
    let report = validate(c);
    if !report.all() {
        return Err(CompileError::Invalid(report.problems.join("; ")));
    }
    a.check_total(c)?;
    let layout = Layout::new(c, a, params.resolve_k(c)?);
    let size = layout.size();
    if size.vertices > u32::MAX as u64 {
        return Err(CompileError::TooLarge(size));
    }
    layout.check_merge_colors().map_err(CompileError::SlotColor)?;
    Ok(layout)
}

/// Size of the instance `compile` would produce, without building it.
/// Counts every input edge, as if all inputs were TRUE.
pub fn instance_size(c: &Circuit, params: &ReductionParams) -> Result<InstanceSize, CompileError> {
    let all_true = Assignment::from_bits(c, &vec![true; c.inputs().count()]);
    let report = validate(c);
    if !report.all() {
        return Err(CompileError::Invalid(report.problems.join("; ")));
    }
    Ok(Layout::new(c, &all_true, params.resolve_k(c)?).size())
}

/// A compiled instance with its placement table.
#[derive(Clone, Debug)]
pub struct Compiled {
    pub instance: LheInstance,
    pub placements: PlacementTable,
    pub k: usize,
}

fn build_placements(layout: &Layout<'_>) -> Vec<GadgetPlacement> {
    let mut offsets: HashMap<Owner, u64> = HashMap::new();
    let mut next = 0u64;
    let mut placements = Vec::new();
    for o in layout.owners() {
        offsets.insert(o, next);
        next += layout.fresh_count(o);
        placements.push(layout.placement(o, &mut |q| offsets[&q]));
    }
    placements
}

/// The placement table of `compile(c, a, params)` without building the graph.
pub fn placement_table(c: &Circuit, a: &Assignment, params: &ReductionParams) -> Result<PlacementTable, CompileError> {
    let layout = prepare(c, a, params)?;
    Ok(PlacementTable::new(c, build_placements(&layout)))
}

pub fn compile(c: &Circuit, a: &Assignment, params: &ReductionParams) -> Result<Compiled, CompileError> {
    let layout = prepare(c, a, params)?;
    let size = layout.size();
    let placements = build_placements(&layout);

    // Edges of each template once, from the materialized gadget graph.
    let mut template_edges: HashMap<_, Vec<(u32, u32)>> = HashMap::new();
    let mut colors = Vec::with_capacity(size.vertices as usize);
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(size.edges as usize);
    let mut word = Vec::with_capacity(size.word as usize);
    for p in &placements {
        let t = p.template;
        let built = template_edges.entry(t).or_insert_with(|| {
            let g = t.build().graph;
            g.edges().map(|(u, v)| (u.0 + 1, v.0 + 1)).collect()
        });
        for l in p.first_fresh..=t.vertex_count() as u32 {
            colors.push(t.color(l));
        }
        for &(x, y) in built.iter() {
            edges.push((p.local_to_global(x).0, p.local_to_global(y).0));
        }
        if layout.true_input(p.owner) {
            let (x, y) = t.inputs()[0];
            edges.push((p.local_to_global(x).0, p.local_to_global(y).0));
        }
        word.extend(t.word().map(|l| p.local_to_global(l)));
    }
    debug_assert_eq!(colors.len() as u64, size.vertices);
    for p in &placements {
        for l in 1..p.first_fresh {
            debug_assert_eq!(colors[p.local_to_global(l).index()], Color::Minus);
        }
    }
    let graph = BicoloredGraph::from_edges(colors, edges)?;
    assert_eq!(graph.edge_count() as u64, size.edges, "placements share no edges");

    let (o, (x, y)) = layout.target_labels();
    let table = PlacementTable::new(c, placements);
    let tp = table.get(o).expect("target placement exists");
    let (s, t) = (tp.local_to_global(x), tp.local_to_global(y));
    let instance = LheInstance::new(graph, s, t, UpdateWord(word))?;
    Ok(Compiled {
        instance,
        placements: table,
        k: layout.dup.k,
    })
}

/// `solve_lhe(compile(c, a))` with the default parameters.
pub fn end_to_end(c: &Circuit, a: &Assignment) -> Result<bool, CompileError> {
    end_to_end_with(c, a, &ReductionParams::default())
}

pub fn end_to_end_with(c: &Circuit, a: &Assignment, params: &ReductionParams) -> Result<bool, CompileError> {
    let compiled = compile(c, a, params)?;
    Ok(solve_lhe(&compiled.instance)?)
}

/// Target pair of a compiled instance, for callers that only hold ids.
pub fn target(compiled: &Compiled) -> (VertexId, VertexId) {
    (compiled.instance.s, compiled.instance.t)
}
