use crate::circuit::GateId;
use crate::gadgets::GadgetKind;
use crate::graph::{BicoloredGraph, Color, Scratch, VertexId};

use super::layout::{GadgetPlacement, Role};
use super::{Compiled, PlacementTable};

/// One duplicator's firing. `accumulated` counts the `-1` neighbors its
/// vertex 1 has picked up from elsewhere by the time it fires, i.e. outside
/// its own gadget's initial neighborhood and its input edge. `isolation` is
/// taken as soon as its own word segment has run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DuplicatorFiring {
    pub gate: GateId,
    pub accumulated: usize,
    pub k: usize,
    pub isolation: IsolationReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RobustnessReport {
    pub answer: bool,
    pub firings: Vec<DuplicatorFiring>,
}

impl RobustnessReport {
    pub fn max_accumulated(&self) -> usize {
        self.firings.iter().map(|f| f.accumulated).max().unwrap_or(0)
    }

    /// Every firing saw strictly fewer than k accumulated `-1` neighbors.
    pub fn within_k(&self) -> bool {
        self.firings.iter().all(|f| f.accumulated < f.k)
    }

    /// Every duplicator was isolated right after its own segment.
    pub fn isolated_on_firing(&self) -> bool {
        self.firings.iter().all(|f| f.isolation.all())
    }
}

/// Runs the compiled word placement by placement, measuring each
/// duplicator's vertex 1 just before its first update and its outputs
/// right after its last. Returns the final graph and the measurements.
pub fn simulate_with_robustness(compiled: &Compiled) -> (BicoloredGraph, RobustnessReport) {
    let inst = &compiled.instance;
    let mut g = inst.graph.clone();
    let mut scratch = Scratch::default();
    let mut firings = Vec::new();
    let mut pos = 0;
    for p in compiled.placements.iter() {
        let t = p.template;
        let accumulated = (t.kind == GadgetKind::Duplicator).then(|| {
            let one = p.local_to_global(1);
            let (_, partner) = t.inputs()[0];
            let own: Vec<u32> = t
                .neighbors(1)
                .into_iter()
                .chain([partner])
                .map(|l| p.local_to_global(l).0)
                .collect();
            g.neighbors(one)
                .iter()
                .filter(|&&n| g.color(VertexId(n)) == Color::Minus && !own.contains(&n))
                .count()
        });
        for _ in 0..t.word_len() {
            g.phi_with(inst.word.0[pos], &mut scratch);
            pos += 1;
        }
        if let Some(accumulated) = accumulated {
            firings.push(DuplicatorFiring {
                gate: p.owner.gate,
                accumulated,
                k: t.k,
                isolation: isolation_of(&g, &compiled.placements, p),
            });
        }
    }
    debug_assert_eq!(pos, inst.word.len());
    let answer = g.has_edge(inst.s, inst.t);
    (g, RobustnessReport { answer, firings })
}

/// Duplicator output properties: the two output pairs share no edge, and
/// no output vertex touches a flower.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsolationReport {
    /// No edge joins the two output pairs.
    pub outputs_separated: bool,
    /// No output vertex touches a flower, other than the flower of a
    /// duplicator whose input slot is that very vertex.
    pub flower_detached: bool,
}

impl IsolationReport {
    pub fn all(&self) -> bool {
        self.outputs_separated && self.flower_detached
    }
}

fn isolation_of(g: &BicoloredGraph, table: &PlacementTable, p: &GadgetPlacement) -> IsolationReport {
    let outs = p.template.outputs();
    let pair = |i: usize| [p.local_to_global(outs[i].0), p.local_to_global(outs[i].1)];
    let outputs_separated = pair(0).iter().all(|&a| pair(1).iter().all(|&b| !g.has_edge(a, b)));
    let flower_detached = pair(0).into_iter().chain(pair(1)).all(|v| {
        g.neighbors(v).iter().all(|&n| match table.decode(VertexId(n)) {
            Some((o, l)) => {
                let q = table.get(o).expect("decoded owner");
                // a buffer's own input slot sits on its producer's output
                !q.template.is_flower(l) || q.merged.contains(&v)
            }
            None => true,
        })
    });
    IsolationReport {
        outputs_separated,
        flower_detached,
    }
}

/// The duplicator properties checked for every duplicator at once on
/// `final_graph`, typically the graph after the whole word.
pub fn check_isolation(final_graph: &BicoloredGraph, compiled: &Compiled) -> IsolationReport {
    let table = &compiled.placements;
    let mut out = IsolationReport {
        outputs_separated: true,
        flower_detached: true,
    };
    for p in table.iter().filter(|p| p.owner.role == Role::Duplicator) {
        let r = isolation_of(final_graph, table, p);
        out.outputs_separated &= r.outputs_separated;
        out.flower_detached &= r.flower_detached;
    }
    out
}
