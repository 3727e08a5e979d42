use std::io::Write;

use crate::circuit::{Assignment, Circuit};
use crate::document::DocWriter;
use crate::graph::VertexId;

use super::layout::{GadgetPlacement, Owner};
use super::{prepare, CompileError, ReductionParams};

/// Writes the document of `compile(c, a, params)` to `sink` without
/// building the graph. Offsets are recomputed by scanning the circuit, and
/// neighbor lists come from the templates' arithmetic description, so the
/// working state is a few counters plus one neighbor list.
pub fn compile_streaming<W: Write>(
    c: &Circuit,
    a: &Assignment,
    params: &ReductionParams,
    sink: W,
) -> Result<W, CompileError> {
    let layout = prepare(c, a, params)?;
    let size = layout.size();
    let mut w = DocWriter::new(sink);
    let frame = |o: Owner| layout.placement(o, &mut |q| layout.scan_offset(q));

    w.vertices_header(size.vertices as usize)?;
    for o in layout.owners() {
        let p = frame(o);
        for l in p.first_fresh..=p.template.vertex_count() as u32 {
            w.vertex(p.local_to_global(l), p.template.color(l))?;
        }
    }

    w.edges_header(size.edges as usize)?;
    let mut nbrs: Vec<u32> = Vec::new();
    for o in layout.owners() {
        let p = frame(o);
        let input_edge = layout.true_input(o).then(|| p.template.inputs()[0]);
        for l in p.first_fresh..=p.template.vertex_count() as u32 {
            let u = p.local_to_global(l);
            nbrs.clear();
            push_mapped(&mut nbrs, &p, l, u);
            if let Some((o2, l2)) = layout.alias(o, l) {
                let q = frame(o2);
                debug_assert_eq!(q.local_to_global(l2), u);
                push_mapped(&mut nbrs, &q, l2, u);
            }
            if let Some((x, y)) = input_edge {
                let other = if l == x {
                    Some(y)
                } else if l == y {
                    Some(x)
                } else {
                    None
                };
                if let Some(m) = other.map(|m| p.local_to_global(m)).filter(|m| m.0 > u.0) {
                    nbrs.push(m.0);
                }
            }
            nbrs.sort_unstable();
            debug_assert!(nbrs.windows(2).all(|w| w[0] < w[1]), "placements share no edges");
            for &v in &nbrs {
                w.edge(u, VertexId(v))?;
            }
        }
    }

    for o in layout.owners() {
        let p = frame(o);
        for l in p.template.word() {
            w.word_item(p.local_to_global(l))?;
        }
    }
    w.word_end()?;

    let (o, (x, y)) = layout.target_labels();
    let p = frame(o);
    w.target(p.local_to_global(x), p.local_to_global(y))?;
    let mut out = w.into_inner();
    out.flush()?;
    Ok(out)
}

/// Neighbors of `label` inside placement `p`, as global ids above `u`.
fn push_mapped(out: &mut Vec<u32>, p: &GadgetPlacement, label: u32, u: VertexId) {
    for n in p.template.neighbors(label) {
        let v = p.local_to_global(n);
        if v.0 > u.0 {
            out.push(v.0);
        }
    }
}
