use std::fmt::Write;

use crate::circuit::Circuit;
use crate::graph::VertexId;

use super::layout::{GadgetPlacement, Owner};

pub const SIDECAR_MAGIC: &str = "lhe-placements 1";

/// All placements of a compiled instance, in schedule order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacementTable {
    placements: Vec<GadgetPlacement>,
    names: Vec<String>,
}

impl PlacementTable {
    pub(crate) fn new(c: &Circuit, placements: Vec<GadgetPlacement>) -> Self {
        PlacementTable {
            placements,
            names: c.gates().iter().map(|g| g.name.clone()).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &GadgetPlacement> {
        self.placements.iter()
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    pub fn get(&self, o: Owner) -> Option<&GadgetPlacement> {
        self.placements.iter().find(|p| p.owner == o)
    }

    pub fn gate_name(&self, o: Owner) -> &str {
        &self.names[o.gate.index()]
    }

    /// The placement that created `v` and its local label there.
    pub fn decode(&self, v: VertexId) -> Option<(Owner, u32)> {
        let i = self.placements.partition_point(|p| p.offset <= v.0 as u64);
        let p = self.placements.get(i.checked_sub(1)?)?;
        p.fresh_label(v).map(|l| (p.owner, l))
    }

    /// Every `(placement, label)` that maps to `v`: the creator first, then
    /// any consumer whose input slot was merged onto it.
    pub fn occurrences(&self, v: VertexId) -> Vec<(Owner, u32)> {
        let mut out: Vec<(Owner, u32)> = self.decode(v).into_iter().collect();
        for p in &self.placements {
            for (i, &m) in p.merged.iter().enumerate() {
                if m == v {
                    out.push((p.owner, i as u32 + 1));
                }
            }
        }
        out
    }

    /// Text form: one `<global id> <gate> <gate|dup> <label>` line per
    /// (vertex, placement) pair, sorted by global id then schedule order.
    pub fn to_text(&self) -> String {
        let mut rows: Vec<(u32, usize, u32)> = Vec::new();
        for (i, p) in self.placements.iter().enumerate() {
            for l in 1..=p.template.vertex_count() as u32 {
                rows.push((p.local_to_global(l).0, i, l));
            }
        }
        rows.sort_unstable();
        let mut s = String::with_capacity(rows.len() * 16);
        s.push_str(SIDECAR_MAGIC);
        s.push('\n');
        for (v, i, l) in rows {
            let o = self.placements[i].owner;
            writeln!(s, "{v} {} {} {l}", self.gate_name(o), o.role).unwrap();
        }
        s
    }
}
