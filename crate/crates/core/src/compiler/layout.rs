//! Where every gadget lives in the compiled graph.
//!
//! Placements are ordered by `(level, role, gate id)` with logic gadgets
//! before duplicators on the same level. Global ids are handed out in that
//! order, one contiguous block per placement holding its *fresh* labels.
//! Input-slot labels are not fresh: they reuse the producer's output
//! vertices.
//!
//! Everything here is computed from the circuit on demand, so the streaming
//! compiler can run with a handful of counters.

use std::fmt;

use crate::circuit::{Assignment, Circuit, GateId, GateKind};
use crate::gadgets::{GadgetKind, Template};
use crate::graph::{Color, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    /// The AND / OR gadget of a gate.
    Gate,
    /// The duplicator trailing a gate (or standing for an input / buffer).
    Duplicator,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Gate => "gate",
            Role::Duplicator => "dup",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Owner {
    pub gate: GateId,
    pub role: Role,
}

impl Owner {
    pub fn gate(gate: GateId) -> Owner {
        Owner { gate, role: Role::Gate }
    }

    pub fn dup(gate: GateId) -> Owner {
        Owner {
            gate,
            role: Role::Duplicator,
        }
    }
}

/// A placed gadget: which gate it serves, its template, and how its local
/// labels map to global ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetPlacement {
    pub owner: Owner,
    pub template: Template,
    /// Global id of the first fresh label.
    pub offset: u64,
    /// Labels below this are input-slot labels shared with a producer.
    pub first_fresh: u32,
    /// Global ids of labels `1..first_fresh`.
    pub merged: Vec<VertexId>,
}

impl GadgetPlacement {
    pub fn fresh_count(&self) -> u64 {
        self.template.vertex_count() as u64 + 1 - self.first_fresh as u64
    }

    pub fn is_fresh(&self, label: u32) -> bool {
        label >= self.first_fresh
    }

    /// Global id of a 1-based local label.
    pub fn local_to_global(&self, label: u32) -> VertexId {
        debug_assert!(label >= 1 && label as usize <= self.template.vertex_count());
        if label < self.first_fresh {
            self.merged[label as usize - 1]
        } else {
            VertexId((self.offset + (label - self.first_fresh) as u64) as u32)
        }
    }

    /// Inverse of [`local_to_global`](Self::local_to_global) on fresh labels.
    pub fn fresh_label(&self, v: VertexId) -> Option<u32> {
        let v = v.0 as u64;
        (v >= self.offset && v < self.offset + self.fresh_count()).then(|| (v - self.offset) as u32 + self.first_fresh)
    }
}

const ROLES: [Role; 2] = [Role::Gate, Role::Duplicator];

pub(crate) struct Layout<'a> {
    pub c: &'a Circuit,
    pub a: &'a Assignment,
    pub dup: Template,
}

impl<'a> Layout<'a> {
    pub fn new(c: &'a Circuit, a: &'a Assignment, k: usize) -> Layout<'a> {
        Layout {
            c,
            a,
            dup: Template::duplicator(k).expect("k >= 1"),
        }
    }

    pub fn has(&self, o: Owner) -> bool {
        let kind = self.c.gate(o.gate).kind;
        match o.role {
            Role::Gate => matches!(kind, GateKind::And | GateKind::Or),
            Role::Duplicator => match kind {
                GateKind::Input | GateKind::Buffer => true,
                GateKind::And | GateKind::Or => o.gate != self.c.output(),
            },
        }
    }

    pub fn template(&self, o: Owner) -> Template {
        match (o.role, self.c.gate(o.gate).kind) {
            (Role::Gate, GateKind::And) => Template::AND,
            (Role::Gate, _) => Template::OR,
            (Role::Duplicator, _) => self.dup,
        }
    }

    pub fn first_fresh(&self, o: Owner) -> u32 {
        match (o.role, self.c.gate(o.gate).kind) {
            (Role::Gate, _) => 5,
            (Role::Duplicator, GateKind::Input) => 1,
            (Role::Duplicator, _) => 3,
        }
    }

    pub fn fresh_count(&self, o: Owner) -> u64 {
        self.template(o).vertex_count() as u64 + 1 - self.first_fresh(o) as u64
    }

    fn key(&self, o: Owner) -> (usize, Role, GateId) {
        (self.c.gate(o.gate).level, o.role, o.gate)
    }

    /// Every placement, in schedule order.
    pub fn owners(&self) -> impl Iterator<Item = Owner> + '_ {
        (0..=self.c.depth()).flat_map(move |level| {
            ROLES.into_iter().flat_map(move |role| {
                self.c
                    .ids()
                    .filter(move |&g| self.c.gate(g).level == level)
                    .map(move |gate| Owner { gate, role })
                    .filter(move |&o| self.has(o))
            })
        })
    }

    /// First global id of `o`, by scanning all placements scheduled earlier.
    pub fn scan_offset(&self, o: Owner) -> u64 {
        let key = self.key(o);
        self.c
            .ids()
            .flat_map(|gate| ROLES.map(|role| Owner { gate, role }))
            .filter(|&q| self.has(q) && self.key(q) < key)
            .map(|q| self.fresh_count(q))
            .sum()
    }

    /// Output slot of `producer` that feeds operand `pos` of `consumer`.
    fn slot_rank(&self, producer: GateId, consumer: GateId, pos: usize) -> usize {
        self.c
            .uses_of(producer)
            .position(|u| u == (consumer, pos))
            .expect("consumer reads producer")
    }

    /// For a non-fresh label of `o`, the producer vertex it is merged with.
    pub fn source(&self, o: Owner, label: u32) -> (Owner, u32) {
        debug_assert!(label < self.first_fresh(o));
        let pick = |(x, y): (u32, u32)| if label % 2 == 1 { x } else { y };
        let g = self.c.gate(o.gate);
        match (o.role, g.kind) {
            (Role::Gate, _) => {
                let pos = ((label - 1) / 2) as usize;
                let p = g.preds[pos];
                let r = self.slot_rank(p, o.gate, pos);
                (Owner::dup(p), pick(self.dup.outputs()[r]))
            }
            (Role::Duplicator, GateKind::And | GateKind::Or) => {
                let gadget = Owner::gate(o.gate);
                (gadget, pick(self.template(gadget).outputs()[0]))
            }
            (Role::Duplicator, GateKind::Buffer) => {
                let p = g.preds[0];
                let r = self.slot_rank(p, o.gate, 0);
                (Owner::dup(p), pick(self.dup.outputs()[r]))
            }
            (Role::Duplicator, GateKind::Input) => unreachable!("input duplicators have no merged labels"),
        }
    }

    /// For a fresh label of `o`, the consumer placement and label it is
    /// merged into, if any.
    pub fn alias(&self, o: Owner, label: u32) -> Option<(Owner, u32)> {
        let t = self.template(o);
        let slot = t.outputs().iter().position(|&(x, y)| x == label || y == label)?;
        let second = t.outputs()[slot].1 == label;
        match o.role {
            Role::Gate => {
                let d = Owner::dup(o.gate);
                self.has(d).then_some((d, 1 + second as u32))
            }
            Role::Duplicator => {
                let (consumer, pos) = self.c.uses_of(o.gate).nth(slot)?;
                match self.c.gate(consumer).kind {
                    GateKind::Buffer => Some((Owner::dup(consumer), 1 + second as u32)),
                    _ => Some((Owner::gate(consumer), 1 + 2 * pos as u32 + second as u32)),
                }
            }
        }
    }

    /// Whether `o` is the duplicator of an input assigned TRUE.
    pub fn true_input(&self, o: Owner) -> bool {
        o.role == Role::Duplicator && self.c.gate(o.gate).kind == GateKind::Input && self.a.get(o.gate) == Some(true)
    }

    /// Builds the placement record of `o`; `offset_of` supplies the first
    /// global id of `o` and of its producers.
    pub fn placement(&self, o: Owner, offset_of: &mut dyn FnMut(Owner) -> u64) -> GadgetPlacement {
        let ff = self.first_fresh(o);
        let merged = (1..ff)
            .map(|l| {
                let (src, sl) = self.source(o, l);
                let s_ff = self.first_fresh(src);
                debug_assert!(sl >= s_ff, "sources are always fresh in their owner");
                VertexId((offset_of(src) + (sl - s_ff) as u64) as u32)
            })
            .collect();
        GadgetPlacement {
            owner: o,
            template: self.template(o),
            offset: offset_of(o),
            first_fresh: ff,
            merged,
        }
    }

    /// Slot vertices are -1 on both sides of every merge.
    pub fn check_merge_colors(&self) -> Result<(), String> {
        for o in self.owners() {
            let t = self.template(o);
            for l in 1..self.first_fresh(o) {
                let (src, sl) = self.source(o, l);
                if t.color(l) != Color::Minus || self.template(src).color(sl) != Color::Minus {
                    return Err(format!(
                        "slot label {l} of {} {} merges non-negative vertices",
                        self.c.gate(o.gate).name,
                        o.role
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> InstanceSize {
        let mut s = InstanceSize {
            k: self.dup.k,
            ..Default::default()
        };
        for o in self.owners() {
            let t = self.template(o);
            s.vertices += self.fresh_count(o);
            s.edges += t.edge_count() as u64 + self.true_input(o) as u64;
            s.word += t.word_len() as u64;
            match t.kind {
                GadgetKind::Duplicator => s.duplicators += 1,
                _ => s.logic_gadgets += 1,
            }
        }
        s
    }

    /// Placement and label pair of the designated target slot.
    pub fn target_labels(&self) -> (Owner, (u32, u32)) {
        let out = self.c.output();
        match self.c.gate(out).kind {
            GateKind::And | GateKind::Or => {
                let o = Owner::gate(out);
                (o, self.template(o).outputs()[0])
            }
            _ => (Owner::dup(out), self.dup.outputs()[0]),
        }
    }
}

/// Sizes of a compiled instance.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InstanceSize {
    pub k: usize,
    pub vertices: u64,
    pub edges: u64,
    pub word: u64,
    pub duplicators: u64,
    pub logic_gadgets: u64,
}

impl fmt::Display for InstanceSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={} vertices={} edges={} word={} duplicators={} logic_gadgets={}",
            self.k, self.vertices, self.edges, self.word, self.duplicators, self.logic_gadgets
        )
    }
}
