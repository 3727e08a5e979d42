//! Monotone Boolean circuits with fan-in and fan-out at most two.
//!
//! Gates are stored in topological order and a [`GateId`] is an index into
//! that order. Levels are longest-path distances from the inputs. A
//! circuit is synchronous when every gate's predecessors sit exactly one
//! level below it.

mod netlist;
pub mod random;
mod synchronize;
mod validate;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

pub use netlist::{parse_assignment, parse_circuit, parse_netlist, print_netlist, NetlistError};
pub use synchronize::synchronize;
pub use validate::{validate, ValidationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GateId(pub u32);

impl GateId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for GateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Input,
    And,
    Or,
    /// Identity gate. Only [`synchronize`] introduces these.
    Buffer,
}

impl GateKind {
    pub fn arity(self) -> usize {
        match self {
            GateKind::Input => 0,
            GateKind::Buffer => 1,
            GateKind::And | GateKind::Or => 2,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            GateKind::Input => "input",
            GateKind::And => "AND",
            GateKind::Or => "OR",
            GateKind::Buffer => "BUF",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gate {
    pub name: String,
    pub kind: GateKind,
    pub preds: Vec<GateId>,
    pub level: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("gate `{gate}` ({kind:?}) takes {expected} operand(s), got {got}")]
    Arity {
        gate: String,
        kind: GateKind,
        expected: usize,
        got: usize,
    },
    #[error("gate `{0}` refers to an unknown gate")]
    UnknownRef(String),
    #[error("duplicate gate name `{0}`")]
    DuplicateName(String),
    #[error("circuit has a cycle through `{0}`")]
    Cycle(String),
    #[error("output gate id {0} out of range")]
    BadOutput(u32),
    #[error("input `{0}` has no assigned value")]
    Unassigned(String),
    #[error("invalid circuit: {0}")]
    Invalid(String),
}

/// Gate list (topologically ordered) plus the designated output.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit {
    gates: Vec<Gate>,
    output: GateId,
}

/// A gate before topological sorting: name, kind and operand names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateSpec {
    pub name: String,
    pub kind: GateKind,
    pub operands: Vec<String>,
}

impl GateSpec {
    pub fn new(name: impl Into<String>, kind: GateKind, operands: &[&str]) -> Self {
        GateSpec {
            name: name.into(),
            kind,
            operands: operands.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl Circuit {
    /// Builds a circuit from gate specs in any order. Operands may refer to
    /// gates defined later; ids follow a stable topological order (Kahn,
    /// ties broken by declaration order).
    pub fn from_specs(specs: Vec<GateSpec>, output: &str) -> Result<Circuit, CircuitError> {
        let mut index = HashMap::with_capacity(specs.len());
        for (i, s) in specs.iter().enumerate() {
            if index.insert(s.name.clone(), i).is_some() {
                return Err(CircuitError::DuplicateName(s.name.clone()));
            }
            if s.operands.len() != s.kind.arity() {
                return Err(CircuitError::Arity {
                    gate: s.name.clone(),
                    kind: s.kind,
                    expected: s.kind.arity(),
                    got: s.operands.len(),
                });
            }
        }
        let mut operands = Vec::with_capacity(specs.len());
        for s in &specs {
            let ops = s
                .operands
                .iter()
                .map(|o| {
                    index
                        .get(o)
                        .copied()
                        .ok_or_else(|| CircuitError::UnknownRef(s.name.clone()))
                })
                .collect::<Result<Vec<usize>, _>>()?;
            operands.push(ops);
        }
        let out_idx = *index
            .get(output)
            .ok_or_else(|| CircuitError::UnknownRef(output.to_string()))?;

        // Kahn's algorithm; pending[i] counts unresolved operand uses.
        let mut consumers = vec![Vec::new(); specs.len()];
        let mut pending = vec![0usize; specs.len()];
        for (i, ops) in operands.iter().enumerate() {
            for &o in ops {
                consumers[o].push(i);
                pending[i] += 1;
            }
        }
        let mut ready: std::collections::BTreeSet<usize> = (0..specs.len()).filter(|&i| pending[i] == 0).collect();
        let mut order = Vec::with_capacity(specs.len());
        while let Some(i) = ready.pop_first() {
            order.push(i);
            for &c in &consumers[i] {
                pending[c] -= 1;
                if pending[c] == 0 {
                    ready.insert(c);
                }
            }
        }
        if order.len() != specs.len() {
            let stuck = (0..specs.len()).find(|&i| pending[i] > 0).unwrap();
            return Err(CircuitError::Cycle(specs[stuck].name.clone()));
        }
        let mut new_id = vec![0u32; specs.len()];
        for (pos, &i) in order.iter().enumerate() {
            new_id[i] = pos as u32;
        }
        let mut gates: Vec<Gate> = Vec::with_capacity(specs.len());
        for &i in &order {
            let preds: Vec<GateId> = operands[i].iter().map(|&o| GateId(new_id[o])).collect();
            let level = preds.iter().map(|p| gates[p.index()].level + 1).max().unwrap_or(0);
            gates.push(Gate {
                name: specs[i].name.clone(),
                kind: specs[i].kind,
                preds,
                level,
            });
        }
        Ok(Circuit {
            gates,
            output: GateId(new_id[out_idx]),
        })
    }

    /// Builds from already-ordered gates (preds must point backwards).
    /// Levels are recomputed.
    pub fn from_gates(mut gates: Vec<Gate>, output: GateId) -> Result<Circuit, CircuitError> {
        if output.index() >= gates.len() {
            return Err(CircuitError::BadOutput(output.0));
        }
        let mut seen = std::collections::HashSet::new();
        for i in 0..gates.len() {
            let g = &gates[i];
            if !seen.insert(g.name.clone()) {
                return Err(CircuitError::DuplicateName(g.name.clone()));
            }
            if g.preds.len() != g.kind.arity() {
                return Err(CircuitError::Arity {
                    gate: g.name.clone(),
                    kind: g.kind,
                    expected: g.kind.arity(),
                    got: g.preds.len(),
                });
            }
            if g.preds.iter().any(|p| p.index() >= i) {
                return Err(CircuitError::Cycle(g.name.clone()));
            }
            let level = g.preds.iter().map(|p| gates[p.index()].level + 1).max().unwrap_or(0);
            gates[i].level = level;
        }
        Ok(Circuit { gates, output })
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn gate(&self, id: GateId) -> &Gate {
        &self.gates[id.index()]
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = GateId> {
        (0..self.gates.len() as u32).map(GateId)
    }

    pub fn output(&self) -> GateId {
        self.output
    }

    pub fn find(&self, name: &str) -> Option<GateId> {
        self.gates.iter().position(|g| g.name == name).map(|i| GateId(i as u32))
    }

    pub fn count(&self, kind: GateKind) -> usize {
        self.gates.iter().filter(|g| g.kind == kind).count()
    }

    pub fn n_and(&self) -> usize {
        self.count(GateKind::And)
    }

    pub fn n_or(&self) -> usize {
        self.count(GateKind::Or)
    }

    pub fn inputs(&self) -> impl Iterator<Item = GateId> + '_ {
        self.ids().filter(|&g| self.gate(g).kind == GateKind::Input)
    }

    pub fn depth(&self) -> usize {
        self.gates.iter().map(|g| g.level).max().unwrap_or(0)
    }

    /// Number of operand uses of each gate.
    pub fn fan_out(&self) -> Vec<usize> {
        let mut f = vec![0; self.gates.len()];
        for g in &self.gates {
            for p in &g.preds {
                f[p.index()] += 1;
            }
        }
        f
    }

    /// Operand uses of `producer` as `(consumer, operand position)`, sorted.
    pub fn uses_of(&self, producer: GateId) -> impl Iterator<Item = (GateId, usize)> + '_ {
        self.ids().flat_map(move |c| {
            self.gate(c)
                .preds
                .iter()
                .enumerate()
                .filter(move |(_, &p)| p == producer)
                .map(move |(pos, _)| (c, pos))
        })
    }
}

/// Values of the input gates, indexed by gate id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Assignment {
    values: BTreeMap<GateId, bool>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, g: GateId, v: bool) {
        self.values.insert(g, v);
    }

    pub fn get(&self, g: GateId) -> Option<bool> {
        self.values.get(&g).copied()
    }

    /// Values in input order (ascending gate id) of `c`.
    pub fn from_bits(c: &Circuit, bits: &[bool]) -> Assignment {
        let mut a = Assignment::new();
        for (g, &b) in c.inputs().zip(bits) {
            a.set(g, b);
        }
        a
    }

    /// Every assignment of the inputs of `c`, first input most significant.
    pub fn all(c: &Circuit) -> impl Iterator<Item = Assignment> + '_ {
        let n = c.inputs().count();
        assert!(n < 32, "too many inputs to enumerate");
        (0..1u32 << n).map(move |mask| {
            let bits: Vec<bool> = (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect();
            Assignment::from_bits(c, &bits)
        })
    }

    pub fn check_total(&self, c: &Circuit) -> Result<(), CircuitError> {
        for g in c.inputs() {
            if self.get(g).is_none() {
                return Err(CircuitError::Unassigned(c.gate(g).name.clone()));
            }
        }
        Ok(())
    }
}

/// Value of every gate under `a`.
pub fn evaluate_all(c: &Circuit, a: &Assignment) -> Result<Vec<bool>, CircuitError> {
    a.check_total(c)?;
    let mut val: Vec<bool> = Vec::with_capacity(c.len());
    for (i, g) in c.gates().iter().enumerate() {
        let v = match g.kind {
            GateKind::Input => a.get(GateId(i as u32)).unwrap(),
            GateKind::And => val[g.preds[0].index()] && val[g.preds[1].index()],
            GateKind::Or => val[g.preds[0].index()] || val[g.preds[1].index()],
            GateKind::Buffer => val[g.preds[0].index()],
        };
        val.push(v);
    }
    Ok(val)
}

/// Output value of `c` under `a`.
pub fn evaluate(c: &Circuit, a: &Assignment) -> Result<bool, CircuitError> {
    Ok(evaluate_all(c, a)?[c.output().index()])
}
