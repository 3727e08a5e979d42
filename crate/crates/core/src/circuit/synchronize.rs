use std::collections::HashSet;

use super::{validate, Circuit, CircuitError, Gate, GateId, GateKind};

/// Inserts BUF chains on every wire that skips levels, so each gate reads
/// only from the level directly below. Returns the circuit unchanged when
/// it is already synchronous. Levels of the original gates are preserved.
pub fn synchronize(c: &Circuit) -> Result<Circuit, CircuitError> {
    let report = validate(c);
    if !(report.acyclic && report.fan_in && report.fan_out) {
        return Err(CircuitError::Invalid(report.problems.join("; ")));
    }
    if report.synchronous {
        return Ok(c.clone());
    }
    let mut taken: HashSet<String> = c.gates().iter().map(|g| g.name.clone()).collect();
    let mut fresh = |base: String| {
        let mut name = base.clone();
        let mut n = 1;
        while !taken.insert(name.clone()) {
            n += 1;
            name = format!("{base}_{n}");
        }
        name
    };
    let mut gates: Vec<Gate> = Vec::with_capacity(c.len());
    let mut new_id = vec![GateId(0); c.len()];
    for (i, g) in c.gates().iter().enumerate() {
        let mut preds = Vec::with_capacity(g.preds.len());
        for (pos, &p) in g.preds.iter().enumerate() {
            let mut src = new_id[p.index()];
            let src_level = c.gate(p).level;
            for lvl in src_level + 1..g.level {
                let name = fresh(format!("{}_buf{}_{}{}", c.gate(p).name, lvl, g.name, pos));
                gates.push(Gate {
                    name,
                    kind: GateKind::Buffer,
                    preds: vec![src],
                    level: lvl,
                });
                src = GateId(gates.len() as u32 - 1);
            }
            preds.push(src);
        }
        gates.push(Gate {
            name: g.name.clone(),
            kind: g.kind,
            preds,
            level: g.level,
        });
        new_id[i] = GateId(gates.len() as u32 - 1);
    }
    Circuit::from_gates(gates, new_id[c.output().index()])
}
