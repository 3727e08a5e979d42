use std::fmt;

use super::{Circuit, GateKind};

/// Structural verdicts for a circuit. Failures are listed in `problems`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// Only INPUT/AND/OR/BUF gates exist; guaranteed by the gate type.
    pub monotone: bool,
    pub synchronous: bool,
    pub fan_in: bool,
    pub fan_out: bool,
    /// Exactly one output gate, and it feeds nothing.
    pub single_output: bool,
    pub acyclic: bool,
    pub problems: Vec<String>,
}

impl ValidationReport {
    pub fn all(&self) -> bool {
        self.verdicts().iter().all(|&(_, ok)| ok)
    }

    pub fn verdicts(&self) -> [(&'static str, bool); 6] {
        [
            ("monotone", self.monotone),
            ("synchronous", self.synchronous),
            ("fan-in <= 2", self.fan_in),
            ("fan-out <= 2", self.fan_out),
            ("single output", self.single_output),
            ("acyclic", self.acyclic),
        ]
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, ok) in self.verdicts() {
            writeln!(f, "{name}: {}", if ok { "ok" } else { "FAIL" })?;
        }
        for p in &self.problems {
            writeln!(f, "  {p}")?;
        }
        Ok(())
    }
}

pub fn validate(c: &Circuit) -> ValidationReport {
    let mut problems = Vec::new();
    let mut acyclic = true;
    let mut fan_in = true;
    let mut synchronous = true;
    for (i, g) in c.gates().iter().enumerate() {
        if g.preds.len() > 2 || g.preds.len() != g.kind.arity() {
            fan_in = false;
            problems.push(format!("gate `{}` has {} operands", g.name, g.preds.len()));
        }
        for p in &g.preds {
            if p.index() >= i {
                acyclic = false;
                problems.push(format!("gate `{}` reads a later gate", g.name));
                continue;
            }
            let pl = c.gate(*p).level;
            if pl + 1 != g.level {
                synchronous = false;
                problems.push(format!(
                    "not synchronous: `{}` (level {}) reads `{}` at level {}",
                    g.name,
                    g.level,
                    c.gate(*p).name,
                    pl
                ));
            }
        }
        if g.kind == GateKind::Input && g.level != 0 {
            synchronous = false;
        }
    }
    let fo = c.fan_out();
    let mut fan_out = true;
    for (g, &n) in c.gates().iter().zip(&fo) {
        if n > 2 {
            fan_out = false;
            problems.push(format!("gate `{}` has fan-out {n}", g.name));
        }
    }
    let out = c.output();
    let single_output = out.index() < c.len() && fo[out.index()] == 0;
    if !single_output {
        problems.push(format!("output gate `{}` feeds other gates", c.gate(out).name));
    }
    ValidationReport {
        monotone: true,
        synchronous,
        fan_in,
        fan_out,
        single_output,
        acyclic,
        problems,
    }
}
