//! Seeded random circuit generators for tests and benchmarks.
//!
//! Both generators respect fan-in 2, fan-out at most 2, and leave the
//! output gate without consumers. `max_gates` counts input gates too.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Circuit, Gate, GateId, GateKind};

fn input(i: usize) -> Gate {
    Gate {
        name: format!("x{i}"),
        kind: GateKind::Input,
        preds: Vec::new(),
        level: 0,
    }
}

fn logic<R: Rng + ?Sized>(rng: &mut R, i: usize, a: GateId, b: GateId) -> Gate {
    let kind = if rng.gen_bool(0.5) { GateKind::And } else { GateKind::Or };
    Gate {
        name: format!("g{i}"),
        kind,
        preds: vec![a, b],
        level: 0,
    }
}

/// Picks two operand slots from `pool`, preferring gates nobody reads yet
/// and distinct operands. Decrements the remaining fan-out in `cap`.
fn pick_two<R: Rng + ?Sized>(rng: &mut R, pool: &[GateId], cap: &mut [u8]) -> Option<(GateId, GateId)> {
    let take = |rng: &mut R, cap: &mut [u8], avoid: Option<GateId>| {
        let unused: Vec<GateId> = pool
            .iter()
            .copied()
            .filter(|g| cap[g.index()] == 2 && Some(*g) != avoid)
            .collect();
        let open: Vec<GateId> = pool
            .iter()
            .copied()
            .filter(|g| cap[g.index()] > 0 && Some(*g) != avoid)
            .collect();
        let g = *unused.choose(rng).or_else(|| open.choose(rng))?;
        cap[g.index()] -= 1;
        Some(g)
    };
    let a = take(rng, cap, None)?;
    let b = match take(rng, cap, Some(a)) {
        Some(b) => b,
        None if cap[a.index()] > 0 => {
            cap[a.index()] -= 1;
            a
        }
        None => {
            cap[a.index()] += 1;
            return None;
        }
    };
    Some((a, b))
}

/// A layered (synchronous) circuit that uses most of its gate budget. The
/// last layer is the single output. Layers keep at least two gates until
/// the budget runs out, so the size lands close to `max_gates`.
pub fn random_synchronous<R: Rng + ?Sized>(rng: &mut R, max_gates: usize, max_inputs: usize) -> Circuit {
    assert!(max_gates >= 3 && max_inputs >= 2);
    let n_in = rng.gen_range(2..=max_inputs.min(max_gates - 1));
    let mut gates: Vec<Gate> = (0..n_in).map(input).collect();
    let mut cap = vec![2u8; max_gates];
    let mut prev: Vec<GateId> = (0..n_in as u32).map(GateId).collect();
    loop {
        let budget = max_gates - gates.len();
        let avail: usize = prev.iter().map(|g| cap[g.index()] as usize).sum();
        // leave room for the output gate after this layer
        let hi = (avail / 2).min(budget.saturating_sub(1)).min(prev.len() + 1);
        let width = if hi < 2 { 1 } else { rng.gen_range(2..=hi) };
        let mut layer = Vec::with_capacity(width);
        for _ in 0..width {
            let (a, b) = pick_two(rng, &prev, &mut cap).expect("layer width bounded by open slots");
            let id = gates.len();
            gates.push(logic(rng, id, a, b));
            layer.push(GateId(id as u32));
        }
        if width == 1 {
            let out = layer[0];
            return Circuit::from_gates(gates, out).expect("generator keeps gates ordered");
        }
        prev = layer;
    }
}

/// A circuit with arbitrary (possibly skip-level) wiring. The newest gate
/// is the output.
pub fn random_monotone<R: Rng + ?Sized>(rng: &mut R, max_gates: usize, max_inputs: usize) -> Circuit {
    assert!(max_gates >= 3 && max_inputs >= 2);
    let n_in = rng.gen_range(2..=max_inputs.min(max_gates - 1));
    let mut gates: Vec<Gate> = (0..n_in).map(input).collect();
    let mut cap = vec![2u8; max_gates];
    let n = rng.gen_range(n_in + 1..=max_gates);
    while gates.len() < n {
        let pool: Vec<GateId> = (0..gates.len() as u32).map(GateId).collect();
        match pick_two(rng, &pool, &mut cap) {
            Some((a, b)) => {
                let id = gates.len();
                gates.push(logic(rng, id, a, b));
            }
            None => break,
        }
    }
    if gates.len() == n_in {
        gates.push(logic(rng, n_in, GateId(0), GateId(1)));
    }
    let out = GateId(gates.len() as u32 - 1);
    Circuit::from_gates(gates, out).expect("generator keeps gates ordered")
}
