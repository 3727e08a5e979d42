//! Compiles a small circuit for every assignment and compares the decided
//! instance with direct evaluation.

use homophily::circuit::{evaluate, parse_circuit, Assignment};
use homophily::compiler::{compile, instance_size, simulate_with_robustness, ReductionParams};

const NETLIST: &str = "\
input a
input b
input c
input d
l = AND a b
r = OR c d
o = OR l r
output o
";

fn main() {
    let (c, _) = parse_circuit(NETLIST).expect("valid netlist");
    let params = ReductionParams::default();
    println!("{}", instance_size(&c, &params).expect("compilable"));
    for a in Assignment::all(&c) {
        let compiled = compile(&c, &a, &params).expect("compilable");
        let (_, r) = simulate_with_robustness(&compiled);
        let bits: String = c
            .inputs()
            .map(|g| if a.get(g) == Some(true) { '1' } else { '0' })
            .collect();
        println!(
            "abcd={bits} circuit={} instance={} max accumulated={}",
            evaluate(&c, &a).expect("total"),
            r.answer,
            r.max_accumulated()
        );
    }
}
