//! One PASS/FAIL line per acceptance criterion. Failing criteria are
//! reported, not raised, so the rest of the suite still runs.

#![allow(clippy::needless_range_loop)]

mod common;

use std::io;
use std::time::{Duration, Instant};

use common::{corpus, oracle_phi, vid, Dense};
use homophily::circuit::random::random_synchronous;
use homophily::circuit::{evaluate, parse_circuit, print_netlist, Assignment, Circuit};
use homophily::compiler::{
    compile, compile_streaming, instance_size, simulate_with_robustness, CompileError, ReductionParams,
};
use homophily::flower::{run_flower_lemma, FlowerSpec};
use homophily::gadgets::{build_and, build_duplicator, build_or, verify_gadget};
use homophily::{apply_phi, deserialize, graph_equal, serialize, serialize_document, solve_lhe, BicoloredGraph, Color};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest instance the reduction runs are allowed to build here.
const EDGE_BUDGET: u64 = 50_000_000;

fn report(id: u32, title: &str, ok: bool, detail: &str) -> bool {
    println!("{} {id} {title}: {detail}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn gadget_tables() -> bool {
    let t = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for (name, g) in [("or", build_or()), ("and", build_and())] {
        let r = verify_gadget(&g, 0).unwrap();
        let f: fn(bool, bool) -> bool = if name == "or" { |a, b| a || b } else { |a, b| a && b };
        let good = r.passes()
            && r.rows
                .iter()
                .all(|row| row.outputs == vec![f(row.inputs[0], row.inputs[1])]);
        ok &= good;
        notes.push(format!("{name} {}", if good { "ok" } else { "wrong" }));
    }
    for k in [1, 5, 40] {
        let r = verify_gadget(&build_duplicator(k).unwrap(), 0).unwrap();
        let good = r.passes() && r.rows.iter().all(|row| row.outputs == vec![row.inputs[0]; 2]);
        ok &= good;
        notes.push(format!("dup k={k} {}", if good { "ok" } else { "wrong" }));
    }
    let el = t.elapsed();
    ok &= el < Duration::from_secs(1);
    report(
        1,
        "gadget truth tables",
        ok,
        &format!("{} in {}", notes.join(", "), secs(el)),
    )
}

fn flower_suite() -> bool {
    let t = Instant::now();
    let (mut cases, mut bad) = (0, Vec::new());
    for n in 1..=12 {
        for m in n..=n + 4 {
            for k in 1..=n {
                let (_, r) = run_flower_lemma(FlowerSpec::new(n, m).unwrap(), k).unwrap();
                cases += 1;
                if !r.all() {
                    bad.push(format!("({n},{m},{k})"));
                }
            }
        }
    }
    let el = t.elapsed();
    let ok = bad.is_empty() && el < Duration::from_secs(10);
    report(
        2,
        "flower lemma suite",
        ok,
        &format!("{cases} cases, {} failing {:?}, {}", bad.len(), bad, secs(el)),
    )
}

fn phi_oracle() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut samples, mut mismatches) = (0, 0);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=6);
        let colors = (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        let mut adj = vec![vec![false; n]; n];
        for u in 0..n {
            for v in u + 1..n {
                let e = rng.gen_bool(0.5);
                adj[u][v] = e;
                adj[v][u] = e;
            }
        }
        let d = Dense { colors, adj };
        let v = rng.gen_range(0..n);
        samples += 1;
        if Dense::of(&apply_phi(&d.to_graph(), vid(v)).unwrap()) != oracle_phi(&d, v) {
            mismatches += 1;
        }
    }
    let mut exhaustive = 0;
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for emask in 0u32..1 << pairs.len() {
            for cmask in 0u32..1 << n {
                let colors = (0..n).map(|i| if cmask >> i & 1 == 1 { 1 } else { -1 }).collect();
                let mut adj = vec![vec![false; n]; n];
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    adj[u][v] = emask >> i & 1 == 1;
                    adj[v][u] = adj[u][v];
                }
                let d = Dense { colors, adj };
                for v in 0..n {
                    exhaustive += 1;
                    if Dense::of(&apply_phi(&d.to_graph(), vid(v)).unwrap()) != oracle_phi(&d, v) {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    report(
        3,
        "transformation vs brute-force oracle",
        mismatches == 0,
        &format!("{samples} random + {exhaustive} exhaustive cases, {mismatches} mismatches"),
    )
}

/// Outcome of the reduction runs shared by criteria 4 and 5.
#[derive(Default)]
struct Runs {
    total: usize,
    agree: usize,
    disagree: usize,
    skipped_size: usize,
    skipped_time: usize,
    firings: usize,
    firings_over: usize,
    max_accumulated: usize,
    max_edges: u64,
    elapsed: Duration,
}

impl Runs {
    fn run(&mut self, c: &Circuit, a: &Assignment, start: Instant, deadline: Duration) {
        self.total += 1;
        let params = ReductionParams::default();
        let size = instance_size(c, &params).unwrap();
        if size.edges > EDGE_BUDGET {
            self.skipped_size += 1;
            return;
        }
        if start.elapsed() > deadline {
            self.skipped_time += 1;
            return;
        }
        let compiled = compile(c, a, &params).unwrap();
        let (_, r) = simulate_with_robustness(&compiled);
        self.max_edges = self.max_edges.max(size.edges);
        if r.answer == evaluate(c, a).unwrap() {
            self.agree += 1;
        } else {
            self.disagree += 1;
        }
        self.firings += r.firings.len();
        self.firings_over += r.firings.iter().filter(|f| f.accumulated >= f.k).count();
        self.max_accumulated = self.max_accumulated.max(r.max_accumulated());
    }
}

fn reduction_runs() -> Runs {
    let start = Instant::now();
    let deadline = Duration::from_secs(60);
    let mut runs = Runs::default();
    for (_, c) in corpus() {
        for a in Assignment::all(&c) {
            runs.run(&c, &a, start, deadline);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..50 {
        let size = rng.gen_range(3..=40);
        let c = random_synchronous(&mut rng, size, (size / 2).clamp(2, 8));
        for _ in 0..8 {
            let bits: Vec<bool> = c.inputs().map(|_| rng.gen()).collect();
            runs.run(&c, &Assignment::from_bits(&c, &bits), start, deadline);
        }
    }
    runs.elapsed = start.elapsed();
    runs
}

fn reduction_correct(r: &Runs) -> bool {
    let ok = r.agree == r.total && r.elapsed < Duration::from_secs(60);
    report(
        4,
        "compiled instances decide the circuit",
        ok,
        &format!(
            "{}/{} agree, {} wrong, {} over the {EDGE_BUDGET}-edge budget, {} past the time limit, largest run {} edges, {}",
            r.agree,
            r.total,
            r.disagree,
            r.skipped_size,
            r.skipped_time,
            r.max_edges,
            secs(r.elapsed)
        ),
    )
}

fn robustness(r: &Runs) -> bool {
    let measured = r.firings_over == 0 && r.skipped_size + r.skipped_time == 0;
    let k = 40;
    let dup = build_duplicator(k).unwrap();
    let failing: Vec<usize> = (0..k).filter(|&e| !verify_gadget(&dup, e).unwrap().passes()).collect();
    let ok = measured && failing.is_empty();
    report(
        5,
        "accumulated neighbors stay below k",
        ok,
        &format!(
            "{} firings measured, {} at or above k, max accumulated {}, {} runs unmeasured; dup k=40 fails for e in {:?}",
            r.firings,
            r.firings_over,
            r.max_accumulated,
            r.skipped_size + r.skipped_time,
            failing
        ),
    )
}

fn streaming() -> bool {
    let mut ok = true;
    let mut checked = 0;
    for (name, c) in corpus() {
        for a in Assignment::all(&c) {
            let p = ReductionParams::default();
            let built = serialize_document(&compile(&c, &a, &p).unwrap().instance.into());
            let streamed = compile_streaming(&c, &a, &p, Vec::new()).unwrap();
            if built.as_bytes() != streamed.as_slice() {
                ok = false;
                println!("  stream mismatch on {name}");
            }
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    let big = random_synchronous(&mut rng, 1000, 40);
    let bits: Vec<bool> = big.inputs().map(|_| rng.gen()).collect();
    let a = Assignment::from_bits(&big, &bits);
    let p = ReductionParams::default();
    let t = Instant::now();
    let big_note = match compile(&big, &a, &p) {
        Ok(compiled) => {
            let answer = solve_lhe(&compiled.instance).unwrap();
            let built = serialize_document(&compiled.instance.into());
            let streamed = compile_streaming(&big, &a, &p, Vec::new()).unwrap();
            let el = t.elapsed();
            let good = answer == evaluate(&big, &a).unwrap() && built.as_bytes() == streamed.as_slice();
            ok &= good && el < Duration::from_secs(30);
            format!(
                "{}-gate circuit {} in {}",
                big.len(),
                if good { "identical" } else { "differs" },
                secs(el)
            )
        }
        Err(CompileError::TooLarge(size)) => {
            ok = false;
            format!(
                "{}-gate circuit not compilable at the sufficient bound: {size}",
                big.len()
            )
        }
        Err(e) => {
            ok = false;
            format!("{}-gate circuit: {e}", big.len())
        }
    };
    report(
        6,
        "streaming equals in-memory compile",
        ok,
        &format!("{checked} corpus instances; {big_note}"),
    )
}

fn streaming_fixed_k_note() {
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    let big = random_synchronous(&mut rng, 1000, 40);
    let bits: Vec<bool> = big.inputs().map(|_| rng.gen()).collect();
    let a = Assignment::from_bits(&big, &bits);
    let p = ReductionParams::fixed(12);
    let t = Instant::now();
    let compiled = compile(&big, &a, &p).unwrap();
    let answer = solve_lhe(&compiled.instance).unwrap();
    let el = t.elapsed();
    let built = serialize_document(&compiled.instance.into());
    let streamed = compile_streaming(&big, &a, &p, Vec::new()).unwrap();
    let _ = compile_streaming(&big, &a, &p, io::sink()).unwrap();
    println!(
        "  note: same circuit at k=12: streaming {}, compile+solve {}, answer {} vs circuit {}",
        if built.as_bytes() == streamed.as_slice() {
            "identical"
        } else {
            "differs"
        },
        secs(el),
        answer,
        evaluate(&big, &a).unwrap()
    );
}

fn determinism() -> bool {
    let mut problems = Vec::new();
    for (name, c) in corpus() {
        let a = Assignment::from_bits(&c, &vec![true; c.inputs().count()]);
        let p = ReductionParams::default();
        let one = serialize_document(&compile(&c, &a, &p).unwrap().instance.into());
        let two = serialize_document(&compile(&c, &a, &p).unwrap().instance.into());
        if one != two {
            problems.push(format!("{name} not deterministic"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut graphs = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..30);
        let colors = (0..n)
            .map(|_| if rng.gen() { Color::Plus } else { Color::Minus })
            .collect();
        let edges: Vec<(u32, u32)> = (0..rng.gen_range(0..3 * n))
            .map(|_| (rng.gen_range(0..n as u32), rng.gen_range(0..n as u32)))
            .filter(|(a, b)| a != b)
            .collect();
        let g = BicoloredGraph::from_edges(colors, edges).unwrap();
        graphs += 1;
        if !graph_equal(&deserialize(&serialize(&g)).unwrap(), &g) {
            problems.push("graph round trip".into());
        }
    }
    let mut netlists = 0;
    for _ in 0..200 {
        let gates = rng.gen_range(3..60);
        let c = random_synchronous(&mut rng, gates, 8);
        let bits: Vec<bool> = c.inputs().map(|_| rng.gen()).collect();
        let a = Assignment::from_bits(&c, &bits);
        let text = print_netlist(&c, Some(&a));
        netlists += 1;
        match parse_circuit(&text) {
            Ok((c2, a2)) if c2 == c && a2 == a && print_netlist(&c2, Some(&a2)) == text => {}
            _ => problems.push("netlist round trip".into()),
        }
    }
    report(
        7,
        "determinism and round trips",
        problems.is_empty(),
        &format!(
            "{graphs} graphs, {netlists} netlists, {} problems {:?}",
            problems.len(),
            problems
        ),
    )
}

fn main() {
    let runs = reduction_runs();
    let results = [
        gadget_tables(),
        flower_suite(),
        phi_oracle(),
        reduction_correct(&runs),
        robustness(&runs),
        streaming(),
        determinism(),
    ];
    streaming_fixed_k_note();
    let passed = results.iter().filter(|&&x| x).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
}
