use std::fs;
use std::path::Path;

use homophily::circuit::random::{random_monotone, random_synchronous};
use homophily::circuit::{
    evaluate, evaluate_all, parse_circuit, parse_netlist, print_netlist, synchronize, validate, Assignment, Circuit,
    GateKind,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn corpus_dir(kind: &str) -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus").join(kind);
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "net"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            (
                p.file_name().unwrap().to_string_lossy().into_owned(),
                fs::read_to_string(&p).unwrap(),
            )
        })
        .collect()
}

fn header<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .next()
        .and_then(|l| l.strip_prefix(&format!("# {key}: ")))
        .unwrap()
}

fn truth_table(c: &Circuit) -> String {
    Assignment::all(c)
        .map(|a| if evaluate(c, &a).unwrap() { '1' } else { '0' })
        .collect()
}

#[test]
fn valid_netlists_parse_with_expected_truth_tables() {
    let files = corpus_dir("valid");
    assert!(files.len() >= 8);
    for (name, text) in files {
        let (c, a) = parse_circuit(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(truth_table(&c), header(&text, "truth"), "{name}");
        let printed = print_netlist(&c, Some(&a));
        let (c2, a2) = parse_circuit(&printed).unwrap();
        assert_eq!(c2, c, "{name}");
        assert_eq!(a2, a, "{name}");
        assert_eq!(print_netlist(&c2, Some(&a2)), printed, "{name}");
    }
}

#[test]
fn invalid_netlists_are_rejected_with_a_useful_message() {
    let files = corpus_dir("invalid");
    assert!(files.len() >= 12);
    for (name, text) in files {
        let want = header(&text, "error");
        let err = parse_circuit(&text).expect_err(&name).to_string();
        assert!(err.contains(want), "{name}: `{err}` lacks `{want}`");
    }
}

#[test]
fn structural_parse_accepts_what_only_validation_rejects() {
    for (name, text) in corpus_dir("invalid") {
        if ["fan_out.net", "skip_level.net", "output_feeds.net"].contains(&name.as_str()) {
            let (c, _) = parse_netlist(&text).unwrap();
            assert!(!validate(&c).all(), "{name}");
        }
    }
}

/// Gate values straight from the definition, by recursion on predecessors.
fn oracle_value(c: &Circuit, a: &Assignment, g: homophily::circuit::GateId) -> bool {
    let gate = c.gate(g);
    match gate.kind {
        GateKind::Input => a.get(g).unwrap(),
        GateKind::Buffer => oracle_value(c, a, gate.preds[0]),
        GateKind::And => gate.preds.iter().all(|&p| oracle_value(c, a, p)),
        GateKind::Or => gate.preds.iter().any(|&p| oracle_value(c, a, p)),
    }
}

fn bits_for(c: &Circuit, mask: u64) -> Assignment {
    let n = c.inputs().count();
    let bits: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
    Assignment::from_bits(c, &bits)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn generated_circuits_are_valid(seed in any::<u64>(), gates in 3usize..60, inputs in 2usize..8) {
        let c = random_synchronous(&mut ChaCha8Rng::seed_from_u64(seed), gates, inputs);
        let r = validate(&c);
        prop_assert!(r.all(), "{}", r);
    }

    #[test]
    fn evaluation_matches_recursive_oracle(seed in any::<u64>(), mask in any::<u64>()) {
        let c = random_synchronous(&mut ChaCha8Rng::seed_from_u64(seed), 30, 6);
        let a = bits_for(&c, mask);
        let all = evaluate_all(&c, &a).unwrap();
        for g in c.ids() {
            prop_assert_eq!(all[g.index()], oracle_value(&c, &a, g));
        }
    }

    #[test]
    fn monotone_in_the_inputs(seed in any::<u64>(), mask in any::<u64>(), flip in 0usize..8) {
        let c = random_synchronous(&mut ChaCha8Rng::seed_from_u64(seed), 30, 8);
        let n = c.inputs().count();
        let lo = mask & !(1 << (flip % n));
        let hi = lo | 1 << (flip % n);
        let low = evaluate_all(&c, &bits_for(&c, lo)).unwrap();
        let high = evaluate_all(&c, &bits_for(&c, hi)).unwrap();
        for (x, y) in low.iter().zip(&high) {
            prop_assert!(!x || *y);
        }
    }

    #[test]
    fn print_parse_round_trip(seed in any::<u64>(), mask in any::<u64>()) {
        let c = random_synchronous(&mut ChaCha8Rng::seed_from_u64(seed), 40, 8);
        let a = bits_for(&c, mask);
        let text = print_netlist(&c, Some(&a));
        let (c2, a2) = parse_circuit(&text).unwrap();
        prop_assert_eq!(&c2, &c);
        prop_assert_eq!(&a2, &a);
        prop_assert_eq!(print_netlist(&c2, None), print_netlist(&c, None));
    }

    #[test]
    fn synchronize_preserves_function(seed in any::<u64>(), mask in any::<u64>()) {
        let c = random_monotone(&mut ChaCha8Rng::seed_from_u64(seed), 25, 6);
        let s = synchronize(&c).unwrap();
        prop_assert!(validate(&s).all());
        let a = bits_for(&c, mask);
        let names: Vec<(String, bool)> = c.inputs().map(|g| (c.gate(g).name.clone(), a.get(g).unwrap())).collect();
        let mut b = Assignment::new();
        for (n, v) in names {
            b.set(s.find(&n).unwrap(), v);
        }
        prop_assert_eq!(evaluate(&s, &b).unwrap(), evaluate(&c, &a).unwrap());
        let text = print_netlist(&s, Some(&b));
        prop_assert_eq!(parse_circuit(&text).unwrap().0, s);
    }
}
