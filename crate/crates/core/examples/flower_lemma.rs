//! Runs the flower lemma over a range of flowers, including petals that are
//! too small for it.

use homophily::flower::{run_flower_lemma, FlowerSpec};

fn main() {
    for (n, m) in [(4, 4), (6, 8), (5, 9), (5, 3)] {
        let spec = FlowerSpec::new(n, m).expect("positive sizes");
        let failures: Vec<usize> = (1..=n)
            .filter(|&k| !run_flower_lemma(spec, k).expect("k in range").1.all())
            .collect();
        println!(
            "F({n},{m}) {}: {}",
            if spec.in_lemma_regime() { "m >= n" } else { "m < n " },
            if failures.is_empty() {
                "holds for every k".to_string()
            } else {
                format!("fails for k in {failures:?}")
            }
        );
    }
    let (_, r) = run_flower_lemma(FlowerSpec::new(6, 8).expect("positive sizes"), 4).expect("k in range");
    for (claim, ok) in r.verdicts() {
        println!("  F(6,8) k=4 {claim}: {ok}");
    }
}
