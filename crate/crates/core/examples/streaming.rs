//! Streams a large compiled instance to a sink and checks a small one
//! against the in-memory compiler.

use std::io;
use std::time::Instant;

use homophily::circuit::random::random_synchronous;
use homophily::circuit::Assignment;
use homophily::compiler::{compile, compile_streaming, instance_size, ReductionParams};
use homophily::serialize_document;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let small = random_synchronous(&mut rng, 20, 5);
    let bits: Vec<bool> = small.inputs().map(|_| rng.gen()).collect();
    let a = Assignment::from_bits(&small, &bits);
    let p = ReductionParams::fixed(6);
    let built = serialize_document(&compile(&small, &a, &p).expect("compilable").instance.into());
    let streamed = compile_streaming(&small, &a, &p, Vec::new()).expect("compilable");
    println!(
        "{} gates: streamed == built: {}",
        small.len(),
        built.as_bytes() == streamed.as_slice()
    );

    let big = random_synchronous(&mut rng, 1000, 40);
    let bits: Vec<bool> = big.inputs().map(|_| rng.gen()).collect();
    let a = Assignment::from_bits(&big, &bits);
    let p = ReductionParams::fixed(30);
    let size = instance_size(&big, &p).expect("compilable");
    let t = Instant::now();
    compile_streaming(&big, &a, &p, io::sink()).expect("compilable");
    println!("{} gates, {size}: streamed in {:.2?}", big.len(), t.elapsed());
}
