#![allow(clippy::needless_range_loop)]

mod common;

use common::{oracle_phi, vid, Dense};
use homophily::{apply_phi, apply_word, BicoloredGraph, Color, UpdateWord};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_dense(rng: &mut impl Rng, n: usize) -> Dense {
    let colors = (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    let mut adj = vec![vec![false; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            let e = rng.gen_bool(0.5);
            adj[u][v] = e;
            adj[v][u] = e;
        }
    }
    Dense { colors, adj }
}

#[test]
fn matches_oracle_on_seeded_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut mismatches = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=6);
        let d = random_dense(&mut rng, n);
        let v = rng.gen_range(0..n);
        let got = Dense::of(&apply_phi(&d.to_graph(), vid(v)).unwrap());
        if got != oracle_phi(&d, v) {
            mismatches += 1;
        }
    }
    assert_eq!(mismatches, 0);
}

#[test]
fn matches_oracle_on_all_small_graphs() {
    let mut cases = 0;
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for emask in 0u32..1 << pairs.len() {
            for cmask in 0u32..1 << n {
                let colors = (0..n).map(|i| if cmask >> i & 1 == 1 { 1 } else { -1 }).collect();
                let mut adj = vec![vec![false; n]; n];
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    let e = emask >> i & 1 == 1;
                    adj[u][v] = e;
                    adj[v][u] = e;
                }
                let d = Dense { colors, adj };
                let g = d.to_graph();
                for v in 0..n {
                    let got = Dense::of(&apply_phi(&g, vid(v)).unwrap());
                    assert_eq!(got, oracle_phi(&d, v), "n={n} edges={emask:b} colors={cmask:b} v={v}");
                    cases += 1;
                }
            }
        }
    }
    // per n: edge sets * colorings * vertices
    assert_eq!(cases, 2 + 16 + 192 + 4096);
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = (Dense, usize)> {
    (1..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(any::<bool>(), n * n),
            0..n,
        )
            .prop_map(move |(cs, bits, v)| {
                let colors = cs.iter().map(|&b| if b { 1 } else { -1 }).collect();
                let mut adj = vec![vec![false; n]; n];
                for u in 0..n {
                    for w in u + 1..n {
                        adj[u][w] = bits[u * n + w];
                        adj[w][u] = bits[u * n + w];
                    }
                }
                (Dense { colors, adj }, v)
            })
    })
}

proptest! {
    #[test]
    fn only_the_neighborhood_changes((d, v) in graph_strategy(9)) {
        let g = d.to_graph();
        let after = apply_phi(&g, vid(v)).unwrap();
        let n = d.colors.len();
        for x in 0..n {
            if x != v {
                prop_assert_eq!(after.color(vid(x)), g.color(vid(x)));
            }
            for y in x + 1..n {
                let inside = d.adj[v][x] && d.adj[v][y];
                if !inside {
                    prop_assert_eq!(after.has_edge(vid(x), vid(y)), g.has_edge(vid(x), vid(y)));
                }
            }
        }
        prop_assert_eq!(after.neighbors(vid(v)), g.neighbors(vid(v)));
    }

    #[test]
    fn neighborhood_splits_into_two_cliques((d, v) in graph_strategy(9)) {
        let g = d.to_graph();
        let after = apply_phi(&g, vid(v)).unwrap();
        let nb: Vec<usize> = g.neighbors(vid(v)).iter().map(|&x| x as usize).collect();
        for &x in &nb {
            for &y in &nb {
                if x < y {
                    let same = g.color(vid(x)) == g.color(vid(y));
                    prop_assert_eq!(after.has_edge(vid(x), vid(y)), same);
                }
            }
        }
    }

    #[test]
    fn tie_keeps_color((d, v) in graph_strategy(9)) {
        let g = d.to_graph();
        let after = apply_phi(&g, vid(v)).unwrap();
        let sum = g.neighbor_sum(vid(v));
        let expected = match sum.signum() {
            1 => Color::Plus,
            -1 => Color::Minus,
            _ => g.color(vid(v)),
        };
        prop_assert_eq!(after.color(vid(v)), expected);
    }

    #[test]
    fn words_compose((d, _) in graph_strategy(7), w1 in proptest::collection::vec(0usize..7, 0..6), w2 in proptest::collection::vec(0usize..7, 0..6)) {
        let n = d.colors.len();
        let g = d.to_graph();
        let w1: UpdateWord = w1.into_iter().map(|x| vid(x % n)).collect();
        let w2: UpdateWord = w2.into_iter().map(|x| vid(x % n)).collect();
        let mut both = w1.clone();
        both.concat(&w2);
        let step = apply_word(&apply_word(&g, &w1).unwrap(), &w2).unwrap();
        prop_assert_eq!(apply_word(&g, &both).unwrap(), step);
    }
}

#[test]
fn isolated_vertex_is_a_fixed_point() {
    let g = BicoloredGraph::from_edges(vec![Color::Plus, Color::Minus, Color::Minus], [(1, 2)]).unwrap();
    assert_eq!(apply_phi(&g, vid(0)).unwrap(), g);
}
