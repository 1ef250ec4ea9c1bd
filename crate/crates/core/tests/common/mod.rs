#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;

use cise::bottomup::{simple, vsimple, Pick};
use cise::harness::enumerate;
use cise::topdown::topdown;
use cise::{Algorithm, Backend, EnumOptions, Graph, RunReport, SubgraphSink, TimeoutGuard};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn diamond() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// G(n, p), redrawn until connected.
pub fn random_connected(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.random_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// The random suite: `count` connected graphs cycling through n = 2..=12
/// and p in {0.2, 0.5, 0.8}.
pub fn random_suite(seed: u64, count: usize) -> Vec<(usize, f64, Graph)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let probabilities = [0.2, 0.5, 0.8];
    (0..count)
        .map(|i| {
            let n = 2 + i % 11;
            let p = probabilities[(i / 11) % 3];
            (n, p, random_connected(&mut rng, n, p))
        })
        .collect()
}

pub struct Collected {
    pub report: RunReport,
    /// Sorted member lists in emission order.
    pub sets: Vec<Vec<usize>>,
}

pub fn collect_with(g: &Graph, algorithm: Algorithm, k: usize, backend: Backend, options: &EnumOptions) -> Collected {
    let mut sink = SubgraphSink::collect();
    let report = enumerate(g, algorithm, k, backend, &mut sink, options, &mut TimeoutGuard::unlimited())
        .unwrap_or_else(|e| panic!("{algorithm} k={k}: {e}"));
    Collected { report, sets: sink.take_collected() }
}

pub fn collect(g: &Graph, algorithm: Algorithm, k: usize) -> Collected {
    collect_with(g, algorithm, k, Backend::List, &EnumOptions::default())
}

pub fn count_with(g: &Graph, algorithm: Algorithm, k: usize, backend: Backend, options: &EnumOptions) -> RunReport {
    let mut sink = SubgraphSink::count();
    let mut guard = TimeoutGuard::unlimited();
    match algorithm {
        Algorithm::Simple => simple(g, k, &mut sink, Pick::Back, options, &mut guard),
        Algorithm::SimpleForward => simple(g, k, &mut sink, Pick::Front, options, &mut guard),
        Algorithm::VSimple => vsimple(g, k, &mut sink, options, &mut guard),
        Algorithm::TopDown => topdown(g, k, &mut sink, backend, options, &mut guard),
        Algorithm::Oracle => enumerate(g, algorithm, k, backend, &mut sink, options, &mut guard),
    }
    .unwrap_or_else(|e| panic!("{algorithm} k={k}: {e}"))
}

/// Sorted copy; the caller compares against a duplicate-free reference, so a
/// duplicate shows up as a length mismatch.
pub fn canonical(mut sets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    sets.sort();
    sets
}

/// All connected vertex subsets of every size, by growing each subset by
/// one neighbor at a time and deduplicating. Shares nothing with the
/// enumerators or the oracle.
pub fn all_connected_subsets(g: &Graph) -> HashSet<u64> {
    assert!(g.n() <= 63);
    let mut seen = HashSet::new();
    let mut stack: Vec<u64> = (0..g.n()).map(|v| 1u64 << v).collect();
    while let Some(s) = stack.pop() {
        if !seen.insert(s) {
            continue;
        }
        for v in 0..g.n() {
            if s >> v & 1 == 1 {
                for &w in g.neighbors(v) {
                    let t = s | 1 << w;
                    if t != s && !seen.contains(&t) {
                        stack.push(t);
                    }
                }
            }
        }
    }
    seen
}

pub fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
