#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use transversal::generate::random_hypergraph;
use transversal::{Hypergraph, VertexSet};

pub const CORPUS_SEED: u64 = 0x5eed_2024;

/// Random hypergraphs with `n <= 8`, `m <= 12` and mixed edge sizes. Some
/// instances have no edges and some contain the empty edge.
pub fn corpus(size: usize) -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut out = Vec::with_capacity(size);
    for i in 0..size {
        let n = rng.gen_range(1..=8);
        let m = if i % 25 == 0 { 0 } else { rng.gen_range(1..=12) };
        let max_size = rng.gen_range(1..=n);
        let h = random_hypergraph(&mut rng, n, m, 1..=max_size);
        let h = if i % 20 == 7 {
            Hypergraph::new(n, h.edges().iter().cloned().chain([VertexSet::empty(n)]))
        } else {
            h
        };
        out.push(h);
    }
    out
}

pub fn random_subset<R: Rng>(rng: &mut R, pool: &VertexSet, p: f64) -> VertexSet {
    VertexSet::from_indices(pool.universe(), pool.iter().filter(|_| rng.gen_bool(p)))
}

pub fn sorted(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort();
    sets
}

/// `|S| ≤ k`-subsets of `s` all lie in an edge while `s` lies in none.
pub fn is_conformality_counterexample(h: &Hypergraph, s: &VertexSet, k: usize) -> bool {
    let covered = |t: &VertexSet| h.edges().iter().any(|e| t.is_subset(e));
    let members = s.to_vec();
    let small_covered = (0..1u64 << members.len())
        .filter(|mask| mask.count_ones() as usize <= k)
        .all(|mask| {
            let t = VertexSet::from_indices(
                s.universe(),
                members.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v),
            );
            covered(&t)
        });
    small_covered && !covered(s)
}
