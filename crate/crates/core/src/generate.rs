//! Random and structured instance families for tests and benchmarks.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::combinations::Colex;
use crate::rank::{transversal_rank, RankMethod};
use crate::{Error, Hypergraph, Result, VertexSet};

/// `m` random edges over `n` vertices with sizes drawn uniformly from `sizes`
/// (clamped to `n`). Duplicates are dropped, so the result may have fewer edges.
pub fn random_hypergraph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    m: usize,
    sizes: RangeInclusive<usize>,
) -> Hypergraph {
    let lo = (*sizes.start()).min(n);
    let hi = (*sizes.end()).min(n).max(lo);
    let vertices: Vec<usize> = (0..n).collect();
    let edges: Vec<VertexSet> = (0..m)
        .map(|_| {
            let size = rng.gen_range(lo..=hi);
            VertexSet::from_indices(n, vertices.choose_multiple(rng, size).copied())
        })
        .collect();
    Hypergraph::new(n, edges)
}

/// Each `r`-subset of the `n` vertices becomes an edge with probability `p`.
pub fn random_uniform<R: Rng + ?Sized>(rng: &mut R, n: usize, r: usize, p: f64) -> Hypergraph {
    let edges: Vec<VertexSet> = Colex::new(n, r)
        .filter(|_| rng.gen_bool(p))
        .map(|s| VertexSet::from_indices(n, s))
        .collect();
    Hypergraph::new(n, edges)
}

/// `m` distinct edges of size in `2..=rank` with every vertex degree at most
/// `delta`. Edges are grown from the least used vertices, with ties broken at
/// random.
pub fn bounded_degree<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    m: usize,
    rank: usize,
    delta: usize,
) -> Result<Hypergraph> {
    if rank == 0 || rank > n {
        return Err(Error::InvalidParameter(format!("rank {rank} outside 1..={n}")));
    }
    if m > n * delta {
        return Err(Error::Infeasible(format!(
            "{m} non-empty edges need degree sum at least {m} > n*delta = {}",
            n * delta
        )));
    }
    const ATTEMPTS: usize = 200;
    'attempt: for _ in 0..ATTEMPTS {
        let mut degree = vec![0usize; n];
        let mut edges: Vec<VertexSet> = Vec::with_capacity(m);
        for _ in 0..m {
            let size = rng.gen_range(rank.min(2)..=rank);
            let mut order: Vec<usize> = (0..n).filter(|&v| degree[v] < delta).collect();
            order.shuffle(rng);
            order.sort_by_key(|&v| degree[v]);
            if order.len() < size {
                continue 'attempt;
            }
            let e = VertexSet::from_indices(n, order[..size].iter().copied());
            if edges.contains(&e) {
                continue 'attempt;
            }
            for v in e.iter() {
                degree[v] += 1;
            }
            edges.push(e);
        }
        return Ok(Hypergraph::new(n, edges));
    }
    Err(Error::Infeasible(format!(
        "no {m}-edge hypergraph with rank {rank} and max degree {delta} found on {n} vertices"
    )))
}

/// A bounded-degree hypergraph whose transversal rank is exactly `kstar`.
///
/// Any hitting set `T` satisfies `|T| * delta >= sum of degrees over T >= m`,
/// so `kstar < ceil(m / delta)` is rejected up front.
pub fn with_transversal_rank<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    m: usize,
    kstar: usize,
    delta: usize,
    attempts: usize,
) -> Result<Hypergraph> {
    if delta == 0 || m.div_ceil(delta) > kstar {
        return Err(Error::Infeasible(format!(
            "every hitting set of {m} edges with max degree {delta} has at least {} vertices, \
             more than the requested transversal rank {kstar}",
            if delta == 0 { m } else { m.div_ceil(delta) }
        )));
    }
    for _ in 0..attempts {
        let rank = rng.gen_range(2..=n.max(2));
        let Ok(h) = bounded_degree(rng, n, m, rank, delta) else {
            continue;
        };
        if h.m() == m && h.max_degree() == delta && transversal_rank(&h, RankMethod::Lookahead)? == kstar {
            return Ok(h);
        }
    }
    Err(Error::Infeasible(format!(
        "no instance with n={n}, m={m}, delta={delta}, transversal rank {kstar} in {attempts} attempts"
    )))
}

/// Complete multipartite graph with parts of size three (the last part takes
/// the remainder). For `n` divisible by 3 it has `3^(n/3)` maximal cliques.
pub fn moon_moser(n: usize) -> Hypergraph {
    let part = |v: usize| (v / 3).min(n.saturating_sub(1) / 3);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part(u) != part(v) {
                edges.push(VertexSet::from_indices(n, [u, v]));
            }
        }
    }
    Hypergraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_sizes_respected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let h = random_hypergraph(&mut rng, 6, 8, 0..=3);
            assert!(h.m() <= 8);
            assert!(h.edges().iter().all(|e| e.len() <= 3));
        }
    }

    #[test]
    fn bounded_degree_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let h = bounded_degree(&mut rng, 12, 10, 3, 3).unwrap();
        assert_eq!(h.m(), 10);
        assert!(h.max_degree() <= 3);
        assert!(h.rank() <= 3);
        assert!(matches!(bounded_degree(&mut rng, 4, 20, 2, 2), Err(Error::Infeasible(_))));
    }

    #[test]
    fn transversal_rank_lower_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for delta in [2, 4, 8] {
            assert!(matches!(
                with_transversal_rank(&mut rng, 18, 40, 3, delta, 10),
                Err(Error::Infeasible(_))
            ));
        }
        let h = with_transversal_rank(&mut rng, 6, 3, 3, 1, 100).unwrap();
        assert_eq!(transversal_rank(&h, RankMethod::Lookahead).unwrap(), 3);
    }

    #[test]
    fn moon_moser_shape() {
        let g = moon_moser(6);
        assert_eq!(g.m(), 9);
        assert!(g.is_uniform(2));
        assert_eq!(moon_moser(15).m(), 105 - 15);
    }

    #[test]
    fn uniform_density_extremes() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert_eq!(random_uniform(&mut rng, 5, 2, 1.0).m(), 10);
        assert_eq!(random_uniform(&mut rng, 5, 3, 0.0).m(), 0);
    }
}
