//! Exhaustive reference implementations over all `2^n` vertex subsets.
//!
//! Everything here works straight from the definitions on `u64` masks and is
//! meant for cross-checking the real algorithms on small instances.

use crate::{Error, Hypergraph, Result, VertexSet};

/// Largest universe the oracle accepts unless configured otherwise.
pub const DEFAULT_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

/// Minimal hitting sets containing `X` and avoiding `Y`, split by `|T \ X|`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Extensions {
    pub zero: Vec<VertexSet>,
    pub one: Vec<VertexSet>,
    pub higher: Vec<VertexSet>,
}

fn popcount(mask: u64) -> usize {
    mask.count_ones() as usize
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap: cap.min(63) }
    }

    fn masks(&self, h: &Hypergraph) -> Result<Vec<u64>> {
        if h.n() > self.cap || h.n() > 63 {
            return Err(Error::OracleCapExceeded {
                n: h.n(),
                cap: self.cap.min(63),
            });
        }
        Ok(h.edges().iter().map(to_mask).collect())
    }

    /// All minimal hitting sets, ordered by mask value.
    pub fn tr(&self, h: &Hypergraph) -> Result<Vec<VertexSet>> {
        let edges = self.masks(h)?;
        let n = h.n();
        Ok((0..1u64 << n)
            .filter(|&t| is_minimal(&edges, t))
            .map(|t| VertexSet::from_mask(n, t))
            .collect())
    }

    /// Largest minimal hitting set size. Undefined when `Tr(h)` is empty.
    pub fn rank(&self, h: &Hypergraph) -> Result<usize> {
        if h.has_empty_edge() {
            return Err(Error::EmptyEdge);
        }
        Ok(self.tr(h)?.iter().map(VertexSet::len).max().unwrap_or(0))
    }

    /// `None` if `h` is `k`-conformal, else the first set (by mask) whose
    /// subsets of size at most `k` all lie in edges while it lies in none.
    pub fn is_k_conformal(&self, h: &Hypergraph, k: usize) -> Result<Option<VertexSet>> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        let edges = self.masks(h)?;
        let n = h.n();
        let covered = |s: u64| edges.iter().any(|&e| s & e == s);
        for s in 0..1u64 << n {
            if popcount(s) <= k || covered(s) {
                continue;
            }
            if submasks(s).filter(|&t| popcount(t) <= k).all(covered) {
                return Ok(Some(VertexSet::from_mask(n, s)));
            }
        }
        Ok(None)
    }

    /// Smallest `k >= 1` with `h` k-conformal; 0 for a hypergraph with no edges.
    pub fn conformal_degree(&self, h: &Hypergraph) -> Result<usize> {
        if h.is_empty() {
            self.masks(h)?;
            return Ok(0);
        }
        let mut k = 1;
        while self.is_k_conformal(h, k)?.is_some() {
            k += 1;
        }
        Ok(k)
    }

    /// Maximal sets of at least `r` vertices whose `r`-subsets are all edges.
    pub fn max_cliques(&self, h: &Hypergraph, r: usize) -> Result<Vec<VertexSet>> {
        h.check_uniform(r)?;
        let edges = self.masks(h)?;
        let n = h.n();
        let is_clique = |s: u64| {
            popcount(s) >= r
                && submasks(s)
                    .filter(|&t| popcount(t) == r)
                    .all(|t| edges.contains(&t))
        };
        Ok((0..1u64 << n)
            .filter(|&s| is_clique(s))
            .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || !is_clique(s | 1 << v)))
            .map(|s| VertexSet::from_mask(n, s))
            .collect())
    }

    /// Maximal vertex sets containing no edge.
    pub fn max_independent_sets(&self, h: &Hypergraph) -> Result<Vec<VertexSet>> {
        let edges = self.masks(h)?;
        let n = h.n();
        let independent = |s: u64| edges.iter().all(|&e| s & e != e);
        Ok((0..1u64 << n)
            .filter(|&s| independent(s))
            .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || !independent(s | 1 << v)))
            .map(|s| VertexSet::from_mask(n, s))
            .collect())
    }

    /// `Tr(h)[X, Y]` partitioned by the number of vertices beyond `X`.
    pub fn extensions(&self, h: &Hypergraph, x: &VertexSet, y: &VertexSet) -> Result<Extensions> {
        let mut out = Extensions::default();
        for t in self.tr(h)? {
            if !x.is_subset(&t) || t.intersects(y) {
                continue;
            }
            match t.len() - x.len() {
                0 => out.zero.push(t),
                1 => out.one.push(t),
                _ => out.higher.push(t),
            }
        }
        Ok(out)
    }
}

fn to_mask(s: &VertexSet) -> u64 {
    s.iter().fold(0, |m, v| m | 1 << v)
}

fn hits(edges: &[u64], t: u64) -> bool {
    edges.iter().all(|&e| e & t != 0)
}

// No single vertex can be dropped; by monotonicity this is full minimality.
fn is_minimal(edges: &[u64], t: u64) -> bool {
    hits(edges, t) && (0..64).filter(|v| t >> v & 1 == 1).all(|v| !hits(edges, t & !(1 << v)))
}

/// All submasks of `s`, including `0` and `s`.
fn submasks(s: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(s);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & s) };
        Some(cur)
    })
}
