//! k-conformality and the conformal degree.
//!
//! `H` is k-conformal iff every maximal hyperclique of its k-section is an
//! edge of `H`. The cliques are streamed and checked against a sorted edge
//! index, stopping at the first miss; since distinct cliques that are edges
//! number at most `m`, at most `m + 1` cliques are ever examined.

use std::ops::ControlFlow;

use crate::cliques::MaximalCliques;
use crate::enumeration::{enumerate_tr_with, EnumOptions};
use crate::{EdgeIndex, Error, Hypergraph, Result, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conformality {
    Conformal,
    /// Every subset of at most `k` vertices lies in an edge, the set itself in none.
    Counterexample(VertexSet),
}

impl Conformality {
    pub fn is_conformal(&self) -> bool {
        matches!(self, Conformality::Conformal)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ConformalStats {
    pub section_edges: usize,
    pub cliques_examined: usize,
}

pub fn is_k_conformal(h: &Hypergraph, k: usize) -> Result<Conformality> {
    check_k_conformal(h, k).map(|(c, _)| c)
}

pub fn check_k_conformal(h: &Hypergraph, k: usize) -> Result<(Conformality, ConformalStats)> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let section = h.k_section(k)?;
    let index = EdgeIndex::new(h);
    let mut stats = ConformalStats {
        section_edges: section.m(),
        cliques_examined: 0,
    };
    let mut found = None;
    let mut check = |c: &VertexSet| {
        stats.cliques_examined += 1;
        if index.contains(c) {
            ControlFlow::Continue(())
        } else {
            found = Some(c.clone());
            ControlFlow::Break(())
        }
    };
    if k == 2 {
        for c in MaximalCliques::new(&section)?.filter(|c| c.len() >= 2) {
            if check(&c).is_break() {
                break;
            }
        }
    } else {
        let non_edges = section.uniform_complement(k)?;
        enumerate_tr_with(&non_edges, EnumOptions::default(), &mut |t| {
            let c = t.complement();
            if c.len() < k {
                return ControlFlow::Continue(());
            }
            check(&c)
        });
    }
    debug_assert!(stats.cliques_examined <= h.m() + 1);
    let outcome = match found {
        Some(c) => {
            debug_assert!(c.len() > k);
            Conformality::Counterexample(c)
        }
        None => Conformality::Conformal,
    };
    Ok((outcome, stats))
}

/// 2-conformality through the graph clique enumerator.
pub fn is_conformal(h: &Hypergraph) -> Result<Conformality> {
    is_k_conformal(h, 2)
}

/// Smallest `k >= 1` for which `h` is k-conformal, or 0 if `h` has no edges.
pub fn conformal_degree(h: &Hypergraph) -> Result<usize> {
    if h.is_empty() {
        return Ok(0);
    }
    let mut k = 1;
    while !is_k_conformal(h, k)?.is_conformal() {
        k += 1;
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(
            n,
            edges
                .iter()
                .map(|e| VertexSet::from_indices(n, e.iter().map(|v| v - 1))),
        )
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, vs.iter().map(|v| v - 1))
    }

    #[test]
    fn triangle() {
        let tri = hg(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(
            is_k_conformal(&tri, 2).unwrap(),
            Conformality::Counterexample(set(3, &[1, 2, 3]))
        );
        assert_eq!(is_conformal(&tri).unwrap(), Conformality::Counterexample(set(3, &[1, 2, 3])));
        assert_eq!(conformal_degree(&tri).unwrap(), 3);
    }

    #[test]
    fn single_edge() {
        let h = hg(3, &[&[1, 2, 3]]);
        assert_eq!(is_k_conformal(&h, 1).unwrap(), Conformality::Conformal);
        assert_eq!(is_conformal(&h).unwrap(), Conformality::Conformal);
        assert_eq!(conformal_degree(&h).unwrap(), 1);
    }

    #[test]
    fn singletons() {
        let h = hg(3, &[&[3], &[1], &[2]]);
        assert_eq!(is_k_conformal(&h, 2).unwrap(), Conformality::Conformal);
        match is_k_conformal(&h, 1).unwrap() {
            Conformality::Counterexample(c) => assert!(c.len() >= 2),
            other => panic!("{other:?}"),
        }
        assert_eq!(conformal_degree(&h).unwrap(), 2);
    }

    #[test]
    fn matching_is_conformal() {
        assert!(is_conformal(&hg(4, &[&[1, 2], &[3, 4]])).unwrap().is_conformal());
        assert_eq!(conformal_degree(&Hypergraph::new(2, vec![])).unwrap(), 0);
        assert!(is_k_conformal(&hg(2, &[&[1]]), 0).is_err());
    }

    #[test]
    fn abort_bound() {
        // K_6 minus a perfect matching has 8 maximal cliques but only 12 edges.
        let mut edges = Vec::new();
        for u in 1..=6usize {
            for v in u + 1..=6 {
                if !(u % 2 == 1 && v == u + 1) {
                    edges.push(vec![u, v]);
                }
            }
        }
        let refs: Vec<&[usize]> = edges.iter().map(Vec::as_slice).collect();
        let h = hg(6, &refs);
        let (outcome, stats) = check_k_conformal(&h, 2).unwrap();
        assert!(!outcome.is_conformal());
        assert!(stats.cliques_examined <= h.m() + 1);
    }
}
