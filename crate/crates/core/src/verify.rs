//! Deciding `G = Tr(H)` for a bounded-rank `H`.
//!
//! With `r = rank(H)`, the identity holds iff
//!  1. every edge of `G` is a minimal hitting set of `H`,
//!  2. every minimal hitting set of `G` with at most `r` vertices is an edge of `H`,
//!  3. the transversal rank of `G` is at most `r`.
//!
//! When 2 or 3 fails the offending set `S` is turned into a missing solution
//! `t = minimize(H, V \ S)`.

use crate::combinations::subsets_up_to;
use crate::hitting::{is_minimal_hitting_set, minimize};
use crate::rank::{rank_at_least, RankMethod};
use crate::{EdgeIndex, Error, Hypergraph, Result, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Equal,
    /// An edge of `G` that is not a minimal hitting set of `H`.
    NotSubset(VertexSet),
    /// `s` is a minimal hitting set of `G` outside `H`; `t ∈ Tr(H) \ G`.
    MissingSolution { s: VertexSet, t: VertexSet },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyStats {
    /// Subsets examined by the condition-2 scan.
    pub condition2_candidates: u64,
    /// Candidates that were minimal hitting sets of `G` and edges of `H`.
    pub condition2_hits: u64,
    pub condition3_checked: bool,
}

/// [`verify_tr_with`] using the look-ahead rank decider.
pub fn verify_tr(g: &Hypergraph, h: &Hypergraph) -> Result<VerifyOutcome> {
    verify_tr_with(g, h, RankMethod::Lookahead).map(|(o, _)| o)
}

pub fn verify_tr_with(
    g: &Hypergraph,
    h: &Hypergraph,
    method: RankMethod,
) -> Result<(VerifyOutcome, VerifyStats)> {
    if g.n() != h.n() {
        return Err(Error::UniverseMismatch {
            left: g.n(),
            right: h.n(),
        });
    }
    let n = h.n();
    let mut stats = VerifyStats::default();

    if let Some(bad) = g.edges().iter().find(|e| !is_minimal_hitting_set(h, e)) {
        return Ok((VerifyOutcome::NotSubset(bad.clone()), stats));
    }

    let r = h.rank();
    let index = EdgeIndex::new(h);
    for members in subsets_up_to(n, r) {
        stats.condition2_candidates += 1;
        let s = VertexSet::from_indices(n, members);
        if !is_minimal_hitting_set(g, &s) {
            continue;
        }
        if index.contains(&s) {
            stats.condition2_hits += 1;
            debug_assert!(stats.condition2_hits as usize <= h.m());
            continue;
        }
        let t = extract(h, &s);
        return Ok((VerifyOutcome::MissingSolution { s, t }, stats));
    }

    // Tr(G) is empty when G contains the empty edge.
    if !g.has_empty_edge() {
        stats.condition3_checked = true;
        if let Some(w) = rank_at_least(g, r + 1, method)? {
            let t = extract(h, &w.transversal);
            return Ok((
                VerifyOutcome::MissingSolution {
                    s: w.transversal,
                    t,
                },
                stats,
            ));
        }
    }
    Ok((VerifyOutcome::Equal, stats))
}

// Every edge of H hits G and is not contained in s, so V \ s hits H.
fn extract(h: &Hypergraph, s: &VertexSet) -> VertexSet {
    minimize(h, &s.complement()).expect("complement of a missing solution hits every edge")
}

/// `G ≼ H`: every edge of `g` contains some edge of `h`.
pub fn preorder_leq(g: &Hypergraph, h: &Hypergraph) -> bool {
    g.edges()
        .iter()
        .all(|ge| h.edges().iter().any(|he| he.is_subset(ge)))
}
