//! Deciding `rank(Tr(H)) >= k` and computing the transversal rank.
//!
//! Two independent deciders are provided:
//! * [`rank_at_least_lookahead`] tries every `(k-2)`-set `X` and asks whether
//!   it has a minimal extension with at least two more vertices;
//! * [`rank_at_least_bd`] searches for `k` edges whose pairwise overlap `D`
//!   contains no edge, using precomputed containment lists for every
//!   `(k-1)`-subfamily.

use serde::Serialize;

use crate::combinations::{binomial, colex_rank, Colex, Lex};
use crate::extension::higher_order_witness;
use crate::hitting::minimize;
use crate::oracle::Oracle;
use crate::{Error, Hypergraph, Result, VertexId, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankMethod {
    #[default]
    Lookahead,
    Bd,
    Oracle,
}

/// How a witness was certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `k <= 1`: any minimal hitting set will do.
    Trivial,
    /// `X` has a higher-order extension; `private_edges` pairs each member of
    /// `X` with its chosen private edge, and every minimal hitting set inside
    /// `search_space = X ∪ V \ (shared ∪ ⋃ private edges)` is large enough.
    Lookahead {
        x: VertexSet,
        private_edges: Vec<(VertexId, usize)>,
        shared: VertexSet,
        search_space: VertexSet,
    },
    /// `edges` are `k` edges whose overlap set `overlap` (vertices in at least
    /// two of them) contains no edge of `H`.
    Overlap { edges: Vec<usize>, overlap: VertexSet },
    /// Found by exhaustive search.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankWitness {
    /// A minimal hitting set with at least `k` vertices.
    pub transversal: VertexSet,
    pub certificate: Certificate,
}

fn check_input(h: &Hypergraph) -> Result<()> {
    if h.has_empty_edge() {
        Err(Error::EmptyEdge)
    } else {
        Ok(())
    }
}

/// Handles `k <= 1`. `None` means the caller must decide.
fn trivial_cases(h: &Hypergraph, k: usize) -> Option<Option<RankWitness>> {
    if k >= 2 {
        return None;
    }
    if k == 1 && h.is_empty() {
        return Some(None);
    }
    let t = minimize(h, &h.universe()).expect("no empty edge");
    Some(Some(RankWitness {
        transversal: t,
        certificate: Certificate::Trivial,
    }))
}

/// Decides `rank(Tr(h)) >= k` by look-ahead over all `(k-2)`-subsets in colex order.
pub fn rank_at_least_lookahead(h: &Hypergraph, k: usize) -> Result<Option<RankWitness>> {
    check_input(h)?;
    if let Some(answer) = trivial_cases(h, k) {
        return Ok(answer);
    }
    let n = h.n();
    if h.is_empty() || k - 2 > n {
        return Ok(None);
    }
    let none = VertexSet::empty(n);
    for members in Colex::new(n, k - 2) {
        let x = VertexSet::from_indices(n, members);
        let Some(w) = higher_order_witness(h, &x, &none)? else {
            continue;
        };
        let mut covered = w.shared.clone();
        for &(_, e) in &w.private_edges {
            covered.union_with(h.edge(e));
        }
        let mut search_space = covered.complement();
        search_space.union_with(&x);
        let t = minimize(h, &search_space).expect("search space hits every edge");
        debug_assert!(t.len() >= k);
        return Ok(Some(RankWitness {
            transversal: t,
            certificate: Certificate::Lookahead {
                x,
                private_edges: w.private_edges,
                shared: w.shared,
                search_space,
            },
        }));
    }
    Ok(None)
}

/// Tuning and counters for [`rank_at_least_bd_with`].
#[derive(Debug, Clone, Copy)]
pub struct BdConfig {
    /// Largest total number of list entries to precompute; beyond this the
    /// lists are rebuilt for every candidate family.
    pub memory_budget: u64,
}

impl Default for BdConfig {
    fn default() -> Self {
        BdConfig {
            memory_budget: 1 << 24,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BdStats {
    pub families_checked: u64,
    /// Largest number of list entries read while intersecting one family's lists.
    pub max_list_touches: u64,
    pub lists_materialized: bool,
    /// Number of edges after Sperner reduction.
    pub sperner_edges: usize,
}

/// Vertices that occur in at least two of the given edges.
pub fn overlap_set(h: &Hypergraph, edges: &[usize]) -> VertexSet {
    let mut seen = h.empty_set();
    let mut twice = h.empty_set();
    for &e in edges {
        twice.union_with(&seen.intersection(h.edge(e)));
        seen.union_with(h.edge(e));
    }
    twice
}

/// Decides `rank(Tr(h)) >= k` by searching `k`-edge subfamilies of `min(h)`.
pub fn rank_at_least_bd(h: &Hypergraph, k: usize) -> Result<Option<RankWitness>> {
    rank_at_least_bd_with(h, k, BdConfig::default()).map(|(w, _)| w)
}

pub fn rank_at_least_bd_with(
    h: &Hypergraph,
    k: usize,
    config: BdConfig,
) -> Result<(Option<RankWitness>, BdStats)> {
    check_input(h)?;
    let mut stats = BdStats::default();
    if let Some(answer) = trivial_cases(h, k) {
        return Ok((answer, stats));
    }
    let minimal = h.minimal_edge_indices();
    stats.sperner_edges = minimal.len();
    let m = minimal.len();
    if m < k {
        return Ok((None, stats));
    }
    let found = if k == 2 {
        // two distinct Sperner edges are incomparable
        Some(vec![minimal[0], minimal[1]])
    } else {
        let sperner = Hypergraph::new(h.n(), minimal.iter().map(|&i| h.edge(i).clone()));
        containment_search(&sperner, k, config, &mut stats)
            .map(|family| family.into_iter().map(|i| minimal[i]).collect())
    };
    Ok((
        found.map(|edges: Vec<usize>| {
            let overlap = overlap_set(h, &edges);
            let t = minimize(h, &overlap.complement()).expect("overlap contains no edge");
            debug_assert!(t.len() >= k);
            RankWitness {
                transversal: t,
                certificate: Certificate::Overlap { edges, overlap },
            }
        }),
        stats,
    ))
}

/// Ascending indices of the edges of `h` contained in the union of `family`.
fn containment_list(h: &Hypergraph, family: &[usize]) -> Vec<u32> {
    let mut union = h.empty_set();
    for &i in family {
        union.union_with(h.edge(i));
    }
    h.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_subset(&union))
        .map(|(i, _)| i as u32)
        .collect()
}

/// Whether the sorted lists share an element. `touches` receives the number of
/// distinct list entries examined, which is at most the total list length.
fn lists_intersect(lists: &[&[u32]], touches: &mut u64) -> bool {
    let mut pos = vec![0usize; lists.len()];
    let mut target = 0u32;
    let result = 'merge: loop {
        let mut agreed = true;
        for (l, p) in lists.iter().zip(pos.iter_mut()) {
            while *p < l.len() && l[*p] < target {
                *p += 1;
            }
            if *p == l.len() {
                break 'merge false;
            }
            if l[*p] > target {
                target = l[*p];
                agreed = false;
            }
        }
        if agreed {
            break true;
        }
    };
    *touches = lists
        .iter()
        .zip(&pos)
        .map(|(l, &p)| (p + 1).min(l.len()) as u64)
        .sum();
    result
}

/// Finds the lexicographically first `k`-subfamily whose `(k-1)`-sub-lists
/// have empty common intersection.
fn containment_search(h: &Hypergraph, k: usize, config: BdConfig, stats: &mut BdStats) -> Option<Vec<usize>> {
    let m = h.m();
    let tables = binomial(m, k - 1).saturating_mul(m as u64);
    let table: Option<Vec<Vec<u32>>> = (tables <= config.memory_budget)
        .then(|| Colex::new(m, k - 1).map(|f| containment_list(h, &f)).collect());
    stats.lists_materialized = table.is_some();

    let mut sub = Vec::with_capacity(k - 1);
    let mut owned: Vec<Vec<u32>> = Vec::with_capacity(k);
    for family in Lex::new(m, k) {
        stats.families_checked += 1;
        owned.clear();
        let mut ranks = Vec::with_capacity(k);
        for skip in 0..k {
            sub.clear();
            sub.extend(family.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &e)| e));
            match &table {
                Some(_) => ranks.push(colex_rank(&sub) as usize),
                None => owned.push(containment_list(h, &sub)),
            }
        }
        let lists: Vec<&[u32]> = match &table {
            Some(t) => ranks.iter().map(|&r| t[r].as_slice()).collect(),
            None => owned.iter().map(Vec::as_slice).collect(),
        };
        let mut touches = 0;
        let hit = lists_intersect(&lists, &mut touches);
        stats.max_list_touches = stats.max_list_touches.max(touches);
        if !hit {
            return Some(family);
        }
    }
    None
}

/// Dispatches to the chosen decider. `Oracle` uses exhaustive search.
pub fn rank_at_least(h: &Hypergraph, k: usize, method: RankMethod) -> Result<Option<RankWitness>> {
    match method {
        RankMethod::Lookahead => rank_at_least_lookahead(h, k),
        RankMethod::Bd => rank_at_least_bd(h, k),
        RankMethod::Oracle => {
            check_input(h)?;
            let best = Oracle::default()
                .tr(h)?
                .into_iter()
                .max_by_key(VertexSet::len)
                .filter(|t| t.len() >= k);
            Ok(best.map(|t| RankWitness {
                transversal: t,
                certificate: Certificate::Exhaustive,
            }))
        }
    }
}

/// The transversal rank `k* = max |T|` over `T ∈ Tr(h)`, by ascending search.
pub fn transversal_rank(h: &Hypergraph, method: RankMethod) -> Result<usize> {
    check_input(h)?;
    let mut k = 0;
    while rank_at_least(h, k + 1, method)?.is_some() {
        k += 1;
    }
    Ok(k)
}
