//! The look-ahead extension step.
//!
//! Given disjoint vertex sets `X` (forced in) and `Y` (forced out), [`extend`]
//! emits every minimal hitting set `T` with `X ⊆ T ⊆ V \ Y` and `|T \ X| <= 1`,
//! then decides whether any such `T` with `|T \ X| >= 2` remains. If one does,
//! it also returns a larger exclusion set that every remaining solution avoids.

use crate::{Error, Hypergraph, Result, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionOutcome {
    /// No minimal extension with two or more new vertices exists.
    Halt,
    /// Higher-order extensions exist and all of them avoid this set.
    ContinueWith(VertexSet),
}

/// A candidate private edge of some `x ∈ X`, with the excluded vertices removed.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub edge: usize,
    pub reduced: VertexSet,
}

/// The edge families `extend` works on, all reduced by `Y` (i.e. `E \ Y`).
#[derive(Debug, Clone)]
pub struct ReducedFamilies {
    /// Members of `X`, ascending.
    pub members: Vec<VertexId>,
    /// For each member `x`, the edges meeting `X` exactly in `x`.
    pub candidates: Vec<Vec<Candidate>>,
    /// Edges disjoint from `X` as `(index, E \ Y)`.
    pub unhit: Vec<(usize, VertexSet)>,
    /// Vertices lying in every unhit reduced edge (empty if none are unhit).
    pub shared: VertexSet,
    /// Vertices lying in every candidate private edge of some member;
    /// adding one of them would make `X` redundant.
    pub blocking: VertexSet,
}

enum Prepared {
    /// Some edge lies inside `Y`, so nothing avoiding `Y` can hit it.
    Blocked,
    Ready(ReducedFamilies),
}

impl ReducedFamilies {
    fn prepare(h: &Hypergraph, x: &VertexSet, y: &VertexSet) -> Prepared {
        let n = h.n();
        let members = x.to_vec();
        let mut slot = vec![usize::MAX; n];
        for (i, &v) in members.iter().enumerate() {
            slot[v] = i;
        }
        let mut candidates = vec![Vec::new(); members.len()];
        let mut unhit = Vec::new();
        for (i, e) in h.edges().iter().enumerate() {
            if e.is_subset(y) {
                return Prepared::Blocked;
            }
            if !e.intersects(x) {
                unhit.push((i, e.difference(y)));
            } else if let Some(v) = e.single_common(x) {
                candidates[slot[v]].push(Candidate {
                    edge: i,
                    reduced: e.difference(y),
                });
            }
        }
        let shared = match unhit.split_first() {
            Some(((_, first), rest)) => rest.iter().fold(first.clone(), |mut acc, (_, e)| {
                acc.intersect_with(e);
                acc
            }),
            None => VertexSet::empty(n),
        };
        let mut blocking = VertexSet::empty(n);
        for family in &candidates {
            if let Some((first, rest)) = family.split_first() {
                let core = rest.iter().fold(first.reduced.clone(), |mut acc, c| {
                    acc.intersect_with(&c.reduced);
                    acc
                });
                blocking.union_with(&core);
            }
        }
        Prepared::Ready(ReducedFamilies {
            members,
            candidates,
            unhit,
            shared,
            blocking,
        })
    }

    /// `Π |H*_x|`, saturating.
    pub fn product_size(&self) -> u128 {
        self.candidates
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
    }

    /// Walks the Cartesian product of candidate families in lexicographic order
    /// looking for a choice whose union with `shared` contains no unhit edge.
    /// Returns the chosen position in each family.
    fn search(&self, iterations: &mut u64) -> Option<Vec<usize>> {
        let k = self.members.len();
        let mut choice = vec![0usize; k];
        // covered[i] = shared ∪ chosen candidates of members 0..i
        let mut covered = vec![self.shared.clone(); k + 1];
        for i in 0..k {
            let (lo, hi) = covered.split_at_mut(i + 1);
            hi[0].clone_from(&lo[i]);
            hi[0].union_with(&self.candidates[i][0].reduced);
        }
        loop {
            *iterations += 1;
            let w = &covered[k];
            if self.unhit.iter().all(|(_, e)| !e.is_subset(w)) {
                return Some(choice);
            }
            let mut j = k;
            loop {
                if j == 0 {
                    return None;
                }
                j -= 1;
                choice[j] += 1;
                if choice[j] < self.candidates[j].len() {
                    break;
                }
                choice[j] = 0;
            }
            for i in j..k {
                let (lo, hi) = covered.split_at_mut(i + 1);
                hi[0].clone_from(&lo[i]);
                hi[0].union_with(&self.candidates[i][choice[i]].reduced);
            }
        }
    }
}

/// Outcome of one [`extend`] call plus its work counters.
#[derive(Debug, Clone)]
pub struct ExtendReport {
    pub outcome: ExtensionOutcome,
    /// Number of product combinations examined.
    pub product_iterations: u64,
    /// `Π |H*_x|` over the members of `X` (0 when the call stopped before building it).
    pub product_size: u128,
    pub emitted: usize,
}

fn validate(h: &Hypergraph, x: &VertexSet, y: &VertexSet) -> Result<()> {
    if x.universe() != h.n() || y.universe() != h.n() {
        return Err(Error::UniverseMismatch {
            left: h.n(),
            right: if x.universe() != h.n() { x.universe() } else { y.universe() },
        });
    }
    if x.intersects(y) {
        return Err(Error::OverlappingSets);
    }
    if h.is_empty() {
        return Err(Error::EmptyHypergraph);
    }
    Ok(())
}

/// Emits all 0- and 1-extensions of `x` avoiding `y` into `sink` (in the order
/// `x` itself, then `x ∪ {s}` for ascending `s`) and decides whether
/// higher-order extensions exist.
pub fn extend(
    h: &Hypergraph,
    x: &VertexSet,
    y: &VertexSet,
    sink: &mut dyn FnMut(&VertexSet),
) -> Result<ExtendReport> {
    validate(h, x, y)?;
    let mut report = ExtendReport {
        outcome: ExtensionOutcome::Halt,
        product_iterations: 0,
        product_size: 0,
        emitted: 0,
    };
    let fam = match ReducedFamilies::prepare(h, x, y) {
        Prepared::Blocked => return Ok(report),
        Prepared::Ready(f) => f,
    };
    report.product_size = fam.product_size();
    if fam.candidates.iter().any(Vec::is_empty) {
        return Ok(report);
    }
    if fam.unhit.is_empty() {
        sink(x);
        report.emitted = 1;
        return Ok(report);
    }
    for s in fam.shared.difference(&fam.blocking).iter() {
        sink(&x.with(s));
        report.emitted += 1;
    }
    if fam.unhit.len() == 1 {
        return Ok(report);
    }
    if fam.search(&mut report.product_iterations).is_some() {
        let mut skip = y.union(&fam.shared);
        skip.union_with(&fam.blocking);
        skip.difference_with(x);
        report.outcome = ExtensionOutcome::ContinueWith(skip);
    }
    Ok(report)
}

/// Whether some minimal hitting set contains `x`, avoids `y`, and has at least
/// two vertices outside `x`.
pub fn has_higher_order_extension(h: &Hypergraph, x: &VertexSet, y: &VertexSet) -> Result<bool> {
    let report = extend(h, x, y, &mut |_| {})?;
    Ok(matches!(report.outcome, ExtensionOutcome::ContinueWith(_)))
}

/// Certificate that `X` has a higher-order extension avoiding `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HigherOrderWitness {
    /// Vertices common to all edges missed by `X`.
    pub shared: VertexSet,
    /// `(x, edge index)`: a candidate private edge chosen for each member.
    pub private_edges: Vec<(VertexId, usize)>,
    pub product_iterations: u64,
}

/// Like [`has_higher_order_extension`], but returns the edge selection that
/// certifies the answer.
pub fn higher_order_witness(
    h: &Hypergraph,
    x: &VertexSet,
    y: &VertexSet,
) -> Result<Option<HigherOrderWitness>> {
    validate(h, x, y)?;
    let fam = match ReducedFamilies::prepare(h, x, y) {
        Prepared::Blocked => return Ok(None),
        Prepared::Ready(f) => f,
    };
    if fam.candidates.iter().any(Vec::is_empty) || fam.unhit.len() <= 1 {
        return Ok(None);
    }
    let mut iterations = 0;
    Ok(fam.search(&mut iterations).map(|choice| HigherOrderWitness {
        private_edges: fam
            .members
            .iter()
            .zip(&choice)
            .zip(&fam.candidates)
            .map(|((&v, &c), family)| (v, family[c].edge))
            .collect(),
        shared: fam.shared.clone(),
        product_iterations: iterations,
    }))
}
