//! Maximal cliques of graphs, and maximal hypercliques / independent sets of
//! uniform hypergraphs.
//!
//! The graph enumerator is a reverse search over maximal cliques. Each
//! clique `K` other than the root has a parent obtained by closing a prefix of
//! `K`; a candidate generated from `K` at vertex `i` is kept only if its own
//! parent is `K`, cut at `i`. Emitting at even depths on entry and at odd depths on exit
//! bounds the work between two outputs independently of how many were found.

use std::ops::ControlFlow;

use crate::enumeration::{enumerate_tr_with, EnumOptions};
use crate::{Error, Hypergraph, Result, VertexId, VertexSet};

/// Streaming maximal-clique enumeration of a simple graph.
///
/// Yields every maximal clique once, including single isolated vertices
/// (or `∅` for the empty universe); callers filter by size.
#[derive(Debug, Clone)]
pub struct MaximalCliques {
    adj: Vec<VertexSet>,
    stack: Vec<Frame>,
    started: bool,
}

#[derive(Debug, Clone)]
struct Frame {
    clique: VertexSet,
    next: VertexId,
    depth: usize,
}

impl MaximalCliques {
    pub fn new(g: &Hypergraph) -> Result<Self> {
        g.check_uniform(2)?;
        let n = g.n();
        let mut adj = vec![VertexSet::empty(n); n];
        for e in g.edges() {
            let (u, v) = (e.to_vec()[0], e.to_vec()[1]);
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(MaximalCliques {
            adj,
            stack: Vec::new(),
            started: false,
        })
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    /// Greedy closure: adds vertices in ascending order while they stay
    /// adjacent to everything chosen so far.
    fn closure(&self, seed: &VertexSet) -> VertexSet {
        let mut k = seed.clone();
        let mut common = VertexSet::full(self.n());
        for v in seed.iter() {
            common.intersect_with(&self.adj[v]);
        }
        while let Some(v) = common.first() {
            k.insert(v);
            common.intersect_with(&self.adj[v]);
        }
        k
    }

    fn prefix(k: &VertexSet, below: VertexId) -> VertexSet {
        VertexSet::from_indices(k.universe(), k.iter().take_while(|&v| v < below))
    }

    /// The parent clique and the index `i` it was cut at: the largest `i`
    /// whose prefix `K ∩ {0..i-1}` closes to something other than `K`.
    fn parent(&self, k: &VertexSet) -> Option<(VertexId, VertexSet)> {
        (0..=self.n())
            .rev()
            .map(|i| (i, self.closure(&Self::prefix(k, i))))
            .find(|(_, c)| c != k)
    }

    fn child(&self, k: &VertexSet, i: VertexId) -> Option<VertexSet> {
        if k.contains(i) {
            return None;
        }
        let seed = Self::prefix(k, i).intersection(&self.adj[i]).with(i);
        let candidate = self.closure(&seed);
        match self.parent(&candidate) {
            Some((cut, p)) if cut == i && &p == k => Some(candidate),
            _ => None,
        }
    }
}

impl Iterator for MaximalCliques {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if !self.started {
            self.started = true;
            let root = self.closure(&VertexSet::empty(self.n()));
            self.stack.push(Frame {
                clique: root.clone(),
                next: 0,
                depth: 0,
            });
            return Some(root);
        }
        loop {
            let top = self.stack.last_mut()?;
            let (clique, start, depth) = (top.clique.clone(), top.next, top.depth);
            let found = (start..self.n()).find_map(|i| self.child(&clique, i).map(|c| (i, c)));
            match found {
                Some((i, c)) => {
                    self.stack.last_mut().expect("non-empty").next = i + 1;
                    self.stack.push(Frame {
                        clique: c.clone(),
                        next: 0,
                        depth: depth + 1,
                    });
                    if (depth + 1) % 2 == 0 {
                        return Some(c);
                    }
                }
                None => {
                    self.stack.pop();
                    if depth % 2 == 1 {
                        return Some(clique);
                    }
                }
            }
        }
    }
}

/// Streams the maximal cliques of at least two vertices of the graph `g`.
/// Returns the number emitted.
pub fn enumerate_maximal_cliques(
    g: &Hypergraph,
    limit: Option<usize>,
    mut sink: impl FnMut(&VertexSet),
) -> Result<usize> {
    let mut count = 0;
    for c in MaximalCliques::new(g)? {
        if limit.is_some_and(|l| count >= l) {
            break;
        }
        if c.len() >= 2 {
            sink(&c);
            count += 1;
        }
    }
    Ok(count)
}

fn check_order(r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidParameter("uniformity must be at least 1".into()));
    }
    Ok(())
}

// Emits V \ T for every T in Tr(h) with at least `floor` vertices left.
fn complements_of_transversals(
    h: &Hypergraph,
    floor: usize,
    limit: Option<usize>,
    sink: &mut dyn FnMut(&VertexSet),
) -> usize {
    let mut count = 0;
    if limit == Some(0) {
        return 0;
    }
    enumerate_tr_with(h, EnumOptions::default(), &mut |t| {
        let c = t.complement();
        if c.len() < floor {
            return ControlFlow::Continue(());
        }
        sink(&c);
        count += 1;
        if limit.is_some_and(|l| count >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    count
}

/// Streams the maximal hypercliques (sets of at least `r` vertices whose
/// `r`-subsets are all edges) of the `r`-uniform `h`, as complements of the
/// minimal hitting sets of its uniform complement.
pub fn enumerate_maximal_hypercliques(
    h: &Hypergraph,
    r: usize,
    limit: Option<usize>,
    mut sink: impl FnMut(&VertexSet),
) -> Result<usize> {
    check_order(r)?;
    let non_edges = h.uniform_complement(r)?;
    Ok(complements_of_transversals(&non_edges, r, limit, &mut sink))
}

/// Streams the maximal independent sets (sets containing no edge) of the
/// `r`-uniform `h`. No size floor applies.
pub fn enumerate_maximal_independent_sets(
    h: &Hypergraph,
    r: usize,
    limit: Option<usize>,
    mut sink: impl FnMut(&VertexSet),
) -> Result<usize> {
    check_order(r)?;
    h.check_uniform(r)?;
    Ok(complements_of_transversals(h, 0, limit, &mut sink))
}
