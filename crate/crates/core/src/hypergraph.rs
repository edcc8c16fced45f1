//! The hypergraph type and its structural transforms.

use std::collections::HashSet;

use serde::Serialize;

use crate::combinations::Colex;
use crate::{Error, Result, VertexId, VertexSet};

/// A hypergraph over the vertex universe `{0, .., n-1}`.
///
/// Edges keep their input order and are deduplicated on construction.
/// Values are immutable once built; every transform returns a fresh hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    names: Option<Vec<String>>,
}

/// Per-vertex degrees and the maximum degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
}

impl Hypergraph {
    /// Builds a hypergraph, silently dropping repeated edges.
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: usize, edges: I) -> Self {
        Self::with_duplicate_count(n, edges).0
    }

    /// Builds a hypergraph and reports how many repeated edges were dropped.
    pub fn with_duplicate_count<I: IntoIterator<Item = VertexSet>>(n: usize, edges: I) -> (Self, usize) {
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        let mut dropped = 0;
        for e in edges {
            assert_eq!(e.universe(), n, "edge over a different universe");
            if seen.insert(e.clone()) {
                kept.push(e);
            } else {
                dropped += 1;
            }
        }
        (
            Hypergraph {
                n,
                edges: kept,
                names: None,
            },
            dropped,
        )
    }

    /// Convenience constructor from 0-based index lists.
    pub fn from_lists<E: AsRef<[VertexId]>>(n: usize, edges: &[E]) -> Self {
        Self::new(
            n,
            edges
                .iter()
                .map(|e| VertexSet::from_indices(n, e.as_ref().iter().copied())),
        )
    }

    /// Attaches a vertex-name table (one name per vertex).
    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n);
        self.names = Some(names);
        self
    }

    fn derive(&self, edges: Vec<VertexSet>) -> Self {
        let mut h = Self::new(self.n, edges);
        h.names = self.names.clone();
        h
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &VertexSet {
        &self.edges[i]
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// `true` when the hypergraph has no edges.
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn has_empty_edge(&self) -> bool {
        self.edges.iter().any(VertexSet::is_empty)
    }

    pub fn universe(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n)
    }

    pub fn vertex_name(&self, v: VertexId) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    pub fn lookup(&self, name: &str) -> Option<VertexId> {
        match &self.names {
            Some(names) => names.iter().position(|s| s == name),
            None => name.parse::<usize>().ok().filter(|&i| i >= 1 && i <= self.n).map(|i| i - 1),
        }
    }

    /// Parses a whitespace- or comma-separated list of vertex names.
    /// An empty string or the token `{}` denotes the empty set.
    pub fn parse_set(&self, text: &str) -> Result<VertexSet> {
        let mut s = self.empty_set();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            if tok == "{}" {
                continue;
            }
            let v = self.lookup(tok).ok_or_else(|| Error::UnknownVertexName(tok.to_string()))?;
            s.insert(v);
        }
        Ok(s)
    }

    /// Renders a set as its vertex names in ascending vertex order; `{}` when empty.
    pub fn format_set(&self, s: &VertexSet) -> String {
        if s.is_empty() {
            return "{}".to_string();
        }
        s.iter().map(|v| self.vertex_name(v)).collect::<Vec<_>>().join(" ")
    }

    /// `rank(H) = max |E|`, with `rank(∅) = 0`.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = vec![0; self.n];
        for e in &self.edges {
            for v in e {
                degrees[v] += 1;
            }
        }
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile { degrees, max_degree }
    }

    pub fn max_degree(&self) -> usize {
        self.degree_profile().max_degree
    }

    pub fn is_uniform(&self, r: usize) -> bool {
        self.edges.iter().all(|e| e.len() == r)
    }

    pub(crate) fn check_uniform(&self, r: usize) -> Result<()> {
        match self.edges.iter().find(|e| e.len() != r) {
            Some(e) => Err(Error::NotUniform {
                expected: r,
                found: e.len(),
            }),
            None => Ok(()),
        }
    }

    /// No edge is contained in another.
    pub fn is_sperner(&self) -> bool {
        self.minimal_edge_indices().len() == self.edges.len()
    }

    /// Indices of the inclusion-wise minimal edges, in input order.
    pub fn minimal_edge_indices(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| {
                let e = &self.edges[i];
                !self
                    .edges
                    .iter()
                    .enumerate()
                    .any(|(j, f)| j != i && f.is_subset(e))
            })
            .collect()
    }

    /// `min(H)`: the inclusion-wise minimal edges, relative order preserved.
    pub fn minimize_edges(&self) -> Self {
        let keep = self.minimal_edge_indices();
        self.derive(keep.into_iter().map(|i| self.edges[i].clone()).collect())
    }

    /// `{ V \ E : E ∈ H }`, edge order preserved.
    pub fn edge_complement(&self) -> Self {
        self.derive(self.edges.iter().map(VertexSet::complement).collect())
    }

    /// All `r`-subsets of the universe that are not edges, in colex order.
    pub fn uniform_complement(&self, r: usize) -> Result<Self> {
        self.check_uniform(r)?;
        let present: HashSet<&VertexSet> = self.edges.iter().collect();
        let edges = Colex::new(self.n, r)
            .map(|c| VertexSet::from_indices(self.n, c))
            .filter(|s| !present.contains(s))
            .collect();
        Ok(self.derive(edges))
    }

    /// The k-section `[H]_k`: every k-set contained in some edge, listed once,
    /// in order of first appearance (edges in input order, colex within an edge).
    pub fn k_section(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("section size k must be at least 1".into()));
        }
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for e in &self.edges {
            let members = e.to_vec();
            for c in Colex::new(members.len(), k) {
                let s = VertexSet::from_indices(self.n, c.into_iter().map(|i| members[i]));
                if seen.insert(s.clone()) {
                    out.push(s);
                }
            }
        }
        Ok(self.derive(out))
    }

    /// Re-expresses this hypergraph over a larger named universe.
    /// Every current vertex name must occur in `names`.
    pub fn over_universe(&self, names: &[String]) -> Result<Self> {
        let n = names.len();
        let map: Vec<VertexId> = (0..self.n)
            .map(|v| {
                let name = self.vertex_name(v);
                names
                    .iter()
                    .position(|s| *s == name)
                    .ok_or(Error::UnknownVertexName(name))
            })
            .collect::<Result<_>>()?;
        let edges = self
            .edges
            .iter()
            .map(|e| VertexSet::from_indices(n, e.iter().map(|v| map[v])));
        Ok(Self::new(n, edges).with_names(names.to_vec()))
    }

    /// The vertex names in index order (defaults filled in).
    pub fn vertex_names(&self) -> Vec<String> {
        (0..self.n).map(|v| self.vertex_name(v)).collect()
    }
}

/// Sorted edge dictionary with logarithmic membership queries.
#[derive(Clone, Debug)]
pub struct EdgeIndex {
    sorted: Vec<VertexSet>,
}

impl EdgeIndex {
    pub fn new(h: &Hypergraph) -> Self {
        let mut sorted = h.edges().to_vec();
        sorted.sort();
        EdgeIndex { sorted }
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.sorted.binary_search(s).is_ok()
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }
}
