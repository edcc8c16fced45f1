//! Hitting-set predicates and the linear-pass hitting-set minimizer.

use std::collections::VecDeque;

use crate::{Error, Hypergraph, Result, VertexId, VertexSet};

/// `true` iff `t` intersects every edge of `h`.
pub fn is_hitting_set(h: &Hypergraph, t: &VertexSet) -> bool {
    h.edges().iter().all(|e| e.intersects(t))
}

/// Result of a minimality check: each member of `t` paired with the index of
/// its first private edge (an edge `E` with `E ∩ t = {v}`), if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityReport {
    pub hits_all: bool,
    pub private_edges: Vec<(VertexId, Option<usize>)>,
}

impl MinimalityReport {
    pub fn is_minimal(&self) -> bool {
        self.hits_all && self.private_edges.iter().all(|(_, p)| p.is_some())
    }
}

pub fn minimality_report(h: &Hypergraph, t: &VertexSet) -> MinimalityReport {
    let hits_all = is_hitting_set(h, t);
    let mut private: Vec<(VertexId, Option<usize>)> = t.iter().map(|v| (v, None)).collect();
    for (i, e) in h.edges().iter().enumerate() {
        if let Some(v) = e.single_common(t) {
            let slot = private.iter_mut().find(|(u, _)| *u == v).expect("member of t");
            if slot.1.is_none() {
                slot.1 = Some(i);
            }
        }
    }
    MinimalityReport {
        hits_all,
        private_edges: private,
    }
}

/// `true` iff `t` hits every edge and each of its vertices owns a private edge.
pub fn is_minimal_hitting_set(h: &Hypergraph, t: &VertexSet) -> bool {
    minimality_report(h, t).is_minimal()
}

/// Work counters for [`minimize_with_stats`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MinimizeStats {
    /// Number of `(vertex, edge)` incidences between `S` and `H`.
    pub incidences: u64,
    /// Adjacency-list entries written or read.
    pub adjacency_touches: u64,
}

/// Shrinks a hitting set `s` to a minimal hitting set `T ⊆ s`.
///
/// Builds the bipartite incidence graph between `s` and the edges, then
///  1. scans edges in input order and takes the unique neighbor of every
///     degree-1 edge into `T`, deleting its closed neighborhood;
///  2. while edges remain, drops the lowest-index alive neighbor of the
///     lowest-index alive edge and applies the degree-1 rule to any edge
///     left with a single neighbor.
///
/// Every adjacency entry is touched a constant number of times, so the work
/// is `O(m |s|)`.
pub fn minimize(h: &Hypergraph, s: &VertexSet) -> Result<VertexSet> {
    minimize_with_stats(h, s).map(|(t, _)| t)
}

pub fn minimize_with_stats(h: &Hypergraph, s: &VertexSet) -> Result<(VertexSet, MinimizeStats)> {
    if let Some(edge) = h.edges().iter().position(|e| !e.intersects(s)) {
        return Err(Error::NotHittingSet { edge });
    }
    let mut graph = Incidence::build(h, s);
    graph.run();
    let t = VertexSet::from_indices(h.n(), graph.taken.iter().map(|&i| graph.vertices[i]));
    let stats = MinimizeStats {
        incidences: graph.incidences,
        adjacency_touches: graph.touches,
    };
    Ok((t, stats))
}

/// Scratch incidence graph for one minimization. Vertices are local indices
/// into `vertices`; all adjacency lists are ascending.
struct Incidence {
    vertices: Vec<VertexId>,
    edge_nbrs: Vec<Vec<u32>>,
    vertex_edges: Vec<Vec<u32>>,
    degree: Vec<u32>,
    cursor: Vec<usize>,
    edge_alive: Vec<bool>,
    vertex_alive: Vec<bool>,
    taken: Vec<usize>,
    queue: VecDeque<usize>,
    incidences: u64,
    touches: u64,
}

impl Incidence {
    fn build(h: &Hypergraph, s: &VertexSet) -> Self {
        let vertices = s.to_vec();
        let mut local = vec![u32::MAX; h.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i as u32;
        }
        let mut edge_nbrs = Vec::with_capacity(h.m());
        let mut vertex_edges = vec![Vec::new(); vertices.len()];
        let mut incidences = 0u64;
        for (ei, e) in h.edges().iter().enumerate() {
            let nbrs: Vec<u32> = e.intersection(s).iter().map(|v| local[v]).collect();
            for &u in &nbrs {
                vertex_edges[u as usize].push(ei as u32);
            }
            incidences += nbrs.len() as u64;
            edge_nbrs.push(nbrs);
        }
        let degree = edge_nbrs.iter().map(|l| l.len() as u32).collect();
        Incidence {
            edge_alive: vec![true; h.m()],
            vertex_alive: vec![true; vertices.len()],
            cursor: vec![0; h.m()],
            vertices,
            edge_nbrs,
            vertex_edges,
            degree,
            taken: Vec::new(),
            queue: VecDeque::new(),
            incidences,
            touches: 2 * incidences,
        }
    }

    /// Lowest alive neighbor of edge `e`, advancing its cursor past it.
    fn next_alive_neighbor(&mut self, e: usize) -> usize {
        loop {
            let u = self.edge_nbrs[e][self.cursor[e]] as usize;
            self.touches += 1;
            self.cursor[e] += 1;
            if self.vertex_alive[u] {
                return u;
            }
        }
    }

    /// Degree-1 rule: the unique neighbor joins `T`; its closed neighborhood goes.
    fn take_private(&mut self, e: usize) {
        let u = self.next_alive_neighbor(e);
        self.taken.push(u);
        self.vertex_alive[u] = false;
        for i in 0..self.vertex_edges[u].len() {
            self.touches += 1;
            self.edge_alive[self.vertex_edges[u][i] as usize] = false;
        }
    }

    fn drain_queue(&mut self) {
        while let Some(e) = self.queue.pop_front() {
            if self.edge_alive[e] {
                debug_assert_eq!(self.degree[e], 1);
                self.take_private(e);
            }
        }
    }

    fn run(&mut self) {
        for e in 0..self.edge_nbrs.len() {
            if self.edge_alive[e] && self.degree[e] == 1 {
                self.take_private(e);
            }
        }
        let mut next_edge = 0;
        loop {
            while next_edge < self.edge_alive.len() && !self.edge_alive[next_edge] {
                next_edge += 1;
            }
            if next_edge == self.edge_alive.len() {
                break;
            }
            // every alive edge has at least two alive neighbors here
            let u = self.next_alive_neighbor(next_edge);
            self.vertex_alive[u] = false;
            for i in 0..self.vertex_edges[u].len() {
                self.touches += 1;
                let f = self.vertex_edges[u][i] as usize;
                if self.edge_alive[f] {
                    self.degree[f] -= 1;
                    if self.degree[f] == 1 {
                        self.queue.push_back(f);
                    }
                }
            }
            self.drain_queue();
        }
        self.taken.sort_unstable();
    }
}
