//! Streaming enumeration of all minimal hitting sets.
//!
//! [`enumerate_tr`] runs the binary search tree over `(X, Y)` pairs, calling
//! [`extend`] at every node; nodes whose remaining solutions all have at most
//! one vertex beyond `X` are closed immediately. [`enumerate_incremental`]
//! instead grows a solution family `G` one verified counter-witness at a time.

use std::ops::ControlFlow;
use std::time::Instant;

use serde::Serialize;

use crate::extension::{extend, ExtensionOutcome};
use crate::hitting::minimize;
use crate::verify::{verify_tr, VerifyOutcome};
use crate::{Hypergraph, VertexSet};

/// Timing and work counters collected during one enumeration.
#[derive(Debug, Clone, Default, Serialize)]
pub struct DelayStats {
    pub outputs: u64,
    /// Nanoseconds from the start to each output (only when requested).
    pub output_times_ns: Vec<u64>,
    /// Largest gap between consecutive events (start, outputs, end).
    pub max_delay_ns: u64,
    pub total_ns: u64,
    pub extend_calls: u64,
    /// `extend_call_histogram[i]` = number of extend calls with `|X| = i`.
    pub extend_call_histogram: Vec<u64>,
    pub product_iterations: u64,
    /// Extend calls whose product loop exceeded `Δ^|X|` iterations.
    pub product_budget_violations: u64,
    /// Most extend calls made between two consecutive events.
    pub max_calls_between_outputs: u64,
    /// Largest solution seen.
    pub max_output_size: usize,
    /// Deepest explicit stack reached by the tree search.
    pub max_stack_depth: usize,
}

impl DelayStats {
    /// Largest `|X|` passed to extend, if it was called at all.
    pub fn max_extend_size(&self) -> Option<usize> {
        self.extend_call_histogram.iter().rposition(|&c| c > 0)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EnumOptions {
    /// Stop after this many solutions.
    pub limit: Option<usize>,
    /// Keep a timestamp per output in [`DelayStats::output_times_ns`].
    pub record_timestamps: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Tree,
    Incremental,
}

struct Recorder {
    opts: EnumOptions,
    start: Instant,
    last_ns: u64,
    calls_since_output: u64,
    stats: DelayStats,
}

impl Recorder {
    fn new(opts: EnumOptions) -> Self {
        Recorder {
            opts,
            start: Instant::now(),
            last_ns: 0,
            calls_since_output: 0,
            stats: DelayStats::default(),
        }
    }

    fn now_ns(&self) -> u64 {
        self.start.elapsed().as_nanos() as u64
    }

    fn mark(&mut self) {
        let now = self.now_ns();
        self.stats.max_delay_ns = self.stats.max_delay_ns.max(now - self.last_ns);
        self.last_ns = now;
        self.stats.max_calls_between_outputs =
            self.stats.max_calls_between_outputs.max(self.calls_since_output);
        self.calls_since_output = 0;
    }

    fn output(
        &mut self,
        t: &VertexSet,
        sink: &mut dyn FnMut(&VertexSet) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        self.mark();
        if self.opts.record_timestamps {
            self.stats.output_times_ns.push(self.last_ns);
        }
        self.stats.outputs += 1;
        self.stats.max_output_size = self.stats.max_output_size.max(t.len());
        let flow = sink(t);
        match self.opts.limit {
            Some(limit) if self.stats.outputs as usize >= limit => ControlFlow::Break(()),
            _ => flow,
        }
    }

    fn extend_call(&mut self, size: usize) {
        self.stats.extend_calls += 1;
        self.calls_since_output += 1;
        let hist = &mut self.stats.extend_call_histogram;
        if hist.len() <= size {
            hist.resize(size + 1, 0);
        }
        hist[size] += 1;
    }

    fn finish(mut self) -> DelayStats {
        self.mark();
        self.stats.total_ns = self.last_ns;
        self.stats
    }
}

/// Enumerates `Tr(h)` with the look-ahead tree search, streaming each minimal
/// hitting set exactly once.
pub fn enumerate_tr(h: &Hypergraph, mut sink: impl FnMut(&VertexSet)) -> DelayStats {
    enumerate_tr_with(h, EnumOptions::default(), &mut |t| {
        sink(t);
        ControlFlow::Continue(())
    })
}

/// [`enumerate_tr`] with options and a sink that may stop the search early.
///
/// `Tr(∅) = {∅}`; a hypergraph containing the empty edge has no solutions.
pub fn enumerate_tr_with(
    h: &Hypergraph,
    opts: EnumOptions,
    sink: &mut dyn FnMut(&VertexSet) -> ControlFlow<()>,
) -> DelayStats {
    let mut rec = Recorder::new(opts);
    if h.is_empty() {
        let _ = rec.output(&h.empty_set(), sink);
        return rec.finish();
    }
    if opts.limit == Some(0) {
        return rec.finish();
    }
    let delta = h.max_degree() as u128;
    let n = h.n();
    // include-branch is pushed last so it is explored first
    let mut stack = vec![(VertexSet::empty(n), VertexSet::empty(n))];
    while let Some((x, y)) = stack.pop() {
        rec.extend_call(x.len());
        let mut stopped = false;
        let report = extend(h, &x, &y, &mut |t| {
            if !stopped && rec.output(t, sink).is_break() {
                stopped = true;
            }
        })
        .expect("search nodes are disjoint pairs over a non-empty hypergraph");
        rec.stats.product_iterations += report.product_iterations;
        if report.product_iterations as u128 > delta.saturating_pow(x.len() as u32) {
            rec.stats.product_budget_violations += 1;
        }
        if stopped {
            break;
        }
        if let ExtensionOutcome::ContinueWith(skip) = report.outcome {
            let next = x
                .union(&skip)
                .complement()
                .first()
                .expect("a higher-order extension needs a free vertex");
            stack.push((x.clone(), skip.with(next)));
            stack.push((x.with(next), skip));
            rec.stats.max_stack_depth = rec.stats.max_stack_depth.max(stack.len());
        }
    }
    rec.finish()
}

/// Enumerates `Tr(h)` by repeatedly verifying the solutions found so far and
/// minimizing the complement of a counter-witness into a new solution.
pub fn enumerate_incremental(h: &Hypergraph, mut sink: impl FnMut(&VertexSet)) -> DelayStats {
    enumerate_incremental_with(h, EnumOptions::default(), &mut |t| {
        sink(t);
        ControlFlow::Continue(())
    })
}

pub fn enumerate_incremental_with(
    h: &Hypergraph,
    opts: EnumOptions,
    sink: &mut dyn FnMut(&VertexSet) -> ControlFlow<()>,
) -> DelayStats {
    let mut rec = Recorder::new(opts);
    if opts.limit == Some(0) {
        return rec.finish();
    }
    let mut found: Vec<VertexSet> = Vec::new();
    loop {
        let g = Hypergraph::new(h.n(), found.iter().cloned());
        let outcome = verify_tr(&g, h).expect("same universe");
        let t = match outcome {
            VerifyOutcome::Equal => break,
            VerifyOutcome::MissingSolution { s, t } => {
                debug_assert_eq!(minimize(h, &s.complement()).ok(), Some(t.clone()));
                t
            }
            VerifyOutcome::NotSubset(g) => {
                unreachable!("solution family left Tr(H): {g:?}")
            }
        };
        let flow = rec.output(&t, sink);
        found.push(t);
        if flow.is_break() {
            break;
        }
    }
    rec.finish()
}

/// Dispatches on [`Method`].
pub fn enumerate(
    h: &Hypergraph,
    method: Method,
    opts: EnumOptions,
    sink: &mut dyn FnMut(&VertexSet) -> ControlFlow<()>,
) -> DelayStats {
    match method {
        Method::Tree => enumerate_tr_with(h, opts, sink),
        Method::Incremental => enumerate_incremental_with(h, opts, sink),
    }
}
