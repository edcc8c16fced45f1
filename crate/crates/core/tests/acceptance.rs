//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion fails.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{corpus, is_conformality_counterexample, random_subset, sorted};
use transversal::cliques::{enumerate_maximal_hypercliques, enumerate_maximal_independent_sets, MaximalCliques};
use transversal::conformal::{conformal_degree, is_k_conformal, Conformality};
use transversal::enumeration::{enumerate_tr, enumerate_tr_with, DelayStats, EnumOptions};
use transversal::extension::{extend, ExtensionOutcome};
use transversal::generate::{moon_moser, random_uniform, with_transversal_rank};
use transversal::hitting::{is_minimal_hitting_set, minimize_with_stats};
use transversal::oracle::Oracle;
use transversal::rank::{overlap_set, rank_at_least_bd_with, rank_at_least_lookahead, BdConfig, Certificate};
use transversal::verify::{verify_tr, VerifyOutcome};
use transversal::{Error, Hypergraph, VertexSet};

const CORPUS_SIZE: usize = 600;
const EXTENSION_TRIPLES_PER_INSTANCE: usize = 5;
const MIN_EXTENSION_TRIPLES: usize = 2000;
const MINIMIZE_TOUCH_FACTOR: u64 = 4;
const DELAY_RATIO_LIMIT: f64 = 10.0;
const DELAY_REPETITIONS: usize = 25;
const MOON_MOSER_N: usize = 15;

struct Verdict {
    passed: bool,
    detail: String,
}

impl Verdict {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Verdict {
            passed,
            detail: detail.into(),
        }
    }
}

fn oracle() -> Oracle {
    Oracle::default()
}

fn enumerate_all(h: &Hypergraph) -> (Vec<VertexSet>, DelayStats) {
    let mut out = Vec::new();
    let stats = enumerate_tr(h, |t| out.push(t.clone()));
    (out, stats)
}

fn criterion_1(corpus: &[Hypergraph]) -> Verdict {
    let mut failures = Vec::new();
    let (mut empty_graphs, mut empty_edges) = (0, 0);
    for (i, h) in corpus.iter().enumerate() {
        empty_graphs += h.is_empty() as usize;
        empty_edges += h.has_empty_edge() as usize;
        let (out, _) = enumerate_all(h);
        let distinct: HashSet<_> = out.iter().cloned().collect();
        if distinct.len() != out.len() || sorted(out) != sorted(oracle().tr(h).unwrap()) {
            failures.push(i);
        }
    }
    let ok = failures.is_empty() && corpus.len() >= 500 && empty_graphs > 0 && empty_edges > 0;
    Verdict::new(
        ok,
        format!(
            "{} instances ({} with no edges, {} with the empty edge), mismatches at {:?}",
            corpus.len(),
            empty_graphs,
            empty_edges,
            failures
        ),
    )
}

fn criterion_2(corpus: &[Hypergraph]) -> Verdict {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (i, h) in corpus.iter().enumerate() {
        if h.is_empty() || h.has_empty_edge() {
            continue;
        }
        checked += 1;
        let kstar = oracle().rank(h).unwrap();
        let (_, stats) = enumerate_all(h);
        if stats.max_extend_size().is_some_and(|x| x + 1 > kstar) {
            failures.push(i);
        }
    }
    Verdict::new(
        failures.is_empty(),
        format!("{checked} instances with Tr(H) not in {{∅, {{∅}}}}, violations at {failures:?}"),
    )
}

struct ExtensionTally {
    triples: usize,
    continues: usize,
    failures: Vec<String>,
    budget_checked: u64,
    budget_violations: u64,
}

fn extension_triples(corpus: &[Hypergraph]) -> ExtensionTally {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut tally = ExtensionTally {
        triples: 0,
        continues: 0,
        failures: Vec::new(),
        budget_checked: 0,
        budget_violations: 0,
    };
    for (i, h) in corpus.iter().enumerate() {
        if h.is_empty() {
            continue;
        }
        let solutions = oracle().tr(h).unwrap();
        let delta = h.max_degree() as u128;
        for j in 0..EXTENSION_TRIPLES_PER_INSTANCE {
            // half the triples are drawn around a known solution
            let (x, y) = if j % 2 == 0 && !solutions.is_empty() {
                let t = &solutions[rng.gen_range(0..solutions.len())];
                let x = random_subset(&mut rng, t, 0.5);
                let y = random_subset(&mut rng, &t.complement(), 0.3);
                (x, y)
            } else {
                let x = random_subset(&mut rng, &h.universe(), 0.3);
                let y = random_subset(&mut rng, &x.complement(), 0.3);
                (x, y)
            };
            tally.triples += 1;
            let mut emitted = Vec::new();
            let report = extend(h, &x, &y, &mut |t| emitted.push(t.clone())).unwrap();
            tally.budget_checked += 1;
            if report.product_iterations as u128 > delta.pow(x.len() as u32) {
                tally.budget_violations += 1;
            }
            let ext = oracle().extensions(h, &x, &y).unwrap();
            let expected: Vec<VertexSet> = ext.zero.iter().chain(&ext.one).cloned().collect();
            let verdict_ok = match &report.outcome {
                ExtensionOutcome::Halt => ext.higher.is_empty(),
                ExtensionOutcome::ContinueWith(yp) => {
                    tally.continues += 1;
                    !ext.higher.is_empty()
                        && y.is_subset(yp)
                        && yp.is_disjoint(&x)
                        && ext.higher.iter().all(|t| t.is_disjoint(yp))
                }
            };
            if emitted != expected || !verdict_ok {
                tally.failures.push(format!("instance {i}, X={x:?}, Y={y:?}"));
            }
        }
    }
    tally
}

fn criterion_3(tally: &ExtensionTally) -> Verdict {
    Verdict::new(
        tally.failures.is_empty() && tally.triples >= MIN_EXTENSION_TRIPLES,
        format!(
            "{} triples ({} continue verdicts), mismatches: {:?}",
            tally.triples,
            tally.continues,
            tally.failures.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn criterion_4(corpus: &[Hypergraph]) -> Verdict {
    let mut checks = 0;
    let mut failures = Vec::new();
    for (i, h) in corpus.iter().enumerate() {
        if h.has_empty_edge() {
            let undefined = rank_at_least_lookahead(h, 1) == Err(Error::EmptyEdge)
                && rank_at_least_bd_with(h, 1, BdConfig::default()).err() == Some(Error::EmptyEdge);
            if !undefined {
                failures.push(format!("instance {i}: empty edge accepted"));
            }
            continue;
        }
        let kstar = oracle().rank(h).unwrap();
        for k in 0..=h.n() + 1 {
            checks += 1;
            let la = rank_at_least_lookahead(h, k).unwrap();
            let (bd, _) = rank_at_least_bd_with(h, k, BdConfig::default()).unwrap();
            let expected = kstar >= k;
            let mut ok = la.is_some() == expected && bd.is_some() == expected;
            for w in la.iter().chain(bd.iter()) {
                ok &= is_minimal_hitting_set(h, &w.transversal) && w.transversal.len() >= k;
                match &w.certificate {
                    Certificate::Lookahead { search_space, .. } => {
                        ok &= w.transversal.is_subset(search_space);
                    }
                    Certificate::Overlap { edges, overlap } => {
                        ok &= *overlap == overlap_set(h, edges)
                            && h.edges().iter().all(|e| !e.is_subset(overlap))
                            && w.transversal.is_disjoint(overlap);
                    }
                    _ => {}
                }
            }
            if !ok {
                failures.push(format!("instance {i}, k={k}"));
            }
        }
    }
    Verdict::new(
        failures.is_empty(),
        format!("{checks} (instance, k) decisions, mismatches: {:?}", &failures[..failures.len().min(3)]),
    )
}

fn criterion_5(corpus: &[Hypergraph]) -> Verdict {
    let mut checks = 0;
    let mut failures = Vec::new();
    for (i, h) in corpus.iter().enumerate() {
        // The transversal rank is undefined when Tr(H) is empty.
        if h.has_empty_edge() {
            continue;
        }
        let complement = h.edge_complement();
        let brute_rank = oracle().rank(h).unwrap();
        let brute_degree = oracle().conformal_degree(&complement).unwrap();
        let fast_degree = conformal_degree(&complement).unwrap();
        for k in 0..=h.n() + 1 {
            checks += 1;
            let fast_rank = rank_at_least_lookahead(h, k).unwrap().is_some();
            if (brute_rank >= k) != (brute_degree >= k) || fast_rank != (fast_degree >= k) {
                failures.push((i, k));
            }
        }
    }
    Verdict::new(
        failures.is_empty(),
        format!("{checks} (instance, k) pairs, violations: {failures:?}"),
    )
}

fn criterion_6(corpus: &[Hypergraph]) -> Verdict {
    let mut checks = 0;
    let mut counterexamples = 0;
    let mut failures = Vec::new();
    for (i, h) in corpus.iter().enumerate().filter(|(_, h)| h.n() <= 7) {
        for k in 1..=h.n() + 1 {
            checks += 1;
            let brute = oracle().is_k_conformal(h, k).unwrap();
            let ok = match is_k_conformal(h, k).unwrap() {
                Conformality::Conformal => brute.is_none(),
                Conformality::Counterexample(s) => {
                    counterexamples += 1;
                    brute.is_some() && s.len() > k && is_conformality_counterexample(h, &s, k)
                }
            };
            if !ok {
                failures.push((i, k));
            }
        }
        if conformal_degree(h).unwrap() != oracle().conformal_degree(h).unwrap() {
            failures.push((i, 0));
        }
    }
    Verdict::new(
        failures.is_empty(),
        format!("{checks} (instance, k) checks, {counterexamples} counterexamples re-validated, mismatches: {failures:?}"),
    )
}

fn check_verify(g: &Hypergraph, h: &Hypergraph, truth: &[VertexSet]) -> bool {
    let expected_equal = sorted(g.edges().to_vec()) == sorted(truth.to_vec());
    match verify_tr(g, h).unwrap() {
        VerifyOutcome::Equal => expected_equal,
        VerifyOutcome::NotSubset(bad) => {
            !expected_equal && g.edges().contains(&bad) && !truth.contains(&bad)
        }
        VerifyOutcome::MissingSolution { s, t } => {
            !expected_equal
                && is_minimal_hitting_set(g, &s)
                && !h.edges().contains(&s)
                && truth.contains(&t)
                && !g.edges().contains(&t)
        }
    }
}

fn criterion_7(corpus: &[Hypergraph]) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut counts = [0usize; 6];
    let mut failures = Vec::new();
    for (i, h) in corpus.iter().enumerate() {
        let n = h.n();
        let truth = oracle().tr(h).unwrap();
        let mut candidates: Vec<(usize, Vec<VertexSet>)> = vec![(0, truth.clone())];
        if !truth.is_empty() {
            let mut dropped = truth.clone();
            dropped.remove(rng.gen_range(0..truth.len()));
            candidates.push((1, dropped));
        }
        let stranger = VertexSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5)));
        if !truth.contains(&stranger) {
            candidates.push((2, truth.iter().cloned().chain([stranger]).collect()));
        }
        if let Some(base) = truth.iter().find(|t| t.len() < n) {
            let extra = base.complement().first().unwrap();
            candidates.push((3, truth.iter().cloned().chain([base.with(extra)]).collect()));
        }
        if let Some(first) = truth.first() {
            candidates.push((4, truth.iter().cloned().chain([first.clone()]).collect()));
        }
        if let Some(target) = truth.iter().find(|t| !t.is_empty() && t.len() < n) {
            let out_v = target.first().unwrap();
            let in_v = target.complement().iter().nth(rng.gen_range(0..n - target.len())).unwrap();
            let perturbed = target.without(out_v).with(in_v);
            candidates.push((
                5,
                truth.iter().map(|t| if t == target { perturbed.clone() } else { t.clone() }).collect(),
            ));
        }
        for (kind, edges) in candidates {
            counts[kind] += 1;
            let g = Hypergraph::new(n, edges);
            if !check_verify(&g, h, &truth) {
                failures.push((i, kind));
            }
        }
    }
    Verdict::new(
        failures.is_empty(),
        format!(
            "exact/drop/add-non-solution/superset/duplicate/perturb = {counts:?}, failures: {failures:?}"
        ),
    )
}

fn moon_moser_delays() -> (usize, f64, f64) {
    let g = moon_moser(MOON_MOSER_N);
    let mut best: Vec<Duration> = Vec::new();
    let mut count = 0;
    for _ in 0..DELAY_REPETITIONS {
        let mut stamps = Vec::new();
        let start = Instant::now();
        for c in MaximalCliques::new(&g).unwrap() {
            if c.len() >= 2 {
                stamps.push(start.elapsed());
            }
        }
        count = stamps.len();
        let gaps: Vec<Duration> = stamps.windows(2).map(|w| w[1] - w[0]).collect();
        if best.is_empty() {
            best = gaps;
        } else {
            for (b, g) in best.iter_mut().zip(gaps) {
                *b = (*b).min(g);
            }
        }
    }
    let mut sorted_gaps: Vec<f64> = best.iter().map(|d| d.as_nanos() as f64).collect();
    sorted_gaps.sort_by(f64::total_cmp);
    let median = sorted_gaps[sorted_gaps.len() / 2];
    let max = *sorted_gaps.last().unwrap();
    (count, max, median)
}

fn criterion_8() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut instances = 0;
    let mut failures = Vec::new();
    for r in [2usize, 3] {
        for n in r..=7 {
            for p in [0.2, 0.5, 0.8, 1.0] {
                for _ in 0..6 {
                    instances += 1;
                    let h = random_uniform(&mut rng, n, r, p);
                    let brute = sorted(oracle().max_cliques(&h, r).unwrap());
                    let mut fast = Vec::new();
                    enumerate_maximal_hypercliques(&h, r, None, |c| fast.push(c.clone())).unwrap();
                    let mut independent = Vec::new();
                    enumerate_maximal_independent_sets(&h, r, None, |c| independent.push(c.clone())).unwrap();
                    let mut ok = sorted(fast) == brute
                        && sorted(independent) == sorted(oracle().max_independent_sets(&h).unwrap());
                    if r == 2 {
                        let graph: Vec<VertexSet> =
                            MaximalCliques::new(&h).unwrap().filter(|c| c.len() >= 2).collect();
                        let distinct: HashSet<_> = graph.iter().cloned().collect();
                        ok &= distinct.len() == graph.len() && sorted(graph) == brute;
                    }
                    if !ok {
                        failures.push((r, n, instances));
                    }
                }
            }
        }
    }
    let (count, max, median) = moon_moser_delays();
    let floor = 3f64.powf(MOON_MOSER_N as f64 / 3.0) / 2.0;
    let ratio = max / median;
    let elapsed = start.elapsed();
    Verdict::new(
        failures.is_empty() && count as f64 >= floor && ratio <= DELAY_RATIO_LIMIT && elapsed.as_secs() < 120,
        format!(
            "{instances} uniform instances, mismatches {failures:?}; n={MOON_MOSER_N}: {count} cliques \
             (floor {floor:.1}), max/median delay {max:.0}/{median:.0} ns = {ratio:.2} (limit {DELAY_RATIO_LIMIT}, \
             per-output minimum over {DELAY_REPETITIONS} runs), {:.1}s",
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_9(corpus: &[Hypergraph], tally: &ExtensionTally) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut enum_calls = 0;
    let mut enum_violations = 0;
    let mut families = 0;
    let mut list_violations = 0;
    let mut minimize_runs = 0;
    let mut minimize_violations = 0;
    for h in corpus {
        let (_, stats) = enumerate_all(h);
        enum_calls += stats.extend_calls;
        enum_violations += stats.product_budget_violations;
        if h.has_empty_edge() {
            continue;
        }
        let m = h.m() as u64;
        for k in 3..=h.n() + 1 {
            for budget in [BdConfig::default().memory_budget, 0] {
                let (_, stats) = rank_at_least_bd_with(h, k, BdConfig { memory_budget: budget }).unwrap();
                families += stats.families_checked;
                if stats.max_list_touches > k as u64 * m {
                    list_violations += 1;
                }
            }
        }
        for _ in 0..5 {
            let s = random_subset(&mut rng, &h.universe(), 0.7);
            let s = h.edges().iter().fold(s, |s, e| if s.intersects(e) { s } else { s.with(e.first().unwrap()) });
            let (t, stats) = minimize_with_stats(h, &s).unwrap();
            minimize_runs += 1;
            if stats.adjacency_touches > MINIMIZE_TOUCH_FACTOR * m * s.len() as u64
                || stats.adjacency_touches > MINIMIZE_TOUCH_FACTOR * stats.incidences
                || !t.is_subset(&s)
                || !is_minimal_hitting_set(h, &t)
            {
                minimize_violations += 1;
            }
        }
    }
    let violations = enum_violations + tally.budget_violations + list_violations + minimize_violations;
    Verdict::new(
        violations == 0,
        format!(
            "product loop: {} calls, {} over Δ^|X|; list merge: {families} families, {list_violations} over k·m; \
             minimize: {minimize_runs} runs, {minimize_violations} over {MINIMIZE_TOUCH_FACTOR}·m·|S|",
            enum_calls + tally.budget_checked,
            enum_violations + tally.budget_violations
        ),
    )
}

fn criterion_10() -> Verdict {
    let start = Instant::now();
    let (n, m, kstar) = (18, 40, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut delays = Vec::new();
    for delta in [2usize, 4, 8] {
        let family: Result<Vec<Hypergraph>, Error> =
            (0..5).map(|_| with_transversal_rank(&mut rng, n, m, kstar, delta, 2000)).collect();
        match family {
            Ok(family) => {
                let worst = family
                    .iter()
                    .map(|h| {
                        let opts = EnumOptions::default();
                        enumerate_tr_with(h, opts, &mut |_| std::ops::ControlFlow::Continue(())).max_delay_ns
                    })
                    .max()
                    .unwrap();
                delays.push((delta, worst));
            }
            Err(e) => {
                return Verdict::new(
                    false,
                    format!("cannot build the Δ={delta} family (n={n}, m={m}, k*={kstar}): {e}"),
                )
            }
        }
    }
    let monotone = delays.windows(2).all(|w| w[0].1 <= w[1].1);
    Verdict::new(
        monotone && start.elapsed().as_secs() < 300,
        format!("max delay by Δ: {delays:?}"),
    )
}

fn main() -> ExitCode {
    let corpus = corpus(CORPUS_SIZE);
    let mut verdicts = Vec::new();
    let mut run = |id: usize, name: &str, f: &dyn Fn() -> Verdict| {
        let start = Instant::now();
        let v = f();
        println!(
            "criterion {id:>2} [{name}]: {} ({:.2}s) {}",
            if v.passed { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            v.detail
        );
        verdicts.push(v.passed);
    };
    let tally = extension_triples(&corpus);
    run(1, "enumeration correctness", &|| criterion_1(&corpus));
    run(2, "look-ahead depth bound", &|| criterion_2(&corpus));
    run(3, "extension oracle", &|| criterion_3(&tally));
    run(4, "rank algorithm agreement", &|| criterion_4(&corpus));
    run(5, "rank/conformal duality", &|| criterion_5(&corpus));
    run(6, "conformality via sections", &|| criterion_6(&corpus));
    run(7, "verification", &|| criterion_7(&corpus));
    run(8, "clique bijection and delay", &criterion_8);
    run(9, "iteration budgets", &|| criterion_9(&corpus, &tally));
    run(10, "delay trend in max degree", &criterion_10);
    let failed = verdicts.iter().filter(|p| !**p).count();
    println!("{} of {} criteria passed", verdicts.len() - failed, verdicts.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
