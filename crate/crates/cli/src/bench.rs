//! Random instance families timed with the tree enumerator.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use transversal::enumeration::{enumerate_tr_with, EnumOptions};
use transversal::generate::{bounded_degree, random_hypergraph, random_uniform};
use transversal::Hypergraph;

pub const CSV_HEADER: &str = "instance_id,n,m,delta,kstar,outputs,max_delay_ns,total_ns";

#[derive(Clone, Copy, ValueEnum)]
pub enum Family {
    /// Edge sizes 2..=rank, every vertex degree at most delta.
    Degree,
    /// Edge sizes 1..=rank, no degree constraint.
    Rank,
    /// Each r-subset is an edge with probability p.
    Uniform,
}

#[derive(Args)]
pub struct BenchArgs {
    /// Generator seed (required for reproducibility).
    #[arg(long)]
    pub seed: u64,
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, default_value_t = 10)]
    pub instances: usize,
    #[arg(long, default_value_t = 12)]
    pub n: usize,
    #[arg(long, default_value_t = 20)]
    pub m: usize,
    #[arg(long, default_value_t = 4)]
    pub delta: usize,
    #[arg(long, default_value_t = 3)]
    pub rank: usize,
    /// Uniformity for the uniform family.
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    /// Edge probability for the uniform family.
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl BenchArgs {
    pub fn family_name(&self) -> &'static str {
        match self.family {
            Family::Degree => "degree",
            Family::Rank => "rank",
            Family::Uniform => "uniform",
        }
    }
}

pub struct Row {
    pub instance_id: usize,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub kstar: usize,
    pub outputs: u64,
    pub max_delay_ns: u64,
    pub total_ns: u64,
}

impl Row {
    pub fn to_json(&self) -> Value {
        json!({
            "instance_id": self.instance_id,
            "n": self.n,
            "m": self.m,
            "delta": self.delta,
            "kstar": self.kstar,
            "outputs": self.outputs,
            "max_delay_ns": self.max_delay_ns,
            "total_ns": self.total_ns,
        })
    }
}

fn instance(args: &BenchArgs, rng: &mut ChaCha8Rng) -> Result<Hypergraph, String> {
    match args.family {
        Family::Degree => {
            bounded_degree(rng, args.n, args.m, args.rank, args.delta).map_err(|e| e.to_string())
        }
        Family::Rank => Ok(random_hypergraph(rng, args.n, args.m, 1..=args.rank.max(1))),
        Family::Uniform => {
            if !(0.0..=1.0).contains(&args.p) {
                return Err(format!("--p must lie in [0, 1], got {}", args.p));
            }
            Ok(random_uniform(rng, args.n, args.r, args.p))
        }
    }
}

pub fn run(args: &BenchArgs) -> Result<Vec<Row>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    (0..args.instances)
        .map(|id| {
            let h = instance(args, &mut rng)?;
            let stats = enumerate_tr_with(&h, EnumOptions::default(), &mut |_| {
                std::ops::ControlFlow::Continue(())
            });
            Ok(Row {
                instance_id: id,
                n: h.n(),
                m: h.m(),
                delta: h.max_degree(),
                kstar: stats.max_output_size,
                outputs: stats.outputs,
                max_delay_ns: stats.max_delay_ns,
                total_ns: stats.total_ns,
            })
        })
        .collect()
}

pub fn csv(rows: &[Row]) -> Vec<String> {
    std::iter::once(CSV_HEADER.to_string())
        .chain(rows.iter().map(|r| {
            format!(
                "{},{},{},{},{},{},{},{}",
                r.instance_id, r.n, r.m, r.delta, r.kstar, r.outputs, r.max_delay_ns, r.total_ns
            )
        }))
        .collect()
}
