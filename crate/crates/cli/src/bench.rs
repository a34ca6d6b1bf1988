//! `bench` subcommand: one CSV row per (size, seed) instance.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use burnbound::bounds::{burning_bound, ceil_sqrt, land_lu_bound};
use burnbound::{burn_graph, simulate, FillPolicy};
use clap::Args;
use rayon::prelude::*;

use crate::{generate, CmdResult, Failure, Family, EXIT_INTERNAL, EXIT_PARSE};

pub const HEADER: [&str; 8] = [
    "n",
    "seed",
    "family",
    "k_bound_new",
    "completion_round",
    "bound_landlu",
    "ceil_sqrt_n",
    "valid",
];

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Comma-separated instance sizes; may be empty.
    #[arg(long, default_value = "")]
    sizes: String,
    /// Seeds as `a..b` (inclusive) or a comma-separated list.
    #[arg(long, default_value = "1")]
    seeds: String,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
}

struct Row {
    n: usize,
    seed: u64,
    k: u64,
    completion: Option<usize>,
    land_lu: u64,
    ceil_sqrt: u64,
    valid: bool,
}

pub fn parse_sizes(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<usize>() {
            Ok(0) | Err(_) => Err(format!("bad size {s:?}")),
            Ok(n) => Ok(n),
        })
        .collect()
}

pub fn parse_seeds(text: &str) -> Result<Vec<u64>, String> {
    let text = text.trim();
    if let Some((a, b)) = text.split_once("..") {
        let bad = || format!("bad seed range {text:?}");
        let a: u64 = a.trim().parse().map_err(|_| bad())?;
        let b: u64 = b.trim().parse().map_err(|_| bad())?;
        return Ok((a..=b).collect());
    }
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("bad seed {s:?}")))
        .collect()
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Path => "path",
        Family::Star => "star",
        Family::Complete => "complete",
        Family::Spider => "spider",
        Family::Caterpillar => "caterpillar",
        Family::RandomTree => "random-tree",
        Family::RandomConnected => "random-connected",
    }
}

fn run_instance(family: Family, n: usize, seed: u64) -> Result<Row, Failure> {
    let g = generate(family, Some(n), None, seed, &[]).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
    let plan = burn_graph(&g, 0).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    let run =
        simulate(&g, &plan.schedule, FillPolicy::Greedy).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    let k = burning_bound(n as u64).expect("n >= 1");
    Ok(Row {
        n,
        seed,
        k,
        completion: run.completion_round,
        land_lu: land_lu_bound(n as u64),
        ceil_sqrt: ceil_sqrt(n as u64),
        valid: run.completion_round.is_some_and(|c| c as u64 <= k),
    })
}

/// Renders the CSV for the given instances. Rows are ordered by size, then
/// seed, whatever order the instances finish in.
pub fn bench_csv(family: Family, sizes: &[usize], seeds: &[u64]) -> Result<Vec<u8>, Failure> {
    let jobs: Vec<(usize, u64)> = sizes.iter().flat_map(|&n| seeds.iter().map(move |&s| (n, s))).collect();
    let rows: Vec<Row> = jobs
        .par_iter()
        .map(|&(n, seed)| run_instance(family, n, seed))
        .collect::<Result<_, _>>()?;

    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io_err = |e: csv::Error| Failure::new(EXIT_PARSE, e.to_string());
    w.write_record(HEADER).map_err(io_err)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.seed.to_string(),
            family_name(family).to_string(),
            r.k.to_string(),
            r.completion.map_or(String::new(), |c| c.to_string()),
            r.land_lu.to_string(),
            r.ceil_sqrt.to_string(),
            r.valid.to_string(),
        ])
        .map_err(io_err)?;
    }
    w.into_inner().map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))
}

pub fn cmd_bench(args: &BenchArgs) -> CmdResult {
    let sizes = parse_sizes(&args.sizes).map_err(|e| Failure::new(EXIT_PARSE, e))?;
    let seeds = parse_seeds(&args.seeds).map_err(|e| Failure::new(EXIT_PARSE, e))?;
    let bytes = bench_csv(args.family, &sizes, &seeds)?;
    let result = match &args.csv {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(&bytes)),
        None => io::stdout().write_all(&bytes),
    };
    result.map_err(|e| Failure::new(EXIT_PARSE, format!("cannot write CSV: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_specs() {
        assert_eq!(parse_seeds("1..4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_seeds("3, 5,9").unwrap(), vec![3, 5, 9]);
        assert_eq!(parse_seeds("").unwrap(), Vec::<u64>::new());
        assert!(parse_seeds("a..3").is_err());
    }

    #[test]
    fn size_specs() {
        assert_eq!(parse_sizes("10,100").unwrap(), vec![10, 100]);
        assert_eq!(parse_sizes("").unwrap(), Vec::<usize>::new());
        assert!(parse_sizes("0").is_err());
        assert!(parse_sizes("x").is_err());
    }

    #[test]
    fn path_row() {
        let csv = String::from_utf8(bench_csv(Family::Path, &[100], &[1]).unwrap()).unwrap();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next(),
            Some("n,seed,family,k_bound_new,completion_round,bound_landlu,ceil_sqrt_n,valid")
        );
        let row: Vec<_> = lines.next().unwrap().split(',').collect();
        assert_eq!(row[0], "100");
        assert_eq!(row[3], "15");
        assert_eq!(row[5], "12");
        assert_eq!(row[6], "10");
        assert_eq!(row[7], "true");
        assert!(!csv.contains('\r'));
    }
}
