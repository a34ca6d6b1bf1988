use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use burnbound::bounds::{burning_bound, ceil_sqrt, elementary_bound, land_lu_bound};
use burnbound::gen;
use burnbound::{
    burn_graph, exact_burning_number, simulate, verify_schedule, BurnSchedule, DecomposeError, ExactError, FillPolicy,
    Graph, GraphError, SimulateError,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod bench;

/// Exit codes. Data goes to stdout, diagnostics to stderr.
const EXIT_PARSE: u8 = 1;
const EXIT_DISCONNECTED: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_EXCEEDED: u8 = 4;
const EXIT_INVALID_SCHEDULE: u8 = 5;

#[derive(Debug)]
pub struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn new(code: u8, msg: impl Into<String>) -> Self {
        Failure { code, msg: msg.into() }
    }
}

type CmdResult = Result<(), Failure>;

#[derive(Parser)]
#[command(
    name = "burnbound",
    version,
    about = "Burning schedules within ceil((sqrt(12n+64)+8)/3) rounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and verify a burning schedule for a connected graph.
    Burn {
        file: PathBuf,
        /// Root of the breadth-first spanning tree.
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Print one line per extracted subtree.
        #[arg(long)]
        trace: bool,
        /// Write the schedule to this file.
        #[arg(long)]
        schedule_out: Option<PathBuf>,
    },
    /// Compute the exact burning number by exhaustive search.
    Exact {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        max_k: usize,
        /// Refuse graphs with more vertices than this.
        #[arg(long, default_value_t = 20)]
        max_n: usize,
    },
    /// Check that a schedule burns a graph within k rounds.
    Verify {
        graph: PathBuf,
        schedule: PathBuf,
        #[arg(long)]
        k: usize,
        /// Fail on sources that are already burned instead of substituting.
        #[arg(long)]
        strict: bool,
    },
    /// Print the new bound and the reference bounds for n.
    Bound { n: u64 },
    /// Emit a generated graph in edge-list format.
    Gen(GenArgs),
    /// Run the schedule pipeline over a family of instances and emit CSV.
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Star,
    Complete,
    Spider,
    Caterpillar,
    RandomTree,
    RandomConnected,
}

#[derive(Args)]
struct GenArgs {
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    /// Edge count for random-connected (default 2n, capped at n(n-1)/2).
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Leg lengths (spider) or leaves per spine vertex (caterpillar).
    #[arg(long, value_delimiter = ',')]
    legs: Vec<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    Graph::parse_edge_list(&text).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str) -> CmdResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::new(EXIT_PARSE, e.to_string())),
    }
}

fn graph_failure(e: GraphError) -> Failure {
    match e {
        GraphError::Disconnected => Failure::new(EXIT_DISCONNECTED, "graph is disconnected"),
        other => Failure::new(EXIT_PARSE, other.to_string()),
    }
}

fn decompose_failure(e: DecomposeError) -> Failure {
    match e {
        DecomposeError::Graph(g) => graph_failure(g),
        other => Failure::new(EXIT_INTERNAL, format!("internal error: {other}")),
    }
}

fn cmd_burn(file: &Path, root: usize, trace: bool, schedule_out: Option<&Path>) -> CmdResult {
    let g = read_graph(file)?;
    if root >= g.n() {
        return Err(Failure::new(
            EXIT_PARSE,
            format!("root {root} out of range for n={}", g.n()),
        ));
    }
    if !g.is_connected() {
        return Err(graph_failure(GraphError::Disconnected));
    }
    let plan = burn_graph(&g, root).map_err(decompose_failure)?;
    let report = verify_schedule(&g, plan.k, &plan.schedule)
        .map_err(|e| Failure::new(EXIT_INTERNAL, format!("internal error: {e}")))?;

    let mut out = String::new();
    if trace {
        out.push_str(&plan.decomposition.trace());
    }
    out.push_str(&format!("n={}\nk={}\n", g.n(), plan.k));
    out.push_str(&format!(
        "completion={}\nvalid: {}\n",
        report.completion_round.map_or("none".to_string(), |c| c.to_string()),
        report.valid
    ));
    write_output(None, &out)?;
    if let Some(path) = schedule_out {
        write_output(Some(path), &plan.schedule.to_text())?;
    }
    if !report.valid {
        return Err(Failure::new(EXIT_INTERNAL, "schedule failed verification"));
    }
    Ok(())
}

fn cmd_exact(file: &Path, max_k: usize, max_n: usize) -> CmdResult {
    let g = read_graph(file)?;
    if g.n() > max_n {
        return Err(Failure::new(
            EXIT_EXCEEDED,
            format!("n={} exceeds --max-n {max_n}", g.n()),
        ));
    }
    match exact_burning_number(&g, max_k) {
        Ok(r) => write_output(
            None,
            &format!("b={}\n# witness\n{}", r.burning_number, r.witness.to_text()),
        ),
        Err(ExactError::Graph(e)) => Err(graph_failure(e)),
        Err(e @ (ExactError::Exceeded { .. } | ExactError::TooLarge { .. })) => {
            Err(Failure::new(EXIT_EXCEEDED, e.to_string()))
        }
    }
}

fn cmd_verify(graph: &Path, schedule: &Path, k: usize, strict: bool) -> CmdResult {
    let g = read_graph(graph)?;
    let text =
        fs::read_to_string(schedule).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", schedule.display())))?;
    let s = BurnSchedule::parse(&text).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", schedule.display())))?;
    let policy = if strict { FillPolicy::Strict } else { FillPolicy::Greedy };
    let run = match simulate(&g, &s, policy) {
        Ok(run) => run,
        Err(e @ SimulateError::VertexOutOfRange { .. }) => return Err(Failure::new(EXIT_PARSE, e.to_string())),
        Err(e @ SimulateError::SourceCollision { .. }) => {
            return Err(Failure::new(EXIT_INVALID_SCHEDULE, e.to_string()))
        }
    };
    let valid = run.completion_round.is_some_and(|c| c <= k);
    let mut out = format!(
        "completion={}\nsubstitutions={}\nvalid: {valid}\n",
        run.completion_round.map_or("none".to_string(), |c| c.to_string()),
        run.substitutions.len()
    );
    for sub in &run.substitutions {
        let scheduled = sub.scheduled.map_or("-".to_string(), |v| v.to_string());
        out.push_str(&format!(
            "# round {} scheduled {scheduled} lit {}\n",
            sub.round, sub.lit
        ));
    }
    write_output(None, &out)?;
    if valid {
        Ok(())
    } else {
        Err(Failure::new(
            EXIT_INVALID_SCHEDULE,
            format!("schedule does not burn the graph within {k} rounds"),
        ))
    }
}

fn cmd_bound(n: u64) -> CmdResult {
    let k = burning_bound(n).ok_or_else(|| Failure::new(EXIT_PARSE, "n must be at least 1"))?;
    write_output(
        None,
        &format!(
            "n={n}\nnew={k}\nland_lu={}\nceil_sqrt={}\nelementary={}\n",
            land_lu_bound(n),
            ceil_sqrt(n),
            elementary_bound(n)
        ),
    )
}

pub fn generate(
    family: Family,
    n: Option<usize>,
    m: Option<usize>,
    seed: u64,
    legs: &[usize],
) -> Result<Graph, GraphError> {
    let need_n = || n.ok_or_else(|| GraphError::BadParameters("--n is required".into()));
    match family {
        Family::Path => gen::gen_path(need_n()?),
        Family::Star => gen::gen_star(need_n()?),
        Family::Complete => gen::gen_complete(need_n()?),
        Family::Spider if !legs.is_empty() => gen::gen_spider(legs),
        Family::Spider => gen::gen_random_spider(need_n()?, seed),
        Family::Caterpillar if !legs.is_empty() => gen::gen_caterpillar(legs.len(), legs),
        Family::Caterpillar => gen::gen_random_caterpillar(need_n()?, seed),
        Family::RandomTree => gen::gen_random_tree(need_n()?, seed),
        Family::RandomConnected => {
            let n = need_n()?;
            let m = m.unwrap_or((2 * n).min(n * (n - 1) / 2).max(n - 1));
            gen::gen_random_connected(n, m, seed)
        }
    }
}

fn cmd_gen(args: &GenArgs) -> CmdResult {
    let g = generate(args.family, args.n, args.m, args.seed, &args.legs)
        .map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
    write_output(args.out.as_deref(), &g.to_edge_list())
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Burn {
            file,
            root,
            trace,
            schedule_out,
        } => cmd_burn(&file, root, trace, schedule_out.as_deref()),
        Command::Exact { file, max_k, max_n } => cmd_exact(&file, max_k, max_n),
        Command::Verify {
            graph,
            schedule,
            k,
            strict,
        } => cmd_verify(&graph, &schedule, k, strict),
        Command::Bound { n } => cmd_bound(n),
        Command::Gen(args) => cmd_gen(&args),
        Command::Bench(args) => bench::cmd_bench(&args),
    }
}

fn main() -> ExitCode {
    // clap's own usage errors exit 2, which is reserved for disconnected input.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_PARSE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
