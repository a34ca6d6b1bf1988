//! Acceptance suite. Runs every criterion and prints one PASS/FAIL line each;
//! exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use burnbound::bounds::{burning_bound_closed_form, burning_bound_search, ceil_sqrt};
use burnbound::gen::{
    gen_path, gen_random_caterpillar, gen_random_connected, gen_random_spider, gen_random_tree, gen_star,
    XorShift64Star,
};
use burnbound::{
    burn_graph, burning_bound, decompose_tree, elementary_bound, elementary_decompose, exact_burning_number,
    land_lu_bound, simulate, tree_cover_check, BurnPlan, Decomposition, FillPolicy, Graph, RootedTree,
};

const SIZES: [usize; 7] = [10, 50, 100, 500, 1000, 5000, 10000];
const RANDOM_TREES_PER_SIZE: u64 = 100;
const STRUCTURED_SEEDS_PER_SIZE: u64 = 10;
const SWEEP_LIMIT: u64 = 1_000_000;

struct Instance {
    family: &'static str,
    seed: u64,
    graph: Graph,
}

fn corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for &n in &SIZES {
        for seed in 0..RANDOM_TREES_PER_SIZE {
            out.push(Instance {
                family: "random-tree",
                seed,
                graph: gen_random_tree(n, seed).unwrap(),
            });
        }
        out.push(Instance {
            family: "path",
            seed: 0,
            graph: gen_path(n).unwrap(),
        });
        out.push(Instance {
            family: "star",
            seed: 0,
            graph: gen_star(n).unwrap(),
        });
        for seed in 0..STRUCTURED_SEEDS_PER_SIZE {
            out.push(Instance {
                family: "spider",
                seed,
                graph: gen_random_spider(n, seed).unwrap(),
            });
            out.push(Instance {
                family: "caterpillar",
                seed,
                graph: gen_random_caterpillar(n, seed).unwrap(),
            });
        }
    }
    out
}

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

/// Greedy replay of every schedule finishes by k.
fn bound_compliance(corpus: &[Instance], plans: &[BurnPlan]) -> Outcome {
    let mut failures = Vec::new();
    let mut worst_slack = usize::MAX;
    for (inst, plan) in corpus.iter().zip(plans) {
        let n = inst.graph.n();
        let k = burning_bound(n as u64).unwrap() as usize;
        let run = simulate(&inst.graph, &plan.schedule, FillPolicy::Greedy).unwrap();
        match run.completion_round {
            Some(c) if c <= k && plan.k == k => worst_slack = worst_slack.min(k - c),
            other => failures.push(format!(
                "{} n={n} seed={} completion={other:?} k={k}",
                inst.family, inst.seed
            )),
        }
    }
    if failures.is_empty() {
        Ok(format!(
            "{} instances, all complete within k (min slack {worst_slack})",
            corpus.len()
        ))
    } else {
        Err(format!("{} failures, first: {}", failures.len(), failures[0]))
    }
}

fn per_iteration_conditions(plans: &[BurnPlan]) -> Outcome {
    let mut extractions = 0;
    for plan in plans {
        for e in &plan.decomposition.extractions {
            extractions += 1;
            if e.measured_radius > e.r_star {
                return Err(format!("radius condition: {e}"));
            }
            if !e.is_terminal() && (e.piece.len() as i64) < e.r_star as i64 + (e.j / 2) as i64 - 3 {
                return Err(format!("size condition: {e}"));
            }
        }
    }
    Ok(format!("{extractions} extractions checked exactly"))
}

fn summation_holds(total: i64, k: usize) -> bool {
    let k = k as i64;
    4 * total >= 3 * k * k - 16 * k
}

/// Full-length traces at the bound rarely occur (they would need
/// n == (3k^2 - 16k)/4 exactly), so traces with shortened k are checked too.
fn summation_bound(corpus: &[Instance], plans: &[BurnPlan]) -> Outcome {
    fn check(d: &Decomposition) -> Result<bool, String> {
        if !d.is_full_length() {
            return Ok(false);
        }
        if !summation_holds(d.covered() as i64, d.k) || !summation_holds(d.guaranteed_total(), d.k) {
            return Err(format!(
                "n={} k={} covered={} guaranteed={}",
                d.n,
                d.k,
                d.covered(),
                d.guaranteed_total()
            ));
        }
        Ok(true)
    }
    let mut checked = 0;
    for plan in plans {
        checked += check(&plan.decomposition)? as usize;
    }
    let at_bound = checked;
    for inst in corpus.iter().filter(|i| i.family == "random-tree" && i.seed < 20) {
        let k = burning_bound(inst.graph.n() as u64).unwrap() as usize;
        for shorter in [k - 1, k - 3, (3 * k) / 4, k / 2] {
            let tree = RootedTree::from_graph(&inst.graph, 0).unwrap();
            let d = decompose_tree(tree, shorter.max(1)).map_err(|e| e.to_string())?;
            checked += check(&d)? as usize;
        }
    }
    if checked == 0 {
        return Err("no full-length trace was produced".into());
    }
    Ok(format!(
        "{checked} full-length traces satisfy 4*sum >= 3k^2-16k ({at_bound} at k = bound)"
    ))
}

fn formula_cross_check() -> Outcome {
    let mut last_above = 0;
    for n in 1..=SWEEP_LIMIT {
        let search = burning_bound_search(n);
        let closed = burning_bound_closed_form(n);
        if search != closed {
            return Err(format!("n={n}: search {search} != closed form {closed}"));
        }
        if search > land_lu_bound(n) {
            last_above = n;
        }
    }
    if last_above == SWEEP_LIMIT {
        return Err("new bound never drops below the Land-Lu bound".into());
    }
    Ok(format!(
        "search == closed form for n <= {SWEEP_LIMIT}; new <= Land-Lu for all n >= {} (crossover)",
        last_above + 1
    ))
}

fn path_ground_truth() -> Outcome {
    for n in 1..=25 {
        let b = exact_burning_number(&gen_path(n).unwrap(), 10)
            .map_err(|e| e.to_string())?
            .burning_number;
        if b as u64 != ceil_sqrt(n as u64) {
            return Err(format!("b(P_{n}) = {b}, expected {}", ceil_sqrt(n as u64)));
        }
    }
    Ok("b(P_n) = ceil(sqrt(n)) for n = 1..25".into())
}

/// All connected labelled graphs on `n` vertices, by edge subset of K_n.
fn connected_labelled(n: usize) -> Vec<Graph> {
    let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .filter_map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            g.is_connected().then_some(g)
        })
        .collect()
}

fn oracle_sandwich() -> Outcome {
    let mut graphs = Vec::new();
    for n in 1..=6 {
        graphs.extend(connected_labelled(n));
    }
    let mut rng = XorShift64Star::new(7);
    for seed in 0..2000 {
        let m = 6 + rng.below(16);
        graphs.push(gen_random_connected(7, m, seed).unwrap());
    }
    let mut bnc_violations = 0;
    for g in &graphs {
        let n = g.n();
        let exact = exact_burning_number(g, n).map_err(|e| e.to_string())?;
        let strict = simulate(g, &exact.witness, FillPolicy::Strict).map_err(|e| e.to_string())?;
        if strict.completion_round != Some(exact.burning_number) {
            return Err(format!("witness does not replay: {}", g.to_edge_list()));
        }
        let plan = burn_graph(g, 0).map_err(|e| e.to_string())?;
        let completion = simulate(g, &plan.schedule, FillPolicy::Greedy)
            .unwrap()
            .completion_round
            .unwrap();
        let bound = burning_bound(n as u64).unwrap() as usize;
        if !(exact.burning_number <= completion && completion <= bound) {
            return Err(format!(
                "exact {} / completion {completion} / bound {bound} on {}",
                exact.burning_number,
                g.to_edge_list()
            ));
        }
        if exact.burning_number as u64 > ceil_sqrt(n as u64) {
            bnc_violations += 1;
        }
    }
    Ok(format!(
        "{} graphs: exact <= completion <= bound; ceil(sqrt(n)) exceeded on {bnc_violations}",
        graphs.len()
    ))
}

fn tree_equivalence() -> Outcome {
    let mut comparisons = 0;
    for seed in 0..500u64 {
        let n = 1 + (seed % 12) as usize;
        let tree = gen_random_tree(n, seed).unwrap();
        let b = exact_burning_number(&tree, n)
            .map_err(|e| e.to_string())?
            .burning_number;
        for k in 1..=6 {
            let cover = tree_cover_check(&tree, k).map_err(|e| e.to_string())?.is_some();
            comparisons += 1;
            if cover != (b <= k) {
                return Err(format!("seed={seed} n={n} k={k}: cover={cover} exact={b}"));
            }
        }
    }
    Ok(format!("{comparisons} (tree, k) pairs agree"))
}

fn elementary_baseline(corpus: &[Instance]) -> Outcome {
    let mut last_above = 0;
    for n in 1..=SWEEP_LIMIT {
        if burning_bound(n).unwrap() > elementary_bound(n) {
            last_above = n;
        }
    }
    let crossover = last_above + 1;
    for inst in corpus {
        let n = inst.graph.n();
        let k = elementary_bound(n as u64) as usize;
        let (_, rooted) = inst.graph.spanning_tree(0).unwrap();
        let d = elementary_decompose(rooted, k).map_err(|e| format!("{} n={n}: {e}", inst.family))?;
        if !d.covers() {
            return Err(format!("{} n={n} seed={} not covered", inst.family, inst.seed));
        }
        for (i, e) in d.extractions.iter().enumerate() {
            if !e.is_terminal() && e.piece.len() < k - i {
                return Err(format!(
                    "{} n={n}: piece {} has {} < {}",
                    inst.family,
                    i + 1,
                    e.piece.len(),
                    k - i
                ));
            }
        }
    }
    Ok(format!(
        "{} instances covered at k = ceil((sqrt(8n+1)+1)/2); new bound <= elementary for all n >= {crossover}",
        corpus.len()
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = corpus();
    let plans: Vec<BurnPlan> = corpus
        .iter()
        .map(|i| burn_graph(&i.graph, 0).expect("decomposition"))
        .collect();

    let criteria: Vec<Criterion> = vec![
        ("1 bound compliance", Box::new(|| bound_compliance(&corpus, &plans))),
        (
            "2 per-iteration conditions",
            Box::new(|| per_iteration_conditions(&plans)),
        ),
        ("3 summation bound", Box::new(|| summation_bound(&corpus, &plans))),
        ("4 formula cross-check", Box::new(formula_cross_check)),
        ("5 path ground truth", Box::new(path_ground_truth)),
        ("6 oracle sandwich", Box::new(oracle_sandwich)),
        ("7 tree equivalence", Box::new(tree_equivalence)),
        ("8 elementary baseline", Box::new(|| elementary_baseline(&corpus))),
    ];

    let mut failed = 0;
    for (name, run) in &criteria {
        let t = Instant::now();
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{:.2?}]", t.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{:.2?}]", t.elapsed());
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2?}",
        criteria.len() - failed,
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
