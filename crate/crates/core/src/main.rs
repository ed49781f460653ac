use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use idom::{
    brute_force_solve, cartesian_product, condensation, double_edges, gen_cycle, gen_dhk, gen_path, gen_paw,
    gen_wheel, idomatic_brute, is_ids, layer_decomposition, min_dom_size_brute, min_ids_size_brute, parse_digraph,
    parse_undirected, period, random_dag, random_digraph, random_layered_strong, random_oriented_bipartite,
    random_undirected, solve_auto, solve_bipartite, solve_dag, solve_even_period, solve_exact,
    solve_strong_by_layers, write_arc_list, write_edge_list, DhkSpec, DhkVariant, Digraph, Error, RuleSource,
    SolveOutcome, SolverConfig, VertexSet, BRUTE_DEFAULT_CAP, IDOMATIC_DEFAULT_CAP,
};

/// Independent dominating sets in directed graphs.
///
/// Graph files are arc lists: a header `n m` followed by `m` lines `u v`,
/// vertices numbered from 0. `#` starts a comment. Use `-` for stdin.
#[derive(Parser, Debug)]
#[command(name = "idom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Period, strong components and cyclic layer sizes.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether an IDS exists and print one.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long)]
        json: bool,
        /// Exit 1 when no IDS exists.
        #[arg(long)]
        status_exit: bool,
        /// Worker threads for seed evaluation. Output does not depend on it.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Check a vertex set for independence and domination.
    Verify {
        file: PathBuf,
        /// Comma-separated vertex ids, e.g. `0,2,5`.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Print a generated graph as an arc list.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Exhaustive oracles for small graphs.
    Brute {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = What::Exist)]
        what: What,
        /// Largest vertex count to enumerate (default 20, 14 for idomatic).
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
    Cycle { n: usize },
    /// Directed path 0 -> 1 -> ... -> n-1.
    Path { n: usize },
    /// Outer n-cycle plus a center (vertex n) pointing at every outer vertex.
    Wheel { n: usize },
    /// The 4-vertex paw.
    Paw,
    /// Layered family with period h built from the subsets of a k-set.
    Dhk {
        h: usize,
        k: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Free)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = RulesArg::Text)]
        rules: RulesArg,
    },
    /// Cartesian product of two arc-list files.
    Product { a: PathBuf, b: PathBuf },
    /// Replace every edge of an undirected edge list by two opposite arcs.
    Double { file: PathBuf },
    RandomDag {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    RandomDigraph {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Oriented bipartite graph on parts of sizes a and b.
    RandomBipartite {
        a: usize,
        b: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Strongly connected graph of period exactly h, s vertices per layer.
    RandomLayered {
        h: usize,
        s: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Undirected edge list, suitable for `gen double`.
    RandomUndirected {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Auto,
    Dag,
    Even,
    Bipartite,
    Layers,
    Exact,
    Brute,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VariantArg {
    Free,
    Ids,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RulesArg {
    Text,
    Figure,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum What {
    Exist,
    I,
    Gamma,
    Idomatic,
}

impl What {
    fn name(self) -> &'static str {
        match self {
            What::Exist => "exist",
            What::I => "i",
            What::Gamma => "gamma",
            What::Idomatic => "idomatic",
        }
    }
}

/// A failure and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_resource_limit() { 3 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let mut stdout = io::stdout().lock();
    // a closed pipe is not worth reporting
    let _ = stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush());
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("idom: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<u8, Failure> {
    match command {
        Command::Analyze { file, json } => analyze(&read_digraph(&file)?, json, out),
        Command::Solve { file, method, json, status_exit, threads } => {
            let graph = read_digraph(&file)?;
            let config = SolverConfig::from_env()?.with_threads(threads);
            let outcome = solve(&graph, method, &config)?;
            render_solve(&outcome, json, out);
            Ok(if status_exit && !outcome.is_found() { 1 } else { 0 })
        }
        Command::Verify { file, set, json } => {
            let graph = read_digraph(&file)?;
            let set = parse_set(&set, graph.vertex_count())?;
            verify(&graph, &set, json, out)
        }
        Command::Gen { family } => {
            out.push_str(&generate(family)?);
            Ok(0)
        }
        Command::Brute { file, what, cap, json } => brute(&read_digraph(&file)?, what, cap, json, out),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map_err(|e| usage(format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn read_digraph(path: &Path) -> Result<Digraph, Failure> {
    let parsed = parse_digraph(&read_text(path)?).map_err(|e| with_path(path, e))?;
    if parsed.duplicates > 0 {
        eprintln!("idom: warning: {}: ignored {} duplicate arc(s)", path.display(), parsed.duplicates);
    }
    Ok(parsed.graph)
}

fn with_path(path: &Path, e: Error) -> Failure {
    let f = Failure::from(e);
    Failure { message: format!("{}: {}", path.display(), f.message), ..f }
}

fn parse_set(raw: &str, n: usize) -> Result<VertexSet, Failure> {
    let mut members = Vec::new();
    for token in raw.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = token.parse().map_err(|_| usage(format!("bad vertex `{token}` in --set")))?;
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n }.into());
        }
        members.push(v);
    }
    Ok(VertexSet::from_vertices(n, members))
}

fn join(items: impl IntoIterator<Item = usize>) -> String {
    items.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn push_json(out: &mut String, value: &Value) {
    out.push_str(&serde_json::to_string_pretty(value).expect("json values serialize"));
    out.push('\n');
}

fn analyze(graph: &Digraph, json: bool, out: &mut String) -> Result<u8, Failure> {
    let h = period(graph);
    let cond = condensation(graph);
    let strong = cond.sccs.count() == 1 && graph.vertex_count() > 1;
    let layers = if strong { Some(layer_decomposition(graph)?.sizes()) } else { None };
    let sources = cond.source_components();
    if json {
        let mut doc = json!({ "period": h, "sccs": cond.sccs.count(), "source_sccs": sources });
        if let Some(sizes) = &layers {
            doc["layers"] = json!(sizes);
        }
        push_json(out, &doc);
    } else {
        out.push_str(&format!("period={h} sccs={}", cond.sccs.count()));
        if let Some(sizes) = &layers {
            out.push_str(&format!(" layers=[{}]", join(sizes.iter().copied())));
        }
        out.push_str(&format!("\nsource_sccs=[{}]\n", join(sources)));
    }
    Ok(0)
}

fn solve(graph: &Digraph, method: MethodArg, config: &SolverConfig) -> Result<SolveOutcome, Failure> {
    let outcome = match method {
        MethodArg::Auto => solve_auto(graph, config),
        MethodArg::Dag => solve_dag(graph),
        MethodArg::Even => solve_even_period(graph),
        MethodArg::Bipartite => solve_bipartite(graph, None),
        MethodArg::Layers => solve_strong_by_layers(graph, config),
        MethodArg::Exact => solve_exact(graph, config),
        MethodArg::Brute => brute_force_solve(graph, BRUTE_DEFAULT_CAP),
    }?;
    Ok(outcome)
}

fn render_solve(outcome: &SolveOutcome, json: bool, out: &mut String) {
    let stats = &outcome.stats;
    let elapsed_ms = stats.elapsed.as_millis() as u64;
    if json {
        let mut doc = json!({
            "status": if outcome.is_found() { "found" } else { "none" },
            "method": outcome.method,
            "seeds_explored": stats.seeds_explored,
            "subsets_explored": stats.subsets_explored,
            "elapsed_ms": elapsed_ms,
        });
        if let Some(set) = outcome.set() {
            doc["set"] = json!(set.to_vec());
        }
        push_json(out, &doc);
        return;
    }
    match outcome.set() {
        Some(set) => out.push_str(&format!("status=found set={}\n", join(set.iter()))),
        None => out.push_str("status=none\n"),
    }
    out.push_str(&format!("method={}\n", outcome.method));
    out.push_str(&format!(
        "seeds_explored={} subsets_explored={} elapsed_ms={elapsed_ms}\n",
        stats.seeds_explored, stats.subsets_explored
    ));
}

fn verify(graph: &Digraph, set: &VertexSet, json: bool, out: &mut String) -> Result<u8, Failure> {
    let report = is_ids(graph, set)?;
    if json {
        let doc = json!({
            "independent": report.independent,
            "dominating": report.dominating,
            "ids": report.ids(),
            "violations": {
                "arcs": report.independence_violations,
                "undominated": report.domination_violations,
            },
        });
        push_json(out, &doc);
        return Ok(0);
    }
    out.push_str(&format!("independent={}", report.independent));
    if !report.independent {
        let arcs: Vec<String> = report.independence_violations.iter().map(|(u, v)| format!("{u}->{v}")).collect();
        out.push_str(&format!(" witness={}", arcs.join(",")));
    }
    out.push_str(&format!("\ndominating={}", report.dominating));
    if !report.dominating {
        out.push_str(&format!(" witness={}", join(report.domination_violations.iter().copied())));
    }
    out.push_str(&format!("\nids={}\n", report.ids()));
    Ok(0)
}

fn generate(family: Family) -> Result<String, Failure> {
    let graph = match family {
        Family::Cycle { n } => gen_cycle(n)?,
        Family::Path { n } => gen_path(n)?,
        Family::Wheel { n } => gen_wheel(n)?,
        Family::Paw => gen_paw(),
        Family::Dhk { h, k, variant, rules } => {
            let variant = match variant {
                VariantArg::Free => DhkVariant::IdsFree,
                VariantArg::Ids => DhkVariant::WithIds,
            };
            let rules = match rules {
                RulesArg::Text => RuleSource::Text,
                RulesArg::Figure => RuleSource::Figure,
            };
            gen_dhk(&DhkSpec::new(h, k, variant, rules)?)?.graph
        }
        Family::Product { a, b } => {
            if a == Path::new("-") && b == Path::new("-") {
                return Err(usage("at most one product factor can come from stdin"));
            }
            cartesian_product(&read_digraph(&a)?, &read_digraph(&b)?)?
        }
        Family::Double { file } => {
            let parsed = parse_undirected(&read_text(&file)?).map_err(|e| with_path(&file, e))?;
            if parsed.duplicates > 0 {
                eprintln!("idom: warning: {}: ignored {} duplicate edge(s)", file.display(), parsed.duplicates);
            }
            double_edges(&parsed.graph)
        }
        Family::RandomDag { n, p, seed } => random_dag(n, p, seed)?,
        Family::RandomDigraph { n, p, seed } => random_digraph(n, p, seed)?,
        Family::RandomBipartite { a, b, p, seed } => random_oriented_bipartite(a, b, p, seed)?,
        Family::RandomLayered { h, s, p, seed } => random_layered_strong(h, s, p, seed)?,
        Family::RandomUndirected { n, p, seed } => return Ok(write_edge_list(&random_undirected(n, p, seed)?)),
    };
    Ok(write_arc_list(&graph))
}

fn brute(graph: &Digraph, what: What, cap: Option<usize>, json: bool, out: &mut String) -> Result<u8, Failure> {
    let value = match what {
        What::Exist => json!(brute_force_solve(graph, cap.unwrap_or(BRUTE_DEFAULT_CAP))?.is_found()),
        What::I => json!(min_ids_size_brute(graph, cap.unwrap_or(BRUTE_DEFAULT_CAP))?),
        What::Gamma => json!(min_dom_size_brute(graph, cap.unwrap_or(BRUTE_DEFAULT_CAP))?),
        What::Idomatic => json!(idomatic_brute(graph, cap.unwrap_or(IDOMATIC_DEFAULT_CAP))?),
    };
    if json {
        push_json(out, &json!({ "what": what.name(), "value": value }));
    } else if value.is_null() {
        out.push_str("none\n");
    } else {
        out.push_str(&format!("{value}\n"));
    }
    Ok(0)
}
