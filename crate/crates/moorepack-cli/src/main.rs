//! `moorepack` — generate Moore incidence graphs, verify packing
//! colorings, search for ovoids, evaluate closed-form bounds, and run the
//! exact packing-chromatic solver from the shell.
//!
//! Exit codes are part of the contract: 0 = valid/solved, 1 = invalid or
//! refuted, 2 = parse/parameter error, 3 = budget exhausted.

use clap::{Args, Parser, Subcommand, ValueEnum};
use moorepack::bounds::{bracket, class_caps, detect_moore_family, moore_bound, BoundSet};
use moorepack::coloring::verify_coloring;
use moorepack::files::{load_graph_auto, ColoringFile, FileError, GraphFile, GraphMeta};
use moorepack::fixtures::resolve_fixture_path;
use moorepack::generators::{
    gen_cage_3_12, gen_classical, gen_gq_incidence, gen_pg_incidence, Classical,
};
use moorepack::geometry::{construct_gq_ovoid, search_opposite_set, verify_ovoid};
use moorepack::solver::{chi_rho_diameter2, solve_exact, solve_upper};
use moorepack::{
    Graph, PackingColoring, Report, SearchConfig, SolveOutcome, VertexOrder,
};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(name = "moorepack", version, about = "Moore graphs and packing colorings")]
struct Cli {
    /// Worker threads for distance computations; the search itself is
    /// sequential and deterministic.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it as GraphFile JSON.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Check a coloring file against a graph file.
    Verify {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the exact packing-chromatic search.
    Solve(SolveArgs),
    /// Construct or search for ovoids and opposite sets.
    Ovoid(OvoidArgs),
    /// Evaluate the closed-form bounds for a (q+1,g)-Moore graph.
    Bounds {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        json: bool,
    },
    /// Full bound report for a graph, optionally checking a coloring
    /// against every applicable class cap.
    Report {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        coloring: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Dump the all-pairs distance matrix as CSV.
    Distances {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Projective-plane incidence graph: the (q+1,6)-Moore graph.
    Pg {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generalized-quadrangle incidence graph: the (q+1,8)-Moore graph.
    Gq {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The embedded 126-vertex (3,12)-cage.
    Cage312 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Small reference graphs: complete, complete-bipartite, cycle,
    /// petersen, hoffman-singleton.
    Classical {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    graph: String,
    /// Color cap (exact mode: starting cap). Defaults to the vertex count.
    #[arg(long)]
    max_colors: Option<u32>,
    /// Descend the cap until optimality is certified.
    #[arg(long)]
    exact: bool,
    #[arg(long, value_enum, default_value_t = OrderArg::DistanceFromRoot)]
    order: OrderArg,
    /// Admissible pruning (exact class caps, independence cap, singleton
    /// symmetry); never changes the verdict.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    prune: bool,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    budget_s: Option<f64>,
    /// Search-node budget.
    #[arg(long)]
    node_limit: Option<u64>,
    /// Write the witness coloring here when one is found.
    #[arg(long)]
    witness: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OvoidArgs {
    #[arg(long)]
    graph: String,
    /// Build the ovoid O_t of a coordinatized quadrangle (odd q).
    #[arg(long, conflicts_with = "search")]
    construct: Option<u16>,
    /// Search one side for this many mutually opposite vertices
    /// (0 = maximize).
    #[arg(long)]
    search: Option<usize>,
    /// Side to search (0 = points, 1 = lines).
    #[arg(long, default_value_t = 0)]
    side: u8,
    #[arg(long)]
    budget_s: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Natural,
    DegreeDesc,
    DistanceFromRoot,
}

impl From<OrderArg> for VertexOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Natural => VertexOrder::Natural,
            OrderArg::DegreeDesc => VertexOrder::DegreeDesc,
            OrderArg::DistanceFromRoot => VertexOrder::DistanceFromRoot,
        }
    }
}

/// A command failure: message for stderr plus the contract exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl ToString) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }

    fn invalid(message: impl ToString) -> Self {
        Failure {
            code: 1,
            message: message.to_string(),
        }
    }
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Self {
        Failure::parse(e)
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .ok();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Gen { family } => cmd_gen(family),
        Command::Verify {
            graph,
            coloring,
            json,
        } => cmd_verify(&graph, &coloring, json),
        Command::Solve(args) => cmd_solve(args),
        Command::Ovoid(args) => cmd_ovoid(args),
        Command::Bounds { q, g, json } => cmd_bounds(q, g, json),
        Command::Report {
            graph,
            coloring,
            json,
        } => cmd_report(&graph, coloring.as_deref(), json),
        Command::Distances { graph, out } => cmd_distances(&graph, out.as_deref()),
    }
}

fn load_graph(path: &str) -> Result<Graph, Failure> {
    Ok(load_graph_auto(resolve_fixture_path(path))?)
}

fn load_coloring(path: &str, g: &Graph) -> Result<PackingColoring, Failure> {
    Ok(ColoringFile::read(resolve_fixture_path(path))?.to_coloring(g)?)
}

fn emit_graph(file: GraphFile, out: Option<&std::path::Path>) -> CmdResult {
    match out {
        Some(path) => {
            file.write(path)?;
            println!(
                "wrote {} vertices, {} edges to {}",
                file.n,
                file.adj.iter().map(Vec::len).sum::<usize>() / 2,
                path.display()
            );
        }
        None => print!("{}", file.to_json_string()),
    }
    Ok(0)
}

fn cmd_gen(family: GenFamily) -> CmdResult {
    match family {
        GenFamily::Pg { q, out } => {
            let g = gen_pg_incidence(q).map_err(Failure::parse)?;
            let file = GraphFile::from_graph(&g).with_meta(GraphMeta {
                family: "pg".to_string(),
                q: Some(q),
                g: Some(6),
            });
            emit_graph(file, out.as_deref())
        }
        GenFamily::Gq { q, out } => {
            let g = gen_gq_incidence(q).map_err(Failure::parse)?;
            let file = GraphFile::from_graph(&g).with_meta(GraphMeta {
                family: "gq".to_string(),
                q: Some(q),
                g: Some(8),
            });
            emit_graph(file, out.as_deref())
        }
        GenFamily::Cage312 { out } => {
            let g = gen_cage_3_12();
            let file = GraphFile::from_graph(&g).with_meta(GraphMeta {
                family: "cage312".to_string(),
                q: Some(2),
                g: Some(12),
            });
            emit_graph(file, out.as_deref())
        }
        GenFamily::Classical { name, n, out } => {
            let which = Classical::parse(&name, n).map_err(Failure::parse)?;
            let g = gen_classical(which).map_err(Failure::parse)?;
            let file = GraphFile::from_graph(&g).with_meta(GraphMeta {
                family: name,
                q: None,
                g: None,
            });
            emit_graph(file, out.as_deref())
        }
    }
}

fn report_json(report: &Report) -> serde_json::Value {
    serde_json::to_value(report).expect("report serializes")
}

fn cmd_verify(graph: &str, coloring: &str, json: bool) -> CmdResult {
    let g = load_graph(graph)?;
    let c = load_coloring(coloring, &g)?;
    let report = verify_coloring(&g, &c);
    let stats = c.class_stats(&g);
    if json {
        let value = serde_json::json!({
            "valid": report.pass(),
            "max_color": c.max_color(),
            "class_stats": stats,
            "report": report_json(&report),
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!("{report}");
        println!("colors used: {}", c.max_color());
        let shown = stats.iter().filter(|s| s.size > 1).collect::<Vec<_>>();
        for s in &shown {
            println!(
                "  color {:>3}: {} vertices (sides {}/{})",
                s.color, s.size, s.side_counts[0], s.side_counts[1]
            );
        }
        let singletons = stats.iter().filter(|s| s.size == 1).count();
        println!("  singleton classes: {singletons}");
    }
    Ok(if report.pass() { 0 } else { 1 })
}

fn write_witness(c: &PackingColoring, path: Option<&std::path::Path>) -> Result<(), Failure> {
    if let Some(path) = path {
        ColoringFile::from_coloring(c).write(path)?;
        eprintln!("witness written to {}", path.display());
    }
    Ok(())
}

fn cmd_solve(args: SolveArgs) -> CmdResult {
    let g = load_graph(&args.graph)?;
    let n = g.n() as u32;
    let mut cfg = SearchConfig::new(args.max_colors.unwrap_or(n.max(1)))
        .with_order(args.order.into())
        .with_prune(args.prune);
    if let Some(s) = args.budget_s {
        cfg = cfg.with_time_limit(Duration::from_secs_f64(s));
    }
    if let Some(nodes) = args.node_limit {
        cfg = cfg.with_node_limit(nodes);
    }

    if args.exact {
        let out = solve_exact(&g, &cfg).map_err(Failure::parse)?;
        if let Some(w) = &out.witness {
            write_witness(w, args.witness.as_deref())?;
        }
        if args.json {
            let value = serde_json::json!({
                "certified": out.certified,
                "lower": out.lower,
                "upper": out.upper,
                "chi_rho": out.value(),
                "nodes": out.stats.nodes,
                "seconds": out.stats.elapsed.as_secs_f64(),
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        } else if out.certified {
            println!("chi_rho = {}", out.upper);
            println!(
                "nodes: {}, seconds: {:.3}",
                out.stats.nodes,
                out.stats.elapsed.as_secs_f64()
            );
        } else {
            println!("budget exhausted: {} <= chi_rho <= {}", out.lower, out.upper);
            println!(
                "nodes: {}, seconds: {:.3}",
                out.stats.nodes,
                out.stats.elapsed.as_secs_f64()
            );
        }
        return Ok(if out.certified { 0 } else { 3 });
    }

    let run = solve_upper(&g, &cfg).map_err(Failure::parse)?;
    let (outcome_str, code, max_color) = match &run.outcome {
        SolveOutcome::Solved(c) => {
            write_witness(c, args.witness.as_deref())?;
            ("solved", 0u8, Some(c.max_color()))
        }
        SolveOutcome::Infeasible => ("infeasible", 1, None),
        SolveOutcome::BudgetExceeded => ("budget-exceeded", 3, None),
    };
    if args.json {
        let value = serde_json::json!({
            "outcome": outcome_str,
            "max_color": max_color,
            "cap": cfg.max_color,
            "nodes": run.stats.nodes,
            "seconds": run.stats.elapsed.as_secs_f64(),
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        match max_color {
            Some(k) => println!("solved with {k} colors (cap {})", cfg.max_color),
            None => println!("{outcome_str} at cap {}", cfg.max_color),
        }
        println!(
            "nodes: {}, seconds: {:.3}",
            run.stats.nodes,
            run.stats.elapsed.as_secs_f64()
        );
    }
    Ok(code)
}

fn ovoid_json(g: &Graph, vertices: &[u32], side: u8, girth: u32) -> serde_json::Value {
    let labels: Option<Vec<&str>> = g
        .labels()
        .map(|all| vertices.iter().map(|&v| all[v as usize].as_str()).collect());
    serde_json::json!({
        "vertices": vertices,
        "side": side,
        "girth": girth,
        "labels": labels,
    })
}

fn cmd_ovoid(args: OvoidArgs) -> CmdResult {
    let g = load_graph(&args.graph)?;
    let budget = match args.budget_s {
        Some(s) => moorepack::SearchBudget::with_time(Duration::from_secs_f64(s)),
        None => moorepack::SearchBudget::unlimited(),
    };
    let (vertices, side, girth, code) = match (args.construct, args.search) {
        (Some(t), None) => {
            let o = construct_gq_ovoid(&g, t).map_err(Failure::invalid)?;
            (o.vertices, o.side, o.girth, 0u8)
        }
        (None, Some(target)) => {
            let found =
                search_opposite_set(&g, args.side, target, budget).map_err(Failure::invalid)?;
            let girth = moorepack::graphcore::girth(&g).unwrap_or(0);
            let code = if target == 0 || found.target_met {
                0
            } else if found.optimal {
                1
            } else {
                3
            };
            (found.set, args.side, girth, code)
        }
        _ => {
            return Err(Failure::parse(
                "exactly one of --construct or --search is required",
            ))
        }
    };
    let report = verify_ovoid(&g, &vertices);
    let value = ovoid_json(&g, &vertices, side, girth);
    if let Some(path) = &args.out {
        let mut text = serde_json::to_string_pretty(&value).unwrap();
        text.push('\n');
        std::fs::write(path, text).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    }
    if args.json {
        let full = serde_json::json!({
            "set": value,
            "size": vertices.len(),
            "report": report_json(&report),
        });
        println!("{}", serde_json::to_string_pretty(&full).unwrap());
    } else {
        println!("found {} vertices on side {side}", vertices.len());
        if let Some(labels) = g.labels() {
            let names: Vec<&str> = vertices.iter().map(|&v| labels[v as usize].as_str()).collect();
            println!("members: {}", names.join(" "));
        } else {
            let ids: Vec<String> = vertices.iter().map(u32::to_string).collect();
            println!("members: {}", ids.join(" "));
        }
        println!("{report}");
    }
    Ok(code)
}

fn bound_set_json(set: &BoundSet) -> serde_json::Value {
    let entries: Vec<serde_json::Value> = set
        .entries
        .iter()
        .map(|e| {
            serde_json::json!({
                "name": e.name,
                "value": e.value_string(),
                "floor": e.floor_value().to_string(),
                "ceil": e.ceil_value().to_string(),
                "hypothesis": e.hypothesis,
                "applicable": e.applicable,
                "note": e.note,
            })
        })
        .collect();
    serde_json::json!({ "q": set.q, "g": set.g, "entries": entries })
}

fn print_bound_set(title: &str, set: &BoundSet) {
    println!("{title} (q = {}, g = {}):", set.q, set.g);
    for e in &set.entries {
        let status = if e.applicable { "" } else { "  [hypothesis not met]" };
        let value = if e.is_integer() {
            e.value_string()
        } else {
            format!("{} (ceil {})", e.value_string(), e.ceil_value())
        };
        println!("  {:<18} {:<24} {}{status}", e.name, value, e.hypothesis);
        if !e.note.is_empty() {
            println!("  {:<18} note: {}", "", e.note);
        }
    }
}

fn cmd_bounds(q: u64, g: u32, json: bool) -> CmdResult {
    let bracket_set = bracket(q, g).map_err(Failure::parse)?;
    let caps_set = class_caps(q, g).map_err(Failure::parse)?;
    let moore = moore_bound(q + 1, g as u64);
    if json {
        let value = serde_json::json!({
            "moore_order": moore.to_string(),
            "bracket": bound_set_json(&bracket_set),
            "class_caps": bound_set_json(&caps_set),
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!("moore order n0({}, {g}) = {moore}", q + 1);
        print_bound_set("chi_rho bracket", &bracket_set);
        print_bound_set("class caps", &caps_set);
    }
    Ok(0)
}

fn cmd_report(graph: &str, coloring: Option<&str>, json: bool) -> CmdResult {
    let g = load_graph(graph)?;
    let Some((q, girth)) = detect_moore_family(&g) else {
        return Err(Failure::invalid(
            "graph is not a (q+1,g)-Moore graph for g in {6, 8, 12}",
        ));
    };
    let bracket_set = bracket(q, girth).map_err(Failure::parse)?;
    let caps_set = class_caps(q, girth).map_err(Failure::parse)?;
    let diam2 = chi_rho_diameter2(&g).ok();

    let mut all_pass = true;
    let coloring_part = match coloring {
        Some(path) => {
            let c = load_coloring(path, &g)?;
            let validity = verify_coloring(&g, &c);
            let caps_report = moorepack::bounds::check_coloring_against_caps(&g, &c);
            all_pass = validity.pass() && caps_report.pass();
            Some((c, validity, caps_report))
        }
        None => None,
    };

    if json {
        let coloring_json = coloring_part.as_ref().map(|(c, validity, caps)| {
            serde_json::json!({
                "max_color": c.max_color(),
                "valid": validity.pass(),
                "validity": report_json(validity),
                "cap_checks": report_json(caps),
            })
        });
        let value = serde_json::json!({
            "q": q,
            "g": girth,
            "n": g.n(),
            "diameter": g.distances().diameter(),
            "chi_rho_diameter2": diam2,
            "bracket": bound_set_json(&bracket_set),
            "class_caps": bound_set_json(&caps_set),
            "coloring": coloring_json,
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!(
            "host: ({}+1,{girth})-Moore graph, {} vertices, diameter {:?}",
            q,
            g.n(),
            g.distances().diameter().unwrap_or(0)
        );
        print_bound_set("chi_rho bracket", &bracket_set);
        print_bound_set("class caps", &caps_set);
        if let Some((c, validity, caps)) = &coloring_part {
            println!("coloring: {} colors", c.max_color());
            println!("validity:\n{validity}");
            println!("cap checks:\n{caps}");
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_distances(graph: &str, out: Option<&std::path::Path>) -> CmdResult {
    let g = load_graph(graph)?;
    let dm = g.distances();
    let mut text = String::new();
    for u in 0..g.n() as u32 {
        let row: Vec<String> = dm
            .row(u)
            .iter()
            .map(|&d| {
                if d == moorepack::graphcore::INF {
                    "inf".to_string()
                } else {
                    d.to_string()
                }
            })
            .collect();
        text.push_str(&row.join(","));
        text.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(0)
}
