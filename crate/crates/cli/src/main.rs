//! `forcing`: command-line front end for the leaky forcing library.
//!
//! Vertex coordinates in all output are 1-based (row, column) pairs whenever
//! the graph carries a grid labeling; bare vertex indices are 0-based.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use forcing_core::construct::CandidateSet;
use forcing_core::engine::closure;
use forcing_core::graph::{
    build_base_graph, cartesian_product, Family, Graph, GraphFamilySpec,
    GridLabeling,
};
use forcing_core::io::{load_document, save_document, GraphDocument};
use forcing_core::report::{
    emit_report, run_conjecture_probe, run_qd_probe, run_resilience_report, ProductFamily,
    QdMode, ReportFormat, ResilienceMode,
};
use forcing_core::search::{min_leaky_forcing_number, Budget};
use forcing_core::verify::is_leaky_forcing_set;
use forcing_core::VertexSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

#[derive(Parser)]
#[command(name = "forcing", version, about = "Zero forcing and l-leaky forcing tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph or product and write it as a graph file.
    Graph(GraphArgs),
    /// Run the forcing closure and print the chronicle.
    Closure(ClosureArgs),
    /// Check a set against every placement of l leaks.
    Verify(VerifyArgs),
    /// Compute the exact minimum l-leaky forcing number.
    Min(MinArgs),
    /// Resilience sweep over an (n, t) grid.
    Resilience(ResilienceArgs),
    /// Probe an open claim on one instance; outcomes are recorded, not judged.
    Conjecture(ConjectureArgs),
    /// Hypercube probes: exact values, the bundled candidate, or heuristics.
    Qd(QdArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Complete,
    Path,
    Cycle,
    Hypercube,
    KnPt,
    KnCt,
    KnKn,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProductArg {
    Direct,
    Cartesian,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Table,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> ReportFormat {
        match f {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Table => ReportFormat::Table,
        }
    }
}

#[derive(Args)]
struct GraphArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    /// Second parameter for product families.
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_enum, default_value = "direct")]
    product: ProductArg,
    /// Output file; `-` writes to stdout.
    #[arg(long, default_value = "-")]
    out: String,
}

#[derive(Args)]
struct ClosureArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Colored set: comma-separated vertices, or a file holding them.
    #[arg(long)]
    initial: String,
    /// Leak set, same syntax as --initial.
    #[arg(long, default_value = "")]
    leaks: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    ell: usize,
    /// `construct` for the built-in set, or a file holding one.
    #[arg(long, default_value = "construct")]
    set: String,
}

#[derive(Args)]
struct MinArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    ell: usize,
    #[arg(long)]
    lower: Option<usize>,
    #[arg(long)]
    upper: Option<usize>,
    #[arg(long)]
    budget_subsets: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<u64>,
}

#[derive(Args)]
struct ResilienceArgs {
    #[arg(long)]
    family: String,
    /// Inclusive range `A..B` (or a single value).
    #[arg(long)]
    n: String,
    #[arg(long, default_value = "0..0")]
    t: String,
    #[arg(long)]
    ell: usize,
    #[arg(long, default_value = "exact")]
    mode: String,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Override the desk-scale guards.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct ConjectureArgs {
    /// kn-pt-2resilience, kn-ct-2resilience, or product-bound.
    name: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct QdArgs {
    /// Inclusive range `A..B` (or a single value).
    #[arg(long)]
    d: String,
    #[arg(long, default_value = "exact")]
    mode: String,
    /// Candidate set file for candidate mode; defaults to the bundled one.
    #[arg(long)]
    candidate: Option<PathBuf>,
    #[arg(long, default_value = "0")]
    seed: u64,
    #[arg(long)]
    budget_subsets: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

fn init_thread_pool() -> Result<()> {
    if let Ok(v) = std::env::var("FORCING_THREADS") {
        let threads: usize = v
            .parse()
            .map_err(|_| anyhow!("FORCING_THREADS must be a positive integer, got {v:?}"))?;
        if threads == 0 {
            bail!("FORCING_THREADS must be a positive integer, got 0");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("rayon thread pool")?;
    }
    Ok(())
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    if let Some((a, b)) = s.split_once("..") {
        let a = a.trim().parse().with_context(|| format!("bad range {s:?}"))?;
        let b = b.trim().parse().with_context(|| format!("bad range {s:?}"))?;
        Ok((a, b))
    } else {
        let v = s.trim().parse().with_context(|| format!("bad range {s:?}"))?;
        Ok((v, v))
    }
}

fn base_family(f: FamilyArg) -> Option<Family> {
    match f {
        FamilyArg::Complete => Some(Family::Complete),
        FamilyArg::Path => Some(Family::Path),
        FamilyArg::Cycle => Some(Family::Cycle),
        FamilyArg::Hypercube => Some(Family::Hypercube),
        _ => None,
    }
}

fn product_family(f: FamilyArg) -> Option<ProductFamily> {
    match f {
        FamilyArg::KnPt => Some(ProductFamily::KnPt),
        FamilyArg::KnCt => Some(ProductFamily::KnCt),
        FamilyArg::KnKn => Some(ProductFamily::KnKn),
        _ => None,
    }
}

fn build_family_graph(
    f: FamilyArg,
    n: usize,
    t: Option<usize>,
    product: ProductArg,
) -> Result<(Graph, Option<GridLabeling>)> {
    if let Some(base) = base_family(f) {
        return Ok((build_base_graph(GraphFamilySpec { family: base, param: n })?, None));
    }
    let family = product_family(f).expect("every family is base or product");
    let t = match family {
        ProductFamily::KnKn => n,
        _ => t.ok_or_else(|| anyhow!("this family needs --t"))?,
    };
    if product == ProductArg::Direct {
        let (g, lab) = family.build(n, t)?;
        return Ok((g, Some(lab)));
    }
    let kn = build_base_graph(GraphFamilySpec { family: Family::Complete, param: n })?;
    let other = match family {
        ProductFamily::KnPt => build_base_graph(GraphFamilySpec { family: Family::Path, param: t })?,
        ProductFamily::KnCt => {
            build_base_graph(GraphFamilySpec { family: Family::Cycle, param: t })?
        }
        ProductFamily::KnKn => kn.clone(),
    };
    let (g, lab) = cartesian_product(&kn, &other)?;
    Ok((g, Some(lab)))
}

/// A vertex set given on the command line or in a file: comma or whitespace
/// separated tokens, each a 0-based index or a 1-based `r:c` coordinate.
fn parse_vertex_set(spec: &str, doc: &GraphDocument) -> Result<VertexSet> {
    let n = doc.graph.vertex_count();
    let text = if Path::new(spec).is_file() {
        fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?
    } else {
        spec.to_string()
    };
    let mut set = VertexSet::empty(n);
    for token in text.split([',', ' ', '\n', '\t']).filter(|t| !t.is_empty()) {
        let v = if let Some((r, c)) = token.split_once(':') {
            let lab = doc
                .labeling
                .ok_or_else(|| anyhow!("graph file has no grid labeling for coordinate {token}"))?;
            let r: usize = r.parse().with_context(|| format!("bad coordinate {token:?}"))?;
            let c: usize = c.parse().with_context(|| format!("bad coordinate {token:?}"))?;
            if !(1..=lab.rows).contains(&r) || !(1..=lab.cols).contains(&c) {
                bail!("coordinate {token} outside the {}x{} grid", lab.rows, lab.cols);
            }
            lab.to_index(r, c)
        } else {
            token.parse().with_context(|| format!("bad vertex {token:?}"))?
        };
        if v >= n {
            bail!("vertex {v} out of range for {n} vertices");
        }
        set.insert(v);
    }
    Ok(set)
}

fn show_vertex(v: usize, labeling: Option<GridLabeling>) -> String {
    match labeling {
        Some(lab) => {
            let (r, c) = lab.to_coord(v);
            format!("({r},{c})")
        }
        None => v.to_string(),
    }
}

fn show_set(set: &VertexSet, labeling: Option<GridLabeling>) -> String {
    let parts: Vec<String> = set.iter().map(|v| show_vertex(v, labeling)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn budget_from(max_subsets: Option<u64>, max_seconds: Option<u64>) -> Budget {
    Budget { max_subsets, max_time: max_seconds.map(Duration::from_secs) }
}

fn cmd_graph(args: GraphArgs) -> Result<()> {
    let (g, labeling) = build_family_graph(args.family, args.n, args.t, args.product)?;
    let text = save_document(&g, labeling);
    if args.out == "-" {
        print!("{text}");
    } else {
        fs::write(&args.out, text).with_context(|| format!("writing {}", args.out))?;
        eprintln!(
            "wrote {} vertices, {} edges to {}",
            g.vertex_count(),
            g.edge_count(),
            args.out
        );
    }
    Ok(())
}

fn cmd_closure(args: ClosureArgs) -> Result<()> {
    let text = fs::read_to_string(&args.graph)
        .with_context(|| format!("reading {}", args.graph.display()))?;
    let doc = load_document(&text)?;
    let initial = parse_vertex_set(&args.initial, &doc)?;
    let leaks = parse_vertex_set(&args.leaks, &doc)?;
    let chron = closure(&doc.graph, &initial, &leaks);
    for ev in &chron.events {
        println!(
            "round {}: {} forces {}",
            ev.round,
            show_vertex(ev.forcer, doc.labeling),
            show_vertex(ev.forced, doc.labeling)
        );
    }
    println!(
        "colored {} of {} vertices; {}",
        chron.final_colored.count(),
        doc.graph.vertex_count(),
        if chron.stalled { "stalled" } else { "complete" }
    );
    if chron.stalled {
        std::process::exit(1);
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<()> {
    let (g, labeling) = build_family_graph(args.family, args.n, args.t, ProductArg::Direct)?;
    let b = if args.set == "construct" {
        let family = product_family(args.family)
            .ok_or_else(|| anyhow!("--set construct needs a product family"))?;
        let t = if family == ProductFamily::KnKn { args.n } else { args.t.unwrap_or(0) };
        let set = family.construct(args.n, t)?;
        let lab = labeling.expect("product families carry a labeling");
        println!("constructed set ({}): {} vertices", set.case_tag, set.len());
        VertexSet::from_indices(g.vertex_count(), set.indices(&lab))
    } else {
        let doc = GraphDocument { graph: g.clone(), labeling };
        parse_vertex_set(&args.set, &doc)?
    };
    let report = is_leaky_forcing_set(&g, &b, args.ell)?;
    println!(
        "checked {} placements of {} leaks",
        report.placements_checked, report.ell
    );
    if report.passed {
        println!("passed: the set forces the graph under every placement");
        Ok(())
    } else {
        println!(
            "failed: leaks {} stall at {}",
            show_set(&report.witness_leaks.unwrap(), labeling),
            show_set(&report.witness_stall.unwrap(), labeling)
        );
        std::process::exit(1);
    }
}

fn cmd_min(args: MinArgs) -> Result<()> {
    let text = fs::read_to_string(&args.graph)
        .with_context(|| format!("reading {}", args.graph.display()))?;
    let doc = load_document(&text)?;
    let budget = budget_from(args.budget_subsets, args.budget_seconds);
    let result =
        min_leaky_forcing_number(&doc.graph, args.ell, args.lower, args.upper, budget)?;
    match result.value {
        Some(z) => {
            println!("minimum {}-leaky forcing number: {z}", args.ell);
            println!("witness: {}", show_set(&result.witness.unwrap(), doc.labeling));
        }
        None => println!(
            "budget exhausted before an answer; sizes through {} ruled out",
            result.sizes_exhausted
        ),
    }
    println!(
        "tested {} subsets in {:.2?}",
        result.subsets_tested, result.wall_time
    );
    Ok(())
}

fn cmd_resilience(args: ResilienceArgs) -> Result<()> {
    let family = ProductFamily::parse(&args.family)
        .ok_or_else(|| anyhow!("unknown family {:?}", args.family))?;
    let mode = match args.mode.as_str() {
        "exact" => ResilienceMode::Exact,
        "verify" => ResilienceMode::Verify,
        other => bail!("unknown mode {other:?}"),
    };
    let report = run_resilience_report(
        family,
        parse_range(&args.n)?,
        parse_range(&args.t)?,
        args.ell,
        mode,
        args.force,
    )?;
    print!("{}", emit_report(&report, args.format.into()));
    Ok(())
}

fn cmd_conjecture(args: ConjectureArgs) -> Result<()> {
    let report = run_conjecture_probe(&args.name, args.n, args.t, args.force)?;
    print!("{}", emit_report(&report, args.format.into()));
    Ok(())
}

fn cmd_qd(args: QdArgs) -> Result<()> {
    let mode = match args.mode.as_str() {
        "exact" => QdMode::Exact,
        "candidate" => QdMode::Candidate,
        "heuristic" => QdMode::Heuristic,
        other => bail!("unknown mode {other:?}"),
    };
    let candidate: Option<CandidateSet> = match &args.candidate {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            Some(serde_json::from_str(&text).context("parsing candidate file")?)
        }
        None => None,
    };
    let budget = budget_from(args.budget_subsets, args.budget_seconds);
    let report = run_qd_probe(parse_range(&args.d)?, mode, candidate, args.seed, budget)?;
    print!("{}", emit_report(&report, args.format.into()));
    Ok(())
}

fn main() -> Result<()> {
    init_thread_pool()?;
    match Cli::parse().command {
        Command::Graph(args) => cmd_graph(args),
        Command::Closure(args) => cmd_closure(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Min(args) => cmd_min(args),
        Command::Resilience(args) => cmd_resilience(args),
        Command::Conjecture(args) => cmd_conjecture(args),
        Command::Qd(args) => cmd_qd(args),
    }
}
