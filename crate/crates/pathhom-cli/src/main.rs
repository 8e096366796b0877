//! Command-line front end: digraph ingestion, constructions, homology
//! computation, and the randomized verification suite.
//!
//! Exit codes: 0 success, 1 computation or verification failure, 2 parse or
//! validation error, 3 undefined cluster subgraph.

use clap::{Args, Parser, Subcommand, ValueEnum};
use pathhom_cli::formats::{self, parse_digraph, DigraphDocument, Report};
use pathhom::crosscheck::{run_theorem_suite, SuiteConfig, DEFAULT_SEED};
use pathhom::digraph::{Digraph, Vertex};
use pathhom::homology::{degree_reports, CoefficientRing, Theory, TheorySpec};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "pathhom", version, about = "Exact path homology of finite simple digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute homology groups of a digraph.
    Compute(ComputeArgs),
    /// Build a digraph and print it in the text format.
    Construct(ConstructArgs),
    /// Run the randomized verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoryArg {
    /// Path homology (regularized boundary).
    Path,
    /// Primitive path homology (full boundary).
    Primitive,
    /// Paths with fixed tail and head (requires --from and --to).
    Cluster,
    /// Paths with a fixed tail (requires --from).
    Tail,
    /// Paths with a fixed head (requires --to).
    Head,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    /// Input digraph file (text or JSON form).
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, value_enum)]
    theory: TheoryArg,
    /// Tail vertex label for the cluster and tail theories.
    #[arg(long)]
    from: Option<String>,
    /// Head vertex label for the cluster and head theories.
    #[arg(long)]
    to: Option<String>,
    /// Highest homology degree to report.
    #[arg(long, default_value_t = 4)]
    max_dim: usize,
    /// Coefficient ring: Z, Q, or `Fp:<prime>`.
    #[arg(long, default_value = "Z")]
    coeff: String,
    /// Append the augmentation and compute reduced homology.
    #[arg(long)]
    reduced: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum DigraphFormatArg {
    Text,
    Json,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    kind: ConstructKind,
    /// Output format for the constructed digraph.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: DigraphFormatArg,
}

#[derive(Subcommand)]
enum ConstructKind {
    /// The n-cube digraph.
    Cube { n: u32 },
    /// Reverse every arrow.
    Inverse { input: PathBuf },
    /// Box product of two digraphs.
    Box { left: PathBuf, right: PathBuf },
    /// Add an apex receiving an arrow from every vertex.
    Cone {
        input: PathBuf,
        #[arg(long, default_value = "a")]
        apex: String,
    },
    /// Add an apex sending an arrow to every vertex.
    InvCone {
        input: PathBuf,
        #[arg(long, default_value = "a")]
        apex: String,
    },
    /// Add two apexes receiving arrows from every vertex.
    Suspension {
        input: PathBuf,
        #[arg(long, default_value = "a")]
        apex: String,
        #[arg(long, default_value = "b")]
        apex2: String,
    },
    /// Add two apexes sending arrows to every vertex.
    InvSuspension {
        input: PathBuf,
        #[arg(long, default_value = "a")]
        apex: String,
        #[arg(long, default_value = "b")]
        apex2: String,
    },
    /// Add a source apex and a sink apex.
    DirSuspension {
        input: PathBuf,
        #[arg(long, default_value = "a")]
        apex: String,
        #[arg(long, default_value = "b")]
        apex2: String,
    },
    /// The subgraph of all routes from one vertex to another.
    Cluster {
        input: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// The subgraph reachable from a vertex.
    Tail {
        input: PathBuf,
        #[arg(long)]
        from: String,
    },
    /// The subgraph that reaches a vertex.
    Head {
        input: PathBuf,
        #[arg(long)]
        to: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    instances: usize,
    #[arg(long, default_value_t = 6)]
    max_vertices: usize,
    #[arg(long, default_value_t = 4)]
    max_dim: usize,
}

enum CliError {
    Compute(String),
    Parse(String),
    UndefinedCluster(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Compute(_) => ExitCode::from(1),
            CliError::Parse(_) => ExitCode::from(2),
            CliError::UndefinedCluster(_) => ExitCode::from(3),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Compute(m) | CliError::Parse(m) | CliError::UndefinedCluster(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn load(path: &PathBuf) -> Result<DigraphDocument, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_digraph(&text).map_err(|e| CliError::Parse(e.to_string()))
}

fn resolve_vertex(g: &Digraph, label: &str) -> Result<Vertex, CliError> {
    g.vertex(label).map_err(|e| CliError::Parse(e.to_string()))
}

fn parse_coeff(s: &str) -> Result<CoefficientRing, CliError> {
    match s {
        "Z" => Ok(CoefficientRing::Integer),
        "Q" => Ok(CoefficientRing::Rational),
        _ => {
            let p = s
                .strip_prefix("Fp:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| CliError::Parse(format!("unknown coefficient ring `{s}`")))?;
            if !pathhom::linalg::FpMatrix::prime_ok(p) {
                return Err(CliError::Parse(format!("{p} is not prime")));
            }
            Ok(CoefficientRing::PrimeField(p))
        }
    }
}

fn coeff_name(c: CoefficientRing) -> String {
    match c {
        CoefficientRing::Integer => "Z".into(),
        CoefficientRing::Rational => "Q".into(),
        CoefficientRing::PrimeField(p) => format!("Fp:{p}"),
    }
}

fn cmd_compute(args: ComputeArgs) -> Result<(), CliError> {
    let doc = load(&args.input)?;
    let g = &doc.digraph;
    let need = |opt: &Option<String>, flag: &str| -> Result<String, CliError> {
        opt.clone().ok_or_else(|| CliError::Parse(format!("this theory requires --{flag}")))
    };
    let (theory, theory_name, from, to) = match args.theory {
        TheoryArg::Path => (Theory::PathGlmy, "path", None, None),
        TheoryArg::Primitive => (Theory::Primitive, "primitive", None, None),
        TheoryArg::Cluster => {
            let a = need(&args.from, "from")?;
            let b = need(&args.to, "to")?;
            let (av, bv) = (resolve_vertex(g, &a)?, resolve_vertex(g, &b)?);
            if av != bv && g.oriented_distance(av, bv).is_none() {
                return Err(CliError::UndefinedCluster(format!(
                    "no route from `{a}` to `{b}`: the cluster subgraph is undefined"
                )));
            }
            (Theory::ClusterPrimitive(av, bv), "cluster", Some(a), Some(b))
        }
        TheoryArg::Tail => {
            let a = need(&args.from, "from")?;
            let av = resolve_vertex(g, &a)?;
            (Theory::TailPrimitive(av), "tail", Some(a), None)
        }
        TheoryArg::Head => {
            let b = need(&args.to, "to")?;
            let bv = resolve_vertex(g, &b)?;
            (Theory::HeadPrimitive(bv), "head", None, Some(b))
        }
    };
    let coefficients = parse_coeff(&args.coeff)?;
    let mut spec = TheorySpec::new(theory).with_coefficients(coefficients);
    spec.reduced = args.reduced;
    let rows = degree_reports(g, &spec, args.max_dim).map_err(|e| match e {
        pathhom::homology::HomologyError::ReducedUnsupported
        | pathhom::homology::HomologyError::NotPrime(_) => CliError::Parse(e.to_string()),
        other => CliError::Compute(other.to_string()),
    })?;
    let report = Report {
        theory: theory_name.to_owned(),
        coefficients: coeff_name(coefficients),
        from,
        to,
        reduced: args.reduced,
        degrees: rows
            .into_iter()
            .map(|r| formats::DegreeRecord {
                n: r.degree,
                betti: r.betti,
                torsion: r.torsion.iter().map(ToString::to_string).collect(),
                basis_rank: r.basis_rank,
                boundary_rank: r.boundary_rank,
            })
            .collect(),
    };
    match args.format {
        FormatArg::Table => {
            if let Some(name) = &doc.name {
                println!("digraph: {name}");
            }
            print!("{}", report.to_table());
        }
        FormatArg::Json => println!("{}", report.to_json()),
    }
    Ok(())
}

fn construct_err(e: pathhom::digraph::DigraphError) -> CliError {
    CliError::Parse(e.to_string())
}

fn cmd_construct(args: ConstructArgs) -> Result<(), CliError> {
    let g = match args.kind {
        ConstructKind::Cube { n } => Digraph::n_cube(n),
        ConstructKind::Inverse { input } => load(&input)?.digraph.inverse(),
        ConstructKind::Box { left, right } => {
            load(&left)?.digraph.box_product(&load(&right)?.digraph)
        }
        ConstructKind::Cone { input, apex } => {
            load(&input)?.digraph.cone(&apex).map_err(construct_err)?
        }
        ConstructKind::InvCone { input, apex } => {
            load(&input)?.digraph.inv_cone(&apex).map_err(construct_err)?
        }
        ConstructKind::Suspension { input, apex, apex2 } => {
            load(&input)?.digraph.suspension(&apex, &apex2).map_err(construct_err)?
        }
        ConstructKind::InvSuspension { input, apex, apex2 } => {
            load(&input)?.digraph.inv_suspension(&apex, &apex2).map_err(construct_err)?
        }
        ConstructKind::DirSuspension { input, apex, apex2 } => {
            load(&input)?.digraph.directed_suspension(&apex, &apex2).map_err(construct_err)?
        }
        ConstructKind::Cluster { input, from, to } => {
            let g = load(&input)?.digraph;
            let a = resolve_vertex(&g, &from)?;
            let b = resolve_vertex(&g, &to)?;
            g.cluster_subgraph(a, b).ok_or_else(|| {
                CliError::UndefinedCluster(format!(
                    "no route from `{from}` to `{to}`: the cluster subgraph is undefined"
                ))
            })?
        }
        ConstructKind::Tail { input, from } => {
            let g = load(&input)?.digraph;
            let a = resolve_vertex(&g, &from)?;
            g.tail_subgraph(a)
        }
        ConstructKind::Head { input, to } => {
            let g = load(&input)?.digraph;
            let b = resolve_vertex(&g, &to)?;
            g.head_subgraph(b)
        }
    };
    match args.format {
        DigraphFormatArg::Text => print!("{}", g.to_text()),
        DigraphFormatArg::Json => println!("{}", formats::digraph_to_json(&g, None)),
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    if args.instances == 0 {
        println!("0 checks run");
        return Ok(());
    }
    let cfg = SuiteConfig {
        seed: args.seed,
        instances: args.instances,
        max_vertices: args.max_vertices,
        max_dim: args.max_dim,
    };
    let report = run_theorem_suite(cfg);
    let mut failed = 0usize;
    for check in &report.checks {
        if check.passed() {
            println!("ok    {} ({} instances)", check.name, check.instances);
        } else {
            failed += 1;
            println!("FAIL  {} ({} of {} instances)", check.name, check.failures.len(), check.instances);
            for f in check.failures.iter().take(3) {
                for line in f.lines() {
                    println!("      {line}");
                }
            }
        }
    }
    println!("{} checks, {} failed", report.checks.len(), failed);
    if failed > 0 {
        return Err(CliError::Compute(format!("{failed} checks failed")));
    }
    Ok(())
}
