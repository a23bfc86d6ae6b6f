mod check;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use petrial_core::contraction::{contract_edges, SpanningTree};
use petrial_core::random::{random_bouquet, random_ribbon_graph, random_signed_graph, seeded_rng};
use petrial_core::*;
use serde::Serialize;

use check::{CheckMode, CheckOptions, FourTermMode};
use input::{InputFormat, Instance};

#[derive(Parser)]
#[command(
    name = "petrial",
    version,
    about = "Euler genus and partial Petrial polynomials of ribbon graphs"
)]
struct Cli {
    /// Worker threads for the polynomial sweeps (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Input file, or `-` for stdin
    input: Option<PathBuf>,
    /// Instance text given directly, e.g. "v1: 1 2 / v2: 1 2"
    #[arg(long, conflicts_with = "input")]
    inline: Option<String>,
    #[arg(long, value_enum, default_value = "auto")]
    input_format: InputFormat,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Rank,
    Bruteforce,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RandomKind {
    Bouquet,
    Ribbon,
    SignedGraph,
}

#[derive(Subcommand)]
enum Command {
    /// Euler genus by face tracing and by the rank of the auxiliary bouquet
    Genus {
        #[command(flatten)]
        input: InputArgs,
        /// Spanning tree edge labels, e.g. 1,4,7 (default: depth-first tree)
        #[arg(long, value_delimiter = ',')]
        tree: Option<Vec<Label>>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Partial Petrial polynomial
    Poly {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "rank")]
        method: MethodArg,
        /// Alternating-sign polynomial of a bouquet or signed graph
        #[arg(long)]
        modified: bool,
        #[arg(long, value_delimiter = ',')]
        tree: Option<Vec<Label>>,
        /// Largest edge count accepted by the bruteforce engine
        #[arg(long, default_value_t = petrial::DEFAULT_BRUTEFORCE_CAP)]
        bruteforce_cap: usize,
        /// Largest edge count accepted by the rank engine
        #[arg(long, default_value_t = petrial::DEFAULT_RANK_CAP)]
        rank_cap: usize,
        /// Ignore both caps
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Auxiliary bouquet: contract a spanning tree
    Aux {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_delimiter = ',')]
        tree: Option<Vec<Label>>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Contract the given non-loop edges, in order
    Contract {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        edges: Vec<Label>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Randomized and exhaustive cross-checks; exits nonzero on any failure
    Check {
        #[arg(long, value_enum, default_value = "all")]
        mode: CheckMode,
        /// Random trials per mode
        #[arg(long, default_value_t = 100)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Size bound: chords or vertices for exhaustive sweeps, edges for random graphs
        #[arg(long)]
        max_size: Option<usize>,
        /// Check every adjacency of a chord pair, not only the leftmost
        #[arg(long)]
        all_witnesses: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print a random instance
    Random {
        #[arg(value_enum)]
        kind: RandomKind,
        /// Chords, edges or vertices
        #[arg(long, default_value_t = 6)]
        size: usize,
        /// Vertices of a random ribbon graph
        #[arg(long, default_value_t = 3)]
        vertices: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Four-term relation on an instance (with --pair) or on random trials
    FourTerm {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "chord")]
        mode: FourTermMode,
        /// Chord labels or vertex names a,b
        #[arg(long, value_delimiter = ',', num_args = 1)]
        pair: Option<Vec<Label>>,
        #[arg(long, default_value_t = 100)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Chords or vertices of random instances
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        all_witnesses: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// A failure that should end the run with the given exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = match e {
            Error::CapExceeded { size, cap } => {
                format!("{size} exceeds the cap of {cap}; raise it with --bruteforce-cap/--rank-cap or pass --force")
            }
            other => other.to_string(),
        };
        Failure::usage(message)
    }
}

impl From<input::InputError> for Failure {
    fn from(e: input::InputError) -> Self {
        Failure::usage(e.0)
    }
}

fn load(args: &InputArgs) -> Result<Instance, Failure> {
    let (text, source) = input::read_text(args.input.as_deref(), args.inline.as_deref())?;
    Ok(input::parse(&text, args.input_format, &source)?)
}

fn ribbon(instance: &Instance) -> Result<RibbonGraph, Failure> {
    instance.ribbon().ok_or_else(|| {
        Failure::usage(format!(
            "a ribbon graph is required, got a {}",
            instance.kind()
        ))
    })
}

fn tree_for(graph: &RibbonGraph, labels: &Option<Vec<Label>>) -> Result<SpanningTree, Failure> {
    Ok(match labels {
        Some(l) => SpanningTree::new(graph, EdgeSet::from_labels(l.iter().copied()))?,
        None => spanning_tree(graph)?,
    })
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

#[derive(Serialize)]
struct GenusReport {
    vertices: usize,
    edges: usize,
    faces: usize,
    genus_face_trace: usize,
    genus_rank: usize,
    tree: Vec<Label>,
    agree: bool,
}

fn cmd_genus(
    input: &InputArgs,
    tree: &Option<Vec<Label>>,
    output: &OutputArgs,
) -> Result<u8, Failure> {
    let g = ribbon(&load(input)?)?;
    if !g.is_connected() {
        return Err(Error::Disconnected.into());
    }
    let t = tree_for(&g, tree)?;
    let aux = aux_bouquet(&g, &t)?;
    let report = GenusReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        faces: g.boundary_components(),
        genus_face_trace: g.euler_genus(),
        genus_rank: genus_via_rank(&aux),
        tree: t.edges().iter().collect(),
        agree: g.euler_genus() == genus_via_rank(&aux),
    };
    match output.format {
        OutputFormat::Json => print_json(&report),
        OutputFormat::Text => {
            println!("face tracing: {}", report.genus_face_trace);
            println!("rank:         {}", report.genus_rank);
            println!(
                "({} vertices, {} edges, {} faces; tree {})",
                report.vertices,
                report.edges,
                report.faces,
                t.edges()
            );
            if !report.agree {
                println!("MISMATCH");
            }
        }
    }
    Ok(if report.agree { 0 } else { 1 })
}

#[derive(Serialize)]
struct PolyReport<'a> {
    poly: &'a GenusPolynomial,
    edges: Option<usize>,
    vertices: Option<usize>,
    method: &'static str,
    modified: bool,
    coeff_sum: i64,
}

struct PolyOptions {
    method: MethodArg,
    modified: bool,
    limits: Limits,
}

fn check_cap(size: usize, cap: usize) -> Result<(), Failure> {
    let cap = cap.min(petrial::MAX_SWEEP_BITS);
    if size > cap {
        return Err(Error::CapExceeded { size, cap }.into());
    }
    Ok(())
}

fn compute_poly(
    instance: &Instance,
    method: Method,
    opts: &PolyOptions,
    tree: &Option<Vec<Label>>,
) -> Result<GenusPolynomial, Failure> {
    let cap = match method {
        Method::BruteForce => opts.limits.bruteforce_edges,
        Method::Rank => opts.limits.rank_edges,
    };
    if let Instance::Signed(s) = instance {
        if !opts.modified {
            return Err(Failure::usage(
                "signed graphs only have the modified polynomial; pass --modified",
            ));
        }
        if method == Method::BruteForce {
            return Err(Failure::usage(
                "face tracing needs a ribbon graph; use --method rank",
            ));
        }
        check_cap(s.vertex_count(), cap)?;
        return Ok(modified_poly_signed_graph(s));
    }
    let g = ribbon(instance)?;
    if opts.modified {
        let b = instance.bouquet().ok_or_else(|| {
            Failure::usage("the modified polynomial is defined for bouquets and signed graphs")
        })?;
        check_cap(b.loop_count(), cap)?;
        return Ok(modified_poly_bouquet(&b, method));
    }
    match (method, tree) {
        (Method::Rank, Some(_)) if g.vertex_count() > 1 => {
            let t = tree_for(&g, tree)?;
            Ok(petrial::petrial_poly_rank_with(&g, &t, &opts.limits)?)
        }
        _ => Ok(petrial_poly(&g, method, &opts.limits)?),
    }
}

fn cmd_poly(
    input: &InputArgs,
    opts: &PolyOptions,
    tree: &Option<Vec<Label>>,
    output: &OutputArgs,
) -> Result<u8, Failure> {
    let instance = load(input)?;
    let (poly, name, code) = match opts.method {
        MethodArg::Rank => (
            compute_poly(&instance, Method::Rank, opts, tree)?,
            "rank",
            0,
        ),
        MethodArg::Bruteforce => (
            compute_poly(&instance, Method::BruteForce, opts, tree)?,
            "bruteforce",
            0,
        ),
        MethodArg::Both => {
            let rank = compute_poly(&instance, Method::Rank, opts, tree)?;
            let brute = compute_poly(&instance, Method::BruteForce, opts, tree)?;
            if rank != brute {
                eprintln!("methods disagree:\n  rank:       {rank}\n  bruteforce: {brute}");
                return Ok(1);
            }
            (rank, "both", 0)
        }
    };
    let (edges, vertices) = match &instance {
        Instance::Signed(s) => (None, Some(s.vertex_count())),
        other => {
            let g = other.ribbon().expect("ribbon instance");
            (Some(g.edge_count()), Some(g.vertex_count()))
        }
    };
    match output.format {
        OutputFormat::Json => print_json(&PolyReport {
            poly: &poly,
            edges,
            vertices,
            method: name,
            modified: opts.modified,
            coeff_sum: poly.coefficient_sum(),
        }),
        OutputFormat::Text => println!("{poly}"),
    }
    Ok(code)
}

#[derive(Serialize)]
struct AuxReport {
    tree: Vec<Label>,
    bouquet: String,
    loops: usize,
    genus: usize,
}

fn cmd_aux(
    input: &InputArgs,
    tree: &Option<Vec<Label>>,
    output: &OutputArgs,
) -> Result<u8, Failure> {
    let g = ribbon(&load(input)?)?;
    let t = tree_for(&g, tree)?;
    let aux = aux_bouquet(&g, &t)?;
    let report = AuxReport {
        tree: t.edges().iter().collect(),
        bouquet: aux.to_string(),
        loops: aux.loop_count(),
        genus: aux.euler_genus(),
    };
    match output.format {
        OutputFormat::Json => print_json(&report),
        OutputFormat::Text => {
            println!(
                "# tree {}, {} loops, genus {}",
                t.edges(),
                report.loops,
                report.genus
            );
            println!("{}", report.bouquet);
        }
    }
    Ok(0)
}

fn cmd_contract(input: &InputArgs, edges: &[Label], output: &OutputArgs) -> Result<u8, Failure> {
    let g = ribbon(&load(input)?)?;
    let c = contract_edges(&g, edges)?;
    match output.format {
        OutputFormat::Json => print_json(&serde_json::json!({ "rotation": c.serialize() })),
        OutputFormat::Text => println!("{}", c.serialize().trim_end()),
    }
    Ok(0)
}

fn cmd_check(mode: CheckMode, opts: &CheckOptions, output: &OutputArgs) -> Result<u8, Failure> {
    let summaries = check::run_check(mode, opts);
    let failed: usize = summaries.iter().map(|s| s.failed).sum();
    match output.format {
        OutputFormat::Json => print_json(&summaries),
        OutputFormat::Text => {
            for s in &summaries {
                let status = if s.failed == 0 { "PASS" } else { "FAIL" };
                println!(
                    "{status} {}: {} passed, {} failed",
                    s.mode, s.passed, s.failed
                );
                for f in &s.failures {
                    println!("  {f}");
                }
            }
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn cmd_random(kind: RandomKind, size: usize, vertices: usize, seed: u64) -> Result<u8, Failure> {
    let max = match kind {
        RandomKind::SignedGraph => signed_graph::MAX_VERTICES,
        _ => ribbon::MAX_LABEL as usize,
    };
    if size > max {
        return Err(Failure::usage(format!(
            "--size {size} exceeds the supported maximum of {max}"
        )));
    }
    let mut rng = seeded_rng(seed);
    match kind {
        RandomKind::Bouquet => {
            println!("{}", random_bouquet(&mut rng, size));
        }
        RandomKind::Ribbon => {
            if vertices == 0 || size + 1 < vertices {
                return Err(Failure::usage(format!(
                    "a connected graph on {vertices} vertices needs at least {} edges",
                    vertices.saturating_sub(1)
                )));
            }
            println!(
                "{}",
                random_ribbon_graph(&mut rng, vertices, size)
                    .serialize()
                    .trim_end()
            );
        }
        RandomKind::SignedGraph => {
            println!("{}", random_signed_graph(&mut rng, size, 0.5));
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct InstanceReport {
    witness: Option<usize>,
    terms: Vec<String>,
    signs: [i64; 4],
    residual: String,
    pass: bool,
}

fn cmd_four_term(
    input: &InputArgs,
    mode: FourTermMode,
    pair: &Option<Vec<Label>>,
    opts: &CheckOptions,
    output: &OutputArgs,
) -> Result<u8, Failure> {
    if let Some(pair) = pair {
        let &[a, b] = pair.as_slice() else {
            return Err(Failure::usage(
                "--pair takes exactly two labels, e.g. --pair 1,2",
            ));
        };
        let instance = load(input)?;
        let reports = check::four_term_instance(mode, &instance, a, b, opts.all_witnesses)?;
        let rows: Vec<InstanceReport> = reports
            .iter()
            .enumerate()
            .map(|(i, r)| InstanceReport {
                witness: (mode != FourTermMode::Graph).then_some(i),
                terms: r.terms.iter().map(ToString::to_string).collect(),
                signs: r.signs,
                residual: r.combination.to_string(),
                pass: r.holds(),
            })
            .collect();
        let ok = rows.iter().all(|r| r.pass);
        match output.format {
            OutputFormat::Json => print_json(&rows),
            OutputFormat::Text => {
                for r in &rows {
                    let status = if r.pass { "PASS" } else { "FAIL" };
                    println!("{status} residual {}", r.residual);
                    for (label, (t, s)) in ["X", "X~", "X~'", "X'"]
                        .iter()
                        .zip(r.terms.iter().zip(r.signs))
                    {
                        println!("  {s:+} {label:<4} {t}");
                    }
                }
            }
        }
        return Ok(if ok { 0 } else { 1 });
    }
    if input.input.is_some() || input.inline.is_some() {
        return Err(Failure::usage("an input instance needs --pair a,b"));
    }
    let trials = check::four_term_trials(mode, opts);
    let failed = trials.iter().filter(|t| !t.pass).count();
    match output.format {
        OutputFormat::Json => print_json(&trials),
        OutputFormat::Text => {
            for t in &trials {
                let status = if t.pass { "PASS" } else { "FAIL" };
                print!(
                    "trial {}: {status} [{}] a={} b={}",
                    t.trial, t.instance, t.a, t.b
                );
                if t.pass {
                    println!();
                } else {
                    println!(" residual {}", t.residual);
                }
            }
            println!("{} passed, {failed} failed", trials.len() - failed);
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::usage(format!("thread pool: {e}")))?;
    }
    match cli.command {
        Command::Genus {
            input,
            tree,
            output,
        } => cmd_genus(&input, &tree, &output),
        Command::Poly {
            input,
            method,
            modified,
            tree,
            bruteforce_cap,
            rank_cap,
            force,
            output,
        } => {
            let limits = if force {
                Limits::unlimited()
            } else {
                Limits {
                    bruteforce_edges: bruteforce_cap,
                    rank_edges: rank_cap,
                }
            };
            let opts = PolyOptions {
                method,
                modified,
                limits,
            };
            cmd_poly(&input, &opts, &tree, &output)
        }
        Command::Aux {
            input,
            tree,
            output,
        } => cmd_aux(&input, &tree, &output),
        Command::Contract {
            input,
            edges,
            output,
        } => cmd_contract(&input, &edges, &output),
        Command::Check {
            mode,
            random,
            seed,
            max_size,
            all_witnesses,
            output,
        } => cmd_check(
            mode,
            &CheckOptions {
                random,
                seed,
                max_size,
                all_witnesses,
            },
            &output,
        ),
        Command::Random {
            kind,
            size,
            vertices,
            seed,
        } => cmd_random(kind, size, vertices, seed),
        Command::FourTerm {
            input,
            mode,
            pair,
            random,
            seed,
            max_size,
            all_witnesses,
            output,
        } => cmd_four_term(
            &input,
            mode,
            &pair,
            &CheckOptions {
                random,
                seed,
                max_size,
                all_witnesses,
            },
            &output,
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
