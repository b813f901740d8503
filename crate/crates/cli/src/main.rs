use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperlab::constructors::build_sigma_hypergraph_guarded;
use hyperlab::harness::{render_reports, run_suite, Format, Suite, SuiteSettings};
use hyperlab::io::{self, Loaded};
use hyperlab::{iterate_star, EdgeRule, ExtensionParams, Limits, Partition, Solver};
use serde_json::json;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_SIZE_GUARD: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hyperlab",
    version,
    about = "Exact colourings, spectra and cliques of r-uniform hypergraphs"
)]
struct Cli {
    /// Master seed for randomized commands.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Override the vertex size guard (default 64, at most 128).
    #[arg(long, global = true, env = "HYPERLAB_GUARD")]
    guard_vertices: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    /// Write output here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
    Csv,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Table => Format::Table,
            OutputFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a hypergraph family.
    #[command(subcommand)]
    Construct(Construct),
    /// Apply a (p,q)-extension over one edge.
    Extend(ExtendArgs),
    /// Apply the t-star extension, optionally repeatedly.
    Star(StarArgs),
    /// Chromatic number with a witness colouring.
    Chi(InputArgs),
    /// (alpha,beta)-spectrum with gaps.
    Spectrum(SpectrumArgs),
    /// Clique number with a witness clique.
    Clique(InputArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum Construct {
    /// H(n, r, q | sigma).
    Sigma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: usize,
        /// Comma-separated parts, e.g. 3,1.
        #[arg(long, value_parser = parse_partition)]
        sigma: Partition,
    },
}

#[derive(Args)]
struct InputArgs {
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Args)]
struct ExtendArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    edge: usize,
    #[arg(long = "p")]
    p: usize,
    #[arg(long = "qext", default_value_t = 0)]
    q_ext: usize,
    #[arg(long = "T", value_delimiter = ',', required = true)]
    t: Vec<usize>,
    #[arg(long = "P", value_delimiter = ',')]
    p_sizes: Vec<usize>,
    #[arg(long = "Q", value_delimiter = ',')]
    q_sizes: Vec<usize>,
}

#[derive(Args)]
struct StarArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Edge for a single extension; with --steps the rule picks later edges.
    #[arg(long)]
    edge: Option<usize>,
    #[arg(long)]
    t: usize,
    #[arg(long, default_value_t = 1)]
    steps: usize,
    #[arg(long, value_enum, default_value_t = Rule::First)]
    rule: Rule,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    First,
    Last,
    Random,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = 2)]
    alpha: usize,
    #[arg(long, default_value_t = 2)]
    beta: usize,
    #[arg(long)]
    emit_witnesses: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite id, numbered alias, or `all`.
    #[arg(value_parser = parse_suites)]
    suite: SuiteChoice,
    /// Instance count for randomized suites.
    #[arg(long)]
    trials: Option<usize>,
}

#[derive(Clone)]
struct SuiteChoice(Vec<Suite>);

fn parse_suites(s: &str) -> Result<SuiteChoice, String> {
    if s == "all" {
        return Ok(SuiteChoice(Suite::ALL.to_vec()));
    }
    s.parse::<Suite>().map(|x| SuiteChoice(vec![x]))
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse_csv(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let guard = is_size_guard(&err);
            ExitCode::from(if guard { EXIT_SIZE_GUARD } else { EXIT_USAGE })
        }
    }
}

fn is_size_guard(err: &anyhow::Error) -> bool {
    err.chain().any(|e| {
        e.downcast_ref::<hyperlab::Error>()
            .is_some_and(hyperlab::Error::is_size_guard)
            || matches!(
                e.downcast_ref::<hyperlab::SolverError>(),
                Some(hyperlab::SolverError::SizeGuardExceeded { .. })
            )
            || matches!(
                e.downcast_ref::<hyperlab::ConstructError>(),
                Some(hyperlab::ConstructError::SizeGuardExceeded { .. })
            )
    })
}

fn limits(cli: &Cli) -> Result<Limits> {
    let mut limits = Limits::default();
    if let Some(g) = cli.guard_vertices {
        limits = limits.with_search_guard(g)?;
    }
    Ok(limits)
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<Loaded> {
    Ok(io::load(path)?)
}

fn run(cli: &Cli) -> Result<u8> {
    let limits = limits(cli)?;
    let solver = Solver::new(limits);
    match &cli.command {
        Command::Construct(Construct::Sigma { n, r, q, sigma }) => {
            let (h, meta) = build_sigma_hypergraph_guarded(*n, *r, *q, sigma, limits.search)?;
            emit(cli, &io::to_json(&h, Some(&meta)))?;
        }
        Command::Extend(args) => {
            let base = load(&args.input)?.hypergraph;
            let params = ExtensionParams::new(
                args.edge,
                args.p,
                args.q_ext,
                args.t.iter().copied(),
                args.p_sizes.iter().copied(),
                args.q_sizes.iter().copied(),
            );
            let h = hyperlab::extend_pq(&base, &params)?;
            emit(cli, &io::to_json(&h, None))?;
        }
        Command::Star(args) => {
            let mut h = load(&args.input)?.hypergraph;
            let mut steps = args.steps;
            if let Some(edge) = args.edge {
                if steps > 0 {
                    h = hyperlab::star_extend(&h, edge, args.t)?;
                    steps -= 1;
                }
            }
            let rule = match args.rule {
                Rule::First => EdgeRule::First,
                Rule::Last => EdgeRule::Last,
                Rule::Random => EdgeRule::Random(cli.seed),
            };
            let h = iterate_star(&h, args.t, steps, rule)?;
            emit(cli, &io::to_json(&h, None))?;
        }
        Command::Chi(args) => {
            let h = load(&args.input)?.hypergraph;
            let (chi, witness) = solver.chromatic_number(&h)?;
            let text = match cli.format {
                OutputFormat::Json => format!("{}\n", json!({ "chromatic_number": chi, "witness": witness })),
                OutputFormat::Csv => format!("chromatic_number,witness\n{chi},{}\n", join(witness.colours())),
                OutputFormat::Table => format!(
                    "chromatic number  {chi}\nwitness           {}\n",
                    join(witness.colours())
                ),
            };
            emit(cli, &text)?;
        }
        Command::Spectrum(args) => {
            let h = load(&args.input)?.hypergraph;
            let spec = solver.ab_spectrum(&h, args.alpha, args.beta)?;
            let text = match cli.format {
                OutputFormat::Json => {
                    let mut record = json!({
                        "alpha": spec.alpha,
                        "beta": spec.beta,
                        "feasible": spec.feasible,
                        "gaps": spec.gaps,
                        "lower": spec.lower(),
                        "upper": spec.upper(),
                    });
                    if args.emit_witnesses {
                        record["witnesses"] = json!(spec.witnesses);
                    }
                    format!("{record}\n")
                }
                OutputFormat::Csv => {
                    let mut s = String::from("k,feasible,witness\n");
                    for k in 1..=h.vertex_count() {
                        let w = spec.witnesses.get(&k);
                        let witness = match (args.emit_witnesses, w) {
                            (true, Some(c)) => join(c.colours()),
                            _ => String::new(),
                        };
                        s.push_str(&format!("{k},{},{witness}\n", w.is_some()));
                    }
                    s
                }
                OutputFormat::Table => {
                    let mut s = format!(
                        "({},{})-spectrum  {{{}}}\ngaps              {{{}}}\n",
                        spec.alpha,
                        spec.beta,
                        join(&spec.feasible),
                        join(&spec.gaps)
                    );
                    if args.emit_witnesses {
                        for (k, c) in &spec.witnesses {
                            s.push_str(&format!("k = {k:<3}          {}\n", join(c.colours())));
                        }
                    }
                    s
                }
            };
            emit(cli, &text)?;
        }
        Command::Clique(args) => {
            let h = load(&args.input)?.hypergraph;
            let (omega, witness) = solver.clique_number(&h)?;
            let text = match cli.format {
                OutputFormat::Json => format!("{}\n", json!({ "clique_number": omega, "witness": witness.members() })),
                OutputFormat::Csv => format!("clique_number,witness\n{omega},{}\n", join(witness.members())),
                OutputFormat::Table => format!("clique number  {omega}\nwitness        {}\n", join(witness.members())),
            };
            emit(cli, &text)?;
        }
        Command::Verify(args) => {
            let settings = SuiteSettings {
                seed: cli.seed,
                trials: args.trials,
            };
            let mut reports = Vec::new();
            for &suite in &args.suite.0 {
                reports.extend(run_suite(&solver, suite, settings)?);
            }
            emit(cli, &render_reports(&reports, cli.format.into()))?;
            if reports.iter().any(|r| !r.pass) {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
    }
    Ok(0)
}

fn join(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}
