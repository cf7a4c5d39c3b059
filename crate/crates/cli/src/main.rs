mod bench;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use speccon::io::{
    gen_random, parse_dimacs, parse_edge_list, parse_instance, serialize_instance, write_dimacs,
    GenParams, ReductionDocument, VerdictDocument,
};
use speccon::reductions::{
    hamiltonian_to_crn, pad_channels, sat_to_uniform, uniform_to_speccon, uniform_to_two_channel,
    vertex_cover_to_crn, ReductionArtifact, UniformCnfFormula,
};
use speccon::solvers::{
    solve_auto_with, solve_treewidth_dp_with, solve_treewidth_literal_with, solve_with,
};
use speccon::treedecomp::{parse_td, to_nice, verify};
use speccon::{SolverConfig, SolverError, SolverKind, Verdict};

#[derive(Parser)]
#[command(name = "speccon", version, about = "Spectrum connectivity for cognitive radio networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide connectability of an instance document (`-` reads stdin).
    Solve {
        #[arg(long, value_enum, default_value_t = SolverArg::Auto)]
        solver: SolverArg,
        /// Include the witness assignment in the verdict.
        #[arg(long)]
        emit_assignment: bool,
        /// Include search counters and elapsed time.
        #[arg(long)]
        stats: bool,
        /// Tree decomposition of the potential graph (PACE `.td`) for the treewidth solvers.
        #[arg(long)]
        td: Option<PathBuf>,
        /// Largest width the treewidth solvers and the dispatcher will decompose to.
        #[arg(long, default_value_t = 3)]
        treewidth_bound: usize,
        /// Give up after this many seconds.
        #[arg(long)]
        time_limit: Option<f64>,
        input: PathBuf,
    },
    /// Write a random instance document.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        beta: usize,
        /// Edge probability.
        #[arg(long)]
        p: f64,
        /// Map density.
        #[arg(long)]
        q: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate an instance from a SAT formula or a graph.
    Reduce {
        #[command(subcommand)]
        kind: ReduceKind,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Run a sweep described by a JSON config and print CSV.
    Bench { config: PathBuf },
    /// Check a PACE tree decomposition against an edge-list graph.
    VerifyTd {
        graph: PathBuf,
        td: PathBuf,
        /// Vertex count, if larger than the edge list implies.
        #[arg(long)]
        vertices: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ReduceKind {
    /// Uniform DIMACS CNF to `beta + 1` channels with budget `beta`.
    UniformSat {
        #[arg(long)]
        beta: usize,
        /// Add unused channels up to this total.
        #[arg(long)]
        pad: Option<usize>,
        cnf: PathBuf,
    },
    /// Uniform DIMACS CNF to two channels.
    TwoChannel { cnf: PathBuf },
    /// Edge-list graph to a Hamiltonian-path instance.
    Ham {
        #[arg(long)]
        vertices: Option<usize>,
        graph: PathBuf,
    },
    /// Edge-list graph and cover size to a star instance.
    Vc {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        vertices: Option<usize>,
        graph: PathBuf,
    },
    /// Rewrite a DIMACS CNF into an equisatisfiable uniform one (DIMACS out).
    SatToUniform { cnf: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum SolverArg {
    Auto,
    Brute,
    BetaOne,
    FullOpen,
    Tree,
    Treewidth,
    TreewidthLiteral,
    Complete,
    Spanning,
}

impl SolverArg {
    pub(crate) fn kind(self) -> Option<SolverKind> {
        Some(match self {
            SolverArg::Auto => return None,
            SolverArg::Brute => SolverKind::BruteForce,
            SolverArg::BetaOne => SolverKind::BetaOne,
            SolverArg::FullOpen => SolverKind::FullOpen,
            SolverArg::Tree => SolverKind::TreeDp,
            SolverArg::Treewidth => SolverKind::TreewidthDp,
            SolverArg::TreewidthLiteral => SolverKind::TreewidthLiteral,
            SolverArg::Complete => SolverKind::Complete,
            SolverArg::Spanning => SolverKind::SpanningTree,
        })
    }
}

/// A failure with its exit code: 2 for usage and input errors, 3 for solver refusals.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure { code: 2, error }
    }
}

pub(crate) fn refusal_code(e: &SolverError) -> u8 {
    match e {
        SolverError::InvalidNetwork(_) | SolverError::InvalidDecomposition(_) => 2,
        _ => 3,
    }
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn write_output(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                out.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn solve(
    solver: SolverArg,
    emit_assignment: bool,
    stats: bool,
    td: Option<&Path>,
    config: &SolverConfig,
    input: &Path,
) -> Result<u8, Failure> {
    let text = read_input(input)?;
    let network = parse_instance(&text).with_context(|| format!("parsing {}", input.display()))?;
    let result: Result<Verdict, SolverError> = match (td, solver.kind()) {
        (Some(td_path), Some(kind @ (SolverKind::TreewidthDp | SolverKind::TreewidthLiteral))) => {
            let (td, _) = parse_td(&read_input(td_path)?)
                .with_context(|| format!("parsing {}", td_path.display()))?;
            let ntd = to_nice(&network.potential_graph(), &td)
                .with_context(|| format!("checking {}", td_path.display()))?;
            if kind == SolverKind::TreewidthDp {
                solve_treewidth_dp_with(&network, &ntd, config)
            } else {
                solve_treewidth_literal_with(&network, &ntd, config)
            }
        }
        (Some(_), _) => {
            return Err(anyhow!("--td only applies to --solver treewidth or treewidth-literal").into())
        }
        (None, None) => solve_auto_with(&network, config),
        (None, Some(kind)) => solve_with(kind, &network, config),
    };
    let verdict = result.map_err(|e| Failure {
        code: refusal_code(&e),
        error: e.into(),
    })?;
    let doc = VerdictDocument::new(&network, &verdict, emit_assignment, stats);
    let json = serde_json::to_string_pretty(&doc).context("serializing verdict")?;
    write_output(None, &json)?;
    Ok(if verdict.connectable { 0 } else { 1 })
}

fn read_uniform(path: &Path) -> anyhow::Result<UniformCnfFormula> {
    let f = parse_dimacs(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))?;
    Ok(UniformCnfFormula::new(f)?)
}

fn read_graph(path: &Path, vertices: Option<usize>) -> anyhow::Result<speccon::Graph> {
    parse_edge_list(&read_input(path)?, vertices).with_context(|| format!("parsing {}", path.display()))
}

fn reduce(kind: ReduceKind, output: Option<&Path>) -> anyhow::Result<()> {
    let art: ReductionArtifact = match kind {
        ReduceKind::UniformSat { beta, pad, cnf } => {
            let art = uniform_to_speccon(&read_uniform(&cnf)?, beta)?;
            match pad {
                Some(k) => pad_channels(&art, k)?,
                None => art,
            }
        }
        ReduceKind::TwoChannel { cnf } => uniform_to_two_channel(&read_uniform(&cnf)?)?,
        ReduceKind::Ham { vertices, graph } => hamiltonian_to_crn(&read_graph(&graph, vertices)?)?,
        ReduceKind::Vc { r, vertices, graph } => {
            vertex_cover_to_crn(&read_graph(&graph, vertices)?, r)?
        }
        ReduceKind::SatToUniform { cnf } => {
            let f = parse_dimacs(&read_input(&cnf)?)
                .with_context(|| format!("parsing {}", cnf.display()))?;
            let (uniform, map) = sat_to_uniform(&f);
            let mut text = String::new();
            for (x, y) in map.complements {
                text.push_str(&format!("c complement {x} {y}\n"));
            }
            text.push_str(&write_dimacs(uniform.formula()));
            return write_output(output, &text);
        }
    };
    write_output(output, &ReductionDocument::from_artifact(&art).to_json())
}

fn verify_td(graph: &Path, td: &Path, vertices: Option<usize>) -> Result<u8, Failure> {
    let g = read_graph(graph, vertices)?;
    let (td, _) = parse_td(&read_input(td)?).with_context(|| format!("parsing {}", td.display()))?;
    match verify(&g, &td) {
        Ok(()) => {
            write_output(None, &format!("valid, width {}", td.width()))?;
            Ok(0)
        }
        Err(v) => {
            eprintln!("invalid: {v}");
            Ok(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Solve {
            solver,
            emit_assignment,
            stats,
            td,
            treewidth_bound,
            time_limit,
            input,
        } => {
            let mut config = SolverConfig {
                treewidth_bound,
                ..SolverConfig::default()
            };
            if let Some(secs) = time_limit {
                if !secs.is_finite() || secs <= 0.0 {
                    return Err(anyhow!("--time-limit must be positive").into());
                }
                config = config.with_time_limit(Duration::from_secs_f64(secs));
            }
            solve(solver, emit_assignment, stats, td.as_deref(), &config, &input)
        }
        Command::Gen { n, k, beta, p, q, seed, output } => {
            let net = gen_random(GenParams { n, k, beta, p, q, seed }).map_err(|e| anyhow!(e))?;
            write_output(output.as_deref(), &serialize_instance(&net))?;
            Ok(0)
        }
        Command::Reduce { kind, output } => {
            reduce(kind, output.as_deref())?;
            Ok(0)
        }
        Command::Bench { config } => {
            let text = read_input(&config)?;
            let cfg = bench::BenchConfig::parse(&text)
                .with_context(|| format!("parsing {}", config.display()))?;
            bench::run(&cfg, io::stdout().lock())?;
            Ok(0)
        }
        Command::VerifyTd { graph, td, vertices } => verify_td(&graph, &td, vertices),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
