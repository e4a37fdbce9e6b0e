//! `isomet`: metric embeddability analysis from the command line.
//!
//! Every command reads JSON files, writes one JSON document to stdout, and
//! keeps diagnostics on stderr. Exit codes: 0 success, 1 domain error,
//! 2 usage error.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use isomet::families::{self, FamilySpec};
use isomet::geomspec::{classic_lambda2, geometric_fiedler, orthogonality_defect, HarmonicMap};
use isomet::json;
use isomet::metric::{critical_graph, require_unit_weights, MetricSpace, SimpleGraph};
use isomet::schoenberg::{embed_coordinates, is_embeddable, kernel_trace_profile};
use isomet::structure::{classify_4point, classify_unweighted, verify_unweighted_theorem_with};

#[derive(Parser)]
#[command(name = "isomet", version, about = "Isometric embeddability of finite metric spaces")]
struct Cli {
    /// Numerical tolerance for metric validation and spectral verdicts.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the metric axioms of a distance matrix.
    Validate {
        #[arg(long)]
        metric: PathBuf,
    },
    /// Construct the critical graph of a metric.
    Critgraph {
        #[arg(long)]
        metric: PathBuf,
        /// Emit DOT instead of graph JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Spectral embeddability test with witness and kernel trace profile.
    TestEmbed {
        #[arg(long)]
        metric: PathBuf,
    },
    /// Explicit Euclidean coordinates realizing the metric.
    Embed {
        #[arg(long)]
        metric: PathBuf,
        /// Base point anchoring the kernel.
        #[arg(long, default_value_t = 0)]
        base: usize,
    },
    /// Structural class of the metric's critical graph.
    Classify {
        #[arg(long)]
        metric: PathBuf,
    },
    /// Exact geometric Fiedler value of a graph over a target metric.
    Fiedler {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        metric: PathBuf,
    },
    /// Orthogonality defect of two vertex-to-point maps.
    Ortho {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        metric: PathBuf,
        /// Comma-separated point indices, one per vertex.
        #[arg(long)]
        f1: String,
        /// Comma-separated point indices, one per vertex.
        #[arg(long)]
        f2: String,
    },
    /// Generate a named family metric as metric JSON.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        z: Option<u64>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively verify the path-or-complete characterization.
    VerifyTheorem {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Claw,
    ClawPlusEdge,
    Diamond,
    PythagoreanK4e,
    Snk,
    RandomEuclidean,
}

enum CliError {
    Domain(isomet::Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl From<isomet::Error> for CliError {
    fn from(e: isomet::Error) -> Self {
        CliError::Domain(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{}: {e}", e.name()),
            CliError::Io(path, e) => write!(f, "Io: {}: {e}", path.display()),
            CliError::Usage(msg) => write!(f, "usage: {msg}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ CliError::Usage(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load_metric(path: &Path, tol: f64) -> Result<MetricSpace, CliError> {
    Ok(json::parse_metric(&read(path)?, tol)?)
}

fn load_unit_graph(path: &Path) -> Result<SimpleGraph, CliError> {
    let weighted = json::parse_graph(&read(path)?)?;
    Ok(require_unit_weights(&weighted)?)
}

fn parse_assignment(flag: &str, raw: &str) -> Result<Vec<usize>, CliError> {
    raw.split(',')
        .map(|part| {
            part.trim().parse::<usize>().map_err(|_| {
                CliError::Usage(format!("--{flag} expects comma-separated indices, got {raw:?}"))
            })
        })
        .collect()
}

fn run(cli: Cli) -> Result<(), CliError> {
    let tol = cli.tol;
    match cli.command {
        Command::Validate { metric } => {
            let m = load_metric(&metric, tol)?;
            println!("{{\"valid\":true,\"n\":{}}}", m.n());
        }
        Command::Critgraph { metric, dot } => {
            let m = load_metric(&metric, tol)?;
            let cg = critical_graph(&m, tol);
            if dot {
                print!("{}", json::critical_to_dot(&cg));
            } else {
                println!("{}", json::graph_to_json(&cg.graph));
            }
        }
        Command::TestEmbed { metric } => {
            let m = load_metric(&metric, tol)?;
            let report = is_embeddable(&m, tol);
            let profile = kernel_trace_profile(&m);
            println!("{}", json::report_to_json(&report, &profile));
        }
        Command::Embed { metric, base } => {
            let m = load_metric(&metric, tol)?;
            let embedding = embed_coordinates(&m, base, tol)?;
            println!("{}", json::embedding_to_json(&embedding));
        }
        Command::Classify { metric } => {
            let m = load_metric(&metric, tol)?;
            let class = if m.n() == 4 {
                classify_4point(&m)?
            } else {
                classify_unweighted(&critical_graph(&m, tol).structure())?
            };
            let embeddable = is_embeddable(&m, tol).embeddable;
            println!(
                "{{\"class\":{},\"embeddable\":{}}}",
                json::json_string(class.tag()),
                embeddable
            );
        }
        Command::Fiedler { graph, metric } => {
            let g = load_unit_graph(&graph)?;
            let x = load_metric(&metric, tol)?;
            let result = geometric_fiedler(&g, &x)?;
            let lambda2 = classic_lambda2(&g)?;
            println!("{}", json::fiedler_to_json(&result, lambda2));
        }
        Command::Ortho {
            graph,
            metric,
            f1,
            f2,
        } => {
            let g = load_unit_graph(&graph)?;
            let x = load_metric(&metric, tol)?;
            let a1 = parse_assignment("f1", &f1)?;
            let a2 = parse_assignment("f2", &f2)?;
            let h1 = HarmonicMap::new(g.clone(), x.clone(), a1)?;
            let h2 = HarmonicMap::new(g, x, a2)?;
            let defect = orthogonality_defect(&h1, &h2)?;
            println!("{{\"defect\":{}}}", json::fmt_g12(defect));
        }
        Command::Gen {
            family,
            n,
            k,
            z,
            dim,
            seed,
            out,
        } => {
            let spec = family_spec(family, n, k, z, dim, seed)?;
            let m = families::generate(&spec)?;
            let text = json::metric_to_json(&m);
            match out {
                Some(path) => {
                    fs::write(&path, text + "\n").map_err(|e| CliError::Io(path, e))?
                }
                None => println!("{text}"),
            }
        }
        Command::VerifyTheorem { max_n } => {
            let counterexamples = verify_unweighted_theorem_with(max_n, tol, |level| {
                eprintln!(
                    "n={}: {} masks, {} connected, {} mismatches",
                    level.n, level.masks, level.connected, level.mismatches
                );
            })?;
            let items: Vec<String> = counterexamples
                .iter()
                .map(|c| {
                    format!(
                        "{{\"n\":{},\"mask\":{},\"embeddable\":{},\"path_or_complete\":{}}}",
                        c.n, c.mask, c.spectral_embeddable, c.path_or_complete
                    )
                })
                .collect();
            println!("{{\"counterexamples\":[{}]}}", items.join(","));
        }
    }
    Ok(())
}

fn need<T>(value: Option<T>, family: &str, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--family {family} requires --{flag}")))
}

fn family_spec(
    family: Family,
    n: Option<usize>,
    k: Option<usize>,
    z: Option<u64>,
    dim: Option<usize>,
    seed: u64,
) -> Result<FamilySpec, CliError> {
    Ok(match family {
        Family::Path => FamilySpec::Path {
            n: need(n, "path", "n")?,
        },
        Family::Cycle => FamilySpec::Cycle {
            n: need(n, "cycle", "n")?,
        },
        Family::Complete => FamilySpec::Complete {
            n: need(n, "complete", "n")?,
        },
        Family::Claw => FamilySpec::Claw,
        Family::ClawPlusEdge => FamilySpec::ClawPlusEdge,
        Family::Diamond => FamilySpec::Diamond,
        Family::PythagoreanK4e => {
            let z = need(z, "pythagorean-k4e", "z")?;
            let pairs = families::pythagorean_pairs(z);
            if pairs.len() < 3 {
                return Err(CliError::Domain(isomet::Error::BadParameters {
                    reason: format!(
                        "z = {z} admits only {} equal-parity factor pairs, need 3",
                        pairs.len()
                    ),
                }));
            }
            FamilySpec::PythagoreanK4e {
                z,
                pairs: [pairs[0], pairs[1], pairs[2]],
            }
        }
        Family::Snk => FamilySpec::Snk {
            n: need(n, "snk", "n")?,
            k: need(k, "snk", "k")?,
        },
        Family::RandomEuclidean => FamilySpec::RandomEuclidean {
            n: need(n, "random-euclidean", "n")?,
            dim: need(dim, "random-euclidean", "dim")?,
            seed,
        },
    })
}
