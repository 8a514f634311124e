//! `spex` command-line tool: characteristic polynomials, spectral radii, family
//! trees, dominating control sets, enumeration and extremal verification.

mod output;

use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use spex::families::{build_family, predicted_minimizer, FamilySpec};
use spex::graph::{canonical_form, matching_number};
use spex::search::{
    argmin_spectral, enumerate_trees, verify_theorem, SearchOptions, TheoremId, VerifyOptions,
};
use spex::spectral::{
    char_poly, check_tol, spectral_radius, Polynomial, SpectralValue, DEFAULT_TOL,
};
use spex::structure::{structure_report, StructureReport};
use spex::{Error, Graph};

use output::{Format, Rendered};

#[derive(Debug, Parser)]
#[command(
    name = "spex",
    version,
    about = "Spectral radius of trees with a given matching number"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Enclosure width for reported spectral radii (at least 1e-13).
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,

    /// Seed for random graph sampling.
    #[arg(long, global = true, default_value_t = spex::search::DEFAULT_SEED)]
    seed: u64,

    /// Worker threads for enumeration and search.
    #[arg(long, global = true, env = "SPEX_WORKERS")]
    workers: Option<usize>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact characteristic polynomial and spectral radius enclosure.
    Charpoly {
        /// Edge-list file (`n m` header, then one edge per line) or a family spec like `T2(2,3)`.
        input: String,
    },
    /// Certified spectral radius.
    Rho { input: String },
    /// Build a family tree, or list the predicted minimizers for `--n` and `--beta`.
    Family {
        spec: Option<String>,
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        beta: Option<usize>,
    },
    /// Connected maximum matching, dominating control set and quasi-adjacency graph of a tree.
    Structure { input: String },
    /// Count unlabeled trees per order.
    Enumerate {
        #[arg(long)]
        n: String,
        #[arg(long)]
        beta: Option<usize>,
        /// Include the canonical code of every tree.
        #[arg(long)]
        list: bool,
    },
    /// Exhaustive spectral minimizers over trees with matching number `--beta`.
    Argmin {
        #[arg(long)]
        n: String,
        #[arg(long)]
        beta: usize,
    },
    /// Compare exhaustive search with a stated result: 1.1, 1.2, 1.3 or 2.6.
    Verify {
        theorem: String,
        #[arg(long)]
        n: String,
        /// Random graphs drawn for 2.6.
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}

/// Validated run settings shared by all commands.
#[derive(Debug, Clone)]
struct RunConfig {
    tol: f64,
    seed: u64,
    workers: usize,
    out: Option<PathBuf>,
    format: Format,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Result<Self, Failure> {
        check_tol(cli.tol).map_err(Failure::from)?;
        let workers = cli
            .workers
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        if workers == 0 {
            return Err(Failure::usage("worker count must be at least 1"));
        }
        let format = match cli.format {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        };
        Ok(RunConfig {
            tol: cli.tol,
            seed: cli.seed,
            workers,
            out: cli.out.clone(),
            format,
        })
    }

    fn search(&self) -> SearchOptions {
        SearchOptions {
            workers: self.workers,
            tol: self.tol,
        }
    }
}

/// An error with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Precondition(_) | Error::EmptyClass { .. } => 3,
            Error::ProofStep(_) | Error::NoConvergence(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, Failure> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Failure::usage(format!("bad order range {s:?}")))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(Failure::usage(format!("empty order range {s:?}")));
    }
    Ok(lo..=hi)
}

/// A graph file if the path exists, otherwise a family spec.
fn load_input(input: &str) -> Result<(String, Graph), Failure> {
    if Path::new(input).is_file() {
        let text =
            std::fs::read_to_string(input).map_err(|e| Failure::usage(format!("{input}: {e}")))?;
        let g: Graph = text
            .parse()
            .map_err(|e: Error| Failure::usage(format!("{input}: {e}")))?;
        return Ok((input.to_string(), g));
    }
    let spec: FamilySpec = input.parse().map_err(|e: Error| {
        Failure::usage(format!(
            "{input:?} is neither a readable file nor a family spec ({e})"
        ))
    })?;
    Ok((spec.to_string(), build_family(&spec)?))
}

#[derive(Serialize)]
struct CharpolyReport {
    input: String,
    n: usize,
    m: usize,
    coefficients: Polynomial,
    polynomial: String,
    rho: SpectralValue,
}

#[derive(Serialize)]
struct RhoReport {
    input: String,
    n: usize,
    rho: SpectralValue,
}

#[derive(Serialize)]
struct FamilyReport {
    spec: String,
    n: usize,
    beta: usize,
    canonical: String,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct StructureOutput {
    input: String,
    n: usize,
    beta: usize,
    #[serde(flatten)]
    report: StructureReport,
}

#[derive(Serialize)]
struct EnumerationRow {
    n: usize,
    beta: Option<usize>,
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    trees: Option<Vec<String>>,
}

fn run(cli: &Cli, cfg: &RunConfig) -> Result<(Rendered, bool), Failure> {
    let ok = |r: Rendered| Ok((r, true));
    match &cli.command {
        Command::Charpoly { input } => {
            let (input, g) = load_input(input)?;
            let p = char_poly(&g);
            let rho = spectral_radius(&g, cfg.tol)?;
            ok(Rendered::json(&CharpolyReport {
                input,
                n: g.n(),
                m: g.m(),
                polynomial: p.to_string(),
                coefficients: p,
                rho,
            }))
        }
        Command::Rho { input } => {
            let (input, g) = load_input(input)?;
            ok(Rendered::json(&RhoReport {
                input,
                n: g.n(),
                rho: spectral_radius(&g, cfg.tol)?,
            }))
        }
        Command::Family {
            spec: Some(spec), ..
        } => {
            let spec: FamilySpec = spec.parse()?;
            let g = build_family(&spec)?;
            ok(Rendered::json(&FamilyReport {
                spec: spec.to_string(),
                n: g.n(),
                beta: matching_number(&g),
                canonical: canonical_form(&g)?.to_string(),
                edges: g.edges().collect(),
            }))
        }
        Command::Family {
            spec: None,
            n,
            beta,
        } => {
            let (Some(n), Some(beta)) = (n, beta) else {
                return Err(Failure::usage("give a family spec, or both --n and --beta"));
            };
            let preds = parse_range(n)?
                .map(|n| predicted_minimizer(n, *beta))
                .collect::<Result<Vec<_>, _>>()?;
            ok(Rendered::json(&preds))
        }
        Command::Structure { input } => {
            let (input, g) = load_input(input)?;
            g.require_tree()?;
            let beta = matching_number(&g);
            let report = structure_report(&g)?;
            ok(Rendered::json(&StructureOutput {
                input,
                n: g.n(),
                beta,
                report,
            }))
        }
        Command::Enumerate { n, beta, list } => {
            let mut rows = Vec::new();
            for n in parse_range(n)? {
                let mut stream = enumerate_trees(n)?;
                if let Some(b) = beta {
                    stream = stream.with_beta(*b);
                }
                let row = if *list {
                    let trees: Vec<String> = stream
                        .map(|t| canonical_form(&t).map(|c| c.to_string()))
                        .collect::<Result<_, _>>()?;
                    EnumerationRow {
                        n,
                        beta: *beta,
                        count: trees.len(),
                        trees: Some(trees),
                    }
                } else {
                    EnumerationRow {
                        n,
                        beta: *beta,
                        count: stream.count_trees(),
                        trees: None,
                    }
                };
                log::info!("n = {n}: {} trees", row.count);
                rows.push(row);
            }
            ok(Rendered::enumeration(rows))
        }
        Command::Argmin { n, beta } => {
            let results = parse_range(n)?
                .map(|n| {
                    log::info!("searching n = {n}, beta = {beta}");
                    argmin_spectral(n, *beta, &cfg.search())
                })
                .collect::<Result<Vec<_>, _>>()?;
            ok(Rendered::argmin(results))
        }
        Command::Verify {
            theorem,
            n,
            samples,
        } => {
            let id: TheoremId = theorem.parse()?;
            let opts = VerifyOptions {
                search: cfg.search(),
                seed: cfg.seed,
                samples: *samples,
            };
            let report = verify_theorem(id, parse_range(n)?, &opts)?;
            let agrees = report.agrees;
            Ok((Rendered::verify(report), agrees))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let result = RunConfig::from_cli(&cli).and_then(|cfg| {
        let (rendered, agrees) = run(&cli, &cfg)?;
        let text = rendered.render(cfg.format).map_err(Failure::usage)?;
        match &cfg.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
            None => print!("{text}"),
        }
        Ok(agrees)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("discrepancy found; see report");
            ExitCode::from(1)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..16").unwrap(), 4..=16);
        assert_eq!(parse_range("4..=16").unwrap(), 4..=16);
        assert_eq!(parse_range("19").unwrap(), 19..=19);
        assert!(parse_range("9..4").is_err());
        assert!(parse_range("a..4").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::from(Error::Precondition("x".into())).code, 3);
        assert_eq!(Failure::from(Error::NotATree).code, 2);
        assert_eq!(Failure::from(Error::ToleranceTooSmall(1e-20)).code, 2);
    }
}
