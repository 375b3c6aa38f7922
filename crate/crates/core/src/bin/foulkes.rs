//! Command-line front end. Results go to standard output as JSON (or CSV/DOT
//! where requested); progress and errors go to standard error.
//!
//! Exit codes: 0 success, 1 usage or guard error, 2 verification failure,
//! 3 internal-consistency failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use foulkes::dataset::{build_dataset, oracle_check, MinimalEntry};
use foulkes::families::{close, enumerate_closed, enumerate_of_type, minimal_types, report};
use foulkes::generalized::generalized_report;
use foulkes::oracle::{decompose_with, Method};
use foulkes::partitions::{star, star_preimage};
use foulkes::specht::{hom_image, hom_image_unverified, verify_hom};
use foulkes::subsets::{downset, hasse_dot, levels_up_to};
use foulkes::{io, Error, Guards, MSubset, Partition};

#[derive(Parser)]
#[command(
    name = "foulkes",
    version,
    about = "Minimal constituents of Foulkes characters"
)]
struct Cli {
    /// Worker threads (default: available cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Largest m·n for closed-family enumeration.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    family_guard: Option<u64>,
    /// Largest degree N for the character oracle (also FOULKES_GUARD_POINTS).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    oracle_guard: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal types of set families of shape (m^n) with multiplicities.
    Minimal {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Cross-check against the character oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Decomposition of the Foulkes character φ^μ into irreducibles.
    Decompose {
        #[arg(long)]
        mu: Partition,
        /// Count fixed points by plain enumeration.
        #[arg(long)]
        naive: bool,
    },
    /// Garnir check and image statistics for the homomorphism of a family.
    VerifyHom {
        #[arg(long)]
        family: PathBuf,
        /// Run on families that are not closed; the report is marked unverified.
        #[arg(long)]
        force: bool,
        /// Write the image of the generating polytabloid to this file.
        #[arg(long)]
        image: Option<PathBuf>,
    },
    /// Minimal constituents of φ^(m^n) for all m + n <= S.
    Dataset {
        #[arg(long)]
        max_sum: usize,
        /// Check rows with m·n up to this bound against the oracle.
        #[arg(long)]
        oracle_max: Option<usize>,
        /// Directory for minimal.csv and minimal.json; without it rows go to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// All closed families of shape (m^n).
    ClosedFamilies {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Closes a family by repeatedly lowering entries.
    Closure {
        #[arg(long)]
        family: PathBuf,
        /// Also write the closed family to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Downset of an m-subset, or the first levels of the majorization lattice.
    Downset {
        /// Comma-separated elements, e.g. 2,4,6,8.
        #[arg(long, conflicts_with_all = ["m", "levels"])]
        set: Option<MSubset>,
        #[arg(long, requires = "levels")]
        m: Option<usize>,
        #[arg(long, requires = "m")]
        levels: Option<usize>,
        /// Emit a Graphviz Hasse diagram instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// The star partition (m^n)⋆ν, or the star preimage of λ.
    Star {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "lambda", conflicts_with = "lambda")]
        nu: Option<Partition>,
        #[arg(long)]
        lambda: Option<Partition>,
    },
    /// Minimal constituents of a generalized Foulkes character φ^μ.
    Generalized {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        oracle: bool,
    },
    /// All set families of shape (m^n) and the given type.
    EnumerateOfType {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: Partition,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum Failure {
    Error(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotClosed => 2,
        Error::Internal(_) => 3,
        _ => 1,
    }
}

fn print_json<T: serde::Serialize + ?Sized>(value: &T) -> Result<(), Failure> {
    print!("{}", io::to_json(value)?);
    Ok(())
}

fn guards(cli: &Cli) -> Guards {
    let mut g = Guards::from_env();
    if let Some(p) = cli.family_guard {
        g.family_points = p as usize;
    }
    if let Some(p) = cli.oracle_guard {
        g.oracle_points = p as usize;
    }
    g
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let g = guards(cli);
    match &cli.command {
        Command::Minimal { m, n, oracle } => {
            let types = minimal_types(*m, *n, &g)?;
            let entries: Vec<MinimalEntry> = types
                .iter()
                .map(|t| MinimalEntry {
                    lambda: t.lambda.clone(),
                    d: t.multiplicity as u64,
                })
                .collect();
            let check = if *oracle {
                Some(oracle_check(*m, *n, &entries, &g)?)
            } else {
                None
            };
            print_json(&json!({ "m": m, "n": n, "minimal": types, "oracle": check }))?;
            if let Some(c) = check.filter(|c| !c.verified) {
                return Err(Failure::Verification(c.mismatches.join("; ")));
            }
        }
        Command::Decompose { mu, naive } => {
            let method = if *naive {
                Method::Naive
            } else {
                Method::Assembled
            };
            print_json(&decompose_with(mu, &g, method)?)?;
        }
        Command::VerifyHom {
            family,
            force,
            image,
        } => {
            let f = io::read_family(family)?;
            let v = verify_hom(&f, &g, *force)?;
            if let Some(path) = image {
                let sum = if *force {
                    hom_image_unverified(&f, &g)?
                } else {
                    hom_image(&f, &g)?
                };
                io::write_json(path, &sum)?;
            }
            print_json(&v)?;
            if !v.passed() {
                return Err(Failure::Verification("homomorphism checks failed".into()));
            }
        }
        Command::Dataset {
            max_sum,
            oracle_max,
            out,
            format,
        } => {
            let rows = build_dataset(*max_sum, *oracle_max, &g, |s| eprintln!("dataset: {s}"))?;
            match (out, format) {
                (Some(dir), _) => {
                    io::write_dataset_files(dir, &rows)?;
                    print_json(&json!({
                        "rows": rows.len(),
                        "oracle_checked": rows.iter().filter(|r| r.oracle.is_some()).count(),
                        "csv": dir.join("minimal.csv"),
                        "json": dir.join("minimal.json"),
                    }))?;
                }
                (None, Format::Csv) => io::write_dataset_csv(&rows, std::io::stdout().lock())?,
                (None, Format::Json) => print_json(&rows)?,
            }
            let failed: Vec<String> = rows
                .iter()
                .filter(|r| r.oracle.as_ref().is_some_and(|o| !o.verified))
                .map(|r| format!("({}^{})", r.m, r.n))
                .collect();
            if !failed.is_empty() {
                return Err(Failure::Verification(format!(
                    "oracle disagrees on {}",
                    failed.join(", ")
                )));
            }
        }
        Command::ClosedFamilies { m, n } => {
            let reports: Vec<_> = enumerate_closed(*m, *n, &g)?.iter().map(report).collect();
            print_json(&reports)?;
        }
        Command::Closure { family, out } => {
            let f = io::read_family(family)?;
            let closed = close(&f);
            if let Some(path) = out {
                io::write_family(path, &closed)?;
            }
            print_json(&json!({ "input": report(&f), "closure": report(&closed) }))?;
        }
        Command::Downset {
            set,
            m,
            levels,
            dot,
        } => {
            let sets: Vec<MSubset> = match (set, m, levels) {
                (Some(a), _, _) => downset(a).sets().to_vec(),
                (None, Some(m), Some(k)) => levels_up_to(*m, *k),
                _ => return Err(Error::Parse("give --set or both --m and --levels".into()).into()),
            };
            if *dot {
                print!("{}", hasse_dot(&sets));
            } else if let Some(a) = set {
                print_json(&report(&downset(a)))?;
            } else {
                print_json(&sets)?;
            }
        }
        Command::Star { m, n, nu, lambda } => match (nu, lambda) {
            (Some(nu), _) => {
                let lam = star(*m, *n, nu)?;
                print_json(&json!({ "m": m, "n": n, "nu": nu, "lambda": lam }))?;
            }
            (None, Some(lam)) => {
                let pre = star_preimage(*m, *n, lam);
                print_json(&json!({
                    "m": m,
                    "n": n,
                    "lambda": lam,
                    "representable": pre.is_some(),
                    "nu": pre,
                }))?;
            }
            (None, None) => unreachable!("clap requires --nu or --lambda"),
        },
        Command::Generalized { mu, oracle } => {
            let r = generalized_report(mu, &g, *oracle)?;
            print_json(&r)?;
            if !r.consistent() {
                return Err(Failure::Verification(
                    "oracle disagrees with the candidate filter".into(),
                ));
            }
        }
        Command::EnumerateOfType { m, n, lambda } => {
            let reports: Vec<_> = enumerate_of_type(*m, *n, lambda)
                .iter()
                .map(report)
                .collect();
            print_json(&reports)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}
