use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use vlink::adequacy::{adequacy_report, check_theorem_43, classicality_obstruction_with_limit};
use vlink::bracket::BracketError;
use vlink::codec;
use vlink::diagram::Diagram;
use vlink::generators::{self, Handedness};
use vlink::report::{batch_csv, BatchError, InvariantReport};
use vlink::Classicality;

/// Bracket spans, Euler characteristics, and adequacy certificates for
/// virtual link diagrams in the `.vlk` format.
///
/// Exit codes: 0 success or inconclusive verdict, 1 input error, 2 crossing
/// limit exceeded, 3 invalid certificate, 10 not-classical verdict.
#[derive(Parser)]
#[command(name = "vlink", version, arg_required_else_help = true)]
struct Cli {
    /// Cap on c(D) for the 2^c state sum.
    #[arg(long, global = true, default_value_t = vlink::DEFAULT_MAX_CROSSINGS)]
    max_crossings: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a .vlk file and check every diagram invariant.
    Validate { path: PathBuf },
    /// Print the invariant report for a diagram.
    Invariants {
        path: PathBuf,
        /// JSON output (default is text).
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Span-mod-4 obstruction to classicality; exit 10 means properly virtual.
    CheckClassical { path: PathBuf },
    /// Certify the span equality for virtualizing one real crossing.
    CheckThm43 {
        path: PathBuf,
        /// The real crossing to virtualize.
        #[arg(long)]
        crossing: usize,
    },
    /// Print the adequacy report.
    Adequacy {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Emit a generator diagram as .vlk text.
    Gen {
        /// unknot | kink | hopf | trefoil | figure8 | torus | hn | hprime | random
        family: String,
        /// Family parameter (torus, hn, hprime).
        n: Option<u32>,
        /// Kink handedness: pos or neg.
        #[arg(long)]
        hand: Option<String>,
        /// Seed for the random family.
        #[arg(long)]
        seed: Option<u64>,
        /// Real crossing count for the random family.
        #[arg(long)]
        real: Option<u32>,
        /// Virtual crossing count for the random family.
        #[arg(long = "virtual")]
        virtual_count: Option<u32>,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One CSV row of invariants per .vlk file in a directory.
    Batch {
        dir: PathBuf,
        /// Output CSV path.
        #[arg(long)]
        csv: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap's own exit code 2 is reserved here for the crossing limit
            let _ = err.print();
            return match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: vlink::CodecError },
    #[error(transparent)]
    Diagram(#[from] vlink::DiagramError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error(transparent)]
    Generator(#[from] vlink::GeneratorError),
    #[error(transparent)]
    Batch(#[from] BatchError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Bracket(BracketError::CrossingLimit { .. }) => 2,
            CliError::Batch(BatchError::Compute {
                source: BracketError::CrossingLimit { .. },
                ..
            }) => 2,
            _ => 1,
        }
    }
}

fn load(path: &Path) -> Result<Diagram, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
    codec::parse(&text).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Validate { path } => {
            let d = load(&path)?;
            println!(
                "ok: {} real, {} virtual, {} free loops",
                d.real_crossing_count(),
                d.virtual_crossing_count(),
                d.free_loops()
            );
            Ok(0)
        }
        Command::Invariants { path, json, .. } => {
            let d = load(&path)?;
            let report = InvariantReport::compute(&d, cli.max_crossings)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(0)
        }
        Command::CheckClassical { path } => {
            let d = load(&path)?;
            let verdict = classicality_obstruction_with_limit(&d, cli.max_crossings)?;
            println!("span = {}, verdict = {:?}", verdict.span, verdict.verdict);
            Ok(match verdict.verdict {
                Classicality::NotClassical => 10,
                Classicality::Inconclusive => 0,
            })
        }
        Command::CheckThm43 { path, crossing } => {
            let d = load(&path)?;
            let cert = check_theorem_43(&d, crossing)?;
            println!("{}", serde_json::to_string_pretty(&cert).expect("certificate serializes"));
            Ok(if cert.valid { 0 } else { 3 })
        }
        Command::Adequacy { path, json } => {
            let d = load(&path)?;
            let report = adequacy_report(&d);
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                println!("a_adequate:      {}", report.a_adequate);
                println!("b_adequate:      {}", report.b_adequate);
                println!("adequate:        {}", report.adequate);
                println!("pseudo_adequate: {}", report.pseudo_adequate);
                println!("failing_A:       {:?}", report.failing_crossings_a);
                println!("failing_B:       {:?}", report.failing_crossings_b);
            }
            Ok(0)
        }
        Command::Gen { family, n, hand, seed, real, virtual_count, out } => {
            let d = generate(&family, n, hand.as_deref(), seed, real, virtual_count)?;
            let text = codec::serialize(&d);
            match out {
                Some(path) => {
                    let mut file = fs::File::create(&path)
                        .map_err(|source| CliError::Write { path: path.clone(), source })?;
                    file.write_all(text.as_bytes())
                        .map_err(|source| CliError::Write { path, source })?;
                }
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Batch { dir, csv } => {
            let table = batch_csv(&dir, cli.max_crossings)?;
            fs::write(&csv, table).map_err(|source| CliError::Write { path: csv, source })?;
            Ok(0)
        }
    }
}

fn generate(
    family: &str,
    n: Option<u32>,
    hand: Option<&str>,
    seed: Option<u64>,
    real: Option<u32>,
    virtual_count: Option<u32>,
) -> Result<Diagram, CliError> {
    let no_param = |d: Diagram| {
        if n.is_some() {
            Err(CliError::Usage(format!("family `{family}` takes no parameter")))
        } else {
            Ok(d)
        }
    };
    let with_param = || n.ok_or_else(|| CliError::Usage(format!("family `{family}` needs a parameter n")));
    match family {
        "unknot" => no_param(generators::unknot()),
        "kink" => {
            let hand = match hand.unwrap_or("pos") {
                "pos" => Handedness::Positive,
                "neg" => Handedness::Negative,
                other => {
                    return Err(CliError::Usage(format!("--hand must be pos or neg, got `{other}`")))
                }
            };
            no_param(generators::kink(hand))
        }
        "hopf" => no_param(generators::hopf()),
        "trefoil" => no_param(generators::trefoil()),
        "figure8" | "fig8" => no_param(generators::figure_eight()),
        "torus" => Ok(generators::torus_2n(with_param()?)?),
        "hn" => Ok(generators::necklace_hn(with_param()?)?),
        "hprime" => Ok(generators::necklace_hprime_n(with_param()?)?),
        "random" => {
            let seed = seed.ok_or_else(|| CliError::Usage("family `random` needs --seed".into()))?;
            Ok(generators::random_diagram(
                seed,
                real.unwrap_or(0),
                virtual_count.unwrap_or(0),
            )?)
        }
        other => Err(CliError::Usage(format!("unknown family `{other}`"))),
    }
}
