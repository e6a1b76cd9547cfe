mod envelope;
mod render;

use alcove::classify::{self, DEFAULT_MAX_LEVEL, DEFAULT_MAX_RANK};
use alcove::{Error as CoreError, RootSystem, Weight};
use clap::{Args, Parser, Subcommand, ValueEnum};
use envelope::Envelope;
use std::process::ExitCode;
use std::sync::Arc;

/// Exit codes: 0 ok, 1 usage, 2 domain error, 3 fidelity-diff failure.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(String),
    Fidelity,
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::ParseSpec(_) => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "alcove",
    about = "Exact root-system combinatorics: Weyl degrees, alcove reduction, and table reproduction",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit a deterministic JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basic invariants of a root system: h, |R+|, det Cartan, J, ...
    Info {
        /// Root system specifier, e.g. A2, b3, E6.
        system: String,
    },
    /// Evaluate the Weyl degree formula at a dominant weight.
    Dim {
        system: String,
        /// Comma-separated coordinates in the fundamental-weight basis.
        #[arg(allow_hyphen_values = true)]
        coords: String,
        /// Include the per-root factor trace.
        #[arg(long)]
        trace: bool,
    },
    /// Reduce a weight into the closed lowest alcove under the dot action.
    Reduce {
        system: String,
        #[arg(allow_hyphen_values = true)]
        coords: String,
        /// Level l (must satisfy l > h).
        #[arg(long)]
        level: i64,
        /// Also report the extended-group canonical representative.
        #[arg(long)]
        extended: bool,
        /// Verify orbit verdicts against the BFS oracle (small rank only).
        #[arg(long)]
        oracle: bool,
    },
    /// Base-p digits of a dominant weight.
    Steinberg {
        system: String,
        #[arg(allow_hyphen_values = true)]
        coords: String,
        #[arg(long)]
        p: i64,
    },
    /// Classify a prime as bad / good-not-very-good / very good.
    Primes {
        system: String,
        #[arg(long)]
        p: i64,
    },
    /// Reproduce a reference table and diff it against the embedded golden.
    Tables(TablesArgs),
}

#[derive(Args)]
struct TablesArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long, default_value_t = DEFAULT_MAX_RANK)]
    max_rank: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_LEVEL)]
    max_level: i64,
    /// Prime (g1 table).
    #[arg(long)]
    p: Option<i64>,
    /// Root system (omega table).
    #[arg(long)]
    system: Option<String>,
    /// Level (omega table).
    #[arg(long)]
    level: Option<i64>,
    /// Additionally verify the extended-orbit description by BFS
    /// (omega table, small rank only).
    #[arg(long)]
    oracle: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Minuscule,
    Small,
    G1,
    Omega,
}

fn parse_coords(rs: &RootSystem, input: &str) -> CliResult<Weight> {
    let coords: Result<Vec<i64>, _> = input
        .split(',')
        .map(|part| part.trim().parse::<i64>())
        .collect();
    let coords = coords.map_err(|_| {
        CliError::Usage(format!(
            "cannot parse weight coordinates {input:?} (expected comma-separated integers)"
        ))
    })?;
    if coords.len() != rs.rank() {
        return Err(CliError::Usage(format!(
            "expected {} coordinates for {}, got {}",
            rs.rank(),
            rs.ty,
            coords.len()
        )));
    }
    Ok(Weight::new(coords))
}

fn system(spec: &str) -> CliResult<Arc<RootSystem>> {
    Ok(RootSystem::parse(spec)?)
}

fn run(cli: &Cli) -> CliResult<Envelope> {
    match &cli.command {
        Command::Info { system: spec } => {
            let rs = system(spec)?;
            Ok(render::info(&rs))
        }
        Command::Dim {
            system: spec,
            coords,
            trace,
        } => {
            let rs = system(spec)?;
            let lambda = parse_coords(&rs, coords)?;
            let degree = if *trace {
                rs.weyl_degree_traced(&lambda)?
            } else {
                rs.weyl_degree(&lambda)?
            };
            Ok(render::dim(&rs, &lambda, &degree))
        }
        Command::Reduce {
            system: spec,
            coords,
            level,
            extended,
            oracle,
        } => {
            let rs = system(spec)?;
            let lambda = parse_coords(&rs, coords)?;
            let reduction = rs.reduce_to_closed_alcove(&lambda, *level)?;
            let plain = rs.in_orbit_of_zero(&lambda, *level, false)?;
            let ext = rs.in_orbit_of_zero(&lambda, *level, true)?;
            let oracle_checked = if *oracle {
                verify_orbit_by_bfs(&rs, &reduction.weight, *level, plain, ext)?;
                true
            } else {
                false
            };
            Ok(render::reduce(
                &rs,
                &lambda,
                *level,
                &reduction,
                plain,
                ext,
                *extended,
                oracle_checked,
            )?)
        }
        Command::Steinberg {
            system: spec,
            coords,
            p,
        } => {
            if *p < 2 {
                return Err(CliError::Domain(format!("base p = {p} must be at least 2")));
            }
            let rs = system(spec)?;
            let lambda = parse_coords(&rs, coords)?;
            let digits = classify::steinberg_decompose(&rs, &lambda, *p)?;
            Ok(render::steinberg(&rs, &lambda, &digits))
        }
        Command::Primes { system: spec, p } => {
            let rs = system(spec)?;
            let (class, rule) = rs.prime_class_with_rule(*p)?;
            Ok(render::primes(&rs, *p, class, &rule))
        }
        Command::Tables(args) => tables(args),
    }
}

/// Confirm fast-path orbit verdicts against the truncated BFS oracle; the
/// reduced representative always lies inside the search box.
fn verify_orbit_by_bfs(
    rs: &RootSystem,
    reduced: &Weight,
    level: i64,
    plain: bool,
    extended: bool,
) -> CliResult<()> {
    if rs.rank() > 4 || level > 20 {
        return Err(CliError::Domain(
            CoreError::OracleOutOfRange {
                max_rank: 4,
                max_level: 20,
            }
            .to_string(),
        ));
    }
    let radius = 4 * level;
    let plain_orbit = rs.orbit_of_zero_bfs(level, false, radius)?;
    let extended_orbit = rs.orbit_of_zero_bfs(level, true, radius)?;
    if plain_orbit.contains(reduced) != plain || extended_orbit.contains(reduced) != extended {
        return Err(CliError::Domain(
            "BFS oracle disagrees with the fast orbit test".to_string(),
        ));
    }
    Ok(())
}

fn tables(args: &TablesArgs) -> CliResult<Envelope> {
    match args.which {
        Which::Minuscule => {
            let rows = classify::minuscule_table(args.max_rank);
            let check = classify::check_minuscule_table(&rows, args.max_rank);
            let env = render::minuscule_table(&rows, &check, args.max_rank);
            if check.pass {
                Ok(env)
            } else {
                render::print(&env, false);
                Err(CliError::Fidelity)
            }
        }
        Which::Small => {
            let rows = classify::small_degree_classification(args.max_rank, args.max_level);
            let check = classify::check_small_degree_table(&rows, args.max_rank, args.max_level);
            let families = classify::summarize_small_degree(&rows, args.max_rank, args.max_level);
            let env = render::small_table(&rows, &families, &check, args.max_rank, args.max_level);
            if check.pass {
                Ok(env)
            } else {
                render::print(&env, false);
                Err(CliError::Fidelity)
            }
        }
        Which::G1 => {
            let p = args
                .p
                .ok_or_else(|| CliError::Usage("--which g1 requires --p".to_string()))?;
            if p <= 2 {
                return Err(CliError::Domain(format!(
                    "the table is defined for odd primes, got p = {p}"
                )));
            }
            let rows = classify::g1_table(p)?;
            let check = classify::check_g1_table(&rows, p);
            let env = render::g1_table(&rows, &check, p);
            if check.pass {
                Ok(env)
            } else {
                render::print(&env, false);
                Err(CliError::Fidelity)
            }
        }
        Which::Omega => {
            let spec = args
                .system
                .as_ref()
                .ok_or_else(|| CliError::Usage("--which omega requires --system".to_string()))?;
            let rs = system(spec)?;
            let level = args
                .level
                .ok_or_else(|| CliError::Usage("--which omega requires --level".to_string()))?;
            let check = classify::check_omega_table(&rs, level)?;
            let oracle_checked = if args.oracle {
                if rs.rank() > 4 || level > 20 {
                    return Err(CliError::Domain(
                        CoreError::OracleOutOfRange {
                            max_rank: 4,
                            max_level: 20,
                        }
                        .to_string(),
                    ));
                }
                let bfs = rs.orbit_of_zero_bfs(level, true, 4 * level)?;
                let predicted = classify::extended_orbit_meets_alcove(&rs, level)?;
                let in_alcove: Vec<Weight> = bfs
                    .iter()
                    .filter(|w| {
                        rs.alcove_position(w, level, false)
                            .map(|p| p.position == alcove::AlcovePosition::Interior)
                            .unwrap_or(false)
                    })
                    .cloned()
                    .collect();
                let mut sorted = predicted.clone();
                sorted.sort();
                if in_alcove != sorted {
                    return Err(CliError::Domain(
                        "BFS orbit disagrees with the alcove-stabilizer description".to_string(),
                    ));
                }
                true
            } else {
                false
            };
            let env = render::omega_table(&rs, level, &check, oracle_checked)?;
            if check.pass {
                Ok(env)
            } else {
                render::print(&env, false);
                Err(CliError::Fidelity)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successful exits.
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprintln!("usage error: {e}");
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(envelope) => {
            render::print(&envelope, cli.json);
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("domain error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Fidelity) => {
            eprintln!("fidelity error: generated table differs from the golden table");
            ExitCode::from(3)
        }
    }
}
