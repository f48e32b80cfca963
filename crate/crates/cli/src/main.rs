use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sextic_cli::commands::{self, BaseArg, KindArg, SkeletonFilter};
use sextic_cli::config::{CACHE_ENV, DEFAULT_COSET_LIMIT};
use sextic_cli::{verify, Cache, Format, RunConfig, Selector};

#[derive(Parser)]
#[command(
    name = "sextic",
    version,
    about = "Plane sextics with a type E8 singular point"
)]
struct Cli {
    /// Maximal number of live cosets in an enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_COSET_LIMIT)]
    limit: usize,
    /// Output format; `group` and `perturb` default to json, the rest to text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Directory of the result cache. No caching when unset.
    #[arg(long, global = true, env = CACHE_ENV)]
    cache: Option<PathBuf>,
    /// Seed of the randomized property checks in `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Suppress progress messages on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List a skeleton census.
    Skeletons {
        #[arg(value_enum)]
        filter: SkeletonFilter,
    },
    /// Deformation classes of maximal sextics, one row per set and local picture.
    Classify {
        #[arg(value_enum)]
        kind: KindArg,
    },
    /// Fundamental group report for a classified row or explicit parameters.
    Group {
        /// `E8+A4+A3+2A2`, `E8+A10+A1#2`, `irreducible:5` or `(4,3,-[,relator...])`.
        selector: String,
        /// Divide by the central element a2^3.
        #[arg(long)]
        mod_a2_cubed: bool,
    },
    /// Effect of a perturbation on one of the two nonabelian groups.
    Perturb {
        #[arg(value_enum)]
        base: BaseArg,
        /// `A4+A3`, `A4+A2+A1`, `D5+A2`, ... or replacement parameters `l,m,n`.
        change: String,
    },
    /// Run the acceptance checks; exit status 0 only if all pass.
    Verify,
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let default_format = match cli.command {
        Command::Group { .. } | Command::Perturb { .. } => Format::Json,
        _ => Format::Text,
    };
    let cfg = RunConfig {
        coset_limit: cli.limit,
        format: cli.format.unwrap_or(default_format),
        cache_dir: cli.cache.clone(),
        seed: cli.seed,
        quiet: cli.quiet,
    };
    cfg.validate()?;
    let cache = Cache::new(cfg.cache_dir.clone());
    match cli.command {
        Command::Skeletons { filter } => print!("{}", commands::skeletons(filter, &cfg, &cache)?),
        Command::Classify { kind } => {
            print!("{}", commands::classify_cmd(kind.into(), &cfg, &cache)?)
        }
        Command::Group {
            selector,
            mod_a2_cubed,
        } => {
            let sel: Selector = selector.parse()?;
            let out = commands::group_cmd(&sel, mod_a2_cubed, &cfg, &cache)?;
            print!("{}", out.output);
            if out.overflow {
                eprintln!(
                    "error: coset enumeration overflow at limit {}",
                    cfg.coset_limit
                );
                return Ok(ExitCode::from(1));
            }
        }
        Command::Perturb { base, change } => {
            print!(
                "{}",
                commands::perturb_cmd(base.into(), &change, &cfg, &cache)?
            )
        }
        Command::Verify => {
            let checks = verify::run(&cfg, &cache);
            for c in &checks {
                println!("{}", c.line());
            }
            let failed = checks.iter().filter(|c| !c.pass).count();
            if !cfg.quiet {
                eprintln!(
                    "{} of {} criteria passed",
                    checks.len() - failed,
                    checks.len()
                );
            }
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
