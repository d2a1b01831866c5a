//! Argument parsing, dispatch and exit codes.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, CommandFactory, FromArgMatches, Parser, Subcommand};

use crate::commands;
use crate::config;
use crate::error::{CliError, CliResult, EXIT_OK, EXIT_USAGE};
use crate::report::{Format, Report};

#[derive(Debug, Parser)]
#[command(
    name = "fistab",
    version,
    about = "Exact representation-stability computations for sequences of symmetric-group representations"
)]
pub struct Cli {
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// key=value file whose entries act as flags of the subcommand; explicit flags win.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irreducible character values of S_n.
    Character {
        /// Partition labelling the irreducible, e.g. 3+1.
        #[arg(long)]
        lambda: String,
        /// Cycle type to evaluate at; all classes when omitted.
        #[arg(long)]
        mu: Option<String>,
    },
    /// Decompose a class function (JSON object keyed by cycle types) into irreducibles.
    #[command(group(ArgGroup::new("source").required(true).args(["input", "json"])))]
    Decompose {
        /// JSON file, or - for stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Inline JSON.
        #[arg(long)]
        json: Option<String>,
    },
    /// The free FI-modules M(λ) or M(m) on a window of n.
    #[command(name = "m-module", group(ArgGroup::new("module").required(true).args(["lambda", "regular"])))]
    MModule {
        #[arg(long)]
        lambda: Option<String>,
        /// Use M(m), induced from the regular representation of S_m.
        #[arg(long, value_name = "M")]
        regular: Option<u32>,
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
    },
    /// Uniform multiplicity stabilization of an FI sequence.
    #[command(name = "stability-scan")]
    StabilityScan {
        /// FI sequence JSON, or - for stdin.
        #[arg(long)]
        input: PathBuf,
    },
    /// Fit a character polynomial to an FI sequence.
    #[command(name = "fit-charpoly")]
    FitCharpoly {
        #[arg(long)]
        input: PathBuf,
        /// Maximal weighted degree (deg Z_l = l).
        #[arg(long)]
        degree_bound: u32,
    },
    /// Fit an integer-valued polynomial to dimensions.
    #[command(name = "fit-dimpoly", group(ArgGroup::new("source").required(true).args(["input", "dims"])))]
    FitDimpoly {
        /// JSON object {"n": dimension, ...}, or - for stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Inline list n:dim,n:dim,...
        #[arg(long)]
        dims: Option<String>,
        #[arg(long)]
        degree_bound: u32,
    },
    /// Stability-type bounds through a spectral sequence of FI-modules.
    Bounds {
        /// Surjectivity slope in the filtration degree; integer or p/q.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Slope in the fiber degree; integer or p/q.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long)]
        i: u32,
        /// Also report E_R^{P,Q}.
        #[arg(long, requires_all = ["p", "q"])]
        page: Option<u32>,
        #[arg(long, requires = "page")]
        p: Option<u32>,
        #[arg(long, requires = "page")]
        q: Option<u32>,
        /// Also report the abutment bound when the sequence degenerates at this page.
        #[arg(long, value_name = "R")]
        degenerate_at: Option<u32>,
        /// Treat the E_2 terms as FI#-modules and report the generation degree.
        #[arg(long)]
        fisharp: bool,
    },
    /// Rows of the table of specific stable ranges.
    Table1 {
        /// Row name; all rows when omitted.
        #[arg(long)]
        row: Option<String>,
        #[arg(long)]
        i: u32,
        /// Report every degree from --i to this one.
        #[arg(long)]
        i_max: Option<u32>,
    },
    /// Scan H^k of configuration spaces of the plane.
    #[command(name = "os-scan")]
    OsScan {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        k: usize,
        /// Coinvariant maps are checked for a = 0..=A.
        #[arg(long, default_value_t = 2)]
        a_max: u32,
        /// Ignore the desk-scale limit on n.
        #[arg(long)]
        allow_large: bool,
    },
    /// Rational cohomology dimensions of wreath products G ≀ S_n.
    #[command(name = "wreath-scan")]
    WreathScan {
        /// Betti numbers of G, e.g. 1,2,1.
        #[arg(long)]
        graded_dims: String,
        #[arg(long)]
        i_max: u32,
        #[arg(long)]
        n_max: u32,
    },
    /// The S_n-representation H^i(X^n) from the Betti numbers of X.
    Kunneth {
        #[arg(long)]
        graded_dims: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        i: u32,
    },
}

const SUBCOMMANDS: [&str; 11] = [
    "character",
    "decompose",
    "m-module",
    "stability-scan",
    "fit-charpoly",
    "fit-dimpoly",
    "bounds",
    "table1",
    "os-scan",
    "wreath-scan",
    "kunneth",
];

fn clap_command() -> clap::Command {
    Cli::command().mut_subcommands(|s| s.args_override_self(true))
}

/// Runs the CLI with the process streams and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`] but with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let mut argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    if let Some(path) = config::find_config_path(&argv) {
        match config::load(&PathBuf::from(path)) {
            Ok(extra) => argv = config::inject(argv, &SUBCOMMANDS, extra),
            Err(e) => return fail(err, &e),
        }
    }
    let cli = match clap_command()
        .try_get_matches_from(argv)
        .and_then(|m| Cli::from_arg_matches(&m))
    {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli).and_then(|report| emit(&cli, &report, out)) {
        Ok(()) => EXIT_OK,
        Err(e) => fail(err, &e),
    }
}

fn fail(err: &mut dyn Write, e: &CliError) -> i32 {
    let _ = writeln!(err, "error: {e}");
    e.exit_code()
}

fn emit(cli: &Cli, report: &Report, out: &mut dyn Write) -> CliResult<()> {
    let text = report.render(cli.format);
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

pub fn execute(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Character { lambda, mu } => commands::character(lambda, mu.as_deref()),
        Command::Decompose { input, json } => {
            let doc = match (input, json) {
                (Some(path), _) => commands::read_json(path)?,
                (None, Some(text)) => commands::parse_json(text)?,
                (None, None) => unreachable!("clap enforces a source"),
            };
            commands::decompose(&doc)
        }
        Command::MModule {
            lambda,
            regular,
            n_min,
            n_max,
        } => commands::m_module(lambda.as_deref(), *regular, *n_min, *n_max),
        Command::StabilityScan { input } => commands::stability_scan(&commands::read_json(input)?),
        Command::FitCharpoly {
            input,
            degree_bound,
        } => commands::fit_charpoly(&commands::read_json(input)?, *degree_bound),
        Command::FitDimpoly {
            input,
            dims,
            degree_bound,
        } => {
            let dims = match (input, dims) {
                (Some(path), _) => commands::dims_from_json(&commands::read_json(path)?)?,
                (None, Some(text)) => commands::parse_dims(text)?,
                (None, None) => unreachable!("clap enforces a source"),
            };
            commands::fit_dimpoly(&dims, *degree_bound)
        }
        Command::Bounds {
            alpha,
            beta,
            i,
            page,
            p,
            q,
            degenerate_at,
            fisharp,
        } => commands::bounds(&commands::BoundsArgs {
            alpha,
            beta,
            i: *i,
            page: page.map(|r| (r, p.unwrap_or(0), q.unwrap_or(0))),
            degenerate_at: *degenerate_at,
            fisharp: *fisharp,
        }),
        Command::Table1 { row, i, i_max } => commands::table1(row.as_deref(), *i, *i_max),
        Command::OsScan {
            n_min,
            n_max,
            k,
            a_max,
            allow_large,
        } => commands::os_scan(*n_min, *n_max, *k, *a_max, *allow_large),
        Command::WreathScan {
            graded_dims,
            i_max,
            n_max,
        } => commands::wreath_scan(&commands::parse_graded_dims(graded_dims)?, *i_max, *n_max),
        Command::Kunneth { graded_dims, n, i } => {
            commands::kunneth(&commands::parse_graded_dims(graded_dims)?, *n, *i)
        }
    }
}
