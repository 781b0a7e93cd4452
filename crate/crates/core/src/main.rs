use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cmdeficiency::analysis::{
    analyze, hilbert_report, oracle_report, render_analysis_text, render_hilbert_text,
    render_oracle_text, render_verify_text, verify_report, AnalyzeOptions, Verification,
    DEFAULT_MAX_DEGREE,
};
use cmdeficiency::frame::AmbientChoice;
use cmdeficiency::parse::{parse_group, parse_point};
use cmdeficiency::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "cmdeficiency",
    version,
    about = "Cohen-Macaulay deficiency of permutation invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full pipeline: secondaries, deficiency, bad primes.
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Run the mod-p oracle for every prime dividing |G|.
        #[arg(long)]
        verify: bool,
        /// Skip the symbolic determinant.
        #[arg(long)]
        no_symbolic: bool,
        /// Record wall-clock timings in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Mod-p oracle for the universal secondaries.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long = "prime", short = 'p', required = true)]
        primes: Vec<u64>,
    },
    /// Symbolic determinant cross-check.
    Oracle {
        #[command(flatten)]
        common: Common,
    },
    /// Secondary degrees only.
    Hilbert {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Group, e.g. "n=5; gens=(1,5,4,2,3);(2,3,4,5)".
    group: Option<String>,
    /// Read the group from a file ("-" for stdin).
    #[arg(long, conflicts_with = "group")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Ambient::Auto)]
    ambient: Ambient,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Evaluation point z1,z2,...
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// Largest secondary degree attempted.
    #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: u32,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Ambient {
    Auto,
    #[value(alias = "symmetric")]
    Sym,
    Young,
    Hyperoctahedral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl From<Ambient> for AmbientChoice {
    fn from(a: Ambient) -> Self {
        match a {
            Ambient::Auto => AmbientChoice::Auto,
            Ambient::Sym => AmbientChoice::Symmetric,
            Ambient::Young => AmbientChoice::Young,
            Ambient::Hyperoctahedral => AmbientChoice::Hyperoctahedral,
        }
    }
}

fn read_group_text(common: &Common) -> Result<String> {
    match (&common.group, &common.input) {
        (Some(g), _) => Ok(g.clone()),
        (None, Some(path)) if path.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
            Ok(s)
        }
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display()))),
        (None, None) => Err(Error::InvalidInput("no group given".into())),
    }
}

fn options(common: &Common, n: usize) -> Result<AnalyzeOptions> {
    Ok(AnalyzeOptions {
        ambient: common.ambient.into(),
        point: common
            .point
            .as_deref()
            .map(|p| parse_point(p, n))
            .transpose()?,
        max_degree: common.max_degree,
        ..AnalyzeOptions::default()
    })
}

fn emit<T: Serialize>(common: &Common, report: &T, text: impl FnOnce(&T) -> String) -> Result<()> {
    let body = match common.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => text(report),
    };
    match &common.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    let common = match &cli.command {
        Command::Analyze { common, .. }
        | Command::Verify { common, .. }
        | Command::Oracle { common }
        | Command::Hilbert { common } => common,
    };
    let input = parse_group(&read_group_text(common)?)?;
    let mut opts = options(common, input.n)?;
    match &cli.command {
        Command::Analyze {
            verify,
            no_symbolic,
            timings,
            ..
        } => {
            if *verify {
                opts.verify = Verification::GroupPrimes;
            }
            opts.symbolic = !no_symbolic;
            opts.timings = *timings;
            emit(common, &analyze(&input, &opts)?, render_analysis_text)
        }
        Command::Verify { primes, .. } => emit(
            common,
            &verify_report(&input, &opts, primes)?,
            render_verify_text,
        ),
        Command::Oracle { .. } => emit(common, &oracle_report(&input, &opts)?, render_oracle_text),
        Command::Hilbert { .. } => {
            emit(common, &hilbert_report(&input, &opts)?, render_hilbert_text)
        }
    }
}

fn json_requested(cli: &Cli) -> bool {
    let common = match &cli.command {
        Command::Analyze { common, .. }
        | Command::Verify { common, .. }
        | Command::Oracle { common }
        | Command::Hilbert { common } => common,
    };
    common.format == Format::Json
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if json_requested(&cli) {
                let err = serde_json::json!({
                    "schema": 1,
                    "error": { "code": e.code(), "message": e.to_string() },
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&err).expect("error serializes")
                );
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
