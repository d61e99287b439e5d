use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcodes::commands::{self, Source};
use qcodes::descriptor::Descriptor;
use qcodes::report::Format;
use qcodes::verify::{self, Target, VerifyArgs};
use qcodes::{modulus_file, CliError, Report, Session};

#[derive(Parser, Debug)]
#[command(
    name = "qcodes",
    version,
    about = "Quaternary cyclic codes C(0,m), C(1,m): construction and verification"
)]
struct Cli {
    /// Largest number of codewords to enumerate.
    #[arg(long, global = true, default_value_t = qcodes_core::DEFAULT_BUDGET)]
    budget: u64,
    /// Seed for sampled upper bounds and Type II sampling.
    #[arg(long, global = true, default_value_t = qcodes_core::DEFAULT_SEED, value_parser = parse_u64)]
    seed: u64,
    /// Random codewords drawn when enumeration is infeasible.
    #[arg(long, global = true, default_value_t = qcodes_core::DEFAULT_SAMPLES)]
    samples: usize,
    /// Output format (default: csv for `table`, json otherwise).
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// File of `m:mask` primitive-polynomial overrides.
    #[arg(long, global = true)]
    modulus_file: Option<PathBuf>,
    /// Worker threads for enumeration.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct CodeArgs {
    /// Code index (0 or 1).
    i: Option<u32>,
    /// Field degree.
    m: Option<u32>,
    #[arg(long = "i", conflicts_with = "i")]
    i_flag: Option<u32>,
    #[arg(long = "m", conflicts_with = "m")]
    m_flag: Option<u32>,
    /// Read the code from a descriptor JSON file instead.
    #[arg(long, conflicts_with_all = ["i", "m", "i_flag", "m_flag"])]
    descriptor: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct C(i, m) and print its descriptor.
    Build(CodeArgs),
    /// [n, k, d] of a code.
    Params(CodeArgs),
    /// The dual code.
    Dual(CodeArgs),
    /// Extension by an overall parity check, with Type II classification.
    Extend(CodeArgs),
    /// The binary trace code and its extension.
    Trace(CodeArgs),
    /// The binary subfield subcode.
    Subfield(CodeArgs),
    /// The binary Gray image.
    Gray(CodeArgs),
    /// Run a verification target.
    Verify {
        #[arg(value_enum)]
        target: Target,
        /// Values of m, e.g. 1,3,5 or 1..4.
        #[arg(long)]
        m: Option<String>,
        /// Upper end of the digit-weight coupling sweep (`lemma521` target).
        #[arg(long)]
        max_a: Option<u64>,
        /// Smaller default ranges.
        #[arg(long)]
        fast: bool,
    },
    /// Parameter table for the listed m, e.g. 1..3.
    Table { ms: String },
}

fn parse_u64(s: &str) -> Result<u64, String> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16).map_err(|e| e.to_string()),
        None => s.parse().map_err(|e: std::num::ParseIntError| e.to_string()),
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

impl CodeArgs {
    fn source(&self) -> Result<Source, CliError> {
        if let Some(path) = &self.descriptor {
            return Ok(Source::Descriptor(Descriptor::parse(&read(path)?)?));
        }
        match (self.i.or(self.i_flag), self.m.or(self.m_flag)) {
            (Some(i), Some(m)) => Ok(Source::Built { i, m }),
            _ => Err(CliError::Usage("give `<i> <m>` or `--descriptor <path>`".into())),
        }
    }

    fn built(&self) -> Result<(u32, u32), CliError> {
        match self.source()? {
            Source::Built { i, m } => Ok((i, m)),
            Source::Descriptor(_) => Err(CliError::Usage("build takes `<i> <m>`".into())),
        }
    }
}

fn run(cli: &Cli) -> Result<(Report, Format), CliError> {
    let moduli = match &cli.modulus_file {
        Some(path) => modulus_file::parse(&read(path)?)?,
        None => Default::default(),
    };
    let mut session = Session::new(cli.budget, cli.seed, cli.samples).with_moduli(moduli);
    if let Some(t) = cli.threads {
        session.threads = qcodes::parallel::Threaded::new(t);
    }
    let s = &session;
    let mut format = Format::Json;
    let report = match &cli.command {
        Command::Build(a) => {
            let (i, m) = a.built()?;
            commands::build(s, i, m)?
        }
        Command::Params(a) => commands::params(s, &a.source()?)?,
        Command::Dual(a) => commands::dual(s, &a.source()?)?,
        Command::Extend(a) => commands::extend(s, &a.source()?)?,
        Command::Trace(a) => commands::trace(s, &a.source()?)?,
        Command::Subfield(a) => commands::subfield(s, &a.source()?)?,
        Command::Gray(a) => commands::gray(s, &a.source()?)?,
        Command::Verify { target, m, max_a, fast } => {
            let ms = m.as_deref().map(commands::parse_list).transpose()?;
            verify::verify(
                s,
                *target,
                &VerifyArgs {
                    ms,
                    max_a: *max_a,
                    fast: *fast,
                },
            )?
        }
        Command::Table { ms } => {
            format = Format::Csv;
            commands::table(s, &commands::parse_list(ms)?)?
        }
    };
    let format = match cli.format {
        Some(FormatArg::Json) => Format::Json,
        Some(FormatArg::Csv) => Format::Csv,
        None => format,
    };
    Ok((report, format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((report, format)) => {
            print!("{}", report.render(format));
            ExitCode::from(report.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
