use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use forestpoly::cli::{self, ReportFormat, SumMode};
use forestpoly::oracle::DEFAULT_EDGE_CAP;

#[derive(Parser)]
#[command(name = "forestpoly", version, about = "Rooted spanning forest polynomials of sunlet graphs")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Print F_n(x), or (x+1)^n - 1 with --oriented
    Compute {
        n: u32,
        #[arg(long)]
        oriented: bool,
        /// Print the two-variable form in a (pendant) and b (cycle)
        #[arg(long)]
        homogeneous: bool,
    },
    /// Forest sum of a graph file through the matrix tree theorem
    ForestSum {
        path: PathBuf,
        /// Treat every edge as an arc u -> v
        #[arg(long)]
        oriented: bool,
        /// Cross-check against brute-force enumeration
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
        cap: usize,
    },
    /// Brute-force enumeration of a graph file only
    Enumerate {
        path: PathBuf,
        #[arg(long)]
        oriented: bool,
        #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
        cap: usize,
    },
    /// Factor F_n (or (x+1)^n - 1) and check the product
    Factor {
        n: u32,
        #[arg(long)]
        oriented: bool,
    },
    /// Run the verification suite
    Verify {
        #[arg(long, default_value_t = 12)]
        nmax: u32,
        #[arg(long)]
        check: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Dump the roots 2(cos(2 pi k/n) - 1) of F_n with residuals
    Roots { n: u32 },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut err = io::stderr();
    let code = match args.command {
        Command::Compute {
            n,
            oriented,
            homogeneous,
        } => cli::cmd_compute(n, oriented, homogeneous, &mut out, &mut err),
        Command::ForestSum {
            path,
            oriented,
            oracle,
            cap,
        } => {
            let mode = if oracle { SumMode::WithOracle } else { SumMode::Determinant };
            cli::cmd_forest_sum(&path, oriented, mode, cap, &mut out, &mut err)
        }
        Command::Enumerate { path, oriented, cap } => {
            cli::cmd_forest_sum(&path, oriented, SumMode::OracleOnly, cap, &mut out, &mut err)
        }
        Command::Factor { n, oriented } => cli::cmd_factor(n, oriented, &mut out, &mut err),
        Command::Verify { nmax, check, format } => {
            let format = match format {
                Format::Text => ReportFormat::Text,
                Format::Structured => ReportFormat::Structured,
            };
            cli::cmd_verify(nmax, check.as_deref(), format, &mut out, &mut err)
        }
        Command::Roots { n } => cli::cmd_roots(n, &mut out, &mut err),
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
