use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use chern_endo::chern::{arv_obstruction, CompleteIntersection};
use chern_endo::report::{self, OutputFormat, ReportRow, SweepSpec};
use chern_endo::Error;

#[derive(Parser)]
#[command(
    name = "chern-endo",
    version,
    about = "Chern-number obstructions to endomorphisms"
)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print c(Ω¹_X(t)) and c_n(Ω¹_X(t)).
    Chern {
        #[arg(long)]
        dim: u32,
        /// Comma-separated multidegree, e.g. 3,2.
        #[arg(long)]
        degrees: String,
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        twist: i64,
    },
    /// Compare c_n(Ω¹_X(2)) with 2^n deg X.
    Obstruct {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        degrees: String,
        #[arg(long, default_value = "table")]
        format: OutputFormat,
    },
    /// Run the obstruction over a grid of complete intersections.
    Sweep {
        #[arg(long = "dim-range", value_name = "A:B")]
        dim_range: String,
        #[arg(long = "deg-range", value_name = "A:B")]
        deg_range: String,
        #[arg(long = "codim-max", default_value_t = 1)]
        codim_max: usize,
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        twist: i64,
        #[arg(long, default_value = "table")]
        format: OutputFormat,
        /// Worker threads; output does not depend on this.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Print the four residues of ω for a hypersurface of degree d >= 3.
    Residues {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        degree: u32,
    },
    /// Del Pezzo feasibility for P² blown up at r points (or P¹×P¹).
    Delpezzo {
        #[arg(long, required_unless_present = "p1xp1")]
        blowups: Option<usize>,
        #[arg(long, conflicts_with = "blowups")]
        p1xp1: bool,
        /// Also list the exceptional classes.
        #[arg(long)]
        list: bool,
    },
    /// Interpolate m ↦ c_n(Ω¹_X(2m)) and report its leading coefficient.
    Limit {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        degrees: String,
    },
}

fn variety(dim: u32, degrees: &str) -> chern_endo::Result<CompleteIntersection> {
    CompleteIntersection::new(dim, report::parse_degrees(degrees)?)
}

fn run(cmd: Command, out: &mut dyn Write) -> chern_endo::Result<()> {
    let io = |e: io::Error| Error::Input(format!("write failed: {e}"));
    match cmd {
        Command::Chern {
            dim,
            degrees,
            twist,
        } => {
            let x = variety(dim, &degrees)?;
            out.write_all(report::render_chern(&x, twist)?.as_bytes())
                .map_err(io)
        }
        Command::Obstruct {
            dim,
            degrees,
            format,
        } => {
            let x = variety(dim, &degrees)?;
            let row = ReportRow::from(&arv_obstruction(&x)?);
            report::write_rows(&[row], format, out).map_err(io)
        }
        Command::Sweep {
            dim_range,
            deg_range,
            codim_max,
            twist,
            format,
            threads,
        } => {
            let spec = SweepSpec {
                dim_range: report::parse_range(&dim_range)?,
                codim_max,
                degree_range: report::parse_range(&deg_range)?,
                twist,
                output_format: format,
            };
            let rows = report::run_sweep(&spec, threads)?;
            report::write_rows(&rows, spec.output_format, out).map_err(io)
        }
        Command::Residues { dim, degree } => out
            .write_all(report::render_residues(dim, degree)?.as_bytes())
            .map_err(io),
        Command::Delpezzo {
            blowups,
            p1xp1,
            list,
        } => {
            let text = match blowups {
                Some(r) if !p1xp1 => report::render_delpezzo(r, list)?,
                _ => report::render_product_of_lines()?,
            };
            out.write_all(text.as_bytes()).map_err(io)
        }
        Command::Limit { dim, degrees } => {
            let x = variety(dim, &degrees)?;
            out.write_all(report::render_limit(&x)?.as_bytes())
                .map_err(io)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        },
        None => Box::new(io::stdout().lock()),
    };
    let result = run(cli.command, &mut *out).and_then(|()| {
        out.flush()
            .map_err(|e| Error::Input(format!("write failed: {e}")))
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ Error::Internal(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
