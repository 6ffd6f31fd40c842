//! Obstruction verdicts over a grid of complete intersections, written as CSV.
//!
//! cargo run -p chern-endo --example obstruction_sweep

use chern_endo::report::{run_sweep, write_rows, OutputFormat, SweepSpec};
use chern_endo::{Result, Verdict};

fn main() -> Result<()> {
    let spec = SweepSpec {
        dim_range: (2, 4),
        codim_max: 2,
        degree_range: (2, 4),
        ..Default::default()
    };
    let rows = run_sweep(&spec, None)?;
    write_rows(&rows, OutputFormat::Csv, std::io::stdout().lock()).expect("stdout");

    let open: Vec<_> = rows
        .iter()
        .filter(|r| r.verdict == Verdict::Inconclusive)
        .collect();
    eprintln!("{} rows, {} inconclusive:", rows.len(), open.len());
    for r in open {
        eprintln!(
            "  n={} degrees={:?}: {} <= {}",
            r.n, r.degrees, r.chern_number, r.bound
        );
    }
    Ok(())
}
