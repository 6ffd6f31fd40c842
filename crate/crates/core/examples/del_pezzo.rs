//! Exceptional classes on P² blown up at r points and the resulting
//! endomorphism verdict for each Del Pezzo degree.
//!
//! cargo run -p chern-endo --example del_pezzo

use chern_endo::delpezzo::{enumerate_exceptional, feasibility, ramification_divisor_class};
use chern_endo::Result;

fn main() -> Result<()> {
    println!(
        "{:>2} {:>3} {:>5}  {:<15} -K·R >= (δ-1)·Card(E) at δ = 2",
        "r", "K²", "#E", "verdict"
    );
    for r in 0..=8 {
        let f = feasibility(r)?;
        let ram = ramification_divisor_class(r, 2)?;
        println!(
            "{r:>2} {:>3} {:>5}  {:<15} {} >= {}: {}",
            f.degree,
            f.exceptional_count,
            f.verdict.to_string(),
            ram.anticanonical_degree,
            ram.exceptional_count,
            ram.inequality_holds
        );
    }

    println!("\nthe 27 lines on a cubic surface:");
    for class in enumerate_exceptional(6)? {
        println!("  {class}");
    }
    Ok(())
}
