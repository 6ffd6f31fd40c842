//! Truncated power series over exact rationals: the total Chern class of
//! Ω¹(2) on a cubic surface, assembled factor by factor.
//!
//! cargo run -p chern-endo --example series_ring

use chern_endo::{Result, TruncatedSeries};

fn main() -> Result<()> {
    let order = 2;
    let one_plus_h = TruncatedSeries::from_ints(order, &[1, 1])?;
    let one_plus_2h = TruncatedSeries::from_ints(order, &[1, 2])?;
    let one_minus_h = TruncatedSeries::from_ints(order, &[1, -1])?;

    let euler = one_plus_h.pow(4)?;
    let twisted_line = one_plus_2h.inverse()?;
    let conormal = one_minus_h.inverse()?;
    println!("(1+h)^4      = {euler}");
    println!("(1+2h)^-1    = {twisted_line}");
    println!("(1-h)^-1     = {conormal}");

    let total = euler.mul(&twisted_line)?.mul(&conormal)?;
    println!("c(Ω¹_X(2))   = {total}");
    println!("[h²]         = {}", total.coefficient(2)?);
    println!(
        "c_2 = 3·[h²] = {}",
        total.coefficient(2)? * chern_endo::series::rat(3)
    );

    // orders must agree; nothing is truncated silently
    let mismatch = one_plus_h.add(&TruncatedSeries::one(5));
    println!("order 2 + order 5 -> {}", mismatch.unwrap_err());
    Ok(())
}
