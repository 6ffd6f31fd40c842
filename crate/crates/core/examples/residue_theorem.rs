//! The four residues of ω = (1+x)^{n+2} / (x^{n+1}(1+2x)(1+(2-d)x)), each
//! computed independently, summing to zero.
//!
//! cargo run -p chern-endo --example residue_theorem

use chern_endo::{closed_form_residues, residue_bundle, Result};

fn main() -> Result<()> {
    for (n, d) in [(2, 3), (3, 3), (2, 4), (7, 11)] {
        let r = residue_bundle(n, d)?;
        println!("n = {n}, d = {d}");
        println!("  Res_0       = {}", r.at_zero);
        println!("  Res_-1/2    = {}", r.at_minus_half);
        println!("  Res_1/(d-2) = {}", r.at_inv_d_minus_2);
        println!("  Res_inf     = {}", r.at_infinity);
        println!("  sum         = {}", r.sum());
        println!(
            "  matches closed forms: {}",
            r == closed_form_residues(n, d)?
        );
    }
    // quadrics make the pole 1/(d-2) escape to infinity
    println!("d = 2: {}", residue_bundle(2, 2).unwrap_err());
    Ok(())
}
