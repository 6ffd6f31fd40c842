//! m ↦ c_n(Ω¹_X(2m)) is a polynomial of degree n with leading coefficient
//! 2^n deg X; recovered here by finite differences.
//!
//! cargo run -p chern-endo --example limit_identity

use chern_endo::chern::{obstruction_bound, twist_values};
use chern_endo::{twist_leading_coefficient, CompleteIntersection, Result};

fn main() -> Result<()> {
    for (n, degrees) in [(2, vec![3]), (2, vec![2, 2]), (3, vec![4]), (5, vec![3, 2])] {
        let x = CompleteIntersection::new(n, degrees)?;
        let values: Vec<String> = twist_values(&x)?.iter().map(ToString::to_string).collect();
        println!(
            "{x}: values [{}] -> leading {} (2^n deg X = {})",
            values.join(", "),
            twist_leading_coefficient(&x)?,
            obstruction_bound(&x)
        );
    }
    Ok(())
}
