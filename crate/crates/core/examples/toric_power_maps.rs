//! Power maps on toric models of P² blown up at coordinate points, and the
//! pullback/pushforward identity they satisfy on the Picard lattice.
//!
//! cargo run -p chern-endo --example toric_power_maps

use chern_endo::delpezzo::{
    coordinate_blowup_fan, is_fan_morphism, pullback_pushforward_check, ramification_arithmetic,
    toric_power_map, IntMatrix, LatticeMap, PicardClass,
};
use chern_endo::Result;

fn main() -> Result<()> {
    for blown in 0..=3 {
        let flags: Vec<bool> = (0..3).map(|i| i < blown).collect();
        let fan = coordinate_blowup_fan(&flags)?;
        let degrees: Vec<i64> = (1..=4)
            .map(|p| toric_power_map(&fan, p).map(|c| c.degree))
            .collect::<Result<_>>()?;
        println!(
            "{blown} blow-up(s), rays {:?}: degrees {degrees:?}",
            fan.rays()
        );
    }

    let p2 = coordinate_blowup_fan(&[])?;
    let shear = LatticeMap([[1, 1], [0, 1]]);
    println!(
        "shear preserves the P² fan: {}",
        is_fan_morphism(&p2, &p2, &shear)
    );

    // f = power map with p = 3 on P² blown up at three points: f^* = f_* = 3·Id
    let r = 3;
    let p = 3;
    let pull = IntMatrix::scalar(r + 1, p);
    println!(
        "f_* f^* = {}·Id: {}",
        p * p,
        pullback_pushforward_check(&pull, &pull, p * p)?
    );
    println!("f^*K = {}", pull.apply(&PicardClass::canonical(r))?);
    println!(
        "degree {} with δ = {p}: {}",
        p * p,
        ramification_arithmetic((p * p) as u64, p as u64)?
    );
    println!("degree 8 with δ = 2: {}", ramification_arithmetic(8, 2)?);
    Ok(())
}
