//! Chern numbers of Ω¹_X(2) for hypersurfaces, from the series and from the
//! closed form, side by side.
//!
//! cargo run -p chern-endo --example hypersurface_chern

use chern_endo::{
    chern_number, closed_form_c_n, twisted_cotangent_chern_series, CompleteIntersection, Result,
};

fn main() -> Result<()> {
    println!(
        "{:>3} {:>3}  {:>24}  {:>24}",
        "n", "d", "series", "closed form"
    );
    for n in [2u32, 3, 4, 10] {
        for d in [3u32, 4, 5] {
            let x = CompleteIntersection::hypersurface(n, d)?;
            let series = chern_number(&x, 2)?;
            let closed = closed_form_c_n(n, d)?;
            println!("{n:>3} {d:>3}  {series:>24}  {closed:>24}");
        }
    }

    let cubic = CompleteIntersection::hypersurface(2, 3)?;
    for t in [0, 1, 2, 3] {
        println!(
            "cubic surface, twist {t}: c = {}, c_2 = {}",
            twisted_cotangent_chern_series(&cubic, t),
            chern_number(&cubic, t)?
        );
    }

    let big = CompleteIntersection::hypersurface(100, 100)?;
    let c = chern_number(&big, 2)?;
    println!(
        "n = d = 100: c_100 has {} decimal digits",
        c.to_string().len()
    );
    Ok(())
}
