//! Graded dimensions of the spherical subalgebra eH_{k,c}e against the Molien series.
//!
//! Run with `cargo run --release --example spherical_dims`.

use cyclic_sra::scalars::parse_cyclotomic;
use cyclic_sra::sra::{spherical_graded_dim, SraParams};
use cyclic_sra::wreath::molien_series;

fn main() -> cyclic_sra::Result<()> {
    let (n, ell, cap) = (2, 2, 4);
    let mol = molien_series(n, ell, cap);
    let points = [("0", "0"), ("3/2", "-1"), ("-7", "1/5")];
    print!(" d  Molien");
    for (k, c) in points {
        print!("  k={k},c={c}");
    }
    println!();
    for d in 0..=cap {
        print!("{d:>2}  {:>6}", mol.coeff(d).to_string());
        for (k, c) in points {
            let p = SraParams::new(n, ell, parse_cyclotomic(k, ell)?, vec![parse_cyclotomic(c, ell)?])?;
            let label = format!("  k={k},c={c}");
            print!("{:>width$}", spherical_graded_dim(&p, d)?, width = label.len());
        }
        println!();
    }
    Ok(())
}
