//! Exact arithmetic in Q(η) and with truncated power series.
//!
//! Run with `cargo run --example cyclotomic_arithmetic`.

use cyclic_sra::scalars::{parse_cyclotomic, Cyclotomic, Rational, TruncSeries};

fn main() -> cyclic_sra::Result<()> {
    let ell = 5;
    let eta = Cyclotomic::eta_pow(ell, 1);
    println!(
        "Q(eta_{ell}) has basis 1, eta, ..., eta^{}",
        cyclic_sra::scalars::euler_phi(ell) - 1
    );

    // η⁵ = 1 and 1 + η + η² + η³ + η⁴ = 0
    println!("eta^5 = {}", eta.pow(5)?);
    let sum = (0..5).fold(Cyclotomic::zero(ell), |acc, m| &acc + &Cyclotomic::eta_pow(ell, m));
    println!("1 + eta + ... + eta^4 = {sum}");

    let a = parse_cyclotomic("2/3*eta^2 - 1", ell)?;
    let inv = a.inv()?;
    println!("a = {a}");
    println!("1/a = {inv}");
    println!("a * (1/a) = {}", &a * &inv);

    // 1/(1 − t)² = Σ (d + 1) tᵈ
    let cap = 6;
    let one_minus_t = TruncSeries::new(cap, &Rational::zero(), [Rational::one(), Rational::from_int(-1)]);
    let square = one_minus_t.mul(&one_minus_t)?;
    let recip = TruncSeries::constant(cap, Rational::one()).div(&square)?;
    let coeffs: Vec<String> = recip.coeffs().iter().map(|c| c.to_string()).collect();
    println!("1/(1-t)^2 = [{}] + O(t^{})", coeffs.join(", "), cap + 1);
    Ok(())
}
