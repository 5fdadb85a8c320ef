//! Differential operators with poles along x_i = 0 and x_i^ℓ = x_j^ℓ, and conjugation by
//! the twist δ^{-k-1} δ_Γ^σ.
//!
//! Run with `cargo run --example radial_twist`.

use cyclic_sra::radial::{delta_conjugate, is_gamma_invariant, reynolds, DeltaTwist, DiffOp, RatFunc};
use cyclic_sra::scalars::parse_cyclotomic;

fn main() -> cyclic_sra::Result<()> {
    let (n, ell) = (2, 2);
    let k = parse_cyclotomic("1/3", ell)?;
    let c = vec![parse_cyclotomic("2", ell)?];
    let t = DeltaTwist::from_params(n, ell, &k, &c)?;
    println!("twist exponents: delta^{} delta_Gamma^{}", t.delta_exp, t.gamma_exp);
    println!("d/dx1 log of the twist = {}", t.log_derivative(0));

    let d1 = DiffOp::d(n, ell, 0);
    println!("\nconjugated d1 = {}", delta_conjugate(&t, &d1)?);

    // the Γ-invariant second-order operator ∂1² + ∂2²
    let lap = DiffOp::d(n, ell, 0)
        .compose(&DiffOp::d(n, ell, 0))?
        .add(&DiffOp::d(n, ell, 1).compose(&DiffOp::d(n, ell, 1))?)?;
    println!("\nLaplacian is invariant: {}", is_gamma_invariant(&lap));
    let conj = delta_conjugate(&t, &lap)?;
    println!("conjugated Laplacian = {conj}");
    println!("still invariant: {}", is_gamma_invariant(&conj));
    println!(
        "inverse twist recovers it: {}",
        delta_conjugate(&t.negated(), &conj)? == lap
    );

    let f = RatFunc::var(n, ell, 0)
        .mul(&RatFunc::var(n, ell, 0))
        .mul(&RatFunc::inv_var(n, ell, 1));
    let sym = reynolds(&DiffOp::multiplication(f).compose(&DiffOp::d(n, ell, 1))?);
    println!("\nReynolds average of x1^2/x2 d2 = {sym}");
    println!("invariant: {}", is_gamma_invariant(&sym));
    Ok(())
}
