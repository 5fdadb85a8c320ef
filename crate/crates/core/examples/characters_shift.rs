//! Characters χ_{k,c} of the cyclic quiver's gauge group, twist exponents and the shift
//! (k, c) ↦ (k + 1, c′).
//!
//! Run with `cargo run --example characters_shift`.

use cyclic_sra::characters::{c_coefficients, char_to_params, chi_kc, shift_params, twist_exponents, LieChar};
use cyclic_sra::scalars::{parse_cyclotomic, Cyclotomic};

fn show(v: &[Cyclotomic]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() -> cyclic_sra::Result<()> {
    let ell = 3;
    let k = parse_cyclotomic("2/5", ell)?;
    let c = vec![parse_cyclotomic("1 + eta", ell)?, parse_cyclotomic("-1/2", ell)?];

    let cc = c_coefficients(ell, &c)?;
    println!("C_r = [{}]", show(&cc));
    println!("sum C_r = {}", cc.iter().fold(Cyclotomic::zero(ell), |a, v| &a + v));

    let t = twist_exponents(ell, &c)?;
    println!("sigma = {}, r_i = [{}]", t.sigma, show(&t.r));

    let chi = chi_kc(ell, &k, &c)?;
    println!("chi_(k,c) = [{}]", show(&chi.lambda));
    let (k2, c2) = char_to_params(&chi);
    println!("recovered k = {k2}, c = [{}]", show(&c2));

    for i in 0..ell as usize {
        let (ks, cs) = shift_params(ell, &k, &c, i)?;
        let via_char = char_to_params(&chi.add(&LieChar::basis(ell, i))?);
        println!(
            "shift i={i}: k' = {ks}, c' = [{}], agrees with chi + chi_{i}: {}",
            show(&cs),
            via_char == (ks.clone(), cs.clone())
        );
    }
    Ok(())
}
