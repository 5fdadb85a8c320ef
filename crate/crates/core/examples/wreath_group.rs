//! The group S_n ≀ C_ℓ, its symplectic reflection classes and Molien series.
//!
//! Run with `cargo run --example wreath_group -- 3 2` (n, ℓ).

use cyclic_sra::wreath::{all_elements, group_order, invariant_dim, molien_series, reflection_classes, WreathElement};

fn main() -> cyclic_sra::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let n = args.first().copied().unwrap_or(2);
    let ell = args.get(1).copied().unwrap_or(3) as u32;

    println!("|S_{n} wr C_{ell}| = {}", group_order(n, ell));
    let s = WreathElement::reflection_s(n, ell, 0, 1, 1);
    let g = WreathElement::gamma(n, ell, 0, 1);
    println!("s_12 g1 g2^-1 = {s}, fixed-space codim {}", s.fixed_space_codim());
    println!(
        "g1 = {g}, inverse {}, order-{ell} power is identity: {}",
        g.inverse(),
        (1..ell).fold(g.clone(), |acc, _| acc.mul(&g)).is_identity()
    );

    println!("\nsymplectic reflection classes:");
    for class in reflection_classes(n, ell)? {
        println!(
            "  {:?}: representative {}, size {}",
            class.class_type, class.representative, class.size
        );
    }
    let codim2 = all_elements(n, ell)
        .iter()
        .filter(|g| g.fixed_space_codim() == 2)
        .count();
    println!("codimension-2 elements by brute force: {codim2}");

    let cap = 6;
    let mol = molien_series(n, ell, cap);
    println!("\n d  Molien  Reynolds count");
    for d in 0..=cap {
        println!(
            "{d:>2}  {:>6}  {:>6}",
            mol.coeff(d).to_string(),
            invariant_dim(n, ell, d)
        );
    }
    Ok(())
}
