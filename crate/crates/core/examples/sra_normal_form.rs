//! PBW normal forms in the symplectic reflection algebra H_{k,c}.
//!
//! Run with `cargo run --example sra_normal_form`.

use cyclic_sra::scalars::parse_cyclotomic;
use cyclic_sra::sra::{verify_associativity, verify_relations, Sra, SraElement, SraParams};
use cyclic_sra::wreath::WreathElement;

fn main() -> cyclic_sra::Result<()> {
    let (n, ell) = (2, 3);
    let k = parse_cyclotomic("1/2", ell)?;
    let c = vec![parse_cyclotomic("eta", ell)?, parse_cyclotomic("1 - eta", ell)?];
    let params = SraParams::new(n, ell, k, c)?;
    let alg = Sra::new(params.clone());

    let x1 = SraElement::x(&alg, 0);
    let x2 = SraElement::x(&alg, 1);
    let y1 = SraElement::y(&alg, 0);

    // rewriting y1·x1 into x-block, y-block, group order
    println!("y1 x1 = {}", y1.mul(&x1)?);
    println!("y1 x2 = {}", y1.mul(&x2)?);

    let g = SraElement::group(&alg, WreathElement::gamma(n, ell, 0, 1));
    println!("g1 x1 = {}", g.mul(&x1)?);

    let s = SraElement::group(&alg, WreathElement::transposition(n, ell, 0, 1));
    let w = y1.mul(&s)?.mul(&x1)?.mul(&x2)?;
    println!(
        "y1 s12 x1 x2 has {} PBW terms, top degree {:?}",
        w.terms().len(),
        w.degree()
    );
    println!("memoised reorderings: {}", alg.memo_size());

    let rel = verify_relations(&params);
    println!(
        "\n{} relation instances, all hold: {}",
        rel.checks.len(),
        rel.all_passed()
    );
    let assoc = verify_associativity(&params, 2, 50, 1);
    println!(
        "associativity on {} random triples: {}",
        assoc.trials,
        assoc.all_passed()
    );
    Ok(())
}
