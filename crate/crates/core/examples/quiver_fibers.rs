//! Cyclic quiver representations: the regular locus, the free action on the framed
//! slice, trace-cycle invariants and invariant dimensions of moment-map fibres.
//!
//! Run with `cargo run --release --example quiver_fibers`.

use cyclic_sra::quiver::{
    end_dim, fiber_invariant_dim, is_regular, is_regular_by_end, random_h_reg, regularity_samples, slice_embed,
    slice_stabilizer, trace_cycle_basis, trace_identity_defect, FiberIdeal, QuiverConfig, Space, DEFAULT_SIZE_GUARD,
};
use cyclic_sra::sample;
use cyclic_sra::scalars::Cyclotomic;
use cyclic_sra::wreath::molien_series;

fn main() -> cyclic_sra::Result<()> {
    let cfg = QuiverConfig::new(2, 3)?;
    let mut rng = sample::rng(5);

    let x = random_h_reg(&mut rng, cfg);
    let rep = slice_embed(cfg, &x)?;
    println!(
        "slice point x = {:?}",
        x.iter().map(|v| v.to_string()).collect::<Vec<_>>()
    );
    println!("  regular: {}, dim End = {}", is_regular(&rep), end_dim(&rep));
    let ones = vec![Cyclotomic::one(cfg.ell); cfg.n];
    println!("  stabiliser of (X, i = 1): {:?}", slice_stabilizer(cfg, &x, &ones)?);

    let samples = regularity_samples(cfg, 100, 9);
    let regular = samples.iter().filter(|(_, r)| is_regular(r)).count();
    let agree = samples
        .iter()
        .filter(|(_, r)| is_regular(r) == is_regular_by_end(r))
        .count();
    println!("mixed samples: {regular}/100 regular, criteria agree on {agree}/100");

    println!("\ndegree-2 trace invariants on the framed double:");
    for inv in trace_cycle_basis(cfg, Space::DoubledFramed, 2) {
        println!("  {inv}");
    }
    println!("sum of Tr(mu_v) - j i = {}", trace_identity_defect(cfg));

    for (n, ell, cap) in [(1, 3, 6), (2, 2, 3)] {
        let qc = QuiverConfig::new(n, ell)?;
        let mol = molien_series(n, ell, cap);
        println!("\nn={n} l={ell}:  d  Molien  I_mu_full  I2  I3");
        for d in 0..=cap {
            let dims: Vec<usize> = [FiberIdeal::MuFull, FiberIdeal::I2, FiberIdeal::I3]
                .into_iter()
                .map(|ideal| fiber_invariant_dim(qc, ideal, d, DEFAULT_SIZE_GUARD))
                .collect::<cyclic_sra::Result<_>>()?;
            println!(
                "           {d:>2}  {:>6}  {:>9}  {:>2}  {:>2}",
                mol.coeff(d).to_string(),
                dims[0],
                dims[1],
                dims[2]
            );
        }
    }
    Ok(())
}
