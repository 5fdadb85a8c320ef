//! Acceptance criteria, run as a plain binary so every criterion prints its own
//! pass/fail line. All comparisons are exact.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cyclic_sra::characters::{c_coefficients, char_to_params, chi_kc, shift_params, twist_exponents, LieChar};
use cyclic_sra::quiver::{
    end_dim, fiber_invariant_dim, i2_contained_in_i3, is_regular, is_regular_by_end, random_h_reg, regularity_samples,
    slice_embed, slice_stabilizer, trace_identity_defect, FiberIdeal, QuiverConfig, DEFAULT_SIZE_GUARD,
};
use cyclic_sra::radial::{delta_conjugate, is_gamma_invariant, random_op, reynolds, DeltaTwist};
use cyclic_sra::sample::{self, SeededRng};
use cyclic_sra::scalars::Cyclotomic;
use cyclic_sra::sra::{spherical_graded_dim, verify_associativity, verify_relations, SraParams};
use cyclic_sra::wreath::{all_elements, conjugacy_class, molien_series, reflection_classes};

type Outcome = Result<String, String>;

/// Name, check, and runtime budget in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

const CONFIGS: [(usize, u32); 3] = [(2, 2), (2, 3), (3, 2)];

fn random_c(rng: &mut SeededRng, ell: u32) -> Vec<Cyclotomic> {
    (1..ell).map(|_| sample::cyclotomic(rng, ell, 5)).collect()
}

fn random_k(rng: &mut SeededRng, ell: u32) -> Cyclotomic {
    sample::rational_in(rng, ell, 7)
}

fn sum(v: &[Cyclotomic], ell: u32) -> Cyclotomic {
    v.iter().fold(Cyclotomic::zero(ell), |a, b| &a + b)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn molien(n: usize, ell: u32, d: usize) -> usize {
    molien_series(n, ell, d).coeff(d).to_i64().expect("integral") as usize
}

fn character_identities() -> Outcome {
    let mut rng = sample::rng(101);
    for ell in 2..=5 {
        for _ in 0..200 {
            let c = random_c(&mut rng, ell);
            let cc = c_coefficients(ell, &c).map_err(|e| e.to_string())?;
            ensure(sum(&cc, ell).is_zero(), || format!("sum C_r != 0 at l={ell}"))?;
            let t = twist_exponents(ell, &c).map_err(|e| e.to_string())?;
            ensure(sum(&t.r, ell).is_zero(), || format!("sum r_i != 0 at l={ell}"))?;
        }
    }
    Ok("800 random c, l = 2..5".into())
}

fn parameter_shift() -> Outcome {
    let mut rng = sample::rng(102);
    let mut cases = 0;
    for ell in 2..=4 {
        for _ in 0..50 {
            let (k, c) = (random_k(&mut rng, ell), random_c(&mut rng, ell));
            let chi = chi_kc(ell, &k, &c).map_err(|e| e.to_string())?;
            for i in 0..ell as usize {
                let direct = shift_params(ell, &k, &c, i).map_err(|e| e.to_string())?;
                let via = char_to_params(&chi.add(&LieChar::basis(ell, i)).map_err(|e| e.to_string())?);
                ensure(direct == via, || format!("l={ell} i={i} k={k}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (k, c, i) cases"))
}

fn sra_consistency() -> Outcome {
    let mut rng = sample::rng(103);
    for (n, ell) in CONFIGS {
        let mut first = None;
        for _ in 0..3 {
            let p =
                SraParams::new(n, ell, random_k(&mut rng, ell), random_c(&mut rng, ell)).map_err(|e| e.to_string())?;
            let report = verify_relations(&p);
            ensure(report.all_passed(), || {
                let bad: Vec<_> = report.failures().map(|c| c.relation.clone()).collect();
                format!("relations fail at (n,l)=({n},{ell}): {bad:?}")
            })?;
            first.get_or_insert(p);
        }
        let p = first.expect("three points");
        let assoc = verify_associativity(&p, 3, 200, 7 + n as u64 * 10 + ell as u64);
        ensure(assoc.all_passed(), || {
            format!("associativity fails at ({n},{ell}): {:?}", assoc.failures.first())
        })?;
    }
    Ok("relations at 9 points, 600 associativity triples".into())
}

fn spherical_dims() -> Outcome {
    let mut rng = sample::rng(104);
    let mut seen = Vec::new();
    for _ in 0..3 {
        let p = SraParams::new(2, 2, random_k(&mut rng, 2), random_c(&mut rng, 2)).map_err(|e| e.to_string())?;
        let dims: Vec<usize> = (0..=4)
            .map(|d| spherical_graded_dim(&p, d))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let want: Vec<usize> = (0..=4).map(|d| molien(2, 2, d)).collect();
        ensure(dims == want, || format!("k={} c={:?}: {dims:?} vs {want:?}", p.k, p.c))?;
        seen = dims;
    }
    Ok(format!("dims {seen:?} at 3 parameter points"))
}

fn quiver_dims() -> Outcome {
    let mut sizes = vec![(1, 2, 6), (1, 3, 6), (2, 2, 3)];
    let mut checked = 0;
    for (n, ell, cap) in sizes.drain(..) {
        let qc = QuiverConfig::new(n, ell).map_err(|e| e.to_string())?;
        for d in 0..=cap {
            let want = molien(n, ell, d);
            for ideal in [FiberIdeal::MuFull, FiberIdeal::I2, FiberIdeal::I3] {
                let got = fiber_invariant_dim(qc, ideal, d, DEFAULT_SIZE_GUARD).map_err(|e| e.to_string())?;
                ensure(got == want, || {
                    format!("{} at n={n} l={ell} d={d}: {got} vs {want}", ideal.name())
                })?;
                checked += 1;
            }
            let contained = i2_contained_in_i3(qc, d, DEFAULT_SIZE_GUARD).map_err(|e| e.to_string())?;
            ensure(contained, || format!("I2 not in I3 at n={n} l={ell} d={d}"))?;
        }
    }
    Ok(format!("{checked} fiber dimensions match Molien, I2 within I3"))
}

fn trace_identity() -> Outcome {
    for n in 1..=3 {
        for ell in 2..=3 {
            let qc = QuiverConfig::new(n, ell).map_err(|e| e.to_string())?;
            let defect = trace_identity_defect(qc);
            ensure(defect.is_zero(), || format!("n={n} l={ell}: defect {defect}"))?;
        }
    }
    Ok("n <= 3, l <= 3".into())
}

fn regular_locus() -> Outcome {
    let mut regular_total = 0;
    for (idx, (n, ell)) in CONFIGS.into_iter().enumerate() {
        let qc = QuiverConfig::new(n, ell).map_err(|e| e.to_string())?;
        let samples = regularity_samples(qc, 500, 200 + idx as u64);
        for (kind, rep) in &samples {
            ensure(is_regular(rep) == is_regular_by_end(rep), || {
                format!("{kind:?} sample disagrees at ({n},{ell})")
            })?;
        }
        regular_total += samples.iter().filter(|(_, r)| is_regular(r)).count();
        let mut rng = sample::rng(300 + idx as u64);
        for _ in 0..100 {
            let x = random_h_reg(&mut rng, qc);
            let rep = slice_embed(qc, &x).map_err(|e| e.to_string())?;
            ensure(is_regular(&rep) && end_dim(&rep) == n, || {
                format!("slice point not regular at ({n},{ell})")
            })?;
        }
    }
    Ok(format!(
        "1500 mixed samples ({regular_total} regular), 300 slice points"
    ))
}

fn free_action() -> Outcome {
    for (idx, (n, ell)) in CONFIGS.into_iter().enumerate() {
        let qc = QuiverConfig::new(n, ell).map_err(|e| e.to_string())?;
        let ones = vec![Cyclotomic::one(ell); n];
        let mut rng = sample::rng(400 + idx as u64);
        for _ in 0..100 {
            let x = random_h_reg(&mut rng, qc);
            let stab = slice_stabilizer(qc, &x, &ones).map_err(|e| e.to_string())?;
            ensure(stab.is_trivial(), || {
                format!("nontrivial stabiliser {stab:?} at ({n},{ell})")
            })?;
        }
    }
    Ok("100 points for each configuration".into())
}

fn reflection_census() -> Outcome {
    for (n, ell) in CONFIGS {
        let classes = reflection_classes(n, ell).map_err(|e| e.to_string())?;
        ensure(classes.len() == ell as usize, || {
            format!("{} classes at ({n},{ell})", classes.len())
        })?;
        let mut union = BTreeSet::new();
        for class in &classes {
            ensure(class.representative.fixed_space_codim() == 2, || {
                format!("{} is not a reflection", class.representative)
            })?;
            union.extend(conjugacy_class(&class.representative));
        }
        let brute: BTreeSet<_> = all_elements(n, ell)
            .into_iter()
            .filter(|g| g.fixed_space_codim() == 2)
            .collect();
        ensure(brute == union, || {
            format!("census mismatch at ({n},{ell}): {} vs {}", brute.len(), union.len())
        })?;
    }
    Ok("(2,2), (2,3), (3,2)".into())
}

fn radial_twist() -> Outcome {
    let mut rng = sample::rng(500);
    for (n, ell) in [(2, 2), (2, 3)] {
        for _ in 0..3 {
            let t = DeltaTwist::from_params(n, ell, &random_k(&mut rng, ell), &random_c(&mut rng, ell))
                .map_err(|e| e.to_string())?;
            let inv = t.negated();
            for _ in 0..50 {
                let a = random_op(&mut rng, n, ell, 1, 1);
                let b = random_op(&mut rng, n, ell, 1, 1);
                let ab = a.compose(&b).map_err(|e| e.to_string())?;
                let lhs = delta_conjugate(&t, &ab).map_err(|e| e.to_string())?;
                let ca = delta_conjugate(&t, &a).map_err(|e| e.to_string())?;
                let cb = delta_conjugate(&t, &b).map_err(|e| e.to_string())?;
                ensure(lhs == ca.compose(&cb).map_err(|e| e.to_string())?, || {
                    format!("not multiplicative at ({n},{ell})")
                })?;
                ensure(delta_conjugate(&inv, &ca).map_err(|e| e.to_string())? == a, || {
                    "round trip fails".into()
                })?;
            }
            for _ in 0..50 {
                let a = reynolds(&random_op(&mut rng, n, ell, 2, 1));
                ensure(is_gamma_invariant(&a), || "Reynolds image not invariant".into())?;
                let ca = delta_conjugate(&t, &a).map_err(|e| e.to_string())?;
                ensure(is_gamma_invariant(&ca), || format!("invariance lost at ({n},{ell})"))?;
            }
        }
    }
    Ok("300 pairs and 300 invariant operators".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("character identities", character_identities, 5),
        ("parameter shift", parameter_shift, 5),
        ("SRA consistency", sra_consistency, 120),
        ("graded spherical dimensions", spherical_dims, 180),
        ("quiver invariant dimensions", quiver_dims, 300),
        ("moment-map trace identity", trace_identity, 30),
        ("regular-locus agreement", regular_locus, 60),
        ("free action", free_action, 30),
        ("reflection census", reflection_census, 30),
        ("radial twist", radial_twist, 60),
    ];
    let mut failed = 0;
    for (idx, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(limit);
        match outcome {
            Ok(detail) if !over => println!(
                "criterion {:>2} {name}: pass ({detail}; {:.2}s)",
                idx + 1,
                elapsed.as_secs_f64()
            ),
            Ok(detail) => {
                failed += 1;
                println!(
                    "criterion {:>2} {name}: fail (over {limit}s budget: {:.2}s; {detail})",
                    idx + 1,
                    elapsed.as_secs_f64()
                );
            }
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: fail ({why})", idx + 1);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
