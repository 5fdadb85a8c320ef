use std::collections::BTreeSet;
use std::sync::Arc;

use serde_json::{json, Value};

use super::{Job, Suite, SuiteConfig};
use crate::characters::{c_coefficients, char_to_params, chi_c, chi_kc, shift_params, twist_exponents, LieChar};
use crate::error::{Error, Result};
use crate::poly::monomial_count;
use crate::quiver::{
    cyclic_vector_test, end_dim, fiber_invariant_dim, i2_contained_in_i3, is_regular, is_regular_by_end, random_h_reg,
    regularity_samples, slice_embed, slice_stabilizer, trace_identity_defect, FiberIdeal, QuiverConfig,
};
use crate::radial::{delta_conjugate, is_gamma_invariant, random_op, reynolds, DeltaTwist, DiffOp, RatFunc};
use crate::sample::{self, SeededRng};
use crate::scalars::Cyclotomic;
use crate::sra::{spherical_graded_dim, verify_associativity, verify_relations, Sra, SraElement, SraParams};
use crate::wreath::{all_elements, conjugacy_class, group_order, invariant_dim, molien_series, reflection_classes};

type Point = (Cyclotomic, Vec<Cyclotomic>);

/// FNV-1a of the tag mixed into the run seed, so each check has its own stream.
fn sub_seed(seed: u64, tag: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in tag.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

fn random_c(rng: &mut SeededRng, ell: u32) -> Vec<Cyclotomic> {
    (1..ell).map(|_| sample::cyclotomic(rng, ell, 4)).collect()
}

fn random_point(rng: &mut SeededRng, ell: u32) -> Point {
    (sample::rational_in(rng, ell, 6), random_c(rng, ell))
}

/// Three parameter points; a user-supplied (k, c) comes first.
fn param_points(cfg: &SuiteConfig, tag: &str) -> Vec<Point> {
    let mut rng = sample::rng(sub_seed(cfg.seed, tag));
    let mut out = Vec::new();
    if cfg.k.is_some() || cfg.c.is_some() {
        let (k, c) = random_point(&mut rng, cfg.ell);
        out.push((cfg.k.clone().unwrap_or(k), cfg.c.clone().unwrap_or(c)));
    }
    while out.len() < 3 {
        out.push(random_point(&mut rng, cfg.ell));
    }
    out
}

fn point_label((k, c): &Point) -> String {
    let c: Vec<String> = c.iter().map(|v| v.to_string()).collect();
    format!("k={k} c=[{}]", c.join(", "))
}

fn molien_value(n: usize, ell: u32, d: usize) -> Value {
    json!(molien_series(n, ell, d)
        .coeff(d)
        .to_i64()
        .expect("Molien coefficients are integers"))
}

/// Runs `trials` seeded samples of a property and reports how many held.
fn count_holds(trials: usize, seed: u64, mut f: impl FnMut(&mut SeededRng) -> Result<bool>) -> Result<(Value, Value)> {
    let mut rng = sample::rng(seed);
    let mut held = 0;
    for _ in 0..trials {
        if f(&mut rng)? {
            held += 1;
        }
    }
    Ok((json!(trials), json!(held)))
}

pub(super) fn jobs(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<Job>> {
    Ok(match suite {
        Suite::Characters => characters(cfg),
        Suite::Wreath => wreath(cfg),
        Suite::Sra => sra(cfg)?,
        Suite::Quiver => quiver(cfg)?,
        Suite::Radial => radial(cfg),
        Suite::All => unreachable!("expanded by run_suite"),
    })
}

fn characters(cfg: &SuiteConfig) -> Vec<Job> {
    let (ell, trials, seed) = (cfg.ell, cfg.trials, cfg.seed);
    let s = Suite::Characters;
    let label = format!("l={ell}");
    let mut jobs = vec![
        Job::new(
            s,
            "C_sum_zero",
            &label,
            "chi_c is a character: the C_r sum to zero",
            move || {
                count_holds(trials, sub_seed(seed, "C_sum_zero"), |rng| {
                    let c = random_c(rng, ell);
                    Ok(c_coefficients(ell, &c)?
                        .iter()
                        .fold(Cyclotomic::zero(ell), |a, v| &a + v)
                        .is_zero())
                })
            },
        ),
        Job::new(s, "r_sum_zero", &label, "twist exponents r_i sum to zero", move || {
            count_holds(trials, sub_seed(seed, "r_sum_zero"), |rng| {
                let c = random_c(rng, ell);
                let t = twist_exponents(ell, &c)?;
                Ok(t.r.iter().fold(Cyclotomic::zero(ell), |a, v| &a + v).is_zero())
            })
        }),
        Job::new(
            s,
            "chi_c_at_zero",
            &label,
            "C_0 = (1 - l)/l and C_r = 1/l at c = 0",
            move || {
                let ch = chi_c(ell, &vec![Cyclotomic::zero(ell); ell as usize - 1])?;
                let mut want = vec![format!("1/{ell}"); ell as usize];
                want[0] = format!("{}/{ell}", 1 - ell as i64);
                let want: Vec<String> = want
                    .iter()
                    .map(|s| crate::scalars::parse_cyclotomic(s, ell).map(|v| v.to_string()))
                    .collect::<Result<_>>()?;
                let got: Vec<String> = ch.lambda.iter().map(|v| v.to_string()).collect();
                Ok((json!(want), json!(got)))
            },
        ),
        Job::new(
            s,
            "params_round_trip",
            &label,
            "(k, c) is recovered from chi_{k,c}",
            move || {
                count_holds(trials, sub_seed(seed, "params_round_trip"), |rng| {
                    let (k, c) = random_point(rng, ell);
                    let (k2, c2) = char_to_params(&chi_kc(ell, &k, &c)?);
                    Ok(k2 == k && c2 == c)
                })
            },
        ),
    ];
    for i in 0..ell as usize {
        let tag = format!("parameter_shift_{i}");
        jobs.push(Job::new(
            s,
            tag.clone(),
            format!("l={ell} i={i}"),
            "shifting by chi_i sends (k, c_m) to (k + 1, c_m + 1 - eta^(-mi))",
            move || {
                count_holds(trials, sub_seed(seed, &tag), |rng| {
                    let (k, c) = random_point(rng, ell);
                    let shifted = chi_kc(ell, &k, &c)?.add(&LieChar::basis(ell, i))?;
                    Ok(shift_params(ell, &k, &c, i)? == char_to_params(&shifted))
                })
            },
        ));
    }
    jobs
}

fn wreath(cfg: &SuiteConfig) -> Vec<Job> {
    let (n, ell, cap) = (cfg.n, cfg.ell, cfg.degree_cap);
    let s = Suite::Wreath;
    let label = format!("n={n} l={ell}");
    let mut jobs = vec![
        Job::new(s, "group_order", &label, "|Gamma_n| = n! l^n", move || {
            Ok((
                json!(group_order(n, ell).to_string()),
                json!(all_elements(n, ell).len().to_string()),
            ))
        }),
        Job::new(
            s,
            "reflection_class_count",
            &label,
            "one class of type S and l - 1 of type C",
            move || Ok((json!(ell), json!(reflection_classes(n, ell)?.len()))),
        ),
        Job::new(
            s,
            "representatives_codim_two",
            &label,
            "class representatives are symplectic reflections",
            move || {
                let codims: Vec<usize> = reflection_classes(n, ell)?
                    .iter()
                    .map(|c| c.representative.fixed_space_codim())
                    .collect();
                Ok((json!(vec![2; ell as usize]), json!(codims)))
            },
        ),
        Job::new(
            s,
            "class_sizes",
            &label,
            "type S has l n(n-1)/2 elements, each type C has n",
            move || {
                let want: Vec<usize> = (0..ell as usize)
                    .map(|m| if m == 0 { ell as usize * n * (n - 1) / 2 } else { n })
                    .collect();
                let got: Vec<usize> = reflection_classes(n, ell)?.iter().map(|c| c.size).collect();
                Ok((json!(want), json!(got)))
            },
        ),
        Job::new(
            s,
            "reflection_census",
            &label,
            "every codimension-2 element lies in a listed class",
            move || {
                let brute: BTreeSet<String> = all_elements(n, ell)
                    .into_iter()
                    .filter(|g| g.fixed_space_codim() == 2)
                    .map(|g| g.to_string())
                    .collect();
                let mut union = BTreeSet::new();
                for class in reflection_classes(n, ell)? {
                    union.extend(
                        conjugacy_class(&class.representative)
                            .into_iter()
                            .map(|g| g.to_string()),
                    );
                }
                Ok((json!(brute), json!(union)))
            },
        ),
    ];
    for d in 0..=cap {
        jobs.push(Job::new(
            s,
            format!("molien_d{d}"),
            format!("n={n} l={ell} d={d}"),
            "Molien coefficient equals the Reynolds-operator invariant count",
            move || Ok((molien_value(n, ell, d), json!(invariant_dim(n, ell, d)))),
        ));
    }
    jobs
}

fn sra_params(n: usize, ell: u32, (k, c): &Point) -> Result<SraParams> {
    SraParams::new(n, ell, k.clone(), c.clone())
}

fn sra(cfg: &SuiteConfig) -> Result<Vec<Job>> {
    let (n, ell, cap, trials, seed, guard) = (cfg.n, cfg.ell, cfg.degree_cap, cfg.trials, cfg.seed, cfg.size_guard);
    let s = Suite::Sra;
    let mut jobs = vec![Job::new(
        s,
        "weyl_at_zero",
        format!("n={n} l={ell}"),
        "[y_i, x_i] = 1 when k = c = 0",
        move || {
            let alg = Sra::new(SraParams::undeformed(n, ell));
            let comm = SraElement::y(&alg, 0)
                .mul(&SraElement::x(&alg, 0))?
                .sub(&SraElement::x(&alg, 0).mul(&SraElement::y(&alg, 0))?)?;
            Ok((json!(SraElement::one(&alg).to_string()), json!(comm.to_string())))
        },
    )];
    let order = group_order(n, ell);
    for (p, point) in param_points(cfg, "sra").into_iter().enumerate() {
        let params = Arc::new(sra_params(n, ell, &point)?);
        let label = point_label(&point);
        let pr = params.clone();
        jobs.push(Job::new(
            s,
            format!("relations_p{p}"),
            &label,
            "defining commutation relations",
            move || {
                let report = verify_relations(&pr);
                let failed: Vec<&str> = report.failures().map(|c| c.relation.as_str()).collect();
                Ok((json!(Vec::<&str>::new()), json!(failed)))
            },
        ));
        let pr = params.clone();
        let degree = cap.min(3);
        let aseed = sub_seed(seed, &format!("assoc_{p}"));
        jobs.push(Job::new(
            s,
            format!("associativity_p{p}"),
            format!("{label} deg<={degree}"),
            "the relations define an associative algebra",
            move || {
                let report = verify_associativity(&pr, degree, trials, aseed);
                let held = report.trials - report.failures.len() - report.errors.len();
                Ok((json!(report.trials), json!(held)))
            },
        ));
        for d in 0..=cap {
            let pr = params.clone();
            jobs.push(Job::new(
                s,
                format!("spherical_dim_p{p}_d{d}"),
                format!("{label} d={d}"),
                "gr eHe has the Hilbert series of the invariant ring",
                move || {
                    let needed = monomial_count(2 * n, d) * order;
                    if needed > guard {
                        return Err(Error::SizeGuard { needed, limit: guard });
                    }
                    Ok((molien_value(n, ell, d), json!(spherical_graded_dim(&pr, d)?)))
                },
            ));
        }
    }
    Ok(jobs)
}

fn quiver(cfg: &SuiteConfig) -> Result<Vec<Job>> {
    let (n, ell, cap, trials, seed, guard) = (cfg.n, cfg.ell, cfg.degree_cap, cfg.trials, cfg.seed, cfg.size_guard);
    let qc = QuiverConfig::new(n, ell)?;
    let s = Suite::Quiver;
    let label = format!("n={n} l={ell}");
    let mut jobs = vec![
        Job::new(s, "trace_identity", &label, "sum of Tr(mu_v) equals j i", move || {
            Ok((json!("0"), json!(trace_identity_defect(qc).to_string())))
        }),
        Job::new(
            s,
            "regularity_agreement",
            &label,
            "charpoly test agrees with the endomorphism oracle",
            move || {
                let samples = regularity_samples(qc, trials, sub_seed(seed, "regularity"));
                let agree = samples
                    .iter()
                    .filter(|(_, r)| is_regular(r) == is_regular_by_end(r))
                    .count();
                Ok((json!(trials), json!(agree)))
            },
        ),
        Job::new(
            s,
            "slice_regular",
            &label,
            "slice points are regular with n-dimensional End",
            move || {
                count_holds(trials, sub_seed(seed, "slice"), |rng| {
                    let rep = slice_embed(qc, &random_h_reg(rng, qc))?;
                    Ok(is_regular(&rep) && end_dim(&rep) == n)
                })
            },
        ),
        Job::new(
            s,
            "cyclic_vector",
            &label,
            "i = (1, ..., 1) is cyclic on the regular slice",
            move || {
                let ones = vec![Cyclotomic::one(ell); n];
                count_holds(trials, sub_seed(seed, "cyclic"), |rng| {
                    cyclic_vector_test(&random_h_reg(rng, qc), &ones)
                })
            },
        ),
        Job::new(
            s,
            "free_action",
            &label,
            "G acts freely on the framed slice",
            move || {
                let ones = vec![Cyclotomic::one(ell); n];
                count_holds(trials, sub_seed(seed, "free"), |rng| {
                    Ok(slice_stabilizer(qc, &random_h_reg(rng, qc), &ones)?.is_trivial())
                })
            },
        ),
    ];
    let mut fiber = |qc: QuiverConfig, ideal: FiberIdeal, d: usize| {
        let (n, ell) = (qc.n, qc.ell);
        jobs.push(Job::new(
            s,
            format!("fiber_{}_n{n}_d{d}", ideal.name()),
            format!("n={n} l={ell} d={d}"),
            "invariants of the moment-map fiber have the Molien dimensions",
            move || {
                Ok((
                    molien_value(n, ell, d),
                    json!(fiber_invariant_dim(qc, ideal, d, guard)?),
                ))
            },
        ));
    };
    let rank_one = QuiverConfig::new(1, ell)?;
    for d in 0..=cap.max(6) {
        for ideal in [FiberIdeal::MuFull, FiberIdeal::I2, FiberIdeal::I3] {
            fiber(rank_one, ideal, d);
        }
    }
    for d in 0..=cap {
        fiber(qc, FiberIdeal::MuFull, d);
        if d <= 3 {
            fiber(qc, FiberIdeal::I2, d);
            fiber(qc, FiberIdeal::I3, d);
        }
    }
    for d in 0..=cap.min(3) {
        jobs.push(Job::new(
            s,
            format!("i2_in_i3_d{d}"),
            format!("n={n} l={ell} d={d}"),
            "the rank-one ideal contains the trace ideal",
            move || Ok((json!(true), json!(i2_contained_in_i3(qc, d, guard)?))),
        ));
    }
    Ok(jobs)
}

fn radial(cfg: &SuiteConfig) -> Vec<Job> {
    let (n, ell, trials, seed) = (cfg.n, cfg.ell, cfg.trials, cfg.seed);
    let s = Suite::Radial;
    let mut jobs = Vec::new();
    for (p, point) in param_points(cfg, "radial").into_iter().enumerate() {
        let label = point_label(&point);
        let (k, c) = point;
        let twist = Arc::new((k, c));
        let build = move |t: &(Cyclotomic, Vec<Cyclotomic>)| DeltaTwist::from_params(n, ell, &t.0, &t.1);
        let tw = twist.clone();
        let tag = format!("multiplicative_p{p}");
        jobs.push(Job::new(
            s,
            tag.clone(),
            &label,
            "conjugation by the twist is multiplicative",
            move || {
                let t = build(&tw)?;
                count_holds(trials, sub_seed(seed, &tag), |rng| {
                    let a = random_op(rng, n, ell, 1, 1);
                    let b = random_op(rng, n, ell, 1, 1);
                    let lhs = delta_conjugate(&t, &a.compose(&b)?)?;
                    Ok(lhs == delta_conjugate(&t, &a)?.compose(&delta_conjugate(&t, &b)?)?)
                })
            },
        ));
        let tw = twist.clone();
        let tag = format!("round_trip_p{p}");
        jobs.push(Job::new(
            s,
            tag.clone(),
            &label,
            "the inverse twist undoes conjugation",
            move || {
                let t = build(&tw)?;
                let inv = t.negated();
                count_holds(trials, sub_seed(seed, &tag), |rng| {
                    let a = random_op(rng, n, ell, 2, 1);
                    Ok(delta_conjugate(&inv, &delta_conjugate(&t, &a)?)? == a)
                })
            },
        ));
        let tw = twist.clone();
        let tag = format!("invariance_p{p}");
        jobs.push(Job::new(
            s,
            tag.clone(),
            &label,
            "conjugation preserves Gamma_n-invariance",
            move || {
                let t = build(&tw)?;
                count_holds(trials, sub_seed(seed, &tag), |rng| {
                    let a = reynolds(&random_op(rng, n, ell, 1, 1));
                    Ok(is_gamma_invariant(&a) && is_gamma_invariant(&delta_conjugate(&t, &a)?))
                })
            },
        ));
        let tw = twist.clone();
        jobs.push(Job::new(
            s,
            format!("multiplication_fixed_p{p}"),
            &label,
            "multiplication operators are fixed",
            move || {
                let t = build(&tw)?;
                let mut fixed = 0;
                let mut total = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        let f =
                            DiffOp::multiplication(RatFunc::inv_binomial(n, ell, i, j)?.add(&RatFunc::var(n, ell, i)));
                        total += 1;
                        fixed += usize::from(delta_conjugate(&t, &f)? == f);
                    }
                }
                Ok((json!(total), json!(fixed)))
            },
        ));
    }
    jobs
}
