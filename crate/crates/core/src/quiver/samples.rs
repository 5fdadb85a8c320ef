use rand::Rng;

use super::rep::{g_act, GroupPoint, Mat, QuiverConfig, QuiverRep};
use crate::sample;
use crate::scalars::Cyclotomic;

/// What kind of point a sample was built as.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SampleKind {
    /// independent random entries
    Random,
    /// a random point with one arrow made singular
    SingularArrow,
    /// a conjugate of slice_embed(x) for x ∈ h^reg
    RegularSlice,
    /// a conjugate of (diag(x), …) with x_2 = η x_1, so the monodromy has a repeated eigenvalue
    CollidingSlice,
    /// monodromy a single Jordan block
    Jordan,
}

fn random_matrix<R: Rng>(rng: &mut R, cfg: QuiverConfig, height: i64) -> Mat {
    let rows = (0..cfg.n)
        .map(|_| (0..cfg.n).map(|_| sample::rational_in(rng, cfg.ell, height)).collect())
        .collect();
    Mat::from_rows(rows)
}

fn random_invertible<R: Rng>(rng: &mut R, cfg: QuiverConfig) -> Mat {
    loop {
        let m = random_matrix(rng, cfg, 3);
        if !m.det().is_zero() {
            return m;
        }
    }
}

pub fn random_group_point<R: Rng>(rng: &mut R, cfg: QuiverConfig) -> GroupPoint {
    GroupPoint::new((0..cfg.vertices()).map(|_| random_invertible(rng, cfg)).collect())
        .expect("invertible by construction")
}

/// Distinct-looking nonzero x with x_a^ℓ pairwise distinct.
pub fn random_h_reg<R: Rng>(rng: &mut R, cfg: QuiverConfig) -> Vec<Cyclotomic> {
    loop {
        let x: Vec<Cyclotomic> = (0..cfg.n).map(|_| sample::rational_in(rng, cfg.ell, 6)).collect();
        if super::rep::h_reg_member(&x) {
            return x;
        }
    }
}

fn conjugated<R: Rng>(rng: &mut R, rep: &QuiverRep) -> QuiverRep {
    g_act(&random_group_point(rng, rep.config), rep).expect("shapes match")
}

/// A seeded mix of regular and engineered-degenerate points, cycling through all kinds.
pub fn regularity_samples(cfg: QuiverConfig, count: usize, seed: u64) -> Vec<(SampleKind, QuiverRep)> {
    let mut rng = sample::rng(seed);
    let kinds = [
        SampleKind::Random,
        SampleKind::SingularArrow,
        SampleKind::RegularSlice,
        SampleKind::CollidingSlice,
        SampleKind::Jordan,
    ];
    let zero = Cyclotomic::zero(cfg.ell);
    (0..count)
        .map(|s| {
            let kind = kinds[s % kinds.len()];
            let rep = match kind {
                SampleKind::Random => QuiverRep::new(
                    cfg,
                    (0..cfg.vertices()).map(|_| random_matrix(&mut rng, cfg, 4)).collect(),
                ),
                SampleKind::SingularArrow => {
                    let mut x: Vec<Mat> = (0..cfg.vertices()).map(|_| random_matrix(&mut rng, cfg, 4)).collect();
                    let r = rng.gen_range(0..cfg.vertices());
                    let a = rng.gen_range(0..cfg.n);
                    for b in 0..cfg.n {
                        x[r][(a, b)] = zero.clone();
                    }
                    QuiverRep::new(cfg, x)
                }
                SampleKind::RegularSlice => {
                    let x = random_h_reg(&mut rng, cfg);
                    Ok(conjugated(
                        &mut rng,
                        &super::rep::slice_embed(cfg, &x).expect("regular"),
                    ))
                }
                SampleKind::CollidingSlice => {
                    let mut x = random_h_reg(&mut rng, cfg);
                    if cfg.n >= 2 {
                        x[1] = &x[0] * &Cyclotomic::eta_pow(cfg.ell, 1);
                    } else {
                        x[0] = zero.clone();
                    }
                    Ok(conjugated(
                        &mut rng,
                        &QuiverRep::new(cfg, vec![Mat::diag(&x); cfg.vertices()]).expect("square"),
                    ))
                }
                SampleKind::Jordan => {
                    let lam = sample::nonzero_rational(&mut rng, 5);
                    let mut j = Mat::identity(cfg.n, &zero).scale(&Cyclotomic::from_rational(cfg.ell, lam));
                    for a in 0..cfg.n.saturating_sub(1) {
                        j[(a, a + 1)] = Cyclotomic::one(cfg.ell);
                    }
                    let mut x = vec![Mat::identity(cfg.n, &zero); cfg.vertices()];
                    x[0] = j;
                    Ok(conjugated(&mut rng, &QuiverRep::new(cfg, x).expect("square")))
                }
            };
            (kind, rep.expect("shapes match"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{is_regular, is_regular_by_end};

    #[test]
    fn criteria_agree_on_mixed_samples() {
        for (n, ell) in [(2, 2), (2, 3), (3, 2)] {
            let cfg = QuiverConfig::new(n, ell).unwrap();
            let samples = regularity_samples(cfg, 40, 3);
            let mut regular = 0;
            for (kind, rep) in &samples {
                let a = is_regular(rep);
                assert_eq!(a, is_regular_by_end(rep), "{kind:?} {rep:?}");
                regular += a as usize;
                match kind {
                    SampleKind::RegularSlice => assert!(a),
                    SampleKind::SingularArrow | SampleKind::CollidingSlice => assert!(!a),
                    SampleKind::Jordan if n >= 2 => assert!(!a),
                    _ => {}
                }
            }
            assert!(regular > 0 && regular < samples.len());
        }
    }
}
