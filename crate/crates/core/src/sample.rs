//! Seeded sampling of bounded-height scalars.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::scalars::{Cyclotomic, Rational};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// p/q with |p| <= height and 1 <= q <= height.
pub fn rational<R: Rng>(rng: &mut R, height: i64) -> Rational {
    let p = rng.gen_range(-height..=height);
    let q = rng.gen_range(1..=height);
    Rational::new(p, q).expect("positive denominator")
}

pub fn nonzero_rational<R: Rng>(rng: &mut R, height: i64) -> Rational {
    loop {
        let r = rational(rng, height);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Element of Q(η_ℓ) with every power-basis coordinate of bounded height.
pub fn cyclotomic<R: Rng>(rng: &mut R, ell: u32, height: i64) -> Cyclotomic {
    let d = Cyclotomic::zero(ell).coeffs().len();
    let coeffs = (0..d).map(|_| rational(rng, height)).collect();
    Cyclotomic::new(ell, coeffs).expect("length matches degree")
}

pub fn nonzero_cyclotomic<R: Rng>(rng: &mut R, ell: u32, height: i64) -> Cyclotomic {
    loop {
        let z = cyclotomic(rng, ell, height);
        if !z.is_zero() {
            return z;
        }
    }
}

/// A rational embedded in Q(η_ℓ).
pub fn rational_in<R: Rng>(rng: &mut R, ell: u32, height: i64) -> Cyclotomic {
    Cyclotomic::from_rational(ell, rational(rng, height))
}
