//! Characters of g = ⊕_r gl_n, the parameter map (k, c) ↦ χ_{k,c}, its inverse, twist
//! exponents, determinant characters of G and the shift (k, c) ↦ (k+1, c′).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::{Cyclotomic, Rational};

/// X ↦ Σ_r λ_r Tr(X_r).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LieChar {
    pub ell: u32,
    pub lambda: Vec<Cyclotomic>,
}

impl LieChar {
    pub fn new(ell: u32, lambda: Vec<Cyclotomic>) -> Result<Self> {
        if lambda.len() != ell as usize || lambda.iter().any(|l| l.ell() != ell) {
            return Err(Error::InvalidParams(format!(
                "a character for l={ell} needs {ell} coordinates in Q(eta_{ell})"
            )));
        }
        Ok(LieChar { ell, lambda })
    }

    pub fn zero(ell: u32) -> Self {
        LieChar {
            ell,
            lambda: vec![Cyclotomic::zero(ell); ell as usize],
        }
    }

    /// λ_i = 1, all other coordinates 0: X ↦ Tr(X_i).
    pub fn basis(ell: u32, i: usize) -> Self {
        let mut c = Self::zero(ell);
        c.lambda[i] = Cyclotomic::one(ell);
        c
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.ell != other.ell {
            return Err(Error::OrderMismatch(self.ell, other.ell));
        }
        Ok(LieChar {
            ell: self.ell,
            lambda: self.lambda.iter().zip(&other.lambda).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn total(&self) -> Cyclotomic {
        self.lambda.iter().fold(Cyclotomic::zero(self.ell), |acc, l| &acc + l)
    }

    /// Value at id = (I_n, …, I_n).
    pub fn at_identity(&self, n: usize) -> Cyclotomic {
        self.total().scale(&Rational::from_int(n as i64))
    }

    /// Whether the character kills id, i.e. factors through pg = g/C·id.
    pub fn descends_to_pg(&self) -> bool {
        self.total().is_zero()
    }
}

/// σ and r_0..r_{ℓ−1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistData {
    pub sigma: Cyclotomic,
    pub r: Vec<Cyclotomic>,
}

/// g ↦ Π_r det(g_r)^{i_r}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DetCharacter {
    pub i: Vec<i64>,
}

fn check_c(ell: u32, c: &[Cyclotomic]) -> Result<()> {
    if c.len() + 1 != ell as usize || c.iter().any(|v| v.ell() != ell) {
        return Err(Error::InvalidParams(format!(
            "expected {} values of c in Q(eta_{ell})",
            ell as usize - 1
        )));
    }
    Ok(())
}

fn inv_ell(ell: u32) -> Rational {
    Rational::new(1, ell as i64).expect("ell > 0")
}

/// C_0, …, C_{ℓ−1}:
/// C_r = ℓ⁻¹(1 − Σ_m η^{mr} c_m) for r ≥ 1, C_0 = ℓ⁻¹(1 − ℓ − Σ_m c_m).
pub fn c_coefficients(ell: u32, c: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
    check_c(ell, c)?;
    let one = Cyclotomic::one(ell);
    let out = (0..ell as i64)
        .map(|r| {
            let mut s = if r == 0 {
                Cyclotomic::from_int(ell, 1 - ell as i64)
            } else {
                one.clone()
            };
            for (idx, cm) in c.iter().enumerate() {
                let m = idx as i64 + 1;
                s = &s - &(&Cyclotomic::eta_pow(ell, m * r) * cm);
            }
            s.scale(&inv_ell(ell))
        })
        .collect();
    Ok(out)
}

pub fn chi_c(ell: u32, c: &[Cyclotomic]) -> Result<LieChar> {
    LieChar::new(ell, c_coefficients(ell, c)?)
}

/// χ_{k,c} = χ_c + χ_k with χ_k(X) = k Tr(X_0).
pub fn chi_kc(ell: u32, k: &Cyclotomic, c: &[Cyclotomic]) -> Result<LieChar> {
    let mut ch = chi_c(ell, c)?;
    if k.ell() != ell {
        return Err(Error::OrderMismatch(ell, k.ell()));
    }
    ch.lambda[0] = &ch.lambda[0] + k;
    Ok(ch)
}

/// The unique (k, c) with χ_{k,c} = χ. Since Σ_r C_r = 0, k = Σ_r λ_r; the c_m then come
/// from an inverse discrete Fourier transform over η.
pub fn char_to_params(chi: &LieChar) -> (Cyclotomic, Vec<Cyclotomic>) {
    let ell = chi.ell;
    let l = ell as i64;
    let k = chi.total();
    // b_r = Σ_{m≥1} η^{mr} c_m
    let b: Vec<Cyclotomic> = (0..ell as usize)
        .map(|r| {
            let lam = if r == 0 {
                &chi.lambda[0] - &k
            } else {
                chi.lambda[r].clone()
            };
            let base = if r == 0 { 1 - l } else { 1 };
            &Cyclotomic::from_int(ell, base) - &lam.scale(&Rational::from_int(l))
        })
        .collect();
    let c = (1..l)
        .map(|m| {
            let s = b.iter().enumerate().fold(Cyclotomic::zero(ell), |acc, (r, br)| {
                &acc + &(&Cyclotomic::eta_pow(ell, -m * r as i64) * br)
            });
            s.scale(&inv_ell(ell))
        })
        .collect();
    (k, c)
}

/// (k + 1, c_m + 1 − η^{−mi}).
pub fn shift_params(ell: u32, k: &Cyclotomic, c: &[Cyclotomic], i: usize) -> Result<(Cyclotomic, Vec<Cyclotomic>)> {
    check_c(ell, c)?;
    if i >= ell as usize {
        return Err(Error::InvalidParams(format!("vertex {i} out of range for l={ell}")));
    }
    let one = Cyclotomic::one(ell);
    let c2 = c
        .iter()
        .enumerate()
        .map(|(idx, cm)| {
            let m = idx as i64 + 1;
            &(cm + &one) - &Cyclotomic::eta_pow(ell, -m * i as i64)
        })
        .collect();
    Ok((k + &one, c2))
}

/// σ = ℓ⁻¹ Σ_s s·C_s and r_i = Σ_{j≤i} C_j + σ.
pub fn twist_exponents(ell: u32, c: &[Cyclotomic]) -> Result<TwistData> {
    let cc = c_coefficients(ell, c)?;
    let sigma = cc
        .iter()
        .enumerate()
        .fold(Cyclotomic::zero(ell), |acc, (s, cs)| {
            &acc + &cs.scale(&Rational::from_int(s as i64))
        })
        .scale(&inv_ell(ell));
    let mut partial = Cyclotomic::zero(ell);
    let r = cc
        .iter()
        .map(|cj| {
            partial = &partial + cj;
            &partial + &sigma
        })
        .collect();
    Ok(TwistData { sigma, r })
}

/// Differential of Π det(g_r)^{i_r}: λ_r = i_r.
pub fn det_char_to_liechar(ell: u32, d: &DetCharacter) -> Result<LieChar> {
    LieChar::new(ell, d.i.iter().map(|&v| Cyclotomic::from_int(ell, v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use crate::scalars::parse_cyclotomic;

    fn q(ell: u32, s: &str) -> Cyclotomic {
        parse_cyclotomic(s, ell).unwrap()
    }

    #[test]
    fn chi_c_at_zero() {
        for ell in 2..6 {
            let ch = chi_c(ell, &vec![Cyclotomic::zero(ell); ell as usize - 1]).unwrap();
            assert_eq!(
                ch.lambda[0],
                Cyclotomic::from_rational(ell, Rational::new(1 - ell as i64, ell as i64).unwrap())
            );
            for r in 1..ell as usize {
                assert_eq!(
                    ch.lambda[r],
                    Cyclotomic::from_rational(ell, Rational::new(1, ell as i64).unwrap())
                );
            }
        }
    }

    #[test]
    fn chi_c_ell_two() {
        let c1 = q(2, "3/7");
        let ch = chi_c(2, std::slice::from_ref(&c1)).unwrap();
        let half = (&c1 + &Cyclotomic::one(2)).scale(&Rational::new(1, 2).unwrap());
        assert_eq!(ch.lambda, vec![-&half, half]);
    }

    #[test]
    fn chi_kc_examples() {
        let ch = chi_kc(2, &q(2, "1"), &[q(2, "0")]).unwrap();
        assert_eq!(ch.lambda, vec![q(2, "1/2"), q(2, "1/2")]);
        assert_eq!(char_to_params(&ch), (q(2, "1"), vec![q(2, "0")]));
        assert_eq!(ch.at_identity(3), q(2, "3"));
    }

    #[test]
    fn random_round_trips_and_sums() {
        let mut rng = sample::rng(5);
        for ell in 2..=5u32 {
            for _ in 0..50 {
                let k = sample::cyclotomic(&mut rng, ell, 9);
                let c: Vec<_> = (1..ell).map(|_| sample::cyclotomic(&mut rng, ell, 9)).collect();
                assert!(chi_c(ell, &c).unwrap().descends_to_pg());
                let t = twist_exponents(ell, &c).unwrap();
                assert!(t.r.iter().fold(Cyclotomic::zero(ell), |a, b| &a + b).is_zero());
                let ch = chi_kc(ell, &k, &c).unwrap();
                assert_eq!(char_to_params(&ch), (k.clone(), c.clone()));
                for i in 0..ell as usize {
                    let via_char = char_to_params(&ch.add(&LieChar::basis(ell, i)).unwrap());
                    assert_eq!(shift_params(ell, &k, &c, i).unwrap(), via_char);
                }
            }
        }
    }

    #[test]
    fn shift_examples() {
        let c = vec![q(3, "1/2"), q(3, "eta")];
        let k = q(3, "2");
        assert_eq!(shift_params(3, &k, &c, 0).unwrap(), (q(3, "3"), c.clone()));
        let (k1, c1) = shift_params(3, &k, &c, 1).unwrap();
        assert_eq!(k1, q(3, "3"));
        assert_eq!(
            c1,
            vec![
                &(&c[0] + &q(3, "1")) - &q(3, "eta^2"),
                &(&c[1] + &q(3, "1")) - &q(3, "eta")
            ]
        );
        let (_, c2) = shift_params(2, &q(2, "0"), &[q(2, "5")], 1).unwrap();
        assert_eq!(c2, vec![q(2, "7")]);
    }

    #[test]
    fn all_shifts_add_ell() {
        let ell = 4;
        let mut k = q(ell, "1/3");
        let c0 = vec![q(ell, "eta"), q(ell, "0"), q(ell, "-2")];
        let mut c = c0.clone();
        for i in 0..ell as usize {
            (k, c) = shift_params(ell, &k, &c, i).unwrap();
        }
        assert_eq!(k, q(ell, "13/3"));
        for (a, b) in c.iter().zip(&c0) {
            assert_eq!(a, &(b + &q(ell, "4")));
        }
    }

    #[test]
    fn twist_examples() {
        let t = twist_exponents(2, &[q(2, "0")]).unwrap();
        assert_eq!(t.sigma, q(2, "1/4"));
        assert_eq!(t.r, vec![q(2, "-1/4"), q(2, "1/4")]);
        let t = twist_exponents(3, &[q(3, "0"), q(3, "0")]).unwrap();
        assert_eq!(t.sigma, q(3, "1/3"));
        assert_eq!(t.r, vec![q(3, "-1/3"), q(3, "0"), q(3, "1/3")]);
    }

    #[test]
    fn det_characters() {
        let e1 = det_char_to_liechar(3, &DetCharacter { i: vec![0, 1, 0] }).unwrap();
        assert_eq!(e1, LieChar::basis(3, 1));
        assert_eq!(
            det_char_to_liechar(3, &DetCharacter { i: vec![0, 0, 0] }).unwrap(),
            LieChar::zero(3)
        );
        let full = det_char_to_liechar(3, &DetCharacter { i: vec![1, 1, 1] }).unwrap();
        assert!(!full.descends_to_pg());
        assert_eq!(full.total(), q(3, "3"));
    }
}
