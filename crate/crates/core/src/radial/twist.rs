use serde::Serialize;

use super::{DiffOp, RatFunc};
use crate::characters::twist_exponents;
use crate::error::{Error, Result};
use crate::scalars::Cyclotomic;

/// The twist δ_{k,c} = δ^{−k−1} δ_Γ^σ with δ = Π_{i<j}(x_i^ℓ − x_j^ℓ) and δ_Γ = Π x_i.
/// Only the exponents are stored; conjugation uses the single-valued logarithmic
/// derivatives, never δ_{k,c} itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaTwist {
    pub n: usize,
    pub ell: u32,
    /// −k − 1
    pub delta_exp: Cyclotomic,
    /// σ
    pub gamma_exp: Cyclotomic,
}

impl DeltaTwist {
    /// Exponents for parameters (k, c), with σ from the twist exponents of c.
    pub fn from_params(n: usize, ell: u32, k: &Cyclotomic, c: &[Cyclotomic]) -> Result<Self> {
        if k.ell() != ell {
            return Err(Error::OrderMismatch(ell, k.ell()));
        }
        let sigma = twist_exponents(ell, c)?.sigma;
        Ok(DeltaTwist {
            n,
            ell,
            delta_exp: &(-k) - &Cyclotomic::one(ell),
            gamma_exp: sigma,
        })
    }

    pub fn from_exponents(n: usize, ell: u32, delta_exp: Cyclotomic, gamma_exp: Cyclotomic) -> Self {
        DeltaTwist {
            n,
            ell,
            delta_exp,
            gamma_exp,
        }
    }

    /// The inverse twist δ_{k,c}^{-1}.
    pub fn negated(&self) -> Self {
        DeltaTwist {
            n: self.n,
            ell: self.ell,
            delta_exp: -&self.delta_exp,
            gamma_exp: -&self.gamma_exp,
        }
    }

    /// ∂_i log δ_{k,c} = (−k−1) ℓ x_i^{ℓ−1} Σ_{j≠i} 1/(x_i^ℓ − x_j^ℓ) + σ/x_i.
    pub fn log_derivative(&self, i: usize) -> RatFunc {
        let (n, ell) = (self.n, self.ell);
        let xi = RatFunc::var(n, ell, i);
        let lead = (1..ell.saturating_sub(1)).fold(xi.clone(), |acc, _| acc.mul(&xi));
        let sum = (0..n).filter(|&j| j != i).fold(RatFunc::zero(n, ell), |acc, j| {
            acc.add(&RatFunc::inv_binomial(n, ell, i, j).expect("i != j"))
        });
        let coef = self.delta_exp.scale(&crate::scalars::Rational::from_int(ell as i64));
        lead.mul(&sum)
            .scale(&coef)
            .add(&RatFunc::inv_var(n, ell, i).scale(&self.gamma_exp))
    }
}

/// D ↦ δ_{k,c}^{-1} ∘ D ∘ δ_{k,c}: fixes multiplication operators and sends
/// ∂_i ↦ ∂_i + ∂_i(log δ_{k,c}).
pub fn delta_conjugate(t: &DeltaTwist, a: &DiffOp) -> Result<DiffOp> {
    if (t.n, t.ell) != (a.n(), a.ell()) {
        return Err(Error::InvalidParams(
            "twist and operator live on different spaces".into(),
        ));
    }
    let (n, ell) = (t.n, t.ell);
    let shifted: Vec<DiffOp> = (0..n)
        .map(|i| {
            DiffOp::d(n, ell, i)
                .add(&DiffOp::multiplication(t.log_derivative(i)))
                .expect("same space")
        })
        .collect();
    let mut out = DiffOp::zero(n, ell);
    for (alpha, f) in a.terms() {
        let mut term = DiffOp::multiplication(f.clone());
        for (i, &e) in alpha.iter().enumerate() {
            for _ in 0..e {
                term = term.compose(&shifted[i])?;
            }
        }
        out = out.add(&term)?;
    }
    Ok(out)
}
