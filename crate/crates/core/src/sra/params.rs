use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::Cyclotomic;

/// Parameters (n, ℓ, k, c) of H_{k,c}. `c[m-1]` is the value c_m on the class of (σ^m)_i.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct SraParams {
    pub n: usize,
    pub ell: u32,
    pub k: Cyclotomic,
    pub c: Vec<Cyclotomic>,
}

impl SraParams {
    pub fn new(n: usize, ell: u32, k: Cyclotomic, c: Vec<Cyclotomic>) -> Result<Self> {
        if n < 1 || ell < 2 {
            return Err(Error::InvalidParams(format!(
                "need n >= 1 and l >= 2, got n={n}, l={ell}"
            )));
        }
        if c.len() != ell as usize - 1 {
            return Err(Error::InvalidParams(format!(
                "expected {} values of c for l={ell}, got {}",
                ell - 1,
                c.len()
            )));
        }
        if k.ell() != ell || c.iter().any(|v| v.ell() != ell) {
            return Err(Error::InvalidParams(
                "parameters live in a different cyclotomic field".into(),
            ));
        }
        Ok(SraParams { n, ell, k, c })
    }

    /// k = 0, c = 0: the Weyl algebra of V smashed with Γ_n.
    pub fn undeformed(n: usize, ell: u32) -> Self {
        let z = Cyclotomic::zero(ell);
        Self::new(n, ell, z.clone(), vec![z; ell as usize - 1]).expect("valid shape")
    }

    /// c_m for 1 <= m <= ℓ−1.
    pub fn c_m(&self, m: u32) -> &Cyclotomic {
        &self.c[m as usize - 1]
    }
}

impl fmt::Debug for SraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.c.iter().map(ToString::to_string).collect();
        write!(
            f,
            "SraParams(n={}, l={}, k={}, c=[{}])",
            self.n,
            self.ell,
            self.k,
            c.join(", ")
        )
    }
}
