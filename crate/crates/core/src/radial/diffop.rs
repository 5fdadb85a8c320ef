use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use super::RatFunc;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::sample;
use crate::scalars::{Cyclotomic, Rational};
use crate::wreath::WreathElement;

/// Exponent vector of ∂ = (∂_1, …, ∂_n).
pub type DiffDegree = Vec<u16>;

/// Differential operators Σ_α f_α ∂^α on h^reg, coefficients written on the left.
#[derive(Clone, PartialEq, Eq)]
pub struct DiffOp {
    n: usize,
    ell: u32,
    terms: BTreeMap<DiffDegree, RatFunc>,
}

fn binomial(n: u16, k: u16) -> i64 {
    (0..k as i64).fold(1i64, |acc, i| acc * (n as i64 - i) / (i + 1))
}

impl DiffOp {
    pub fn zero(n: usize, ell: u32) -> Self {
        DiffOp {
            n,
            ell,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize, ell: u32) -> Self {
        Self::multiplication(RatFunc::one(n, ell))
    }

    /// The multiplication operator f.
    pub fn multiplication(f: RatFunc) -> Self {
        Self::term(f, vec![0; 0])
    }

    /// f ∂^α (an empty α means order zero).
    pub fn term(f: RatFunc, alpha: DiffDegree) -> Self {
        let (n, ell) = (f.nvars(), f.ell());
        let alpha = if alpha.is_empty() { vec![0; n] } else { alpha };
        let mut op = Self::zero(n, ell);
        op.add_term(alpha, f);
        op
    }

    pub fn x(n: usize, ell: u32, i: usize) -> Self {
        Self::multiplication(RatFunc::var(n, ell, i))
    }

    pub fn d(n: usize, ell: u32, i: usize) -> Self {
        let mut a = vec![0; n];
        a[i] = 1;
        Self::term(RatFunc::one(n, ell), a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn terms(&self) -> &BTreeMap<DiffDegree, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, alpha: &[u16]) -> RatFunc {
        self.terms
            .get(alpha)
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(self.n, self.ell))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest |α| present; `None` for zero.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().map(|a| a.iter().map(|&e| e as usize).sum()).max()
    }

    pub fn is_multiplication(&self) -> bool {
        self.order().unwrap_or(0) == 0
    }

    fn add_term(&mut self, alpha: DiffDegree, f: RatFunc) {
        if f.is_zero() {
            return;
        }
        match self.terms.remove(&alpha) {
            Some(g) => {
                let s = g.add(&f);
                if !s.is_zero() {
                    self.terms.insert(alpha, s);
                }
            }
            None => {
                self.terms.insert(alpha, f);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if (self.n, self.ell) != (other.n, other.ell) {
            return Err(Error::InvalidParams(format!(
                "operators on different spaces: (n={}, l={}) vs (n={}, l={})",
                self.n, self.ell, other.n, other.ell
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (a, f) in &other.terms {
            out.add_term(a.clone(), f.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Cyclotomic::from_int(self.ell, -1)))
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.n, self.ell);
        for (a, f) in &self.terms {
            out.add_term(a.clone(), f.scale(s));
        }
        out
    }

    /// ∂^γ applied to a coefficient.
    fn apply_partials(f: &RatFunc, gamma: &[u16]) -> RatFunc {
        let mut g = f.clone();
        for (k, &e) in gamma.iter().enumerate() {
            for _ in 0..e {
                g = g.derivative(k);
            }
        }
        g
    }

    /// A ∘ B via f ∂^α ∘ g ∂^β = f Σ_{γ ≤ α} C(α, γ) ∂^γ(g) ∂^{α − γ + β}.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.n, self.ell);
        for (alpha, f) in &self.terms {
            for gamma in sub_degrees(alpha) {
                let c: i64 = alpha.iter().zip(&gamma).map(|(&a, &g)| binomial(a, g)).product();
                let c = Cyclotomic::from_int(self.ell, c);
                for (beta, g) in &other.terms {
                    let dg = Self::apply_partials(g, &gamma);
                    if dg.is_zero() {
                        continue;
                    }
                    let deg: DiffDegree = (0..self.n).map(|i| alpha[i] - gamma[i] + beta[i]).collect();
                    out.add_term(deg, f.mul(&dg).scale(&c));
                }
            }
        }
        Ok(out)
    }

    /// Applies the operator to a function.
    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        self.terms.iter().fold(RatFunc::zero(self.n, self.ell), |acc, (a, c)| {
            acc.add(&c.mul(&Self::apply_partials(f, a)))
        })
    }
}

/// All γ with γ ≤ α componentwise.
fn sub_degrees(alpha: &[u16]) -> Vec<DiffDegree> {
    let mut out = vec![vec![]];
    for &a in alpha {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u16>| {
                (0..=a).map(move |g| {
                    let mut p = prefix.clone();
                    p.push(g);
                    p
                })
            })
            .collect();
    }
    out
}

pub fn op_compose(a: &DiffOp, b: &DiffOp) -> Result<DiffOp> {
    a.compose(b)
}

/// The automorphism x_i ↦ η^{a_i} x_{π(i)}, ∂_i ↦ η^{−a_i} ∂_{π(i)} induced by w.
pub fn gamma_act_op(w: &WreathElement, a: &DiffOp) -> DiffOp {
    let mut out = DiffOp::zero(a.n, a.ell);
    for (alpha, f) in &a.terms {
        let mut image = vec![0u16; a.n];
        let mut e = 0i64;
        for (i, &k) in alpha.iter().enumerate() {
            image[w.perm()[i]] = k;
            e -= k as i64 * w.exps()[i] as i64;
        }
        out.add_term(image, f.act(w).scale(&Cyclotomic::eta_pow(a.ell, e)));
    }
    out
}

/// Generators s_{i,i+1} and γ_1 of Γ_n.
pub fn gamma_generators(n: usize, ell: u32) -> Vec<WreathElement> {
    let mut g = vec![WreathElement::gamma(n, ell, 0, 1)];
    for i in 0..n.saturating_sub(1) {
        g.push(WreathElement::transposition(n, ell, i, i + 1));
    }
    g
}

pub fn is_gamma_invariant(a: &DiffOp) -> bool {
    gamma_generators(a.n, a.ell).iter().all(|w| &gamma_act_op(w, a) == a)
}

/// Average of w·A over Γ_n.
pub fn reynolds(a: &DiffOp) -> DiffOp {
    let group = crate::wreath::all_elements(a.n, a.ell);
    let inv = Cyclotomic::from_rational(a.ell, Rational::new(1, group.len() as i64).expect("nonempty"));
    group
        .iter()
        .fold(DiffOp::zero(a.n, a.ell), |acc, w| {
            acc.add(&gamma_act_op(w, a)).expect("same space")
        })
        .scale(&inv)
}

/// A random operator of order ≤ `max_order` whose coefficients are polynomials of degree
/// ≤ `coeff_degree`, sometimes divided by a single atom.
pub fn random_op<R: Rng>(rng: &mut R, n: usize, ell: u32, max_order: usize, coeff_degree: usize) -> DiffOp {
    let mut op = DiffOp::zero(n, ell);
    let nterms = rng.gen_range(1..=3);
    for _ in 0..nterms {
        let mut alpha = vec![0u16; n];
        for _ in 0..rng.gen_range(0..=max_order) {
            alpha[rng.gen_range(0..n)] += 1;
        }
        let mut p = Poly::zero(n, ell);
        for _ in 0..rng.gen_range(1..=3) {
            let mut m = vec![0u16; n];
            for _ in 0..rng.gen_range(0..=coeff_degree) {
                m[rng.gen_range(0..n)] += 1;
            }
            p = p.add(&Poly::monomial(m, sample::rational_in(rng, ell, 4)));
        }
        let mut f = RatFunc::from_poly(p);
        match rng.gen_range(0..4) {
            0 => f = f.mul(&RatFunc::inv_var(n, ell, rng.gen_range(0..n))),
            1 if n >= 2 => {
                let i = rng.gen_range(0..n);
                let j = (i + 1 + rng.gen_range(0..n - 1)) % n;
                f = f.mul(&RatFunc::inv_binomial(n, ell, i, j).expect("distinct indices"));
            }
            _ => {}
        }
        op.add_term(alpha, f);
    }
    op
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (alpha, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = c.to_string();
            let bare = alpha.iter().any(|&e| e > 0) && coeff == "1";
            if !bare {
                write!(f, "({coeff})")?;
            }
            for (i, &e) in alpha.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "{}∂{}", if bare { "" } else { " " }, i + 1)?,
                    _ => write!(f, "{}∂{}^{e}", if bare { "" } else { " " }, i + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leibniz_examples() {
        let (n, ell) = (1, 2);
        let d = DiffOp::d(n, ell, 0);
        let x = DiffOp::x(n, ell, 0);
        let want = x.compose(&d).unwrap().add(&DiffOp::identity(n, ell)).unwrap();
        assert_eq!(d.compose(&x).unwrap(), want);
        // (1/x) ∂ ∘ x² ∂ = x ∂² + 2 ∂
        let a = DiffOp::term(RatFunc::inv_var(n, ell, 0), vec![1]);
        let x2 = RatFunc::var(n, ell, 0).mul(&RatFunc::var(n, ell, 0));
        let b = DiffOp::term(x2, vec![1]);
        let want = DiffOp::term(RatFunc::var(n, ell, 0), vec![2])
            .add(&DiffOp::d(n, ell, 0).scale(&Cyclotomic::from_int(ell, 2)))
            .unwrap();
        assert_eq!(a.compose(&b).unwrap(), want);
        assert_eq!(a.compose(&DiffOp::identity(n, ell)).unwrap(), a);
    }

    #[test]
    fn gamma_action_examples() {
        let (n, ell) = (2, 3);
        let g1 = WreathElement::gamma(n, ell, 0, 1);
        let d1 = DiffOp::d(n, ell, 0);
        assert_eq!(gamma_act_op(&g1, &d1), d1.scale(&Cyclotomic::eta_pow(ell, -1)));
        let s = WreathElement::transposition(n, ell, 0, 1);
        let x1d2 = DiffOp::x(n, ell, 0).compose(&DiffOp::d(n, ell, 1)).unwrap();
        let x2d1 = DiffOp::x(n, ell, 1).compose(&DiffOp::d(n, ell, 0)).unwrap();
        assert_eq!(gamma_act_op(&s, &x1d2), x2d1);
        assert_eq!(gamma_act_op(&WreathElement::identity(n, ell), &x1d2), x1d2);
    }

    #[test]
    fn invariance_examples() {
        let (n, ell) = (3, 3);
        let euler = (0..n).fold(DiffOp::zero(n, ell), |acc, i| {
            acc.add(&DiffOp::x(n, ell, i).compose(&DiffOp::d(n, ell, i)).unwrap())
                .unwrap()
        });
        assert!(is_gamma_invariant(&euler));
        let power_sum = (0..n).fold(DiffOp::zero(n, ell), |acc, i| {
            let xi = RatFunc::var(n, ell, i);
            let p = (1..ell).fold(xi.clone(), |a, _| a.mul(&xi));
            acc.add(&DiffOp::multiplication(p)).unwrap()
        });
        assert!(is_gamma_invariant(&power_sum));
        assert!(!is_gamma_invariant(&DiffOp::x(n, ell, 0)));
    }

    #[test]
    fn compose_is_associative_and_equivariant() {
        let mut rng = sample::rng(9);
        let (n, ell) = (2, 2);
        for _ in 0..10 {
            let a = random_op(&mut rng, n, ell, 2, 2);
            let b = random_op(&mut rng, n, ell, 2, 2);
            let c = random_op(&mut rng, n, ell, 2, 2);
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            assert_eq!(left, right);
            let w = WreathElement::reflection_s(n, ell, 0, 1, 1);
            let ab = gamma_act_op(&w, &a.compose(&b).unwrap());
            assert_eq!(ab, gamma_act_op(&w, &a).compose(&gamma_act_op(&w, &b)).unwrap());
        }
    }

    #[test]
    fn reynolds_is_invariant() {
        let mut rng = sample::rng(1);
        let a = random_op(&mut rng, 2, 3, 1, 2);
        assert!(is_gamma_invariant(&reynolds(&a)));
    }

    #[test]
    fn apply_matches_composition() {
        let (n, ell) = (2, 2);
        let mut rng = sample::rng(4);
        let a = random_op(&mut rng, n, ell, 2, 1);
        let b = random_op(&mut rng, n, ell, 1, 1);
        let f = RatFunc::inv_binomial(n, ell, 0, 1)
            .unwrap()
            .add(&RatFunc::var(n, ell, 1));
        assert_eq!(a.compose(&b).unwrap().apply(&f), a.apply(&b.apply(&f)));
    }
}
