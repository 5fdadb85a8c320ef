//! Sparse commutative polynomials over Q(η) in a fixed number of variables.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::Cyclotomic;

/// Exponent vector.
pub type Monomial = Vec<u16>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    ell: u32,
    terms: BTreeMap<Monomial, Cyclotomic>,
}

impl Poly {
    pub fn zero(nvars: usize, ell: u32) -> Self {
        Poly {
            nvars,
            ell,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Cyclotomic) -> Self {
        let mut p = Self::zero(nvars, c.ell());
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize, ell: u32) -> Self {
        Self::constant(nvars, Cyclotomic::one(ell))
    }

    pub fn var(nvars: usize, ell: u32, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Cyclotomic::one(ell))
    }

    pub fn monomial(exps: Monomial, c: Cyclotomic) -> Self {
        let mut p = Self::zero(exps.len(), c.ell());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Cyclotomic> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Cyclotomic {
        self.terms.get(m).cloned().unwrap_or_else(|| Cyclotomic::zero(self.ell))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| deg(m)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| deg(m));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Constant term value if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Cyclotomic> {
        match self.terms.len() {
            0 => Some(Cyclotomic::zero(self.ell)),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            ell: self.ell,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Cyclotomic) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars, self.ell);
        }
        Poly {
            nvars: self.nvars,
            ell: self.ell,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars, self.ell);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars, self.ell);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by the monomial `m` (coefficient 1).
    pub fn shift(&self, m: &[u16]) -> Poly {
        Poly {
            nvars: self.nvars,
            ell: self.ell,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars, self.ell);
        for (m, c) in &self.terms {
            if m[i] == 0 {
                continue;
            }
            let mut k = m.clone();
            k[i] -= 1;
            out.add_term(k, &c.scale(&crate::scalars::Rational::from_int(m[i] as i64)));
        }
        out
    }

    /// Substitution x_i ↦ scalars[i] · x_{targets[i]}.
    pub fn substitute_monomial(&self, targets: &[usize], scalars: &[Cyclotomic]) -> Poly {
        let mut out = Poly::zero(self.nvars, self.ell);
        for (m, c) in &self.terms {
            let mut k = vec![0u16; self.nvars];
            let mut coef = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                k[targets[i]] += e;
                coef = &coef * &scalars[i].pow(e as i64).expect("nonzero scalar");
            }
            out.add_term(k, &coef);
        }
        out
    }

    pub fn evaluate(&self, point: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.ell);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = &t * &point[i].pow(e as i64).expect("nonnegative power");
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Largest k with x_i^k dividing every term.
    pub fn var_valuation(&self, i: usize) -> u16 {
        self.terms.keys().map(|m| m[i]).min().unwrap_or(0)
    }

    /// Divides by x_i^k; caller guarantees divisibility.
    pub fn div_var(&self, i: usize, k: u16) -> Poly {
        Poly {
            nvars: self.nvars,
            ell: self.ell,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m[i] -= k;
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Exact division by x_i^ℓ − x_j^ℓ; `None` if it does not divide.
    pub fn div_binomial(&self, i: usize, j: usize, ell: u16) -> Option<Poly> {
        // x_i^ℓ − x_j^ℓ is monic in x_i: reduce every x_i^ℓ to x_j^ℓ and track the quotient
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars, self.ell);
        while let Some((m, c)) = rem.terms.iter().rev().find(|(m, _)| m[i] >= ell) {
            let (m, c) = (m.clone(), c.clone());
            let mut q = m.clone();
            q[i] -= ell;
            quot.add_term(q.clone(), &c);
            rem.add_term(m, &-&c);
            let mut r = q;
            r[j] += ell;
            rem.add_term(r, &c);
        }
        rem.is_zero().then_some(quot)
    }
}

/// All exponent vectors in N^nvars of total degree `d`, in decreasing lexicographic order.
pub fn monomials_of_degree(nvars: usize, d: usize) -> Vec<Monomial> {
    if nvars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(nvars - 1, d - first) {
            rest.insert(0, first as u16);
            out.push(rest);
        }
    }
    out
}

/// Number of monomials of degree `d` in `nvars` variables, C(nvars + d − 1, d).
pub fn monomial_count(nvars: usize, d: usize) -> u128 {
    if nvars == 0 {
        return u128::from(d == 0);
    }
    let mut c: u128 = 1;
    for k in 1..=d as u128 {
        c = c * (nvars as u128 - 1 + k) / k;
    }
    c
}

fn deg(m: &[u16]) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            let mono = mono.join("*");
            // rational coefficients print bare with their sign pulled into the joiner
            let (negative, coeff) = match c.as_rational() {
                Some(r) if r.is_negative() => (true, r.abs().to_string()),
                Some(r) => (false, r.to_string()),
                None => (false, format!("({c})")),
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            first = false;
            match (mono.is_empty(), coeff.as_str()) {
                (true, _) => write!(f, "{coeff}")?,
                (false, "1") => write!(f, "{mono}")?,
                (false, _) => write!(f, "{coeff}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_derivative() {
        let x = Poly::var(2, 3, 0);
        let y = Poly::var(2, 3, 1);
        let p = x.mul(&x).add(&x.mul(&y));
        assert_eq!(p.degree(), Some(2));
        assert!(p.is_homogeneous());
        let dp = p.derivative(0);
        assert_eq!(dp, x.scale(&Cyclotomic::from_int(3, 2)).add(&y));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn binomial_division() {
        let x = Poly::var(2, 3, 0);
        let y = Poly::var(2, 3, 1);
        let d = x.pow(3).sub(&y.pow(3));
        let f = x.mul(&y).add(&Poly::one(2, 3));
        let q = d.mul(&f).div_binomial(0, 1, 3).unwrap();
        assert_eq!(q, f);
        // x − y divides x³ − y³ but not conversely
        assert!(x.sub(&y).div_binomial(0, 1, 3).is_none());
    }

    #[test]
    fn substitution_and_evaluation() {
        let x = Poly::var(2, 4, 0);
        let y = Poly::var(2, 4, 1);
        let p = x.mul(&y.pow(2));
        let eta = Cyclotomic::eta_pow(4, 1);
        let s = p.substitute_monomial(&[1, 0], &[eta.clone(), Cyclotomic::one(4)]);
        assert_eq!(s, y.mul(&x.pow(2)).scale(&eta));
        let v = p.evaluate(&[Cyclotomic::from_int(4, 2), eta.clone()]);
        assert_eq!(
            v,
            Cyclotomic::from_int(4, 2)
                .checked_mul(&Cyclotomic::eta_pow(4, 2))
                .unwrap()
        );
    }
}
