use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalars::Cyclotomic;
use crate::wreath::WreathElement;

/// Rational functions on h^reg whose denominators are products of powers of the
/// atoms x_i and D_ij = x_i^ℓ − x_j^ℓ (i < j).
///
/// The atoms are squarefree and pairwise coprime, so the representation is canonical once
/// no atom in the denominator divides the numerator; every constructor enforces that.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    /// Exponent per atom: first x_0..x_{n−1}, then D_ij for i < j in lexicographic order.
    den: Vec<u32>,
}

/// Position of D_ij (i < j) among the atoms.
fn pair_atom(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    n + i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn atom_count(n: usize) -> usize {
    n + n * (n - 1) / 2
}

/// Decodes an atom index into Err(i) for x_i or Ok((i, j)) for D_ij.
fn decode(n: usize, a: usize) -> std::result::Result<(usize, usize), usize> {
    if a < n {
        return Err(a);
    }
    let mut k = a - n;
    for i in 0..n {
        let row = n - i - 1;
        if k < row {
            return Ok((i, i + 1 + k));
        }
        k -= row;
    }
    unreachable!("atom index out of range")
}

impl RatFunc {
    pub fn from_poly(p: Poly) -> Self {
        let den = vec![0; atom_count(p.nvars())];
        RatFunc { num: p, den }
    }

    pub fn zero(n: usize, ell: u32) -> Self {
        Self::from_poly(Poly::zero(n, ell))
    }

    pub fn one(n: usize, ell: u32) -> Self {
        Self::from_poly(Poly::one(n, ell))
    }

    pub fn constant(n: usize, c: Cyclotomic) -> Self {
        Self::from_poly(Poly::constant(n, c))
    }

    pub fn var(n: usize, ell: u32, i: usize) -> Self {
        Self::from_poly(Poly::var(n, ell, i))
    }

    /// 1 / x_i
    pub fn inv_var(n: usize, ell: u32, i: usize) -> Self {
        let mut r = Self::one(n, ell);
        r.den[i] = 1;
        r
    }

    /// 1 / (x_i^ℓ − x_j^ℓ) for i ≠ j.
    pub fn inv_binomial(n: usize, ell: u32, i: usize, j: usize) -> Result<Self> {
        if i == j || i >= n || j >= n {
            return Err(Error::InvalidParams(format!("no atom x_{i}^l - x_{j}^l")));
        }
        let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let mut r = Self::constant(n, Cyclotomic::from_int(ell, sign));
        r.den[pair_atom(n, a, b)] = 1;
        Ok(r)
    }

    /// num / Π atoms^den, normalised.
    pub fn new(num: Poly, den: Vec<u32>) -> Result<Self> {
        if den.len() != atom_count(num.nvars()) {
            return Err(Error::InvalidParams(
                "denominator exponent vector has wrong length".into(),
            ));
        }
        Ok(RatFunc { num, den }.normalized())
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn ell(&self) -> u32 {
        self.num.ell()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator_exponents(&self) -> &[u32] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.iter().all(|&e| e == 0)
    }

    fn atom_poly(&self, a: usize) -> Poly {
        let (n, ell) = (self.nvars(), self.ell());
        match decode(n, a) {
            Err(i) => Poly::var(n, ell, i),
            Ok((i, j)) => Poly::var(n, ell, i).pow(ell).sub(&Poly::var(n, ell, j).pow(ell)),
        }
    }

    fn divide_atom(&self, p: &Poly, a: usize) -> Option<Poly> {
        let n = self.nvars();
        match decode(n, a) {
            Err(i) => (p.var_valuation(i) > 0).then(|| p.div_var(i, 1)),
            Ok((i, j)) => p.div_binomial(i, j, self.ell() as u16),
        }
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den.iter_mut().for_each(|e| *e = 0);
            return self;
        }
        for a in 0..self.den.len() {
            while self.den[a] > 0 {
                match self.divide_atom(&self.num, a) {
                    Some(q) => {
                        self.num = q;
                        self.den[a] -= 1;
                    }
                    None => break,
                }
            }
        }
        self
    }

    /// Brings both to the common denominator max(den); returns the scaled numerators.
    fn common(&self, other: &Self) -> (Poly, Poly, Vec<u32>) {
        let den: Vec<u32> = self.den.iter().zip(&other.den).map(|(&a, &b)| a.max(b)).collect();
        let lift = |r: &Self| {
            let mut p = r.num.clone();
            for (a, (&have, &want)) in r.den.iter().zip(&den).enumerate() {
                for _ in have..want {
                    p = p.mul(&r.atom_poly(a));
                }
            }
            p
        };
        (lift(self), lift(other), den)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b, den) = self.common(other);
        RatFunc { num: a.add(&b), den }.normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b, den) = self.common(other);
        RatFunc { num: a.sub(&b), den }.normalized()
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        RatFunc {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
        .normalized()
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc {
            num: self.num.mul(&other.num),
            den: self.den.iter().zip(&other.den).map(|(a, b)| a + b).collect(),
        }
        .normalized()
    }

    /// ∂/∂x_k.
    pub fn derivative(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        // d(N/P) = (N′ Q − N Σ_a e_a a′ Q/a) / (P Q), Q = product of the atoms present
        let present: Vec<usize> = (0..self.den.len()).filter(|&a| self.den[a] > 0).collect();
        let atoms: Vec<Poly> = present.iter().map(|&a| self.atom_poly(a)).collect();
        let (n, ell) = (self.nvars(), self.ell());
        let q = atoms.iter().fold(Poly::one(n, ell), |acc, p| acc.mul(p));
        let mut num = self.num.derivative(k).mul(&q);
        for (idx, &a) in present.iter().enumerate() {
            let da = atoms[idx].derivative(k);
            if da.is_zero() {
                continue;
            }
            let others = atoms
                .iter()
                .enumerate()
                .filter(|&(o, _)| o != idx)
                .fold(Poly::one(n, ell), |acc, (_, p)| acc.mul(p));
            let e = Cyclotomic::from_int(ell, self.den[a] as i64);
            num = num.sub(&self.num.mul(&da).mul(&others).scale(&e));
        }
        let mut den = self.den.clone();
        for &a in &present {
            den[a] += 1;
        }
        RatFunc { num, den }.normalized()
    }

    /// Pullback along x_i ↦ η^{a_i} x_{π(i)}.
    pub fn act(&self, w: &WreathElement) -> Self {
        let (n, ell) = (self.nvars(), self.ell());
        let scalars: Vec<Cyclotomic> = w.exps().iter().map(|&e| Cyclotomic::eta_pow(ell, e as i64)).collect();
        let num = self.num.substitute_monomial(w.perm(), &scalars);
        // x_i ↦ η^{a_i} x_{π i} and D_ij ↦ ±D_{π i, π j}; collect the scalar and invert it
        let mut den = vec![0u32; self.den.len()];
        let mut factor = Cyclotomic::one(ell);
        for (a, &e) in self.den.iter().enumerate() {
            if e == 0 {
                continue;
            }
            match decode(n, a) {
                Err(i) => {
                    den[w.perm()[i]] += e;
                    factor = &factor * &scalars[i].pow(e as i64).expect("unit");
                }
                Ok((i, j)) => {
                    let (pi, pj) = (w.perm()[i], w.perm()[j]);
                    let (lo, hi) = if pi < pj { (pi, pj) } else { (pj, pi) };
                    den[pair_atom(n, lo, hi)] += e;
                    if pi > pj && e % 2 == 1 {
                        factor = -&factor;
                    }
                }
            }
        }
        let inv = factor.inv().expect("product of units");
        RatFunc {
            num: num.scale(&inv),
            den,
        }
        .normalized()
    }

    pub fn evaluate(&self, point: &[Cyclotomic]) -> Result<Cyclotomic> {
        let mut d = Cyclotomic::one(self.ell());
        for (a, &e) in self.den.iter().enumerate() {
            if e > 0 {
                d = &d * &self.atom_poly(a).evaluate(point).pow(e as i64)?;
            }
        }
        Ok(&self.num.evaluate(point) * &d.inv()?)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let n = self.nvars();
        let mut parts = Vec::new();
        for (a, &e) in self.den.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let base = match decode(n, a) {
                Err(i) => format!("x{}", i + 1),
                Ok((i, j)) => format!("(x{}^{l} - x{}^{l})", i + 1, j + 1, l = self.ell()),
            };
            parts.push(if e == 1 { base } else { format!("{base}^{e}") });
        }
        write!(f, "({})/({})", self.num, parts.join("*"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
