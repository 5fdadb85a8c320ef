use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Field, Rational};
use crate::error::{Error, Result};

/// Per-order data: Φ_ℓ and the reductions of t^k modulo Φ_ℓ.
#[derive(Debug)]
struct CycloCtx {
    ell: u32,
    degree: usize,
    /// Φ_ℓ coefficients, lowest degree first; monic of length degree+1.
    phi: Vec<i64>,
    /// `reduce[k]` = t^k mod Φ_ℓ for 0 <= k < 2·degree (and at least ℓ).
    reduce: Vec<Vec<i64>>,
}

pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

fn int_poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den monic
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    if rem.len() < den.len() {
        return vec![0];
    }
    let mut quot = vec![0i64; rem.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

fn cyclotomic_poly(ell: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&ell) {
        return p.clone();
    }
    let mut p = vec![0i64; ell as usize + 1];
    p[0] = -1;
    p[ell as usize] = 1;
    for d in 1..ell {
        if ell.is_multiple_of(d) {
            let q = cyclotomic_poly(d, memo);
            p = int_poly_div_exact(&p, &q);
        }
    }
    memo.insert(ell, p.clone());
    p
}

impl CycloCtx {
    fn build(ell: u32) -> Self {
        let phi = cyclotomic_poly(ell, &mut HashMap::new());
        let degree = phi.len() - 1;
        let top = (2 * degree).max(ell as usize + 1);
        let mut reduce: Vec<Vec<i64>> = Vec::with_capacity(top);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..top {
            reduce.push(cur.clone());
            // multiply by t, then fold the overflow coefficient using t^d = -Σ phi_j t^j
            let carry = cur[degree - 1];
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if carry != 0 {
                for j in 0..degree {
                    cur[j] -= carry * phi[j];
                }
            }
        }
        CycloCtx {
            ell,
            degree,
            phi,
            reduce,
        }
    }
}

fn ctx(ell: u32) -> Arc<CycloCtx> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloCtx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic context cache poisoned");
    guard
        .entry(ell)
        .or_insert_with(|| Arc::new(CycloCtx::build(ell)))
        .clone()
}

/// Element of Q(η) with η = exp(2πi/ℓ), stored in the power basis 1, η, …, η^{φ(ℓ)−1}
/// of Q[t]/Φ_ℓ(t).
#[derive(Clone)]
pub struct Cyclotomic {
    ctx: Arc<CycloCtx>,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.ell == other.ctx.ell && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.ell.hash(state);
        self.coeffs.hash(state);
    }
}

impl Cyclotomic {
    pub fn new(ell: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if ell < 1 {
            return Err(Error::InvalidParams("cyclotomic order must be >= 1".into()));
        }
        let ctx = ctx(ell);
        if coeffs.len() != ctx.degree {
            return Err(Error::InvalidParams(format!(
                "expected {} coordinates for l={ell}, got {}",
                ctx.degree,
                coeffs.len()
            )));
        }
        Ok(Cyclotomic { ctx, coeffs })
    }

    pub fn zero(ell: u32) -> Self {
        let ctx = ctx(ell);
        let coeffs = vec![Rational::zero(); ctx.degree];
        Cyclotomic { ctx, coeffs }
    }

    pub fn one(ell: u32) -> Self {
        Self::from_rational(ell, Rational::one())
    }

    pub fn from_rational(ell: u32, r: Rational) -> Self {
        let mut z = Self::zero(ell);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(ell: u32, v: i64) -> Self {
        Self::from_rational(ell, Rational::from_int(v))
    }

    /// η^m for any integer m.
    pub fn eta_pow(ell: u32, m: i64) -> Self {
        let ctx = ctx(ell);
        let k = m.rem_euclid(ell as i64) as usize;
        let coeffs = ctx.reduce[k].iter().map(|&c| Rational::from_int(c)).collect();
        Cyclotomic { ctx, coeffs }
    }

    pub fn ell(&self) -> u32 {
        self.ctx.ell
    }

    /// Coordinates in the power basis; length φ(ℓ).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficients of Φ_ℓ, lowest degree first.
    pub fn cyclotomic_polynomial(ell: u32) -> Vec<i64> {
        ctx(ell).phi.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// The rational value if this element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ctx.ell != other.ctx.ell {
            return Err(Error::OrderMismatch(self.ctx.ell, other.ctx.ell));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = self.ctx.degree;
        if d == 1 {
            return Ok(Cyclotomic {
                ctx: self.ctx.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            });
        }
        let mut full = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[i + j] += &(a * b);
                }
            }
        }
        let mut out: Vec<Rational> = full[..d].to_vec();
        for (k, c) in full.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(&self.ctx.reduce[k]) {
                if r != 0 {
                    *o += &(c * &Rational::from_int(r));
                }
            }
        }
        Ok(Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: out,
        })
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[t] modulo Φ_ℓ.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.ell(), r.inv()?));
        }
        let phi: Vec<Rational> = self.ctx.phi.iter().map(|&c| Rational::from_int(c)).collect();
        let a = trim(self.coeffs.clone());
        // invariant: s_i * a ≡ r_i (mod Φ)
        let (mut r0, mut r1) = (phi, a);
        let (mut s0, mut s1) = (vec![Rational::zero()], vec![Rational::one()]);
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is the gcd, a nonzero constant since Φ_ℓ is irreducible
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].inv()?;
        let d = self.ctx.degree;
        let (_, s) = poly_divrem(
            &s0,
            &self.ctx.phi.iter().map(|&c| Rational::from_int(c)).collect::<Vec<_>>(),
        );
        let mut coeffs = vec![Rational::zero(); d];
        for (o, v) in coeffs.iter_mut().zip(s.iter()) {
            *o = v * &c;
        }
        Ok(Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.ell());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(acc)
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(Rational::zero());
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let z = Rational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
    )
}

fn poly_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let den = trim(den.to_vec());
    let mut rem = trim(num.to_vec());
    let dd = den.len() - 1;
    let lead_inv = den[dd].inv().expect("division by zero polynomial");
    if rem.len() < den.len() {
        return (vec![Rational::zero()], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] * &lead_inv;
        if !c.is_zero() {
            for (j, d) in den.iter().enumerate() {
                let t = &c * d;
                rem[k + j] -= &t;
            }
        }
        quot[k] = c;
    }
    rem.truncate(dd.max(1));
    (trim(quot), trim(rem))
}

/// Which binary operation [`cyc_arith`] performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Mul,
}

pub fn cyc_arith(a: &Cyclotomic, b: &Cyclotomic, which: CycOp) -> Result<Cyclotomic> {
    match which {
        CycOp::Add => a.checked_add(b),
        CycOp::Mul => a.checked_mul(b),
    }
}

pub fn cyc_inv(a: &Cyclotomic) -> Result<Cyclotomic> {
    a.inv()
}

// Operators panic on mismatched ℓ; the `checked_*` methods return the error instead.
impl Add<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_add(rhs).expect("cyclotomic add")
    }
}

impl Sub<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_sub(rhs).expect("cyclotomic sub")
    }
}

impl Mul<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_mul(rhs).expect("cyclotomic mul")
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Field for Cyclotomic {
    fn zero_like(&self) -> Self {
        Cyclotomic::zero(self.ell())
    }
    fn one_like(&self) -> Self {
        Cyclotomic::one(self.ell())
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }
}

/// Renders as a sum `a + b*eta + c*eta^2 ...`, the same grammar accepted by
/// [`parse_cyclotomic`](super::parse_cyclotomic).
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag == Rational::one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "eta")?,
                _ => write!(f, "eta^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[l={}]({})", self.ell(), self)
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    ell: u32,
    coeffs: Vec<Rational>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr {
            ell: self.ell(),
            coeffs: self.coeffs.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = CyclotomicRepr::deserialize(deserializer)?;
        Cyclotomic::new(r.ell, r.coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(Cyclotomic::cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(Cyclotomic::cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(Cyclotomic::cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(Cyclotomic::cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(Cyclotomic::cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        for ell in 2..=12 {
            assert_eq!(
                Cyclotomic::zero(ell).coeffs().len(),
                euler_phi(ell),
                "degree of Φ_{ell}"
            );
        }
    }

    #[test]
    fn eta_squared_for_ell_four() {
        let eta = Cyclotomic::eta_pow(4, 1);
        let prod = cyc_arith(&eta, &eta, CycOp::Mul).unwrap();
        // t^2 = -1 mod t^2 + 1, and also equals η² directly
        assert_eq!(prod, Cyclotomic::eta_pow(4, 2));
        assert_eq!(prod, Cyclotomic::from_int(4, -1));
    }

    #[test]
    fn times_zero() {
        for ell in 2..=8 {
            let a = Cyclotomic::eta_pow(ell, 1) + Cyclotomic::from_rational(ell, q(3, 7));
            assert!((&a * &Cyclotomic::zero(ell)).is_zero());
        }
    }

    #[test]
    fn one_plus_eta_times_one_plus_eta_squared() {
        // (1+t)(1+t²) = 1 + t + t² + t³ ≡ 1 (mod t²+t+1, using t³ = 1)
        let a = Cyclotomic::one(3) + Cyclotomic::eta_pow(3, 1);
        let b = Cyclotomic::one(3) + Cyclotomic::eta_pow(3, 2);
        assert_eq!(&a * &b, Cyclotomic::one(3));
    }

    #[test]
    fn inverses() {
        let eta = Cyclotomic::eta_pow(5, 1);
        assert_eq!(cyc_inv(&eta).unwrap(), Cyclotomic::eta_pow(5, 4));
        assert_eq!(
            cyc_inv(&Cyclotomic::from_int(5, 2)).unwrap(),
            Cyclotomic::from_rational(5, q(1, 2))
        );
        let a = Cyclotomic::one(3) + Cyclotomic::eta_pow(3, 1);
        assert_eq!(cyc_inv(&a).unwrap(), Cyclotomic::one(3) + Cyclotomic::eta_pow(3, 2));
        assert_eq!(cyc_inv(&Cyclotomic::zero(7)), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_orders() {
        let a = Cyclotomic::one(3);
        let b = Cyclotomic::one(4);
        assert_eq!(cyc_arith(&a, &b, CycOp::Add), Err(Error::OrderMismatch(3, 4)));
        assert_eq!(cyc_arith(&a, &b, CycOp::Mul), Err(Error::OrderMismatch(3, 4)));
    }

    #[test]
    fn root_of_unity_sums_vanish() {
        for ell in 2..=8u32 {
            for m in 1..ell as i64 {
                let mut s = Cyclotomic::zero(ell);
                for r in 0..ell as i64 {
                    s = &s + &Cyclotomic::eta_pow(ell, m * r);
                }
                assert!(s.is_zero(), "Σ η^(mr) for l={ell}, m={m}");
            }
        }
    }

    #[test]
    fn display_and_json() {
        let z = Cyclotomic::new(5, vec![q(1, 2), Rational::zero(), q(-3, 1), Rational::one()]).unwrap();
        assert_eq!(z.to_string(), "1/2 - 3*eta^2 + eta^3");
        let js = serde_json::to_string(&z).unwrap();
        assert_eq!(js, r#"{"ell":5,"coeffs":["1/2","0/1","-3/1","1/1"]}"#);
        let back: Cyclotomic = serde_json::from_str(&js).unwrap();
        assert_eq!(back, z);
        assert!(serde_json::from_str::<Cyclotomic>(r#"{"ell":5,"coeffs":["1/2"]}"#).is_err());
        assert_eq!(Cyclotomic::zero(3).to_string(), "0");
    }
}
