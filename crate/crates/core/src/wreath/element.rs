use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::Cyclotomic;

/// A coordinate of V = (C²)ⁿ: `X(i)` is x_{i+1}, `Y(i)` is y_{i+1} (0-based index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    Y(usize),
}

/// Element (π, a) of Γ_n = S_n ⋉ (C_ℓ)ⁿ.
///
/// It acts on V by x_i ↦ η^{a_i} x_{π(i)} and y_i ↦ η^{−a_i} y_{π(i)}, and the product is
/// (π, a)·(ρ, b) = (πρ, a∘ρ + b) so that act(g·h) = act(g) ∘ act(h).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    ell: u32,
    perm: Vec<usize>,
    exps: Vec<u32>,
}

impl WreathElement {
    pub fn new(ell: u32, perm: Vec<usize>, exps: Vec<i64>) -> Result<Self> {
        let n = perm.len();
        if exps.len() != n {
            return Err(Error::InvalidParams("perm and exps lengths differ".into()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidParams(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        let exps = exps.iter().map(|&e| e.rem_euclid(ell as i64) as u32).collect();
        Ok(WreathElement { ell, perm, exps })
    }

    pub fn identity(n: usize, ell: u32) -> Self {
        WreathElement {
            ell,
            perm: (0..n).collect(),
            exps: vec![0; n],
        }
    }

    /// s_{ij}, 0-based indices.
    pub fn transposition(n: usize, ell: u32, i: usize, j: usize) -> Self {
        let mut g = Self::identity(n, ell);
        g.perm.swap(i, j);
        g
    }

    /// (σ^m)_i: σ^m placed in the i-th factor of (C_ℓ)ⁿ.
    pub fn gamma(n: usize, ell: u32, i: usize, m: i64) -> Self {
        let mut g = Self::identity(n, ell);
        g.exps[i] = m.rem_euclid(ell as i64) as u32;
        g
    }

    /// s_{ij} (σ^m)_i (σ^m)_j^{-1}.
    pub fn reflection_s(n: usize, ell: u32, i: usize, j: usize, m: i64) -> Self {
        let s = Self::transposition(n, ell, i, j);
        let gi = Self::gamma(n, ell, i, m);
        let gj = Self::gamma(n, ell, j, -m);
        s.mul(&gi).mul(&gj)
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0) && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() || self.ell != other.ell {
            return Err(Error::GroupMismatch(self.n(), self.ell, other.n(), other.ell));
        }
        Ok(self.mul(other))
    }

    /// Group product; panics on mismatched (n, ℓ). See [`Self::checked_mul`].
    pub fn mul(&self, other: &Self) -> Self {
        assert!(
            self.n() == other.n() && self.ell == other.ell,
            "wreath product of elements from different groups"
        );
        let n = self.n();
        let perm = (0..n).map(|i| self.perm[other.perm[i]]).collect();
        let exps = (0..n)
            .map(|i| (self.exps[other.perm[i]] + other.exps[i]) % self.ell)
            .collect();
        WreathElement {
            ell: self.ell,
            perm,
            exps,
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut exps = vec![0; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            exps[self.perm[i]] = (self.ell - self.exps[i]) % self.ell;
        }
        WreathElement {
            ell: self.ell,
            perm,
            exps,
        }
    }

    /// h g h^{-1}.
    pub fn conjugate_by(&self, h: &Self) -> Self {
        h.mul(self).mul(&h.inverse())
    }

    /// Exponent (in units of η) and image of a coordinate.
    pub fn act_exponent(&self, v: Var) -> (i64, Var) {
        match v {
            Var::X(i) => (self.exps[i] as i64, Var::X(self.perm[i])),
            Var::Y(i) => (-(self.exps[i] as i64), Var::Y(self.perm[i])),
        }
    }

    pub fn act_on_variable(&self, v: Var) -> (Cyclotomic, Var) {
        let (e, w) = self.act_exponent(v);
        (Cyclotomic::eta_pow(self.ell, e), w)
    }

    /// Matrix of the action on V in the basis x_1..x_n, y_1..y_n (columns are images).
    pub fn matrix(&self) -> Matrix<Cyclotomic> {
        let n = self.n();
        let zero = Cyclotomic::zero(self.ell);
        let mut m = Matrix::zeros(2 * n, 2 * n, &zero);
        for i in 0..n {
            let (c, Var::X(p)) = self.act_on_variable(Var::X(i)) else {
                unreachable!()
            };
            m[(p, i)] = c;
            let (c, Var::Y(p)) = self.act_on_variable(Var::Y(i)) else {
                unreachable!()
            };
            m[(n + p, n + i)] = c;
        }
        m
    }

    /// Codimension of the fixed subspace on V, i.e. rank(g − 1).
    pub fn fixed_space_codim(&self) -> usize {
        let n = self.n();
        let m = self.matrix();
        m.sub(&Matrix::identity(2 * n, &Cyclotomic::zero(self.ell))).rank()
    }

    /// Cycles of π (0-based) with the exponent sum around each cycle.
    pub fn cycles(&self) -> Vec<(Vec<usize>, u32)> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut sum = 0u32;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i);
                sum = (sum + self.exps[i]) % self.ell;
                i = self.perm[i];
            }
            out.push((cyc, sum));
        }
        out
    }
}

/// Enumerates all n!·ℓⁿ elements of Γ_n in a fixed order.
pub fn all_elements(n: usize, ell: u32) -> Vec<WreathElement> {
    let mut perms = Vec::new();
    permutations(&mut (0..n).collect::<Vec<_>>(), 0, &mut perms);
    perms.sort();
    let total_exps = (ell as usize).pow(n as u32);
    let mut out = Vec::with_capacity(perms.len() * total_exps);
    for p in &perms {
        for code in 0..total_exps {
            let mut c = code;
            let exps = (0..n)
                .map(|_| {
                    let e = (c % ell as usize) as u32;
                    c /= ell as usize;
                    e
                })
                .collect();
            out.push(WreathElement {
                ell,
                perm: p.clone(),
                exps,
            });
        }
    }
    out
}

fn permutations(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

pub fn group_order(n: usize, ell: u32) -> u128 {
    (1..=n as u128).product::<u128>() * (ell as u128).pow(n as u32)
}

/// Cycle-and-exponent notation: nontrivial cycles of π (1-based) then the exponent
/// vector if nonzero, e.g. `(1 2)[1,2]`; the identity prints as `1`.
impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        for (cyc, _) in self.cycles() {
            if cyc.len() > 1 {
                let s: Vec<String> = cyc.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, "({})", s.join(" "))?;
            }
        }
        if self.exps.iter().any(|&e| e != 0) {
            let s: Vec<String> = self.exps.iter().map(u32::to_string).collect();
            write!(f, "[{}]", s.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One-line serialisation: `perm` is 1-based, `exps` as integers mod ℓ.
impl Serialize for WreathElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            perm: Vec<usize>,
            exps: &'a [u32],
        }
        Repr {
            perm: self.perm.iter().map(|p| p + 1).collect(),
            exps: &self.exps,
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let h = WreathElement::reflection_s(3, 3, 0, 2, 1);
        let e = WreathElement::identity(3, 3);
        assert_eq!(e.mul(&h), h);
        assert_eq!(h.mul(&e), h);
    }

    #[test]
    fn transposition_squares_to_one() {
        let s = WreathElement::transposition(2, 2, 0, 1);
        assert!(s.mul(&s).is_identity());
    }

    #[test]
    fn gamma_one_s_equals_s_gamma_two() {
        let g1 = WreathElement::gamma(2, 3, 0, 1);
        let g2 = WreathElement::gamma(2, 3, 1, 1);
        let s = WreathElement::transposition(2, 3, 0, 1);
        let lhs = g1.mul(&s);
        let rhs = s.mul(&g2);
        assert_eq!(lhs, rhs);
        // brute-force action on x1, x2 as an independent check
        for v in [Var::X(0), Var::X(1)] {
            let (e1, w1) = s.act_exponent(v);
            let (e2, w2) = g1.act_exponent(w1);
            let (f1, u1) = g2.act_exponent(v);
            let (f2, u2) = s.act_exponent(u1);
            assert_eq!(w2, u2);
            assert_eq!((e1 + e2).rem_euclid(3), (f1 + f2).rem_euclid(3));
        }
    }

    #[test]
    fn action_on_coordinates() {
        let g = WreathElement::gamma(2, 4, 0, 1);
        assert_eq!(g.act_on_variable(Var::X(0)), (Cyclotomic::eta_pow(4, 1), Var::X(0)));
        assert_eq!(g.act_on_variable(Var::Y(0)), (Cyclotomic::eta_pow(4, -1), Var::Y(0)));
        let s = WreathElement::transposition(2, 4, 0, 1);
        assert_eq!(s.act_on_variable(Var::X(0)), (Cyclotomic::one(4), Var::X(1)));
    }

    #[test]
    fn mismatched_groups() {
        let a = WreathElement::identity(2, 2);
        let b = WreathElement::identity(3, 2);
        assert_eq!(a.checked_mul(&b), Err(Error::GroupMismatch(2, 2, 3, 2)));
    }

    #[test]
    fn inverse_and_display() {
        for g in all_elements(3, 3) {
            assert!(g.mul(&g.inverse()).is_identity());
        }
        let g = WreathElement::reflection_s(2, 3, 0, 1, 1);
        assert_eq!(g.to_string(), "(1 2)[1,2]");
        assert_eq!(WreathElement::identity(2, 3).to_string(), "1");
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"perm":[2,1],"exps":[1,2]}"#);
    }

    #[test]
    fn symplectic_form_preserved() {
        // ω(x_i, y_j) = δ_ij; the image coefficients multiply to 1 on matched pairs
        for g in all_elements(2, 3) {
            for i in 0..2 {
                let (a, xi) = g.act_exponent(Var::X(i));
                let (b, yi) = g.act_exponent(Var::Y(i));
                let (Var::X(p), Var::Y(q)) = (xi, yi) else {
                    unreachable!()
                };
                assert_eq!(p, q);
                assert_eq!((a + b).rem_euclid(3), 0);
            }
        }
    }
}
