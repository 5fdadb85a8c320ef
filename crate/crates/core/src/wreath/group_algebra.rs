use std::collections::BTreeMap;
use std::fmt;

use super::{all_elements, group_order, WreathElement};
use crate::scalars::{Cyclotomic, Rational};

/// Finite Q(η)-linear combination of group elements; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    ell: u32,
    terms: BTreeMap<WreathElement, Cyclotomic>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize, ell: u32) -> Self {
        GroupAlgebraElement {
            n,
            ell,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_element(g: WreathElement) -> Self {
        let ell = g.ell();
        Self::from_term(g, Cyclotomic::one(ell))
    }

    pub fn from_term(g: WreathElement, c: Cyclotomic) -> Self {
        let mut a = Self::zero(g.n(), g.ell());
        a.add_term(g, &c);
        a
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn terms(&self) -> &BTreeMap<WreathElement, Cyclotomic> {
        &self.terms
    }

    pub fn coeff(&self, g: &WreathElement) -> Cyclotomic {
        self.terms.get(g).cloned().unwrap_or_else(|| Cyclotomic::zero(self.ell))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, g: WreathElement, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&g);
                }
            }
            None => {
                self.terms.insert(g, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c);
        }
        out
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.n, self.ell);
        for (g, c) in &self.terms {
            out.add_term(g.clone(), &(c * s));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n, self.ell);
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(g.mul(h), &(a * b));
            }
        }
        out
    }
}

/// e = |Γ_n|^{-1} Σ_w w.
pub fn symmetrizer(n: usize, ell: u32) -> GroupAlgebraElement {
    let order = group_order(n, ell);
    let coef = Cyclotomic::from_rational(
        ell,
        Rational::new(1, i64::try_from(order).expect("group order fits in i64")).unwrap(),
    );
    let mut e = GroupAlgebraElement::zero(n, ell);
    for g in all_elements(n, ell) {
        e.add_term(g, &coef);
    }
    e
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(g, c)| format!("({c})·{g}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
