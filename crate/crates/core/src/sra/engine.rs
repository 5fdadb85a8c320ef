//! PBW normal forms in H_{k,c}.
//!
//! Basis: x^a y^b w (all x's, then all y's, then one group element). A product of two
//! basis elements is brought to normal form by moving the group element of the left
//! factor to the right through the variables, then rewriting y^b x^c with the rule
//! y_i x_j → x_j y_i + κ(i, j). The group-algebra correction κ(i, j) lowers the
//! (x, y)-degree by two, which bounds the recursion; a fuel counter guards it anyway.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use rand::Rng;

use super::SraParams;
use crate::error::{Error, Result};
use crate::scalars::{Cyclotomic, Rational};
use crate::wreath::{all_elements, GroupAlgebraElement, WreathElement};

/// Exponent vector of length n.
pub type Exps = Vec<u16>;

/// A PBW basis element x^a y^b w.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PbwKey {
    pub x: Exps,
    pub y: Exps,
    pub w: WreathElement,
}

impl PbwKey {
    pub fn degree(&self) -> usize {
        self.x.iter().chain(&self.y).map(|&e| e as usize).sum()
    }
}

type Terms = BTreeMap<PbwKey, Cyclotomic>;

fn add_term(t: &mut Terms, k: PbwKey, c: Cyclotomic) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&k) {
        Some(v) => {
            *v = &*v + &c;
            if v.is_zero() {
                t.remove(&k);
            }
        }
        None => {
            t.insert(k, c);
        }
    }
}

/// g(x^c) = η^e x^{π·c}; returns (e, π·c). With `dual` the y-weights η^{−a_i} are used.
fn act_exps(g: &WreathElement, c: &[u16], dual: bool) -> (i64, Exps) {
    let mut out = vec![0u16; c.len()];
    let mut e = 0i64;
    for (i, &ci) in c.iter().enumerate() {
        if ci == 0 {
            continue;
        }
        out[g.perm()[i]] = ci;
        e += ci as i64 * g.exps()[i] as i64;
    }
    (if dual { -e } else { e }, out)
}

fn add_exps(a: &[u16], b: &[u16]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Default rewriting budget per top-level product.
pub const DEFAULT_FUEL: usize = 50_000_000;

/// The algebra H_{k,c} for fixed parameters: commutator table and a memo of
/// normal-ordered y^b x^c.
pub struct Sra {
    params: SraParams,
    /// kappa[i][j] = y_i x_j − x_j y_i in the group algebra.
    kappa: Vec<Vec<GroupAlgebraElement>>,
    identity: WreathElement,
    memo: Mutex<HashMap<(Exps, Exps), Arc<Terms>>>,
    fuel: usize,
    steps: AtomicUsize,
}

impl fmt::Debug for Sra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sra({:?})", self.params)
    }
}

/// Right-hand sides of the defining commutators of H_{k,c}:
///
/// y_i x_i − x_i y_i = 1 + (k/2) Σ_{j≠i} Σ_{γ∈C_ℓ} s_ij γ_i γ_j^{-1} + Σ_{m≥1} c_m (σ^m)_i
/// y_i x_j − x_j y_i = −(k/2) Σ_m η^{−m} s_ij (σ^m)_i (σ^m)_j^{-1}        (i ≠ j)
///
/// The η^{−m} in the second line is the twist that makes these relations PBW-consistent
/// for the action x_i ↦ η x_i, y_i ↦ η^{-1} y_i of (σ)_i used throughout.
pub fn commutator(params: &SraParams, i: usize, j: usize) -> GroupAlgebraElement {
    let (n, ell) = (params.n, params.ell);
    let half_k = params.k.scale(&Rational::new(1, 2).unwrap());
    let mut out = GroupAlgebraElement::zero(n, ell);
    if i == j {
        out.add_term(WreathElement::identity(n, ell), &Cyclotomic::one(ell));
        for jj in (0..n).filter(|&jj| jj != i) {
            for m in 0..ell as i64 {
                out.add_term(WreathElement::reflection_s(n, ell, i, jj, m), &half_k);
            }
        }
        for m in 1..ell {
            out.add_term(WreathElement::gamma(n, ell, i, m as i64), params.c_m(m));
        }
    } else {
        let neg_half_k = -&half_k;
        for m in 0..ell as i64 {
            let coef = &neg_half_k * &Cyclotomic::eta_pow(ell, -m);
            out.add_term(WreathElement::reflection_s(n, ell, i, j, m), &coef);
        }
    }
    out
}

impl Sra {
    pub fn new(params: SraParams) -> Arc<Self> {
        Self::with_fuel(params, DEFAULT_FUEL)
    }

    pub fn with_fuel(params: SraParams, fuel: usize) -> Arc<Self> {
        let n = params.n;
        let kappa = (0..n)
            .map(|i| (0..n).map(|j| commutator(&params, i, j)).collect())
            .collect();
        Arc::new(Sra {
            identity: WreathElement::identity(n, params.ell),
            params,
            kappa,
            memo: Mutex::new(HashMap::new()),
            fuel,
            steps: AtomicUsize::new(0),
        })
    }

    pub fn params(&self) -> &SraParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn ell(&self) -> u32 {
        self.params.ell
    }

    fn tick(&self) -> Result<()> {
        let s = self.steps.fetch_add(1, Ordering::Relaxed);
        if s >= self.fuel {
            return Err(Error::FuelExhausted(self.fuel));
        }
        Ok(())
    }

    /// Normal form of y^b x^c.
    fn reorder(&self, b: &[u16], c: &[u16]) -> Result<Arc<Terms>> {
        let key = (b.to_vec(), c.to_vec());
        if let Some(t) = self.memo.lock().expect("memo poisoned").get(&key) {
            return Ok(t.clone());
        }
        self.tick()?;
        let ell = self.ell();
        let mut out = Terms::new();
        let bi = b.iter().rposition(|&e| e > 0);
        let cj = c.iter().position(|&e| e > 0);
        match (bi, cj) {
            (Some(i), Some(j)) => {
                let mut b1 = b.to_vec();
                b1[i] -= 1;
                let mut c1 = c.to_vec();
                c1[j] -= 1;
                let mut ei = vec![0u16; b.len()];
                ei[i] = 1;
                // y^{b1} x_j (y_i x^{c1})
                let inner = self.reorder(&ei, &c1)?;
                for (k, coef) in inner.iter() {
                    let mut xa = k.x.clone();
                    xa[j] += 1;
                    let outer = self.reorder(&b1, &xa)?;
                    for (k2, coef2) in outer.iter() {
                        // x^γ y^δ v · y^β w
                        let (e, vy) = act_exps(&k2.w, &k.y, true);
                        let s = &(coef * coef2) * &Cyclotomic::eta_pow(ell, e);
                        add_term(
                            &mut out,
                            PbwKey {
                                x: k2.x.clone(),
                                y: add_exps(&k2.y, &vy),
                                w: k2.w.mul(&k.w),
                            },
                            s,
                        );
                    }
                }
                // y^{b1} κ_ij x^{c1}
                for (g, kc) in self.kappa[i][j].terms() {
                    let (e, gc) = act_exps(g, &c1, false);
                    let s0 = kc * &Cyclotomic::eta_pow(ell, e);
                    let part = self.reorder(&b1, &gc)?;
                    for (k2, coef2) in part.iter() {
                        add_term(
                            &mut out,
                            PbwKey {
                                x: k2.x.clone(),
                                y: k2.y.clone(),
                                w: k2.w.mul(g),
                            },
                            &s0 * coef2,
                        );
                    }
                }
            }
            _ => {
                out.insert(
                    PbwKey {
                        x: c.to_vec(),
                        y: b.to_vec(),
                        w: self.identity.clone(),
                    },
                    Cyclotomic::one(ell),
                );
            }
        }
        let out = Arc::new(out);
        self.memo.lock().expect("memo poisoned").insert(key, out.clone());
        Ok(out)
    }

    /// Normal form of the product of two basis elements, accumulated into `acc` with `scale`.
    fn mul_basis(&self, u: &PbwKey, v: &PbwKey, scale: &Cyclotomic, acc: &mut Terms) -> Result<()> {
        let ell = self.ell();
        let (ex, gx) = act_exps(&u.w, &v.x, false);
        let (ey, gy) = act_exps(&u.w, &v.y, true);
        let s0 = scale * &Cyclotomic::eta_pow(ell, ex + ey);
        let gh = u.w.mul(&v.w);
        let mid = self.reorder(&u.y, &gx)?;
        for (k, coef) in mid.iter() {
            let (e, wy) = act_exps(&k.w, &gy, true);
            let s = &(&s0 * coef) * &Cyclotomic::eta_pow(ell, e);
            add_term(
                acc,
                PbwKey {
                    x: add_exps(&u.x, &k.x),
                    y: add_exps(&k.y, &wy),
                    w: k.w.mul(&gh),
                },
                s,
            );
        }
        Ok(())
    }

    pub fn memo_size(&self) -> usize {
        self.memo.lock().expect("memo poisoned").len()
    }
}

/// Element of H_{k,c} in PBW normal form.
#[derive(Clone)]
pub struct SraElement {
    alg: Arc<Sra>,
    terms: Terms,
}

impl PartialEq for SraElement {
    fn eq(&self, other: &Self) -> bool {
        self.alg.params == other.alg.params && self.terms == other.terms
    }
}

impl SraElement {
    pub fn zero(alg: &Arc<Sra>) -> Self {
        SraElement {
            alg: alg.clone(),
            terms: Terms::new(),
        }
    }

    pub fn from_terms(alg: &Arc<Sra>, terms: impl IntoIterator<Item = (PbwKey, Cyclotomic)>) -> Self {
        let mut t = Terms::new();
        for (k, c) in terms {
            add_term(&mut t, k, c);
        }
        SraElement {
            alg: alg.clone(),
            terms: t,
        }
    }

    pub fn monomial(alg: &Arc<Sra>, x: Exps, y: Exps, w: WreathElement, c: Cyclotomic) -> Self {
        Self::from_terms(alg, [(PbwKey { x, y, w }, c)])
    }

    pub fn scalar(alg: &Arc<Sra>, c: Cyclotomic) -> Self {
        let n = alg.n();
        Self::monomial(alg, vec![0; n], vec![0; n], alg.identity.clone(), c)
    }

    pub fn one(alg: &Arc<Sra>) -> Self {
        Self::scalar(alg, Cyclotomic::one(alg.ell()))
    }

    pub fn x(alg: &Arc<Sra>, i: usize) -> Self {
        let n = alg.n();
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(alg, e, vec![0; n], alg.identity.clone(), Cyclotomic::one(alg.ell()))
    }

    pub fn y(alg: &Arc<Sra>, i: usize) -> Self {
        let n = alg.n();
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(alg, vec![0; n], e, alg.identity.clone(), Cyclotomic::one(alg.ell()))
    }

    pub fn group(alg: &Arc<Sra>, w: WreathElement) -> Self {
        let n = alg.n();
        Self::monomial(alg, vec![0; n], vec![0; n], w, Cyclotomic::one(alg.ell()))
    }

    pub fn from_group_algebra(alg: &Arc<Sra>, a: &GroupAlgebraElement) -> Self {
        let n = alg.n();
        Self::from_terms(
            alg,
            a.terms().iter().map(|(g, c)| {
                (
                    PbwKey {
                        x: vec![0; n],
                        y: vec![0; n],
                        w: g.clone(),
                    },
                    c.clone(),
                )
            }),
        )
    }

    pub fn algebra(&self) -> &Arc<Sra> {
        &self.alg
    }

    pub fn params(&self) -> &SraParams {
        &self.alg.params
    }

    pub fn terms(&self) -> &BTreeMap<PbwKey, Cyclotomic> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total (x, y)-degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(PbwKey::degree).max()
    }

    /// Terms of (x, y)-degree exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> SraElement {
        SraElement {
            alg: self.alg.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.degree() == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if !Arc::ptr_eq(&self.alg, &other.alg) && self.alg.params != other.alg.params {
            return Err(Error::ParamMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut t = self.terms.clone();
        for (k, c) in &other.terms {
            add_term(&mut t, k.clone(), c.clone());
        }
        Ok(SraElement {
            alg: self.alg.clone(),
            terms: t,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Cyclotomic::from_int(self.alg.ell(), -1)))
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        let mut t = Terms::new();
        for (k, c) in &self.terms {
            add_term(&mut t, k.clone(), c * s);
        }
        SraElement {
            alg: self.alg.clone(),
            terms: t,
        }
    }

    /// Exact normal-form product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.alg.steps.store(0, Ordering::Relaxed);
        let mut acc = Terms::new();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                self.alg.mul_basis(u, v, &(cu * cv), &mut acc)?;
            }
        }
        Ok(SraElement {
            alg: self.alg.clone(),
            terms: acc,
        })
    }
}

pub fn sra_product(u: &SraElement, v: &SraElement) -> Result<SraElement> {
    u.mul(v)
}

/// Random basis element x^a y^b w with total (x, y)-degree at most `max_degree`.
pub fn random_monomial<R: Rng>(alg: &Arc<Sra>, rng: &mut R, max_degree: usize, group: &[WreathElement]) -> SraElement {
    let n = alg.n();
    let d = rng.gen_range(0..=max_degree);
    let mut x = vec![0u16; n];
    let mut y = vec![0u16; n];
    for _ in 0..d {
        let v = rng.gen_range(0..2 * n);
        if v < n {
            x[v] += 1;
        } else {
            y[v - n] += 1;
        }
    }
    let w = group[rng.gen_range(0..group.len())].clone();
    SraElement::monomial(alg, x, y, w, Cyclotomic::one(alg.ell()))
}

pub(crate) fn group_of(alg: &Arc<Sra>) -> Vec<WreathElement> {
    all_elements(alg.n(), alg.ell())
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, name: char, e: &[u16]) -> fmt::Result {
    for (i, &p) in e.iter().enumerate() {
        match p {
            0 => {}
            1 => write!(f, "{name}{}", i + 1)?,
            _ => write!(f, "{name}{}^{p}", i + 1)?,
        }
    }
    Ok(())
}

/// Renders `coeff · x^a y^b · w` terms joined by ` + `.
impl fmt::Display for SraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) · ")?;
            if k.degree() == 0 {
                write!(f, "1")?;
            } else {
                fmt_monomial(f, 'x', &k.x)?;
                fmt_monomial(f, 'y', &k.y)?;
            }
            write!(f, " · {}", k.w)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
