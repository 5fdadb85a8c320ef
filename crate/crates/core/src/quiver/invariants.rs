use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use super::rep::{CotangentRep, QuiverConfig};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{monomial_count, monomials_of_degree, Monomial, Poly};
use crate::scalars::Cyclotomic;

/// Default bound on the number of degree-d monomials a fiber computation may touch.
pub const DEFAULT_SIZE_GUARD: u128 = 200_000;

/// Which representation space the coordinate ring lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Space {
    /// Rep(Q̄, nδ): X and Y only.
    Doubled,
    /// Rep(Q̄_∞, ε): X, Y, i, j.
    DoubledFramed,
}

/// Ideals of the coordinate ring whose invariant quotients are compared with C[h ⊕ h*]^{Γ_n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FiberIdeal {
    /// All entries of all μ_v, including i j at vertex 0, on Rep(Q̄_∞, ε).
    MuFull,
    /// Entries of μ_v for v ≠ 0 on Rep(Q̄, nδ).
    I1,
    /// I1 plus the 2×2 minors of the vertex-0 component (rank ≤ 1).
    I2,
    /// Entries of μ_v for every v on Rep(Q̄, nδ).
    I3,
}

impl FiberIdeal {
    pub fn space(self) -> Space {
        match self {
            FiberIdeal::MuFull => Space::DoubledFramed,
            _ => Space::Doubled,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FiberIdeal::MuFull => "I_mu_full",
            FiberIdeal::I1 => "I1",
            FiberIdeal::I2 => "I2",
            FiberIdeal::I3 => "I3",
        }
    }
}

impl std::str::FromStr for FiberIdeal {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I_mu_full" | "mu" => Ok(FiberIdeal::MuFull),
            "I1" => Ok(FiberIdeal::I1),
            "I2" => Ok(FiberIdeal::I2),
            "I3" => Ok(FiberIdeal::I3),
            _ => Err(Error::Parse(format!("unknown ideal {s:?}"))),
        }
    }
}

/// Variable layout: X_r[a][b], then Y_r[a][b], then i_a, then j_a.
#[derive(Debug, Clone, Copy)]
pub struct Coordinates {
    pub config: QuiverConfig,
    pub space: Space,
}

impl Coordinates {
    pub fn new(config: QuiverConfig, space: Space) -> Self {
        Coordinates { config, space }
    }

    fn block(&self) -> usize {
        self.config.n * self.config.n
    }

    pub fn nvars(&self) -> usize {
        let base = 2 * self.config.vertices() * self.block();
        match self.space {
            Space::Doubled => base,
            Space::DoubledFramed => base + 2 * self.config.n,
        }
    }

    fn var(&self, idx: usize) -> Poly {
        Poly::var(self.nvars(), self.config.ell, idx)
    }

    /// The matrix of coordinate functions attached to a letter.
    fn matrix(&self, letter: Letter) -> PolyMat {
        let n = self.config.n;
        let block = self.block();
        let l = self.config.vertices();
        match letter {
            Letter::X(r) => PolyMat::from_fn(n, n, |a, b| self.var(r * block + a * n + b)),
            Letter::Y(r) => PolyMat::from_fn(n, n, |a, b| self.var((l + r) * block + a * n + b)),
            Letter::I => PolyMat::from_fn(n, 1, |a, _| self.var(2 * l * block + a)),
            Letter::J => PolyMat::from_fn(1, n, |_, b| self.var(2 * l * block + n + b)),
        }
    }

    fn word(&self, letters: &[Letter]) -> PolyMat {
        let mut it = letters.iter();
        let first = self.matrix(*it.next().expect("nonempty word"));
        it.fold(first, |acc, &l| acc.mul(&self.matrix(l)))
    }

    /// Coordinate values of a point, matching this layout.
    pub fn point(&self, c: &CotangentRep) -> Vec<Cyclotomic> {
        let mut v = c.coordinates();
        v.truncate(self.nvars());
        v
    }

    /// Vertex components of the moment map as polynomial matrices, with or without i j.
    pub fn moment_components(&self, with_ij: bool) -> Vec<PolyMat> {
        let cfg = self.config;
        (0..cfg.vertices())
            .map(|v| {
                let p = cfg.prev(v);
                let m = self
                    .word(&[Letter::X(v), Letter::Y(v)])
                    .sub(&self.word(&[Letter::Y(p), Letter::X(p)]));
                if v == 0 && with_ij {
                    m.add(&self.word(&[Letter::I, Letter::J]))
                } else {
                    m
                }
            })
            .collect()
    }
}

/// Small dense matrices of polynomials.
#[derive(Clone, Debug)]
pub struct PolyMat {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PolyMat {
    fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Poly) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for a in 0..rows {
            for b in 0..cols {
                data.push(f(a, b));
            }
        }
        PolyMat { rows, cols, data }
    }

    pub fn get(&self, a: usize, b: usize) -> &Poly {
        &self.data[a * self.cols + b]
    }

    pub fn entries(&self) -> &[Poly] {
        &self.data
    }

    fn mul(&self, o: &Self) -> Self {
        PolyMat::from_fn(self.rows, o.cols, |a, b| {
            let mut acc = Poly::zero(self.data[0].nvars(), self.data[0].ell());
            for k in 0..self.cols {
                acc = acc.add(&self.get(a, k).mul(o.get(k, b)));
            }
            acc
        })
    }

    fn add(&self, o: &Self) -> Self {
        PolyMat::from_fn(self.rows, self.cols, |a, b| self.get(a, b).add(o.get(a, b)))
    }

    fn sub(&self, o: &Self) -> Self {
        PolyMat::from_fn(self.rows, self.cols, |a, b| self.get(a, b).sub(o.get(a, b)))
    }

    fn trace(&self) -> Poly {
        (1..self.rows.min(self.cols)).fold(self.get(0, 0).clone(), |acc, i| acc.add(self.get(i, i)))
    }

    /// All 2×2 minors.
    pub fn minors2(&self) -> Vec<Poly> {
        let mut out = Vec::new();
        for a in 0..self.rows {
            for b in a + 1..self.rows {
                for c in 0..self.cols {
                    for d in c + 1..self.cols {
                        out.push(
                            self.get(a, c)
                                .mul(self.get(b, d))
                                .sub(&self.get(a, d).mul(self.get(b, c))),
                        );
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// a_r: r → r+1
    X(usize),
    /// a_r*: r+1 → r
    Y(usize),
    /// 0 → ∞
    I,
    /// ∞ → 0
    J,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X(r) => write!(f, "X{r}"),
            Letter::Y(r) => write!(f, "Y{r}"),
            Letter::I => write!(f, "i"),
            Letter::J => write!(f, "j"),
        }
    }
}

/// Either Tr(w) for a closed walk w in Q̄, or the scalar j·w·i for a closed walk w at 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleWord {
    pub letters: Vec<Letter>,
}

impl CycleWord {
    pub fn is_framed(&self) -> bool {
        self.letters.first() == Some(&Letter::J)
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }
}

impl fmt::Display for CycleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        if self.is_framed() {
            write!(f, "{}", w.join(" "))
        } else {
            write!(f, "Tr({})", w.join(" "))
        }
    }
}

/// A product of cycle words together with its polynomial.
#[derive(Debug, Clone)]
pub struct TraceInvariant {
    pub factors: Vec<CycleWord>,
    pub poly: Poly,
}

impl TraceInvariant {
    pub fn evaluate(&self, c: &CotangentRep, space: Space) -> Cyclotomic {
        self.poly.evaluate(&Coordinates::new(c.config, space).point(c))
    }
}

impl fmt::Display for TraceInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let w: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", w.join(" · "))
    }
}

/// Closed walks of length `len` starting at `start`.
fn closed_walks(cfg: QuiverConfig, start: usize, len: usize) -> Vec<Vec<Letter>> {
    fn go(cfg: QuiverConfig, start: usize, at: usize, left: usize, cur: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if left == 0 {
            if at == start {
                out.push(cur.clone());
            }
            return;
        }
        for (letter, to) in [(Letter::X(at), cfg.next(at)), (Letter::Y(cfg.prev(at)), cfg.prev(at))] {
            cur.push(letter);
            go(cfg, start, to, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(cfg, start, start, len, &mut Vec::new(), &mut out);
    out
}

fn min_rotation(w: &[Letter]) -> Vec<Letter> {
    (0..w.len())
        .map(|k| w[k..].iter().chain(&w[..k]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Distinct single cycle invariants of degree `d`: traces of closed walks (deduplicated by
/// rotation, then by polynomial) and, on the framed space, j·w·i.
fn cycle_generators(coords: &Coordinates, d: usize) -> Vec<(CycleWord, Poly)> {
    let cfg = coords.config;
    let mut words: Vec<Vec<Letter>> = Vec::new();
    if d >= 1 {
        let mut seen = HashSet::new();
        for v in 0..cfg.vertices() {
            for w in closed_walks(cfg, v, d) {
                let canon = min_rotation(&w);
                if seen.insert(canon.clone()) {
                    words.push(canon);
                }
            }
        }
    }
    if coords.space == Space::DoubledFramed && d >= 2 {
        let inner = if d == 2 {
            vec![vec![]]
        } else {
            closed_walks(cfg, 0, d - 2)
        };
        for w in inner {
            let mut full = vec![Letter::J];
            full.extend(w);
            full.push(Letter::I);
            words.push(full);
        }
    }
    let mut polys = HashSet::new();
    let mut out = Vec::new();
    for letters in words {
        let word = CycleWord { letters };
        let m = coords.word(&word.letters);
        let p = if word.is_framed() {
            m.get(0, 0).clone()
        } else {
            m.trace()
        };
        if !p.is_zero() && polys.insert(p.clone()) {
            out.push((word, p));
        }
    }
    out
}

/// All products of cycle invariants with total degree `d` (distinct as polynomials).
/// Degree 0 is the constant 1.
pub fn trace_cycle_basis(config: QuiverConfig, space: Space, d: usize) -> Vec<TraceInvariant> {
    let coords = Coordinates::new(config, space);
    let gens: Vec<Vec<(CycleWord, Poly)>> = (0..=d).map(|e| cycle_generators(&coords, e)).collect();
    let flat: Vec<(usize, &CycleWord, &Poly)> = gens
        .iter()
        .enumerate()
        .flat_map(|(e, g)| g.iter().map(move |(w, p)| (e, w, p)))
        .collect();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let one = Poly::one(coords.nvars(), config.ell);
    // multisets of generators, indices nondecreasing
    fn go<'a>(
        flat: &[(usize, &'a CycleWord, &'a Poly)],
        from: usize,
        left: usize,
        factors: &mut Vec<CycleWord>,
        poly: Poly,
        seen: &mut HashSet<Poly>,
        out: &mut Vec<TraceInvariant>,
    ) {
        if left == 0 {
            if seen.insert(poly.clone()) {
                out.push(TraceInvariant {
                    factors: factors.clone(),
                    poly,
                });
            }
            return;
        }
        for k in from..flat.len() {
            let (e, w, p) = flat[k];
            if e == 0 || e > left {
                continue;
            }
            factors.push(w.clone());
            go(flat, k, left - e, factors, poly.mul(p), seen, out);
            factors.pop();
        }
    }
    go(&flat, 0, d, &mut Vec::new(), one, &mut seen, &mut out);
    out
}

fn ideal_generators(config: QuiverConfig, ideal: FiberIdeal) -> Vec<Poly> {
    let coords = Coordinates::new(config, ideal.space());
    let mu = coords.moment_components(ideal == FiberIdeal::MuFull);
    let mut gens: Vec<Poly> = Vec::new();
    for (v, m) in mu.iter().enumerate() {
        let include = match ideal {
            FiberIdeal::MuFull | FiberIdeal::I3 => true,
            FiberIdeal::I1 | FiberIdeal::I2 => v != 0,
        };
        if include {
            gens.extend(m.entries().iter().cloned());
        }
    }
    if ideal == FiberIdeal::I2 {
        gens.extend(mu[0].minors2());
    }
    gens.retain(|p| !p.is_zero());
    gens
}

struct MonomialIndex(HashMap<Monomial, usize>);

impl MonomialIndex {
    fn vector(&mut self, p: &Poly) -> SparseVec<Cyclotomic> {
        let mut v = BTreeMap::new();
        for (m, c) in p.terms() {
            let next = self.0.len();
            let col = *self.0.entry(m.clone()).or_insert(next);
            v.insert(col, c.clone());
        }
        v
    }
}

fn guard(nvars: usize, d: usize, size_guard: u128) -> Result<()> {
    let needed = monomial_count(nvars, d);
    if needed > size_guard {
        return Err(Error::SizeGuard {
            needed,
            limit: size_guard,
        });
    }
    Ok(())
}

/// Echelon basis of the degree-d piece of an ideal: generator × monomial of complementary degree.
fn ideal_piece(config: QuiverConfig, ideal: FiberIdeal, d: usize, index: &mut MonomialIndex) -> Echelon<Cyclotomic> {
    let nvars = Coordinates::new(config, ideal.space()).nvars();
    let mut ech = Echelon::new();
    for g in ideal_generators(config, ideal) {
        let e = g.degree().expect("nonzero generator");
        if e > d {
            continue;
        }
        for m in monomials_of_degree(nvars, d - e) {
            ech.insert(index.vector(&g.shift(&m)));
        }
    }
    ech
}

/// dim of the degree-d piece of (C[space]/ideal)^G, as the rank of the trace-cycle
/// invariants of degree d modulo the degree-d piece of the ideal. Invariants of the
/// quotient are taken to be images of invariants, which holds because G is reductive.
pub fn fiber_invariant_dim(config: QuiverConfig, ideal: FiberIdeal, d: usize, size_guard: u128) -> Result<usize> {
    let nvars = Coordinates::new(config, ideal.space()).nvars();
    guard(nvars, d, size_guard)?;
    let mut index = MonomialIndex(HashMap::new());
    let mut ech = ideal_piece(config, ideal, d, &mut index);
    let base = ech.rank();
    for inv in trace_cycle_basis(config, ideal.space(), d) {
        ech.insert(index.vector(&inv.poly));
    }
    Ok(ech.rank() - base)
}

/// Whether the degree-d piece of I2 lies inside that of I3.
pub fn i2_contained_in_i3(config: QuiverConfig, d: usize, size_guard: u128) -> Result<bool> {
    let nvars = Coordinates::new(config, Space::Doubled).nvars();
    guard(nvars, d, size_guard)?;
    let mut index = MonomialIndex(HashMap::new());
    let i3 = ideal_piece(config, FiberIdeal::I3, d, &mut index);
    for g in ideal_generators(config, FiberIdeal::I2) {
        let e = g.degree().expect("nonzero generator");
        if e > d {
            continue;
        }
        for m in monomials_of_degree(nvars, d - e) {
            if !i3.contains(index.vector(&g.shift(&m))) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Σ_v Tr μ_v − j·i as a polynomial on Rep(Q̄_∞, ε); identically zero.
pub fn trace_identity_defect(config: QuiverConfig) -> Poly {
    let coords = Coordinates::new(config, Space::DoubledFramed);
    let total = coords
        .moment_components(true)
        .iter()
        .fold(Poly::zero(coords.nvars(), config.ell), |acc, m| acc.add(&m.trace()));
    total.sub(coords.word(&[Letter::J, Letter::I]).get(0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wreath::molien_series;

    fn cfg(n: usize, ell: u32) -> QuiverConfig {
        QuiverConfig::new(n, ell).unwrap()
    }

    #[test]
    fn degree_two_words_ell_two() {
        let basis = trace_cycle_basis(cfg(1, 2), Space::DoubledFramed, 2);
        let names: Vec<String> = basis.iter().map(ToString::to_string).collect();
        assert!(names.contains(&"Tr(X0 Y0)".to_string()), "{names:?}");
        assert!(names.contains(&"j i".to_string()));
        assert_eq!(trace_cycle_basis(cfg(2, 3), Space::Doubled, 0).len(), 1);
        // n = 2 keeps Tr(X0 Y0) and Tr(X1 Y1) apart
        let b2 = trace_cycle_basis(cfg(2, 2), Space::Doubled, 2);
        let w: Vec<String> = b2.iter().map(ToString::to_string).collect();
        assert!(
            w.contains(&"Tr(X0 Y0)".to_string()) && w.contains(&"Tr(X1 Y1)".to_string()),
            "{w:?}"
        );
    }

    #[test]
    fn evaluation_on_scalars() {
        use crate::linalg::Matrix;
        let c = cfg(1, 2);
        let s = |v: i64| Matrix::from_rows(vec![vec![Cyclotomic::from_int(2, v)]]);
        let rep = CotangentRep::new(c, vec![s(2), s(3)], vec![s(5), s(7)], s(1), s(1)).unwrap();
        let inv = trace_cycle_basis(c, Space::DoubledFramed, 2)
            .into_iter()
            .find(|t| t.to_string() == "Tr(X0 Y0)")
            .unwrap();
        assert_eq!(inv.evaluate(&rep, Space::DoubledFramed), Cyclotomic::from_int(2, 10));
    }

    #[test]
    fn hand_checked_dims() {
        assert_eq!(
            fiber_invariant_dim(cfg(1, 2), FiberIdeal::MuFull, 2, DEFAULT_SIZE_GUARD).unwrap(),
            3
        );
        assert_eq!(
            fiber_invariant_dim(cfg(1, 3), FiberIdeal::MuFull, 3, DEFAULT_SIZE_GUARD).unwrap(),
            2
        );
        assert_eq!(
            fiber_invariant_dim(cfg(1, 2), FiberIdeal::I2, 3, DEFAULT_SIZE_GUARD).unwrap(),
            0
        );
        assert_eq!(
            fiber_invariant_dim(cfg(2, 3), FiberIdeal::I3, 0, DEFAULT_SIZE_GUARD).unwrap(),
            1
        );
    }

    #[test]
    fn rank_one_matches_molien() {
        for ell in [2u32, 3] {
            let mol = molien_series(1, ell, 6);
            for d in 0..=6 {
                let want = mol.coeff(d).to_i64().unwrap() as usize;
                for ideal in [FiberIdeal::MuFull, FiberIdeal::I2, FiberIdeal::I3] {
                    let got = fiber_invariant_dim(cfg(1, ell), ideal, d, DEFAULT_SIZE_GUARD).unwrap();
                    assert_eq!(got, want, "l={ell} d={d} {}", ideal.name());
                }
            }
        }
    }

    #[test]
    fn trace_identity() {
        for n in 1..=3 {
            for ell in 2..=3 {
                assert!(trace_identity_defect(cfg(n, ell)).is_zero());
            }
        }
    }

    #[test]
    fn size_guard_trips() {
        let r = fiber_invariant_dim(cfg(3, 3), FiberIdeal::MuFull, 6, 1000);
        assert!(matches!(r, Err(Error::SizeGuard { limit: 1000, .. })));
    }

    #[test]
    fn containment() {
        assert!(i2_contained_in_i3(cfg(2, 2), 4, DEFAULT_SIZE_GUARD).unwrap());
    }
}

#[cfg(test)]
mod rank_two_tests {
    use super::*;
    use crate::wreath::molien_series;

    #[test]
    fn n2_l2_matches_molien() {
        let c = QuiverConfig::new(2, 2).unwrap();
        let mol = molien_series(2, 2, 3);
        for d in 0..=3 {
            let want = mol.coeff(d).to_i64().unwrap() as usize;
            for ideal in [FiberIdeal::MuFull, FiberIdeal::I2, FiberIdeal::I3] {
                assert_eq!(
                    fiber_invariant_dim(c, ideal, d, DEFAULT_SIZE_GUARD).unwrap(),
                    want,
                    "d={d} {}",
                    ideal.name()
                );
            }
        }
    }
}
