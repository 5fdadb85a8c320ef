use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{upoly, Matrix};
use crate::scalars::Cyclotomic;

pub type Mat = Matrix<Cyclotomic>;

/// The cyclic quiver on vertices 0..ℓ−1 with arrows a_r: r → r+1 and dimension vector nδ;
/// the framed version adds a vertex ∞ joined to 0. Matrices act on row vectors, so a
/// path r → r+1 → r+2 evaluates to X_r X_{r+1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuiverConfig {
    pub n: usize,
    pub ell: u32,
}

impl QuiverConfig {
    pub fn new(n: usize, ell: u32) -> Result<Self> {
        if n < 1 || ell < 2 {
            return Err(Error::InvalidParams(format!(
                "need n >= 1 and l >= 2, got n={n}, l={ell}"
            )));
        }
        Ok(QuiverConfig { n, ell })
    }

    pub fn vertices(&self) -> usize {
        self.ell as usize
    }

    /// r + 1 mod ℓ
    pub fn next(&self, r: usize) -> usize {
        (r + 1) % self.vertices()
    }

    /// r − 1 mod ℓ
    pub fn prev(&self, r: usize) -> usize {
        (r + self.vertices() - 1) % self.vertices()
    }

    pub(crate) fn zero_matrix(&self) -> Mat {
        Mat::zeros(self.n, self.n, &Cyclotomic::zero(self.ell))
    }

    pub(crate) fn identity(&self) -> Mat {
        Mat::identity(self.n, &Cyclotomic::zero(self.ell))
    }
}

/// A point of Rep(Q, nδ): X_r is the map along a_r.
#[derive(Debug, Clone, PartialEq)]
pub struct QuiverRep {
    pub config: QuiverConfig,
    pub x: Vec<Mat>,
}

/// A point of Rep(Q̄_∞, ε) = T*Rep(Q_∞, ε): Y_r runs along a_r*: r+1 → r, i is a column
/// vector (n×1) and j a row vector (1×n).
#[derive(Debug, Clone, PartialEq)]
pub struct CotangentRep {
    pub config: QuiverConfig,
    pub x: Vec<Mat>,
    pub y: Vec<Mat>,
    pub i: Mat,
    pub j: Mat,
}

/// An element (g_0, …, g_{ℓ−1}) of G = Π GL_n.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupPoint {
    g: Vec<Mat>,
    inv: Vec<Mat>,
}

fn check_square(config: &QuiverConfig, m: &Mat) -> Result<()> {
    if m.rows() != config.n || m.cols() != config.n {
        return Err(Error::InvalidParams(format!(
            "expected {0}x{0} matrices, got {1}x{2}",
            config.n,
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

impl QuiverRep {
    pub fn new(config: QuiverConfig, x: Vec<Mat>) -> Result<Self> {
        if x.len() != config.vertices() {
            return Err(Error::InvalidParams(format!("expected {} arrows", config.ell)));
        }
        for m in &x {
            check_square(&config, m)?;
        }
        Ok(QuiverRep { config, x })
    }

    pub fn zero(config: QuiverConfig) -> Self {
        QuiverRep {
            x: vec![config.zero_matrix(); config.vertices()],
            config,
        }
    }

    /// X_0 X_1 ⋯ X_{ℓ−1}: once around the cycle starting at vertex 0.
    pub fn monodromy(&self) -> Mat {
        self.x.iter().skip(1).fold(self.x[0].clone(), |acc, m| acc.mul(m))
    }
}

impl CotangentRep {
    pub fn new(config: QuiverConfig, x: Vec<Mat>, y: Vec<Mat>, i: Mat, j: Mat) -> Result<Self> {
        if x.len() != config.vertices() || y.len() != config.vertices() {
            return Err(Error::InvalidParams(format!(
                "expected {} arrows of each kind",
                config.ell
            )));
        }
        for m in x.iter().chain(&y) {
            check_square(&config, m)?;
        }
        if (i.rows(), i.cols()) != (config.n, 1) || (j.rows(), j.cols()) != (1, config.n) {
            return Err(Error::InvalidParams("i must be n x 1 and j must be 1 x n".into()));
        }
        Ok(CotangentRep { config, x, y, i, j })
    }

    pub fn zero(config: QuiverConfig) -> Self {
        let z = Cyclotomic::zero(config.ell);
        CotangentRep {
            x: vec![config.zero_matrix(); config.vertices()],
            y: vec![config.zero_matrix(); config.vertices()],
            i: Mat::zeros(config.n, 1, &z),
            j: Mat::zeros(1, config.n, &z),
            config,
        }
    }

    /// Coordinates in the order used by [`crate::quiver::Coordinates`]: X_r entries, Y_r
    /// entries, then i, then j.
    pub fn coordinates(&self) -> Vec<Cyclotomic> {
        let mut out = Vec::new();
        for m in self.x.iter().chain(&self.y) {
            out.extend(m.entries().iter().cloned());
        }
        out.extend(self.i.entries().iter().cloned());
        out.extend(self.j.entries().iter().cloned());
        out
    }
}

impl GroupPoint {
    pub fn new(g: Vec<Mat>) -> Result<Self> {
        let inv = g
            .iter()
            .enumerate()
            .map(|(r, m)| m.inverse().map_err(|_| Error::Singular(r)))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupPoint { g, inv })
    }

    pub fn identity(config: QuiverConfig) -> Self {
        let id = config.identity();
        GroupPoint {
            g: vec![id.clone(); config.vertices()],
            inv: vec![id; config.vertices()],
        }
    }

    /// (λI, …, λI).
    pub fn scalar(config: QuiverConfig, lambda: &Cyclotomic) -> Result<Self> {
        let m = config.identity().scale(lambda);
        Self::new(vec![m; config.vertices()])
    }

    pub fn components(&self) -> &[Mat] {
        &self.g
    }

    pub fn inverse_components(&self) -> &[Mat] {
        &self.inv
    }
}

/// Types carrying the action of G.
pub trait GAction: Sized {
    fn g_act(&self, g: &GroupPoint) -> Result<Self>;
}

fn check_group(config: &QuiverConfig, g: &GroupPoint) -> Result<()> {
    if g.g.len() != config.vertices() {
        return Err(Error::InvalidParams(format!(
            "group point has {} components, expected {}",
            g.g.len(),
            config.ell
        )));
    }
    for m in &g.g {
        check_square(config, m)?;
    }
    Ok(())
}

impl GAction for QuiverRep {
    /// X_r ↦ g_r X_r g_{r+1}⁻¹.
    fn g_act(&self, g: &GroupPoint) -> Result<Self> {
        check_group(&self.config, g)?;
        let c = self.config;
        let x = (0..c.vertices())
            .map(|r| g.g[r].mul(&self.x[r]).mul(&g.inv[c.next(r)]))
            .collect();
        Ok(QuiverRep { config: c, x })
    }
}

impl GAction for CotangentRep {
    /// X_r ↦ g_r X_r g_{r+1}⁻¹, Y_r ↦ g_{r+1} Y_r g_r⁻¹, i ↦ g_0 i, j ↦ j g_0⁻¹.
    fn g_act(&self, g: &GroupPoint) -> Result<Self> {
        check_group(&self.config, g)?;
        let c = self.config;
        let x = (0..c.vertices())
            .map(|r| g.g[r].mul(&self.x[r]).mul(&g.inv[c.next(r)]))
            .collect();
        let y = (0..c.vertices())
            .map(|r| g.g[c.next(r)].mul(&self.y[r]).mul(&g.inv[r]))
            .collect();
        Ok(CotangentRep {
            config: c,
            x,
            y,
            i: g.g[0].mul(&self.i),
            j: self.j.mul(&g.inv[0]),
        })
    }
}

pub fn g_act<T: GAction>(g: &GroupPoint, rep: &T) -> Result<T> {
    rep.g_act(g)
}

/// x ∈ h^reg: every x_i ≠ 0 and x_i ≠ η^m x_j for i ≠ j and all m, i.e. x_i^ℓ ≠ x_j^ℓ.
pub fn h_reg_member(x: &[Cyclotomic]) -> bool {
    if x.iter().any(Cyclotomic::is_zero) {
        return false;
    }
    let Some(ell) = x.first().map(Cyclotomic::ell) else {
        return true;
    };
    let powers: Vec<Cyclotomic> = x.iter().map(|v| v.pow(ell as i64).expect("nonzero")).collect();
    (0..x.len()).all(|a| (a + 1..x.len()).all(|b| powers[a] != powers[b]))
}

/// (diag(x), …, diag(x)).
pub fn slice_embed(config: QuiverConfig, x: &[Cyclotomic]) -> Result<QuiverRep> {
    if x.len() != config.n || x.iter().any(|v| v.ell() != config.ell) {
        return Err(Error::InvalidParams(format!(
            "expected {} coordinates in Q(eta_{})",
            config.n, config.ell
        )));
    }
    if !h_reg_member(x) {
        return Err(Error::NotRegular);
    }
    Ok(QuiverRep {
        x: vec![Mat::diag(x); config.vertices()],
        config,
    })
}

/// Coefficient rows of the linear map (f_0, …, f_{ℓ−1}) ↦ (f_r X_r − X_r f_{r+1})_r, with
/// unknown f_r[a][b] at column r·n² + a·n + b.
fn intertwiner_system(rep: &QuiverRep) -> Mat {
    let c = rep.config;
    let (n, l) = (c.n, c.vertices());
    let zero = Cyclotomic::zero(c.ell);
    let mut m = Mat::zeros(l * n * n, l * n * n, &zero);
    let var = |r: usize, a: usize, b: usize| r * n * n + a * n + b;
    for r in 0..l {
        let xr = &rep.x[r];
        let s = c.next(r);
        for a in 0..n {
            for b in 0..n {
                let row = var(r, a, b);
                for k in 0..n {
                    // (f_r X_r)[a][b] = Σ_k f_r[a][k] X_r[k][b]
                    let e = &m[(row, var(r, a, k))] + &xr[(k, b)];
                    m[(row, var(r, a, k))] = e;
                    // (X_r f_s)[a][b] = Σ_k X_r[a][k] f_s[k][b]
                    let e = &m[(row, var(s, k, b))] - &xr[(a, k)];
                    m[(row, var(s, k, b))] = e;
                }
            }
        }
    }
    m
}

/// dim End(rep): solutions of f_r X_r = X_r f_{r+1} for all r.
pub fn end_dim(rep: &QuiverRep) -> usize {
    let m = intertwiner_system(rep);
    m.cols() - m.rank()
}

/// A basis of End(rep), each element given as its ℓ components.
pub fn end_basis(rep: &QuiverRep) -> Vec<Vec<Mat>> {
    let c = rep.config;
    let n = c.n;
    intertwiner_system(rep)
        .nullspace()
        .into_iter()
        .map(|v| {
            (0..c.vertices())
                .map(|r| {
                    let rows = (0..n)
                        .map(|a| v[r * n * n + a * n..r * n * n + (a + 1) * n].to_vec())
                        .collect();
                    Mat::from_rows(rows)
                })
                .collect()
        })
        .collect()
}

fn all_invertible(rep: &QuiverRep) -> bool {
    rep.x.iter().all(|m| !m.det().is_zero())
}

/// All X_r invertible and the monodromy has n distinct nonzero eigenvalues, tested by
/// gcd(p, p′) = 1 and p(0) ≠ 0 for its characteristic polynomial p.
pub fn is_regular(rep: &QuiverRep) -> bool {
    if !all_invertible(rep) {
        return false;
    }
    let p = rep.monodromy().charpoly();
    if p[0].is_zero() {
        return false;
    }
    let g = upoly::gcd(&p, &upoly::derivative(&p));
    upoly::degree(&g) == Some(0)
}

/// Regularity read off the endomorphism algebra: all X_r invertible, dim End = n and the
/// trace form (f, g) ↦ Σ_r Tr(f_r g_r) on End nondegenerate (End semisimple).
pub fn is_regular_by_end(rep: &QuiverRep) -> bool {
    if !all_invertible(rep) {
        return false;
    }
    let basis = end_basis(rep);
    if basis.len() != rep.config.n {
        return false;
    }
    let k = basis.len();
    let zero = Cyclotomic::zero(rep.config.ell);
    let mut form = Mat::zeros(k, k, &zero);
    for a in 0..k {
        for b in 0..k {
            form[(a, b)] = basis[a]
                .iter()
                .zip(&basis[b])
                .fold(zero.clone(), |acc, (f, g)| &acc + &f.mul(g).trace());
        }
    }
    !form.det().is_zero()
}

/// The Krylov determinant det[i, D i, …, D^{n−1} i] with D = diag(x) is nonzero.
pub fn cyclic_vector_test(x: &[Cyclotomic], i: &[Cyclotomic]) -> Result<bool> {
    if !h_reg_member(x) {
        return Err(Error::NotRegular);
    }
    if x.len() != i.len() {
        return Err(Error::InvalidParams("x and i must have the same length".into()));
    }
    let n = x.len();
    if n == 0 {
        return Ok(true);
    }
    let mut cols: Vec<Vec<Cyclotomic>> = vec![i.to_vec()];
    for _ in 1..n {
        let prev = cols.last().expect("nonempty");
        cols.push(prev.iter().zip(x).map(|(v, d)| v * d).collect());
    }
    Ok(!Mat::from_rows(cols).transpose().det().is_zero())
}

/// Vertex components μ_v = X_v Y_v − Y_{v−1} X_{v−1} + [v = 0] i j.
pub fn moment_map(c: &CotangentRep) -> Vec<Mat> {
    let cfg = c.config;
    (0..cfg.vertices())
        .map(|v| {
            let p = cfg.prev(v);
            let m = c.x[v].mul(&c.y[v]).sub(&c.y[p].mul(&c.x[p]));
            if v == 0 {
                m.add(&c.i.mul(&c.j))
            } else {
                m
            }
        })
        .collect()
}

/// Z lies in the closure of the rank-one nilpotent orbit: all 2×2 minors and Tr Z vanish.
pub fn rank_one_closure_test(z: &Mat) -> bool {
    let n = z.rows();
    if !z.trace().is_zero() {
        return false;
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in 0..n {
                for d in c + 1..n {
                    let minor = &(&z[(a, c)] * &z[(b, d)]) - &(&z[(a, d)] * &z[(b, c)]);
                    if !minor.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Stabiliser of (slice_embed(x), i) in G: the group equations g_r X = X g_{r+1},
/// g_0 i = i are affine-linear in g; returns (dimension of the solution space of the
/// homogeneous system, whether the identity solves the affine one). The stabiliser is
/// trivial iff the first is 0 and the second true.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StabilizerReport {
    pub nullity: usize,
    pub identity_fixes: bool,
}

impl StabilizerReport {
    pub fn is_trivial(&self) -> bool {
        self.nullity == 0 && self.identity_fixes
    }
}

pub fn slice_stabilizer(config: QuiverConfig, x: &[Cyclotomic], i: &[Cyclotomic]) -> Result<StabilizerReport> {
    let rep = slice_embed(config, x)?;
    if i.len() != config.n {
        return Err(Error::InvalidParams("i must have n entries".into()));
    }
    let n = config.n;
    let sys = intertwiner_system(&rep);
    let zero = Cyclotomic::zero(config.ell);
    let mut rows: Vec<Vec<Cyclotomic>> = (0..sys.rows()).map(|r| sys.row(r).to_vec()).collect();
    // ξ_0 i = 0: row a is Σ_b ξ_0[a][b] i_b
    for a in 0..n {
        let mut row = vec![zero.clone(); sys.cols()];
        for b in 0..n {
            row[a * n + b] = i[b].clone();
        }
        rows.push(row);
    }
    let nullity = sys.cols() - Mat::from_rows(rows).rank();
    let mut id = vec![zero.clone(); sys.cols()];
    for r in 0..config.vertices() {
        for a in 0..n {
            id[r * n * n + a * n + a] = Cyclotomic::one(config.ell);
        }
    }
    let id_col = Mat::from_rows(id.into_iter().map(|v| vec![v]).collect());
    let col = Mat::from_rows(i.iter().map(|v| vec![v.clone()]).collect());
    let identity_fixes = sys.mul(&id_col).is_zero() && config.identity().mul(&col) == col;
    Ok(StabilizerReport {
        nullity,
        identity_fixes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_cyclotomic;

    fn q(ell: u32, s: &str) -> Cyclotomic {
        parse_cyclotomic(s, ell).unwrap()
    }

    fn cfg(n: usize, ell: u32) -> QuiverConfig {
        QuiverConfig::new(n, ell).unwrap()
    }

    #[test]
    fn h_reg_examples() {
        assert!(h_reg_member(&[q(2, "1"), q(2, "2")]));
        assert!(!h_reg_member(&[q(2, "1"), q(2, "-1")]));
        assert!(!h_reg_member(&[q(2, "0"), q(2, "1")]));
        assert!(!h_reg_member(&[q(3, "1"), q(3, "eta")]));
    }

    #[test]
    fn end_dims() {
        let c = cfg(2, 3);
        assert_eq!(end_dim(&QuiverRep::zero(c)), 12);
        let id = QuiverRep::new(c, vec![c.identity(); 3]).unwrap();
        assert_eq!(end_dim(&id), 4);
        let s = slice_embed(c, &[q(3, "1"), q(3, "2")]).unwrap();
        assert_eq!(end_dim(&s), 2);
        assert!(is_regular(&s));
        assert!(is_regular_by_end(&s));
    }

    #[test]
    fn identity_monodromy_is_not_regular() {
        let c = cfg(2, 2);
        let id = QuiverRep::new(c, vec![c.identity(); 2]).unwrap();
        assert!(!is_regular(&id));
        assert!(!is_regular_by_end(&id));
        assert!(!is_regular(&QuiverRep::zero(c)));
    }

    #[test]
    fn jordan_monodromy_needs_semisimplicity() {
        let c = cfg(2, 2);
        let j = Mat::from_rows(vec![vec![q(2, "2"), q(2, "1")], vec![q(2, "0"), q(2, "2")]]);
        let rep = QuiverRep::new(c, vec![j, c.identity()]).unwrap();
        assert_eq!(end_dim(&rep), 2);
        assert!(!is_regular(&rep));
        assert!(!is_regular_by_end(&rep));
    }

    #[test]
    fn scalar_action() {
        let c = cfg(2, 2);
        let lam = q(2, "3");
        let g = GroupPoint::scalar(c, &lam).unwrap();
        let rep = slice_embed(c, &[q(2, "1"), q(2, "2")]).unwrap();
        assert_eq!(g_act(&g, &rep).unwrap(), rep);
        let mut cot = CotangentRep::zero(c);
        cot.x = rep.x.clone();
        cot.i = Mat::from_rows(vec![vec![q(2, "1")], vec![q(2, "5")]]);
        cot.j = Mat::from_rows(vec![vec![q(2, "2"), q(2, "-1")]]);
        let moved = g_act(&g, &cot).unwrap();
        assert_eq!(moved.x, cot.x);
        assert_eq!(moved.i, cot.i.scale(&lam));
        assert_eq!(moved.j, cot.j.scale(&lam.inv().unwrap()));
        assert!(matches!(GroupPoint::scalar(c, &q(2, "0")), Err(Error::Singular(0))));
    }

    #[test]
    fn cyclic_vectors() {
        let x = [q(2, "1"), q(2, "2")];
        assert!(cyclic_vector_test(&x, &[q(2, "1"), q(2, "1")]).unwrap());
        assert!(!cyclic_vector_test(&x, &[q(2, "0"), q(2, "0")]).unwrap());
        assert!(!cyclic_vector_test(&x, &[q(2, "1"), q(2, "0")]).unwrap());
        assert!(cyclic_vector_test(&[q(2, "1"), q(2, "-1")], &[q(2, "1"), q(2, "1")]).is_err());
    }

    #[test]
    fn moment_map_scalar_case() {
        let c = cfg(1, 2);
        let s = |v: &str| Mat::from_rows(vec![vec![q(2, v)]]);
        let cot = CotangentRep::new(c, vec![s("2"), s("3")], vec![s("5"), s("7")], s("11"), s("13")).unwrap();
        let mu = moment_map(&cot);
        // vertex 0: x0 y0 − y1 x1 + ij, vertex 1: x1 y1 − y0 x0
        assert_eq!(mu[0], s(&(10 - 21 + 143).to_string()));
        assert_eq!(mu[1], s(&(21 - 10).to_string()));
        assert!(moment_map(&CotangentRep::zero(cfg(2, 3))).iter().all(Mat::is_zero));
    }

    #[test]
    fn rank_one_closure() {
        let z =
            |rows: [[&str; 2]; 2]| Mat::from_rows(rows.iter().map(|r| r.iter().map(|v| q(2, v)).collect()).collect());
        assert!(rank_one_closure_test(&z([["0", "0"], ["0", "0"]])));
        assert!(rank_one_closure_test(&z([["0", "1"], ["0", "0"]])));
        assert!(!rank_one_closure_test(&z([["1", "0"], ["0", "-1"]])));
        assert!(!rank_one_closure_test(&z([["1", "0"], ["0", "0"]])));
    }

    #[test]
    fn torus_fixes_slice() {
        let c = cfg(2, 3);
        let rep = slice_embed(c, &[q(3, "1"), q(3, "-3")]).unwrap();
        let t = Mat::diag(&[q(3, "2"), q(3, "eta")]);
        let g = GroupPoint::new(vec![t; 3]).unwrap();
        assert_eq!(g_act(&g, &rep).unwrap(), rep);
    }

    #[test]
    fn stabilizer_of_cyclic_point_is_trivial() {
        let c = cfg(3, 2);
        let x = [q(2, "1"), q(2, "2"), q(2, "3")];
        let one = q(2, "1");
        assert!(slice_stabilizer(c, &x, &[one.clone(), one.clone(), one.clone()])
            .unwrap()
            .is_trivial());
        let r = slice_stabilizer(c, &x, &[one.clone(), one, q(2, "0")]).unwrap();
        assert_eq!(r.nullity, 1);
    }
}
