use std::collections::BTreeMap;
use std::sync::Arc;

use super::engine::{PbwKey, Sra, SraElement};
use super::SraParams;
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::poly::monomials_of_degree;
use crate::scalars::Cyclotomic;
use crate::wreath::{symmetrizer, WreathElement};

/// The symmetrizing idempotent e = |Γ_n|⁻¹ Σ g inside H_{k,c}.
pub fn idempotent(alg: &Arc<Sra>) -> SraElement {
    SraElement::from_group_algebra(alg, &symmetrizer(alg.n(), alg.ell()))
}

/// An element of eH_{k,c}e.
#[derive(Clone, PartialEq, Debug)]
pub struct SphericalElement {
    inner: SraElement,
}

impl SphericalElement {
    /// Fails with `NotSpherical` unless e·u·e = u.
    pub fn new(inner: SraElement) -> Result<Self> {
        let e = idempotent(inner.algebra());
        if e.mul(&inner)?.mul(&e)? != inner {
            return Err(Error::NotSpherical);
        }
        Ok(SphericalElement { inner })
    }

    /// e·u·e for arbitrary u.
    pub fn compress(u: &SraElement) -> Result<Self> {
        let e = idempotent(u.algebra());
        Ok(SphericalElement {
            inner: e.mul(u)?.mul(&e)?,
        })
    }

    /// The unit e.
    pub fn unit(alg: &Arc<Sra>) -> Self {
        SphericalElement { inner: idempotent(alg) }
    }

    pub fn inner(&self) -> &SraElement {
        &self.inner
    }

    pub fn into_inner(self) -> SraElement {
        self.inner
    }
}

pub fn spherical_product(u: &SphericalElement, v: &SphericalElement) -> Result<SphericalElement> {
    Ok(SphericalElement {
        inner: u.inner.mul(&v.inner)?,
    })
}

/// dim F_d / F_{d−1} of eH_{k,c}e: the rank of the degree-d parts of e·x^a y^b·e over
/// all |a| + |b| = d.
pub fn spherical_graded_dim(params: &SraParams, d: usize) -> Result<usize> {
    let alg = Sra::new(params.clone());
    let n = params.n;
    let e = idempotent(&alg);
    let mut index: BTreeMap<PbwKey, usize> = BTreeMap::new();
    let mut echelon: Echelon<Cyclotomic> = Echelon::new();
    for exps in monomials_of_degree(2 * n, d) {
        let (x, y) = exps.split_at(n);
        let id = WreathElement::identity(n, params.ell);
        let m = SraElement::monomial(&alg, x.to_vec(), y.to_vec(), id, Cyclotomic::one(alg.ell()));
        let top = e.mul(&m)?.mul(&e)?.homogeneous_part(d);
        let mut row = BTreeMap::new();
        for (k, c) in top.terms() {
            let next = index.len();
            let col = *index.entry(k.clone()).or_insert(next);
            row.insert(col, c.clone());
        }
        echelon.insert(row);
    }
    Ok(echelon.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_cyclotomic;
    use crate::wreath::molien_series;

    fn params(k: &str, c: &str) -> SraParams {
        SraParams::new(
            2,
            2,
            parse_cyclotomic(k, 2).unwrap(),
            vec![parse_cyclotomic(c, 2).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn e_is_idempotent_unit() {
        let alg = Sra::new(params("1", "2"));
        let e = SphericalElement::unit(&alg);
        assert_eq!(spherical_product(&e, &e).unwrap(), e);
        let x = SraElement::x(&alg, 0).add(&SraElement::x(&alg, 1)).unwrap();
        let p = SphericalElement::compress(&x.mul(&x).unwrap()).unwrap();
        assert_eq!(spherical_product(&p, &e).unwrap(), p);
        assert_eq!(spherical_product(&e, &p).unwrap(), p);
    }

    #[test]
    fn rejects_non_spherical() {
        let alg = Sra::new(params("1", "2"));
        assert!(matches!(
            SphericalElement::new(SraElement::x(&alg, 0)),
            Err(Error::NotSpherical)
        ));
        assert!(SphericalElement::new(idempotent(&alg)).is_ok());
    }

    #[test]
    fn graded_dims_match_molien() {
        let mol = molien_series(2, 2, 4);
        for d in 0..=4 {
            let got = spherical_graded_dim(&params("3/2", "-1"), d).unwrap();
            assert_eq!(got as i64, mol.coeff(d).to_i64().unwrap(), "d = {d}");
        }
        assert_eq!(spherical_graded_dim(&params("0", "0"), 1).unwrap(), 0);
    }
}
