use std::collections::HashMap;

use std::collections::BTreeMap;

use super::{all_elements, Var};
use crate::linalg::Echelon;
use crate::poly::{monomials_of_degree, Monomial};
use crate::scalars::{Cyclotomic, Rational, TruncSeries};

/// Hilbert series of C[h ⊕ h*]^{Γ_n}, truncated at `cap`, by exact Molien averaging
/// of 1/det(1 − t·g) over the group.
///
/// For g = (π, a) each cycle of π of length L and exponent sum A contributes
/// (1 − η^A t^L)(1 − η^{−A} t^L) to det(1 − t·g) on V.
pub fn molien_series(n: usize, ell: u32, cap: usize) -> TruncSeries {
    let zero = Cyclotomic::zero(ell);
    let one = Cyclotomic::one(ell);
    let unit = TruncSeries::constant(cap, one.clone());
    // many elements share a cycle type, so cache by it
    let mut cache: HashMap<Vec<(usize, u32)>, TruncSeries<Cyclotomic>> = HashMap::new();
    let mut total = TruncSeries::new(cap, &zero, []);
    let elements = all_elements(n, ell);
    for g in &elements {
        let mut key: Vec<(usize, u32)> = g.cycles().iter().map(|(c, a)| (c.len(), *a)).collect();
        key.sort_unstable();
        let term = cache.entry(key.clone()).or_insert_with(|| {
            let mut det = unit.clone();
            for &(len, a) in &key {
                for e in [a as i64, -(a as i64)] {
                    let mut coeffs = vec![zero.clone(); len + 1];
                    coeffs[0] = one.clone();
                    coeffs[len] = -Cyclotomic::eta_pow(ell, e);
                    let factor = TruncSeries::new(cap, &zero, coeffs);
                    det = det.mul(&factor).expect("equal caps");
                }
            }
            unit.div(&det).expect("det(1 - t g) has constant term 1")
        });
        total = total.add(term).expect("equal caps");
    }
    let inv_order = Cyclotomic::from_rational(ell, Rational::new(1, elements.len() as i64).expect("nonempty group"));
    total
        .scale(&inv_order)
        .try_map(Cyclotomic::as_rational)
        .expect("Molien coefficients are rational")
}

/// dim C[h ⊕ h*]^{Γ_n}_d computed directly: the rank of the Reynolds images of all
/// degree-d monomials in x_1..x_n, y_1..y_n. Independent of [`molien_series`].
pub fn invariant_dim(n: usize, ell: u32, d: usize) -> usize {
    let group = all_elements(n, ell);
    let var = |v: usize| if v < n { Var::X(v) } else { Var::Y(v - n) };
    let slot = |v: Var| match v {
        Var::X(i) => i,
        Var::Y(i) => n + i,
    };
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut echelon: Echelon<Cyclotomic> = Echelon::new();
    for m in monomials_of_degree(2 * n, d) {
        let mut sums: BTreeMap<Monomial, Cyclotomic> = BTreeMap::new();
        for g in &group {
            let mut target = vec![0u16; 2 * n];
            let mut exponent = 0i64;
            for (v, &e) in m.iter().enumerate() {
                let (a, w) = g.act_exponent(var(v));
                exponent += a * e as i64;
                target[slot(w)] = e;
            }
            let entry = sums.entry(target).or_insert_with(|| Cyclotomic::zero(ell));
            *entry = &*entry + &Cyclotomic::eta_pow(ell, exponent);
        }
        let mut row = BTreeMap::new();
        for (target, c) in sums {
            if !c.is_zero() {
                let next = index.len();
                row.insert(*index.entry(target).or_insert(next), c);
            }
        }
        echelon.insert(row);
    }
    echelon.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_ell_two() {
        // ½(1/(1−t)² + 1/(1+t)²)
        assert_eq!(molien_series(1, 2, 4), TruncSeries::from_ints(4, &[1, 0, 3, 0, 5]));
    }

    #[test]
    fn constant_term_is_one() {
        for (n, ell) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
            let m = molien_series(n, ell, 3);
            assert_eq!(m.coeff(0), &Rational::one());
        }
    }

    #[test]
    fn reynolds_count_matches_molien() {
        for (n, ell) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
            let m = molien_series(n, ell, 4);
            for d in 0..=4 {
                assert_eq!(
                    invariant_dim(n, ell, d) as i64,
                    m.coeff(d).to_i64().unwrap(),
                    "n={n} l={ell} d={d}"
                );
            }
        }
    }

    #[test]
    fn no_linear_invariants() {
        assert_eq!(molien_series(2, 2, 1).coeff(1), &Rational::zero());
    }
}
