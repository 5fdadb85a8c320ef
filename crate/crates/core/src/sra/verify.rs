use std::sync::Arc;

use serde::Serialize;

use super::engine::{group_of, random_monomial, Sra, SraElement};
use super::SraParams;
use crate::error::Result;
use crate::sample;
use crate::scalars::{Cyclotomic, Rational};
use crate::wreath::{GroupAlgebraElement, Var, WreathElement};

/// Outcome of checking one relation instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, relation: String, lhs: Result<SraElement>, rhs: Result<SraElement>) {
        let passed = matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b);
        self.checks.push(RelationCheck { relation, passed });
    }
}

/// The right-hand side of [y_i, x_j], assembled from γ_i, γ_j and s_ij as products in the
/// group (not from the engine's commutator table).
fn expected_commutator(params: &SraParams, i: usize, j: usize) -> GroupAlgebraElement {
    let (n, ell) = (params.n, params.ell);
    let half_k = params.k.scale(&Rational::new(1, 2).expect("nonzero"));
    let gamma = |idx: usize, m: i64| WreathElement::gamma(n, ell, idx, m);
    let mut rhs = GroupAlgebraElement::zero(n, ell);
    if i == j {
        rhs.add_term(WreathElement::identity(n, ell), &Cyclotomic::one(ell));
        for jj in (0..n).filter(|&jj| jj != i) {
            let s = WreathElement::transposition(n, ell, i, jj);
            for m in 0..ell as i64 {
                let g = s.mul(&gamma(i, m)).mul(&gamma(jj, m).inverse());
                rhs.add_term(g, &half_k);
            }
        }
        for m in 1..ell {
            rhs.add_term(gamma(i, m as i64), params.c_m(m));
        }
    } else {
        let s = WreathElement::transposition(n, ell, i, j);
        for m in 0..ell as i64 {
            let g = s.mul(&gamma(i, m)).mul(&gamma(j, m).inverse());
            let coef = -&(&half_k * &Cyclotomic::eta_pow(ell, -m));
            rhs.add_term(g, &coef);
        }
    }
    rhs
}

fn var_elem(alg: &Arc<Sra>, v: Var) -> SraElement {
    match v {
        Var::X(i) => SraElement::x(alg, i),
        Var::Y(i) => SraElement::y(alg, i),
    }
}

/// Checks every defining relation on generators through the product:
/// commuting x's, commuting y's, [y_i, x_j] against its stated right-hand side, and
/// g·v = g(v)·g for each group generator and each variable.
pub fn verify_relations(params: &SraParams) -> RelationReport {
    let alg = Sra::new(params.clone());
    let (n, ell) = (params.n, params.ell);
    let mut report = RelationReport::default();
    for i in 0..n {
        for j in 0..n {
            let (xi, xj, yi, yj) = (
                SraElement::x(&alg, i),
                SraElement::x(&alg, j),
                SraElement::y(&alg, i),
                SraElement::y(&alg, j),
            );
            if i < j {
                report.push(
                    format!("x{}x{} = x{}x{}", i + 1, j + 1, j + 1, i + 1),
                    xi.mul(&xj),
                    xj.mul(&xi),
                );
                report.push(
                    format!("y{}y{} = y{}y{}", i + 1, j + 1, j + 1, i + 1),
                    yi.mul(&yj),
                    yj.mul(&yi),
                );
            }
            let lhs = yi.mul(&xj).and_then(|a| xj.mul(&yi).and_then(|b| a.sub(&b)));
            let rhs = SraElement::from_group_algebra(&alg, &expected_commutator(params, i, j));
            report.push(format!("[y{}, x{}]", i + 1, j + 1), lhs, Ok(rhs));
        }
    }
    let mut generators = vec![WreathElement::gamma(n, ell, 0, 1)];
    for i in 0..n.saturating_sub(1) {
        generators.push(WreathElement::transposition(n, ell, i, i + 1));
    }
    for g in &generators {
        let ge = SraElement::group(&alg, g.clone());
        for i in 0..n {
            for v in [Var::X(i), Var::Y(i)] {
                let (c, image) = g.act_on_variable(v);
                let lhs = ge.mul(&var_elem(&alg, v));
                let rhs = var_elem(&alg, image).mul(&ge).map(|e| e.scale(&c));
                report.push(format!("{g} · {v:?}"), lhs, rhs);
            }
        }
    }
    report
}

#[derive(Debug, Clone, Serialize)]
pub struct AssociativityReport {
    pub trials: usize,
    pub max_degree: usize,
    /// Triples (u, v, w) with (uv)w ≠ u(vw), rendered as text.
    pub failures: Vec<[String; 3]>,
    /// Triples whose products ran out of rewriting fuel.
    pub errors: Vec<String>,
}

impl AssociativityReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.errors.is_empty()
    }
}

/// Samples `trials` triples of random basis elements x^a y^b w with (x, y)-degree at most
/// `max_degree` and compares both bracketings exactly.
pub fn verify_associativity(params: &SraParams, max_degree: usize, trials: usize, seed: u64) -> AssociativityReport {
    let alg = Sra::new(params.clone());
    let group = group_of(&alg);
    let mut rng = sample::rng(seed);
    let mut report = AssociativityReport {
        trials,
        max_degree,
        failures: Vec::new(),
        errors: Vec::new(),
    };
    for _ in 0..trials {
        let u = random_monomial(&alg, &mut rng, max_degree, &group);
        let v = random_monomial(&alg, &mut rng, max_degree, &group);
        let w = random_monomial(&alg, &mut rng, max_degree, &group);
        let left = u.mul(&v).and_then(|uv| uv.mul(&w));
        let right = v.mul(&w).and_then(|vw| u.mul(&vw));
        match (left, right) {
            (Ok(l), Ok(r)) if l == r => {}
            (Ok(_), Ok(_)) => report.failures.push([u.to_string(), v.to_string(), w.to_string()]),
            (Err(e), _) | (_, Err(e)) => report.errors.push(e.to_string()),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_cyclotomic;

    fn params(n: usize, ell: u32, k: &str, c: &[&str]) -> SraParams {
        let c = c.iter().map(|s| parse_cyclotomic(s, ell).unwrap()).collect();
        SraParams::new(n, ell, parse_cyclotomic(k, ell).unwrap(), c).unwrap()
    }

    #[test]
    fn relations_small_cases() {
        for p in [
            params(2, 2, "3/2", &["-1/3"]),
            params(2, 3, "2", &["1/2 + eta", "eta^2"]),
            params(3, 2, "-1", &["5"]),
        ] {
            let r = verify_relations(&p);
            assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn associativity_n2_l2() {
        let p = params(2, 2, "3/2", &["-1/3"]);
        let r = verify_associativity(&p, 3, 60, 42);
        assert!(r.all_passed(), "{:?}", r.failures);
    }

    #[test]
    fn associativity_n2_l3() {
        let p = params(2, 3, "2/3", &["1 + eta", "-1/2"]);
        let r = verify_associativity(&p, 2, 40, 7);
        assert!(r.all_passed(), "{:?}", r.failures);
    }
}
