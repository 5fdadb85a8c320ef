use std::collections::BTreeSet;

use serde::Serialize;

use super::{all_elements, WreathElement};
use crate::error::{Error, Result};

/// Which family a symplectic reflection class belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassType {
    /// s_{ij} γ_i γ_j^{-1}
    S,
    /// (σ^m)_i with 1 <= m <= ℓ−1
    C(u32),
}

impl Serialize for ClassType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ClassType::S => serializer.serialize_str("S"),
            ClassType::C(m) => serializer.serialize_str(&format!("C({m})")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SympReflection {
    pub element: WreathElement,
    pub class_type: ClassType,
}

impl SympReflection {
    pub fn new(element: WreathElement, class_type: ClassType) -> Result<Self> {
        if element.fixed_space_codim() != 2 {
            return Err(Error::InvalidParams(format!(
                "{element} is not a symplectic reflection"
            )));
        }
        Ok(SympReflection { element, class_type })
    }
}

/// Row of the class table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReflectionClass {
    #[serde(rename = "type")]
    pub class_type: ClassType,
    pub representative: WreathElement,
    pub size: usize,
}

/// Conjugation orbit of `g`, by brute force over the whole group.
pub fn conjugacy_class(g: &WreathElement) -> BTreeSet<WreathElement> {
    all_elements(g.n(), g.ell()).iter().map(|h| g.conjugate_by(h)).collect()
}

/// The conjugacy classes of symplectic reflections: one of type (S) and ℓ−1 of type
/// (C_ℓ). Class sizes come from orbit enumeration.
pub fn reflection_classes(n: usize, ell: u32) -> Result<Vec<ReflectionClass>> {
    if n < 2 || ell < 2 {
        return Err(Error::InvalidParams(format!(
            "reflection classes need n >= 2 and l >= 2 (got n={n}, l={ell})"
        )));
    }
    let mut out = Vec::with_capacity(ell as usize);
    let s = SympReflection::new(WreathElement::transposition(n, ell, 0, 1), ClassType::S)?;
    out.push(ReflectionClass {
        size: conjugacy_class(&s.element).len(),
        class_type: s.class_type,
        representative: s.element,
    });
    for m in 1..ell {
        let c = SympReflection::new(WreathElement::gamma(n, ell, 0, m as i64), ClassType::C(m))?;
        out.push(ReflectionClass {
            size: conjugacy_class(&c.element).len(),
            class_type: c.class_type,
            representative: c.element,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        assert_eq!(reflection_classes(2, 2).unwrap().len(), 2);
        assert_eq!(reflection_classes(2, 3).unwrap().len(), 3);
        assert!(reflection_classes(1, 3).is_err());
    }

    #[test]
    fn type_s_class_size_n2_l2() {
        // brute force: collect every conjugate of s_12 over the 8 elements
        let s = WreathElement::transposition(2, 2, 0, 1);
        let mut orbit = Vec::new();
        for h in all_elements(2, 2) {
            let c = h.mul(&s).mul(&h.inverse());
            if !orbit.contains(&c) {
                orbit.push(c);
            }
        }
        let classes = reflection_classes(2, 2).unwrap();
        assert_eq!(classes[0].class_type, ClassType::S);
        assert_eq!(classes[0].size, orbit.len());
        assert_eq!(orbit.len(), 2);
    }

    #[test]
    fn non_reflection_rejected() {
        let g = WreathElement::identity(2, 2);
        assert!(SympReflection::new(g, ClassType::S).is_err());
    }

    #[test]
    fn table_json() {
        let rows = reflection_classes(2, 2).unwrap();
        let js = serde_json::to_string(&rows[1]).unwrap();
        assert_eq!(
            js,
            r#"{"type":"C(1)","representative":{"perm":[1,2],"exps":[1,0]},"size":2}"#
        );
    }
}
