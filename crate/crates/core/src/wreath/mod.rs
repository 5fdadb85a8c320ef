//! The wreath product Γ_n = S_n ≀ C_ℓ acting symplectically on V = (C²)ⁿ.

mod classes;
mod element;
mod group_algebra;
mod molien;

pub use classes::{conjugacy_class, reflection_classes, ClassType, ReflectionClass, SympReflection};
pub use element::{all_elements, group_order, Var, WreathElement};
pub use group_algebra::{symmetrizer, GroupAlgebraElement};
pub use molien::{invariant_dim, molien_series};

use crate::error::Result;

pub fn wreath_mul(g: &WreathElement, h: &WreathElement) -> Result<WreathElement> {
    g.checked_mul(h)
}

pub fn act_on_variable(g: &WreathElement, v: Var) -> (crate::scalars::Cyclotomic, Var) {
    g.act_on_variable(v)
}
