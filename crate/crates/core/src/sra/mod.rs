//! The symplectic reflection algebra H_{k,c} for Γ_n = S_n ≀ C_ℓ and its spherical
//! subalgebra eH_{k,c}e.

mod engine;
mod params;
mod spherical;
mod verify;

pub use engine::{commutator, random_monomial, sra_product, Exps, PbwKey, Sra, SraElement, DEFAULT_FUEL};
pub use params::SraParams;
pub use spherical::{idempotent, spherical_graded_dim, spherical_product, SphericalElement};
pub use verify::{verify_associativity, verify_relations, AssociativityReport, RelationCheck, RelationReport};
