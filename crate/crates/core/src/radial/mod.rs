//! Differential operators on h^reg with rational coefficients, the Γ_n-action on them and
//! conjugation by the twist δ_{k,c}.

mod diffop;
mod ratfunc;
mod twist;

pub use diffop::{
    gamma_act_op, gamma_generators, is_gamma_invariant, op_compose, random_op, reynolds, DiffDegree, DiffOp,
};
pub use ratfunc::RatFunc;
pub use twist::{delta_conjugate, DeltaTwist};
