//! Representations of the cyclic quiver Q (vertices 0..ℓ−1, arrows a_r: r → r+1) with
//! dimension vector nδ, its framing Q_∞ and their doubles: the G-action, the regular locus,
//! moment maps, trace-cycle invariants and graded dimensions of invariant rings of fibers.

mod invariants;
mod rep;
mod samples;

pub use invariants::{
    fiber_invariant_dim, i2_contained_in_i3, trace_cycle_basis, trace_identity_defect, Coordinates, CycleWord,
    FiberIdeal, Letter, PolyMat, Space, TraceInvariant, DEFAULT_SIZE_GUARD,
};
pub use rep::{
    cyclic_vector_test, end_basis, end_dim, g_act, h_reg_member, is_regular, is_regular_by_end, moment_map,
    rank_one_closure_test, slice_embed, slice_stabilizer, CotangentRep, GAction, GroupPoint, Mat, QuiverConfig,
    QuiverRep, StabilizerReport,
};
pub use samples::{random_group_point, random_h_reg, regularity_samples, SampleKind};
