//! Calogero-Moser points, simultaneous conjugacy, and orbit tangent
//! dimensions.

mod conjugacy;
mod point;
mod tangent;

pub use conjugacy::{intertwiner_basis, pgl_equivalent, ConjugacyWitness};
pub use point::{base_point, is_cm_point, rank_one_defect, CmPoint, RawPoint};
pub use tangent::{
    conjugation_directions, conjugation_rank, infinitesimal_directions, orbit_tangent_dimension,
    Subgroup,
};
