//! Permutation groups and graph symmetry.

mod arcs;
mod group;
mod perm;
mod search;
mod subgroups;

pub use arcs::{is_k_arc_transitive, k_arc_regularity, k_arc_regularity_with, k_arcs, ArcRegularity};
pub use group::{enumeration_bound, PermGroup, StabChain, DEFAULT_ENUMERATION_BOUND};
pub use perm::Permutation;
pub use search::{
    are_isomorphic, automorphism_group, automorphism_group_bounded, canonical_form, canonical_form_bounded,
    Canonical, DEFAULT_MAX_VERTICES,
};
pub use subgroups::{
    abelian_type, are_conjugate, block_system_and_kernel, conjugacy_classes, core_of, enumerate_semiregular,
    generalized_dihedral_base, normalizer, regular_normal_subgroups, setwise_stabilizer, BlockSystem,
};
