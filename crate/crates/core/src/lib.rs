//! Symmetry engine for generalized Petersen graphs.
//!
//! The crate builds the graphs P(n, k), computes their automorphism
//! groups two independent ways (a backtracking search over the adjacency
//! structure, and closure of explicitly recorded generators), enumerates
//! subgroups and their conjugacy classes, names each subgroup against a
//! catalog of small groups, and classifies every subgroup as realizable
//! or positively realizable as the symmetry group of a spatial embedding.

#![forbid(unsafe_code)]

pub mod autsearch;
pub mod catalog;
pub mod classifier;
pub mod group;
pub mod identify;
pub mod labels;
pub mod perm;
pub mod petersen;
pub mod registry;
pub mod subgroups;
pub mod vertex;

pub use autsearch::{automorphism_group, automorphisms_of_adjacency, SearchConfig, SearchError};
pub use catalog::model_group;
pub use classifier::{
    classify, classify_all, full_symmetry_group, obstruction_scan, order4_form_check, Answer,
    ClassifierError, Obstruction, ObstructionKind, Verdict,
};
pub use group::{GroupError, GroupTable, PermGroup, DEFAULT_CLOSURE_CAP, TABLE_ORDER_CAP};
pub use identify::{identify_group, identify_table};
pub use labels::GroupLabel;
pub use perm::{CycleType, Perm, PermError};
pub use petersen::{
    exchange_map, rho_map, sigma_map, Edge, EdgeClass, PetersenError, PetersenGraph,
};
pub use registry::{
    admissible, bnk_generators, exceptional_catalog, is_exceptional, k2_class, registry,
    ExceptionalStatus, K2Class, Registry, RegistryError, EXCEPTIONAL_PAIRS,
};
pub use subgroups::{
    all_subgroups, conjugacy_classes_of_subgroups, is_maximal_subgroup, isomorphism_classes,
    SubgroupClass, SubgroupError, SubgroupLattice,
};
pub use vertex::{perm_from_cycles, perm_to_cycles, vertex_count, Ring, Vertex};
