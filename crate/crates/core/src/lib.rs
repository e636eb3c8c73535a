//! Construction and certification toolkit for hypercube-like interconnection
//! networks.
//!
//! The crate builds the classic recursive topologies (hypercubes, varietal
//! hypercubes, random matched compositions) and the dihedral-product Cayley
//! graph families, and provides an exact combinatorial engine for g-extra
//! connectivity: exhaustive cutset search with certificates, witness-based
//! upper bounds over connected vertex sets, and one mechanical verifier per
//! structural claim about these families.
//!
//! Everything is deterministic: searches are statically partitioned across
//! workers and reduced with order-independent minima, and all randomized
//! checks take explicit 64-bit seeds that are embedded in the reports.

pub mod bitset;
pub mod bounds;
pub mod certificate;
pub mod connsets;
pub mod cutsearch;
pub mod error;
pub mod fvalue;
pub mod graph;
pub mod group;
pub mod report;
pub mod subsets;
pub mod topology;
pub mod verify;

pub use bitset::VertexSet;
pub use bounds::{
    big_component_check, min_star_neighborhood, neighborhood_bound_check,
    upper_bound_by_small_side, BoundOutcome, StarScan,
};
pub use certificate::{CertificateKind, CutsetCertificate, SearchBudget};
pub use cutsearch::{exact_extra_connectivity, hyper_kg_check, is_rg_cutset, ExactOutcome};
pub use error::{Error, Result};
pub use fvalue::{f_monotonicity_check, f_sum_inequality_check, f_value};
pub use graph::{CompactGraph, GraphBuilder, ShapeClass};
pub use group::{
    cayley_graph, coset_decomposition, generating_set, CosetDecomposition, DihedralProductElement,
    GeneratingSet, GroupShape,
};
pub use report::{VerificationReport, VerifyStatus};
pub use topology::{
    compose_hl, delta, g84, gamma, hl_decompose, hypercube, random_hl, vq_by_rule, vq_iso_map,
    vq_recursive, Matching, MatchingPolicy, TopologySpec,
};
pub use verify::{
    verify_big_component, verify_component_lemma, verify_counterexample, verify_hyper_kappa,
    verify_small_g_witness, verify_star_lemma, verify_unique_common_neighbor, verify_vq_delta_iso,
    verify_vq_upper_bound,
};
