//! Switching classes of edge-weighted graphs over `Z_q`, their separability,
//! and the matching notions for partial functions and n-ary quasigroups.

pub mod census;
pub mod cli;
pub mod error;
pub mod family;
pub mod function;
pub mod graph;
pub mod iso;
pub mod json;
pub mod manifest;
pub mod quasigroup;
pub mod rng;
pub mod separability;
pub mod zq;

pub use error::{Error, Result};
pub use family::{make_family, verify_family_critical, FamilyParams, FamilyReport};
pub use graph::{VertexLabeling, WeightedGraph};
pub use iso::{switching_isomorphic, IsoWitness};
pub use separability::{
    is_critical, is_separable, is_separable_set, nonseparable_subgraph_count, nontrivial_separable_sets,
    separable, verify_certificate, CertificateJson, SeparationCertificate,
};
