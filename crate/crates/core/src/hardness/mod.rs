//! SAT to digraph 2-colouring: gadget construction, certificates and colour lifting.

pub mod cnf;
pub mod reduction;

pub use cnf::{parse_dimacs, CnfFormula};
pub use reduction::{
    certify, decode_colouring, encode_assignment, lift_to_k, reduce_sat, CertificateReport, ReductionArtifact, Role,
};
