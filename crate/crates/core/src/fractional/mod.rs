//! Fractional and star dichromatic numbers, feedback-set packings and strong planarity.

pub mod acyclic;
pub mod lp;
pub mod packing;
pub mod planar;
pub mod star;

pub use acyclic::{
    check_fractional, check_fractional_witness, enumerate_acyclic, enumerate_maximal_acyclic, fractional_dichromatic, fractional_over,
    AcyclicSetFamily, FractionalResult, ACYCLIC_VERTEX_LIMIT,
};
pub use lp::Rational;
pub use packing::{check_fvs_packing, fvs_packing};
pub use planar::{
    check_kuratowski, check_rotation_system, is_planar, is_strongly_planar, planar_embedding, Kuratowski,
    KuratowskiWitness, Planarity,
};
pub use star::{check_star_colouring, star_dichromatic, star_dichromatic_check, StarResult, STAR_VERTEX_LIMIT};
