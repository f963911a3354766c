//! Constructive 2-colouring of non-even digraphs, verification and exact dichromatic numbers.

pub mod colouring;
pub mod reduce;

pub use colouring::{
    check_classes, exact_dichromatic, exact_dichromatic_with_limit, fvs_pair_from_colouring, verify_colouring,
    ColouringCheck, VertexColouring, DEFAULT_EXACT_LIMIT,
};
pub use reduce::{three_vertex_contract, two_color, two_color_checked, ReductionStep, ReductionTrace, TraceNode, TwoColouring};
