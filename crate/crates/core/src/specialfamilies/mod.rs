//! Explicit M-colourings of odd wheels, staircases and the tricorn, and their composition
//! along tight cuts.

pub mod compose;
pub mod families;

pub use compose::{compose_via_tight_cuts, compose_with, Composition, Piece, ShoreChoice, COMPOSE_VERTEX_LIMIT};
pub use families::{
    find_super_colouring, no_super_colouring_example, staircase_super_colouring, super_colouring_violation,
    tricorn_connectors, tricorn_matching_colouring, tricorn_outer_triangle_edges, wheel_matching_colouring,
    TricornColouring, TricornType,
};
