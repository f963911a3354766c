//! Bipartite perfect matchings and their M-directions: alternating cycles, tight and
//! separating cuts, forcing sets, M-colourings, extendability and Pfaffian checks.

pub mod cuts;
pub mod extend;
pub mod forcing;
pub mod mcolour;
pub mod mdirection;
pub mod perfect;
pub mod pfaffian;

pub use cuts::{
    contract_matching, contract_shore, cut_separation, tight_by_separation, cut_edges, directed_separations_order1, is_directed_separation,
    is_separating_cut, is_solid, is_tight_cut, tight_cut_contraction, CutOracle, CutSpec,
};
pub use extend::{is_k_extendable, is_strongly_k_connected, strong_vertex_connectivity};
pub use forcing::{forcing_number, forcing_partition, is_forcing, ForcingPartition};
pub use mcolour::{m_chromatic, verify_m_colouring, EdgeColouring};
pub use mdirection::{m_direction, m_direction_of, splitting_graph, MDirection};
pub use perfect::{
    alternating_cycles, first_perfect_matching, for_each_alternating_cycle, for_each_perfect_matching, has_perfect_matching,
    is_matching_covered, perfect_matchings, AlternatingCycleList, DEFAULT_MATCHING_CAP,
};
pub use pfaffian::{check_pfaffian_orientation, conformal_cycles, is_pfaffian_bruteforce, is_pfaffian_gf2, PfaffianReport};
