use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evenness::gf2::Gf2System;
use crate::graph::undirected::UndirectedGraph;
use crate::matching::perfect::{cycle_edges, for_each_alternating_cycle, perfect_matchings, DEFAULT_MATCHING_CAP};

pub const PFAFFIAN_EDGE_LIMIT: usize = 20;

/// Cycles that are M-alternating for some perfect matching M, each listed once, starting at
/// the least vertex and heading to its smaller neighbour on the cycle.
pub fn conformal_cycles(g: &UndirectedGraph) -> Result<Vec<Vec<usize>>> {
    let mut seen = BTreeSet::new();
    for m in perfect_matchings(g, DEFAULT_MATCHING_CAP)? {
        let mut count = 0usize;
        let flow = for_each_alternating_cycle(g, &m, |c| {
            count += 1;
            if count > DEFAULT_MATCHING_CAP {
                return ControlFlow::Break(());
            }
            let mut c = c.to_vec();
            if c[c.len() - 1] < c[1] {
                c[1..].reverse();
            }
            seen.insert(c);
            ControlFlow::Continue(())
        })?;
        if flow.is_break() {
            return Err(Error::EnumerationCapExceeded { cap: DEFAULT_MATCHING_CAP, seen: count });
        }
    }
    Ok(seen.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PfaffianReport {
    pub pfaffian: bool,
    /// A Pfaffian orientation as directed pairs, when one exists.
    pub orientation: Option<Vec<(usize, usize)>>,
    pub conformal_cycles: usize,
}

/// (edge mask, parity of low-to-high steps) for each conformal cycle.
fn cycle_rows(g: &UndirectedGraph, cycles: &[Vec<usize>]) -> Vec<(u64, u32)> {
    cycles
        .iter()
        .map(|c| {
            let mask = cycle_edges(c).into_iter().fold(0u64, |m, (u, v)| m | 1 << g.edge_index(u, v).expect("edge"));
            let up = (0..c.len()).filter(|&i| c[i] < c[(i + 1) % c.len()]).count() as u32;
            (mask, up % 2)
        })
        .collect()
}

/// Bit e set means edge e points from its larger to its smaller end.
fn orientation_from_bits(g: &UndirectedGraph, bits: u64) -> Vec<(usize, usize)> {
    g.edges().into_iter().enumerate().map(|(i, (u, v))| if bits >> i & 1 == 1 { (v, u) } else { (u, v) }).collect()
}

/// Every conformal cycle has an odd number of edges pointing each way round it.
pub fn check_pfaffian_orientation(g: &UndirectedGraph, orientation: &[(usize, usize)]) -> Result<Option<Vec<usize>>> {
    if orientation.len() != g.m() {
        return Err(Error::InvalidParameter("orientation must cover every edge once".into()));
    }
    let set: BTreeSet<(usize, usize)> = orientation.iter().copied().collect();
    for c in conformal_cycles(g)? {
        let forward = (0..c.len()).filter(|&i| set.contains(&(c[i], c[(i + 1) % c.len()]))).count();
        if forward % 2 == 0 {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Tries all 2^|E| orientations against the conformal cycles.
pub fn is_pfaffian_bruteforce(g: &UndirectedGraph) -> Result<PfaffianReport> {
    if g.m() > PFAFFIAN_EDGE_LIMIT {
        return Err(Error::TooLarge(format!("{} edges exceeds limit {PFAFFIAN_EDGE_LIMIT}", g.m())));
    }
    let cycles = conformal_cycles(g)?;
    let rows = cycle_rows(g, &cycles);
    let found = (0u64..1 << g.m()).find(|&x| rows.iter().all(|&(mask, up)| ((mask & x).count_ones() + up) % 2 == 1));
    Ok(PfaffianReport {
        pfaffian: found.is_some(),
        orientation: found.map(|x| orientation_from_bits(g, x)),
        conformal_cycles: cycles.len(),
    })
}

/// Same question as a GF(2) system with one equation per conformal cycle.
pub fn is_pfaffian_gf2(g: &UndirectedGraph) -> Result<PfaffianReport> {
    if g.m() > 64 {
        return Err(Error::TooLarge(format!("{} edges", g.m())));
    }
    let cycles = conformal_cycles(g)?;
    let mut sys = Gf2System::new(g.m());
    for (mask, up) in cycle_rows(g, &cycles) {
        let vars: Vec<usize> = (0..g.m()).filter(|&i| mask >> i & 1 == 1).collect();
        if sys.insert(&vars, up == 0).is_err() {
            return Ok(PfaffianReport { pfaffian: false, orientation: None, conformal_cycles: cycles.len() });
        }
    }
    let bits = sys.solution().into_iter().enumerate().fold(0u64, |acc, (i, b)| acc | (b as u64) << i);
    Ok(PfaffianReport { pfaffian: true, orientation: Some(orientation_from_bits(g, bits)), conformal_cycles: cycles.len() })
}
