use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evenness::is_noneven;
use crate::graph::bipartite::{mates, BipartiteMatchingGraph};
use crate::graph::undirected::{norm, UndirectedGraph};
use crate::matching::mdirection::m_direction;
use crate::matching::perfect::{find_alternating_cycle, for_each_alternating_cycle, DEFAULT_MATCHING_CAP};
use crate::twocolor::{two_color, VertexColouring};

fn check_subset(g: &UndirectedGraph, m: &[(usize, usize)], s: &[(usize, usize)]) -> Result<()> {
    mates(g, m)?;
    let ms: Vec<(usize, usize)> = m.iter().map(|&(u, v)| norm(u, v)).collect();
    if s.iter().any(|&(u, v)| !ms.contains(&norm(u, v))) {
        return Err(Error::NotSubsetOfMatching);
    }
    Ok(())
}

/// S is forcing iff no M-alternating cycle avoids V(S).
pub fn is_forcing(g: &UndirectedGraph, m: &[(usize, usize)], s: &[(usize, usize)]) -> Result<bool> {
    check_subset(g, m, s)?;
    let avoid: Vec<usize> = s.iter().flat_map(|&(u, v)| [u, v]).collect();
    Ok(find_alternating_cycle(g, m, &avoid)?.is_none())
}

pub const FORCING_MATCHING_LIMIT: usize = 24;

/// Smallest forcing set, by a minimum hitting set over the alternating cycles' matching edges.
pub fn forcing_number(g: &UndirectedGraph, m: &[(usize, usize)]) -> Result<(usize, Vec<(usize, usize)>)> {
    mates(g, m)?;
    let mut edges: Vec<(usize, usize)> = m.iter().map(|&(u, v)| norm(u, v)).collect();
    edges.sort_unstable();
    if edges.len() > FORCING_MATCHING_LIMIT {
        return Err(Error::TooLarge(format!("{} matching edges exceeds limit {FORCING_MATCHING_LIMIT}", edges.len())));
    }
    let index = |u: usize, v: usize| edges.binary_search(&norm(u, v)).expect("matching edge");
    let mut sets: Vec<u32> = Vec::new();
    let mut count = 0usize;
    let flow = for_each_alternating_cycle(g, m, |c| {
        count += 1;
        if count > DEFAULT_MATCHING_CAP {
            return ControlFlow::Break(());
        }
        sets.push(c.chunks(2).fold(0u32, |acc, p| acc | 1 << index(p[0], p[1])));
        ControlFlow::Continue(())
    })?;
    if flow.is_break() {
        return Err(Error::EnumerationCapExceeded { cap: DEFAULT_MATCHING_CAP, seen: count });
    }
    sets.sort_unstable();
    sets.dedup();
    let k = edges.len();
    for size in 0..=k {
        let mut best = None;
        crate::evenness::packing::for_each_subset(k, size, &mut |mask| {
            if best.is_none() && sets.iter().all(|&c| (c as u64) & mask != 0) {
                best = Some(mask);
            }
        });
        if let Some(mask) = best {
            let s = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            return Ok((size, s));
        }
    }
    unreachable!("the whole matching is forcing")
}

/// Two disjoint forcing sets covering M, from a 2-colouring of the M-direction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingPartition {
    pub parts: [Vec<(usize, usize)>; 2],
    pub colouring: VertexColouring,
}

/// Matching edges coloured i form part i; each part is the complement of an acyclic colour
/// class, so each is forcing.
pub fn forcing_partition(g: &BipartiteMatchingGraph) -> Result<ForcingPartition> {
    let md = m_direction(g);
    if !is_noneven(&md.digraph)?.is_noneven() {
        return Err(Error::NotPfaffian);
    }
    let colouring = two_color(&md.digraph)?.colouring;
    let mut parts: [Vec<(usize, usize)>; 2] = [Vec::new(), Vec::new()];
    for (v, &c) in colouring.colours.iter().enumerate() {
        parts[c].push(md.vertex_to_edge[v]);
    }
    for p in &parts {
        if !is_forcing(&g.base, &g.matching, p)? {
            return Err(Error::CertificateFailed("a part of the forcing partition is not forcing".into()));
        }
    }
    Ok(ForcingPartition { parts, colouring })
}
