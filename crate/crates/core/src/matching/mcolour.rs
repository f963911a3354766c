use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::bipartite::mates;
use crate::graph::undirected::{norm, UndirectedGraph};
use crate::matching::perfect::{for_each_alternating_cycle, DEFAULT_MATCHING_CAP};

/// Colours on undirected edges, keyed by normalised pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColouring {
    #[serde(with = "crate::graph::edgemap")]
    pub colours: BTreeMap<(usize, usize), usize>,
}

impl EdgeColouring {
    pub fn from_pairs<I: IntoIterator<Item = ((usize, usize), usize)>>(pairs: I) -> Self {
        EdgeColouring { colours: pairs.into_iter().map(|((u, v), c)| (norm(u, v), c)).collect() }
    }

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.colours.get(&norm(u, v)).copied()
    }

    pub fn set(&mut self, u: usize, v: usize, c: usize) {
        self.colours.insert(norm(u, v), c);
    }

    pub fn restrict(&self, edges: &[(usize, usize)]) -> EdgeColouring {
        EdgeColouring::from_pairs(edges.iter().filter_map(|&(u, v)| self.get(u, v).map(|c| ((u, v), c))))
    }

    pub fn as_lines(&self) -> Vec<(usize, usize, usize)> {
        self.colours.iter().map(|(&(u, v), &c)| (u, v, c)).collect()
    }
}

/// An M-alternating cycle whose matching edges share a colour, if there is one.
pub fn verify_m_colouring(g: &UndirectedGraph, m: &[(usize, usize)], c: &EdgeColouring) -> Result<Option<Vec<usize>>> {
    mates(g, m)?;
    if let Some(&(u, v)) = m.iter().find(|&&(u, v)| c.get(u, v).is_none()) {
        return Err(Error::InvalidParameter(format!("matching edge {{{u}, {v}}} has no colour")));
    }
    let mut bad = None;
    let _ = for_each_alternating_cycle(g, m, |cyc| {
        let first = c.get(cyc[0], cyc[1]);
        if cyc.chunks(2).all(|p| c.get(p[0], p[1]) == first) {
            bad = Some(cyc.to_vec());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    })?;
    Ok(bad)
}

/// Matching-edge index sets of all alternating cycles, with the sorted matching edges.
fn cycle_sets(g: &UndirectedGraph, m: &[(usize, usize)]) -> Result<(Vec<(usize, usize)>, Vec<u64>)> {
    let mut edges: Vec<(usize, usize)> = m.iter().map(|&(u, v)| norm(u, v)).collect();
    edges.sort_unstable();
    if edges.len() > 64 {
        return Err(Error::TooLarge(format!("{} matching edges", edges.len())));
    }
    let mut sets = Vec::new();
    let flow = for_each_alternating_cycle(g, m, |c| {
        if sets.len() == DEFAULT_MATCHING_CAP {
            return ControlFlow::Break(());
        }
        sets.push(c.chunks(2).fold(0u64, |acc, p| acc | 1 << edges.binary_search(&norm(p[0], p[1])).expect("edge")));
        ControlFlow::Continue(())
    })?;
    if flow.is_break() {
        return Err(Error::EnumerationCapExceeded { cap: DEFAULT_MATCHING_CAP, seen: sets.len() });
    }
    sets.sort_unstable();
    sets.dedup();
    Ok((edges, sets))
}

pub const M_CHROMATIC_LIMIT: usize = 16;

/// Least k with an M-colouring in which no alternating cycle is monochromatic.
pub fn m_chromatic(g: &UndirectedGraph, m: &[(usize, usize)]) -> Result<(usize, EdgeColouring)> {
    let (edges, sets) = cycle_sets(g, m)?;
    let k_edges = edges.len();
    if k_edges > M_CHROMATIC_LIMIT {
        return Err(Error::TooLarge(format!("{k_edges} matching edges exceeds limit {M_CHROMATIC_LIMIT}")));
    }
    // cycles grouped by their highest edge, checked once that edge is coloured
    let mut by_top: Vec<Vec<u64>> = vec![Vec::new(); k_edges];
    for &s in &sets {
        by_top[63 - s.leading_zeros() as usize].push(s);
    }
    fn rec(i: usize, k: usize, by_top: &[Vec<u64>], classes: &mut [u64], col: &mut [usize]) -> bool {
        if i == col.len() {
            return true;
        }
        let used = classes.iter().filter(|&&c| c != 0).count();
        for c in 0..k.min(used + 1) {
            classes[c] |= 1 << i;
            if by_top[i].iter().all(|&s| s & classes[c] != s) {
                col[i] = c;
                if rec(i + 1, k, by_top, classes, col) {
                    return true;
                }
            }
            classes[c] &= !(1 << i);
        }
        false
    }
    for k in 1..=k_edges.max(1) {
        let mut classes = vec![0u64; k];
        let mut col = vec![0usize; k_edges];
        if rec(0, k, &by_top, &mut classes, &mut col) {
            return Ok((k, EdgeColouring::from_pairs(edges.into_iter().zip(col))));
        }
    }
    unreachable!("one colour per edge is always proper")
}
