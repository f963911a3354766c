use crate::error::{Error, Result};
use crate::graph::digraph::Digraph;

/// Bitmask adjacency for digraphs with at most 64 vertices.
#[derive(Clone, Debug)]
pub struct BitDigraph {
    pub n: usize,
    pub out: Vec<u64>,
    pub inn: Vec<u64>,
}

pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | (1u64 << v))
}

pub fn members(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

impl BitDigraph {
    pub fn new(d: &Digraph) -> Result<Self> {
        if d.n() > 64 {
            return Err(Error::TooLarge(format!("{} vertices exceeds the 64-vertex bitmask limit", d.n())));
        }
        let mut out = vec![0u64; d.n()];
        let mut inn = vec![0u64; d.n()];
        for (u, v) in d.edges() {
            out[u] |= 1 << v;
            inn[v] |= 1 << u;
        }
        Ok(BitDigraph { n: d.n(), out, inn })
    }

    /// True iff the subdigraph induced by `mask` has no directed cycle.
    pub fn is_acyclic(&self, mut mask: u64) -> bool {
        loop {
            let mut removed = false;
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.out[v] & mask == 0 || self.inn[v] & mask == 0 {
                    mask &= !(1u64 << v);
                    removed = true;
                }
            }
            if mask == 0 {
                return true;
            }
            if !removed {
                return false;
            }
        }
    }

    /// A directed cycle inside `mask`, if one exists.
    pub fn find_cycle(&self, mask: u64) -> Option<Vec<usize>> {
        // Strip sources and sinks; every remaining vertex has an out-neighbour inside.
        let mut core = mask;
        loop {
            let mut removed = false;
            let mut rest = core;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.out[v] & core == 0 || self.inn[v] & core == 0 {
                    core &= !(1u64 << v);
                    removed = true;
                }
            }
            if !removed {
                break;
            }
        }
        if core == 0 {
            return None;
        }
        let mut pos = vec![usize::MAX; self.n];
        let mut walk = Vec::new();
        let mut v = core.trailing_zeros() as usize;
        loop {
            if pos[v] != usize::MAX {
                return Some(walk[pos[v]..].to_vec());
            }
            pos[v] = walk.len();
            walk.push(v);
            v = (self.out[v] & core).trailing_zeros() as usize;
        }
    }
}
