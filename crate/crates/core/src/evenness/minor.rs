//! Bounded search for odd bicycles as butterfly minors.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::structure::{
    butterfly_contract, is_acyclic, is_butterfly_contractible, is_strongly_connected, strong_components,
};
use crate::graph::Digraph;

/// One minor operation, expressed in the vertex ids of the digraph it is applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinorOp {
    DeleteVertex(usize),
    DeleteEdge(usize, usize),
    Contract(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub ops: Vec<MinorOp>,
    pub result: Digraph,
}

pub fn apply_op(d: &Digraph, op: MinorOp) -> Result<Digraph> {
    match op {
        MinorOp::DeleteVertex(v) => {
            if v >= d.n() {
                return Err(Error::InvalidParameter(format!("no vertex {v}")));
            }
            Ok(d.remove_vertices(&[v]).0)
        }
        MinorOp::DeleteEdge(u, v) => {
            if !d.has_edge(u, v) {
                return Err(Error::InvalidParameter(format!("no edge ({u}, {v})")));
            }
            Ok(d.remove_edges(&[(u, v)]))
        }
        MinorOp::Contract(u, v) => Ok(butterfly_contract(d, u, v)?.0),
    }
}

pub fn replay_minor(d: &Digraph, ops: &[MinorOp]) -> Result<Digraph> {
    ops.iter().try_fold(d.clone(), |cur, &op| apply_op(&cur, op))
}

/// Bidirected cycle of odd length >= 3.
pub fn is_odd_bicycle(d: &Digraph) -> bool {
    let n = d.n();
    n >= 3
        && n % 2 == 1
        && d.m() == 2 * n
        && (0..n).all(|v| d.out_degree(v) == 2 && d.out(v).iter().all(|&w| d.has_edge(w, v)))
        && is_strongly_connected(d)
}

/// Adjacency code with bit u * n + v set for each edge (u, v); needs n <= 8.
fn code(d: &Digraph, perm: &[usize]) -> u64 {
    let n = d.n();
    let mut bits = 0u64;
    for u in 0..n {
        for &v in d.out(u) {
            bits |= 1 << (perm[u] * n + perm[v]);
        }
    }
    bits
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..=k {
                let mut q = p.clone();
                q.insert(i, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Key {
    Small(usize, u64),
    Large(Digraph),
}

/// Memoised search; the memo can be shared across many queries.
pub struct MinorSearch {
    memo: HashMap<Key, bool>,
    budget: usize,
    perms: Vec<Vec<Vec<usize>>>,
    explored: usize,
}

impl Default for MinorSearch {
    fn default() -> Self {
        Self::new(2_000_000)
    }
}

const CANONICAL_UP_TO: usize = 6;

impl MinorSearch {
    /// `budget` bounds the number of distinct states explored per query.
    pub fn new(budget: usize) -> Self {
        let perms = (0..=CANONICAL_UP_TO).map(all_perms).collect();
        MinorSearch { memo: HashMap::new(), budget, perms, explored: 0 }
    }

    fn key(&self, d: &Digraph) -> Key {
        let n = d.n();
        if n <= CANONICAL_UP_TO {
            Key::Small(n, self.perms[n].iter().map(|p| code(d, p)).min().unwrap_or(0))
        } else if n <= 8 {
            Key::Small(n, code(d, &(0..n).collect::<Vec<_>>()))
        } else {
            Key::Large(d.clone())
        }
    }

    fn ops(d: &Digraph) -> impl Iterator<Item = MinorOp> + '_ {
        let edges = d.edges();
        let dels = (0..d.n()).map(MinorOp::DeleteVertex);
        let cons: Vec<MinorOp> = edges
            .iter()
            .filter(|&&(u, v)| is_butterfly_contractible(d, u, v))
            .map(|&(u, v)| MinorOp::Contract(u, v))
            .collect();
        let edels: Vec<MinorOp> = edges.iter().map(|&(u, v)| MinorOp::DeleteEdge(u, v)).collect();
        dels.chain(cons).chain(edels)
    }

    fn hopeless(d: &Digraph) -> bool {
        d.n() < 3 || d.m() < 6 || is_acyclic(d)
    }

    fn contains(&mut self, d: &Digraph) -> Result<bool> {
        if is_odd_bicycle(d) {
            return Ok(true);
        }
        if Self::hopeless(d) {
            return Ok(false);
        }
        let comps = strong_components(d);
        if comps.len() > 1 {
            // odd bicycles are strongly connected, so a minor lives inside one component
            for c in comps.iter().filter(|c| c.len() >= 3) {
                if self.contains(&d.induced(c).0)? {
                    return Ok(true);
                }
            }
            return Ok(false);
        }
        let k = self.key(d);
        if let Some(&r) = self.memo.get(&k) {
            return Ok(r);
        }
        self.explored += 1;
        if self.explored > self.budget {
            return Err(Error::SearchBudgetExceeded);
        }
        let mut found = false;
        for op in Self::ops(d) {
            let child = apply_op(d, op).expect("valid op");
            if self.contains(&child)? {
                found = true;
                break;
            }
        }
        self.memo.insert(k, found);
        Ok(found)
    }

    /// A replayable operation sequence reaching an odd bicycle, or None if none exists.
    pub fn find(&mut self, d: &Digraph) -> Result<Option<MinorWitness>> {
        self.explored = 0;
        if !self.contains(d)? {
            return Ok(None);
        }
        let mut ops = Vec::new();
        let mut cur = d.clone();
        while !is_odd_bicycle(&cur) {
            let mut next = None;
            for op in Self::ops(&cur) {
                let child = apply_op(&cur, op).expect("valid op");
                if self.contains(&child)? {
                    next = Some((op, child));
                    break;
                }
            }
            let (op, child) = next.expect("memo says a child contains a bicycle");
            ops.push(op);
            cur = child;
        }
        Ok(Some(MinorWitness { ops, result: cur }))
    }
}

pub fn find_odd_bicycle_minor(d: &Digraph, budget: usize) -> Result<Option<MinorWitness>> {
    MinorSearch::new(budget).find(d)
}
