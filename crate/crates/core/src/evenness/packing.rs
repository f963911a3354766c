use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evenness::cycles::{enumerate_cycles, DEFAULT_CYCLE_CAP};
use crate::graph::bits::{full_mask, members, BitDigraph};
use crate::graph::Digraph;

/// Maximum number of disjoint cycles and minimum transversal, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingReport {
    pub nu: usize,
    pub tau: usize,
    pub packing: Vec<Vec<usize>>,
    pub transversal: Vec<usize>,
}

pub const PACKING_VERTEX_LIMIT: usize = 24;

pub fn cycle_packing_and_transversal(d: &Digraph) -> Result<PackingReport> {
    if d.n() > PACKING_VERTEX_LIMIT {
        return Err(Error::TooLarge(format!("{} vertices exceeds packing limit {PACKING_VERTEX_LIMIT}", d.n())));
    }
    let list = enumerate_cycles(d, DEFAULT_CYCLE_CAP);
    if !list.complete {
        return Err(Error::EnumerationCapExceeded { cap: list.cap, seen: list.cycles.len() });
    }
    // Keep one cycle per vertex set, smallest sets first.
    let mut sets: Vec<(u64, usize)> = Vec::new();
    for (i, c) in list.cycles.iter().enumerate() {
        let m = c.iter().fold(0u64, |m, &v| m | 1 << v);
        if !sets.iter().any(|&(s, _)| s == m) {
            sets.push((m, i));
        }
    }
    sets.sort_by_key(|&(m, i)| (m.count_ones(), i));

    fn pack(sets: &[(u64, usize)], from: usize, used: u64, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        for j in from..sets.len() {
            if sets[j].0 & used == 0 {
                cur.push(j);
                pack(sets, j + 1, used | sets[j].0, cur, best);
                cur.pop();
            }
        }
    }
    let mut best = Vec::new();
    pack(&sets, 0, 0, &mut Vec::new(), &mut best);
    let packing: Vec<Vec<usize>> = best.iter().map(|&j| list.cycles[sets[j].1].clone()).collect();

    let bd = BitDigraph::new(d)?;
    let all = full_mask(d.n());
    let mut transversal = None;
    'size: for k in 0..=d.n() {
        let mut found = None;
        for_each_subset(d.n(), k, &mut |s| {
            if found.is_none() && bd.is_acyclic(all & !s) {
                found = Some(s);
            }
        });
        if let Some(s) = found {
            transversal = Some(members(s));
            break 'size;
        }
    }
    let transversal = transversal.expect("V is a transversal");
    Ok(PackingReport { nu: packing.len(), tau: transversal.len(), packing, transversal })
}

/// Calls `f` with every k-subset of 0..n as a bitmask, in lexicographic order of members.
pub fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(u64)) {
    fn rec(n: usize, k: usize, start: usize, mask: u64, f: &mut dyn FnMut(u64)) {
        if k == 0 {
            f(mask);
            return;
        }
        for v in start..=n - k {
            rec(n, k - 1, v + 1, mask | 1 << v, f);
        }
    }
    if k <= n {
        rec(n, k, 0, 0, f);
    }
}
