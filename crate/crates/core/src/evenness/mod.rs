//! Non-evenness at desk scale: GF(2) odd weightings over enumerated cycles.

pub mod cycles;
pub mod gf2;
pub mod minor;
pub mod packing;

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::structure::strong_components;
use crate::graph::Digraph;

pub use cycles::{enumerate_cycles, for_each_cycle, CycleList, DEFAULT_CYCLE_CAP};
pub use minor::{find_odd_bicycle_minor, is_odd_bicycle, replay_minor, MinorOp, MinorSearch, MinorWitness};
pub use packing::{cycle_packing_and_transversal, PackingReport};

pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 16;

/// Edge weights making every directed cycle odd.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OddWeightCertificate {
    #[serde(with = "crate::graph::edgemap")]
    pub weights: BTreeMap<(usize, usize), u8>,
}

impl OddWeightCertificate {
    pub fn weight(&self, u: usize, v: usize) -> u8 {
        self.weights.get(&(u, v)).copied().unwrap_or(0)
    }
}

/// An odd number of directed cycles using every edge an even number of times in total.
/// Summing the weights of these cycles gives an even number for any weighting, so one of them
/// must be even.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenWitness {
    pub cycles: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OddWeighting {
    NonEven(OddWeightCertificate),
    Even(EvenWitness),
    Inconclusive { cycles_seen: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EvennessDecision {
    NonEven(OddWeightCertificate),
    Even(EvenWitness),
}

impl EvennessDecision {
    pub fn is_noneven(&self) -> bool {
        matches!(self, EvennessDecision::NonEven(_))
    }
}

/// Solve { sum_{e in C} w(e) = 1 : C a directed cycle } over GF(2).
pub fn odd_weighting(d: &Digraph, cap: usize) -> OddWeighting {
    let edges = d.edges();
    let mut sys = gf2::Gf2System::new(edges.len());
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut seen = 0usize;
    let mut verdict = None;
    let flow = for_each_cycle(d, |c| {
        if seen == cap {
            return ControlFlow::Break(());
        }
        seen += 1;
        let vars = cycles::cycle_edge_indices(d, c);
        rows.push(c.to_vec());
        match sys.insert(&vars, true) {
            Ok(()) => ControlFlow::Continue(()),
            Err(bad) => {
                verdict = Some(EvenWitness { cycles: bad.equations.iter().map(|&i| rows[i].clone()).collect() });
                ControlFlow::Break(())
            }
        }
    });
    if let Some(w) = verdict {
        return OddWeighting::Even(w);
    }
    if flow.is_break() {
        return OddWeighting::Inconclusive { cycles_seen: seen };
    }
    let x = sys.solution();
    let weights = edges.into_iter().zip(x).map(|(e, b)| (e, b as u8)).collect();
    OddWeighting::NonEven(OddWeightCertificate { weights })
}

pub fn is_noneven(d: &Digraph) -> Result<EvennessDecision> {
    is_noneven_with_cap(d, DEFAULT_CYCLE_CAP)
}

/// Works per strong component; edges between components get weight 0.
pub fn is_noneven_with_cap(d: &Digraph, cap: usize) -> Result<EvennessDecision> {
    let mut cert = OddWeightCertificate {
        weights: d.edges().into_iter().map(|e| (e, 0u8)).collect(),
    };
    for comp in strong_components(d) {
        if comp.len() < 2 {
            continue;
        }
        let (sub, back) = d.induced(&comp);
        match odd_weighting(&sub, cap) {
            OddWeighting::NonEven(c) => {
                for ((u, v), b) in c.weights {
                    cert.weights.insert((back[u], back[v]), b);
                }
            }
            OddWeighting::Even(w) => {
                let cycles = w.cycles.into_iter().map(|c| c.into_iter().map(|v| back[v]).collect()).collect();
                return Ok(EvennessDecision::Even(EvenWitness { cycles }));
            }
            OddWeighting::Inconclusive { cycles_seen } => {
                return Err(Error::EnumerationCapExceeded { cap, seen: cycles_seen });
            }
        }
    }
    Ok(EvennessDecision::NonEven(cert))
}

/// Re-enumerate all cycles and check each has odd weight. Returns an offending cycle.
pub fn check_certificate(d: &Digraph, cert: &OddWeightCertificate) -> Result<Option<Vec<usize>>> {
    for &(u, v) in cert.weights.keys() {
        if !d.has_edge(u, v) {
            return Err(Error::CertificateFailed(format!("({u}, {v}) is not an edge")));
        }
    }
    let mut bad = None;
    let mut count = 0usize;
    let flow = for_each_cycle(d, |c| {
        count += 1;
        if count > DEFAULT_CYCLE_CAP {
            return ControlFlow::Break(());
        }
        let w: u32 = (0..c.len()).map(|i| cert.weight(c[i], c[(i + 1) % c.len()]) as u32).sum();
        if w % 2 == 0 {
            bad = Some(c.to_vec());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    if flow.is_break() && bad.is_none() {
        return Err(Error::EnumerationCapExceeded { cap: DEFAULT_CYCLE_CAP, seen: count });
    }
    Ok(bad)
}

/// Checks an evenness witness: an odd number of genuine cycles covering each edge evenly often.
pub fn check_even_witness(d: &Digraph, w: &EvenWitness) -> bool {
    if w.cycles.len() % 2 == 0 || !w.cycles.iter().all(|c| d.is_cycle(c)) {
        return false;
    }
    let mut count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for c in &w.cycles {
        for i in 0..c.len() {
            *count.entry((c[i], c[(i + 1) % c.len()])).or_default() += 1;
        }
    }
    count.values().all(|&k| k % 2 == 0)
}

/// Simple cycles as edge bitmasks, found by plain DFS from each cycle's smallest vertex
/// (deliberately independent of Johnson's algorithm).
fn cycle_masks_dfs(d: &Digraph) -> Vec<u64> {
    fn dfs(d: &Digraph, s: usize, v: usize, on: &mut [bool], mask: u64, out: &mut Vec<u64>) {
        for &w in d.out(v) {
            let bit = 1u64 << d.edge_index(v, w).expect("edge");
            if w == s {
                out.push(mask | bit);
            } else if w > s && !on[w] {
                on[w] = true;
                dfs(d, s, w, on, mask | bit, out);
                on[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; d.n()];
    for s in 0..d.n() {
        on[s] = true;
        dfs(d, s, s, &mut on, 0, &mut out);
        on[s] = false;
    }
    out
}

pub fn brute_force_noneven(d: &Digraph) -> Result<bool> {
    brute_force_noneven_with_limit(d, DEFAULT_BRUTE_FORCE_LIMIT)
}

/// Tries every 0/1 edge weighting; true iff one makes all directed cycles odd.
pub fn brute_force_noneven_with_limit(d: &Digraph, limit: usize) -> Result<bool> {
    let m = d.m();
    if m > limit || m > 63 {
        return Err(Error::TooLarge(format!("{m} edges exceeds brute-force limit {limit}")));
    }
    let masks = cycle_masks_dfs(d);
    'weights: for w in 0u64..(1u64 << m) {
        for &c in &masks {
            if (c & w).count_ones() % 2 == 0 {
                continue 'weights;
            }
        }
        return Ok(true);
    }
    Ok(false)
}
