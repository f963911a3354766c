use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::graph::structure::strong_components;
use crate::graph::Digraph;

pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// Simple directed cycles, each starting at its smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleList {
    pub cycles: Vec<Vec<usize>>,
    pub complete: bool,
    pub cap: usize,
}

/// Johnson's algorithm. Cycles are reported in a deterministic order; the callback may stop
/// the enumeration early. Returns `Break` iff the callback stopped it.
pub fn for_each_cycle<F: FnMut(&[usize]) -> ControlFlow<()>>(d: &Digraph, mut f: F) -> ControlFlow<()> {
    let n = d.n();
    let mut blocked = vec![false; n];
    let mut bset: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut stack: Vec<usize> = Vec::new();
    for s in 0..n {
        // strong component of s in the subdigraph induced by vertices >= s
        let verts: Vec<usize> = (s..n).collect();
        let (sub, back) = d.induced(&verts);
        let comp = strong_components(&sub).into_iter().find(|c| c.contains(&0)).expect("component of s");
        if comp.len() == 1 && !sub.has_edge(0, 0) {
            continue;
        }
        let mut allowed = vec![false; n];
        for &c in &comp {
            allowed[back[c]] = true;
        }
        for &v in comp.iter().map(|c| &back[*c]) {
            blocked[v] = false;
            bset[v].clear();
        }
        let mut ctx = Johnson { d, s, allowed: &allowed, blocked: &mut blocked, bset: &mut bset, stack: &mut stack };
        if let ControlFlow::Break(()) = ctx.circuit(s, &mut f).1 {
            return ControlFlow::Break(());
        }
    }
    ControlFlow::Continue(())
}

struct Johnson<'a> {
    d: &'a Digraph,
    s: usize,
    allowed: &'a [bool],
    blocked: &'a mut Vec<bool>,
    bset: &'a mut Vec<Vec<usize>>,
    stack: &'a mut Vec<usize>,
}

impl Johnson<'_> {
    fn unblock(&mut self, u: usize) {
        let mut work = vec![u];
        while let Some(x) = work.pop() {
            if self.blocked[x] {
                self.blocked[x] = false;
                work.append(&mut std::mem::take(&mut self.bset[x]));
            }
        }
    }

    fn circuit<F: FnMut(&[usize]) -> ControlFlow<()>>(&mut self, v: usize, f: &mut F) -> (bool, ControlFlow<()>) {
        let mut found = false;
        self.stack.push(v);
        self.blocked[v] = true;
        let d = self.d;
        for &w in d.out(v) {
            if !self.allowed[w] {
                continue;
            }
            if w == self.s {
                found = true;
                if let ControlFlow::Break(()) = f(self.stack) {
                    self.stack.pop();
                    return (found, ControlFlow::Break(()));
                }
            } else if !self.blocked[w] {
                let (sub, flow) = self.circuit(w, f);
                if flow.is_break() {
                    self.stack.pop();
                    return (found, flow);
                }
                found |= sub;
            }
        }
        if found {
            self.unblock(v);
        } else {
            for &w in d.out(v) {
                if self.allowed[w] && !self.bset[w].contains(&v) {
                    self.bset[w].push(v);
                }
            }
        }
        self.stack.pop();
        (found, ControlFlow::Continue(()))
    }
}

pub fn enumerate_cycles(d: &Digraph, cap: usize) -> CycleList {
    let cap = cap.max(1);
    let mut cycles = Vec::new();
    let mut complete = true;
    let _ = for_each_cycle(d, |c| {
        if cycles.len() == cap {
            complete = false;
            return ControlFlow::Break(());
        }
        cycles.push(c.to_vec());
        ControlFlow::Continue(())
    });
    CycleList { cycles, complete, cap }
}

/// Edge indices (into `d.edges()`) used by a cycle.
pub fn cycle_edge_indices(d: &Digraph, cycle: &[usize]) -> Vec<usize> {
    (0..cycle.len())
        .map(|i| d.edge_index(cycle[i], cycle[(i + 1) % cycle.len()]).expect("cycle edge"))
        .collect()
}
