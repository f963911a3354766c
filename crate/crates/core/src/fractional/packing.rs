use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::evenness::cycles::{for_each_cycle, DEFAULT_CYCLE_CAP};
use crate::graph::bits::{full_mask, members, BitDigraph};
use crate::graph::Digraph;
use crate::twocolor::colouring::search_order;

/// Vertex sets of directed cycles, keeping only the inclusion-minimal ones.
fn minimal_cycle_sets(d: &Digraph) -> Result<Vec<u64>> {
    let mut sets = Vec::new();
    let flow = for_each_cycle(d, |c| {
        if sets.len() == DEFAULT_CYCLE_CAP {
            return ControlFlow::Break(());
        }
        sets.push(c.iter().fold(0u64, |m, &v| m | 1 << v));
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::EnumerationCapExceeded { cap: DEFAULT_CYCLE_CAP, seen: sets.len() });
    }
    sets.sort_by_key(|s: &u64| (s.count_ones(), *s));
    sets.dedup();
    let mut minimal: Vec<u64> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|&m| m & s == m) {
            minimal.push(s);
        }
    }
    Ok(minimal)
}

/// g pairwise disjoint feedback vertex sets covering V, found as a colouring in which every
/// directed cycle sees all g colours. None means there is no such partition.
pub fn fvs_packing(d: &Digraph, g: usize) -> Result<Option<Vec<Vec<usize>>>> {
    if g == 0 {
        return Err(Error::InvalidParameter("need g >= 1".into()));
    }
    let n = d.n();
    if n > 64 {
        return Err(Error::TooLarge(format!("{n} vertices")));
    }
    let cycles = minimal_cycle_sets(d)?;
    if cycles.iter().any(|c| (c.count_ones() as usize) < g) {
        return Ok(None);
    }
    let order = search_order(d);
    let mut on: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in cycles.iter().enumerate() {
        for v in members(*c) {
            on[v].push(i);
        }
    }
    struct State<'a> {
        g: usize,
        order: &'a [usize],
        on: &'a [Vec<usize>],
        seen: Vec<u64>,
        open: Vec<usize>,
        col: Vec<usize>,
    }
    fn rec(s: &mut State, i: usize, used: usize) -> bool {
        if i == s.order.len() {
            return true;
        }
        let v = s.order[i];
        for c in 0..s.g.min(used + 1) {
            let mut ok = true;
            let mut saved = Vec::with_capacity(s.on[v].len());
            for &cy in &s.on[v] {
                saved.push(s.seen[cy]);
                s.seen[cy] |= 1 << c;
                s.open[cy] -= 1;
                if (s.g as u32 - s.seen[cy].count_ones()) as usize > s.open[cy] {
                    ok = false;
                }
            }
            if ok {
                s.col[v] = c;
                if rec(s, i + 1, used.max(c + 1)) {
                    return true;
                }
            }
            for (&cy, old) in s.on[v].iter().zip(saved) {
                s.seen[cy] = old;
                s.open[cy] += 1;
            }
        }
        false
    }
    let mut s = State {
        g,
        order: &order,
        on: &on,
        seen: vec![0; cycles.len()],
        open: cycles.iter().map(|c| c.count_ones() as usize).collect(),
        col: vec![0; n],
    };
    if !rec(&mut s, 0, 0) {
        return Ok(None);
    }
    let mut classes = vec![Vec::new(); g];
    for v in 0..n {
        classes[s.col[v]].push(v);
    }
    Ok(Some(classes))
}

/// Disjoint classes, each a feedback vertex set (its complement induces an acyclic digraph).
pub fn check_fvs_packing(d: &Digraph, classes: &[Vec<usize>]) -> Result<bool> {
    let bd = BitDigraph::new(d)?;
    let mut union = 0u64;
    for class in classes {
        let m = class.iter().fold(0u64, |m, &v| m | 1 << v);
        if class.iter().any(|&v| v >= d.n()) || m & union != 0 || !bd.is_acyclic(full_mask(d.n()) & !m) {
            return Ok(false);
        }
        union |= m;
    }
    Ok(true)
}
