//! List colourings of digraphs: exhaustive search, a constructive 3-list-colouring of
//! non-even digraphs, and palette-relative 2-choosability.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evenness::is_noneven;
use crate::graph::bits::BitDigraph;
use crate::graph::structure::{cut_vertices, one_sum_split, strong_components};
use crate::graph::Digraph;
use crate::twocolor::colouring::{check_classes, search_order};

pub const LIST_SEARCH_LIMIT: usize = 64;

/// A non-empty colour list per vertex, each sorted without repeats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    pub lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<usize>>) -> Result<Self> {
        let mut lists = lists;
        for (v, l) in lists.iter_mut().enumerate() {
            l.sort_unstable();
            l.dedup();
            if l.is_empty() {
                return Err(Error::ListTooSmall(v));
            }
        }
        Ok(ListAssignment { lists })
    }

    pub fn uniform(n: usize, colours: &[usize]) -> Result<Self> {
        Self::new(vec![colours.to_vec(); n])
    }
}

/// c(v) lies in L(v) and every colour class induces an acyclic subdigraph.
pub fn is_list_colouring(d: &Digraph, l: &ListAssignment, c: &[usize]) -> bool {
    c.len() == d.n()
        && l.lists.len() == d.n()
        && (0..d.n()).all(|v| l.lists[v].contains(&c[v]))
        && check_classes(d, c).is_proper()
}

/// Complete backtracking search; None proves there is no L-list-colouring.
pub fn list_colouring_search(d: &Digraph, l: &ListAssignment) -> Result<Option<Vec<usize>>> {
    let n = d.n();
    if l.lists.len() != n {
        return Err(Error::InvalidParameter(format!("{} lists for {n} vertices", l.lists.len())));
    }
    if n > LIST_SEARCH_LIMIT {
        return Err(Error::TooLarge(format!("{n} vertices")));
    }
    let bd = BitDigraph::new(d)?;
    let order = search_order(d);
    fn rec(bd: &BitDigraph, l: &ListAssignment, order: &[usize], i: usize, classes: &mut BTreeMap<usize, u64>, col: &mut [usize]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for &c in &l.lists[v] {
            let class = classes.entry(c).or_insert(0);
            *class |= 1 << v;
            let next = *class;
            if bd.is_acyclic(next) {
                col[v] = c;
                if rec(bd, l, order, i + 1, classes, col) {
                    return true;
                }
            }
            *classes.get_mut(&c).expect("class") &= !(1 << v);
        }
        false
    }
    let mut classes = BTreeMap::new();
    let mut col = vec![0; n];
    Ok(rec(&bd, l, &order, 0, &mut classes, &mut col).then_some(col))
}

/// Choice function for a non-even digraph where `v0` has a one-colour list and every other list
/// has at least three colours. Splits at strong components and cut vertices; a strongly
/// 2-connected piece loses a vertex u ≠ v0 of out-degree at most two, which is coloured last
/// with a colour missing from its out-neighbours.
pub fn choose3_noneven(d: &Digraph, l: &ListAssignment, v0: usize) -> Result<Vec<usize>> {
    let n = d.n();
    if l.lists.len() != n || v0 >= n {
        return Err(Error::InvalidParameter(format!("{} lists, designated vertex {v0}, {n} vertices", l.lists.len())));
    }
    if l.lists[v0].len() != 1 {
        return Err(Error::InvalidParameter(format!("designated vertex {v0} needs exactly one colour")));
    }
    if let Some(v) = (0..n).find(|&v| v != v0 && l.lists[v].len() < 3) {
        return Err(Error::ListTooSmall(v));
    }
    if !is_noneven(d)?.is_noneven() {
        return Err(Error::EvenInputDetected("odd weighting system is inconsistent".into()));
    }
    let col = extend(d, &l.lists, Some(v0))?;
    if !is_list_colouring(d, l, &col) {
        return Err(Error::CertificateFailed("constructed choice function is not a list colouring".into()));
    }
    Ok(col)
}

/// Choice function for `d`; a designated vertex keeps the first colour of its list.
fn extend(d: &Digraph, lists: &[Vec<usize>], v0: Option<usize>) -> Result<Vec<usize>> {
    let n = d.n();
    if n == 1 {
        return Ok(vec![lists[0][0]]);
    }
    let mut col = vec![usize::MAX; n];
    let comps = strong_components(d);
    if comps.len() > 1 {
        for comp in comps {
            let (sub, back) = d.induced(&comp);
            let sub_lists: Vec<Vec<usize>> = back.iter().map(|&v| lists[v].clone()).collect();
            let designated = v0.and_then(|v| back.iter().position(|&b| b == v));
            for (i, c) in extend(&sub, &sub_lists, designated)?.into_iter().enumerate() {
                col[back[i]] = c;
            }
        }
        return Ok(col);
    }
    if let Some(&w) = cut_vertices(d)?.first() {
        // d1 keeps X and shrinks Y + w to v1, d2 keeps Y and shrinks X + w to v2
        let s = one_sum_split(d, w)?;
        let side_lists = |map: &[usize], k: usize| {
            let mut out = vec![Vec::new(); k];
            for v in 0..n {
                if map[v] != usize::MAX && v != w {
                    out[map[v]] = lists[v].clone();
                }
            }
            out
        };
        let mut l1 = side_lists(&s.map1, s.d1.n());
        let mut l2 = side_lists(&s.map2, s.d2.n());
        l1[s.v1] = lists[w].clone();
        l2[s.v2] = lists[w].clone();
        // the side holding v0 goes first; w then passes its colour on as a one-colour list
        let (c1, c2) = if v0.is_some_and(|v| s.y.contains(&v)) {
            let c2 = extend(&s.d2, &l2, v0.map(|v| s.map2[v]))?;
            l1[s.v1] = vec![c2[s.v2]];
            (extend(&s.d1, &l1, Some(s.v1))?, c2)
        } else {
            let c1 = extend(&s.d1, &l1, v0.map(|v| s.map1[v]))?;
            l2[s.v2] = vec![c1[s.v1]];
            let c2 = extend(&s.d2, &l2, Some(s.v2))?;
            (c1, c2)
        };
        for &x in &s.x {
            col[x] = c1[s.map1[x]];
        }
        for &y in &s.y {
            col[y] = c2[s.map2[y]];
        }
        col[w] = c1[s.v1];
        return Ok(col);
    }
    let u = (0..n)
        .filter(|&u| Some(u) != v0 && d.out_degree(u) <= 2)
        .min_by_key(|&u| (d.out_degree(u), u))
        .ok_or(Error::NoOutDegreeTwoVertex(n))?;
    let (rest, back) = d.remove_vertices(&[u]);
    let rest_lists: Vec<Vec<usize>> = back.iter().map(|&v| lists[v].clone()).collect();
    let designated = v0.and_then(|v| back.iter().position(|&b| b == v));
    for (i, c) in extend(&rest, &rest_lists, designated)?.into_iter().enumerate() {
        col[back[i]] = c;
    }
    let taken: Vec<usize> = d.out(u).iter().map(|&w| col[w]).collect();
    col[u] = lists[u].iter().copied().find(|c| !taken.contains(c)).ok_or(Error::ListTooSmall(u))?;
    Ok(col)
}

/// Outcome of the exhaustive 2-choosability check over a fixed palette.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoosabilityReport {
    pub choosable: bool,
    pub palette: usize,
    /// Assignments tried, up to renaming colours.
    pub assignments: usize,
    pub counterexample: Option<ListAssignment>,
}

pub const CHOOSABILITY_VERTEX_LIMIT: usize = 10;

/// Tries every assignment of 2-element lists from colours 0..palette, with colours introduced in
/// order of first use. Only certifies 2-choosability relative to this palette.
pub fn is_2_choosable(d: &Digraph, palette: usize) -> Result<ChoosabilityReport> {
    let n = d.n();
    if n > CHOOSABILITY_VERTEX_LIMIT {
        return Err(Error::TooLarge(format!("{n} vertices exceeds limit {CHOOSABILITY_VERTEX_LIMIT}")));
    }
    if palette < 2 {
        return Err(Error::InvalidParameter("palette needs at least two colours".into()));
    }
    struct Search<'a> {
        d: &'a Digraph,
        palette: usize,
        lists: Vec<Vec<usize>>,
        tried: usize,
    }
    fn rec(s: &mut Search, v: usize, used: usize) -> Result<Option<ListAssignment>> {
        if v == s.d.n() {
            s.tried += 1;
            let l = ListAssignment { lists: s.lists.clone() };
            return Ok(match list_colouring_search(s.d, &l)? {
                None => Some(l),
                Some(_) => None,
            });
        }
        let top = s.palette.min(used + 2);
        for a in 0..top {
            for b in a + 1..top {
                // new colours must be the next unused ones
                let fresh = [a, b].into_iter().filter(|&c| c >= used).count();
                let ok = match fresh {
                    0 => true,
                    1 => a == used || (a < used && b == used),
                    _ => a == used && b == used + 1,
                };
                if !ok {
                    continue;
                }
                s.lists[v] = vec![a, b];
                if let Some(l) = rec(s, v + 1, used.max(b + 1))? {
                    return Ok(Some(l));
                }
            }
        }
        Ok(None)
    }
    let mut s = Search { d, palette, lists: vec![Vec::new(); n], tried: 0 };
    let counterexample = rec(&mut s, 0, 0)?;
    Ok(ChoosabilityReport { choosable: counterexample.is_none(), palette, assignments: s.tried, counterexample })
}
