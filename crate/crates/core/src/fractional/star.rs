use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fractional::lp::{as_string, int, rat, Rational};
use crate::graph::bits::BitDigraph;
use crate::graph::Digraph;
use crate::twocolor::colouring::{exact_dichromatic_with_limit, search_order};

pub const STAR_VERTEX_LIMIT: usize = 14;

fn window_mask(classes: &[u64], start: usize, d: usize) -> u64 {
    let k = classes.len();
    (0..d).fold(0, |m, j| m | classes[(start + j) % k])
}

/// c: V → Z_k such that every d cyclically consecutive colours induce an acyclic set.
/// Complete search; None proves there is no such colouring.
pub fn star_dichromatic_check(dg: &Digraph, k: usize, d: usize) -> Result<Option<Vec<usize>>> {
    if d == 0 || d > k {
        return Err(Error::InvalidParameter(format!("need k >= d >= 1, got k = {k}, d = {d}")));
    }
    let n = dg.n();
    if n > 64 {
        return Err(Error::TooLarge(format!("{n} vertices")));
    }
    let bd = BitDigraph::new(dg)?;
    let order = search_order(dg);
    fn rec(bd: &BitDigraph, order: &[usize], i: usize, d: usize, classes: &mut [u64], col: &mut [usize]) -> bool {
        if i == order.len() {
            return true;
        }
        let k = classes.len();
        let v = order[i];
        // rotations are symmetric, so the first vertex takes colour 0
        let choices = if i == 0 { 1 } else { k };
        for c in 0..choices {
            classes[c] |= 1 << v;
            let ok = (0..d).all(|j| bd.is_acyclic(window_mask(classes, (c + k - j) % k, d)));
            if ok {
                col[v] = c;
                if rec(bd, order, i + 1, d, classes, col) {
                    return true;
                }
            }
            classes[c] &= !(1 << v);
        }
        false
    }
    let mut classes = vec![0u64; k];
    let mut col = vec![0usize; n];
    Ok(rec(&bd, &order, 0, d, &mut classes, &mut col).then_some(col))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StarResult {
    #[serde(with = "as_string")]
    pub value: Rational,
    pub k: usize,
    pub d: usize,
    pub colouring: Vec<usize>,
}

/// Least k/d with k ≤ |V| admitting a window colouring, trying fractions in increasing order.
/// The ceiling is checked against the exact dichromatic number.
pub fn star_dichromatic(dg: &Digraph) -> Result<StarResult> {
    let n = dg.n();
    if n > STAR_VERTEX_LIMIT {
        return Err(Error::TooLarge(format!("{n} vertices exceeds star limit {STAR_VERTEX_LIMIT}")));
    }
    if n == 0 {
        return Ok(StarResult { value: int(0), k: 0, d: 1, colouring: Vec::new() });
    }
    let mut fractions: Vec<(usize, usize)> =
        (1..=n).flat_map(|k| (1..=k).map(move |d| (k, d))).filter(|&(k, d)| k.gcd(&d) == 1).collect();
    fractions.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    for (k, d) in fractions {
        if let Some(colouring) = star_dichromatic_check(dg, k, d)? {
            let value = rat(k as i64, d as i64);
            let chi = exact_dichromatic_with_limit(dg, STAR_VERTEX_LIMIT)?.0;
            if value.ceil() != int(chi as i64) {
                return Err(Error::CertificateFailed(format!("ceiling of {value} is not the dichromatic number {chi}")));
            }
            return Ok(StarResult { value, k, d, colouring });
        }
    }
    unreachable!("k = n, d = 1 always succeeds")
}

/// Every d cyclically consecutive colours of Z_k induce an acyclic set.
pub fn check_star_colouring(dg: &Digraph, k: usize, d: usize, colouring: &[usize]) -> Result<bool> {
    if d == 0 || d > k {
        return Err(Error::InvalidParameter(format!("need k >= d >= 1, got k = {k}, d = {d}")));
    }
    if colouring.len() != dg.n() || colouring.iter().any(|&c| c >= k) {
        return Ok(false);
    }
    let bd = BitDigraph::new(dg)?;
    let mut classes = vec![0u64; k];
    for (v, &c) in colouring.iter().enumerate() {
        classes[c] |= 1 << v;
    }
    Ok((0..k).all(|s| bd.is_acyclic(window_mask(&classes, s, d))))
}
