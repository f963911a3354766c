use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fractional::lp::{self, as_string, Constraint, LinearProgram, LpOutcome, Rational, Relation};
use crate::graph::bits::{members, BitDigraph};
use crate::graph::Digraph;

pub const ACYCLIC_VERTEX_LIMIT: usize = 16;

/// Acyclic vertex sets, each sorted; the list is sorted too.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcyclicSetFamily {
    pub sets: Vec<Vec<usize>>,
    pub maximal_only: bool,
}

fn acyclic_masks(d: &Digraph, maximal_only: bool) -> Result<Vec<u64>> {
    let n = d.n();
    if n > ACYCLIC_VERTEX_LIMIT {
        return Err(Error::TooLarge(format!("{n} vertices exceeds acyclic-set limit {ACYCLIC_VERTEX_LIMIT}")));
    }
    let bd = BitDigraph::new(d)?;
    let mut out = Vec::new();
    // acyclic sets are closed under subsets: grow each one by vertices above its maximum
    fn rec(bd: &BitDigraph, mask: u64, from: usize, maximal_only: bool, out: &mut Vec<u64>) {
        if mask != 0 {
            let maximal = (0..bd.n).all(|w| mask >> w & 1 == 1 || !bd.is_acyclic(mask | 1 << w));
            if maximal || !maximal_only {
                out.push(mask);
            }
        }
        for v in from..bd.n {
            let next = mask | 1 << v;
            if bd.is_acyclic(next) {
                rec(bd, next, v + 1, maximal_only, out);
            }
        }
    }
    rec(&bd, 0, 0, maximal_only, &mut out);
    Ok(out)
}

fn family(masks: Vec<u64>, maximal_only: bool) -> AcyclicSetFamily {
    let mut sets: Vec<Vec<usize>> = masks.into_iter().map(members).collect();
    sets.sort();
    AcyclicSetFamily { sets, maximal_only }
}

pub fn enumerate_maximal_acyclic(d: &Digraph) -> Result<AcyclicSetFamily> {
    Ok(family(acyclic_masks(d, true)?, true))
}

/// Every non-empty acyclic set.
pub fn enumerate_acyclic(d: &Digraph) -> Result<AcyclicSetFamily> {
    Ok(family(acyclic_masks(d, false)?, false))
}

/// Optimum of the covering program with a primal weighting of the family and a dual weighting
/// of the vertices; both are feasible and have the same value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FractionalResult {
    #[serde(with = "as_string")]
    pub value: Rational,
    pub family: AcyclicSetFamily,
    /// Weight of each set of the family.
    #[serde(serialize_with = "as_string::vec")]
    pub primal: Vec<Rational>,
    /// Weight of each vertex; every set of the family has weight at most 1.
    #[serde(serialize_with = "as_string::vec")]
    pub dual: Vec<Rational>,
}

pub fn fractional_dichromatic(d: &Digraph) -> Result<FractionalResult> {
    fractional_over(d, enumerate_maximal_acyclic(d)?)
}

/// Covering program over the given family, solved as a minimisation; the vertex weighting comes
/// from solving the packing program on its own, and the two optima must agree.
pub fn fractional_over(d: &Digraph, family: AcyclicSetFamily) -> Result<FractionalResult> {
    let n = d.n();
    let sets = &family.sets;
    let one = Rational::one();
    let zero = Rational::zero();
    let cover = LinearProgram {
        maximise: false,
        objective: vec![one.clone(); sets.len()],
        constraints: (0..n)
            .map(|v| Constraint {
                coeffs: sets.iter().map(|s| if s.contains(&v) { one.clone() } else { zero.clone() }).collect(),
                relation: Relation::Ge,
                rhs: one.clone(),
            })
            .collect(),
    };
    let pack = LinearProgram {
        maximise: true,
        objective: vec![one.clone(); n],
        constraints: sets
            .iter()
            .map(|s| Constraint {
                coeffs: (0..n).map(|v| if s.contains(&v) { one.clone() } else { zero.clone() }).collect(),
                relation: Relation::Le,
                rhs: one.clone(),
            })
            .collect(),
    };
    let LpOutcome::Optimal(p) = lp::solve(&cover) else {
        return Err(Error::CertificateFailed("covering program has no optimum; the family misses a vertex".into()));
    };
    let LpOutcome::Optimal(q) = lp::solve(&pack) else {
        return Err(Error::CertificateFailed("packing program has no optimum".into()));
    };
    let result = FractionalResult { value: p.value, family, primal: p.x, dual: q.x };
    if let Some(e) = check_fractional(d, &result) {
        return Err(Error::CertificateFailed(e));
    }
    Ok(result)
}

/// Feasibility of both witnesses and equality of their values; a message on failure.
pub fn check_fractional(d: &Digraph, r: &FractionalResult) -> Option<String> {
    let n = d.n();
    let sets = &r.family.sets;
    if r.primal.len() != sets.len() || r.dual.len() != n {
        return Some("witness lengths do not match".into());
    }
    if r.primal.iter().chain(&r.dual).any(|w| *w < Rational::zero()) {
        return Some("negative weight".into());
    }
    let bd = BitDigraph::new(d).ok()?;
    if let Some(s) = sets.iter().find(|s| s.iter().any(|&v| v >= n) || !bd.is_acyclic(s.iter().fold(0, |m, &v| m | 1 << v))) {
        return Some(format!("{s:?} is not an acyclic set"));
    }
    for v in 0..n {
        let cover: Rational = sets.iter().zip(&r.primal).filter(|(s, _)| s.contains(&v)).map(|(_, w)| w).sum();
        if cover < Rational::one() {
            return Some(format!("vertex {v} covered only {cover}"));
        }
    }
    for s in sets {
        let w: Rational = s.iter().map(|&v| &r.dual[v]).sum();
        if w > Rational::one() {
            return Some(format!("set {s:?} has dual weight {w}"));
        }
    }
    let p: Rational = r.primal.iter().sum();
    let q: Rational = r.dual.iter().sum();
    if p != r.value || q != r.value {
        return Some(format!("primal {p} and dual {q} differ from {}", r.value));
    }
    None
}

/// Checks a claimed value against weighted acyclic sets (a cover) and vertex weights (a packing),
/// with the packing tested on every maximal acyclic set. A message on failure.
pub fn check_fractional_witness(
    d: &Digraph,
    value: &Rational,
    weighted_sets: &[(Rational, Vec<usize>)],
    dual: &[Rational],
) -> Result<Option<String>> {
    let maximal = enumerate_maximal_acyclic(d)?;
    let mut sets: Vec<Vec<usize>> = weighted_sets.iter().map(|(_, s)| s.clone()).collect();
    let mut primal: Vec<Rational> = weighted_sets.iter().map(|(w, _)| w.clone()).collect();
    sets.extend(maximal.sets);
    primal.resize(sets.len(), Rational::zero());
    let r = FractionalResult {
        value: value.clone(),
        family: AcyclicSetFamily { sets, maximal_only: false },
        primal,
        dual: dual.to_vec(),
    };
    Ok(check_fractional(d, &r))
}
