//! Dense two-phase simplex over exact rationals, Bland's rule throughout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Serialises rationals as `p/q` strings (or `p` when integral).
pub mod as_string {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn vec<S: Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = qs.iter().map(|q| q.to_string()).collect();
        v.serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Optimise `objective · x` over x ≥ 0 subject to the constraints.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    pub maximise: bool,
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub value: Rational,
    pub x: Vec<Rational>,
    /// One multiplier per constraint, signed so that the dual program is feasible.
    pub duals: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// rows of [coefficients | rhs]
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize, obj: &mut [Rational]) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &p;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        if !obj[c].is_zero() {
            let f = obj[c].clone();
            for (x, y) in obj.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Reduced-cost row for costs `c` (length `cols`), last entry minus the objective value.
    fn objective_row(&self, c: &[Rational]) -> Vec<Rational> {
        let mut obj: Vec<Rational> = c.to_vec();
        obj.push(Rational::zero());
        for (r, row) in self.rows.iter().enumerate() {
            let cb = &c[self.basis[r]];
            if !cb.is_zero() {
                for (x, y) in obj.iter_mut().zip(row) {
                    *x -= cb * y;
                }
            }
        }
        obj
    }

    /// Minimises until optimal; false if unbounded. Columns with `allowed[j] == false` never enter.
    fn run(&mut self, obj: &mut Vec<Rational>, allowed: &[bool]) -> bool {
        loop {
            let Some(c) = (0..self.cols).find(|&j| allowed[j] && obj[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(Rational, usize)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[self.cols] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((b, br)) => ratio < *b || (ratio == *b && self.basis[r] < self.basis[*br]),
                    };
                    if better {
                        best = Some((ratio, r));
                    }
                }
            }
            let Some((_, r)) = best else {
                return false;
            };
            self.pivot(r, c, obj);
        }
    }
}

pub fn solve(lp: &LinearProgram) -> LpOutcome {
    let n = lp.objective.len();
    let m = lp.constraints.len();
    // column layout: originals, one slack/surplus per inequality, one artificial per Ge/Eq row
    let mut flipped = vec![false; m];
    let mut rels = Vec::with_capacity(m);
    for (i, con) in lp.constraints.iter().enumerate() {
        assert_eq!(con.coeffs.len(), n, "constraint {i} has the wrong width");
        flipped[i] = con.rhs.is_negative();
        rels.push(match (con.relation, flipped[i]) {
            (Relation::Le, true) => Relation::Ge,
            (Relation::Ge, true) => Relation::Le,
            (r, _) => r,
        });
    }
    let slack_cols: Vec<Option<usize>> = {
        let mut next = n;
        rels.iter()
            .map(|r| {
                (*r != Relation::Eq).then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    };
    let first_art = n + slack_cols.iter().flatten().count();
    let art_cols: Vec<Option<usize>> = {
        let mut next = first_art;
        rels.iter()
            .map(|r| {
                (*r != Relation::Le).then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    };
    let cols = first_art + art_cols.iter().flatten().count();
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut identity = Vec::with_capacity(m);
    for (i, con) in lp.constraints.iter().enumerate() {
        let sign = if flipped[i] { -Rational::one() } else { Rational::one() };
        let mut row: Vec<Rational> = con.coeffs.iter().map(|a| a * &sign).collect();
        row.resize(cols + 1, Rational::zero());
        row[cols] = &con.rhs * &sign;
        if let Some(s) = slack_cols[i] {
            row[s] = if rels[i] == Relation::Le { Rational::one() } else { -Rational::one() };
        }
        let id = match art_cols[i] {
            Some(a) => {
                row[a] = Rational::one();
                a
            }
            None => slack_cols[i].expect("slack"),
        };
        rows.push(row);
        basis.push(id);
        identity.push(id);
    }
    let mut t = Tableau { rows, basis, cols };
    let all = vec![true; cols];

    // phase 1
    let mut c1 = vec![Rational::zero(); cols];
    for a in art_cols.iter().flatten() {
        c1[*a] = Rational::one();
    }
    let mut obj = t.objective_row(&c1);
    t.run(&mut obj, &all);
    if !obj[cols].is_zero() {
        return LpOutcome::Infeasible;
    }
    // drive zero-level artificials out of the basis where possible
    for r in 0..m {
        if t.basis[r] >= first_art {
            if let Some(c) = (0..first_art).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, c, &mut obj);
            }
        }
    }

    // phase 2
    let mut c2 = vec![Rational::zero(); cols];
    for (j, c) in lp.objective.iter().enumerate() {
        c2[j] = if lp.maximise { -c } else { c.clone() };
    }
    let mut obj = t.objective_row(&c2);
    let allowed: Vec<bool> = (0..cols).map(|j| j < first_art).collect();
    if !t.run(&mut obj, &allowed) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &b) in t.basis.iter().enumerate() {
        if b < n {
            x[b] = t.rows[r][cols].clone();
        }
    }
    let duals = (0..m)
        .map(|i| {
            let y: Rational = (0..m).map(|r| &c2[t.basis[r]] * &t.rows[r][identity[i]]).sum();
            let y = if flipped[i] { -y } else { y };
            if lp.maximise {
                -y
            } else {
                y
            }
        })
        .collect();
    let value: Rational = lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
    LpOutcome::Optimal(LpSolution { value, x, duals })
}
