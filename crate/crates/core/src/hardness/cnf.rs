use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::format::content_lines;

/// A CNF formula over variables 1..=vars. Literals are DIMACS-style signed integers.
///
/// Clauses are kept with duplicate literals removed and sorted by variable, the positive
/// literal of a variable first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    pub vars: usize,
    pub clauses: Vec<Vec<i64>>,
}

fn literal_key(l: i64) -> (u64, bool) {
    (l.unsigned_abs(), l < 0)
}

impl CnfFormula {
    pub fn new(vars: usize, clauses: Vec<Vec<i64>>) -> Result<Self> {
        let mut out = Vec::with_capacity(clauses.len());
        for (i, mut c) in clauses.into_iter().enumerate() {
            if c.is_empty() {
                return Err(Error::InvalidFormula(format!("clause {} is empty", i + 1)));
            }
            if let Some(&l) = c.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > vars) {
                return Err(Error::InvalidFormula(format!("literal {l} outside 1..={vars}")));
            }
            c.sort_by_key(|&l| literal_key(l));
            c.dedup();
            if c.windows(2).any(|w| w[0] == -w[1]) {
                return Err(Error::InvalidFormula(format!("clause {} is a tautology", i + 1)));
            }
            out.push(c);
        }
        Ok(CnfFormula { vars, clauses: out })
    }

    /// `beta[j - 1]` is the value of variable j.
    pub fn evaluate(&self, beta: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| beta[l.unsigned_abs() as usize - 1] == (l > 0)))
    }

    /// Does the literal of variable `var` with this sign occur anywhere?
    pub fn occurs(&self, var: usize, positive: bool) -> bool {
        let lit = if positive { var as i64 } else { -(var as i64) };
        self.clauses.iter().any(|c| c.contains(&lit))
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                let _ = write!(s, "{l} ");
            }
            s.push_str("0\n");
        }
        s
    }
}

/// DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>` header, clauses terminated by 0.
/// A clause may span lines; `%` ends the input.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let perr = |line: usize, message: String| Error::Parse { line, message };
    let mut header = None;
    let mut clauses = Vec::new();
    let mut cur = Vec::new();
    let mut last = 0;
    for (ln, toks) in content_lines(text) {
        last = ln;
        if toks[0] == "c" {
            continue;
        }
        if toks[0] == "%" {
            break;
        }
        if toks[0] == "p" {
            if header.is_some() {
                return Err(perr(ln, "second `p` line".into()));
            }
            if toks.len() != 4 || toks[1] != "cnf" {
                return Err(perr(ln, "expected `p cnf <vars> <clauses>`".into()));
            }
            let num = |t: &str| t.parse::<usize>().map_err(|_| perr(ln, format!("bad count `{t}`")));
            header = Some((num(toks[2])?, num(toks[3])?));
            continue;
        }
        let Some((vars, _)) = header else {
            return Err(perr(ln, "clause before `p cnf` header".into()));
        };
        for t in toks {
            let l: i64 = t.parse().map_err(|_| perr(ln, format!("bad literal `{t}`")))?;
            if l == 0 {
                clauses.push(std::mem::take(&mut cur));
            } else if l.unsigned_abs() as usize > vars {
                return Err(perr(ln, format!("literal {l} exceeds {vars} variables")));
            } else {
                cur.push(l);
            }
        }
    }
    let (vars, count) = header.ok_or_else(|| perr(1, "missing `p cnf` header".into()))?;
    if !cur.is_empty() {
        clauses.push(cur);
    }
    if clauses.len() != count {
        return Err(perr(last, format!("header declares {count} clauses, found {}", clauses.len())));
    }
    CnfFormula::new(vars, clauses)
}
