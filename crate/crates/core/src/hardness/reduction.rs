use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::structure::back_degree;
use crate::graph::Digraph;
use crate::hardness::cnf::CnfFormula;
use crate::twocolor::colouring::{verify_colouring, VertexColouring};

/// What a vertex of the reduction stands for. Variable and clause indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    T(u8),
    F(u8),
    Literal { var: usize, positive: bool },
    Occurrence { var: usize, positive: bool, clause: usize },
    Clause(usize),
    /// Universal vertex added when lifting to more colours.
    Apex(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bar = |p: bool| if p { "" } else { "~" };
        match *self {
            Role::T(i) => write!(f, "t{i}"),
            Role::F(i) => write!(f, "f{i}"),
            Role::Literal { var, positive } => write!(f, "{}x{var}", bar(positive)),
            Role::Occurrence { var, positive, clause } => write!(f, "{}x{var},{clause}", bar(positive)),
            Role::Clause(i) => write!(f, "c{i}"),
            Role::Apex(i) => write!(f, "apex{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionArtifact {
    pub digraph: Digraph,
    pub roles: Vec<Role>,
    pub fvs: Vec<usize>,
    /// Ordering (first to last) whose back out-degree is the degeneracy bound.
    pub degeneracy_order: Vec<usize>,
    /// Number of colours the digraph is meant to be coloured with.
    pub k: usize,
}

#[derive(Serialize)]
struct Sidecar<'a> {
    k: usize,
    role_map: Vec<String>,
    fvs: &'a [usize],
    degeneracy_order: &'a [usize],
}

impl ReductionArtifact {
    pub fn vertex(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    /// Number of vertices before any lifting.
    pub fn base_n(&self) -> usize {
        self.roles.iter().filter(|r| !matches!(r, Role::Apex(_))).count()
    }

    pub fn sidecar_json(&self) -> String {
        let s = Sidecar {
            k: self.k,
            role_map: self.roles.iter().map(|r| r.to_string()).collect(),
            fvs: &self.fvs,
            degeneracy_order: &self.degeneracy_order,
        };
        serde_json::to_string_pretty(&s).expect("sidecar serialises")
    }
}

/// Vertex ids: t1 f1 t2 f2 t3 f3, positive literals, negative literals, occurrences in clause
/// order, clause vertices. This numbering is also the degeneracy ordering.
pub fn reduce_sat(phi: &CnfFormula) -> ReductionArtifact {
    let mut roles: Vec<Role> = Vec::new();
    for i in 1..=3 {
        roles.push(Role::T(i));
        roles.push(Role::F(i));
    }
    for positive in [true, false] {
        for var in 1..=phi.vars {
            if phi.occurs(var, positive) {
                roles.push(Role::Literal { var, positive });
            }
        }
    }
    for (i, c) in phi.clauses.iter().enumerate() {
        for &l in c {
            roles.push(Role::Occurrence { var: l.unsigned_abs() as usize, positive: l > 0, clause: i + 1 });
        }
    }
    for i in 1..=phi.clauses.len() {
        roles.push(Role::Clause(i));
    }
    let id: BTreeMap<Role, usize> = roles.iter().enumerate().map(|(v, &r)| (r, v)).collect();
    let (t1, f1, t2, f2, t3, f3) = (0, 1, 2, 3, 4, 5);
    let mut edges = vec![(t1, f1), (f1, t1), (t2, f2), (f2, t2), (t3, f3), (f3, t3)];
    for (v, &r) in roles.iter().enumerate() {
        match r {
            Role::Occurrence { var, positive, .. } => {
                let lit = id[&Role::Literal { var, positive }];
                edges.extend([(lit, v), (v, t1), (t1, lit), (v, f1), (f1, lit)]);
            }
            Role::Literal { var, positive: true } => {
                if let Some(&neg) = id.get(&Role::Literal { var, positive: false }) {
                    edges.extend([(v, neg), (neg, t2), (t2, v), (neg, f2), (f2, v)]);
                }
            }
            Role::Clause(i) => {
                edges.extend([(v, t3), (t3, v), (f3, v)]);
                let occ: Vec<usize> = phi.clauses[i - 1]
                    .iter()
                    .map(|&l| id[&Role::Occurrence { var: l.unsigned_abs() as usize, positive: l > 0, clause: i }])
                    .collect();
                let mut prev = v;
                for &o in &occ {
                    edges.push((prev, o));
                    prev = o;
                }
                edges.push((prev, f3));
            }
            _ => {}
        }
    }
    let n = roles.len();
    ReductionArtifact {
        digraph: Digraph::from_edges_unified(n, edges),
        roles,
        fvs: vec![t1, f1, t2, f2, t3, f3],
        degeneracy_order: (0..n).collect(),
        k: 2,
    }
}

/// Adds k - 2 apex vertices, each joined by digons to everything before it.
pub fn lift_to_k(art: &ReductionArtifact, k: usize) -> Result<ReductionArtifact> {
    if k < art.k {
        return Err(Error::InvalidK(k));
    }
    let mut out = art.clone();
    for _ in art.k..k {
        let x = out.digraph.n();
        let apex = (0..x).flat_map(|v| [(x, v), (v, x)]);
        out.digraph = Digraph::from_edges_unified(x + 1, out.digraph.edges().into_iter().chain(apex));
        out.roles.push(Role::Apex(out.roles.iter().filter(|r| matches!(r, Role::Apex(_))).count() + 1));
        out.fvs.push(x);
        out.degeneracy_order.insert(0, x);
        out.k += 1;
    }
    Ok(out)
}

/// The colouring from a truth assignment; `beta[j - 1]` is the value of variable j.
/// Apex vertices take colours 2, 3, ... in order.
pub fn encode_assignment(phi: &CnfFormula, art: &ReductionArtifact, beta: &[bool]) -> Result<VertexColouring> {
    if beta.len() != phi.vars {
        return Err(Error::InvalidParameter(format!("assignment has {} values for {} variables", beta.len(), phi.vars)));
    }
    let b = |var: usize| beta[var - 1] as usize;
    let colours = art
        .roles
        .iter()
        .map(|&r| match r {
            Role::T(_) => 1,
            Role::F(_) | Role::Clause(_) => 0,
            Role::Occurrence { var, positive: true, .. } => b(var),
            Role::Occurrence { var, positive: false, .. } => 1 - b(var),
            Role::Literal { var, positive: true } => 1 - b(var),
            Role::Literal { var, positive: false } => b(var),
            Role::Apex(i) => i + 1,
        })
        .collect();
    Ok(VertexColouring::new(colours, art.k))
}

/// Truth assignment read off a proper colouring, after renaming so that t3 is on the "1" side.
/// A variable occurring only negatively is read from its negative literal vertex; one that
/// does not occur is false.
pub fn decode_colouring(phi: &CnfFormula, art: &ReductionArtifact, c: &VertexColouring) -> Result<Vec<bool>> {
    if !verify_colouring(&art.digraph, c)?.is_proper() {
        return Err(Error::NotProper);
    }
    let one = c.colours[art.vertex(Role::T(3)).expect("t3")];
    let is_one = |v: usize| c.colours[v] == one;
    Ok((1..=phi.vars)
        .map(|var| {
            if let Some(v) = art.vertex(Role::Literal { var, positive: true }) {
                !is_one(v)
            } else if let Some(v) = art.vertex(Role::Literal { var, positive: false }) {
                is_one(v)
            } else {
                false
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub fvs_size: usize,
    /// Topological order of the digraph minus the feedback vertex set.
    pub acyclic_order: Vec<usize>,
    pub degeneracy: usize,
    pub fvs_bound: usize,
    pub degeneracy_bound: usize,
}

/// Checks the feedback vertex set (through an explicit topological order of what remains) and
/// the degeneracy ordering against the bounds k + 4 and k + 1.
pub fn certify(art: &ReductionArtifact) -> Result<CertificateReport> {
    let d = &art.digraph;
    let fail = |m: String| Err(Error::CertificateFailed(m));
    let mut in_fvs = vec![false; d.n()];
    for &v in &art.fvs {
        in_fvs[v] = true;
    }
    // positive literals, clauses, negative literals, then occurrences by (variable, sign)
    let key = |r: &Role| match *r {
        Role::Literal { var, positive: true } => (0, var, 0, 0),
        Role::Clause(i) => (1, i, 0, 0),
        Role::Literal { var, positive: false } => (2, var, 0, 0),
        Role::Occurrence { var, positive, clause } => (3, var, !positive as usize, clause),
        _ => (4, 0, 0, 0),
    };
    let mut acyclic_order: Vec<usize> = (0..d.n()).filter(|&v| !in_fvs[v]).collect();
    acyclic_order.sort_by_key(|&v| key(&art.roles[v]));
    let mut pos = vec![usize::MAX; d.n()];
    for (i, &v) in acyclic_order.iter().enumerate() {
        pos[v] = i;
    }
    if let Some((u, v)) = d.edges().into_iter().find(|&(u, v)| !in_fvs[u] && !in_fvs[v] && pos[u] >= pos[v]) {
        return fail(format!("edge ({u}, {v}) runs backwards after removing the feedback set"));
    }
    let Some(degeneracy) = back_degree(d, &art.degeneracy_order) else {
        return fail("degeneracy order is not a permutation".into());
    };
    let report = CertificateReport {
        fvs_size: art.fvs.len(),
        acyclic_order,
        degeneracy,
        fvs_bound: art.k + 4,
        degeneracy_bound: art.k + 1,
    };
    if report.fvs_size > report.fvs_bound {
        return fail(format!("feedback set of size {} exceeds {}", report.fvs_size, report.fvs_bound));
    }
    if degeneracy > report.degeneracy_bound {
        return fail(format!("ordering has back degree {degeneracy}, bound {}", report.degeneracy_bound));
    }
    Ok(report)
}
