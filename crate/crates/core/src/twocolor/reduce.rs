use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evenness::is_noneven;
use crate::graph::structure::{butterfly_contract, cut_vertices, one_sum_split, strong_components};
use crate::graph::Digraph;
use crate::twocolor::colouring::{check_classes, VertexColouring};

/// One node of the reduction, with ids relative to the digraph it was applied to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ReductionStep {
    Base,
    ZeroSum {
        components: Vec<Vec<usize>>,
    },
    OneSum {
        vertex: usize,
        x: Vec<usize>,
        y: Vec<usize>,
    },
    DigonTriple {
        v: usize,
        v1: usize,
        v2: usize,
        deleted: Vec<(usize, usize)>,
    },
    ButterflyCase2 {
        v: usize,
        v1: usize,
        v2: usize,
        deleted: Vec<(usize, usize)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceNode {
    pub digraph: Digraph,
    pub step: ReductionStep,
    /// Indices of the nodes for the digraphs this step recursed on.
    pub children: Vec<usize>,
    /// Colouring returned for this node's digraph.
    pub colours: Vec<usize>,
}

/// Pre-order list of reduction nodes; node 0 is the input digraph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub nodes: Vec<TraceNode>,
}

impl ReductionTrace {
    pub fn steps(&self) -> impl Iterator<Item = &ReductionStep> {
        self.nodes.iter().map(|n| &n.step)
    }

    pub fn leaves(&self) -> impl Iterator<Item = &Digraph> {
        self.nodes.iter().filter(|n| n.children.is_empty()).map(|n| &n.digraph)
    }

    pub fn to_json(&self) -> String {
        let steps: Vec<&ReductionStep> = self.steps().collect();
        serde_json::to_string(&steps).expect("trace serialises")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoColouring {
    pub colouring: VertexColouring,
    pub trace: ReductionTrace,
}

/// Delete every in-edge of v not coming from v1 or v2, delete all edges among {v, v1, v2} and
/// identify the three vertices. The merged vertex takes the place of the smallest of them.
pub fn three_vertex_contract(d: &Digraph, v: usize) -> Result<(Digraph, Vec<usize>)> {
    let (v1, v2) = match d.out(v) {
        [a, b] => (*a, *b),
        _ => return Err(Error::PreconditionViolated(format!("vertex {v} does not have out-degree 2"))),
    };
    if !d.is_digon(v, v1) || !d.is_digon(v, v2) {
        return Err(Error::PreconditionViolated(format!("vertex {v} is not in digons with both out-neighbours")));
    }
    let (_, map) = triple_map(d.n(), v, v1, v2);
    let kept = d.edges().into_iter().filter(|&(a, b)| !(b == v && a != v1 && a != v2));
    let pruned = Digraph::from_edges_unified(d.n(), kept);
    Ok((pruned.quotient(&map, d.n() - 2), map))
}

fn triple_map(n: usize, v: usize, v1: usize, v2: usize) -> (usize, Vec<usize>) {
    let rep = v.min(v1).min(v2);
    let mut map = vec![0; n];
    let mut next = 0;
    for (w, slot) in map.iter_mut().enumerate() {
        if w == v || w == v1 || w == v2 {
            if w != rep {
                continue;
            }
        }
        *slot = next;
        next += 1;
    }
    let r = map[rep];
    map[v] = r;
    map[v1] = r;
    map[v2] = r;
    (r, map)
}

struct Reducer {
    nodes: Vec<TraceNode>,
}

fn lift_failed(what: &str) -> Error {
    Error::EvenInputDetected(format!("lifted colouring is not proper after {what}"))
}

impl Reducer {
    fn run(&mut self, d: &Digraph) -> Result<Vec<usize>> {
        let id = self.nodes.len();
        self.nodes.push(TraceNode { digraph: d.clone(), step: ReductionStep::Base, children: Vec::new(), colours: Vec::new() });
        let (step, children, colours) = self.reduce(d)?;
        let node = &mut self.nodes[id];
        node.step = step;
        node.children = children;
        node.colours = colours.clone();
        Ok(colours)
    }

    fn reduce(&mut self, d: &Digraph) -> Result<(ReductionStep, Vec<usize>, Vec<usize>)> {
        let n = d.n();
        if n <= 2 {
            return Ok((ReductionStep::Base, Vec::new(), (0..n).collect()));
        }
        let comps = strong_components(d);
        if comps.len() > 1 {
            let mut colours = vec![0; n];
            let mut children = Vec::new();
            for comp in &comps {
                let (sub, back) = d.induced(comp);
                children.push(self.nodes.len());
                let c = self.run(&sub)?;
                for (i, &v) in back.iter().enumerate() {
                    colours[v] = c[i];
                }
            }
            if !check_classes(d, &colours).is_proper() {
                return Err(lift_failed("0-sum"));
            }
            return Ok((ReductionStep::ZeroSum { components: comps }, children, colours));
        }
        let cuts = cut_vertices(d)?;
        if let Some(&w) = cuts.first() {
            let split = one_sum_split(d, w)?;
            let id1 = self.nodes.len();
            let c1 = self.run(&split.d1)?;
            let id2 = self.nodes.len();
            let mut c2 = self.run(&split.d2)?;
            if c1[split.v1] != c2[split.v2] {
                for c in c2.iter_mut() {
                    *c = 1 - *c;
                }
            }
            let mut colours = vec![0; n];
            for &x in &split.x {
                colours[x] = c1[split.map1[x]];
            }
            for &y in &split.y {
                colours[y] = c2[split.map2[y]];
            }
            colours[w] = c1[split.v1];
            if !check_classes(d, &colours).is_proper() {
                return Err(lift_failed("1-sum"));
            }
            let step = ReductionStep::OneSum { vertex: w, x: split.x, y: split.y };
            return Ok((step, vec![id1, id2], colours));
        }
        let v = (0..n).find(|&v| d.out_degree(v) == 2).ok_or(Error::NoOutDegreeTwoVertex(n))?;
        let (v1, v2) = (d.out(v)[0], d.out(v)[1]);
        if d.is_digon(v, v1) && d.is_digon(v, v2) {
            if d.is_digon(v1, v2) {
                return Err(Error::EvenInputDetected(format!("vertices {v}, {v1}, {v2} span a bidirected triangle")));
            }
            let (dstar, map) = three_vertex_contract(d, v)?;
            let mut deleted: Vec<(usize, usize)> =
                d.inn(v).iter().filter(|&&u| u != v1 && u != v2).map(|&u| (u, v)).collect();
            for &a in &[v, v1, v2] {
                for &b in &[v, v1, v2] {
                    if d.has_edge(a, b) {
                        deleted.push((a, b));
                    }
                }
            }
            let child = self.nodes.len();
            let cs = self.run(&dstar)?;
            let mut colours: Vec<usize> = (0..n).map(|x| cs[map[x]]).collect();
            colours[v] = 1 - cs[map[v]];
            if !check_classes(d, &colours).is_proper() {
                return Err(lift_failed("digon triple contraction"));
            }
            return Ok((ReductionStep::DigonTriple { v, v1, v2, deleted }, vec![child], colours));
        }
        // Case 2: e1 = (v, v1) is digon-free.
        let (v1, v2) = if d.is_digon(v, v1) { (v2, v1) } else { (v1, v2) };
        let mut deleted = vec![(v, v2)];
        if d.has_edge(v2, v) {
            deleted.push((v2, v));
        }
        let reduced = d.remove_edges(&deleted);
        let (dprime, map) = butterfly_contract(&reduced, v, v1)?;
        let child = self.nodes.len();
        let cp = self.run(&dprime)?;
        let mut colours: Vec<usize> = (0..n).map(|x| cp[map[x]]).collect();
        colours[v] = 1 - cp[map[v2]];
        if !check_classes(d, &colours).is_proper() {
            return Err(lift_failed("butterfly contraction"));
        }
        Ok((ReductionStep::ButterflyCase2 { v, v1, v2, deleted }, vec![child], colours))
    }
}

/// Proper 2-colouring of a non-even digraph by the sum-splitting and contraction reduction.
/// The input is trusted to be non-even; a failed lift is reported as `EvenInputDetected`.
pub fn two_color(d: &Digraph) -> Result<TwoColouring> {
    let mut r = Reducer { nodes: Vec::new() };
    let colours = r.run(d)?;
    Ok(TwoColouring { colouring: VertexColouring::new(colours, 2), trace: ReductionTrace { nodes: r.nodes } })
}

/// As `two_color`, but certifies non-evenness first.
pub fn two_color_checked(d: &Digraph) -> Result<TwoColouring> {
    if !is_noneven(d)?.is_noneven() {
        return Err(Error::EvenInputDetected("odd weighting system is inconsistent".into()));
    }
    two_color(d)
}
