use anyhow::{bail, Result};
use dichromatic::evenness::{check_certificate, check_even_witness, is_noneven, EvenWitness, EvennessDecision, OddWeightCertificate};
use dichromatic::fractional::{
    check_fractional_witness, check_fvs_packing, check_star_colouring, fractional_dichromatic, fvs_packing, star_dichromatic,
    Rational,
};
use dichromatic::graph::format::{parse_colouring, parse_edge_colours, parse_lists, parse_weights, write_bigraph, write_colouring, write_digraph, write_graph};
use dichromatic::graph::generators::*;
use dichromatic::graph::{norm, Matching};
use dichromatic::hardness::{certify, decode_colouring, encode_assignment, lift_to_k, reduce_sat, CnfFormula, ReductionArtifact};
use dichromatic::listcolor::{choose3_noneven, is_list_colouring, list_colouring_search, ListAssignment};
use dichromatic::matching::{
    cut_separation, forcing_number, forcing_partition, is_forcing, is_tight_cut, m_direction, perfect_matchings, splitting_graph,
    verify_m_colouring, CutOracle, EdgeColouring,
};
use dichromatic::specialfamilies::{
    compose_via_tight_cuts, no_super_colouring_example, staircase_super_colouring, super_colouring_violation, tricorn_matching_colouring,
    wheel_matching_colouring,
};
use dichromatic::twocolor::{check_classes, exact_dichromatic_with_limit, two_color_checked, ColouringCheck, VertexColouring};
use dichromatic::{BipartiteMatchingGraph, Digraph, UndirectedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::input::{self, fields, lines_with, num, Rejected, Usage};

/// What a command prints: plain text, or JSON under `--json`.
pub struct Output {
    pub text: String,
    pub json: Value,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json }
    }
}

fn words(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn noneven(path: &str) -> Result<Output> {
    let d = input::digraph(path)?;
    Ok(match is_noneven(&d)? {
        EvennessDecision::NonEven(cert) => {
            let mut text = String::from("noneven\n");
            for (u, v) in d.edges() {
                text += &format!("weight {u} {v} {}\n", cert.weight(u, v));
            }
            Output::new(text, json!({ "verdict": "noneven", "certificate": cert }))
        }
        EvennessDecision::Even(w) => {
            let mut text = String::from("even\n");
            for c in &w.cycles {
                text += &format!("cycle {}\n", words(c));
            }
            Output::new(text, json!({ "verdict": "even", "witness": w }))
        }
    })
}

pub fn color2(path: &str, trace: bool) -> Result<Output> {
    let d = input::digraph(path)?;
    let t = two_color_checked(&d)?;
    let mut text = write_colouring(&t.colouring.colours);
    if trace {
        for node in &t.trace.nodes {
            let step = serde_json::to_value(&node.step)?;
            text += &format!("# step {} on {} vertices\n", step["kind"].as_str().unwrap_or("?"), node.digraph.n());
        }
    }
    let mut j = json!({ "colouring": t.colouring.colours });
    if trace {
        j["trace"] = serde_json::to_value(&t.trace)?;
    }
    Ok(Output::new(text, j))
}

#[derive(Clone, Copy, Debug)]
pub enum ChiMode {
    Exact,
    Fractional,
    Star,
}

pub fn chi(path: &str, mode: ChiMode, limit: usize) -> Result<Output> {
    let d = input::digraph(path)?;
    Ok(match mode {
        ChiMode::Exact => {
            let (k, c) = exact_dichromatic_with_limit(&d, limit)?;
            Output::new(format!("chi {k}\n{}", write_colouring(&c.colours)), json!({ "chi": k, "colouring": c.colours }))
        }
        ChiMode::Fractional => {
            let r = fractional_dichromatic(&d)?;
            let mut text = format!("fractional {}\n", r.value);
            for (s, w) in r.family.sets.iter().zip(&r.primal) {
                if *w != Rational::from_integer(0.into()) {
                    text += &format!("set {w} {}\n", words(s));
                }
            }
            for (v, w) in r.dual.iter().enumerate() {
                text += &format!("dual {v} {w}\n");
            }
            Output::new(text, serde_json::to_value(&r)?)
        }
        ChiMode::Star => {
            let r = star_dichromatic(&d)?;
            let text = format!("star {} {} {}\n{}", r.value, r.k, r.d, write_colouring(&r.colouring));
            Output::new(text, serde_json::to_value(&r)?)
        }
    })
}

fn artifact_for(phi: &CnfFormula, k: usize) -> Result<ReductionArtifact> {
    let art = reduce_sat(phi);
    Ok(if k > 2 { lift_to_k(&art, k)? } else { art })
}

pub fn reduce_sat_cmd(path: &str, k: usize, sidecar: Option<&str>) -> Result<Output> {
    if k < 2 {
        bail!(Usage(format!("-k must be at least 2, got {k}")));
    }
    let phi = input::cnf(path)?;
    let art = artifact_for(&phi, k)?;
    let side = art.sidecar_json();
    if let Some(p) = sidecar {
        std::fs::write(p, &side)?;
    }
    let j = json!({ "digraph": art.digraph, "sidecar": serde_json::from_str::<Value>(&side)? });
    Ok(Output::new(write_digraph(&art.digraph), j))
}

/// The reduction artifact whose digraph is `d`, with k read off the number of apex vertices.
fn matching_artifact(phi: &CnfFormula, d: &Digraph) -> Result<ReductionArtifact> {
    let base = reduce_sat(phi);
    if d.n() < base.digraph.n() {
        bail!(Usage("digraph is smaller than the reduction of this formula".into()));
    }
    let art = artifact_for(phi, 2 + d.n() - base.digraph.n())?;
    if &art.digraph != d {
        bail!(Usage("digraph is not the reduction of this formula".into()));
    }
    Ok(art)
}

fn assignment_line(beta: &[bool]) -> String {
    let lits: Vec<String> = beta.iter().enumerate().map(|(i, &b)| if b { format!("{}", i + 1) } else { format!("-{}", i + 1) }).collect();
    format!("v {} 0\n", lits.join(" "))
}

pub fn decode(cnf: &str, digraph: &str, colouring: &str) -> Result<Output> {
    let phi = input::cnf(cnf)?;
    let d = input::digraph(digraph)?;
    let art = matching_artifact(&phi, &d)?;
    let c = parse_colouring(&lines_with(&input::read(colouring)?, "color"), d.n())?;
    let beta = decode_colouring(&phi, &art, &VertexColouring::from_colours(c))?;
    if !phi.evaluate(&beta) {
        bail!(dichromatic::Error::CertificateFailed("decoded assignment does not satisfy the formula".into()));
    }
    Ok(Output::new(assignment_line(&beta), json!({ "assignment": beta })))
}

/// Reads `v` lines; unlisted variables are false.
fn parse_assignment(phi: &CnfFormula, text: &str) -> Result<Vec<bool>> {
    let mut beta = vec![false; phi.vars];
    for (l, t) in fields(text, "v") {
        for tok in t {
            let lit: i64 = tok.parse().map_err(|_| Usage(format!("line {l}: bad literal `{tok}`")))?;
            if lit.unsigned_abs() as usize > phi.vars {
                bail!(Usage(format!("line {l}: literal {lit} out of range")));
            }
            if lit > 0 {
                beta[lit as usize - 1] = true;
            }
        }
    }
    Ok(beta)
}

pub fn encode(cnf: &str, digraph: &str, assignment: &str) -> Result<Output> {
    let phi = input::cnf(cnf)?;
    let d = input::digraph(digraph)?;
    let art = matching_artifact(&phi, &d)?;
    let beta = parse_assignment(&phi, &input::read(assignment)?)?;
    if !phi.evaluate(&beta) {
        bail!(Rejected("assignment falsifies a clause".into()));
    }
    let c = encode_assignment(&phi, &art, &beta)?;
    Ok(Output::new(write_colouring(&c.colours), json!({ "colouring": c.colours })))
}

pub fn mdirection(path: &str) -> Result<Output> {
    let b = input::bigraph(path)?;
    let md = m_direction(&b);
    let na = b.part_a.len();
    let mut text = write_digraph(&md.digraph);
    for (i, &(a, bb)) in md.vertex_to_edge.iter().enumerate() {
        text += &format!("# vertex {i} = matching pair {a} {}\n", bb - na);
    }
    Ok(Output::new(text, serde_json::to_value(&md)?))
}

pub fn split(path: &str) -> Result<Output> {
    let d = input::digraph(path)?;
    let b = splitting_graph(&d);
    Ok(Output::new(write_bigraph(&b), serde_json::to_value(&b)?))
}

pub fn tightcuts(path: &str) -> Result<Output> {
    let (g, b) = input::graph_or_bigraph(path)?;
    let cuts = CutOracle::new(&g)?.nontrivial_tight_cuts()?;
    let mut text = String::new();
    let mut js = Vec::new();
    for x in &cuts {
        text += &format!("shore {}\n", words(&x.shore));
        let sep = match &b {
            Some(b) => cut_separation(b, &x.shore)?,
            None => None,
        };
        if let Some((p, q)) = &sep {
            text += &format!("# separation {} | {}\n", words(p), words(q));
        }
        js.push(json!({ "shore": x.shore, "separation": sep }));
    }
    Ok(Output::new(text, json!({ "tight_cuts": js })))
}

/// Bigraph files number each side from 0; internally side B follows side A.
fn local_pair(b: &BipartiteMatchingGraph, (u, v): (usize, usize)) -> (usize, usize) {
    let na = b.part_a.len();
    let (a, bb) = if u < na { (u, v) } else { (v, u) };
    (a, bb - na)
}

fn global_pair(b: &BipartiteMatchingGraph, line: usize, t: &[&str]) -> Result<(usize, usize)> {
    if t.len() != 2 {
        bail!(Usage(format!("line {line}: expected two vertex ids")));
    }
    Ok((num(line, t[0])?, b.part_a.len() + num(line, t[1])?))
}

pub fn forcing(path: &str, partition: bool) -> Result<Output> {
    let b = input::bigraph(path)?;
    let m = b.matching_normalised();
    if partition {
        let p = forcing_partition(&b)?;
        let mut text = String::new();
        for (i, part) in p.parts.iter().enumerate() {
            for &e in part {
                let (a, bb) = local_pair(&b, e);
                text += &format!("part {i} {a} {bb}\n");
            }
        }
        return Ok(Output::new(text, serde_json::to_value(&p)?));
    }
    let (f, s) = forcing_number(&b.base, &m)?;
    let mut text = format!("forcing-number {f}\n");
    for &e in &s {
        let (a, bb) = local_pair(&b, e);
        text += &format!("force {a} {bb}\n");
    }
    Ok(Output::new(text, json!({ "forcing_number": f, "forcing_set": s })))
}

fn param(params: &[String], i: usize, name: &str) -> Result<usize> {
    let p = params.get(i).ok_or_else(|| Usage(format!("missing parameter <{name}>")))?;
    p.parse().map_err(|_| Usage(format!("<{name}> must be a non-negative integer, got `{p}`")).into())
}

pub const FAMILIES: &str = "dcycle N, bicycle K, f7, wheel K, staircase ORDER, prism, tricorn, grid, gridbigraph, listexample, \
cube, heawood, kbip P Q, cycle N, nosuper, random N P, cnf VARS CLAUSES";

fn random_cnf(rng: &mut ChaCha8Rng, vars: usize, clauses: usize) -> Result<CnfFormula> {
    if vars < 3 {
        bail!(Usage("random 3-CNF needs at least 3 variables".into()));
    }
    let all: Vec<i64> = (1..=vars as i64).collect();
    let cs = (0..clauses)
        .map(|_| all.choose_multiple(rng, 3).map(|&x| if rng.gen_bool(0.5) { x } else { -x }).collect())
        .collect();
    Ok(CnfFormula::new(vars, cs)?)
}

pub fn gen(family: &str, params: &[String], seed: u64) -> Result<Output> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = |d: Digraph| Output::new(write_digraph(&d), serde_json::to_value(&d).expect("json"));
    let g = |g: UndirectedGraph| Output::new(write_graph(&g), serde_json::to_value(&g).expect("json"));
    Ok(match family {
        "dcycle" => d(directed_cycle(param(params, 0, "n")?)?),
        "bicycle" | "oddbicycle" => d(odd_bicycle(param(params, 0, "k")?)?),
        "f7" => d(f7()),
        "grid" => d(grid_example()),
        "listexample" => d(list_example()),
        "random" => {
            let n = param(params, 0, "n")?;
            let p: f64 = params.get(1).map_or(Ok(0.3), |s| s.parse()).map_err(|_| Usage("<p> must be a number".into()))?;
            if !(0.0..=1.0).contains(&p) {
                bail!(Usage("<p> must lie in [0, 1]".into()));
            }
            let edges: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| u != v).filter(|_| rng.gen_bool(p)).collect();
            d(Digraph::from_edges(n, edges)?)
        }
        "wheel" => g(odd_wheel(param(params, 0, "k")?)?),
        "staircase" => g(staircase(param(params, 0, "order")?)?),
        "prism" => g(prism()),
        "tricorn" => g(tricorn()),
        "cube" => g(cube()),
        "heawood" => g(heawood()),
        "kbip" => g(complete_bipartite(param(params, 0, "p")?, param(params, 1, "q")?)),
        "cycle" => g(cycle_graph(param(params, 0, "n")?)?),
        "nosuper" => g(no_super_colouring_example()),
        "gridbigraph" => {
            let b = grid_example_bigraph();
            Output::new(write_bigraph(&b), serde_json::to_value(&b)?)
        }
        "cnf" => {
            let phi = random_cnf(&mut rng, param(params, 0, "vars")?, param(params, 1, "clauses")?)?;
            Output::new(phi.to_dimacs(), serde_json::to_value(&phi)?)
        }
        other => bail!(Usage(format!("unknown family `{other}`; known: {FAMILIES}"))),
    })
}

fn colouring_block(c: &EdgeColouring) -> String {
    c.as_lines().into_iter().map(|(a, b, k)| format!("mcolor {a} {b} {k}\n")).collect()
}

pub fn mcolor(family: &str, params: &[String], index: usize, all: bool) -> Result<Output> {
    if family == "staircase" {
        let c = staircase_super_colouring(param(params, 0, "order")?)?;
        return Ok(Output::new(colouring_block(&c), json!({ "colouring": c })));
    }
    let (g, given): (UndirectedGraph, Option<Matching>) = match family {
        "wheel" => (odd_wheel(param(params, 0, "k")?)?, None),
        "tricorn" => (tricorn(), None),
        "graph" => {
            let path = params.first().ok_or_else(|| Usage("missing parameter <file>".into()))?;
            let (g, b) = input::graph_or_bigraph(path)?;
            let m = b.map(|b| b.matching_normalised());
            (g, m)
        }
        other => bail!(Usage(format!("unknown family `{other}`; known: wheel K, staircase ORDER, tricorn, graph FILE"))),
    };
    let matchings = match (given, all) {
        (Some(m), false) => vec![m],
        _ => {
            let ms = perfect_matchings(&g, 100_000)?;
            if all {
                ms
            } else {
                vec![ms.get(index).cloned().ok_or_else(|| Usage(format!("there are only {} perfect matchings", ms.len())))?]
            }
        }
    };
    let mut text = String::new();
    let mut js = Vec::new();
    for (i, m) in matchings.iter().enumerate() {
        let c = match family {
            "wheel" => wheel_matching_colouring(g.n() - 1, m)?,
            "tricorn" => tricorn_matching_colouring(m)?.colouring,
            _ => compose_via_tight_cuts(&g, m)?.colouring,
        };
        if all {
            text += &format!("# matching {i}\n");
        }
        text += &colouring_block(&c);
        js.push(json!({ "matching": m, "colouring": c }));
    }
    Ok(Output::new(text, json!({ "colourings": js })))
}

pub fn listcolor(digraph: &str, lists: &str, choose3: Option<usize>) -> Result<Output> {
    let d = input::digraph(digraph)?;
    let l = ListAssignment::new(parse_lists(&lines_with(&input::read(lists)?, "list"), d.n())?)?;
    let c = match choose3 {
        Some(v0) => Some(choose3_noneven(&d, &l, v0)?),
        None => list_colouring_search(&d, &l)?,
    };
    Ok(match c {
        Some(c) => Output::new(write_colouring(&c), json!({ "colouring": c })),
        None => Output::new("none\n".into(), json!({ "colouring": null })),
    })
}

pub fn fvspack(digraph: &str, g: usize) -> Result<Output> {
    let d = input::digraph(digraph)?;
    Ok(match fvs_packing(&d, g)? {
        Some(classes) => {
            let text = classes.iter().map(|c| format!("class {}\n", words(c))).collect();
            Output::new(text, json!({ "classes": classes }))
        }
        None => Output::new("none\n".into(), json!({ "classes": null })),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum VerifyKind {
    /// digraph, colouring
    Colouring,
    /// digraph, noneven output (weight lines)
    Weights,
    /// digraph, even output (cycle lines)
    Even,
    /// digraph, chi --fractional output
    Fractional,
    /// digraph, chi --star output
    Star,
    /// digraph, lists, colouring
    Lists,
    /// digraph, fvspack output
    Fvspack,
    /// graph or bigraph, mcolor output
    Mcolor,
    /// bigraph, forcing output
    Forcing,
    /// graph or bigraph, tightcuts output
    Tightcuts,
    /// cnf, decode output
    Sat,
    /// cnf, digraph
    Reduction,
}

fn need(inputs: &[String], n: usize, what: &str) -> Result<()> {
    if inputs.len() != n {
        bail!(Usage(format!("expected {n} inputs: {what}")));
    }
    Ok(())
}

fn accept(what: &str) -> Result<Output> {
    Ok(Output::new(format!("ok {what}\n"), json!({ "ok": true, "kind": what })))
}

fn rational(line: usize, tok: &str) -> Result<Rational> {
    tok.parse().map_err(|_| Usage(format!("line {line}: `{tok}` is not a rational number")).into())
}

pub fn verify(kind: VerifyKind, inputs: &[String]) -> Result<Output> {
    match kind {
        VerifyKind::Colouring => {
            need(inputs, 2, "digraph colouring")?;
            let d = input::digraph(&inputs[0])?;
            let c = parse_colouring(&lines_with(&input::read(&inputs[1])?, "color"), d.n())?;
            if let ColouringCheck::Monochromatic { colour, cycle } = check_classes(&d, &c) {
                bail!(Rejected(format!("cycle {} has colour {colour}", words(&cycle))));
            }
            accept("colouring")
        }
        VerifyKind::Weights => {
            need(inputs, 2, "digraph weights")?;
            let d = input::digraph(&inputs[0])?;
            let w = parse_weights(&lines_with(&input::read(&inputs[1])?, "weight"))?;
            let cert = OddWeightCertificate { weights: w.into_iter().collect() };
            if let Some(c) = check_certificate(&d, &cert)? {
                bail!(Rejected(format!("cycle {} has even weight", words(&c))));
            }
            accept("weights")
        }
        VerifyKind::Even => {
            need(inputs, 2, "digraph cycles")?;
            let d = input::digraph(&inputs[0])?;
            let text = input::read(&inputs[1])?;
            let cycles = fields(&text, "cycle")
                .into_iter()
                .map(|(l, t)| t.iter().map(|x| num(l, x)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            if !check_even_witness(&d, &EvenWitness { cycles }) {
                bail!(Rejected("not an odd family of cycles covering every edge evenly".into()));
            }
            accept("even")
        }
        VerifyKind::Fractional => {
            need(inputs, 2, "digraph fractional")?;
            let d = input::digraph(&inputs[0])?;
            let text = input::read(&inputs[1])?;
            let Some((l, t)) = fields(&text, "fractional").into_iter().next() else {
                bail!(Usage("missing `fractional` line".into()));
            };
            let value = rational(l, t.first().copied().unwrap_or(""))?;
            let mut sets = Vec::new();
            for (l, t) in fields(&text, "set") {
                let w = rational(l, t.first().copied().unwrap_or(""))?;
                let s = t[1..].iter().map(|x| num(l, x)).collect::<Result<Vec<_>>>()?;
                if s.iter().any(|&v| v >= d.n()) {
                    bail!(Usage(format!("line {l}: vertex out of range")));
                }
                sets.push((w, s));
            }
            let mut dual = vec![Rational::from_integer(0.into()); d.n()];
            for (l, t) in fields(&text, "dual") {
                if t.len() != 2 {
                    bail!(Usage(format!("line {l}: expected `dual v w`")));
                }
                let v = num(l, t[0])?;
                if v >= d.n() {
                    bail!(Usage(format!("line {l}: vertex out of range")));
                }
                dual[v] = rational(l, t[1])?;
            }
            if let Some(e) = check_fractional_witness(&d, &value, &sets, &dual)? {
                bail!(Rejected(e));
            }
            accept("fractional")
        }
        VerifyKind::Star => {
            need(inputs, 2, "digraph star")?;
            let d = input::digraph(&inputs[0])?;
            let text = input::read(&inputs[1])?;
            let Some((l, t)) = fields(&text, "star").into_iter().next() else {
                bail!(Usage("missing `star` line".into()));
            };
            if t.len() != 3 {
                bail!(Usage(format!("line {l}: expected `star value k d`")));
            }
            let (value, k, dd) = (rational(l, t[0])?, num(l, t[1])?, num(l, t[2])?);
            if dd == 0 || value != Rational::new((k as i64).into(), (dd as i64).into()) {
                bail!(Rejected(format!("{value} is not {k}/{dd}")));
            }
            let c = parse_colouring(&lines_with(&text, "color"), d.n())?;
            if !check_star_colouring(&d, k, dd, &c)? {
                bail!(Rejected("some window of colours induces a cycle".into()));
            }
            accept("star")
        }
        VerifyKind::Lists => {
            need(inputs, 3, "digraph lists colouring")?;
            let d = input::digraph(&inputs[0])?;
            let l = ListAssignment::new(parse_lists(&lines_with(&input::read(&inputs[1])?, "list"), d.n())?)?;
            let c = parse_colouring(&lines_with(&input::read(&inputs[2])?, "color"), d.n())?;
            if !is_list_colouring(&d, &l, &c) {
                bail!(Rejected("not a list colouring".into()));
            }
            accept("lists")
        }
        VerifyKind::Fvspack => {
            need(inputs, 2, "digraph classes")?;
            let d = input::digraph(&inputs[0])?;
            let text = input::read(&inputs[1])?;
            let classes = fields(&text, "class")
                .into_iter()
                .map(|(l, t)| t.iter().map(|x| num(l, x)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let covered: usize = classes.iter().map(|c| c.len()).sum();
            if covered != d.n() || !check_fvs_packing(&d, &classes)? {
                bail!(Rejected("classes are not disjoint feedback vertex sets covering all vertices".into()));
            }
            accept("fvspack")
        }
        VerifyKind::Mcolor => {
            need(inputs, 2, "graph mcolor")?;
            let (g, _) = input::graph_or_bigraph(&inputs[0])?;
            let text = input::read(&inputs[1])?;
            let mut blocks: Vec<String> = vec![String::new()];
            for line in text.lines() {
                if line.trim_start().starts_with("# matching") {
                    blocks.push(String::new());
                } else {
                    let last = blocks.last_mut().expect("block");
                    last.push_str(line);
                    last.push('\n');
                }
            }
            let mut checked = 0;
            for block in blocks {
                let pairs = parse_edge_colours(&lines_with(&block, "mcolor"))?;
                if pairs.is_empty() {
                    continue;
                }
                let c = EdgeColouring::from_pairs(pairs.iter().copied());
                let edges: Vec<(usize, usize)> = c.colours.keys().copied().collect();
                checked += 1;
                if edges.len() == g.m() && g.n() != 2 * edges.len() {
                    if let Some((m, cycle)) = super_colouring_violation(&g, &c)? {
                        bail!(Rejected(format!("matching {m:?} has monochromatic alternating cycle {}", words(&cycle))));
                    }
                } else if let Some(cycle) = verify_m_colouring(&g, &edges, &c)? {
                    bail!(Rejected(format!("monochromatic alternating cycle {}", words(&cycle))));
                }
            }
            if checked == 0 {
                bail!(Usage("no `mcolor` lines".into()));
            }
            accept("mcolor")
        }
        VerifyKind::Forcing => {
            need(inputs, 2, "bigraph forcing")?;
            let b = input::bigraph(&inputs[0])?;
            let m = b.matching_normalised();
            let text = input::read(&inputs[1])?;
            let force = fields(&text, "force")
                .into_iter()
                .map(|(l, t)| global_pair(&b, l, &t).map(|(u, v)| norm(u, v)))
                .collect::<Result<Vec<_>>>()?;
            let mut parts: [Vec<(usize, usize)>; 2] = [Vec::new(), Vec::new()];
            for (l, t) in fields(&text, "part") {
                if t.len() != 3 || !(t[0] == "0" || t[0] == "1") {
                    bail!(Usage(format!("line {l}: expected `part 0|1 a b`")));
                }
                let (u, v) = global_pair(&b, l, &t[1..])?;
                parts[num(l, t[0])?].push(norm(u, v));
            }
            if force.is_empty() && parts.iter().all(|p| p.is_empty()) {
                bail!(Usage("no `force` or `part` lines".into()));
            }
            if !force.is_empty() && (!force.iter().all(|e| m.contains(e)) || !is_forcing(&b.base, &m, &force)?) {
                bail!(Rejected("the `force` edges are not a forcing set of the matching".into()));
            }
            if parts.iter().any(|p| !p.is_empty()) {
                let mut union: Vec<(usize, usize)> = parts.concat();
                union.sort_unstable();
                if union != m {
                    bail!(Rejected("parts do not split the matching".into()));
                }
                for p in &parts {
                    if !is_forcing(&b.base, &m, p)? {
                        bail!(Rejected("a part is not forcing".into()));
                    }
                }
            }
            accept("forcing")
        }
        VerifyKind::Tightcuts => {
            need(inputs, 2, "graph shores")?;
            let (g, _) = input::graph_or_bigraph(&inputs[0])?;
            let text = input::read(&inputs[1])?;
            for (l, t) in fields(&text, "shore") {
                let s = t.iter().map(|x| num(l, x)).collect::<Result<Vec<_>>>()?;
                if s.len() < 3 || s.len() + 3 > g.n() + 1 || !is_tight_cut(&g, &s)? {
                    bail!(Rejected(format!("shore on line {l} is not a non-trivial tight cut")));
                }
            }
            accept("tightcuts")
        }
        VerifyKind::Sat => {
            need(inputs, 2, "cnf assignment")?;
            let phi = input::cnf(&inputs[0])?;
            let beta = parse_assignment(&phi, &input::read(&inputs[1])?)?;
            if !phi.evaluate(&beta) {
                bail!(Rejected("assignment falsifies a clause".into()));
            }
            accept("sat")
        }
        VerifyKind::Reduction => {
            need(inputs, 2, "cnf digraph")?;
            let phi = input::cnf(&inputs[0])?;
            let d = input::digraph(&inputs[1])?;
            let art = matching_artifact(&phi, &d).map_err(|e| Rejected(e.to_string()))?;
            let r = certify(&art)?;
            Ok(Output::new(
                format!("ok reduction fvs {} <= {} degeneracy {} <= {}\n", r.fvs_size, r.fvs_bound, r.degeneracy, r.degeneracy_bound),
                json!({ "ok": true, "kind": "reduction", "report": r }),
            ))
        }
    }
}
