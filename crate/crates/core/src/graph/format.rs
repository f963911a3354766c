//! Line-oriented text formats. `#` starts a comment; blank lines are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::bipartite::BipartiteMatchingGraph;
use crate::graph::digraph::Digraph;
use crate::graph::undirected::{norm, UndirectedGraph};

/// Non-empty content lines with their 1-based line numbers.
pub fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = line.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_num(line: usize, tok: &str) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| perr(line, format!("expected a non-negative integer, found `{tok}`")))
}

fn expect_len(line: usize, toks: &[&str], len: usize) -> Result<()> {
    if toks.len() != len {
        return Err(perr(line, format!("expected {len} fields, found {}", toks.len())));
    }
    Ok(())
}

/// Header keyword of the first content line (`digraph`, `graph`, `bigraph`, ...).
pub fn sniff(text: &str) -> Option<String> {
    content_lines(text).next().map(|(_, t)| t[0].to_string())
}

fn header<'a>(text: &'a str, word: &str, fields: usize) -> Result<(usize, Vec<&'a str>, Vec<(usize, Vec<&'a str>)>)> {
    let mut lines = content_lines(text);
    let (ln, toks) = lines.next().ok_or_else(|| perr(1, format!("missing `{word}` header")))?;
    if toks[0] != word {
        return Err(perr(ln, format!("expected `{word}` header, found `{}`", toks[0])));
    }
    expect_len(ln, &toks, fields + 1)?;
    Ok((ln, toks, lines.collect()))
}

fn parse_pairs(rest: &[(usize, Vec<&str>)], n: usize, directed: bool) -> Result<Vec<(usize, usize)>> {
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for (ln, toks) in rest {
        expect_len(*ln, toks, 2)?;
        let u = parse_num(*ln, toks[0])?;
        let v = parse_num(*ln, toks[1])?;
        if u >= n || v >= n {
            return Err(perr(*ln, format!("vertex out of range (n = {n})")));
        }
        if u == v {
            return Err(perr(*ln, format!("loop at vertex {u}")));
        }
        let key = if directed { (u, v) } else { norm(u, v) };
        if !seen.insert(key) {
            return Err(perr(*ln, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    Ok(edges)
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let (ln, toks, rest) = header(text, "digraph", 1)?;
    let n = parse_num(ln, toks[1])?;
    let edges = parse_pairs(&rest, n, true)?;
    Digraph::from_edges(n, edges)
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut s = format!("digraph {}\n", d.n());
    for (u, v) in d.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn parse_graph(text: &str) -> Result<UndirectedGraph> {
    let (ln, toks, rest) = header(text, "graph", 1)?;
    let n = parse_num(ln, toks[1])?;
    let edges = parse_pairs(&rest, n, false)?;
    UndirectedGraph::from_edges(n, edges)
}

pub fn write_graph(g: &UndirectedGraph) -> String {
    let mut s = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// `bigraph nA nB`, edge lines `a b`, a `matching` line, then nA pairs `a b`.
/// Side A gets ids 0..nA and side B gets ids nA..nA+nB.
pub fn parse_bigraph(text: &str) -> Result<BipartiteMatchingGraph> {
    let (ln, toks, rest) = header(text, "bigraph", 2)?;
    let na = parse_num(ln, toks[1])?;
    let nb = parse_num(ln, toks[2])?;
    let split = rest
        .iter()
        .position(|(_, t)| t[0] == "matching")
        .ok_or_else(|| perr(rest.last().map_or(ln, |r| r.0), "missing `matching` line"))?;
    expect_len(rest[split].0, &rest[split].1, 1)?;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for (l, t) in &rest[..split] {
        expect_len(*l, t, 2)?;
        let (a, b) = (parse_num(*l, t[0])?, parse_num(*l, t[1])?);
        if a >= na || b >= nb {
            return Err(perr(*l, format!("edge {a} {b} out of range")));
        }
        if !seen.insert((a, b)) {
            return Err(perr(*l, format!("duplicate edge {a} {b}")));
        }
        edges.push((a, na + b));
    }
    let mut matching = Vec::new();
    for (l, t) in &rest[split + 1..] {
        expect_len(*l, t, 2)?;
        let (a, b) = (parse_num(*l, t[0])?, parse_num(*l, t[1])?);
        if a >= na || b >= nb || !seen.contains(&(a, b)) {
            return Err(perr(*l, format!("matching pair {a} {b} is not an edge")));
        }
        matching.push((a, na + b));
    }
    if matching.len() != na || na != nb {
        return Err(perr(ln, format!("matching must have exactly nA = nB pairs, found {}", matching.len())));
    }
    let base = UndirectedGraph::from_edges(na + nb, edges)?;
    BipartiteMatchingGraph::new(base, (0..na).collect(), (na..na + nb).collect(), matching)
}

/// Writes a bipartite graph; sides are renumbered by their order in `part_a` / `part_b`.
pub fn write_bigraph(g: &BipartiteMatchingGraph) -> String {
    let mut ia = vec![usize::MAX; g.n()];
    let mut ib = vec![usize::MAX; g.n()];
    for (i, &a) in g.part_a.iter().enumerate() {
        ia[a] = i;
    }
    for (i, &b) in g.part_b.iter().enumerate() {
        ib[b] = i;
    }
    let mut s = format!("bigraph {} {}\n", g.part_a.len(), g.part_b.len());
    let mut lines: Vec<(usize, usize)> = g
        .base
        .edges()
        .into_iter()
        .map(|(u, v)| if ia[u] != usize::MAX { (ia[u], ib[v]) } else { (ia[v], ib[u]) })
        .collect();
    lines.sort_unstable();
    for (a, b) in lines {
        let _ = writeln!(s, "{a} {b}");
    }
    s.push_str("matching\n");
    for &(a, b) in &g.matching {
        let _ = writeln!(s, "{} {}", ia[a], ib[b]);
    }
    s
}

/// `color v c` lines; every vertex of 0..n must be coloured exactly once.
pub fn parse_colouring(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut c = vec![usize::MAX; n];
    for (ln, t) in content_lines(text) {
        if t[0] != "color" {
            return Err(perr(ln, format!("expected `color v c`, found `{}`", t[0])));
        }
        expect_len(ln, &t, 3)?;
        let v = parse_num(ln, t[1])?;
        if v >= n {
            return Err(perr(ln, format!("vertex {v} out of range")));
        }
        if c[v] != usize::MAX {
            return Err(perr(ln, format!("vertex {v} coloured twice")));
        }
        c[v] = parse_num(ln, t[2])?;
    }
    if let Some(v) = c.iter().position(|&x| x == usize::MAX) {
        return Err(Error::PartialColouring(v));
    }
    Ok(c)
}

pub fn write_colouring(c: &[usize]) -> String {
    let mut s = String::new();
    for (v, col) in c.iter().enumerate() {
        let _ = writeln!(s, "color {v} {col}");
    }
    s
}

/// `list v c1 c2 ...` lines; every vertex of 0..n needs a non-empty list.
pub fn parse_lists(text: &str, n: usize) -> Result<Vec<Vec<usize>>> {
    let mut lists: Vec<Option<Vec<usize>>> = vec![None; n];
    for (ln, t) in content_lines(text) {
        if t[0] != "list" || t.len() < 3 {
            return Err(perr(ln, "expected `list v c1 c2 ...`"));
        }
        let v = parse_num(ln, t[1])?;
        if v >= n {
            return Err(perr(ln, format!("vertex {v} out of range")));
        }
        if lists[v].is_some() {
            return Err(perr(ln, format!("vertex {v} listed twice")));
        }
        let mut l = t[2..].iter().map(|x| parse_num(ln, x)).collect::<Result<Vec<_>>>()?;
        l.sort_unstable();
        l.dedup();
        lists[v] = Some(l);
    }
    lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| Error::Parse { line: 0, message: format!("vertex {v} has no list") }))
        .collect()
}

pub fn write_lists(lists: &[Vec<usize>]) -> String {
    let mut s = String::new();
    for (v, l) in lists.iter().enumerate() {
        let cols: Vec<String> = l.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(s, "list {v} {}", cols.join(" "));
    }
    s
}

/// `weight u v bit` lines.
pub fn parse_weights(text: &str) -> Result<Vec<((usize, usize), u8)>> {
    let mut out = Vec::new();
    for (ln, t) in content_lines(text) {
        if t[0] != "weight" {
            return Err(perr(ln, "expected `weight u v bit`"));
        }
        expect_len(ln, &t, 4)?;
        let bit = parse_num(ln, t[3])?;
        if bit > 1 {
            return Err(perr(ln, "weight must be 0 or 1"));
        }
        out.push(((parse_num(ln, t[1])?, parse_num(ln, t[2])?), bit as u8));
    }
    Ok(out)
}

/// `mcolor a b c` lines (undirected edge a b gets colour c).
pub fn parse_edge_colours(text: &str) -> Result<Vec<((usize, usize), usize)>> {
    let mut out = Vec::new();
    for (ln, t) in content_lines(text) {
        if t[0] != "mcolor" {
            return Err(perr(ln, "expected `mcolor a b c`"));
        }
        expect_len(ln, &t, 4)?;
        out.push(((parse_num(ln, t[1])?, parse_num(ln, t[2])?), parse_num(ln, t[3])?));
    }
    Ok(out)
}

pub fn write_edge_colours<'a, I: IntoIterator<Item = (&'a (usize, usize), &'a usize)>>(it: I) -> String {
    let mut s = String::new();
    for ((a, b), c) in it {
        let _ = writeln!(s, "mcolor {a} {b} {c}");
    }
    s
}
