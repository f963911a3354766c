use std::io::Read;

use anyhow::{bail, Context, Result};
use dichromatic::graph::format::{content_lines, parse_bigraph, parse_digraph, parse_graph, sniff};
use dichromatic::hardness::{parse_dimacs, CnfFormula};
use dichromatic::{BipartiteMatchingGraph, Digraph, UndirectedGraph};

/// File contents; `-` reads standard input.
pub fn read(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
}

/// Header word of a text input; DIMACS files start with `c` or `p`.
pub fn kind(text: &str) -> Option<String> {
    sniff(text).map(|w| if w == "c" || w == "p" { "cnf".to_string() } else { w })
}

fn expect(text: &str, path: &str, want: &[&str]) -> Result<String> {
    match kind(text) {
        Some(k) if want.contains(&k.as_str()) => Ok(k),
        Some(k) => bail!(Usage(format!("{path}: expected {}, found `{k}` input", want.join(" or ")))),
        None => bail!(Usage(format!("{path}: empty input"))),
    }
}

pub fn digraph(path: &str) -> Result<Digraph> {
    let text = read(path)?;
    expect(&text, path, &["digraph"])?;
    Ok(parse_digraph(&text)?)
}

pub fn bigraph(path: &str) -> Result<BipartiteMatchingGraph> {
    let text = read(path)?;
    expect(&text, path, &["bigraph"])?;
    Ok(parse_bigraph(&text)?)
}

/// An undirected graph, with its designated matching when the input is a bigraph.
pub fn graph_or_bigraph(path: &str) -> Result<(UndirectedGraph, Option<BipartiteMatchingGraph>)> {
    let text = read(path)?;
    Ok(match expect(&text, path, &["graph", "bigraph"])?.as_str() {
        "graph" => (parse_graph(&text)?, None),
        _ => {
            let b = parse_bigraph(&text)?;
            (b.base.clone(), Some(b))
        }
    })
}

pub fn cnf(path: &str) -> Result<CnfFormula> {
    let text = read(path)?;
    expect(&text, path, &["cnf"])?;
    Ok(parse_dimacs(&text)?)
}

/// Content lines starting with `word`, re-joined; other lines are ignored.
pub fn lines_with(text: &str, word: &str) -> String {
    content_lines(text).filter(|(_, t)| t[0] == word).map(|(_, t)| t.join(" ") + "\n").collect()
}

/// Tokens after `word` on each matching line.
pub fn fields<'a>(text: &'a str, word: &str) -> Vec<(usize, Vec<&'a str>)> {
    content_lines(text).filter(|(_, t)| t[0] == word).map(|(l, t)| (l, t[1..].to_vec())).collect()
}

pub fn num(line: usize, tok: &str) -> Result<usize> {
    Ok(dichromatic::graph::format::parse_num(line, tok)?)
}

/// A malformed request or input; exits with status 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct Usage(pub String);

/// A certificate that did not check out; exits with status 4.
#[derive(Debug, thiserror::Error)]
#[error("rejected: {0}")]
pub struct Rejected(pub String);
