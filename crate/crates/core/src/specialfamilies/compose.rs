use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fractional::planar::is_planar;
use crate::graph::bipartite::normalise_matching;
use crate::graph::generators::{odd_wheel, staircase, tricorn};
use crate::graph::iso::find_isomorphism;
use crate::graph::undirected::UndirectedGraph;
use crate::matching::cuts::{contract_matching, contract_shore, CutOracle};
use crate::matching::mcolour::{verify_m_colouring, EdgeColouring};
use crate::matching::mdirection::m_direction_of;
use crate::specialfamilies::families::{staircase_super_colouring, tricorn_matching_colouring, wheel_matching_colouring};
use crate::twocolor::two_color;

pub const COMPOSE_VERTEX_LIMIT: usize = 20;

/// A graph without non-trivial tight cuts met during the decomposition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Piece {
    Brace { n: usize },
    OddWheel { k: usize },
    Staircase { order: usize },
    Tricorn,
}

/// Which non-trivial tight cut to split along when there are several.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShoreChoice {
    /// Lexicographically smallest shore containing vertex 0.
    Smallest,
    Largest,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Composition {
    pub colouring: EdgeColouring,
    pub pieces: Vec<Piece>,
}

pub fn compose_via_tight_cuts(g: &UndirectedGraph, m: &[(usize, usize)]) -> Result<Composition> {
    compose_with(g, m, ShoreChoice::Smallest)
}

/// 2-colouring of a perfect matching of a planar matching covered graph whose bricks are odd
/// wheels, staircases of order divisible by 4 or tricorns. The graph is split along tight cuts,
/// each piece is coloured on its own, and the halves are merged so the cut's matching edge agrees.
pub fn compose_with(g: &UndirectedGraph, m: &[(usize, usize)], choice: ShoreChoice) -> Result<Composition> {
    if g.n() > COMPOSE_VERTEX_LIMIT {
        return Err(Error::TooLarge(format!("{} vertices exceeds limit {COMPOSE_VERTEX_LIMIT}", g.n())));
    }
    if !is_planar(g).is_planar() {
        return Err(Error::PreconditionViolated("graph is not planar".into()));
    }
    let out = split(g, &normalise_matching(m), choice)?;
    if let Some(cycle) = verify_m_colouring(g, m, &out.colouring)? {
        return Err(Error::CertificateFailed(format!("monochromatic alternating cycle {cycle:?}")));
    }
    Ok(out)
}

fn split(g: &UndirectedGraph, m: &[(usize, usize)], choice: ShoreChoice) -> Result<Composition> {
    let n = g.n();
    let oracle = CutOracle::new(g)?;
    let cuts = oracle.nontrivial_tight_cuts()?;
    let shore = match choice {
        ShoreChoice::Smallest => cuts.into_iter().min_by(|a, b| a.shore.cmp(&b.shore)),
        ShoreChoice::Largest => cuts.into_iter().max_by(|a, b| a.shore.cmp(&b.shore)),
    };
    let Some(x) = shore else {
        let (colouring, piece) = colour_piece(g, m)?;
        return Ok(Composition { colouring, pieces: vec![piece] });
    };
    let xbar = x.complement(n);
    let inside = x.mask(n);
    // g1 keeps X and shrinks the rest, g2 the other way round
    let (g1, map1) = contract_shore(g, &xbar);
    let (g2, map2) = contract_shore(g, &x);
    let c1 = split(&g1, &contract_matching(m, &map1), choice)?;
    let c2 = split(&g2, &contract_matching(m, &map2), choice)?;
    let crossing: Vec<(usize, usize)> = m.iter().copied().filter(|&(u, v)| inside[u] != inside[v]).collect();
    let &[(a, b)] = crossing.as_slice() else {
        return Err(Error::NotTight);
    };
    let k1 = c1.colouring.get(map1[a], map1[b]).expect("cut edge coloured");
    let k2 = c2.colouring.get(map2[a], map2[b]).expect("cut edge coloured");
    let swap = |c: usize| if c == k2 { k1 } else if c == k1 { k2 } else { c };
    let mut colouring = EdgeColouring::default();
    for &(u, v) in m {
        let c = match (inside[u], inside[v]) {
            (true, true) => c1.colouring.get(map1[u], map1[v]),
            (false, false) => c2.colouring.get(map2[u], map2[v]).map(swap),
            _ => Some(k1),
        };
        colouring.set(u, v, c.expect("matching edge coloured"));
    }
    let mut pieces = c1.pieces;
    pieces.extend(c2.pieces);
    Ok(Composition { colouring, pieces })
}

/// Colouring of a brace through its M-direction, or of a brick by recognising its family.
fn colour_piece(g: &UndirectedGraph, m: &[(usize, usize)]) -> Result<(EdgeColouring, Piece)> {
    let n = g.n();
    if g.is_bipartite() {
        let md = m_direction_of(g, m)?;
        let c = two_color(&md.digraph)?.colouring;
        let colouring = EdgeColouring::from_pairs(md.vertex_to_edge.iter().zip(&c.colours).map(|(&e, &k)| (e, k)));
        return Ok((colouring, Piece::Brace { n }));
    }
    let mut candidates: Vec<(Piece, UndirectedGraph)> = Vec::new();
    if n >= 4 && n % 2 == 0 {
        candidates.push((Piece::OddWheel { k: n - 1 }, odd_wheel(n - 1)?));
    }
    if n >= 8 && n % 4 == 0 {
        candidates.push((Piece::Staircase { order: n }, staircase(n)?));
    }
    if n == 10 {
        candidates.push((Piece::Tricorn, tricorn()));
    }
    for (piece, h) in candidates {
        let Some(phi) = find_isomorphism(g, &h) else { continue };
        let hm: Vec<(usize, usize)> = m.iter().map(|&(u, v)| (phi[u], phi[v])).collect();
        let hc = match piece {
            Piece::OddWheel { k } => wheel_matching_colouring(k, &hm)?,
            Piece::Staircase { order } => staircase_super_colouring(order)?.restrict(&hm),
            Piece::Tricorn => tricorn_matching_colouring(&hm)?.colouring,
            Piece::Brace { .. } => unreachable!(),
        };
        let colouring = EdgeColouring::from_pairs(m.iter().map(|&(u, v)| ((u, v), hc.get(phi[u], phi[v]).expect("coloured"))));
        return Ok((colouring, piece));
    }
    Err(Error::UnsupportedBrick(format!("{n}-vertex brick with {} edges is not an odd wheel, staircase of order 4k or tricorn", g.m())))
}
