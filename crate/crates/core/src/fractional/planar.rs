//! Planarity with witnesses: a rotation system for planar graphs (Demoucron–Malgrange–Pertuiset
//! on each block), a Kuratowski subdivision otherwise.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::graph::undirected::{norm, UndirectedGraph};
use crate::graph::Digraph;
use crate::matching::mdirection::splitting_graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kuratowski {
    K5,
    K33,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub kind: Kuratowski,
    /// Vertices of degree 3 (K3,3) or 4 (K5) in the subdivision.
    pub branch: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Planarity {
    /// Cyclic order of neighbours around each vertex.
    Planar { rotation: Vec<Vec<usize>> },
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar { .. })
    }
}

/// Edge sets of the biconnected components.
fn blocks(g: &UndirectedGraph) -> Vec<Vec<(usize, usize)>> {
    struct St<'a> {
        g: &'a UndirectedGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut St, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for &w in s.g.neighbours(u) {
            if s.disc[w] == 0 {
                s.stack.push((u, w));
                dfs(s, w, u);
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if w != parent && s.disc[w] < s.disc[u] {
                s.stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }
    let n = g.n();
    let mut s = St { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, usize::MAX);
        }
    }
    s.out
}

/// Faces of a planar embedding of a biconnected graph with at least three vertices, each a
/// cyclic vertex sequence, all oriented the same way. None if the graph is not planar.
fn embed_biconnected(b: &UndirectedGraph) -> Option<Vec<Vec<usize>>> {
    let n = b.n();
    // initial cycle through the first edge
    let (a0, b0) = b.edges()[0];
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([b0]);
    prev[b0] = b0;
    while let Some(u) = queue.pop_front() {
        for &w in b.neighbours(u) {
            if prev[w] == usize::MAX && !(u == b0 && w == a0) {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut cycle = vec![a0];
    let mut x = a0;
    while x != b0 {
        x = prev[x];
        cycle.push(x);
    }
    let mut in_h = vec![false; n];
    let mut h_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..cycle.len() {
        in_h[cycle[i]] = true;
        h_edges.insert(norm(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];

    while h_edges.len() < b.m() {
        // fragments: (attachments, path between two of them)
        let mut frags: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for (u, v) in b.edges() {
            if in_h[u] && in_h[v] && !h_edges.contains(&(u, v)) {
                frags.push((vec![u, v], vec![u, v]));
            }
        }
        let mut comp = vec![usize::MAX; n];
        for s in 0..n {
            if in_h[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = s;
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &w in b.neighbours(u) {
                    if !in_h[w] && comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            let attach: BTreeSet<usize> =
                members.iter().flat_map(|&u| b.neighbours(u).iter().copied().filter(|&w| in_h[w])).collect();
            let attach: Vec<usize> = attach.into_iter().collect();
            // path: attach[0] - x ... y - another attachment
            let a = attach[0];
            let x = *b.neighbours(a).iter().find(|&&w| comp[w] == id).expect("attachment edge");
            let mut from = vec![usize::MAX; n];
            from[x] = x;
            let mut q = VecDeque::from([x]);
            let mut end = None;
            'bfs: while let Some(u) = q.pop_front() {
                for &w in b.neighbours(u) {
                    if in_h[w] && w != a {
                        end = Some((u, w));
                        break 'bfs;
                    }
                    if !in_h[w] && comp[w] == id && from[w] == usize::MAX {
                        from[w] = u;
                        q.push_back(w);
                    }
                }
            }
            let (y, bb) = end.expect("biconnected graphs have two attachments per fragment");
            let mut inner = vec![y];
            let mut z = y;
            while z != x {
                z = from[z];
                inner.push(z);
            }
            inner.reverse();
            let mut path = vec![a];
            path.extend(inner);
            path.push(bb);
            frags.push((attach, path));
        }
        let mut choice: Option<(usize, usize)> = None;
        for (i, (attach, _)) in frags.iter().enumerate() {
            let ok: Vec<usize> = (0..faces.len()).filter(|&f| attach.iter().all(|v| faces[f].contains(v))).collect();
            if ok.is_empty() {
                return None;
            }
            if ok.len() == 1 {
                choice = Some((i, ok[0]));
                break;
            }
            if choice.is_none() {
                choice = Some((i, ok[0]));
            }
        }
        let (fi, face_id) = choice.expect("some fragment");
        let path = &frags[fi].1;
        let face = faces.swap_remove(face_id);
        let (a, z) = (path[0], path[path.len() - 1]);
        let len = face.len();
        let ia = face.iter().position(|&v| v == a).expect("a on face");
        let iz = face.iter().position(|&v| v == z).expect("z on face");
        let walk = |from: usize, to: usize| {
            let mut w = vec![face[from]];
            let mut i = from;
            while i != to {
                i = (i + 1) % len;
                w.push(face[i]);
            }
            w
        };
        let inner = &path[1..path.len() - 1];
        let mut f1 = walk(ia, iz);
        f1.extend(inner.iter().rev());
        let mut f2 = walk(iz, ia);
        f2.extend(inner.iter());
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            h_edges.insert(norm(w[0], w[1]));
        }
        for &v in path {
            in_h[v] = true;
        }
    }
    Some(faces)
}

/// A rotation system of a planar embedding, or None.
pub fn planar_embedding(g: &UndirectedGraph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return None;
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(g) {
        let verts: BTreeSet<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        let verts: Vec<usize> = verts.into_iter().collect();
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let local = |v: usize| verts.binary_search(&v).expect("block vertex");
        let b = UndirectedGraph::from_edges(verts.len(), block.iter().map(|&(u, v)| (local(u), local(v)))).ok()?;
        let faces = embed_biconnected(&b)?;
        let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); verts.len()];
        for f in &faces {
            let k = f.len();
            for i in 0..k {
                succ[f[i]].push((f[(i + k - 1) % k], f[(i + 1) % k]));
            }
        }
        for (v, s) in succ.iter().enumerate() {
            let start = b.neighbours(v)[0];
            let mut order = vec![start];
            let mut cur = start;
            loop {
                cur = s.iter().find(|&&(p, _)| p == cur).expect("successor").1;
                if cur == start {
                    break;
                }
                order.push(cur);
            }
            rotation[verts[v]].extend(order.into_iter().map(|w| verts[w]));
        }
    }
    Some(rotation)
}

/// Face count of a rotation system, following dart (u, v) by (v, successor of u around v).
/// None if the rotation is not a permutation of each neighbourhood.
pub fn count_faces(g: &UndirectedGraph, rotation: &[Vec<usize>]) -> Option<usize> {
    let n = g.n();
    if rotation.len() != n {
        return None;
    }
    for v in 0..n {
        let mut r = rotation[v].clone();
        r.sort_unstable();
        let mut nb = g.neighbours(v).to_vec();
        nb.sort_unstable();
        if r != nb {
            return None;
        }
    }
    let pos = |v: usize, u: usize| rotation[v].iter().position(|&w| w == u).expect("neighbour");
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut faces = 0;
    for (u, v) in g.edges().into_iter().flat_map(|(u, v)| [(u, v), (v, u)]) {
        if seen.contains(&(u, v)) {
            continue;
        }
        faces += 1;
        let (mut a, mut b) = (u, v);
        while seen.insert((a, b)) {
            let r = &rotation[b];
            let next = r[(pos(b, a) + 1) % r.len()];
            (a, b) = (b, next);
        }
    }
    Some(faces)
}

/// Euler's formula for every component: V - E + F = 2, an isolated vertex counting V = 1 only.
pub fn check_rotation_system(g: &UndirectedGraph, rotation: &[Vec<usize>]) -> bool {
    let Some(f) = count_faces(g, rotation) else {
        return false;
    };
    let comps = g.components();
    let isolated = comps.iter().filter(|c| c.len() == 1).count();
    let nontrivial = comps.len() - isolated;
    g.n() + f == g.m() + 2 * nontrivial + isolated
}

fn kuratowski_witness(g: &UndirectedGraph) -> KuratowskiWitness {
    let mut edges = g.edges();
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        let h = UndirectedGraph::from_edges(g.n(), trial.iter().copied()).expect("subgraph");
        if planar_embedding(&h).is_none() {
            edges = trial;
        } else {
            i += 1;
        }
    }
    let mut deg = vec![0usize; g.n()];
    for &(u, v) in &edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let branch: Vec<usize> = (0..g.n()).filter(|&v| deg[v] > 2).collect();
    let kind = if branch.len() == 5 { Kuratowski::K5 } else { Kuratowski::K33 };
    KuratowskiWitness { kind, branch, edges }
}

pub fn is_planar(g: &UndirectedGraph) -> Planarity {
    match planar_embedding(g) {
        Some(rotation) => Planarity::Planar { rotation },
        None => Planarity::NonPlanar(kuratowski_witness(g)),
    }
}

/// The witness edges form a subdivision of K5 or K3,3 inside `g`.
pub fn check_kuratowski(g: &UndirectedGraph, w: &KuratowskiWitness) -> bool {
    if w.edges.iter().any(|&(u, v)| u >= g.n() || v >= g.n() || !g.has_edge(u, v)) {
        return false;
    }
    let Ok(h) = UndirectedGraph::from_edges(g.n(), w.edges.iter().copied()) else {
        return false;
    };
    let (want, degree) = match w.kind {
        Kuratowski::K5 => (5, 4),
        Kuratowski::K33 => (6, 3),
    };
    let mut branch = w.branch.clone();
    branch.sort_unstable();
    branch.dedup();
    if branch.len() != want {
        return false;
    }
    for v in 0..g.n() {
        let ok = if branch.contains(&v) { h.degree(v) == degree } else { h.degree(v) == 0 || h.degree(v) == 2 };
        if !ok {
            return false;
        }
    }
    // follow each path out of a branch vertex to the branch vertex it reaches
    let mut joined: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut ends = 0;
    let mut walked = 0;
    for &s in &branch {
        for &first in h.neighbours(s) {
            let (mut p, mut c) = (s, first);
            walked += 1;
            while !branch.contains(&c) {
                let next = *h.neighbours(c).iter().find(|&&x| x != p).expect("degree two");
                (p, c) = (c, next);
                walked += 1;
            }
            if c == s {
                return false;
            }
            joined.insert(norm(s, c));
            ends += 1;
        }
    }
    // every path is walked once from each end, so distinct pairs mean no parallel paths, and
    // the walked length accounts for every edge
    if walked != 2 * h.m() || joined.len() * 2 != ends {
        return false;
    }
    match w.kind {
        Kuratowski::K5 => joined.len() == 10,
        Kuratowski::K33 => {
            let adj = |a: usize, b: usize| joined.contains(&norm(a, b));
            let a = branch[0];
            let (same, other): (Vec<usize>, Vec<usize>) = branch.iter().partition(|&&v| v == a || !adj(a, v));
            let inside = |side: &[usize]| side.iter().any(|&x| side.iter().any(|&y| x != y && adj(x, y)));
            joined.len() == 9 && same.len() == 3 && !inside(&same) && !inside(&other)
        }
    }
}

/// Planarity of the splitting graph.
pub fn is_strongly_planar(d: &Digraph) -> bool {
    planar_embedding(&splitting_graph(d).base).is_some()
}
