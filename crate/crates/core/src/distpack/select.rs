use std::collections::{BTreeSet, VecDeque};

use crate::error::{violation, Result};
use crate::graph::{
    ball_within, bfs_distances, find_cycle_within, set_distance, Cycle,
    Graph, Vertex, VertexSet, UNREACHED,
};

use super::support::{tree_from, SupportMap};
use super::cycle_ball;

/// `G − B(C, d)` with every component rooted at its smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedForest {
    pub in_f: Vec<bool>,
    pub parent: Vec<Option<Vertex>>,
    pub root: Vec<Option<Vertex>>,
    pub level: Vec<usize>,
}

impl RootedForest {
    pub fn new(g: &Graph, in_f: Vec<bool>) -> Result<Self> {
        let n = g.n();
        let mut parent = vec![None; n];
        let mut root = vec![None; n];
        let mut level = vec![0; n];
        for r in 0..n {
            if !in_f[r] || root[r].is_some() {
                continue;
            }
            root[r] = Some(r);
            let mut queue = VecDeque::from([r]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if !in_f[w] || Some(w) == parent[u] {
                        continue;
                    }
                    if root[w].is_some() {
                        return Err(violation!("G − B(C, d) has a cycle through {u}-{w}"));
                    }
                    root[w] = Some(r);
                    parent[w] = Some(u);
                    level[w] = level[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(Self {
            in_f,
            parent,
            root,
            level,
        })
    }

    pub fn lca(&self, mut a: Vertex, mut b: Vertex) -> Option<Vertex> {
        if self.root[a] != self.root[b] || self.root[a].is_none() {
            return None;
        }
        while self.level[a] > self.level[b] {
            a = self.parent[a]?;
        }
        while self.level[b] > self.level[a] {
            b = self.parent[b]?;
        }
        while a != b {
            a = self.parent[a]?;
            b = self.parent[b]?;
        }
        Some(a)
    }

    pub fn is_ancestor(&self, anc: Vertex, mut v: Vertex) -> bool {
        loop {
            if v == anc {
                return true;
            }
            match self.parent[v] {
                Some(p) => v = p,
                None => return false,
            }
        }
    }

    /// Tree path from `a` to `b`.
    pub fn path(&self, a: Vertex, b: Vertex) -> Option<Vec<Vertex>> {
        let w = self.lca(a, b)?;
        let mut up = vec![a];
        while *up.last().unwrap() != w {
            up.push(self.parent[*up.last().unwrap()]?);
        }
        let mut down = vec![b];
        while *down.last().unwrap() != w {
            down.push(self.parent[*down.last().unwrap()]?);
        }
        down.pop();
        up.extend(down.into_iter().rev());
        Some(up)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    /// Vertices of `F_j`.
    pub vertices: VertexSet,
    pub a: Vertex,
    pub b: Vertex,
    pub w: Vertex,
    pub z: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection {
    pub forest: RootedForest,
    pub rounds: Vec<Round>,
    pub l: VertexSet,
    pub w: VertexSet,
}

/// `S(L, r)`: union of the depth-`r` trees hanging from the cycle vertices
/// in `l`.
fn s_set(g: &Graph, on_c: &[bool], l: &VertexSet, r: usize) -> Vec<bool> {
    let mut out = vec![false; g.n()];
    for root in l.iter() {
        for (v, _, _) in tree_from(g, on_c, root, r) {
            out[v] = true;
        }
    }
    out
}

fn components(g: &Graph, alive: &[bool]) -> Vec<usize> {
    let mut comp = vec![UNREACHED; g.n()];
    for s in g.vertices() {
        if alive[s] && comp[s] == UNREACHED {
            for (v, &dv) in bfs_distances(g, [s], Some(alive), None).iter().enumerate() {
                if dv != UNREACHED {
                    comp[v] = s;
                }
            }
        }
    }
    comp
}

/// Greedy choice of pairwise far subtrees of `G − B(C, d)`, each holding
/// two boundary vertices with fresh anchors.
pub fn select_subtrees(g: &Graph, c: &Cycle, d: usize, sm: &SupportMap) -> Result<Selection> {
    let n = g.n();
    let mut on_c = vec![false; n];
    for &v in c.vertices() {
        on_c[v] = true;
    }
    let in_f: Vec<bool> = (0..n).map(|v| !sm.in_ball(v)).collect();
    let forest = RootedForest::new(g, in_f.clone())?;
    let mut rounds: Vec<Round> = Vec::new();
    let mut l = VertexSet::new();
    let mut w_set = VertexSet::new();
    loop {
        let s = s_set(g, &on_c, &l, 2 * d);
        let near_w = ball_within(g, &w_set, d, None);
        let alive: Vec<bool> = (0..n).map(|v| in_f[v] && !s[v] && !near_w.contains(v)).collect();
        let comp = components(g, &alive);
        let cands: Vec<Vertex> = sm
            .boundary
            .iter()
            .filter(|(&v, b)| alive[v] && !l.contains(b.anchor))
            .map(|(&v, _)| v)
            .collect();
        let mut best: Option<(usize, Vertex, Vertex, Vertex)> = None;
        for (i, &a) in cands.iter().enumerate() {
            for &b in &cands[i + 1..] {
                if comp[a] != comp[b] {
                    continue;
                }
                let w = forest
                    .lca(a, b)
                    .ok_or_else(|| violation!("{a} and {b} share a component but not a tree"))?;
                let lv = forest.level[w];
                if best.map_or(true, |(bl, ..)| lv > bl) {
                    best = Some((lv, a, b, w));
                }
            }
        }
        let Some((_, a, b, w)) = best else { break };
        let vertices: VertexSet = (0..n)
            .filter(|&v| alive[v] && comp[v] == comp[w] && forest.is_ancestor(w, v))
            .collect();
        let around = ball_within(g, &VertexSet::singleton(w), d, None);
        let near: Vec<Vertex> = around.iter().filter(|&v| in_f[v] && sm.is_boundary(v)).collect();
        let z = match near.as_slice() {
            [] => w,
            [z] => *z,
            _ => return Err(violation!("B({w}, {d}) holds boundary vertices {near:?}")),
        };
        for r in &rounds {
            let gap = bfs_distances(g, r.vertices.iter(), Some(&in_f), Some(d))
                .iter()
                .enumerate()
                .any(|(v, &dv)| dv != UNREACHED && vertices.contains(v));
            if gap {
                return Err(violation!("subtrees rooted at {} and {w} are within F-distance {d}", r.w));
            }
        }
        l.extend(cycle_ball(c, [sm.anchor_of(a)?, sm.anchor_of(b)?], d).iter());
        w_set.insert(w);
        w_set.insert(z);
        rounds.push(Round { vertices, a, b, w, z });
    }
    Ok(Selection {
        forest,
        rounds,
        l,
        w: w_set,
    })
}

fn edges_of(vs: &[Vertex]) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    vs.windows(2).map(|p| (p[0].min(p[1]), p[0].max(p[1])))
}

/// Two vertex-disjoint cycles of `C ∪ ⋃ M_j` at distance greater than `d`
/// in `g`, for a selection with at least four rounds.
pub fn two_cycles_from_selection(
    g: &Graph,
    c: &Cycle,
    d: usize,
    sm: &SupportMap,
    sel: &Selection,
) -> Result<(Cycle, Cycle)> {
    if sel.rounds.len() < 4 {
        return Err(violation!("only {} rounds", sel.rounds.len()));
    }
    let mut pieces: Vec<BTreeSet<(Vertex, Vertex)>> = Vec::new();
    let mut appendages = Vec::new();
    for (j, r) in sel.rounds.iter().enumerate() {
        let ra = sm.boundary[&r.a].path.vertices();
        let rb = sm.boundary[&r.b].path.vertices();
        let p = sel
            .forest
            .path(r.a, r.b)
            .ok_or_else(|| violation!("no tree path {}-{}", r.a, r.b))?;
        let m: BTreeSet<_> = edges_of(&p).chain(edges_of(ra)).chain(edges_of(rb)).collect();
        if ra.iter().any(|v| rb.contains(v)) {
            appendages.push(j);
        }
        pieces.push(m);
    }
    let cycle_in = |edges: &BTreeSet<(Vertex, Vertex)>| -> Result<Cycle> {
        let sub = g.edge_subgraph(edges.iter().copied())?;
        find_cycle_within(&sub, None).ok_or_else(|| violation!("appendage without a cycle"))
    };
    let mut h_edges: BTreeSet<(Vertex, Vertex)> = c.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
    for m in &pieces {
        h_edges.extend(m.iter().copied());
    }
    let h = g.edge_subgraph(h_edges.iter().copied())?;
    let (c1, c2) = match appendages.as_slice() {
        [i, j, ..] => (cycle_in(&pieces[*i])?, cycle_in(&pieces[*j])?),
        [j] => {
            let c1 = cycle_in(&pieces[*j])?;
            let mut alive: Vec<bool> = g.vertices().map(|v| h.degree(v) > 0).collect();
            for &(u, v) in &pieces[*j] {
                alive[u] = false;
                alive[v] = false;
            }
            let c2 = find_cycle_within(&h, Some(&alive))
                .ok_or_else(|| violation!("nothing left outside the only appendage"))?;
            (c1, c2)
        }
        [] => {
            let keep: Vec<bool> = g.vertices().map(|v| h.degree(v) > 0).collect();
            let (sub, origin) = h.induced(&keep);
            let (a, b) = crate::packing::two_disjoint_cycles_subcubic(&sub)?
                .ok_or_else(|| violation!("no two disjoint cycles in a subcubic graph with {} rounds", sel.rounds.len()))?;
            (a.mapped(&origin), b.mapped(&origin))
        }
    };
    let gap = set_distance(g, &c1.vertex_set(), &c2.vertex_set());
    if gap <= d {
        return Err(violation!("selected cycles at distance {gap} <= {d}"));
    }
    Ok((c1, c2))
}
