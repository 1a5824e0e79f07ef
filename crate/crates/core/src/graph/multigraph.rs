//! Degree-2 suppression and the multigraphs it produces.

use std::collections::BTreeMap;

use super::{girth_cycle_within, shortest_cycle_through_within, Cycle, Graph, Vertex, VertexSet};
use crate::error::{invalid, Error, Result};

/// Undirected multigraph; loops and parallel edges allowed. Edge ids are
/// indices into [`Multigraph::edges`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Lifts multigraph objects back to the graph they were suppressed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionMap {
    /// Original id of every multigraph vertex.
    pub vertex_origin: Vec<Vertex>,
    /// For edge `e = (u, v)`: the original path from `vertex_origin[u]` to
    /// `vertex_origin[v]`. A loop maps to a closed sequence `[o, .., o]`.
    pub edge_paths: Vec<Vec<Vertex>>,
}

/// A cycle of a multigraph as a closed walk: `edges[i]` joins `vertices[i]`
/// and `vertices[(i + 1) % len]`. Loops have one vertex, parallel pairs two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiCycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl MultiCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(invalid!("multigraph edge ({u},{v}) out of range"));
        }
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degrees with loops counted twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Vertices carrying a loop and nothing else (suppressed bare cycles).
    pub fn is_bare_loop(&self, v: usize) -> bool {
        let incident: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .collect();
        incident.len() == 1 && incident[0].0 == incident[0].1
    }

    fn underlying(&self) -> Graph {
        Graph::new(
            self.n,
            self.edges.iter().copied().filter(|&(u, v)| u != v),
        )
        .expect("ids checked at construction")
    }

    fn edge_between(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
            .expect("edge exists in underlying graph")
    }

    fn from_vertex_cycle(&self, c: &Cycle) -> MultiCycle {
        let vs = c.vertices().to_vec();
        let edges = c.edges().map(|(u, v)| self.edge_between(u, v)).collect();
        MultiCycle { vertices: vs, edges }
    }

    fn smallest_loop(&self, at: Option<usize>) -> Option<MultiCycle> {
        self.edges
            .iter()
            .position(|&(u, v)| u == v && at.map_or(true, |a| a == u))
            .map(|e| MultiCycle {
                vertices: vec![self.edges[e].0],
                edges: vec![e],
            })
    }

    fn smallest_parallel_pair(&self, at: Option<usize>) -> Option<MultiCycle> {
        let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if u != v {
                by_pair.entry((u.min(v), u.max(v))).or_default().push(e);
            }
        }
        by_pair
            .into_iter()
            .find(|((u, v), es)| es.len() >= 2 && at.map_or(true, |a| a == *u || a == *v))
            .map(|((u, v), es)| MultiCycle {
                vertices: vec![u, v],
                edges: vec![es[0], es[1]],
            })
    }

    /// A shortest cycle: a loop, else a parallel pair, else a shortest cycle
    /// of the underlying simple graph.
    pub fn shortest_cycle(&self) -> Option<MultiCycle> {
        self.smallest_loop(None)
            .or_else(|| self.smallest_parallel_pair(None))
            .or_else(|| {
                girth_cycle_within(&self.underlying(), None).map(|c| self.from_vertex_cycle(&c))
            })
    }

    /// A shortest cycle through vertex `v`.
    pub fn shortest_cycle_through(&self, v: usize) -> Option<MultiCycle> {
        self.smallest_loop(Some(v))
            .or_else(|| self.smallest_parallel_pair(Some(v)))
            .or_else(|| {
                shortest_cycle_through_within(&self.underlying(), v, None)
                    .map(|c| self.from_vertex_cycle(&c))
            })
    }

    /// Deletes `deleted` vertices (with incident edges), repeatedly prunes
    /// vertices of degree at most one and suppresses the remaining degree-2
    /// vertices that do not carry a loop. Surviving vertices are renumbered
    /// in increasing order of their current ids.
    pub fn reduce(&self, map: &ExpansionMap, deleted: &[bool]) -> (Multigraph, ExpansionMap) {
        let mut alive: Vec<bool> = (0..self.n).map(|v| !deleted[v]).collect();
        let mut edges: Vec<Option<(usize, usize, Vec<Vertex>)>> = self
            .edges
            .iter()
            .zip(&map.edge_paths)
            .map(|(&(u, v), p)| (alive[u] && alive[v]).then(|| (u, v, p.clone())))
            .collect();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        let mut deg = vec![0usize; self.n];
        for (e, slot) in edges.iter().enumerate() {
            if let Some((u, v, _)) = slot {
                incident[*u].push(e);
                deg[*u] += 1;
                if u != v {
                    incident[*v].push(e);
                }
                deg[*v] += 1;
            }
        }

        // prune degree <= 1
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| alive[v] && deg[v] <= 1).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &e in &incident[v] {
                if let Some((a, b, _)) = edges[e].take() {
                    let other = if a == v { b } else { a };
                    if other != v {
                        deg[other] -= 1;
                        if alive[other] && deg[other] <= 1 {
                            stack.push(other);
                        }
                    }
                }
            }
        }

        // suppress degree-2 vertices without loops, largest id first so a
        // bare cycle keeps its smallest vertex as representative
        for x in (0..self.n).rev() {
            if !alive[x] || deg[x] != 2 {
                continue;
            }
            let live: Vec<usize> = incident[x]
                .iter()
                .copied()
                .filter(|&e| edges[e].is_some())
                .collect();
            if live.len() != 2 {
                // a single loop: bare cycle representative
                continue;
            }
            let (a1, b1, p1) = edges[live[0]].take().unwrap();
            let (a2, b2, p2) = edges[live[1]].take().unwrap();
            let (a, mut path) = if b1 == x {
                (a1, p1)
            } else {
                let mut p = p1;
                p.reverse();
                (b1, p)
            };
            let (b, tail) = if a2 == x {
                (b2, p2)
            } else {
                let mut p = p2;
                p.reverse();
                (a2, p)
            };
            path.extend_from_slice(&tail[1..]);
            let id = edges.len();
            edges.push(Some((a, b, path)));
            incident[a].push(id);
            if b != a {
                incident[b].push(id);
            }
            alive[x] = false;
        }

        let mut new_id = vec![usize::MAX; self.n];
        let mut vertex_origin = Vec::new();
        for v in 0..self.n {
            if alive[v] {
                new_id[v] = vertex_origin.len();
                vertex_origin.push(map.vertex_origin[v]);
            }
        }
        let mut out_edges = Vec::new();
        let mut edge_paths = Vec::new();
        for (u, v, p) in edges.into_iter().flatten() {
            out_edges.push((new_id[u], new_id[v]));
            edge_paths.push(p);
        }
        (
            Multigraph {
                n: vertex_origin.len(),
                edges: out_edges,
            },
            ExpansionMap {
                vertex_origin,
                edge_paths,
            },
        )
    }
}

/// Suppresses every degree-2 vertex of `g[keep]`. Fails if the induced
/// subgraph has a vertex of degree below two.
pub fn suppress_degree_two(g: &Graph, keep: &VertexSet) -> Result<(Multigraph, ExpansionMap)> {
    suppress_degree_two_within(g, &keep.to_mask(g.n()))
}

/// Mask form of [`suppress_degree_two`].
pub fn suppress_degree_two_within(g: &Graph, keep: &[bool]) -> Result<(Multigraph, ExpansionMap)> {
    let (sub, origin) = g.induced(keep);
    if let Some(v) = sub.vertices().find(|&v| sub.degree(v) < 2) {
        return Err(invalid!(
            "vertex {} has degree {} in the subgraph to suppress",
            origin[v],
            sub.degree(v)
        ));
    }
    let edges: Vec<(usize, usize)> = sub.edges().collect();
    let edge_paths = edges.iter().map(|&(u, v)| vec![origin[u], origin[v]]).collect();
    let m = Multigraph {
        n: sub.n(),
        edges,
    };
    let map = ExpansionMap {
        vertex_origin: origin,
        edge_paths,
    };
    Ok(m.reduce(&map, &vec![false; m.n]))
}

/// Lifts a multigraph cycle to the cycle of the original graph it stands for.
pub fn lift_cycle(map: &ExpansionMap, c: &MultiCycle) -> Result<Cycle> {
    let k = c.edges.len();
    if k == 0 || c.vertices.len() != k {
        return Err(Error::Internal("malformed multigraph cycle".into()));
    }
    let mut out = Vec::new();
    for i in 0..k {
        let e = c.edges[i];
        let from = *map
            .vertex_origin
            .get(c.vertices[i])
            .ok_or_else(|| Error::Internal("vertex outside expansion map".into()))?;
        let to = map.vertex_origin[c.vertices[(i + 1) % k]];
        let path = map
            .edge_paths
            .get(e)
            .ok_or_else(|| Error::Internal("edge outside expansion map".into()))?;
        let oriented: Vec<Vertex> = if path.first() == Some(&from) && path.last() == Some(&to) {
            path.clone()
        } else if path.first() == Some(&to) && path.last() == Some(&from) {
            path.iter().rev().copied().collect()
        } else {
            return Err(Error::Internal(format!(
                "edge {e} does not join {from} and {to}"
            )));
        };
        out.extend_from_slice(&oriented[..oriented.len() - 1]);
    }
    let mut sorted = out.clone();
    sorted.sort_unstable();
    if out.len() < 3 || sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Internal("lifted walk is not a simple cycle".into()));
    }
    Ok(Cycle::new(out))
}
