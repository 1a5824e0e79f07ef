//! Bitmask re-implementations of the few primitives the oracle needs.

use crate::graph::Graph;

/// Vertices within distance `r` of the set `sources`.
pub(super) fn ball_mask(g: &Graph, sources: u128, r: usize) -> u128 {
    let mut seen = sources;
    let mut frontier = sources;
    for _ in 0..r {
        let mut next = 0u128;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            for &w in g.neighbors(v) {
                next |= 1 << w;
            }
        }
        frontier = next & !seen;
        if frontier == 0 {
            break;
        }
        seen |= frontier;
    }
    seen
}

/// Union-find acyclicity test of the subgraph induced by `alive`.
pub(super) fn is_forest_mask(g: &Graph, alive: u128) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (u, v) in g.edges() {
        if alive >> u & 1 == 1 && alive >> v & 1 == 1 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
    }
    true
}

/// Independence number of the subgraph induced by `set`. Vertices of
/// degree at most one are taken greedily, otherwise the search branches on
/// a vertex of maximum degree. `None` once `steps` runs out.
pub(super) fn independence_number(adj: &[u128], set: u128, steps: &mut u64) -> Option<usize> {
    if set == 0 {
        return Some(0);
    }
    *steps = steps.checked_sub(1)?;
    let mut best_v = 0;
    let mut best_deg = 0;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let deg = (adj[v] & set).count_ones();
        if deg <= 1 {
            return Some(1 + independence_number(adj, set & !(1 << v) & !adj[v], steps)?);
        }
        if deg > best_deg {
            best_deg = deg;
            best_v = v;
        }
    }
    let v = best_v;
    let with = 1 + independence_number(adj, set & !(1 << v) & !adj[v], steps)?;
    let without = independence_number(adj, set & !(1 << v), steps)?;
    Some(with.max(without))
}

/// Plain-vector BFS distances from `sources`.
pub(super) fn distances(g: &Graph, sources: &[usize]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = std::collections::VecDeque::new();
    for &s in sources {
        if dist[s] != 0 {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Union-find acyclicity test on the vertices with `dist > r`.
pub(super) fn forest_outside(g: &Graph, dist: &[usize], r: usize) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (u, v) in g.edges() {
        if dist[u] > r && dist[v] > r {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
    }
    true
}
