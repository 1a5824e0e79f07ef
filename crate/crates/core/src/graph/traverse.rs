use std::collections::VecDeque;

use super::{Cycle, Graph, Path, Vertex, VertexSet};

/// Distance marker for vertices not reached by a search.
pub const UNREACHED: usize = usize::MAX;

#[inline]
fn is_alive(alive: Option<&[bool]>, v: Vertex) -> bool {
    alive.map_or(true, |a| a[v])
}

/// Multi-source BFS distances restricted to alive vertices, optionally
/// stopping at `max_depth`. Dead sources are ignored.
pub fn bfs_distances(
    g: &Graph,
    sources: impl IntoIterator<Item = Vertex>,
    alive: Option<&[bool]>,
    max_depth: Option<usize>,
) -> Vec<usize> {
    let mut dist = vec![UNREACHED; g.n()];
    let mut queue = VecDeque::new();
    for s in sources {
        if is_alive(alive, s) && dist[s] == UNREACHED {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        if max_depth.is_some_and(|d| dist[u] >= d) {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHED && is_alive(alive, w) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All vertices at distance at most `r` from `sources`.
pub fn ball(g: &Graph, sources: &VertexSet, r: usize) -> VertexSet {
    ball_within(g, sources, r, None)
}

/// [`ball`] computed inside the subgraph induced by the alive vertices.
pub fn ball_within(g: &Graph, sources: &VertexSet, r: usize, alive: Option<&[bool]>) -> VertexSet {
    let dist = bfs_distances(g, sources.iter(), alive, Some(r));
    dist.iter()
        .enumerate()
        .filter_map(|(v, &d)| (d != UNREACHED).then_some(v))
        .collect()
}

/// Distance between two vertex sets (`UNREACHED` if disconnected or either
/// set is empty).
pub fn set_distance(g: &Graph, a: &VertexSet, b: &VertexSet) -> usize {
    let dist = bfs_distances(g, a.iter(), None, None);
    b.iter().map(|v| dist[v]).min().unwrap_or(UNREACHED)
}

/// A shortest path between `from` and any vertex of `targets`, inside the
/// alive vertices. Ties resolve towards the BFS order induced by sorted
/// adjacency lists.
pub fn shortest_path_within(
    g: &Graph,
    from: Vertex,
    targets: &[bool],
    alive: Option<&[bool]>,
) -> Option<Path> {
    if !is_alive(alive, from) {
        return None;
    }
    let mut parent = vec![UNREACHED; g.n()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if targets[u] {
            let mut path = vec![u];
            let mut x = u;
            while x != from {
                x = parent[x];
                path.push(x);
            }
            path.reverse();
            return Some(Path::new(path));
        }
        for &w in g.neighbors(u) {
            if parent[w] == UNREACHED && is_alive(alive, w) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    girth_cycle(g).map(|c| c.len())
}

/// A shortest cycle of `g`, or `None` if `g` is a forest.
pub fn girth_cycle(g: &Graph) -> Option<Cycle> {
    girth_cycle_within(g, None)
}

/// Shortest cycle of the subgraph induced by the alive vertices.
///
/// BFS is run from every vertex; each non-tree edge `xy` seen from source
/// `s` gives a closed walk of length `dist(x) + dist(y) + 1`. The global
/// minimum over all sources equals the girth, and the walk achieving it is
/// a simple cycle once cut at the lowest common ancestor of `x` and `y`.
pub fn girth_cycle_within(g: &Graph, alive: Option<&[bool]>) -> Option<Cycle> {
    let n = g.n();
    let mut dist = vec![UNREACHED; n];
    let mut parent = vec![UNREACHED; n];
    let mut touched = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    // (length, source, x, y)
    let mut best: Option<(usize, Vertex, Vertex, Vertex)> = None;

    for s in 0..n {
        if !is_alive(alive, s) || g.degree(s) < 2 {
            continue;
        }
        for &v in &touched {
            dist[v] = UNREACHED;
            parent[v] = UNREACHED;
        }
        touched.clear();
        queue.clear();
        dist[s] = 0;
        touched.push(s);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b.0) {
                break;
            }
            for &w in g.neighbors(u) {
                if !is_alive(alive, w) {
                    continue;
                }
                if dist[w] == UNREACHED {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if dist[w] == dist[u] || (dist[w] == dist[u] + 1 && parent[w] != u) {
                    let len = dist[u] + dist[w] + 1;
                    if best.map_or(true, |b| len < b.0) {
                        best = Some((len, s, u, w));
                    }
                }
            }
        }
    }

    let (_, s, x, y) = best?;
    let parent = bfs_parents(g, s, alive);
    Some(close_cycle(&parent, x, y))
}

fn bfs_parents(g: &Graph, s: Vertex, alive: Option<&[bool]>) -> Vec<Vertex> {
    let mut parent = vec![UNREACHED; g.n()];
    parent[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if parent[w] == UNREACHED && is_alive(alive, w) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    parent
}

/// Cycle formed by the edge `xy` and the two tree paths up to their lowest
/// common ancestor.
fn close_cycle(parent: &[Vertex], x: Vertex, y: Vertex) -> Cycle {
    let chain = |mut v: Vertex| {
        let mut out = vec![v];
        while parent[v] != v {
            v = parent[v];
            out.push(v);
        }
        out
    };
    let xs = chain(x);
    let ys = chain(y);
    let on_x: std::collections::HashSet<Vertex> = xs.iter().copied().collect();
    let lca_pos_y = ys.iter().position(|v| on_x.contains(v)).expect("common root");
    let lca = ys[lca_pos_y];
    let lca_pos_x = xs.iter().position(|&v| v == lca).unwrap();
    let mut cycle: Vec<Vertex> = xs[..=lca_pos_x].to_vec();
    cycle.extend(ys[..lca_pos_y].iter().rev());
    Cycle::new(cycle)
}

/// Shortest cycle through `v`, or `None` if `v` lies on no cycle.
pub fn shortest_cycle_through(g: &Graph, v: Vertex) -> Option<Cycle> {
    shortest_cycle_through_within(g, v, None)
}

/// Shortest cycle through `v` inside the alive vertices: for every alive
/// neighbour `x`, one plus the shortest `x`–`v` path avoiding the edge `xv`.
pub fn shortest_cycle_through_within(
    g: &Graph,
    v: Vertex,
    alive: Option<&[bool]>,
) -> Option<Cycle> {
    if !is_alive(alive, v) {
        return None;
    }
    let n = g.n();
    let mut best: Option<Vec<Vertex>> = None;
    let mut parent = vec![UNREACHED; n];
    let mut dist = vec![UNREACHED; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for &x in g.neighbors(v) {
        if !is_alive(alive, x) {
            continue;
        }
        for &t in &touched {
            parent[t] = UNREACHED;
            dist[t] = UNREACHED;
        }
        touched.clear();
        queue.clear();
        parent[x] = x;
        dist[x] = 0;
        touched.push(x);
        queue.push_back(x);
        let mut found = false;
        'bfs: while let Some(u) = queue.pop_front() {
            // A cycle found from here has length >= dist(u) + 2.
            if best.as_ref().is_some_and(|b| dist[u] + 2 >= b.len()) {
                break;
            }
            for &w in g.neighbors(u) {
                if w == v {
                    if u == x {
                        continue;
                    }
                    parent[v] = u;
                    found = true;
                    break 'bfs;
                }
                if parent[w] == UNREACHED && is_alive(alive, w) {
                    parent[w] = u;
                    dist[w] = dist[u] + 1;
                    touched.push(w);
                    queue.push_back(w);
                }
            }
        }
        if found {
            let mut cyc = vec![v];
            let mut y = parent[v];
            touched.push(v);
            while y != x {
                cyc.push(y);
                y = parent[y];
            }
            cyc.push(x);
            if best.as_ref().map_or(true, |b| cyc.len() < b.len()) {
                best = Some(cyc);
            }
        }
        parent[v] = UNREACHED;
    }
    best.map(Cycle::new)
}

/// Some cycle of the alive subgraph (not necessarily short), via DFS.
pub fn find_cycle_within(g: &Graph, alive: Option<&[bool]>) -> Option<Cycle> {
    let n = g.n();
    let mut parent = vec![UNREACHED; n];
    let mut depth = vec![UNREACHED; n];
    for root in 0..n {
        if !is_alive(alive, root) || depth[root] != UNREACHED {
            continue;
        }
        depth[root] = 0;
        parent[root] = root;
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (u, ref mut idx)) = stack.last_mut() {
            let nbrs = g.neighbors(u);
            if *idx >= nbrs.len() {
                stack.pop();
                continue;
            }
            let w = nbrs[*idx];
            *idx += 1;
            if !is_alive(alive, w) || w == parent[u] {
                continue;
            }
            if depth[w] == UNREACHED {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                stack.push((w, 0));
            } else if depth[w] < depth[u] {
                let mut cyc = vec![u];
                let mut x = u;
                while x != w {
                    x = parent[x];
                    cyc.push(x);
                }
                return Some(Cycle::new(cyc));
            }
        }
    }
    None
}

/// Whether the alive subgraph is acyclic (edge count equals vertex count
/// minus component count).
pub fn is_forest_within(g: &Graph, alive: Option<&[bool]>) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut vertices = 0usize;
    let mut edges2 = 0usize;
    let mut components = 0usize;
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] || !is_alive(alive, s) {
            continue;
        }
        components += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(u) = stack.pop() {
            vertices += 1;
            for &w in g.neighbors(u) {
                if is_alive(alive, w) {
                    edges2 += 1;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
    }
    edges2 / 2 + components == vertices
}

/// Whether `g - removed` is a forest.
pub fn is_forest_after_removal(g: &Graph, removed: &VertexSet) -> bool {
    let alive: Vec<bool> = g.vertices().map(|v| !removed.contains(v)).collect();
    is_forest_within(g, Some(&alive))
}

/// Vertex set of the 2-core (maximal subgraph of minimum degree at least 2).
pub fn two_core(g: &Graph) -> VertexSet {
    VertexSet::from_mask(&two_core_within(g, None))
}

/// Mask of the 2-core of the alive subgraph.
pub fn two_core_within(g: &Graph, alive: Option<&[bool]>) -> Vec<bool> {
    let n = g.n();
    let mut inside: Vec<bool> = (0..n).map(|v| is_alive(alive, v)).collect();
    let mut deg: Vec<usize> = (0..n)
        .map(|v| {
            if inside[v] {
                g.neighbors(v).iter().filter(|&&w| inside[w]).count()
            } else {
                0
            }
        })
        .collect();
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| inside[v] && deg[v] < 2).collect();
    while let Some(v) = stack.pop() {
        if !inside[v] {
            continue;
        }
        inside[v] = false;
        for &w in g.neighbors(v) {
            if inside[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    inside
}
