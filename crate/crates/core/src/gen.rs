//! Deterministic instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};
use crate::graph::{bfs_distances, girth, Graph, Vertex, UNREACHED};

const MAX_ATTEMPTS: usize = 100_000;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid!("edge probability {p} outside [0, 1]"));
    }
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid ids")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid!("a cycle needs at least 3 vertices, got {n}"));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid ids")
}

/// Vertex-disjoint union.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let off = a.n();
    Graph::new(
        a.n() + b.n(),
        a.edges().chain(b.edges().map(|(u, v)| (u + off, v + off))),
    )
    .expect("valid ids")
}

/// Random simple cubic graph from the pairing model, rejecting loops and
/// multi-edges.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n % 2 == 1 || n < 4 {
        return Err(invalid!("cubic graphs need an even order of at least 4, got {n}"));
    }
    let mut r = rng(seed);
    let mut points: Vec<Vertex> = (0..3 * n).map(|i| i / 3).collect();
    'attempt: for _ in 0..MAX_ATTEMPTS {
        points.shuffle(&mut r);
        let mut edges = Vec::with_capacity(3 * n / 2);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return Graph::new(n, edges);
    }
    Err(Error::CapExceeded(format!("no simple cubic graph on {n} vertices sampled")))
}

/// Random cubic graph of girth at least `min_girth`, by rejection.
pub fn high_girth_cubic(n: usize, min_girth: usize, seed: u64) -> Result<Graph> {
    let mut r = rng(seed);
    for _ in 0..MAX_ATTEMPTS / 10 {
        let g = random_cubic(n, r.gen())?;
        if girth(&g).map_or(true, |x| x >= min_girth) {
            return Ok(g);
        }
    }
    Err(Error::CapExceeded(format!(
        "no cubic graph on {n} vertices with girth >= {min_girth} sampled"
    )))
}

/// Random graph built by inserting random edges only between vertices at
/// distance at least `min_girth - 1`, so every cycle has length at least
/// `min_girth`.
pub fn sparse_high_girth(n: usize, m: usize, min_girth: usize, seed: u64) -> Result<Graph> {
    let mut r = rng(seed);
    let mut g = Graph::empty(n);
    let mut edges = Vec::new();
    let mut misses = 0;
    while edges.len() < m && n >= 2 && misses < 50 * m + 100 {
        let u = r.gen_range(0..n);
        let v = r.gen_range(0..n);
        if u == v || g.has_edge(u, v) {
            misses += 1;
            continue;
        }
        let dist = bfs_distances(&g, [u], None, Some(min_girth.saturating_sub(2)));
        if dist[v] != UNREACHED {
            misses += 1;
            continue;
        }
        edges.push((u, v));
        g = Graph::new(n, edges.iter().copied())?;
    }
    Ok(g)
}

/// `a × b` grid.
pub fn grid(a: usize, b: usize) -> Graph {
    let id = |i: usize, j: usize| i * b + j;
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            if i + 1 < a {
                edges.push((id(i, j), id(i + 1, j)));
            }
            if j + 1 < b {
                edges.push((id(i, j), id(i, j + 1)));
            }
        }
    }
    Graph::new(a * b, edges).expect("valid ids")
}

/// Random spanning subgraph of the `a × b` grid keeping each edge with
/// probability `keep`.
pub fn grid_subgraph(a: usize, b: usize, keep: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&keep) {
        return Err(invalid!("keep probability {keep} outside [0, 1]"));
    }
    let mut r = rng(seed);
    let full = grid(a, b);
    let edges: Vec<_> = full.edges().filter(|_| r.gen_bool(keep)).collect();
    Graph::new(full.n(), edges)
}

/// Random stacked triangulation (Apollonian network) on `n >= 3` vertices:
/// start from a triangle and repeatedly insert a vertex into a random face.
pub fn stacked_triangulation(n: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(invalid!("stacked triangulations need at least 3 vertices"));
    }
    let mut r = rng(seed);
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for v in 3..n {
        let f = r.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(f);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    Graph::new(n, edges)
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    Graph::new(m + n, (0..m).flat_map(|u| (0..n).map(move |v| (u, m + v)))).expect("valid ids")
}

/// `K_{1,t}` with centre 0.
pub fn star(t: usize) -> Graph {
    Graph::new(t + 1, (1..=t).map(|v| (0, v))).expect("valid ids")
}

pub fn petersen() -> Graph {
    let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Graph::new(10, edges).expect("valid ids")
}

/// The Heawood graph: cubic, 14 vertices, girth 6.
pub fn heawood() -> Graph {
    let mut edges: Vec<_> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    edges.extend((0..14).step_by(2).map(|i| (i, (i + 5) % 14)));
    Graph::new(14, edges).expect("valid ids")
}

/// Line graph; vertex `i` is the `i`-th edge of `g` in [`Graph::edges`] order.
pub fn line_graph(g: &Graph) -> Graph {
    let es: Vec<_> = g.edges().collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in es.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut edges = Vec::new();
    for list in &incident {
        for (x, &i) in list.iter().enumerate() {
            for &j in &list[x + 1..] {
                edges.push((i, j));
            }
        }
    }
    Graph::new(es.len(), edges).expect("valid ids")
}

/// Replaces every edge by a path with `s` new interior vertices. The new
/// vertices of edge number `e` are `n + e*s .. n + (e+1)*s`.
pub fn subdivide(g: &Graph, s: usize) -> Graph {
    let n = g.n();
    let mut edges = Vec::new();
    for (e, (u, v)) in g.edges().enumerate() {
        let mut prev = u;
        for x in 0..s {
            let w = n + e * s + x;
            edges.push((prev, w));
            prev = w;
        }
        edges.push((prev, v));
    }
    Graph::new(n + g.m() * s, edges).expect("valid ids")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_from_seed() {
        assert_eq!(gnp(30, 0.2, 7).unwrap(), gnp(30, 0.2, 7).unwrap());
        assert_eq!(random_cubic(20, 3).unwrap(), random_cubic(20, 3).unwrap());
    }

    #[test]
    fn cubic_is_cubic() {
        let g = random_cubic(50, 1).unwrap();
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert!(random_cubic(7, 0).is_err());
    }

    #[test]
    fn grid_counts() {
        let g = grid(3, 3);
        assert_eq!((g.n(), g.m()), (9, 12));
    }

    #[test]
    fn line_graph_of_k33() {
        let l = line_graph(&complete_bipartite(3, 3));
        assert_eq!(l.n(), 9);
        assert!(l.vertices().all(|v| l.degree(v) == 4));
    }

    #[test]
    fn subdivided_k4() {
        let h = subdivide(&complete(4), 2);
        assert_eq!(h.n(), 16);
        assert_eq!(girth(&h), Some(9));
    }

    #[test]
    fn named_graphs() {
        assert_eq!(girth(&petersen()), Some(5));
        assert_eq!(girth(&heawood()), Some(6));
        assert!(heawood().vertices().all(|v| heawood().degree(v) == 3));
    }

    #[test]
    fn sparse_high_girth_respects_girth() {
        for seed in 0..10 {
            let g = sparse_high_girth(60, 80, 7, seed).unwrap();
            assert!(girth(&g).map_or(true, |x| x >= 7));
        }
    }

    #[test]
    fn stacked_triangulation_edge_count() {
        let g = stacked_triangulation(20, 4).unwrap();
        assert_eq!(g.m(), 3 * 20 - 6);
    }
}
