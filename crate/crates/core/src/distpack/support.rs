use std::collections::{BTreeMap, VecDeque};

use crate::error::{violation, Result};
use crate::graph::{Cycle, Graph, Path, Vertex, UNREACHED};

/// A vertex at distance exactly `d + 1` from the cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryVertex {
    pub anchor: Vertex,
    /// From the boundary vertex to its anchor, `d + 1` edges.
    pub path: Path,
}

/// Which cycle vertex every vertex of `B(C, d)` hangs from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportMap {
    pub d: usize,
    /// `anchor[v]` for `v ∈ B(C, d)`.
    pub anchor: Vec<Option<Vertex>>,
    /// Distance to the cycle inside the anchor's tree.
    pub depth: Vec<usize>,
    /// BFS parent towards the anchor.
    parent: Vec<Option<Vertex>>,
    pub boundary: BTreeMap<Vertex, BoundaryVertex>,
}

impl SupportMap {
    pub fn anchor_of(&self, v: Vertex) -> Result<Vertex> {
        self.anchor[v]
            .or_else(|| self.boundary.get(&v).map(|b| b.anchor))
            .ok_or_else(|| violation!("vertex {v} has no anchor"))
    }

    pub fn is_boundary(&self, v: Vertex) -> bool {
        self.boundary.contains_key(&v)
    }

    pub fn in_ball(&self, v: Vertex) -> bool {
        self.anchor[v].is_some()
    }
}

/// BFS from `root` avoiding the other vertices of the cycle, to depth `r`.
/// Returns `(vertex, parent, depth)` in visiting order.
pub(super) fn tree_from(g: &Graph, on_c: &[bool], root: Vertex, r: usize) -> Vec<(Vertex, Option<Vertex>, usize)> {
    let mut seen = std::collections::HashSet::from([root]);
    let mut out = vec![(root, None, 0)];
    let mut queue = VecDeque::from([(root, 0)]);
    while let Some((u, du)) = queue.pop_front() {
        if du == r {
            continue;
        }
        for &w in g.neighbors(u) {
            if !on_c[w] && seen.insert(w) {
                out.push((w, Some(u), du + 1));
                queue.push_back((w, du + 1));
            }
        }
    }
    out
}

/// Builds the support map of a shortest cycle `c` when the girth is at
/// least `8d + 5`; every structural consequence of that girth is asserted.
pub fn support_map(g: &Graph, c: &Cycle, d: usize) -> Result<SupportMap> {
    let n = g.n();
    let mut on_c = vec![false; n];
    for &v in c.vertices() {
        on_c[v] = true;
    }
    let mut anchor = vec![None; n];
    let mut depth = vec![UNREACHED; n];
    let mut parent = vec![None; n];
    for &root in c.vertices() {
        let tree = tree_from(g, &on_c, root, d);
        for &(v, p, dv) in &tree {
            if let Some(other) = anchor[v] {
                return Err(violation!("vertex {v} lies in the trees of {other} and {root}"));
            }
            anchor[v] = Some(root);
            depth[v] = dv;
            parent[v] = p;
        }
        let size = tree.len();
        let inner = tree
            .iter()
            .map(|&(v, _, _)| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&w| anchor[w] == Some(root) && !(on_c[v] && on_c[w]))
                    .count()
            })
            .sum::<usize>()
            / 2;
        if inner != size - 1 {
            return Err(violation!("the depth-{d} tree at {root} is not a tree"));
        }
    }
    for (u, v) in g.edges() {
        if on_c[u] && on_c[v] {
            continue;
        }
        if let (Some(a), Some(b)) = (anchor[u], anchor[v]) {
            if a != b {
                return Err(violation!("edge {u}-{v} joins the trees of {a} and {b}"));
            }
        }
    }
    let mut boundary = BTreeMap::new();
    for v in 0..n {
        if anchor[v].is_some() {
            continue;
        }
        let inside: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| anchor[w].is_some()).collect();
        match inside.as_slice() {
            [] => {}
            [u] if depth[*u] == d => {
                let mut path = vec![v, *u];
                let mut cur = *u;
                while let Some(p) = parent[cur] {
                    path.push(p);
                    cur = p;
                }
                boundary.insert(
                    v,
                    BoundaryVertex {
                        anchor: anchor[*u].expect("inside the ball"),
                        path: Path::new(path),
                    },
                );
            }
            _ => {
                return Err(violation!(
                    "vertex {v} outside the ball has neighbours {inside:?} inside"
                ))
            }
        }
    }
    Ok(SupportMap {
        d,
        anchor,
        depth,
        parent,
        boundary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::girth_cycle;

    #[test]
    fn bare_cycle() {
        let g = gen::cycle(13).unwrap();
        let c = girth_cycle(&g).unwrap();
        let sm = support_map(&g, &c, 1).unwrap();
        assert!(sm.boundary.is_empty());
        for v in 0..13 {
            assert_eq!(sm.anchor[v], Some(v));
        }
    }

    #[test]
    fn pendant_path() {
        let d = 2;
        let mut edges: Vec<_> = (0..21).map(|i| (i, (i + 1) % 21)).collect();
        edges.extend([(5, 21), (21, 22), (22, 23)]);
        let g = Graph::new(24, edges).unwrap();
        let c = girth_cycle(&g).unwrap();
        let sm = support_map(&g, &c, d).unwrap();
        assert_eq!(sm.boundary.len(), 1);
        let b = &sm.boundary[&23];
        assert_eq!(b.anchor, 5);
        assert_eq!(b.path.vertices(), &[23, 22, 21, 5]);
        assert_eq!(b.path.len(), d + 1);
    }
}
