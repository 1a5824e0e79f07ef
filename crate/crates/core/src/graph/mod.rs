//! Immutable simple graphs and the traversal primitives the dichotomy
//! algorithms are built from.
//!
//! Vertex deletion is never performed by copying: traversals accept an
//! optional `alive` mask and ignore masked-out vertices. Where a recursion
//! genuinely needs a smaller graph, [`Graph::induced`] returns the induced
//! subgraph together with the map back to the host ids.

mod bridges;
mod forest;
mod multigraph;
mod traverse;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

pub use bridges::{bridge_components, BridgeForest};
pub use forest::forest_max_independent_set;
pub use multigraph::{
    lift_cycle, suppress_degree_two, suppress_degree_two_within, ExpansionMap, MultiCycle,
    Multigraph,
};
pub use traverse::{
    ball, ball_within, bfs_distances, find_cycle_within, girth, girth_cycle, girth_cycle_within,
    is_forest_after_removal, is_forest_within, set_distance, shortest_cycle_through,
    shortest_cycle_through_within, shortest_path_within, two_core, two_core_within, UNREACHED,
};

pub type Vertex = usize;

/// A set of vertex ids, kept sorted so that iteration order and serialized
/// output are deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: Vertex) -> Self {
        Self(BTreeSet::from([v]))
    }

    /// Collects the indices set in a boolean mask.
    pub fn from_mask(mask: &[bool]) -> Self {
        mask.iter()
            .enumerate()
            .filter_map(|(v, &on)| on.then_some(v))
            .collect()
    }

    /// Boolean membership mask of length `n`. Ids `>= n` are ignored.
    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in self.0.iter().take_while(|&&v| v < n) {
            mask[v] = true;
        }
        mask
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        self.0.remove(&v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.0.union(&other.0).copied().collect()
    }

    pub fn extend(&mut self, other: impl IntoIterator<Item = Vertex>) {
        self.0.extend(other);
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.0.iter().copied().collect()
    }

    /// Maps every member through `map` (typically sub-graph id -> host id).
    pub fn mapped(&self, map: &[Vertex]) -> VertexSet {
        self.iter().map(|v| map[v]).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a graph, dropping duplicate edges. Loops and out-of-range ids
    /// are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid!("edge ({u},{v}) has an endpoint outside 0..{n}"));
            }
            if u == v {
                return Err(invalid!("loop at vertex {u}"));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Self { adj, m: m / 2 })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Induced subgraph on the vertices with `keep[v]`, relabelled to
    /// `0..k` in increasing id order. The second component maps new ids
    /// back to ids of `self`.
    pub fn induced(&self, keep: &[bool]) -> (Graph, Vec<Vertex>) {
        let old_of: Vec<Vertex> = self.vertices().filter(|&v| keep[v]).collect();
        let mut new_of = vec![usize::MAX; self.n()];
        for (i, &v) in old_of.iter().enumerate() {
            new_of[v] = i;
        }
        let mut adj = vec![Vec::new(); old_of.len()];
        let mut m = 0;
        for (i, &v) in old_of.iter().enumerate() {
            for &w in &self.adj[v] {
                if keep[w] {
                    adj[i].push(new_of[w]);
                    m += 1;
                }
            }
        }
        (Graph { adj, m: m / 2 }, old_of)
    }

    /// Induced subgraph after deleting `removed`; see [`Graph::induced`].
    pub fn without(&self, removed: &VertexSet) -> (Graph, Vec<Vertex>) {
        let keep: Vec<bool> = self.vertices().map(|v| !removed.contains(v)).collect();
        self.induced(&keep)
    }

    /// Spanning subgraph of `self` containing only the given edges. Edges
    /// that are not edges of `self` are rejected.
    pub fn edge_subgraph(&self, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Graph> {
        let edges: Vec<_> = edges.into_iter().collect();
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !self.has_edge(u, v)) {
            return Err(invalid!("({u},{v}) is not an edge of the host graph"));
        }
        Graph::new(self.n(), edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.m())
    }
}

/// A path given by its vertex sequence. A single vertex is a path of
/// length 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.vertices.last().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        !self.vertices.is_empty()
            && self.vertices.iter().all(|&v| v < g.n())
            && distinct(&self.vertices)
            && self.edges().all(|(u, v)| g.has_edge(u, v))
    }
}

/// A cycle given by its cyclic vertex sequence (at least three distinct
/// vertices). Constructed cycles are canonical: rotated to start at their
/// smallest vertex and oriented so the second vertex is smaller than the
/// last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    vertices: Vec<Vertex>,
}

impl Cycle {
    /// Canonicalizes `vertices`. Does not check adjacency; see
    /// [`Cycle::is_valid_in`].
    pub fn new(mut vertices: Vec<Vertex>) -> Self {
        if let Some(pos) = vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .map(|(i, _)| i)
        {
            vertices.rotate_left(pos);
            if vertices.len() > 2 && vertices[1] > vertices[vertices.len() - 1] {
                vertices[1..].reverse();
            }
        }
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of edges (equal to the number of vertices).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.vertices.len() >= 3
            && self.vertices.iter().all(|&v| v < g.n())
            && distinct(&self.vertices)
            && self.edges().all(|(u, v)| g.has_edge(u, v))
    }

    /// Relabels through `map` (sub-graph id -> host id) and re-canonicalizes.
    pub fn mapped(&self, map: &[Vertex]) -> Cycle {
        Cycle::new(self.vertices.iter().map(|&v| map[v]).collect())
    }
}

fn distinct(vs: &[Vertex]) -> bool {
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_dedups_and_rejects_loops() {
        let tri = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(tri.m(), 3);
        assert!(matches!(
            Graph::new(2, [(0, 0)]),
            Err(crate::Error::InvalidInput(_))
        ));
        let g = Graph::new(4, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn cycle_canonical_form() {
        let c = Cycle::new(vec![3, 1, 2]);
        assert_eq!(c.vertices(), &[1, 2, 3]);
        let c = Cycle::new(vec![4, 2, 9, 1]);
        assert_eq!(c.vertices(), &[1, 4, 2, 9]);
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (h, map) = g.induced(&[true, false, true, true]);
        assert_eq!(map, vec![0, 2, 3]);
        assert_eq!(h.m(), 2);
        assert!(h.has_edge(1, 2) && h.has_edge(2, 0));
    }
}
