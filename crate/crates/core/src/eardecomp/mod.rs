//! Maximal coarse ear-decompositions.
//!
//! An ear-decomposition grows a subgraph ℋ of the host graph in phases.
//! Every phase opens with a cycle (type 1 when it touches ℋ in exactly one
//! admissible vertex, type 2 when it is disjoint from ℋ) and continues with
//! shortest ℋ-paths for as long as they exist. All searches avoid the
//! protected zone `Z`, the radius-1 neighbourhood of the radius-2 ℋ-balls
//! around branch vertices.

mod search;
mod validate;

use serde::{Deserialize, Serialize};

use crate::graph::{Cycle, Graph, Vertex, VertexSet};

pub use search::{build_maximal, find_shortest_h_path, find_type1_ear, find_type2_ear};
pub use validate::{validate, CheckResult, ValidationReport, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EarKind {
    /// Cycle meeting the earlier decomposition exactly at `attachment`.
    Type1 { attachment: Vertex },
    /// Cycle vertex-disjoint from the earlier decomposition.
    Type2,
    /// Path with both ends `a`, `b` on the earlier decomposition.
    HPath { a: Vertex, b: Vertex },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ear {
    pub kind: EarKind,
    /// Cycle in canonical order, or the path from `a` to `b`.
    pub vertices: Vec<Vertex>,
    /// 1-based phase number `i`.
    pub phase: usize,
    /// 1-based position `j` inside the phase.
    pub index: usize,
}

impl Ear {
    pub fn is_cycle(&self) -> bool {
        !matches!(self.kind, EarKind::HPath { .. })
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        if self.is_cycle() {
            self.vertices.len()
        } else {
            self.vertices.len() - 1
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let k = self.vertices.len();
        let mut out: Vec<_> = self.vertices.windows(2).map(|w| (w[0], w[1])).collect();
        if self.is_cycle() && k >= 3 {
            out.push((self.vertices[k - 1], self.vertices[0]));
        }
        out
    }

    /// The attachment set: `{c}`, `∅` or `{a, b}`.
    pub fn gamma(&self) -> VertexSet {
        match self.kind {
            EarKind::Type1 { attachment } => VertexSet::singleton(attachment),
            EarKind::Type2 => VertexSet::new(),
            EarKind::HPath { a, b } => [a, b].into_iter().collect(),
        }
    }

    pub fn cycle(&self) -> Option<Cycle> {
        self.is_cycle().then(|| Cycle::new(self.vertices.clone()))
    }
}

/// A coarse ear-decomposition of a graph on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EarDecomp {
    n: usize,
    ears: Vec<Ear>,
    in_h: Vec<bool>,
    adj: Vec<Vec<Vertex>>,
}

impl EarDecomp {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            ears: Vec::new(),
            in_h: vec![false; n],
            adj: vec![Vec::new(); n],
        }
    }

    /// Replays `ears` in order. No condition is checked here; use
    /// [`validate`] for that.
    pub fn from_ears(n: usize, ears: Vec<Ear>) -> Self {
        let mut d = Self::empty(n);
        for ear in ears {
            d.push(ear);
        }
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ears(&self) -> &[Ear] {
        &self.ears
    }

    pub fn is_empty(&self) -> bool {
        self.ears.is_empty()
    }

    /// Number of phases `t`.
    pub fn phases(&self) -> usize {
        self.ears.last().map_or(0, |e| e.phase)
    }

    /// The opening cycles `P_{i,1}`, in phase order.
    pub fn phase_cycles(&self) -> impl Iterator<Item = &Ear> {
        self.ears.iter().filter(|e| e.index == 1)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.in_h[v]
    }

    pub fn vertex_mask(&self) -> &[bool] {
        &self.in_h
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_mask(&self.in_h)
    }

    /// Degree of `v` inside ℋ.
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn h_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_h_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// ℋ as a spanning subgraph on all `n` vertices.
    pub fn subgraph(&self) -> Graph {
        let edges = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)));
        Graph::new(self.n, edges).expect("ear edges are valid")
    }

    /// The decomposition formed by the first `len` ears.
    pub fn prefix(&self, len: usize) -> EarDecomp {
        EarDecomp::from_ears(self.n, self.ears[..len].to_vec())
    }

    pub(crate) fn push(&mut self, ear: Ear) {
        for &v in &ear.vertices {
            self.in_h[v] = true;
        }
        for (u, v) in ear.edges() {
            if let Err(pos) = self.adj[u].binary_search(&v) {
                self.adj[u].insert(pos, v);
            }
            if let Err(pos) = self.adj[v].binary_search(&u) {
                self.adj[v].insert(pos, u);
            }
        }
        self.ears.push(ear);
    }

    /// Index into [`EarDecomp::ears`] of the first ear containing `v`.
    pub fn first_ear_of(&self, v: Vertex) -> Option<usize> {
        self.ears.iter().position(|e| e.vertices.contains(&v))
    }

    /// Index of the ear containing the ℋ-edge `uv`, if any.
    pub fn ear_of_edge(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.ears.iter().position(|e| {
            e.edges()
                .iter()
                .any(|&(x, y)| (x, y) == (u, v) || (x, y) == (v, u))
        })
    }
}

/// The protected sets of a decomposition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YZState {
    /// Radius-2 ℋ-ball around the branch vertices of ℋ.
    pub y: Vec<bool>,
    /// `Y` plus its `G`-neighbours outside ℋ.
    pub z: Vec<bool>,
}

impl YZState {
    pub fn y_set(&self) -> VertexSet {
        VertexSet::from_mask(&self.y)
    }

    pub fn z_set(&self) -> VertexSet {
        VertexSet::from_mask(&self.z)
    }
}

/// Computes `Y` and `Z` for the current decomposition.
pub fn compute_yz(g: &Graph, d: &EarDecomp) -> YZState {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for v in 0..n {
        if d.degree(v) >= 3 {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    while let Some(u) = queue.pop_front() {
        if dist[u] == 2 {
            continue;
        }
        for &w in d.h_neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let y: Vec<bool> = dist.iter().map(|&x| x <= 2).collect();
    let mut z = y.clone();
    for v in 0..n {
        if y[v] {
            for &w in g.neighbors(v) {
                if !d.contains(w) {
                    z[w] = true;
                }
            }
        }
    }
    YZState { y, z }
}

/// Vertices of ℋ outside `Y`.
pub fn admissible_mask(d: &EarDecomp, yz: &YZState) -> Vec<bool> {
    (0..d.n()).map(|v| d.contains(v) && !yz.y[v]).collect()
}

/// Vertices outside both ℋ and `Z`.
pub fn free_mask(d: &EarDecomp, yz: &YZState) -> Vec<bool> {
    (0..d.n()).map(|v| !d.contains(v) && !yz.z[v]).collect()
}
