//! Auxiliary forests of a coarse ear-decomposition and the reduced
//! subgraph ℋ′.

use crate::eardecomp::{EarDecomp, EarKind};
use crate::error::{violation, Result};
use crate::graph::{is_forest_within, Cycle, Graph, Vertex, VertexSet};

/// Forest on the phases: `w_i ~ w_j` iff the opening cycles `P_{i,1}` and
/// `P_{j,1}` share a vertex or are joined by an ℋ-edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlayForest {
    pub forest: Graph,
    /// Node `i` (0-based phase) ↦ index of its opening ear in the ear list.
    pub ears: Vec<usize>,
}

/// Forest on the chorded ℋ-paths: ears `P_{i,j}` (`j >= 2`) whose ends are
/// joined by an edge of an older ear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordForest {
    pub forest: Graph,
    /// Node ↦ index of its ear in the ear list.
    pub ears: Vec<usize>,
    /// Node ↦ the cycle formed by the ear and the chord joining its ends.
    pub cycles: Vec<Cycle>,
}

pub fn build_overlay_forest(d: &EarDecomp) -> Result<OverlayForest> {
    let ears: Vec<usize> = d
        .ears()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.index == 1)
        .map(|(i, _)| i)
        .collect();
    let mut cycles_of: Vec<Vec<usize>> = vec![Vec::new(); d.n()];
    for (node, &e) in ears.iter().enumerate() {
        for &v in &d.ears()[e].vertices {
            cycles_of[v].push(node);
        }
    }
    let mut edges = Vec::new();
    for (node, &e) in ears.iter().enumerate() {
        for &v in &d.ears()[e].vertices {
            let near = std::iter::once(v).chain(d.h_neighbors(v).iter().copied());
            for w in near {
                for &other in &cycles_of[w] {
                    if other != node {
                        edges.push((node.min(other), node.max(other)));
                    }
                }
            }
        }
    }
    let forest = Graph::new(ears.len(), edges)?;
    if !is_forest_within(&forest, None) {
        return Err(violation!("overlay forest on {} phases has a cycle", ears.len()));
    }
    Ok(OverlayForest { forest, ears })
}

pub fn build_chord_forest(d: &EarDecomp) -> Result<ChordForest> {
    let mut ears = Vec::new();
    let mut node_of = vec![usize::MAX; d.ears().len()];
    for (e, ear) in d.ears().iter().enumerate() {
        if let EarKind::HPath { a, b } = ear.kind {
            if ear.len() >= 2 && d.has_h_edge(a, b) {
                node_of[e] = ears.len();
                ears.push(e);
            }
        }
    }
    let mut edges = Vec::new();
    let mut cycles = Vec::new();
    for (node, &e) in ears.iter().enumerate() {
        let ear = &d.ears()[e];
        let (a, b) = (ear.vertices[0], *ear.vertices.last().unwrap());
        let older = d
            .ear_of_edge(a, b)
            .ok_or_else(|| violation!("chord {a}-{b} of ear {e} is not an ℋ-edge"))?;
        if older >= e {
            return Err(violation!("chord {a}-{b} of ear {e} lies on a later ear {older}"));
        }
        if node_of[older] != usize::MAX {
            edges.push((node_of[older], node));
        }
        cycles.push(Cycle::new(ear.vertices.clone()));
    }
    let forest = Graph::new(ears.len(), edges)?;
    if !is_forest_within(&forest, None) {
        return Err(violation!("chord forest on {} nodes has a cycle", ears.len()));
    }
    Ok(ChordForest {
        forest,
        ears,
        cycles,
    })
}

/// ℋ′: ℋ minus its degree-4 vertices, minus `a_{x,2}` for single-edge
/// ears `P_{x,2}`, minus `a_{i,j}` for chorded ears, then pruned of
/// vertices of degree at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPrime {
    pub vertices: VertexSet,
    /// ℋ′ as a spanning subgraph on the host's vertex ids.
    pub graph: Graph,
}

impl HPrime {
    /// Vertices of degree 3 in ℋ′.
    pub fn branch_vertices(&self) -> VertexSet {
        self.vertices
            .iter()
            .filter(|&v| self.graph.degree(v) >= 3)
            .collect()
    }
}

pub fn derive_h_prime(d: &EarDecomp, chords: &ChordForest) -> Result<HPrime> {
    let n = d.n();
    let mut alive: Vec<bool> = d.vertex_mask().to_vec();
    for v in 0..n {
        if d.degree(v) == 4 {
            alive[v] = false;
        }
    }
    for ear in d.ears() {
        if let EarKind::HPath { a, .. } = ear.kind {
            if ear.index == 2 && ear.len() == 1 {
                alive[a] = false;
            }
        }
    }
    for &e in &chords.ears {
        alive[d.ears()[e].vertices[0]] = false;
    }
    let mut deg: Vec<usize> = (0..n)
        .map(|v| {
            if alive[v] {
                d.h_neighbors(v).iter().filter(|&&w| alive[w]).count()
            } else {
                0
            }
        })
        .collect();
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| alive[v] && deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in d.h_neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 {
                    stack.push(w);
                }
            }
        }
    }
    let h = d.subgraph();
    let graph = Graph::new(n, h.edges().filter(|&(u, v)| alive[u] && alive[v]))?;
    if let Some(v) = (0..n).find(|&v| alive[v] && !(2..=3).contains(&graph.degree(v))) {
        return Err(violation!("ℋ′ vertex {v} has degree {}", graph.degree(v)));
    }
    Ok(HPrime {
        vertices: VertexSet::from_mask(&alive),
        graph,
    })
}
