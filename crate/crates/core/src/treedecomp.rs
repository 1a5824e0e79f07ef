//! Tree decompositions of bounded independence number for `K_{1,t}`-free
//! graphs.

use crate::error::{invalid, violation, Error, Result};
use crate::graph::{ball, is_forest_after_removal, is_forest_within, Graph, Vertex, VertexSet};
use crate::packing::{f_bound, induced_pack_or_hit, Certificate};

/// A tree on `bags.len()` nodes given by `edges`, with a bag per node.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0).saturating_sub(1)
    }
}

/// One node per vertex and one per edge; components are chained through
/// the nodes of their smallest vertices.
pub fn forest_td(f: &Graph) -> Result<TreeDecomposition> {
    if !is_forest_within(f, None) {
        return Err(invalid!("forest_td needs an acyclic graph"));
    }
    let mut td = TreeDecomposition::default();
    let node_of: Vec<usize> = f.vertices().collect();
    td.bags = f.vertices().map(VertexSet::singleton).collect();
    let mut seen = vec![false; f.n()];
    let mut prev_root: Option<usize> = None;
    for r in f.vertices() {
        if seen[r] {
            continue;
        }
        if let Some(p) = prev_root {
            td.edges.push((node_of[p], node_of[r]));
        }
        prev_root = Some(r);
        seen[r] = true;
        let mut stack = vec![r];
        while let Some(u) = stack.pop() {
            for &w in f.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    let e = td.bags.len();
                    td.bags.push([u, w].into_iter().collect());
                    td.edges.push((node_of[u], e));
                    td.edges.push((e, node_of[w]));
                    stack.push(w);
                }
            }
        }
    }
    Ok(td)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum K1tOutcome {
    Packing(Certificate),
    Decomposition {
        td: TreeDecomposition,
        /// Hitting set whose closed neighbourhood is added to every bag.
        x: VertexSet,
        /// `f(k)·(t−1) + 2`, the independence bound promised for
        /// `K_{1,t}`-free inputs.
        bound: usize,
    },
}

/// An induced packing of `k` cycles, or a tree decomposition whose bags
/// are a forest decomposition of `G − B(X, 1)` plus `B(X, 1)`.
pub fn k1t_td(g: &Graph, k: usize, t: usize) -> Result<K1tOutcome> {
    if t == 0 {
        return Err(invalid!("t must be positive"));
    }
    let x = match induced_pack_or_hit(g, k)? {
        cert @ Certificate::InducedPacking { .. } => return Ok(K1tOutcome::Packing(cert)),
        Certificate::HittingSet { x, .. } => x,
    };
    let near = ball(g, &x, 1);
    let (rest, origin) = g.without(&near);
    let inner = forest_td(&rest)?;
    let mut td = TreeDecomposition {
        bags: inner
            .bags
            .iter()
            .map(|b| b.mapped(&origin).union(&near))
            .collect(),
        edges: inner.edges,
    };
    if td.bags.is_empty() && g.n() > 0 {
        td.bags.push(near);
    }
    let bound = f_bound(k)?.floor() as usize * (t - 1) + 2;
    Ok(K1tOutcome::Decomposition { td, x, bound })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TdWitness {
    Vertex(Vertex),
    Edge(Vertex, Vertex),
    Node(usize),
    Tree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdReport {
    /// Failed axioms with a witness each.
    pub failures: Vec<(&'static str, TdWitness)>,
    pub max_independence: usize,
}

impl TdReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the decomposition axioms and computes the largest bag
/// independence number exactly. Bags larger than `independence_cap`
/// (or 128) are refused.
pub fn validate_td(g: &Graph, td: &TreeDecomposition, independence_cap: usize) -> Result<TdReport> {
    let nodes = td.bags.len();
    let mut failures = Vec::new();
    if let Some(&(a, b)) = td.edges.iter().find(|&&(a, b)| a >= nodes || b >= nodes) {
        return Err(invalid!("tree edge {a}-{b} out of range"));
    }
    let tree = Graph::new(nodes, td.edges.iter().copied())?;
    let connected = nodes == 0 || crate::graph::bfs_distances(&tree, [0], None, None)
        .iter()
        .all(|&d| d != crate::graph::UNREACHED);
    if tree.m() != td.edges.len() || !connected || (nodes > 0 && tree.m() != nodes - 1) {
        failures.push(("tree", TdWitness::Tree));
    }
    let mut holders = vec![Vec::new(); g.n()];
    for (i, bag) in td.bags.iter().enumerate() {
        if let Some(v) = bag.iter().find(|&v| v >= g.n()) {
            return Err(invalid!("bag {i} holds vertex {v} out of range"));
        }
        for v in bag.iter() {
            holders[v].push(i);
        }
    }
    for (v, h) in holders.iter().enumerate() {
        if h.is_empty() {
            failures.push(("vertex-covered", TdWitness::Vertex(v)));
            continue;
        }
        let mut keep = vec![false; nodes];
        for &i in h {
            keep[i] = true;
        }
        let reach = crate::graph::bfs_distances(&tree, [h[0]], Some(&keep), None);
        if h.iter().any(|&i| reach[i] == crate::graph::UNREACHED) {
            failures.push(("subtree", TdWitness::Vertex(v)));
        }
    }
    for (u, v) in g.edges() {
        if !td.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
            failures.push(("edge-covered", TdWitness::Edge(u, v)));
        }
    }
    let mut max_independence = 0;
    for (i, bag) in td.bags.iter().enumerate() {
        if bag.len() > independence_cap.min(128) {
            return Err(Error::CapExceeded(format!(
                "bag {i} has {} vertices, cap is {}",
                bag.len(),
                independence_cap.min(128)
            )));
        }
        max_independence = max_independence.max(bag_independence(g, bag));
    }
    Ok(TdReport {
        failures,
        max_independence,
    })
}

/// Exact independence number of `G[bag]` by branch and bound.
pub fn bag_independence(g: &Graph, bag: &VertexSet) -> usize {
    let vs = bag.to_vec();
    assert!(vs.len() <= 128, "bag too large for a 128-bit mask");
    let adj: Vec<u128> = vs
        .iter()
        .map(|&u| {
            vs.iter()
                .enumerate()
                .filter(|&(_, &w)| w != u && g.has_edge(u, w))
                .fold(0u128, |m, (j, _)| m | 1 << j)
        })
        .collect();
    let all = if vs.len() == 128 { u128::MAX } else { (1u128 << vs.len()) - 1 };
    let mut best = 0;
    branch(&adj, all, 0, &mut best);
    best
}

fn branch(adj: &[u128], cand: u128, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    // a vertex of minimum degree: some maximum independent set contains it
    // or one of its neighbours, so branching over N[v] is exhaustive
    let mut rest = cand;
    let mut v = 0;
    let mut low = u32::MAX;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let deg = (adj[u] & cand).count_ones();
        if deg < low {
            low = deg;
            v = u;
        }
    }
    let mut choices = (adj[v] & cand) | 1 << v;
    let mut done = 0u128;
    while choices != 0 {
        let u = choices.trailing_zeros() as usize;
        choices &= choices - 1;
        branch(adj, cand & !(1 << u) & !adj[u] & !done, size + 1, best);
        // later branches may skip u: sets containing u were covered here
        done |= 1 << u;
    }
}

/// `B(X, r)` as an explicit feedback vertex set, with the degree-based
/// size bound asserted.
pub fn hitting_to_fvs(g: &Graph, x: &VertexSet, r: usize) -> Result<VertexSet> {
    let b = ball(g, x, r);
    if !is_forest_after_removal(g, &b) {
        return Err(invalid!("G − B(X, {r}) is not a forest"));
    }
    let delta = g.max_degree() as f64;
    let per = if delta >= 3.0 {
        1.0 + delta * ((delta - 1.0).powi(r as i32) - 1.0) / (delta - 2.0)
    } else {
        1.0 + 2.0 * r as f64
    };
    if b.len() as f64 > x.len() as f64 * per + 1e-9 {
        return Err(violation!(
            "ball of size {} exceeds {} per centre",
            b.len(),
            per
        ));
    }
    Ok(b)
}
