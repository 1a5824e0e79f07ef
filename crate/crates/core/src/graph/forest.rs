use super::{is_forest_within, Graph, VertexSet};
use crate::error::{invalid, Result};

/// Maximum independent set of a forest by leaf-to-root dynamic programming.
/// Each component is rooted at its smallest vertex; when taking and skipping
/// a vertex tie, the vertex is taken.
pub fn forest_max_independent_set(f: &Graph) -> Result<VertexSet> {
    if !is_forest_within(f, None) {
        return Err(invalid!("forest_max_independent_set called on a graph with a cycle"));
    }
    let n = f.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        parent[root] = root;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in f.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    order.push(w);
                }
            }
        }
    }
    let mut take = vec![1usize; n];
    let mut skip = vec![0usize; n];
    for &u in order.iter().rev() {
        let p = parent[u];
        if p != u {
            take[p] += skip[u];
            skip[p] += take[u].max(skip[u]);
        }
    }
    let mut chosen = vec![false; n];
    let mut set = VertexSet::new();
    for &u in &order {
        let p = parent[u];
        let pick = if p == u || !chosen[p] {
            take[u] >= skip[u]
        } else {
            false
        };
        if pick {
            chosen[u] = true;
            set.insert(u);
        }
    }
    Ok(set)
}
