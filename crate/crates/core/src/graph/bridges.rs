use super::{Graph, Vertex};

/// Maximal bridgeless classes of a graph and the forest of bridges between
/// them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeForest {
    /// Class id of every vertex. Classes are numbered by their smallest
    /// vertex.
    pub class_of: Vec<usize>,
    /// Members of every class, sorted.
    pub classes: Vec<Vec<Vertex>>,
    /// Bridges of the input graph as `(u, v)` with `u < v`.
    pub bridges: Vec<(Vertex, Vertex)>,
    /// Bridges lifted to class pairs, in the same order as `bridges`.
    pub forest_edges: Vec<(usize, usize)>,
}

impl BridgeForest {
    /// Number of forest edges incident to `class`.
    pub fn class_degree(&self, class: usize) -> usize {
        self.forest_edges
            .iter()
            .filter(|&&(a, b)| a == class || b == class)
            .count()
    }
}

/// Splits `g` along its bridges (iterative low-link computation).
pub fn bridge_components(g: &Graph) -> BridgeForest {
    let n = g.n();
    const NONE: usize = usize::MAX;
    let mut disc = vec![NONE; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![NONE; n];
    let mut timer = 0;
    let mut bridges = Vec::new();

    for root in 0..n {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (u, ref mut idx)) = stack.last_mut() {
            let nbrs = g.neighbors(u);
            if *idx < nbrs.len() {
                let w = nbrs[*idx];
                *idx += 1;
                if w == parent[u] {
                    continue;
                }
                if disc[w] == NONE {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    parent[w] = u;
                    stack.push((w, 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                let p = parent[u];
                if p != NONE {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        bridges.push((p.min(u), p.max(u)));
                    }
                }
            }
        }
    }
    bridges.sort_unstable();

    let is_bridge = |u: Vertex, v: Vertex| bridges.binary_search(&(u.min(v), u.max(v))).is_ok();
    let mut class_of = vec![NONE; n];
    let mut classes = Vec::new();
    for s in 0..n {
        if class_of[s] != NONE {
            continue;
        }
        let id = classes.len();
        let mut members = vec![s];
        class_of[s] = id;
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            i += 1;
            for &w in g.neighbors(u) {
                if class_of[w] == NONE && !is_bridge(u, w) {
                    class_of[w] = id;
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    let forest_edges = bridges
        .iter()
        .map(|&(u, v)| (class_of[u], class_of[v]))
        .collect();
    BridgeForest {
        class_of,
        classes,
        bridges,
        forest_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let bf = bridge_components(&c5);
        assert_eq!(bf.classes.len(), 1);
        assert!(bf.forest_edges.is_empty());

        let two_tri =
            Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap();
        let bf = bridge_components(&two_tri);
        assert_eq!(bf.classes.len(), 2);
        assert_eq!(bf.forest_edges, vec![(0, 1)]);
        assert_eq!(bf.bridges, vec![(2, 3)]);

        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let bf = bridge_components(&p4);
        assert_eq!(bf.classes.len(), 4);
        assert_eq!(bf.forest_edges.len(), 3);
    }
}
