use std::collections::VecDeque;

use super::{admissible_mask, compute_yz, free_mask, Ear, EarDecomp, EarKind, YZState};
use crate::graph::{girth_cycle_within, shortest_cycle_through_within, Cycle, Graph, Path, Vertex};

/// A shortest ℋ-path of `G − Z`: both ends admissible, interior outside
/// ℋ and `Z`, no ℋ-edge. Ties go to the smallest first end, then the
/// smallest second end. Returns `None` when ℋ is empty or no path exists.
pub fn find_shortest_h_path(g: &Graph, d: &EarDecomp, yz: &YZState) -> Option<Path> {
    let admissible = admissible_mask(d, yz);
    let free = free_mask(d, yz);
    let n = g.n();
    let mut best: Option<(usize, Vertex, Vertex, Vec<Vertex>)> = None;
    let mut parent = vec![usize::MAX; n];
    let mut dist = vec![usize::MAX; n];
    let mut touched: Vec<Vertex> = Vec::new();
    let mut queue = VecDeque::new();

    for a in (0..n).filter(|&a| admissible[a]) {
        for &t in &touched {
            parent[t] = usize::MAX;
            dist[t] = usize::MAX;
        }
        touched.clear();
        queue.clear();
        dist[a] = 0;
        parent[a] = a;
        touched.push(a);
        queue.push_back(a);
        while let Some(u) = queue.pop_front() {
            let len = dist[u] + 1;
            if best.as_ref().is_some_and(|b| len > b.0) {
                break;
            }
            for &w in g.neighbors(u) {
                if admissible[w] && w != a {
                    if u == a && d.has_h_edge(a, w) {
                        continue;
                    }
                    let better = match &best {
                        None => true,
                        Some(b) => (len, a, w) < (b.0, b.1, b.2),
                    };
                    if better {
                        let mut path = vec![w];
                        let mut x = u;
                        while x != a {
                            path.push(x);
                            x = parent[x];
                        }
                        path.push(a);
                        path.reverse();
                        best = Some((len, a, w, path));
                    }
                } else if free[w] && dist[w] == usize::MAX {
                    dist[w] = len;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                }
            }
        }
    }
    best.map(|b| Path::new(b.3))
}

/// A shortest cycle of `G − Z` meeting ℋ in exactly one (admissible)
/// vertex `c`, together with `c`. Ties go to the smallest `c`.
pub fn find_type1_ear(g: &Graph, d: &EarDecomp, yz: &YZState) -> Option<(Cycle, Vertex)> {
    let admissible = admissible_mask(d, yz);
    let mut alive = free_mask(d, yz);
    let mut best: Option<(Cycle, Vertex)> = None;
    for c in (0..g.n()).filter(|&c| admissible[c]) {
        alive[c] = true;
        if let Some(cyc) = shortest_cycle_through_within(g, c, Some(&alive)) {
            if best.as_ref().map_or(true, |(b, _)| cyc.len() < b.len()) {
                best = Some((cyc, c));
            }
        }
        alive[c] = false;
    }
    best
}

/// A shortest cycle of `G − Z − V(ℋ)`.
pub fn find_type2_ear(g: &Graph, d: &EarDecomp, yz: &YZState) -> Option<Cycle> {
    girth_cycle_within(g, Some(&free_mask(d, yz)))
}

/// Grows a maximal coarse ear-decomposition: an ℋ-path extends the current
/// phase; otherwise a type-1 or else a type-2 cycle opens a new phase.
pub fn build_maximal(g: &Graph) -> EarDecomp {
    let mut d = EarDecomp::empty(g.n());
    loop {
        let yz = compute_yz(g, &d);
        let phase = d.phases();
        if !d.is_empty() {
            if let Some(p) = find_shortest_h_path(g, &d, &yz) {
                let index = d.ears().last().map_or(0, |e| e.index) + 1;
                let (a, b) = (p.first().unwrap(), p.last().unwrap());
                d.push(Ear {
                    kind: EarKind::HPath { a, b },
                    vertices: p.vertices().to_vec(),
                    phase,
                    index,
                });
                continue;
            }
        }
        let next = if let Some((c, attachment)) = find_type1_ear(g, &d, &yz) {
            Some((c, EarKind::Type1 { attachment }))
        } else {
            find_type2_ear(g, &d, &yz).map(|c| (c, EarKind::Type2))
        };
        match next {
            Some((c, kind)) => d.push(Ear {
                kind,
                vertices: c.vertices().to_vec(),
                phase: phase + 1,
                index: 1,
            }),
            None => return d,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn forest_gives_empty() {
        let g = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(build_maximal(&g).is_empty());
    }

    #[test]
    fn single_cycle_is_one_type2_ear() {
        let d = build_maximal(&cycle(7));
        assert_eq!(d.ears().len(), 1);
        assert_eq!(d.ears()[0].kind, EarKind::Type2);
        assert_eq!(d.ears()[0].len(), 7);
        let yz = compute_yz(&cycle(7), &d);
        assert!(yz.y_set().is_empty() && yz.z_set().is_empty());
    }

    #[test]
    fn long_chord_is_found_as_h_path() {
        // C6 on 0..6 plus a path 0-6-7-8-3
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(0, 6), (6, 7), (7, 8), (8, 3)]);
        let g = Graph::new(9, edges).unwrap();
        let mut d = EarDecomp::empty(9);
        d.push(Ear {
            kind: EarKind::Type2,
            vertices: (0..6).collect(),
            phase: 1,
            index: 1,
        });
        let yz = compute_yz(&g, &d);
        let p = find_shortest_h_path(&g, &d, &yz).unwrap();
        assert_eq!(p.vertices(), &[0, 6, 7, 8, 3]);
    }

    #[test]
    fn type1_prefers_shorter_cycle() {
        // C5 on 0..5; at vertex 0 a 5-cycle 0,5,6,7,8 and a 7-cycle 0,9..14
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend([(0, 5), (5, 6), (6, 7), (7, 8), (8, 0)]);
        edges.extend([(0, 9), (9, 10), (10, 11), (11, 12), (12, 13), (13, 14), (14, 0)]);
        let g = Graph::new(15, edges).unwrap();
        let mut d = EarDecomp::empty(15);
        d.push(Ear {
            kind: EarKind::Type2,
            vertices: (0..5).collect(),
            phase: 1,
            index: 1,
        });
        let yz = compute_yz(&g, &d);
        assert!(find_shortest_h_path(&g, &d, &yz).is_none());
        let (c, at) = find_type1_ear(&g, &d, &yz).unwrap();
        assert_eq!(at, 0);
        assert_eq!(c.vertex_set(), [0, 5, 6, 7, 8].into_iter().collect::<VertexSet>());
    }

    #[test]
    fn petersen_first_ear_is_pentagon() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        let g = Graph::new(10, edges).unwrap();
        let d = build_maximal(&g);
        assert_eq!(d.ears()[0].len(), 5);
        assert!(d.phases() >= 1);
    }
}
