use coarse_ep::gen;
use coarse_ep::graph::*;
use proptest::prelude::*;

fn arb_graph(max_n: usize, max_p: f64) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..max_p, any::<u64>()).prop_map(|(n, p, seed)| gen::gnp(n, p, seed).unwrap())
}

/// Every cycle length by exhaustive DFS over simple paths, minimum only.
fn brute_girth(g: &Graph) -> Option<usize> {
    fn dfs(g: &Graph, s: usize, u: usize, len: usize, on: &mut Vec<bool>, best: &mut Option<usize>) {
        for &w in g.neighbors(u) {
            if w == s && len >= 2 {
                let l = len + 1;
                *best = Some(best.map_or(l, |b| b.min(l)));
            } else if w > s && !on[w] {
                on[w] = true;
                dfs(g, s, w, len + 1, on, best);
                on[w] = false;
            }
        }
    }
    let mut best = None;
    for s in g.vertices() {
        let mut on = vec![false; g.n()];
        on[s] = true;
        dfs(g, s, s, 0, &mut on, &mut best);
    }
    best
}

fn component_count(g: &Graph, skip: Option<(usize, usize)>) -> usize {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut count = g.n();
    for e in g.edges() {
        if Some(e) == skip {
            continue;
        }
        let (a, b) = (find(&mut parent, e.0), find(&mut parent, e.1));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ball_is_iterated_unit_ball(g in arb_graph(50, 0.15), r in 0usize..5, src in prop::collection::vec(0usize..50, 0..4)) {
        let s: VertexSet = src.into_iter().filter(|&v| v < g.n()).collect();
        let mut iter = s.clone();
        for _ in 0..r {
            iter = ball(&g, &iter, 1);
        }
        prop_assert_eq!(ball(&g, &s, r), iter);
    }

    #[test]
    fn girth_matches_enumeration(g in arb_graph(10, 0.5)) {
        let c = girth_cycle(&g);
        prop_assert_eq!(c.as_ref().map(Cycle::len), brute_girth(&g));
        if let Some(c) = c {
            prop_assert!(c.is_valid_in(&g));
        }
    }

    #[test]
    fn bridges_match_definition(g in arb_graph(9, 0.4)) {
        let bf = bridge_components(&g);
        let base = component_count(&g, None);
        for e in g.edges() {
            let is_bridge = component_count(&g, Some(e)) > base;
            prop_assert_eq!(is_bridge, bf.bridges.contains(&e), "edge {:?}", e);
        }
        // class-level multigraph acyclic: classes + bridges form a forest
        let classes = bf.classes.len();
        let fg = Graph::new(classes, bf.forest_edges.iter().copied()).unwrap();
        prop_assert_eq!(fg.m(), bf.forest_edges.len());
        prop_assert!(is_forest_within(&fg, None));
    }

    #[test]
    fn forest_mis_is_maximum(n in 1usize..=15, seed in any::<u64>(), keep in 0.3f64..1.0) {
        // random forest: random tree edges, each kept with probability `keep`
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<_> = (1..n)
            .filter_map(|v| {
                let p = rng.gen_range(0..v);
                rng.gen_bool(keep).then_some((p, v))
            })
            .collect();
        let f = Graph::new(n, edges).unwrap();
        let mis = forest_max_independent_set(&f).unwrap();
        prop_assert!(mis.iter().all(|u| mis.iter().all(|v| !f.has_edge(u, v))));
        let best = (0u32..1 << n)
            .filter(|&mask| f.edges().all(|(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0))
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap();
        prop_assert_eq!(mis.len(), best);
        prop_assert!(mis.len() >= n.div_ceil(2));
    }

    #[test]
    fn suppression_lifts_valid_cycles(g in arb_graph(25, 0.25)) {
        let core = two_core(&g);
        prop_assume!(!core.is_empty());
        let (m, map) = suppress_degree_two(&g, &core).unwrap();
        // interiors of edge paths are pairwise disjoint and avoid branch vertices
        let mut seen = std::collections::HashSet::new();
        for &o in &map.vertex_origin {
            prop_assert!(seen.insert(o));
        }
        for path in &map.edge_paths {
            prop_assert!(path.len() >= 2);
            for &v in &path[1..path.len() - 1] {
                prop_assert!(seen.insert(v), "vertex {} reused", v);
            }
        }
        for v in 0..m.n() {
            if let Some(c) = m.shortest_cycle_through(v) {
                let lifted = lift_cycle(&map, &c).unwrap();
                prop_assert!(lifted.is_valid_in(&g));
            }
        }
    }
}

#[test]
fn cubic_girth_is_logarithmic() {
    for n in (8..=200).step_by(6) {
        for seed in 0..3 {
            let g = gen::random_cubic(n, seed).unwrap();
            let c = girth_cycle(&g).unwrap();
            assert!((c.len() as f64) < 2.0 * (n as f64).log2(), "n={n} girth={}", c.len());
        }
    }
}

#[test]
fn worked_examples() {
    let c5 = gen::cycle(5).unwrap();
    assert_eq!(ball(&c5, &VertexSet::singleton(0), 1).to_vec(), vec![0, 1, 4]);
    assert!(ball(&c5, &VertexSet::new(), 3).is_empty());
    assert_eq!(ball(&gen::petersen(), &VertexSet::singleton(3), 2).len(), 10);
    assert_eq!(girth_cycle(&gen::petersen()).unwrap().len(), 5);
    assert!(girth_cycle(&gen::path(10)).is_none());
    let two = Graph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
    assert_eq!(shortest_cycle_through(&two, 0).unwrap().len(), 3);
    let pend = Graph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
    assert!(shortest_cycle_through(&pend, 3).is_none());
    assert!(is_forest_after_removal(&c5, &VertexSet::singleton(0)));
    assert!(!is_forest_after_removal(&gen::complete(4), &VertexSet::new()));
    assert!(!is_forest_after_removal(&gen::complete(4), &VertexSet::singleton(0)));
    let tri2 = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap();
    let bf = bridge_components(&tri2);
    assert_eq!(bf.classes.len(), 2);
    assert_eq!(bf.forest_edges.len(), 1);
    let p4 = bridge_components(&gen::path(4));
    assert_eq!((p4.classes.len(), p4.forest_edges.len()), (4, 3));
    assert_eq!(forest_max_independent_set(&gen::star(4)).unwrap().to_vec(), vec![1, 2, 3, 4]);
    assert_eq!(forest_max_independent_set(&gen::path(3)).unwrap().to_vec(), vec![0, 2]);
}
