use coarse_ep::distpack::*;
use coarse_ep::gen;
use coarse_ep::graph::*;
use coarse_ep::oracle::{disjoint_cycles_bruteforce, OracleBudget};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

/// A cycle on `n` vertices with extra paths ("handles") between cycle
/// vertices; each handle is `(from, to, length)`.
fn handles(n: usize, hs: &[(usize, usize, usize)]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut next = n;
    for &(a, b, len) in hs {
        let mut prev = a;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, b));
    }
    Graph::new(next, edges).unwrap()
}

fn check_result(g: &Graph, d: usize, res: &DistResult) {
    match res {
        DistResult::TwoCycles(a, b) => {
            assert!(a.is_valid_in(g) && b.is_valid_in(g));
            assert!(set_distance(g, &a.vertex_set(), &b.vertex_set()) > d);
        }
        DistResult::Hitting { x1, x2, .. } => {
            assert!(x1.len() <= 12 * (d + 1));
            assert!(x2.len() <= 12);
            assert!(is_forest_after_removal(g, &ball(g, x1, 2 * d)));
            assert!(is_forest_after_removal(g, &ball(g, x2, 3 * d)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_soundness(n in 5usize..=80, p in 0.01f64..0.12, seed in any::<u64>(), d in 1usize..=3) {
        let g = gen::gnp(n, p, seed).unwrap();
        let res = dist_pack_two(&g, d).unwrap();
        check_result(&g, d, &res);
        if d == 1 {
            if let DistResult::TwoCycles(a, b) = &res {
                // distance two means disjoint and anticomplete
                prop_assert!(a.vertices().iter().all(|&u| b.vertices().iter().all(|&v| u != v && !g.has_edge(u, v))));
            }
        }
    }

    #[test]
    fn handle_instances(seed in any::<u64>()) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let d = rng.gen_range(1..=3);
        let n = rng.gen_range(8 * d + 5..=12 * (d + 1));
        let hs: Vec<_> = (0..rng.gen_range(0..=7))
            .map(|_| {
                let a = rng.gen_range(0..n);
                let b = if rng.gen_bool(0.3) { a } else { rng.gen_range(0..n) };
                (a, b, n + rng.gen_range(0..5))
            })
            .collect();
        let g = handles(n, &hs);
        let res = dist_pack_two(&g, d).unwrap();
        check_result(&g, d, &res);
    }
}

#[test]
fn selection_invariants_on_handles() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut big = 0;
    for _ in 0..600 {
        let d = rng.gen_range(1..=3);
        let n = rng.gen_range(8 * d + 5..=12 * (d + 1));
        let hs: Vec<_> = (0..rng.gen_range(1..=7))
            .map(|_| {
                let a = rng.gen_range(0..n);
                let b = if rng.gen_bool(0.3) { a } else { rng.gen_range(0..n) };
                (a, b, n + rng.gen_range(0..5))
            })
            .collect();
        let g = handles(n, &hs);
        let c = girth_cycle(&g).unwrap();
        if c.len() < 8 * d + 5 {
            continue;
        }
        let near = ball(&g, &c.vertex_set(), d);
        if !is_forest_after_removal(&g, &near) {
            continue;
        }
        let sm = support_map(&g, &c, d).unwrap();
        let sel = select_subtrees(&g, &c, d, &sm).unwrap();
        let in_f: Vec<bool> = g.vertices().map(|v| !near.contains(v)).collect();
        for (i, r) in sel.rounds.iter().enumerate() {
            assert!(r.vertices.contains(r.a) && r.vertices.contains(r.b));
            assert!(sm.is_boundary(r.a) && sm.is_boundary(r.b));
            for s in &sel.rounds[i + 1..] {
                assert!(r.vertices.is_disjoint(&s.vertices));
                let dist = bfs_distances(&g, r.vertices.iter(), Some(&in_f), None);
                assert!(s.vertices.iter().all(|v| dist[v] > d));
            }
        }
        if sel.rounds.len() >= 4 {
            big += 1;
            let (a, b) = two_cycles_from_selection(&g, &c, d, &sm, &sel).unwrap();
            assert!(set_distance(&g, &a.vertex_set(), &b.vertex_set()) > d);
        }
    }
    assert!(big > 10);
}

#[test]
fn four_plain_handles() {
    // cycle of length 40, d = 1: four handles with distinct, spread-out ends
    let n = 40;
    let hs = [(0, 20, 40), (5, 25, 40), (10, 30, 40), (15, 35, 40)];
    let g = handles(n, &hs);
    let c = girth_cycle(&g).unwrap();
    assert_eq!(c.len(), 40);
    let sm = support_map(&g, &c, 1).unwrap();
    let sel = select_subtrees(&g, &c, 1, &sm).unwrap();
    assert_eq!(sel.rounds.len(), 4);
    // H = C plus four C-paths; brute force agrees that two disjoint cycles exist
    let mut edges: Vec<(usize, usize)> = c.edges().collect();
    for r in &sel.rounds {
        let p = sel.forest.path(r.a, r.b).unwrap();
        edges.extend(p.windows(2).map(|w| (w[0], w[1])));
        for x in [r.a, r.b] {
            let rp = sm.boundary[&x].path.vertices();
            edges.extend(rp.windows(2).map(|w| (w[0], w[1])));
        }
    }
    let h = g.edge_subgraph(edges).unwrap();
    let keep: Vec<bool> = h.vertices().map(|v| h.degree(v) > 0).collect();
    let (hs_graph, _) = h.induced(&keep);
    let all: VertexSet = hs_graph.vertices().collect();
    let (m, _) = suppress_degree_two(&hs_graph, &all).unwrap();
    let small = Graph::new(m.n(), m.edges().iter().copied().filter(|&(u, v)| u != v)).unwrap();
    assert!(disjoint_cycles_bruteforce(&small, 2, OracleBudget::default()).unwrap());
    let (a, b) = two_cycles_from_selection(&g, &c, 1, &sm, &sel).unwrap();
    assert!(set_distance(&g, &a.vertex_set(), &b.vertex_set()) > 1);
    assert!(dist_pack_two(&g, 1).unwrap().is_packing());
}

#[test]
fn two_lollipops_give_their_own_cycles() {
    let n = 30;
    let hs = [(0, 0, 30), (15, 15, 30), (7, 22, 30), (3, 11, 31)];
    let g = handles(n, &hs);
    let c = girth_cycle(&g).unwrap();
    let sm = support_map(&g, &c, 1).unwrap();
    let sel = select_subtrees(&g, &c, 1, &sm).unwrap();
    assert!(sel.rounds.len() >= 4);
    let (a, b) = two_cycles_from_selection(&g, &c, 1, &sm, &sel).unwrap();
    // both lollipop cycles avoid the main cycle's other vertices
    assert!(a.len() >= 29 && b.len() >= 29);
    assert!(!a.vertex_set().is_subset(&c.vertex_set()));
    assert!(set_distance(&g, &a.vertex_set(), &b.vertex_set()) > 1);
}

#[test]
fn selection_small_cases() {
    let g = gen::cycle(13).unwrap();
    let c = girth_cycle(&g).unwrap();
    let sm = support_map(&g, &c, 1).unwrap();
    assert!(select_subtrees(&g, &c, 1, &sm).unwrap().rounds.is_empty());
    // one pendant path: one boundary vertex, no round
    let g = handles(13, &[]);
    let mut e: Vec<_> = g.edges().collect();
    e.extend([(0, 13), (13, 14), (14, 15)]);
    let g = Graph::new(16, e).unwrap();
    let sm = support_map(&g, &c, 1).unwrap();
    assert!(select_subtrees(&g, &c, 1, &sm).unwrap().rounds.is_empty());
    // one handle: one round whose subtree is rooted at the LCA of its ends
    let g = handles(13, &[(0, 6, 13)]);
    let c = girth_cycle(&g).unwrap();
    let sm = support_map(&g, &c, 1).unwrap();
    let sel = select_subtrees(&g, &c, 1, &sm).unwrap();
    assert_eq!(sel.rounds.len(), 1);
    let r = &sel.rounds[0];
    // handle interior is 13..=24; F drops 13 and 24, leaving the path 14..=23 rooted at 14
    assert_eq!((r.a, r.b), (14, 23));
    assert_eq!(r.w, 14);
    assert_eq!(sel.forest.level[23], 9);
    assert_eq!(r.vertices.len(), 10);
}

#[test]
fn line_graphs_of_complete_bipartite() {
    for n in 2..=6 {
        let g = gen::line_graph(&gen::complete_bipartite(n, n));
        assert!(!dist_pack_two(&g, 2).unwrap().is_packing(), "n={n}");
    }
}

#[test]
fn support_map_on_subdivided_cubic() {
    for seed in 0..20 {
        for d in 1..=2 {
            let g = gen::subdivide(&gen::random_cubic(12, seed).unwrap(), 4 * d);
            let c = girth_cycle(&g).unwrap();
            assert!(c.len() >= 8 * d + 5);
            let sm = support_map(&g, &c, d).unwrap();
            for (&v, bv) in &sm.boundary {
                assert_eq!(bv.path.len(), d + 1);
                assert!(bv.path.is_valid_in(&g));
                assert_eq!(bv.path.first(), Some(v));
                assert_eq!(bv.path.last(), Some(bv.anchor));
            }
        }
    }
}
