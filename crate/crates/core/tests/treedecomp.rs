use coarse_ep::certfile::CertificateFile;
use coarse_ep::gen;
use coarse_ep::graph::*;
use coarse_ep::oracle::{is_k1t_free, verify_certificate, OracleBudget};
use coarse_ep::packing::{f_bound, induced_pack_or_hit, Certificate};
use coarse_ep::treedecomp::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

fn unit_interval(n: usize, span: f64, seed: u64) -> Graph {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let xs: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..span)).collect();
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let edges: Vec<_> = edges.filter(|&(i, j)| (xs[i] - xs[j]).abs() <= 1.0).collect();
    Graph::new(n, edges).unwrap()
}

fn brute_alpha(g: &Graph, bag: &VertexSet) -> usize {
    let vs = bag.to_vec();
    (0u32..1 << vs.len())
        .filter(|&m| {
            (0..vs.len()).all(|i| m >> i & 1 == 0 || (i + 1..vs.len()).all(|j| m >> j & 1 == 0 || !g.has_edge(vs[i], vs[j])))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn forest_td_is_valid(n in 0usize..40, seed in any::<u64>()) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<_> = (1..n).filter_map(|v| { let p = rng.gen_range(0..v); rng.gen_bool(0.8).then_some((p, v)) }).collect();
        let f = Graph::new(n, edges).unwrap();
        let td = forest_td(&f).unwrap();
        let rep = validate_td(&f, &td, 64).unwrap();
        prop_assert!(rep.is_valid(), "{:?}", rep.failures);
        prop_assert!(rep.max_independence <= 2);
        prop_assert!(td.bags.iter().all(|b| b.len() <= 2));
    }

    #[test]
    fn bag_independence_exact(n in 1usize..16, p in 0.0f64..0.8, seed in any::<u64>()) {
        let g = gen::gnp(n, p, seed).unwrap();
        let all: VertexSet = g.vertices().collect();
        prop_assert_eq!(bag_independence(&g, &all), brute_alpha(&g, &all));
    }
}

#[test]
fn claw_free_decompositions_within_bound() {
    let mut cases = Vec::new();
    for seed in 0..40u64 {
        let n = 10 + seed as usize % 31;
        cases.push(unit_interval(n, n as f64 / 3.0, seed));
        let base = gen::gnp(12, 0.35, seed).unwrap();
        if base.m() <= 40 {
            cases.push(gen::line_graph(&base));
        }
    }
    let mut decomps = 0;
    for g in &cases {
        assert!(is_k1t_free(g, 3, OracleBudget::default()).unwrap());
        for k in 1..=3 {
            match k1t_td(g, k, 3).unwrap() {
                K1tOutcome::Packing(cert) => assert!(cert.is_packing()),
                K1tOutcome::Decomposition { td, bound, .. } => {
                    decomps += 1;
                    let rep = validate_td(g, &td, 128).unwrap();
                    assert!(rep.is_valid(), "{:?}", rep.failures);
                    assert!(rep.max_independence <= bound);
                    assert_eq!(bound, f_bound(k).unwrap().floor() as usize * 2 + 2);
                    for bag in td.bags.iter().filter(|b| b.len() <= 18) {
                        assert_eq!(bag_independence(g, bag), brute_alpha(g, bag));
                    }
                    let file = CertificateFile::from_tree_decomposition(&td, k, 3, rep.max_independence);
                    assert!(verify_certificate(g, &file).is_accepted());
                }
            }
        }
    }
    assert!(decomps > 20);
}

#[test]
fn k14_free_inputs() {
    for seed in 0..30 {
        let g = gen::gnp(20, 0.3, seed).unwrap();
        if !is_k1t_free(&g, 4, OracleBudget::default()).unwrap() {
            continue;
        }
        if let K1tOutcome::Decomposition { td, bound, .. } = k1t_td(&g, 2, 4).unwrap() {
            let rep = validate_td(&g, &td, 128).unwrap();
            assert!(rep.is_valid());
            assert!(rep.max_independence <= bound);
        }
    }
}

#[test]
fn bag_cap_is_enforced() {
    let g = gen::complete(10);
    let td = TreeDecomposition {
        bags: vec![g.vertices().collect()],
        edges: vec![],
    };
    assert!(matches!(validate_td(&g, &td, 5), Err(coarse_ep::Error::CapExceeded(_))));
    assert_eq!(validate_td(&g, &td, 10).unwrap().max_independence, 1);
}

#[test]
fn broken_subtree_is_witnessed() {
    let g = gen::path(3);
    let td = TreeDecomposition {
        bags: vec![[0, 1].into_iter().collect(), [2].into_iter().collect(), [1, 2].into_iter().collect()],
        edges: vec![(0, 1), (1, 2)],
    };
    let rep = validate_td(&g, &td, 10).unwrap();
    assert!(rep.failures.contains(&("subtree", TdWitness::Vertex(1))));
}

#[test]
fn hitting_sets_become_feedback_sets() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for seed in 0..60 {
        // random graphs of maximum degree at most 4
        let n = 30;
        let mut edges = Vec::new();
        let mut deg = vec![0; n];
        for _ in 0..50 {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && deg[u] < 4 && deg[v] < 4 && !edges.contains(&(u.min(v), u.max(v))) {
                deg[u] += 1;
                deg[v] += 1;
                edges.push((u.min(v), u.max(v)));
            }
        }
        let g = Graph::new(n, edges).unwrap();
        for k in 1..=3 {
            if let Certificate::HittingSet { x, .. } = induced_pack_or_hit(&g, k).unwrap() {
                for r in 1..=2 {
                    let fvs = hitting_to_fvs(&g, &x, r).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
                    assert!(is_forest_after_removal(&g, &fvs));
                    if g.max_degree() == 3 && r == 1 {
                        assert!(fvs.len() <= 4 * x.len());
                    }
                }
            }
        }
    }
    let x: VertexSet = [0].into_iter().collect();
    assert!(hitting_to_fvs(&gen::complete(5), &x, 0).is_err());
    assert!(hitting_to_fvs(&gen::path(4), &VertexSet::new(), 2).unwrap().is_empty());
}
