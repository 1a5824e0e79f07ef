use coarse_ep::certfile::{BoundVariant, CertificateFile};
use coarse_ep::gen;
use coarse_ep::graph::*;
use coarse_ep::oracle::verify_certificate;
use coarse_ep::packing::Certificate;
use coarse_ep::planar::*;
use coarse_ep::Error;

fn outerplanar_fan(n: usize, seed: u64) -> Graph {
    // a cycle with non-crossing chords from vertex 0, every third one dropped
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((2..n - 1).filter(|i| (*i as u64 + seed) % 3 != 0).map(|i| (0, i)));
    Graph::new(n, edges).unwrap()
}

fn families() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for seed in 0..30u64 {
        let a = 3 + seed as usize % 9;
        out.push((format!("grid-sub {seed}"), gen::grid_subgraph(a, 12, 0.8, seed).unwrap()));
        out.push((format!("stacked {seed}"), gen::stacked_triangulation(10 + 4 * seed as usize, seed).unwrap()));
        out.push((format!("fan {seed}"), outerplanar_fan(6 + seed as usize, seed)));
    }
    out
}

#[test]
fn certificates_verify_with_6k() {
    for (name, g) in families() {
        for k in 1..=4 {
            let cert = planar_pack(&g, k).unwrap_or_else(|e| panic!("{name} k={k}: {e}"));
            if let Certificate::HittingSet { x, .. } = &cert {
                assert!(x.len() <= 6 * k, "{name}");
            }
            let file = CertificateFile::from_certificate(&cert, k, BoundVariant::Planar).unwrap();
            assert!(verify_certificate(&g, &file).is_accepted(), "{name} k={k}");
        }
    }
}

#[test]
fn every_step_peels_a_cyclic_leaf() {
    for (name, g) in families() {
        let mut cur = g;
        while let Some(step) = planar_step(&cur).unwrap() {
            assert!(step.l.len() <= 1, "{name}");
            assert!(step.a.len() <= 5, "{name}");
            assert!(step.c.is_valid_in(&cur));
            assert!(step.c.vertices().iter().all(|&v| step.component.contains(v)));
            let mut s = step.a.union(&step.l);
            if s.is_empty() {
                s.insert(step.c.vertices()[0]);
            }
            cur = cur.without(&ball(&cur, &s, 1)).0;
        }
    }
}

#[test]
fn non_planar_evidence_on_large_girth() {
    // girth 6 cubic graph: suppression changes nothing
    assert!(matches!(planar_pack(&gen::heawood(), 2), Err(Error::NotPlanarEvidence(_))));
    // a subdivided Heawood graph suppresses back to girth 6
    let sub = gen::subdivide(&gen::heawood(), 2);
    let all: VertexSet = sub.vertices().collect();
    assert!(matches!(short_cycle_in_2ecc(&sub, &all), Err(Error::NotPlanarEvidence(_))));
}

#[test]
fn grid_examples() {
    let g = gen::grid(10, 10);
    let cert = planar_pack(&g, 2).unwrap();
    let file = CertificateFile::from_certificate(&cert, 2, BoundVariant::Planar).unwrap();
    assert!(verify_certificate(&g, &file).is_accepted());
    assert!(cert.is_packing());
}
