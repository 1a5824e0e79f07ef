use coarse_ep::gen;
use coarse_ep::packing::{f_bound, induced_pack_or_hit, induced_pack_or_hit_opts, Certificate, PackOptions};

#[test]
fn random_soundness_sweep() {
    let mut stats = [0usize; 2];
    for seed in 0..200u64 {
        let n = 10 + (seed as usize * 11) % 51;
        let p = [0.05, 0.1, 0.2][seed as usize % 3];
        let g = gen::gnp(n, p, seed).unwrap();
        for k in 1..=4 {
            let cert = induced_pack_or_hit_opts(&g, k, PackOptions { paranoid: true })
                .unwrap_or_else(|e| panic!("seed {seed} n {n} k {k}: {e}"));
            match cert {
                Certificate::InducedPacking { cycles } => {
                    assert_eq!(cycles.len(), k);
                    stats[0] += 1;
                }
                Certificate::HittingSet { x, .. } => {
                    assert!(x.len() as f64 <= f_bound(k).unwrap());
                    stats[1] += 1;
                }
            }
        }
    }
    eprintln!("packings {} hitting sets {}", stats[0], stats[1]);
}

#[test]
fn high_girth_sweep() {
    for seed in 0..60u64 {
        let n = 30 + (seed as usize * 7) % 120;
        let g = gen::sparse_high_girth(n, n + n / 2, 5, seed).unwrap();
        for k in 1..=4 {
            induced_pack_or_hit(&g, k).unwrap_or_else(|e| panic!("seed {seed} n {n} k {k}: {e}"));
        }
    }
}
