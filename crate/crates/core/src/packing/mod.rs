//! Induced cycle packings versus radius-1 ball hitting sets.
//!
//! [`induced_pack_or_hit`] returns either `k` vertex-disjoint cycles with
//! no edge between any two of them, or a set `X` of at most
//! `9·s_k + 164(k−1)` vertices whose closed neighbourhood meets every cycle.

mod cycles;
mod forests;

use crate::eardecomp::{build_maximal, compute_yz, validate};
use crate::error::{invalid, violation, Result};
use crate::graph::{
    ball, forest_max_independent_set, girth_cycle, is_forest_after_removal, is_forest_within,
    suppress_degree_two, Cycle, Graph, VertexSet,
};

pub use cycles::{disjoint_cycles_min_degree3, two_disjoint_cycles_subcubic};
pub use forests::{
    build_chord_forest, build_overlay_forest, derive_h_prime, ChordForest, HPrime, OverlayForest,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Pairwise vertex-disjoint cycles with no edge between distinct cycles.
    InducedPacking { cycles: Vec<Cycle> },
    /// `G − B(X, radius)` is a forest.
    HittingSet { x: VertexSet, radius: usize },
}

impl Certificate {
    pub fn is_packing(&self) -> bool {
        matches!(self, Certificate::InducedPacking { .. })
    }
}

/// `s_1 = 2`, `s_k = 4k(log₂ k + log₂ log₂ k + 4)`.
pub fn s_k(k: usize) -> Result<f64> {
    match k {
        0 => Err(invalid!("k must be positive")),
        1 => Ok(2.0),
        _ => {
            let kf = k as f64;
            Ok(4.0 * kf * (kf.log2() + kf.log2().log2() + 4.0))
        }
    }
}

/// `⌈s_k⌉`, the vertex count from which a cubic graph has `k` disjoint
/// cycles.
pub fn s_k_ceil(k: usize) -> Result<usize> {
    // guard against 74.99999... style rounding noise
    Ok((s_k(k)? - 1e-9).ceil() as usize)
}

/// `f(k) = 9·s_k + 164(k−1)`.
pub fn f_bound(k: usize) -> Result<f64> {
    Ok(9.0 * s_k(k)? + 164.0 * (k as f64 - 1.0))
}

/// `63h + 164k − 173`, clamped at zero.
pub fn oracle_bound(h: usize, k: usize) -> Result<f64> {
    if k == 0 {
        return Err(invalid!("k must be positive"));
    }
    Ok((63.0 * h as f64 + 164.0 * k as f64 - 173.0).max(0.0))
}

/// Answer of a feedback-vertex-set oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FvsAnswer {
    DisjointCycles(Vec<Cycle>),
    Fvs(VertexSet),
}

/// An Erdős–Pósa oracle for a hereditary graph class: on every graph of the
/// class it returns `k` vertex-disjoint cycles or a feedback vertex set of
/// size at most `bound(k)`.
pub trait FvsOracle {
    fn solve(&self, g: &Graph, k: usize) -> Result<FvsAnswer>;
    fn bound(&self, k: usize) -> usize;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PackOptions {
    /// Validate every ear-decomposition in full.
    pub paranoid: bool,
}

pub fn induced_pack_or_hit(g: &Graph, k: usize) -> Result<Certificate> {
    induced_pack_or_hit_opts(g, k, PackOptions::default())
}

pub fn induced_pack_or_hit_opts(g: &Graph, k: usize, opts: PackOptions) -> Result<Certificate> {
    if k == 0 {
        return Err(invalid!("k must be positive"));
    }
    let cert = pack_rec(g, k, None, opts)?;
    check(g, k, &cert, f_bound(k)?)?;
    Ok(cert)
}

/// The pipeline with the cubic disjoint-cycle step replaced by `oracle`;
/// hitting sets then obey `|X| ≤ 63·h + 164k − 173` with `h = oracle.bound(k)`.
pub fn induced_pack_or_hit_with_oracle(
    g: &Graph,
    k: usize,
    oracle: &dyn FvsOracle,
    opts: PackOptions,
) -> Result<Certificate> {
    if k == 0 {
        return Err(invalid!("k must be positive"));
    }
    let cert = pack_rec(g, k, Some(oracle), opts)?;
    check(g, k, &cert, oracle_bound(oracle.bound(k), k)?)?;
    Ok(cert)
}

fn pack_rec(g: &Graph, k: usize, oracle: Option<&dyn FvsOracle>, opts: PackOptions) -> Result<Certificate> {
    let Some(c) = girth_cycle(g) else {
        return Ok(Certificate::HittingSet {
            x: VertexSet::new(),
            radius: 1,
        });
    };
    if k == 1 {
        return Ok(Certificate::InducedPacking { cycles: vec![c] });
    }
    if c.len() <= 4 {
        let near = ball(g, &c.vertex_set(), 1);
        let (rest, origin) = g.without(&near);
        return Ok(match pack_rec(&rest, k - 1, oracle, opts)? {
            Certificate::InducedPacking { cycles } => {
                let mut all = vec![c];
                all.extend(cycles.iter().map(|d| d.mapped(&origin)));
                Certificate::InducedPacking { cycles: all }
            }
            Certificate::HittingSet { x, radius } => {
                let mut x = x.mapped(&origin);
                x.extend(c.vertices().iter().copied());
                Certificate::HittingSet { x, radius }
            }
        });
    }
    girth_five(g, k, oracle, opts)
}

fn pick_independent(forest: &Graph, k: usize) -> Result<Vec<usize>> {
    let mis = forest_max_independent_set(forest)?;
    if mis.len() < k {
        return Err(violation!(
            "forest on {} nodes has independence number {} < {k}",
            forest.n(),
            mis.len()
        ));
    }
    Ok(mis.iter().take(k).collect())
}

fn girth_five(g: &Graph, k: usize, oracle: Option<&dyn FvsOracle>, opts: PackOptions) -> Result<Certificate> {
    let d = build_maximal(g);
    if opts.paranoid {
        let report = validate(g, &d);
        let first = report.failures().next().cloned();
        if let Some(fail) = first {
            return Err(violation!("ear-decomposition check {} failed: {}", fail.name, fail.detail));
        }
    }
    let overlay = build_overlay_forest(&d)?;
    if overlay.ears.len() >= 2 * k - 1 {
        let cycles = pick_independent(&overlay.forest, k)?
            .into_iter()
            .map(|i| d.ears()[overlay.ears[i]].cycle().expect("opening ears are cycles"))
            .collect();
        return Ok(Certificate::InducedPacking { cycles });
    }
    let chords = build_chord_forest(&d)?;
    if chords.ears.len() >= 2 * k - 1 {
        let cycles = pick_independent(&chords.forest, k)?
            .into_iter()
            .map(|i| chords.cycles[i].clone())
            .collect();
        return Ok(Certificate::InducedPacking { cycles });
    }
    let hp = derive_h_prime(&d, &chords)?;
    let branch = hp.branch_vertices().len();
    match oracle {
        None => {
            if branch >= s_k_ceil(k)? {
                let (m, map) = suppress_degree_two(&hp.graph, &hp.vertices)?;
                let cycles = disjoint_cycles_min_degree3(&m, &map, k)?;
                return Ok(Certificate::InducedPacking { cycles });
            }
        }
        Some(o) => {
            let (sub, origin) = hp.graph.induced(&hp.vertices.to_mask(g.n()));
            match o.solve(&sub, k)? {
                FvsAnswer::DisjointCycles(cs) => {
                    check_disjoint(&sub, &cs, k)
                        .map_err(|e| invalid!("oracle returned bad cycles: {e}"))?;
                    let cycles = cs.iter().map(|c| c.mapped(&origin)).collect();
                    return Ok(Certificate::InducedPacking { cycles });
                }
                FvsAnswer::Fvs(x) => {
                    let h = o.bound(k);
                    if x.len() > h || x.iter().any(|v| v >= sub.n()) || !is_forest_after_removal(&sub, &x) {
                        return Err(invalid!(
                            "oracle returned a set of size {} that is not a feedback vertex set of size <= {h}",
                            x.len()
                        ));
                    }
                    if branch != 0 && branch + 1 >= 7 * h {
                        return Err(violation!(
                            "ℋ′ has {branch} branch vertices but a feedback vertex set of size {h}"
                        ));
                    }
                }
            }
        }
    }
    let yz = compute_yz(g, &d);
    let mut x = yz.y_set();
    x.extend(d.phase_cycles().map(|e| *e.vertices.iter().min().expect("nonempty ear")));
    Ok(Certificate::HittingSet { x, radius: 1 })
}

fn check_disjoint(g: &Graph, cycles: &[Cycle], k: usize) -> Result<()> {
    if cycles.len() != k {
        return Err(violation!("{} cycles instead of {k}", cycles.len()));
    }
    let mut seen = vec![false; g.n()];
    for c in cycles {
        if !c.is_valid_in(g) {
            return Err(violation!("{:?} is not a cycle", c.vertices()));
        }
        for &v in c.vertices() {
            if std::mem::replace(&mut seen[v], true) {
                return Err(violation!("cycles share vertex {v}"));
            }
        }
    }
    Ok(())
}

/// Self-check of a result before it leaves the module.
fn check(g: &Graph, k: usize, cert: &Certificate, bound: f64) -> Result<()> {
    match cert {
        Certificate::InducedPacking { cycles } => {
            check_disjoint(g, cycles, k)?;
            let mut owner = vec![usize::MAX; g.n()];
            for (i, c) in cycles.iter().enumerate() {
                for &v in c.vertices() {
                    owner[v] = i;
                }
            }
            if let Some((u, v)) = g
                .edges()
                .find(|&(u, v)| owner[u] != usize::MAX && owner[v] != usize::MAX && owner[u] != owner[v])
            {
                return Err(violation!("edge {u}-{v} joins two packed cycles"));
            }
        }
        Certificate::HittingSet { x, radius } => {
            if x.len() as f64 > bound {
                return Err(violation!("hitting set of size {} exceeds bound {bound}", x.len()));
            }
            let covered = ball(g, x, *radius);
            let keep: Vec<bool> = g.vertices().map(|v| !covered.contains(v)).collect();
            if !is_forest_within(g, Some(&keep)) {
                return Err(violation!("a cycle avoids the radius-{radius} ball around X"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn s_k_values() {
        assert_eq!(s_k(1).unwrap(), 2.0);
        assert!((s_k(2).unwrap() - 40.0).abs() < 1e-9);
        assert!((s_k(4).unwrap() - 112.0).abs() < 1e-9);
        assert_eq!(s_k_ceil(2).unwrap(), 40);
        assert!(s_k(0).is_err());
    }

    #[test]
    fn f_values() {
        assert!((f_bound(1).unwrap() - 18.0).abs() < 1e-9);
        assert!((f_bound(2).unwrap() - 524.0).abs() < 1e-9);
        for k in 2..20 {
            assert!(f_bound(k - 1).unwrap() + 4.0 <= f_bound(k).unwrap());
        }
    }

    #[test]
    fn k5_has_no_two_induced_cycles() {
        let cert = induced_pack_or_hit(&gen::complete(5), 2).unwrap();
        let Certificate::HittingSet { x, radius: 1 } = cert else {
            panic!("expected hitting set");
        };
        assert!(!x.is_empty());
    }

    #[test]
    fn two_triangles_pack() {
        let g = gen::disjoint_union(&gen::complete(3), &gen::complete(3));
        let cert = induced_pack_or_hit(&g, 2).unwrap();
        assert!(cert.is_packing());
    }

    #[test]
    fn forest_gives_empty_set() {
        let cert = induced_pack_or_hit(&gen::path(6), 3).unwrap();
        assert_eq!(
            cert,
            Certificate::HittingSet {
                x: VertexSet::new(),
                radius: 1
            }
        );
    }
}
