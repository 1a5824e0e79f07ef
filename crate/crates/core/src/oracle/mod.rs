//! Exhaustive reference algorithms for small graphs and an independent
//! certificate checker.
//!
//! Nothing in here calls the producing modules; the traversal helpers in
//! [`basic`] are separate re-implementations so that a bug in the main
//! primitives cannot hide itself.

mod basic;
mod fvs;
mod verify;

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph, Vertex, VertexSet};

pub use fvs::{BruteForceFvsOracle, GreedyFvsOracle};
pub use verify::{verify_certificate, Verdict};

/// Limits for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_cycles: usize,
    pub time_cap: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_vertices: 64,
            max_cycles: 2_000_000,
            time_cap: Duration::from_secs(60),
        }
    }
}

struct Meter {
    budget: OracleBudget,
    start: Instant,
    ticks: u64,
}

impl Meter {
    fn new(g: &Graph, budget: OracleBudget) -> Result<Self> {
        if g.n() > budget.max_vertices || g.n() > 128 {
            return Err(Error::CapExceeded(format!(
                "{} vertices exceed the oracle limit of {}",
                g.n(),
                budget.max_vertices.min(128)
            )));
        }
        Ok(Self {
            budget,
            start: Instant::now(),
            ticks: 0,
        })
    }

    fn tick(&mut self) -> Result<()> {
        self.ticks += 1;
        if self.ticks % 4096 == 0 && self.start.elapsed() > self.budget.time_cap {
            return Err(Error::CapExceeded("oracle time cap reached".into()));
        }
        Ok(())
    }

    fn count(&self, cycles: usize) -> Result<()> {
        if cycles > self.budget.max_cycles {
            return Err(Error::CapExceeded(format!(
                "more than {} cycles",
                self.budget.max_cycles
            )));
        }
        Ok(())
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u128> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | 1 << w))
        .collect()
}

fn mask_of(vs: &[Vertex]) -> u128 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

fn enumerate(g: &Graph, budget: OracleBudget, chordless: bool) -> Result<Vec<Cycle>> {
    let mut meter = Meter::new(g, budget)?;
    let adj = adjacency_masks(g);
    let mut out = Vec::new();
    let mut path = Vec::new();
    for s in g.vertices() {
        path.clear();
        path.push(s);
        extend(g, &adj, s, &mut path, 1 << s, chordless, &mut out, &mut meter)?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    adj: &[u128],
    s: Vertex,
    path: &mut Vec<Vertex>,
    on_path: u128,
    chordless: bool,
    out: &mut Vec<Cycle>,
    meter: &mut Meter,
) -> Result<()> {
    meter.tick()?;
    let last = *path.last().unwrap();
    // vertices of the path other than s and the last one
    let interior = on_path & !(1 << s) & !(1 << last);
    for &w in g.neighbors(last) {
        if w <= s || on_path >> w & 1 == 1 {
            continue;
        }
        if chordless && adj[w] & interior != 0 {
            continue;
        }
        let closes = adj[w] >> s & 1 == 1 && path.len() >= 2;
        if closes && path[1] < w {
            path.push(w);
            out.push(Cycle::new(path.clone()));
            path.pop();
            meter.count(out.len())?;
        }
        if chordless && closes {
            continue;
        }
        path.push(w);
        extend(g, adj, s, path, on_path | 1 << w, chordless, out, meter)?;
        path.pop();
    }
    Ok(())
}

/// Every cycle of `g`, each once, in canonical form.
pub fn enumerate_cycles(g: &Graph, budget: OracleBudget) -> Result<Vec<Cycle>> {
    enumerate(g, budget, false)
}

/// Every chordless (induced) cycle of `g`.
pub fn enumerate_chordless_cycles(g: &Graph, budget: OracleBudget) -> Result<Vec<Cycle>> {
    enumerate(g, budget, true)
}

/// Smallest `X` (by size, then lexicographically) with `G − B(X, r)`
/// acyclic.
pub fn min_ball_fvs_bruteforce(g: &Graph, r: usize, budget: OracleBudget) -> Result<VertexSet> {
    let mut meter = Meter::new(g, budget)?;
    let n = g.n();
    let balls: Vec<u128> = g
        .vertices()
        .map(|v| basic::ball_mask(g, 1 << v, r))
        .collect();
    for size in 0..=n {
        let mut chosen = Vec::with_capacity(size);
        if let Some(x) = subsets(n, size, 0, &mut chosen, &mut |c| {
            meter.tick()?;
            let covered = c.iter().fold(0u128, |m, &v| m | balls[v]);
            Ok(basic::is_forest_mask(g, !covered))
        })? {
            return Ok(x.into_iter().collect());
        }
    }
    unreachable!("removing every vertex leaves a forest")
}

/// Minimum feedback vertex set.
pub fn min_fvs_bruteforce(g: &Graph, budget: OracleBudget) -> Result<VertexSet> {
    min_ball_fvs_bruteforce(g, 0, budget)
}

fn subsets(
    n: usize,
    size: usize,
    from: usize,
    chosen: &mut Vec<Vertex>,
    test: &mut dyn FnMut(&[Vertex]) -> Result<bool>,
) -> Result<Option<Vec<Vertex>>> {
    if chosen.len() == size {
        return Ok(test(chosen)?.then(|| chosen.clone()));
    }
    for v in from..n {
        if n - v < size - chosen.len() {
            break;
        }
        chosen.push(v);
        if let Some(found) = subsets(n, size, v + 1, chosen, test)? {
            return Ok(Some(found));
        }
        chosen.pop();
    }
    Ok(None)
}

/// Backtracking search for `k` cycles, pairwise compatible.
fn pick_k(masks: &[u128], compatible: &dyn Fn(usize, usize) -> bool, k: usize, meter: &mut Meter) -> Result<Option<Vec<usize>>> {
    fn go(
        masks: &[u128],
        compatible: &dyn Fn(usize, usize) -> bool,
        k: usize,
        from: usize,
        chosen: &mut Vec<usize>,
        meter: &mut Meter,
    ) -> Result<bool> {
        if chosen.len() == k {
            return Ok(true);
        }
        for i in from..masks.len() {
            meter.tick()?;
            if chosen.iter().all(|&j| compatible(i, j)) {
                chosen.push(i);
                if go(masks, compatible, k, i + 1, chosen, meter)? {
                    return Ok(true);
                }
                chosen.pop();
            }
        }
        Ok(false)
    }
    let mut chosen = Vec::new();
    Ok(go(masks, compatible, k, 0, &mut chosen, meter)?.then_some(chosen))
}

/// `k` cycles that are pairwise vertex-disjoint with no edge between any
/// two, if they exist. Chordless cycles suffice: every cycle contains one
/// on a subset of its vertices.
pub fn find_induced_packing_bruteforce(
    g: &Graph,
    k: usize,
    budget: OracleBudget,
) -> Result<Option<Vec<Cycle>>> {
    let cycles = enumerate_chordless_cycles(g, budget)?;
    let mut meter = Meter::new(g, budget)?;
    let adj = adjacency_masks(g);
    let masks: Vec<u128> = cycles.iter().map(|c| mask_of(c.vertices())).collect();
    let closed: Vec<u128> = masks
        .iter()
        .map(|&m| (0..g.n()).filter(|&v| m >> v & 1 == 1).fold(m, |acc, v| acc | adj[v]))
        .collect();
    let compatible = |i: usize, j: usize| masks[i] & closed[j] == 0;
    Ok(pick_k(&masks, &compatible, k, &mut meter)?
        .map(|idx| idx.into_iter().map(|i| cycles[i].clone()).collect()))
}

pub fn max_induced_packing_bruteforce(g: &Graph, k: usize, budget: OracleBudget) -> Result<bool> {
    Ok(find_induced_packing_bruteforce(g, k, budget)?.is_some())
}

/// `k` pairwise vertex-disjoint cycles of `g`, if they exist.
pub fn find_disjoint_cycles_bruteforce(
    g: &Graph,
    k: usize,
    budget: OracleBudget,
) -> Result<Option<Vec<Cycle>>> {
    let cycles = enumerate_chordless_cycles(g, budget)?;
    let mut meter = Meter::new(g, budget)?;
    let masks: Vec<u128> = cycles.iter().map(|c| mask_of(c.vertices())).collect();
    let compatible = |i: usize, j: usize| masks[i] & masks[j] == 0;
    Ok(pick_k(&masks, &compatible, k, &mut meter)?
        .map(|idx| idx.into_iter().map(|i| cycles[i].clone()).collect()))
}

/// Whether `g` has `k` pairwise vertex-disjoint cycles.
pub fn disjoint_cycles_bruteforce(g: &Graph, k: usize, budget: OracleBudget) -> Result<bool> {
    Ok(find_disjoint_cycles_bruteforce(g, k, budget)?.is_some())
}

/// Whether two cycles of `g` are at distance greater than `d`.
pub fn distance_packing_exists_bruteforce(g: &Graph, d: usize, budget: OracleBudget) -> Result<bool> {
    let cycles = enumerate_chordless_cycles(g, budget)?;
    let mut meter = Meter::new(g, budget)?;
    let masks: Vec<u128> = cycles.iter().map(|c| mask_of(c.vertices())).collect();
    let reach: Vec<u128> = masks.iter().map(|&m| basic::ball_mask(g, m, d)).collect();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            meter.tick()?;
            if reach[i] & masks[j] == 0 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Whether no vertex has `t` pairwise non-adjacent neighbours.
pub fn is_k1t_free(g: &Graph, t: usize, budget: OracleBudget) -> Result<bool> {
    let mut meter = Meter::new(g, budget)?;
    let adj = adjacency_masks(g);
    for v in g.vertices() {
        meter.tick()?;
        let mut steps = u64::MAX;
        if basic::independence_number(&adj, adj[v], &mut steps).unwrap_or(0) >= t {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn b() -> OracleBudget {
        OracleBudget::default()
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(enumerate_cycles(&gen::complete(4), b()).unwrap().len(), 7);
        assert_eq!(enumerate_cycles(&gen::cycle(5).unwrap(), b()).unwrap().len(), 1);
        assert!(enumerate_cycles(&gen::path(6), b()).unwrap().is_empty());
        // K5: 10 triangles, 15 four-cycles, 12 five-cycles
        assert_eq!(enumerate_cycles(&gen::complete(5), b()).unwrap().len(), 37);
        assert_eq!(enumerate_chordless_cycles(&gen::complete(5), b()).unwrap().len(), 10);
    }

    #[test]
    fn ball_fvs() {
        assert!(min_ball_fvs_bruteforce(&gen::path(5), 1, b()).unwrap().is_empty());
        assert_eq!(min_ball_fvs_bruteforce(&gen::complete(5), 1, b()).unwrap().len(), 1);
        assert_eq!(min_fvs_bruteforce(&gen::complete(4), b()).unwrap().len(), 2);
        let h = gen::subdivide(&gen::complete(4), 2);
        assert_eq!(min_ball_fvs_bruteforce(&h, 1, b()).unwrap().len(), 2);
    }

    #[test]
    fn induced_packings() {
        let two = gen::disjoint_union(&gen::complete(3), &gen::complete(3));
        assert!(max_induced_packing_bruteforce(&two, 2, b()).unwrap());
        assert!(!max_induced_packing_bruteforce(&gen::complete(5), 2, b()).unwrap());
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 3));
        let chorded = Graph::new(6, edges).unwrap();
        assert!(!max_induced_packing_bruteforce(&chorded, 2, b()).unwrap());
    }

    #[test]
    fn distance_packings() {
        let l = gen::line_graph(&gen::complete_bipartite(3, 3));
        assert!(!distance_packing_exists_bruteforce(&l, 2, b()).unwrap());
        // triangles 0-1-2 and 3-4-5 joined by a path 2-6-7-3 of length 3 = 2d+1 with d = 1... use d = 2: path of length 4
        let g = Graph::new(9, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 6), (6, 7), (7, 8), (8, 3)]).unwrap();
        assert!(distance_packing_exists_bruteforce(&g, 2, b()).unwrap());
        assert!(!distance_packing_exists_bruteforce(&gen::cycle(7).unwrap(), 1, b()).unwrap());
    }

    #[test]
    fn claw_freeness() {
        assert!(is_k1t_free(&gen::line_graph(&gen::complete(4)), 3, b()).unwrap());
        assert!(!is_k1t_free(&gen::star(3), 3, b()).unwrap());
        assert!(is_k1t_free(&gen::complete(3), 2, b()).unwrap());
    }

    #[test]
    fn budget_enforced() {
        let budget = OracleBudget {
            max_vertices: 4,
            ..b()
        };
        assert!(matches!(
            enumerate_cycles(&gen::complete(5), budget),
            Err(Error::CapExceeded(_))
        ));
    }
}
