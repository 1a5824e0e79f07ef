use crate::error::{invalid, Result};
use crate::graph::{lift_cycle, suppress_degree_two, Graph, VertexSet};
use crate::packing::{disjoint_cycles_min_degree3, s_k_ceil, FvsAnswer, FvsOracle};

use super::{find_disjoint_cycles_bruteforce, min_fvs_bruteforce, OracleBudget};

/// Exact oracle: `k` disjoint cycles if they exist, else a minimum
/// feedback vertex set.
///
/// `h` caps the size of returned sets; without an explicit value it is 0
/// for `k = 1`, 3 for `k = 2` (graphs without two disjoint cycles have a
/// feedback vertex set of size 3) and `⌈s_k⌉ + k` otherwise.
#[derive(Clone, Copy, Debug, Default)]
pub struct BruteForceFvsOracle {
    pub budget: OracleBudget,
    pub h: Option<usize>,
}

impl FvsOracle for BruteForceFvsOracle {
    fn solve(&self, g: &Graph, k: usize) -> Result<FvsAnswer> {
        if let Some(cycles) = find_disjoint_cycles_bruteforce(g, k, self.budget)? {
            return Ok(FvsAnswer::DisjointCycles(cycles));
        }
        let x = min_fvs_bruteforce(g, self.budget)?;
        if x.len() > self.bound(k) {
            return Err(invalid!(
                "minimum feedback vertex set has size {} > {}",
                x.len(),
                self.bound(k)
            ));
        }
        Ok(FvsAnswer::Fvs(x))
    }

    fn bound(&self, k: usize) -> usize {
        self.h.unwrap_or(match k {
            0 | 1 => 0,
            2 => 3,
            _ => s_k_ceil(k).unwrap_or(0) + k,
        })
    }
}

/// Oracle for graphs with all degrees in {2, 3}. With at least `⌈s_k⌉`
/// branch vertices after suppression the greedy shortest-cycle extraction
/// succeeds; otherwise the branch vertices plus one vertex per bare cycle
/// component form a feedback vertex set.
#[derive(Clone, Copy, Debug, Default)]
pub struct GreedyFvsOracle;

impl FvsOracle for GreedyFvsOracle {
    fn solve(&self, g: &Graph, k: usize) -> Result<FvsAnswer> {
        let all: VertexSet = g.vertices().collect();
        let (m, map) = suppress_degree_two(g, &all)?;
        let degrees = m.degrees();
        if let Some(v) = (0..m.n()).find(|&v| degrees[v] > 3) {
            return Err(invalid!(
                "vertex {} has degree {}",
                map.vertex_origin[v],
                degrees[v]
            ));
        }
        let branch: Vec<usize> = (0..m.n()).filter(|&v| !m.is_bare_loop(v)).collect();
        if branch.len() >= s_k_ceil(k)? {
            // bare loops ride along; the greedy only needs degree-3 vertices counted
            return Ok(FvsAnswer::DisjointCycles(disjoint_cycles_min_degree3(&m, &map, k)?));
        }
        let loops: Vec<usize> = (0..m.n()).filter(|&v| m.is_bare_loop(v)).collect();
        if loops.len() >= k {
            let cycles = loops[..k]
                .iter()
                .map(|&v| {
                    let c = m.shortest_cycle_through(v).expect("loop vertex lies on a cycle");
                    lift_cycle(&map, &c)
                })
                .collect::<Result<_>>()?;
            return Ok(FvsAnswer::DisjointCycles(cycles));
        }
        Ok(FvsAnswer::Fvs(
            (0..m.n()).map(|v| map.vertex_origin[v]).collect(),
        ))
    }

    fn bound(&self, k: usize) -> usize {
        s_k_ceil(k).unwrap_or(0) + k
    }
}
