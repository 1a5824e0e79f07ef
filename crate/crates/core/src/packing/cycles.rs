//! Vertex-disjoint cycles in (sub)cubic graphs.

use crate::error::{invalid, violation, Result};
use crate::graph::{
    lift_cycle, suppress_degree_two, Cycle, ExpansionMap, Graph, MultiCycle, Multigraph, VertexSet,
};

use super::s_k_ceil;

fn deleted_mask(m: &Multigraph, c: &MultiCycle) -> Vec<bool> {
    let mut mask = vec![false; m.n()];
    for &v in &c.vertices {
        mask[v] = true;
    }
    mask
}

/// Number of vertices of degree three (loops counted twice).
fn cubic_count(m: &Multigraph) -> usize {
    m.degrees().iter().filter(|&&d| d == 3).count()
}

/// `k` vertex-disjoint cycles of a suppressed subcubic graph, extracted
/// greedily: take a shortest cycle, delete it, prune and re-suppress.
///
/// Every vertex of `m` must have degree 3, or carry a single loop (a
/// suppressed cycle component), and at least `⌈s_k⌉` vertices must have
/// degree 3. The shortest cycle of a multigraph of minimum degree 3 on
/// `n >= 4` vertices is asserted to be shorter than `2·log₂ n`.
pub fn disjoint_cycles_min_degree3(
    m: &Multigraph,
    map: &ExpansionMap,
    k: usize,
) -> Result<Vec<Cycle>> {
    let degrees = m.degrees();
    if let Some(v) = (0..m.n()).find(|&v| degrees[v] != 3 && !m.is_bare_loop(v)) {
        return Err(invalid!("multigraph vertex {v} has degree {}", degrees[v]));
    }
    let need = s_k_ceil(k)?;
    if cubic_count(m) < need {
        return Err(violation!(
            "{} cubic vertices is below the {need} needed for {k} disjoint cycles",
            cubic_count(m)
        ));
    }
    let mut cycles = Vec::with_capacity(k);
    let (mut cur, mut cur_map) = (m.clone(), map.clone());
    while cycles.len() < k {
        let Some(c) = cur.shortest_cycle() else {
            return Err(violation!(
                "greedy extraction found only {} of {k} disjoint cycles",
                cycles.len()
            ));
        };
        let n = cur.n();
        if n >= 4 && cur.degrees().iter().all(|&d| d >= 3) && c.len() as f64 >= 2.0 * (n as f64).log2() {
            return Err(violation!(
                "shortest cycle of length {} in a min-degree-3 multigraph on {n} vertices",
                c.len()
            ));
        }
        cycles.push(lift_cycle(&cur_map, &c)?);
        let mask = deleted_mask(&cur, &c);
        (cur, cur_map) = cur.reduce(&cur_map, &mask);
    }
    Ok(cycles)
}

fn second_cycle(m: &Multigraph, map: &ExpansionMap, first: &MultiCycle) -> Result<Option<(Cycle, Cycle)>> {
    let (rest, rest_map) = m.reduce(map, &deleted_mask(m, first));
    match rest.shortest_cycle() {
        Some(c2) => Ok(Some((lift_cycle(map, first)?, lift_cycle(&rest_map, &c2)?))),
        None => Ok(None),
    }
}

/// Two vertex-disjoint cycles of a graph with all degrees in {2, 3}, or
/// `None` if none exist. After suppression, a shortest cycle and a cycle of
/// the pruned remainder are tried first, then a shortest cycle through
/// each vertex in turn.
pub fn two_disjoint_cycles_subcubic(g: &Graph) -> Result<Option<(Cycle, Cycle)>> {
    if let Some(v) = g.vertices().find(|&v| !(2..=3).contains(&g.degree(v))) {
        return Err(invalid!("vertex {v} has degree {} outside 2..=3", g.degree(v)));
    }
    let all: VertexSet = g.vertices().collect();
    let (m, map) = suppress_degree_two(g, &all)?;
    let Some(first) = m.shortest_cycle() else {
        return Ok(None);
    };
    if let Some(pair) = second_cycle(&m, &map, &first)? {
        return Ok(Some(pair));
    }
    for v in 0..m.n() {
        if let Some(c) = m.shortest_cycle_through(v) {
            if let Some(pair) = second_cycle(&m, &map, &c)? {
                return Ok(Some(pair));
            }
        }
    }
    if cubic_count(&m) >= 7 {
        return Err(violation!(
            "cubic multigraph on {} vertices without two disjoint cycles",
            m.n()
        ));
    }
    Ok(None)
}
