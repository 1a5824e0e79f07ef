//! Packing induced cycles in planar graphs with hitting sets of size `6k`.

use std::collections::BTreeMap;

use crate::error::{violation, Error, Result};
use crate::graph::{
    ball, bridge_components, girth_cycle, is_forest_within, lift_cycle, suppress_degree_two, two_core, Cycle,
    ExpansionMap, Graph, MultiCycle, Multigraph, Vertex, VertexSet,
};
use crate::packing::Certificate;

/// One peeling step: a short cycle of a leaf bridgeless class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarStep {
    pub component: VertexSet,
    /// The class's endpoint of its unique bridge, if any.
    pub l: VertexSet,
    pub c: Cycle,
    /// Vertices of `c` of degree at least 3 inside the class.
    pub a: VertexSet,
}

fn lifted_len(map: &ExpansionMap, e: usize) -> usize {
    map.edge_paths[e].len() - 1
}

/// Loop, else parallel pair, else a shortest cycle; among loops and
/// parallel pairs the one with the shortest lift is taken.
fn preferred_cycle(m: &Multigraph, map: &ExpansionMap) -> Option<MultiCycle> {
    let loops = m.edges().iter().enumerate().filter(|(_, &(u, v))| u == v);
    if let Some((e, &(u, _))) = loops.min_by_key(|&(e, _)| lifted_len(map, e)) {
        return Some(MultiCycle {
            vertices: vec![u],
            edges: vec![e],
        });
    }
    let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (e, &(u, v)) in m.edges().iter().enumerate() {
        by_pair.entry((u.min(v), u.max(v))).or_default().push(e);
    }
    let best = by_pair
        .into_iter()
        .filter(|(_, es)| es.len() >= 2)
        .map(|((u, v), mut es)| {
            es.sort_by_key(|&e| (lifted_len(map, e), e));
            (lifted_len(map, es[0]) + lifted_len(map, es[1]), u, v, es[0], es[1])
        })
        .min();
    if let Some((_, u, v, e1, e2)) = best {
        return Some(MultiCycle {
            vertices: vec![u, v],
            edges: vec![e1, e2],
        });
    }
    m.shortest_cycle()
}

/// A cycle of length at most 5 after suppressing degree-2 vertices of a
/// 2-edge-connected class, lifted back, with its branch vertices.
pub fn short_cycle_in_2ecc(g: &Graph, component: &VertexSet) -> Result<(Cycle, VertexSet)> {
    let (m, map) = suppress_degree_two(g, component)?;
    let c = preferred_cycle(&m, &map).ok_or_else(|| violation!("bridgeless class without a cycle"))?;
    if c.len() > 5 {
        return Err(Error::NotPlanarEvidence(format!(
            "degree-2 suppression of a bridgeless class has girth {} > 5",
            c.len()
        )));
    }
    let cycle = lift_cycle(&map, &c)?;
    let a: VertexSet = cycle
        .vertices()
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).iter().filter(|&&w| component.contains(w)).count() >= 3)
        .collect();
    if a.len() > 5 {
        return Err(violation!("short cycle has {} branch vertices", a.len()));
    }
    Ok((cycle, a))
}

/// The step taken on `g`, or `None` if `g` is a forest.
pub fn planar_step(g: &Graph) -> Result<Option<PlanarStep>> {
    let core = two_core(g);
    if core.is_empty() {
        return Ok(None);
    }
    let (h, origin) = g.induced(&core.to_mask(g.n()));
    let bf = bridge_components(&h);
    let leaf = (0..bf.classes.len())
        .find(|&i| bf.class_degree(i) <= 1)
        .ok_or_else(|| violation!("bridge forest without a leaf"))?;
    let members: VertexSet = bf.classes[leaf].iter().copied().collect();
    if members.len() < 3 {
        return Err(violation!("leaf class {:?} of the 2-core is acyclic", bf.classes[leaf]));
    }
    let l: VertexSet = bf
        .bridges
        .iter()
        .flat_map(|&(u, v)| [u, v])
        .filter(|&v| bf.class_of[v] == leaf)
        .collect();
    let (c, a) = short_cycle_in_2ecc(&h, &members)?;
    Ok(Some(PlanarStep {
        component: members.mapped(&origin),
        l: l.mapped(&origin),
        c: c.mapped(&origin),
        a: a.mapped(&origin),
    }))
}

pub fn planar_pack(g: &Graph, k: usize) -> Result<Certificate> {
    if k == 0 {
        return Err(crate::error::invalid!("k must be positive"));
    }
    let cert = planar_rec(g, k)?;
    check(g, k, &cert)?;
    Ok(cert)
}

fn planar_rec(g: &Graph, k: usize) -> Result<Certificate> {
    let Some(step) = planar_step(g)? else {
        return Ok(Certificate::HittingSet {
            x: VertexSet::new(),
            radius: 1,
        });
    };
    if k == 1 {
        let c = girth_cycle(g).expect("graph with a nonempty 2-core has a cycle");
        return Ok(Certificate::InducedPacking { cycles: vec![c] });
    }
    let mut s = step.a.union(&step.l);
    if s.is_empty() {
        // the class is a bare cycle component
        s.insert(*step.c.vertices().iter().min().expect("cycle is nonempty"));
    }
    let (rest, origin) = g.without(&ball(g, &s, 1));
    Ok(match planar_rec(&rest, k - 1)? {
        Certificate::InducedPacking { cycles } => {
            let mut all = vec![step.c];
            all.extend(cycles.iter().map(|c| c.mapped(&origin)));
            Certificate::InducedPacking { cycles: all }
        }
        Certificate::HittingSet { x, radius } => Certificate::HittingSet {
            x: s.union(&x.mapped(&origin)),
            radius,
        },
    })
}

fn check(g: &Graph, k: usize, cert: &Certificate) -> Result<()> {
    match cert {
        Certificate::InducedPacking { cycles } => {
            if cycles.len() != k {
                return Err(violation!("{} cycles instead of {k}", cycles.len()));
            }
            let mut owner: Vec<Option<usize>> = vec![None; g.n()];
            for (i, c) in cycles.iter().enumerate() {
                if !c.is_valid_in(g) {
                    return Err(violation!("{:?} is not a cycle", c.vertices()));
                }
                for &v in c.vertices() {
                    if owner[v].replace(i).is_some() {
                        return Err(violation!("packed cycles share vertex {v}"));
                    }
                }
            }
            if let Some((u, v)) = g.edges().find(|&(u, v)| match (owner[u], owner[v]) {
                (Some(a), Some(b)) => a != b,
                _ => false,
            }) {
                return Err(violation!("edge {u}-{v} joins two packed cycles"));
            }
        }
        Certificate::HittingSet { x, radius } => {
            if x.len() > 6 * k {
                return Err(violation!("hitting set of size {} exceeds {}", x.len(), 6 * k));
            }
            let covered = ball(g, x, *radius);
            let keep: Vec<bool> = g.vertices().map(|v: Vertex| !covered.contains(v)).collect();
            if !is_forest_within(g, Some(&keep)) {
                return Err(violation!("a cycle avoids the radius-1 ball around X"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn all(g: &Graph) -> VertexSet {
        g.vertices().collect()
    }

    #[test]
    fn bare_cycle_is_a_loop() {
        let g = gen::cycle(9).unwrap();
        let (c, a) = short_cycle_in_2ecc(&g, &all(&g)).unwrap();
        assert_eq!(c.len(), 9);
        assert!(a.is_empty());
    }

    #[test]
    fn theta_takes_the_short_arms() {
        // branch vertices 0 and 1; arms of length 3, 3 and 4
        let g = Graph::new(
            9,
            [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 8), (8, 1)],
        )
        .unwrap();
        let (c, a) = short_cycle_in_2ecc(&g, &all(&g)).unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(a.to_vec(), vec![0, 1]);
    }

    #[test]
    fn heawood_is_evidence() {
        let g = gen::heawood();
        assert!(matches!(
            short_cycle_in_2ecc(&g, &all(&g)),
            Err(Error::NotPlanarEvidence(_))
        ));
        // K5 is not planar but its girth is 3
        let k5 = gen::complete(5);
        assert!(short_cycle_in_2ecc(&k5, &all(&k5)).is_ok());
    }

    #[test]
    fn small_examples() {
        let two = gen::disjoint_union(&gen::complete(3), &gen::complete(3));
        assert!(planar_pack(&two, 2).unwrap().is_packing());
        let c5 = gen::cycle(5).unwrap();
        assert_eq!(
            planar_pack(&c5, 1).unwrap(),
            Certificate::InducedPacking {
                cycles: vec![Cycle::new(vec![0, 1, 2, 3, 4])]
            }
        );
        let grid = gen::grid(10, 10);
        match planar_pack(&grid, 2).unwrap() {
            Certificate::InducedPacking { cycles } => assert_eq!(cycles.len(), 2),
            Certificate::HittingSet { x, .. } => assert!(x.len() <= 12),
        }
    }
}
