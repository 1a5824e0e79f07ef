use std::collections::{BTreeMap, BTreeSet};

use super::{admissible_mask, compute_yz, free_mask, EarDecomp, EarKind, YZState};
use crate::graph::{bfs_distances, girth, girth_cycle_within, Graph, Vertex, UNREACHED};

/// Evidence attached to a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Vertex(Vertex),
    Edge(Vertex, Vertex),
    /// Index into the ear list.
    Ear(usize),
    /// An ear that is longer than an available alternative.
    NotShortest { ear: usize, found: usize, shortest: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn record(&mut self, name: &'static str, failure: Option<(Witness, String)>) {
        let (passed, witness, detail) = match failure {
            None => (true, None, String::new()),
            Some((w, d)) => (false, Some(w), d),
        };
        self.checks.push(CheckResult {
            name,
            passed,
            witness,
            detail,
        });
    }
}

type Failure = Option<(Witness, String)>;

/// Length of a shortest ℋ-path of `G − Z`, derived from distances in the
/// free region.
fn shortest_h_path_len(g: &Graph, d: &EarDecomp, yz: &YZState) -> Option<usize> {
    let adm = admissible_mask(d, yz);
    let free = free_mask(d, yz);
    let mut best: Option<usize> = None;
    for a in (0..g.n()).filter(|&a| adm[a]) {
        if g
            .neighbors(a)
            .iter()
            .any(|&b| adm[b] && !d.has_h_edge(a, b))
        {
            return Some(1);
        }
        let starts: Vec<Vertex> = g.neighbors(a).iter().copied().filter(|&x| free[x]).collect();
        let dist = bfs_distances(g, starts, Some(&free), None);
        for b in (0..g.n()).filter(|&b| adm[b] && b != a) {
            for &u in g.neighbors(b) {
                if free[u] && dist[u] != UNREACHED {
                    let len = dist[u] + 2;
                    best = Some(best.map_or(len, |x| x.min(len)));
                }
            }
        }
    }
    best
}

/// Length of a shortest cycle of `G − Z` through exactly one admissible
/// vertex and otherwise inside the free region.
fn shortest_type1_len(g: &Graph, d: &EarDecomp, yz: &YZState) -> Option<usize> {
    let adm = admissible_mask(d, yz);
    let free = free_mask(d, yz);
    let mut best: Option<usize> = None;
    for c in (0..g.n()).filter(|&c| adm[c]) {
        let nbrs: Vec<Vertex> = g.neighbors(c).iter().copied().filter(|&x| free[x]).collect();
        for (i, &x) in nbrs.iter().enumerate() {
            let dist = bfs_distances(g, [x], Some(&free), None);
            for &y in &nbrs[i + 1..] {
                if dist[y] != UNREACHED {
                    let len = dist[y] + 2;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

fn ear_is_induced(g: &Graph, vs: &[Vertex]) -> Option<(Vertex, Vertex)> {
    let k = vs.len();
    for i in 0..k {
        for j in i + 1..k {
            // the end pair of a path may be joined by an older ℋ-edge
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if !consecutive && g.has_edge(vs[i], vs[j]) {
                return Some((vs[i], vs[j]));
            }
        }
    }
    None
}

/// Re-derives every structural property of a coarse ear-decomposition.
pub fn validate(g: &Graph, d: &EarDecomp) -> ValidationReport {
    let mut report = ValidationReport::default();
    let ears = d.ears();
    let n = g.n();

    // ear shape and numbering
    let mut shape: Failure = None;
    let (mut phase, mut index) = (0, 0);
    for (e, ear) in ears.iter().enumerate() {
        let expected = if ear.index == 1 {
            (phase + 1, 1)
        } else {
            (phase, index + 1)
        };
        let ok_numbering = (ear.phase, ear.index) == expected && (ear.index == 1) == ear.is_cycle();
        let ok_vertices = ear.vertices.iter().all(|&v| v < n) && {
            let set: BTreeSet<_> = ear.vertices.iter().collect();
            set.len() == ear.vertices.len()
        };
        let ok_edges = ok_vertices && ear.edges().iter().all(|&(u, v)| g.has_edge(u, v));
        let ok_len = if ear.is_cycle() {
            ear.vertices.len() >= 3
        } else {
            ear.vertices.len() >= 2
        };
        let ok_ends = match ear.kind {
            EarKind::HPath { a, b } => {
                ear.vertices.first() == Some(&a) && ear.vertices.last() == Some(&b)
            }
            EarKind::Type1 { attachment } => ear.vertices.contains(&attachment),
            EarKind::Type2 => true,
        };
        if shape.is_none() && !(ok_numbering && ok_vertices && ok_edges && ok_len && ok_ends) {
            shape = Some((Witness::Ear(e), format!("ear {e} is malformed")));
        }
        phase = ear.phase;
        index = ear.index;
    }
    let shape_ok = shape.is_none();
    report.record("ear-shape", shape);
    if !shape_ok {
        return report;
    }

    // replay: attachment rules, minimality, monotonicity
    let mut attach: Failure = None;
    let mut cond_a: Failure = None;
    let mut cond_b: Failure = None;
    let mut cond_c: Failure = None;
    let mut monotone: Failure = None;
    let mut prefix = EarDecomp::empty(n);
    let mut prev_yz = compute_yz(g, &prefix);
    for (e, ear) in ears.iter().enumerate() {
        let yz = &prev_yz;
        let adm = admissible_mask(&prefix, yz);
        let free = free_mask(&prefix, yz);
        let gamma = ear.gamma();
        let bad = ear.vertices.iter().find(|&&v| {
            if gamma.contains(v) {
                !adm[v]
            } else {
                !free[v]
            }
        });
        if let Some(&v) = bad {
            attach.get_or_insert((Witness::Vertex(v), format!("ear {e} enters ℋ or Z at {v}")));
        }
        if let EarKind::HPath { a, b } = ear.kind {
            if ear.vertices.len() == 2 && prefix.has_h_edge(a, b) {
                attach.get_or_insert((Witness::Edge(a, b), format!("ear {e} reuses an ℋ-edge")));
            }
        }
        if ear.index == 1 {
            if !prefix.is_empty() {
                if let Some(len) = shortest_h_path_len(g, &prefix, yz) {
                    cond_a.get_or_insert((
                        Witness::Ear(e),
                        format!("phase {} opens while an ℋ-path of length {len} exists", ear.phase),
                    ));
                }
            }
            let t1 = shortest_type1_len(g, &prefix, yz);
            let expected = match (&ear.kind, t1) {
                (EarKind::Type1 { .. }, Some(len)) => Some(len),
                (EarKind::Type1 { .. }, None) => None,
                (EarKind::Type2, Some(len)) => {
                    cond_b.get_or_insert((
                        Witness::Ear(e),
                        format!("type-2 ear {e} chosen although a type-1 cycle of length {len} exists"),
                    ));
                    Some(len)
                }
                (EarKind::Type2, None) => girth_cycle_within(g, Some(&free)).map(|c| c.len()),
                _ => unreachable!(),
            };
            match expected {
                Some(len) if len != ear.len() => {
                    cond_b.get_or_insert((
                        Witness::NotShortest {
                            ear: e,
                            found: ear.len(),
                            shortest: len,
                        },
                        format!("opening ear {e} is not shortest"),
                    ));
                }
                None => {
                    cond_b.get_or_insert((Witness::Ear(e), format!("ear {e} has no valid kind")));
                }
                _ => {}
            }
        } else {
            match shortest_h_path_len(g, &prefix, yz) {
                Some(len) if len != ear.len() => {
                    cond_c.get_or_insert((
                        Witness::NotShortest {
                            ear: e,
                            found: ear.len(),
                            shortest: len,
                        },
                        format!("ℋ-path ear {e} is not shortest"),
                    ));
                }
                None => {
                    cond_c.get_or_insert((Witness::Ear(e), format!("ear {e} is not an ℋ-path")));
                }
                _ => {}
            }
        }
        prefix.push(ear.clone());
        let next = compute_yz(g, &prefix);
        if let Some(v) = (0..n).find(|&v| (yz.y[v] && !next.y[v]) || (yz.z[v] && !next.z[v])) {
            monotone.get_or_insert((Witness::Vertex(v), format!("Y or Z shrinks at {v} after ear {e}")));
        }
        prev_yz = next;
    }
    report.record("attachment", attach);
    report.record("condition-A", cond_a);
    report.record("condition-B", cond_b);
    report.record("condition-C", cond_c);
    report.record("yz-monotone", monotone);

    // degrees lie in [2, 4]
    let in_h = d.vertex_mask();
    let deg_fail = (0..n)
        .find(|&v| in_h[v] && !(2..=4).contains(&d.degree(v)))
        .map(|v| (Witness::Vertex(v), format!("degree {} in ℋ", d.degree(v))));
    report.record("degree-range", deg_fail);

    // each ear induced in G
    let induced_ears = ears.iter().enumerate().find_map(|(e, ear)| {
        ear_is_induced(g, &ear.vertices)
            .map(|(u, v)| (Witness::Edge(u, v), format!("ear {e} has chord {u}-{v}")))
    });
    report.record("ears-induced", induced_ears);

    // pairwise edge-disjoint
    let mut owner: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    let mut disjoint: Failure = None;
    for (e, ear) in ears.iter().enumerate() {
        for (u, v) in ear.edges() {
            if let Some(&f) = owner.get(&(u.min(v), u.max(v))) {
                disjoint.get_or_insert((Witness::Edge(u, v), format!("ears {f} and {e} share an edge")));
            }
            owner.insert((u.min(v), u.max(v)), e);
        }
    }
    report.record("edge-disjoint", disjoint);

    // degree 3 <=> unique H-path end, degree 4 <=> unique type-1 attachment
    let mut ends = vec![0usize; n];
    let mut attachments = vec![0usize; n];
    for ear in ears {
        match ear.kind {
            EarKind::HPath { a, b } => {
                ends[a] += 1;
                ends[b] += 1;
            }
            EarKind::Type1 { attachment } => attachments[attachment] += 1,
            EarKind::Type2 => {}
        }
    }
    let charac = (0..n).filter(|&v| in_h[v]).find_map(|v| {
        let deg = d.degree(v);
        let ok = (deg == 3) == (ends[v] == 1 && attachments[v] == 0)
            && (deg == 4) == (attachments[v] == 1 && ends[v] == 0);
        (!ok).then(|| {
            (
                Witness::Vertex(v),
                format!("vertex {v}: degree {deg}, {} ends, {} attachments", ends[v], attachments[v]),
            )
        })
    });
    report.record("degree-characterization", charac);

    // adjacent branch vertices are the ends of one ear
    let branch_adj = (0..n)
        .filter(|&v| d.degree(v) >= 3)
        .flat_map(|u| d.h_neighbors(u).iter().map(move |&v| (u, v)))
        .filter(|&(u, v)| u < v && d.degree(v) >= 3)
        .find_map(|(u, v)| {
            let count = ears
                .iter()
                .filter(|e| matches!(e.kind, EarKind::HPath { a, b } if (a, b) == (u, v) || (a, b) == (v, u)))
                .count();
            (count != 1).then(|| (Witness::Edge(u, v), format!("branch vertices {u},{v} adjacent")))
        });
    report.record("branch-adjacency", branch_adj);

    // maximality
    let yz = compute_yz(g, d);
    let free = free_mask(d, &yz);
    let maximal = if !d.is_empty() && shortest_h_path_len(g, d, &yz).is_some() {
        Some((Witness::Ear(ears.len()), "an ℋ-path remains".to_string()))
    } else if shortest_type1_len(g, d, &yz).is_some() {
        Some((Witness::Ear(ears.len()), "a type-1 cycle remains".to_string()))
    } else {
        girth_cycle_within(g, Some(&free)).map(|c| {
            (
                Witness::Vertex(c.vertices()[0]),
                "G − Z − V(ℋ) has a cycle".to_string(),
            )
        })
    };
    let is_maximal = maximal.is_none();
    report.record("maximal", maximal);

    if girth(g).map_or(true, |x| x >= 5) {
        let short = ears
            .iter()
            .enumerate()
            .find(|(_, ear)| !ear.is_cycle() && ear.len() <= 2 && ear.index != 2)
            .map(|(e, ear)| (Witness::Ear(e), format!("ear {e} of length {} at index {}", ear.len(), ear.index)));
        report.record("short-ears-second", short);
        if is_maximal {
            let chord = g
                .edges()
                .find(|&(u, v)| in_h[u] && in_h[v] && !d.has_h_edge(u, v))
                .map(|(u, v)| (Witness::Edge(u, v), format!("edge {u}-{v} of G between ℋ-vertices")));
            report.record("induced", chord);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eardecomp::{build_maximal, Ear};

    #[test]
    fn forest_passes() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(validate(&g, &build_maximal(&g)).is_ok());
    }

    #[test]
    fn non_shortest_h_path_flagged() {
        // C8 with a chord path of length 4 between 0 and 4 and a shorter
        // one of length 3 between 0 and 4 as well
        let mut edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        edges.extend([(0, 8), (8, 9), (9, 10), (10, 4)]);
        edges.extend([(0, 11), (11, 12), (12, 4)]);
        let g = Graph::new(13, edges).unwrap();
        let d = EarDecomp::from_ears(
            13,
            vec![
                Ear {
                    kind: EarKind::Type2,
                    vertices: (0..8).collect(),
                    phase: 1,
                    index: 1,
                },
                Ear {
                    kind: EarKind::HPath { a: 0, b: 4 },
                    vertices: vec![0, 8, 9, 10, 4],
                    phase: 1,
                    index: 2,
                },
            ],
        );
        let report = validate(&g, &d);
        let fail = report.failures().find(|c| c.name == "condition-C").unwrap();
        assert_eq!(
            fail.witness,
            Some(Witness::NotShortest {
                ear: 1,
                found: 4,
                shortest: 3
            })
        );
    }
}
