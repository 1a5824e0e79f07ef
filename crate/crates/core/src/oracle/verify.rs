//! Independent re-check of every certificate kind.

use crate::certfile::{BoundVariant, CertificateFile};
use crate::graph::{Graph, Vertex};

use super::basic;

/// Outcome of a certificate check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    Rejected(String),
    /// A bag was too large for the exact independence computation.
    Undecided(String),
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }
}

type Check = std::result::Result<(), Verdict>;

fn reject<T>(msg: impl Into<String>) -> std::result::Result<T, Verdict> {
    Err(Verdict::Rejected(msg.into()))
}

/// Budget for the exact bag independence computation, in search nodes.
const ALPHA_STEPS: u64 = 50_000_000;

pub fn verify_certificate(g: &Graph, cert: &CertificateFile) -> Verdict {
    let outcome = match cert {
        CertificateFile::Packing { k, cycles } => packing(g, *k, cycles, 1),
        CertificateFile::Hitting {
            k,
            radius,
            x,
            bound,
            variant,
        } => hitting(g, *k, *radius, x, *bound, *variant),
        CertificateFile::DistancePacking { d, cycles } => packing(g, 2, cycles, *d),
        CertificateFile::DistanceHitting { d, x1, x2 } => distance_hitting(g, *d, x1, x2),
        CertificateFile::TreeDecomposition {
            k,
            t,
            bags,
            edges,
            independence,
        } => tree_decomposition(g, *k, *t, bags, edges, *independence),
    };
    match outcome {
        Ok(()) => Verdict::Accepted,
        Err(v) => v,
    }
}

fn in_range(g: &Graph, vs: &[Vertex]) -> Check {
    match vs.iter().find(|&&v| v >= g.n()) {
        Some(v) => reject(format!("vertex {v} out of range")),
        None => Ok(()),
    }
}

fn cycle_ok(g: &Graph, c: &[Vertex]) -> Check {
    in_range(g, c)?;
    if c.len() < 3 {
        return reject(format!("cycle {c:?} has fewer than 3 vertices"));
    }
    let mut sorted = c.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return reject(format!("cycle {c:?} repeats a vertex"));
    }
    for i in 0..c.len() {
        let (u, v) = (c[i], c[(i + 1) % c.len()]);
        if !g.neighbors(u).contains(&v) {
            return reject(format!("cycle {c:?} uses non-edge {u}-{v}"));
        }
    }
    Ok(())
}

/// `k` cycles pairwise at distance greater than `d` (`d = 1`: disjoint and
/// anticomplete).
fn packing(g: &Graph, k: usize, cycles: &[Vec<Vertex>], d: usize) -> Check {
    if cycles.len() != k || k == 0 {
        return reject(format!("{} cycles listed for k = {k}", cycles.len()));
    }
    for c in cycles {
        cycle_ok(g, c)?;
    }
    for (i, a) in cycles.iter().enumerate() {
        let dist = basic::distances(g, a);
        for b in &cycles[i + 1..] {
            let gap = b.iter().map(|&v| dist[v]).min().unwrap_or(usize::MAX);
            if gap <= d {
                return reject(format!("cycles {a:?} and {b:?} are at distance {gap} <= {d}"));
            }
        }
    }
    Ok(())
}

fn forest_after(g: &Graph, x: &[Vertex], r: usize) -> Check {
    let dist = basic::distances(g, x);
    if basic::forest_outside(g, &dist, r) {
        Ok(())
    } else {
        reject(format!("a cycle avoids the radius-{r} ball"))
    }
}

fn distinct(x: &[Vertex]) -> Check {
    let mut s = x.to_vec();
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return reject("hitting set lists a vertex twice");
    }
    Ok(())
}

fn general_bound(k: usize) -> usize {
    let s = if k == 1 {
        2.0
    } else {
        let kf = k as f64;
        4.0 * kf * (kf.log2() + kf.log2().log2() + 4.0)
    };
    (9.0 * s + 164.0 * (k as f64 - 1.0)).floor() as usize
}

fn hitting(g: &Graph, k: usize, radius: usize, x: &[Vertex], bound: usize, variant: BoundVariant) -> Check {
    if k == 0 {
        return reject("k must be positive");
    }
    in_range(g, x)?;
    distinct(x)?;
    let expected = match variant {
        BoundVariant::General => general_bound(k),
        BoundVariant::Planar => 6 * k,
    };
    if bound != expected {
        return reject(format!("stated bound {bound} differs from {expected}"));
    }
    if radius != 1 {
        return reject(format!("radius {radius} instead of 1"));
    }
    if x.len() > bound {
        return reject(format!("|X| = {} exceeds {bound}", x.len()));
    }
    forest_after(g, x, radius)
}

fn distance_hitting(g: &Graph, d: usize, x1: &[Vertex], x2: &[Vertex]) -> Check {
    if d == 0 {
        return reject("d must be positive");
    }
    for x in [x1, x2] {
        in_range(g, x)?;
        distinct(x)?;
    }
    if x1.len() > 12 * (d + 1) {
        return reject(format!("|X1| = {} exceeds {}", x1.len(), 12 * (d + 1)));
    }
    if x2.len() > 12 {
        return reject(format!("|X2| = {} exceeds 12", x2.len()));
    }
    forest_after(g, x1, 2 * d)?;
    forest_after(g, x2, 3 * d)
}

fn tree_decomposition(
    g: &Graph,
    k: usize,
    t: usize,
    bags: &[Vec<Vertex>],
    edges: &[(usize, usize)],
    independence: usize,
) -> Check {
    let nodes = bags.len();
    if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= nodes || b >= nodes || a == b) {
        return reject(format!("tree edge {a}-{b} is invalid"));
    }
    // the decomposition tree: connected with nodes − 1 edges
    if nodes > 0 {
        if edges.len() != nodes - 1 {
            return reject(format!("{} tree edges for {nodes} nodes", edges.len()));
        }
        let mut adj = vec![Vec::new(); nodes];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; nodes];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !std::mem::replace(&mut seen[w], true) {
                    stack.push(w);
                }
            }
        }
        if seen.contains(&false) {
            return reject("decomposition tree is disconnected");
        }
    } else if g.n() > 0 {
        return reject("no bags for a nonempty graph");
    }
    let mut holders = vec![Vec::new(); g.n()];
    for (i, bag) in bags.iter().enumerate() {
        in_range(g, bag)?;
        for &v in bag {
            holders[v].push(i);
        }
    }
    for (v, h) in holders.iter().enumerate() {
        if h.is_empty() {
            return reject(format!("vertex {v} is in no bag"));
        }
        // bags holding v must be connected in the tree
        let inside: std::collections::HashSet<usize> = h.iter().copied().collect();
        let mut seen = std::collections::HashSet::from([h[0]]);
        let mut stack = vec![h[0]];
        while let Some(u) = stack.pop() {
            for &(a, b) in edges {
                let w = if a == u { b } else if b == u { a } else { continue };
                if inside.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.len() != inside.len() {
            return reject(format!("bags containing vertex {v} are not connected"));
        }
    }
    for (u, v) in g.edges() {
        if !holders[u].iter().any(|i| holders[v].contains(i)) {
            return reject(format!("edge {u}-{v} is in no bag"));
        }
    }
    let mut worst = 0;
    for (i, bag) in bags.iter().enumerate() {
        if bag.len() > 128 {
            return Err(Verdict::Undecided(format!("bag {i} has {} vertices", bag.len())));
        }
        let adj: Vec<u128> = bag
            .iter()
            .map(|&u| {
                bag.iter()
                    .enumerate()
                    .filter(|&(_, &w)| g.neighbors(u).contains(&w))
                    .fold(0u128, |m, (j, _)| m | 1 << j)
            })
            .collect();
        let all = if bag.len() == 128 { u128::MAX } else { (1u128 << bag.len()) - 1 };
        let mut steps = ALPHA_STEPS;
        match basic::independence_number(&adj, all, &mut steps) {
            Some(a) => worst = worst.max(a),
            None => return Err(Verdict::Undecided(format!("bag {i} exhausted the search budget"))),
        }
    }
    if worst != independence {
        return reject(format!("stated independence {independence}, measured {worst}"));
    }
    if t >= 1 && k >= 1 {
        let cap = general_bound(k) * (t - 1) + 2;
        if worst > cap {
            return reject(format!("bag independence {worst} exceeds {cap}"));
        }
    } else {
        return reject("k and t must be positive");
    }
    Ok(())
}
