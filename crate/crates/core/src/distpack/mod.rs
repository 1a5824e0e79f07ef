//! Two cycles at distance greater than `d`, or small sets whose `2d`- and
//! `3d`-balls meet every cycle.

mod select;
mod support;

use crate::error::{invalid, violation, Result};
use crate::graph::{
    ball, find_cycle_within, girth_cycle, is_forest_within, set_distance, Cycle, Graph, VertexSet,
};

pub use select::{select_subtrees, two_cycles_from_selection, RootedForest, Round, Selection};
pub use support::{support_map, BoundaryVertex, SupportMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistResult {
    /// Two cycles whose distance exceeds `d`.
    TwoCycles(Cycle, Cycle),
    /// `G − B(x1, 2d)` and `G − B(x2, 3d)` are forests.
    Hitting { x1: VertexSet, x2: VertexSet, d: usize },
}

impl DistResult {
    pub fn is_packing(&self) -> bool {
        matches!(self, DistResult::TwoCycles(..))
    }
}

/// At most four evenly spaced vertices of `c` whose radius-`d` arcs cover
/// the whole cycle.
pub fn cover_cycle_four(c: &Cycle, d: usize) -> Result<VertexSet> {
    let len = c.len();
    if len > 8 * d + 4 {
        return Err(invalid!("cycle of length {len} cannot be covered by four radius-{d} arcs"));
    }
    let m = len.div_ceil(2 * d + 1).clamp(1, 4);
    Ok((0..m).map(|i| c.vertices()[i * len / m]).collect())
}

/// Positions along `c` within cycle distance `d` of `anchors`.
pub(crate) fn cycle_ball(c: &Cycle, anchors: impl IntoIterator<Item = usize>, d: usize) -> VertexSet {
    let len = c.len();
    let pos: std::collections::HashMap<usize, usize> =
        c.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut out = VertexSet::new();
    for a in anchors {
        let i = pos[&a];
        for off in 0..=d.min(len) {
            out.insert(c.vertices()[(i + off) % len]);
            out.insert(c.vertices()[(i + len - off % len) % len]);
        }
    }
    out
}

pub fn dist_pack_two(g: &Graph, d: usize) -> Result<DistResult> {
    if d == 0 {
        return Err(invalid!("d must be positive"));
    }
    let res = dist_pack_inner(g, d)?;
    check(g, d, &res)?;
    Ok(res)
}

fn dist_pack_inner(g: &Graph, d: usize) -> Result<DistResult> {
    let Some(c) = girth_cycle(g) else {
        return Ok(DistResult::Hitting {
            x1: VertexSet::new(),
            x2: VertexSet::new(),
            d,
        });
    };
    let near = ball(g, &c.vertex_set(), d);
    let far: Vec<bool> = g.vertices().map(|v| !near.contains(v)).collect();
    if let Some(other) = find_cycle_within(g, Some(&far)) {
        return Ok(DistResult::TwoCycles(c, other));
    }
    if c.len() < 8 * d + 5 {
        return Ok(DistResult::Hitting {
            x1: c.vertex_set(),
            x2: cover_cycle_four(&c, d)?,
            d,
        });
    }
    let sm = support_map(g, &c, d)?;
    let sel = select_subtrees(g, &c, d, &sm)?;
    let t = sel.rounds.len();
    if t >= 4 {
        let (a, b) = two_cycles_from_selection(g, &c, d, &sm, &sel)?;
        return Ok(DistResult::TwoCycles(a, b));
    }
    if t == 0 {
        let v0 = *c.vertices().iter().min().expect("cycle is nonempty");
        return Ok(DistResult::Hitting {
            x1: VertexSet::singleton(v0),
            x2: VertexSet::singleton(v0),
            d,
        });
    }
    let x1 = sel.l.union(&sel.w);
    let mut x2 = sel.w.clone();
    for r in &sel.rounds {
        x2.insert(sm.anchor_of(r.a)?);
        x2.insert(sm.anchor_of(r.b)?);
    }
    Ok(DistResult::Hitting { x1, x2, d })
}

fn forest_outside(g: &Graph, x: &VertexSet, r: usize) -> bool {
    let covered = ball(g, x, r);
    let keep: Vec<bool> = g.vertices().map(|v| !covered.contains(v)).collect();
    is_forest_within(g, Some(&keep))
}

fn check(g: &Graph, d: usize, res: &DistResult) -> Result<()> {
    match res {
        DistResult::TwoCycles(a, b) => {
            if !a.is_valid_in(g) || !b.is_valid_in(g) {
                return Err(violation!("returned a non-cycle"));
            }
            let gap = set_distance(g, &a.vertex_set(), &b.vertex_set());
            if gap <= d {
                return Err(violation!("cycles at distance {gap} <= {d}"));
            }
        }
        DistResult::Hitting { x1, x2, .. } => {
            if x1.len() > 12 * (d + 1) || x2.len() > 12 {
                return Err(violation!("hitting sets of sizes {} and {} too large", x1.len(), x2.len()));
            }
            if !forest_outside(g, x1, 2 * d) {
                return Err(violation!("a cycle avoids B(X1, {})", 2 * d));
            }
            if !forest_outside(g, x2, 3 * d) {
                return Err(violation!("a cycle avoids B(X2, {})", 3 * d));
            }
        }
    }
    Ok(())
}
