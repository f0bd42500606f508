use super::feasibility::{feasibility, missing_unchecked, Reason};
use super::ops::{base_patterns, TARGET_SLOTS};
use super::pair2d::merged_rigid;
use super::plan::{Allocation, MergePlan, MergeStep, PlannedEdge, Rule};
use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::graph::{required_inter_edges, Edge, Formation, MetaFormation, VertexId};
use crate::persistence::ledger;
use crate::rigidity::OracleConfig;

/// Upper bound on rank-checked candidates per pairwise merge.
const MAX_RANK_CHECKS: usize = 4000;

/// Bipartite edge pattern between `x` source slots and `y` target slots.
#[derive(Debug, Clone)]
struct Pattern {
    name: String,
    x: usize,
    y: usize,
    edges: Vec<(usize, usize, Rule)>,
}

impl Pattern {
    fn x_degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.x).map(|s| self.edges.iter().filter(|e| e.0 == s).count()).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

fn catalog() -> Vec<Pattern> {
    base_patterns()
        .into_iter()
        .map(|(name, p)| Pattern {
            name: name.to_string(),
            x: p.sources,
            y: TARGET_SLOTS,
            edges: p.edges.iter().map(|e| (e.a, e.b, e.rule)).collect(),
        })
        .collect()
}

fn small_pattern(small: usize, big: usize) -> Pattern {
    let y = big.min(3);
    let edges: Vec<(usize, usize)> = match (small, y) {
        (1, _) => (0..y).map(|b| (0, b)).collect(),
        (2, 2) => vec![(0, 0), (0, 1), (1, 0), (1, 1)],
        (2, _) => vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)],
        _ => unreachable!("small side has one or two vertices"),
    };
    Pattern {
        name: format!("small-{small}x{}", if big >= 3 { "n".to_string() } else { big.to_string() }),
        x: small,
        y,
        edges: edges.into_iter().map(|(a, b)| (a, b, Rule::SmallGraph)).collect(),
    }
}

/// A free vertex and its DOF count.
#[derive(Debug, Clone, Copy)]
struct Free {
    vertex: VertexId,
    side: usize,
    dof: usize,
    leader: bool,
}

/// Plans the minimal spatial merge of two persistent formations.
pub fn plan_pair_3d(ga: &Formation, gb: &Formation, cfg: &OracleConfig) -> Result<MergePlan> {
    let (edges, allocation) = pair_edges_3d(ga, gb, cfg, 0)?;
    let merged = MetaFormation::new(vec![ga.clone(), gb.clone()], edges.iter().map(|p| p.edge).collect())?.flatten();
    let step = MergeStep {
        step: 0,
        left: vec![0],
        right: 1,
        edges: edges.len(),
        missing_dof_left: missing_unchecked(ga, Dim::Three),
        missing_dof_right: missing_unchecked(gb, Dim::Three),
        missing_dof_merged: missing_unchecked(&merged, Dim::Three),
        allocation: Some(allocation),
    };
    Ok(MergePlan { dim: Dim::Three, edges, steps: vec![step], oracle: *cfg })
}

pub(crate) fn pair_edges_3d(
    ga: &Formation,
    gb: &Formation,
    cfg: &OracleConfig,
    step: usize,
) -> Result<(Vec<PlannedEdge>, Allocation)> {
    let gate = feasibility(&[ga.clone(), gb.clone()], Dim::Three, cfg)?;
    // A pair of singletons merges with one edge even though a 3D
    // collection of two vertices is rejected as too small.
    if !gate.feasible && gate.reason != Reason::TooFewVertices {
        return Err(Error::Infeasible(gate.reason.code().into()));
    }
    let sides = [ga, gb];
    let required = required_inter_edges(Dim::Three, &[ga.vertex_count(), gb.vertex_count()]);
    let mut free = Vec::new();
    for (side, f) in sides.iter().enumerate() {
        let l = ledger(f, Dim::Three);
        for x in l.vertices.iter().filter(|x| x.dof > 0) {
            free.push(Free { vertex: x.vertex, side, dof: x.dof, leader: x.out_degree == 0 });
        }
    }
    free.sort_by(|a, b| b.dof.cmp(&a.dof).then(a.side.cmp(&b.side)).then(a.vertex.cmp(&b.vertex)));
    let available: usize = free.iter().map(|f| f.dof).sum();
    if available < required {
        return Err(Error::InsufficientDof { available, required });
    }
    let leaders: Vec<VertexId> = sides.iter().flat_map(|f| ledger(f, Dim::Three).leaders).collect();
    let both_big = ga.vertex_count() >= 3 && gb.vertex_count() >= 3;
    let selections = selections(&free, required, both_big, &leaders, available);

    let mut checks = 0;
    'search: for sel in &selections {
        let counts = |side: usize| -> Vec<(VertexId, usize)> {
            free.iter().zip(sel).filter(|(f, &c)| f.side == side && c > 0).map(|(f, &c)| (f.vertex, c)).collect()
        };
        let picked = [counts(0), counts(1)];
        let sums = [picked[0].iter().map(|p| p.1).sum::<usize>(), picked[1].iter().map(|p| p.1).sum::<usize>()];
        for (x_side, pattern) in patterns_for(&sides, &picked, sums) {
            let y_side = 1 - x_side;
            for cand in realize(&pattern, sides[x_side], sides[y_side], &picked[x_side], &picked[y_side]) {
                checks += 1;
                let edges: Vec<Edge> = cand.iter().map(|c| c.0).collect();
                if merged_rigid(ga, gb, &edges, Dim::Three, cfg) {
                    let alloc = |s: usize| {
                        let mut a: Vec<usize> = picked[s].iter().map(|p| p.1).collect();
                        a.sort_unstable_by(|x, y| y.cmp(x));
                        a
                    };
                    let partition = if both_big {
                        format!("{}-{}", sums[0].max(sums[1]), sums[0].min(sums[1]))
                    } else {
                        "small".to_string()
                    };
                    let planned = cand
                        .into_iter()
                        .map(|(edge, rule, reversed)| PlannedEdge { edge, rule, step, reversed })
                        .collect();
                    return Ok((
                        planned,
                        Allocation { left: alloc(0), right: alloc(1), partition, pattern: pattern.name.clone() },
                    ));
                }
                if checks >= MAX_RANK_CHECKS {
                    break 'search;
                }
            }
        }
    }
    let sig: Vec<String> = free.iter().map(|f| format!("{}:{}", f.vertex, f.dof)).collect();
    Err(Error::CatalogMiss(format!("[{}] for sizes ({}, {})", sig.join(", "), ga.vertex_count(), gb.vertex_count())))
}

/// All per-vertex DOF selections summing to `required`, best first.
fn selections(free: &[Free], required: usize, spread: bool, leaders: &[VertexId], available: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; free.len()];
    enumerate(free, 0, required, &mut cur, &mut out);
    out.retain(|sel| {
        let used = sel.iter().filter(|&&c| c > 0).count();
        let idle_leaders =
            leaders.iter().filter(|&&l| !free.iter().zip(sel).any(|(f, &c)| f.vertex == l && c > 0)).count();
        (!spread || used >= 3) && idle_leaders <= 1
    });
    let all_on_leaders = |sel: &Vec<usize>| {
        available > required && free.iter().zip(sel).all(|(f, &c)| f.dof == c || (f.leader && c == 0))
    };
    // Stable sort keeps the greedy (largest-first) enumeration order.
    out.sort_by_key(all_on_leaders);
    out
}

fn enumerate(free: &[Free], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    if i == free.len() {
        return;
    }
    let rest: usize = free[i..].iter().map(|f| f.dof).sum();
    if rest < left {
        return;
    }
    for c in (0..=free[i].dof.min(left)).rev() {
        cur[i] = c;
        enumerate(free, i + 1, left - c, cur, out);
    }
    cur[i] = 0;
}

/// Patterns to try, with the side playing the source slots.
fn patterns_for(
    sides: &[&Formation; 2],
    picked: &[Vec<(VertexId, usize)>; 2],
    sums: [usize; 2],
) -> Vec<(usize, Pattern)> {
    let (na, nb) = (sides[0].vertex_count(), sides[1].vertex_count());
    if na.min(nb) <= 2 {
        let x_side = if na <= nb { 0 } else { 1 };
        return vec![(x_side, small_pattern(sides[x_side].vertex_count(), sides[1 - x_side].vertex_count()))];
    }
    let first = if sums[0] >= sums[1] { 0 } else { 1 };
    let mut out = Vec::new();
    for x_side in [first, 1 - first] {
        let mut alloc: Vec<usize> = picked[x_side].iter().map(|p| p.1).collect();
        alloc.sort_unstable_by(|a, b| b.cmp(a));
        let mut pats = catalog();
        // The base matching this side's allocation goes first.
        pats.sort_by_key(|p| p.x_degrees() != alloc);
        out.extend(pats.into_iter().map(|p| (x_side, p)));
    }
    out
}

/// Slot assignments and orientations meeting the selected out-degrees.
fn realize(
    p: &Pattern,
    fx: &Formation,
    fy: &Formation,
    px: &[(VertexId, usize)],
    py: &[(VertexId, usize)],
) -> Vec<Vec<(Edge, Rule, bool)>> {
    if px.len() > p.x || py.len() > p.y || fx.vertex_count() < p.x || fy.vertex_count() < p.y {
        return Vec::new();
    }
    let mut out = Vec::new();
    for xs in assignments(p.x, fx, px) {
        for ys in assignments(p.y, fy, py) {
            let need = |v: VertexId| px.iter().chain(py).find(|q| q.0 == v).map_or(0, |q| q.1);
            let ends: Vec<(VertexId, VertexId, Rule)> = p.edges.iter().map(|&(a, b, r)| (xs[a], ys[b], r)).collect();
            let mut budget: Vec<(VertexId, usize)> = xs.iter().chain(&ys).map(|&v| (v, need(v))).collect();
            let mut orient = Vec::new();
            orientations(&ends, 0, &mut budget, &mut orient, &mut out);
        }
    }
    out
}

fn orientations(
    ends: &[(VertexId, VertexId, Rule)],
    i: usize,
    budget: &mut Vec<(VertexId, usize)>,
    cur: &mut Vec<(Edge, Rule, bool)>,
    out: &mut Vec<Vec<(Edge, Rule, bool)>>,
) {
    if i == ends.len() {
        if budget.iter().all(|b| b.1 == 0) {
            out.push(cur.clone());
        }
        return;
    }
    let (x, y, rule) = ends[i];
    for (tail, head, reversed) in [(x, y, false), (y, x, true)] {
        let k = budget.iter().position(|b| b.0 == tail).expect("slot vertex");
        if budget[k].1 == 0 {
            continue;
        }
        budget[k].1 -= 1;
        cur.push((Edge::new(tail, head), rule, reversed));
        orientations(ends, i + 1, budget, cur, out);
        cur.pop();
        budget[k].1 += 1;
    }
}

/// Fills `slots` slots with the selected vertices placed injectively and the
/// remaining slots taken by unselected vertices in ascending id order.
fn assignments(slots: usize, f: &Formation, picked: &[(VertexId, usize)]) -> Vec<Vec<VertexId>> {
    let mut rest: Vec<VertexId> = f.vertices().iter().copied().filter(|v| !picked.iter().any(|p| p.0 == *v)).collect();
    rest.sort_unstable();
    let mut out = Vec::new();
    let mut cur: Vec<Option<VertexId>> = vec![None; slots];
    place(picked, 0, &mut cur, &rest, &mut out);
    out
}

fn place(
    picked: &[(VertexId, usize)],
    i: usize,
    cur: &mut Vec<Option<VertexId>>,
    rest: &[VertexId],
    out: &mut Vec<Vec<VertexId>>,
) {
    if i == picked.len() {
        let mut fill = rest.iter();
        let full: Option<Vec<VertexId>> = cur.iter().map(|s| s.or_else(|| fill.next().copied())).collect();
        if let Some(full) = full {
            out.push(full);
        }
        return;
    }
    for s in 0..cur.len() {
        if cur[s].is_none() {
            cur[s] = Some(picked[i].0);
            place(picked, i + 1, cur, rest, out);
            cur[s] = None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::persistence::merged_persistence;

    fn k4(a: VertexId, edges: &[(VertexId, VertexId)]) -> Formation {
        let e: Vec<(VertexId, VertexId)> = edges.iter().map(|&(x, y)| (a + x, a + y)).collect();
        Formation::from_pairs(&[a, a + 1, a + 2, a + 3], &e).unwrap()
    }

    /// Tetrahedron with allocation (3, 2, 1).
    fn tetra(a: VertexId) -> Formation {
        k4(a, &[(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)])
    }

    #[test]
    fn small_sizes_follow_table() {
        let cfg = OracleConfig::default();
        let pair = |a: VertexId| Formation::from_pairs(&[a, a + 1], &[(a + 1, a)]).unwrap();
        let s = |a| Formation::singleton(a);
        let cases: Vec<(Formation, Formation, usize)> = vec![
            (s(1), s(2), 1),
            (s(1), pair(2), 2),
            (pair(1), pair(3), 4),
            (s(1), tetra(2), 3),
            (pair(1), tetra(3), 5),
        ];
        for (a, b, want) in cases {
            let plan = plan_pair_3d(&a, &b, &cfg).unwrap();
            assert_eq!(plan.edges.len(), want);
            let m = plan.apply(&[a, b]).unwrap();
            let v = merged_persistence(&m, Dim::Three, &cfg).unwrap();
            assert!(v.persistent && v.structurally_persistent, "{:?}", plan.inter_edges());
        }
    }

    #[test]
    fn six_zero_from_tetrahedron() {
        let cfg = OracleConfig::default();
        let a = tetra(1);
        let b = Formation::from_pairs(
            &[10, 11, 12, 13, 14, 15, 16],
            &[
                (10, 11),
                (10, 12),
                (10, 13),
                (11, 12),
                (11, 13),
                (11, 14),
                (12, 13),
                (12, 14),
                (12, 15),
                (13, 14),
                (13, 15),
                (13, 16),
                (14, 15),
                (14, 16),
                (14, 10),
                (15, 16),
                (15, 10),
                (15, 11),
                (16, 10),
                (16, 11),
                (16, 12),
            ],
        )
        .unwrap();
        assert_eq!(ledger(&b, Dim::Three).total_dof, 0);
        let plan = plan_pair_3d(&a, &b, &cfg).unwrap();
        assert_eq!(plan.edges.len(), 6);
        let mut tails: Vec<usize> =
            [1, 2, 3].iter().map(|&v| plan.edges.iter().filter(|p| p.edge.tail == v).count()).collect();
        tails.sort_unstable();
        assert_eq!(tails, vec![1, 2, 3]);
        assert_eq!(plan.steps[0].allocation.as_ref().unwrap().pattern, "3-2-1");
        let m = plan.apply(&[a, b]).unwrap();
        let v = merged_persistence(&m, Dim::Three, &cfg).unwrap();
        assert!(v.persistent && v.structurally_persistent);
    }

    /// K6 with every other vertex pointing at leader `a`, the rest a regular
    /// tournament.
    fn lone_leader(a: VertexId) -> Formation {
        let mut e = Vec::new();
        for i in 1..6 {
            e.push((a + i, a));
            for k in 1..3 {
                e.push((a + i, a + 1 + (i - 1 + k) % 5));
            }
        }
        Formation::from_pairs(&(a..a + 6).collect::<Vec<_>>(), &e).unwrap()
    }

    #[test]
    fn lone_leaders_cannot_merge() {
        let (a, b) = (lone_leader(1), lone_leader(10));
        assert_eq!(ledger(&a, Dim::Three).allocation(), vec![3]);
        let err = plan_pair_3d(&a, &b, &OracleConfig::default()).unwrap_err();
        assert_eq!(err, Error::Infeasible("3D-two-lone-leaders".into()));
    }
}
