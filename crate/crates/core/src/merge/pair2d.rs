use super::feasibility::missing_unchecked;
use super::plan::{MergePlan, MergeStep, PlannedEdge, Rule};
use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::graph::{required_inter_edges, Edge, Formation, MetaFormation, UndirectedView, VertexId};
use crate::persistence::{is_persistent, ledger};
use crate::rigidity::{check_rigidity, OracleConfig};

pub(crate) fn require_persistent(fs: &[&Formation], dim: Dim, cfg: &OracleConfig) -> Result<()> {
    for (i, f) in fs.iter().enumerate() {
        if !is_persistent(f, dim, cfg)?.persistent {
            return Err(Error::NotPersistent { index: i, dim: dim.value() as u8 });
        }
    }
    Ok(())
}

pub(crate) fn merged_rigid(ga: &Formation, gb: &Formation, edges: &[Edge], dim: Dim, cfg: &OracleConfig) -> bool {
    let Ok(m) = MetaFormation::new(vec![ga.clone(), gb.clone()], edges.to_vec()) else {
        return false;
    };
    check_rigidity(&UndirectedView::of(&m.flatten()), dim, cfg).rigid
}

/// Plans the minimal planar merge of two persistent formations.
pub fn plan_pair_2d(ga: &Formation, gb: &Formation, cfg: &OracleConfig) -> Result<MergePlan> {
    require_persistent(&[ga, gb], Dim::Two, cfg)?;
    let edges = pair_edges_2d(ga, gb, cfg, 0)?;
    let merged = MetaFormation::new(vec![ga.clone(), gb.clone()], edges.iter().map(|p| p.edge).collect())?.flatten();
    let step = MergeStep {
        step: 0,
        left: vec![0],
        right: 1,
        edges: edges.len(),
        missing_dof_left: missing_unchecked(ga, Dim::Two),
        missing_dof_right: missing_unchecked(gb, Dim::Two),
        missing_dof_merged: missing_unchecked(&merged, Dim::Two),
        allocation: None,
    };
    Ok(MergePlan { dim: Dim::Two, edges, steps: vec![step], oracle: *cfg })
}

pub(crate) fn pair_edges_2d(
    ga: &Formation,
    gb: &Formation,
    cfg: &OracleConfig,
    step: usize,
) -> Result<Vec<PlannedEdge>> {
    let required = required_inter_edges(Dim::Two, &[ga.vertex_count(), gb.vertex_count()]);
    let mut sides = [(ga, gb), (gb, ga)];
    // Singletons spend their own DOFs first.
    sides.sort_by_key(|(f, _)| f.vertex_count() != 1);
    let mut cands: Vec<(VertexId, VertexId, usize)> = Vec::new();
    let mut budget: Vec<(VertexId, usize)> = Vec::new();
    for (own, other) in sides {
        let l = ledger(own, Dim::Two);
        let mut free: Vec<(VertexId, usize)> =
            l.vertices.iter().filter(|x| x.dof > 0).map(|x| (x.vertex, x.dof)).collect();
        free.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        for (v, dof) in free {
            let slot = budget.len();
            budget.push((v, dof));
            let mut heads = other.vertices().to_vec();
            heads.sort_unstable();
            cands.extend(heads.into_iter().map(|h| (v, h, slot)));
        }
    }
    let available: usize = budget.iter().map(|b| b.1).sum();
    if available < required {
        return Err(Error::InsufficientDof { available, required });
    }
    let mut search = Search {
        ga,
        gb,
        cfg,
        cands: &cands,
        used: vec![0; budget.len()],
        budget: budget.iter().map(|b| b.1).collect(),
        chosen: Vec::new(),
        required,
        incidence_ok: false,
    };
    if search.run(0) {
        return Ok(search
            .chosen
            .iter()
            .map(|&c| PlannedEdge {
                edge: Edge::new(cands[c].0, cands[c].1),
                rule: Rule::Pair2d,
                step,
                reversed: false,
            })
            .collect());
    }
    if search.incidence_ok {
        Err(Error::Infeasible("no rigid three-edge combination".into()))
    } else {
        Err(Error::UnsatisfiableIncidence(
            "inter-edges cannot touch two vertices of each multi-vertex formation".into(),
        ))
    }
}

struct Search<'a> {
    ga: &'a Formation,
    gb: &'a Formation,
    cfg: &'a OracleConfig,
    cands: &'a [(VertexId, VertexId, usize)],
    used: Vec<usize>,
    budget: Vec<usize>,
    chosen: Vec<usize>,
    required: usize,
    incidence_ok: bool,
}

impl Search<'_> {
    fn run(&mut self, from: usize) -> bool {
        if self.chosen.len() == self.required {
            return self.accept();
        }
        for c in from..self.cands.len() {
            let (t, h, slot) = self.cands[c];
            if self.used[slot] == self.budget[slot] {
                continue;
            }
            if self.chosen.iter().any(|&x| self.cands[x].0 == h && self.cands[x].1 == t) {
                continue;
            }
            self.used[slot] += 1;
            self.chosen.push(c);
            if self.run(c + 1) {
                return true;
            }
            self.chosen.pop();
            self.used[slot] -= 1;
        }
        false
    }

    fn accept(&mut self) -> bool {
        for f in [self.ga, self.gb] {
            if f.vertex_count() < 2 {
                continue;
            }
            let mut touched: Vec<VertexId> = self
                .chosen
                .iter()
                .flat_map(|&c| [self.cands[c].0, self.cands[c].1])
                .filter(|&v| f.contains(v))
                .collect();
            touched.sort_unstable();
            touched.dedup();
            if touched.len() < 2 {
                return false;
            }
        }
        self.incidence_ok = true;
        let edges: Vec<Edge> = self.chosen.iter().map(|&c| Edge::new(self.cands[c].0, self.cands[c].1)).collect();
        merged_rigid(self.ga, self.gb, &edges, Dim::Two, self.cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::persistence::merged_persistence;

    fn triangle(a: VertexId) -> Formation {
        Formation::from_pairs(&[a, a + 1, a + 2], &[(a + 1, a), (a + 2, a), (a + 2, a + 1)]).unwrap()
    }

    #[test]
    fn two_triangles() {
        let cfg = OracleConfig::default();
        let (a, b) = (triangle(1), triangle(4));
        let plan = plan_pair_2d(&a, &b, &cfg).unwrap();
        assert_eq!(plan.inter_edges(), vec![Edge::new(1, 4), Edge::new(1, 5), Edge::new(2, 4)]);
        let m = plan.apply(&[a, b]).unwrap();
        assert!(merged_persistence(&m, Dim::Two, &cfg).unwrap().persistent);
        assert_eq!(plan.steps[0].missing_dof_merged, 0);
    }

    #[test]
    fn triangle_and_singleton() {
        let plan = plan_pair_2d(&triangle(1), &Formation::singleton(9), &OracleConfig::default()).unwrap();
        assert_eq!(plan.inter_edges(), vec![Edge::new(9, 1), Edge::new(9, 2)]);
    }

    #[test]
    fn two_singletons() {
        let plan = plan_pair_2d(&Formation::singleton(1), &Formation::singleton(2), &OracleConfig::default()).unwrap();
        assert_eq!(plan.edges.len(), 1);
    }

    #[test]
    fn no_local_dofs() {
        // Every vertex has out-degree 2: a cyclic K4 orientation with no DOF.
        let spent = |a: VertexId| {
            Formation::from_pairs(
                &[a, a + 1, a + 2, a + 3, a + 4],
                &[
                    (a, a + 1),
                    (a, a + 2),
                    (a + 1, a + 2),
                    (a + 1, a + 3),
                    (a + 2, a + 3),
                    (a + 2, a + 4),
                    (a + 3, a + 4),
                    (a + 3, a),
                    (a + 4, a),
                    (a + 4, a + 1),
                ],
            )
            .unwrap()
        };
        let cfg = OracleConfig::default();
        assert!(is_persistent(&spent(1), Dim::Two, &cfg).unwrap().persistent);
        assert!(matches!(
            plan_pair_2d(&spent(1), &spent(10), &cfg),
            Err(Error::InsufficientDof { available: 0, required: 3 })
        ));
    }
}
