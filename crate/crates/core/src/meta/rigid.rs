use serde::{Deserialize, Serialize};

use super::count::{classify_touched, MetaCountViolation};
use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::graph::{classify, Edge, Formation, MetaClass, MetaFormation, UndirectedView, VertexId};
use crate::persistence::{is_persistent, local_dof_compliance};
use crate::rigidity::{
    check_rigidity, independent_in_order, minimally_rigid_spanning, next_combination, pebble, OracleConfig,
    RigidityVerdict, Witness,
};

/// Largest inter-edge set screened by the spatial counting search.
pub const DEFAULT_META_SUBSET_CAP: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "status")]
pub enum Counting {
    /// A subset of the required size meeting every sub-count.
    Passed {
        selected: Vec<Edge>,
    },
    Failed {
        violation: Option<MetaCountViolation>,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum MetaWitness {
    Count(MetaCountViolation),
    Rigidity { witness: Witness },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MetaVerdict {
    pub dim: Dim,
    pub rigid: bool,
    pub edge_optimal: bool,
    pub class: MetaClass,
    pub required_inter_edges: usize,
    pub inter_edges: usize,
    /// Independent inter-edges retained after substitution.
    pub selected: Option<Vec<Edge>>,
    /// Counting evidence, reported apart from the rank evidence.
    pub counting: Counting,
    pub rank: RigidityVerdict,
    pub criterion: String,
    pub witness: Option<MetaWitness>,
    pub oracle: OracleConfig,
}

/// Meta-formation with every meta-vertex replaced by its canonical
/// minimally rigid spanning subgraph.
pub fn substitute(meta: &MetaFormation, dim: Dim, cfg: &OracleConfig) -> Result<MetaFormation> {
    let mut out = meta.clone();
    for (i, m) in meta.meta_vertices().iter().enumerate() {
        let keep = minimally_rigid_spanning(&UndirectedView::of(m), dim, &[], cfg).map_err(|e| match e {
            Error::NotRigid { .. } => Error::NotRigidMetaVertex { index: i, dim: dim.value() as u8 },
            other => other,
        })?;
        let mut keep = keep;
        keep.sort_unstable();
        let edges: Vec<Edge> = keep.iter().map(|&k| m.edges()[k]).collect();
        out = out.with_meta_vertex(i, m.with_edges(edges)?)?;
    }
    Ok(out)
}

fn internal_count(meta: &MetaFormation) -> usize {
    meta.meta_vertices().iter().map(Formation::edge_count).sum()
}

fn sizes(meta: &MetaFormation) -> Vec<usize> {
    meta.meta_vertices().iter().map(Formation::vertex_count).collect()
}

pub fn meta_rigid(meta: &MetaFormation, dim: Dim, cfg: &OracleConfig) -> Result<MetaVerdict> {
    match dim {
        Dim::Two => meta_rigid_2d(meta, cfg),
        Dim::Three => meta_rigid_3d(meta, cfg, DEFAULT_META_SUBSET_CAP),
    }
}

/// Planar meta-rigidity by substituting minimally rigid gadgets and
/// running the pebble game with internal edges first.
pub fn meta_rigid_2d(meta: &MetaFormation, cfg: &OracleConfig) -> Result<MetaVerdict> {
    let class = classify(meta, Dim::Two, cfg)?;
    if meta.vertex_count() < 2 {
        return Err(Error::InvalidOperation("meta-formation needs at least 2 vertices".into()));
    }
    let required = class.required_inter_edges(&sizes(meta));
    let sub = substitute(meta, Dim::Two, cfg)?;
    let flat = sub.flatten();
    let view = UndirectedView::of(&flat);
    let base = internal_count(&sub);
    let order: Vec<usize> = (0..view.edge_count()).collect();
    let game = pebble::run_laman(view.vertex_count(), view.edges(), &order);
    debug_assert!(game.rejected.iter().all(|r| r.edge >= base));
    let selected: Vec<Edge> = game.accepted.iter().filter(|&&e| e >= base).map(|&e| flat.edges()[e]).collect();
    let rank = check_rigidity(&view, Dim::Two, cfg);
    let rigid = rank.rigid;
    let violation = game.rejected.first().map(|r| {
        let edges: Vec<Edge> = r.circuit.iter().filter(|&&e| e >= base).map(|&e| flat.edges()[e]).collect();
        let count = super::count::meta_count(meta, Dim::Two, &edges);
        MetaCountViolation { edges, count }
    });
    let (counting, witness) = if rigid {
        (Counting::Passed { selected: selected.clone() }, None)
    } else {
        let w = match &violation {
            Some(v) => MetaWitness::Count(v.clone()),
            None => MetaWitness::Rigidity { witness: rank.witness.clone().expect("non-rigid verdict has a witness") },
        };
        (Counting::Failed { violation }, Some(w))
    };
    Ok(MetaVerdict {
        dim: Dim::Two,
        rigid,
        edge_optimal: rigid && meta.inter_edges().len() == required,
        class,
        required_inter_edges: required,
        inter_edges: meta.inter_edges().len(),
        selected: rigid.then_some(selected),
        counting,
        rank,
        criterion: "pebble game on substituted meta-vertices".into(),
        witness,
        oracle: *cfg,
    })
}

/// Spatial meta-rigidity: the counting screen gives necessary evidence,
/// the rank oracle on the substituted graph decides.
pub fn meta_rigid_3d(meta: &MetaFormation, cfg: &OracleConfig, cap: usize) -> Result<MetaVerdict> {
    let class = classify(meta, Dim::Three, cfg)?;
    if meta.vertex_count() < 3 {
        return Err(Error::InvalidOperation("meta-formation needs at least 3 vertices".into()));
    }
    let required = class.required_inter_edges(&sizes(meta));
    let counting = counting_screen(meta, required, cap);

    let sub = substitute(meta, Dim::Three, cfg)?;
    let flat = sub.flatten();
    let view = UndirectedView::of(&flat);
    let base = internal_count(&sub);
    let rank = check_rigidity(&view, Dim::Three, cfg);
    let rigid = rank.rigid;
    let selected = rigid.then(|| {
        let order: Vec<usize> = (0..view.edge_count()).collect();
        independent_in_order(&view, Dim::Three, cfg, &order)
            .into_iter()
            .filter(|&e| e >= base)
            .map(|e| flat.edges()[e])
            .collect::<Vec<_>>()
    });
    let witness = if rigid {
        None
    } else {
        match &counting {
            Counting::Failed { violation: Some(v) } => Some(MetaWitness::Count(v.clone())),
            _ => rank.witness.clone().map(|witness| MetaWitness::Rigidity { witness }),
        }
    };
    Ok(MetaVerdict {
        dim: Dim::Three,
        rigid,
        edge_optimal: rigid && meta.inter_edges().len() == required,
        class,
        required_inter_edges: required,
        inter_edges: meta.inter_edges().len(),
        selected,
        counting,
        rank,
        criterion: "rank oracle on substituted meta-vertices (counting is necessary only)".into(),
        witness,
        oracle: *cfg,
    })
}

struct Screen<'a> {
    meta: &'a MetaFormation,
    ends: Vec<[(usize, VertexId); 2]>,
}

impl Screen<'_> {
    fn violates(&self, subset: &[usize]) -> bool {
        let mut touched: Vec<Vec<VertexId>> = vec![Vec::new(); self.meta.meta_vertices().len()];
        for &e in subset {
            for (m, v) in self.ends[e] {
                if !touched[m].contains(&v) {
                    touched[m].push(v);
                }
            }
        }
        subset.len() > classify_touched(self.meta, Dim::Three, &touched).bound
    }

    /// Does adding `e` to `chosen` create a violating subset?
    fn extends(&self, chosen: &[usize], e: usize) -> bool {
        let n = chosen.len();
        let mut sub = Vec::with_capacity(n + 1);
        for mask in 0u32..(1 << n) {
            sub.clear();
            sub.extend((0..n).filter(|b| mask >> b & 1 == 1).map(|b| chosen[b]));
            sub.push(e);
            if self.violates(&sub) {
                return false;
            }
        }
        true
    }

    fn search(&self, next: usize, chosen: &mut Vec<usize>, want: usize) -> bool {
        if chosen.len() == want {
            return true;
        }
        let total = self.ends.len();
        for e in next..total {
            if total - e < want - chosen.len() {
                break;
            }
            if self.extends(chosen, e) {
                chosen.push(e);
                if self.search(e + 1, chosen, want) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

fn counting_screen(meta: &MetaFormation, required: usize, cap: usize) -> Counting {
    let em = meta.inter_edges();
    if em.len() > cap {
        return Counting::Skipped { reason: format!("{} inter-edges exceed the subset search cap {cap}", em.len()) };
    }
    let screen = Screen {
        meta,
        ends: em
            .iter()
            .map(|e| [(meta.owner(e.tail).unwrap(), e.tail), (meta.owner(e.head).unwrap(), e.head)])
            .collect(),
    };
    let mut chosen = Vec::new();
    if em.len() >= required && screen.search(0, &mut chosen, required) {
        return Counting::Passed { selected: chosen.iter().map(|&e| em[e]).collect() };
    }
    for size in 1..=em.len() {
        let mut c: Vec<usize> = (0..size).collect();
        loop {
            if screen.violates(&c) {
                let edges: Vec<Edge> = c.iter().map(|&e| em[e]).collect();
                let count = super::count::meta_count(meta, Dim::Three, &edges);
                return Counting::Failed { violation: Some(MetaCountViolation { edges, count }) };
            }
            if !next_combination(&mut c, em.len()) {
                break;
            }
        }
    }
    Counting::Failed { violation: None }
}

/// Rigid, with exactly the minimal number of inter-edges.
pub fn edge_optimal_rigid(meta: &MetaFormation, dim: Dim, cfg: &OracleConfig) -> Result<bool> {
    Ok(meta_rigid(meta, dim, cfg)?.edge_optimal)
}

/// Edge-optimal rigid, with every inter-edge leaving a local DOF.
pub fn edge_optimal_persistent(meta: &MetaFormation, dim: Dim, cfg: &OracleConfig) -> Result<bool> {
    for (i, m) in meta.meta_vertices().iter().enumerate() {
        if !is_persistent(m, dim, cfg)?.persistent {
            return Err(Error::NotPersistent { index: i, dim: dim.value() as u8 });
        }
    }
    Ok(local_dof_compliance(meta, dim).compliant && edge_optimal_rigid(meta, dim, cfg)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(a: VertexId) -> Formation {
        Formation::from_pairs(&[a, a + 1, a + 2], &[(a + 1, a), (a + 2, a), (a + 2, a + 1)]).unwrap()
    }

    fn tetra(a: VertexId) -> Formation {
        let v: Vec<VertexId> = (a..a + 4).collect();
        let mut e = Vec::new();
        for x in 1..4 {
            for y in 0..x {
                e.push((a + x, a + y));
            }
        }
        Formation::from_pairs(&v, &e).unwrap()
    }

    fn edges(p: &[(VertexId, VertexId)]) -> Vec<Edge> {
        p.iter().map(|&x| Edge::from(x)).collect()
    }

    #[test]
    fn two_triangles_three_edges() {
        let m = MetaFormation::new(vec![triangle(1), triangle(4)], edges(&[(1, 4), (1, 5), (2, 4)])).unwrap();
        let v = meta_rigid_2d(&m, &OracleConfig::default()).unwrap();
        assert!(v.rigid && v.edge_optimal);
        assert_eq!(v.selected.unwrap().len(), 3);
    }

    #[test]
    fn star_into_one_vertex() {
        let m = MetaFormation::new(vec![triangle(1), triangle(4)], edges(&[(1, 4), (2, 4), (3, 4)])).unwrap();
        let v = meta_rigid_2d(&m, &OracleConfig::default()).unwrap();
        assert!(!v.rigid);
        match v.witness {
            Some(MetaWitness::Count(c)) => {
                assert_eq!(c.edges.len(), 3);
                assert_eq!(c.count.bound, 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn triangle_and_singleton() {
        let m = MetaFormation::new(vec![triangle(1), Formation::singleton(7)], edges(&[(7, 1), (7, 2)])).unwrap();
        let v = meta_rigid_2d(&m, &OracleConfig::default()).unwrap();
        assert!(v.rigid && v.edge_optimal);
        assert_eq!(v.required_inter_edges, 2);
    }

    #[test]
    fn double_banana_counts_but_flexes() {
        let m = MetaFormation::new(
            vec![
                Formation::from_pairs(&[1, 3, 4, 5], &[(3, 1), (4, 1), (5, 1), (4, 3), (5, 3), (5, 4)]).unwrap(),
                Formation::from_pairs(&[2, 6, 7, 8], &[(6, 2), (7, 2), (8, 2), (7, 6), (8, 6), (8, 7)]).unwrap(),
            ],
            edges(&[(2, 3), (2, 4), (2, 5), (1, 6), (1, 7), (1, 8)]),
        )
        .unwrap();
        let v = meta_rigid_3d(&m, &OracleConfig::default(), DEFAULT_META_SUBSET_CAP).unwrap();
        assert!(matches!(v.counting, Counting::Passed { .. }));
        assert!(!v.rigid);
    }

    #[test]
    fn two_tetrahedra_spread() {
        let m = MetaFormation::new(vec![tetra(1), tetra(5)], edges(&[(1, 5), (1, 6), (2, 6), (2, 7), (3, 7), (3, 5)]))
            .unwrap();
        let v = meta_rigid_3d(&m, &OracleConfig::default(), DEFAULT_META_SUBSET_CAP).unwrap();
        assert!(v.rigid && v.edge_optimal);
    }

    #[test]
    fn tetra_and_singleton() {
        let m = MetaFormation::new(vec![tetra(1), Formation::singleton(9)], edges(&[(9, 1), (9, 2), (9, 3)])).unwrap();
        let v = meta_rigid_3d(&m, &OracleConfig::default(), DEFAULT_META_SUBSET_CAP).unwrap();
        assert!(v.rigid && v.edge_optimal);
        assert_eq!(v.required_inter_edges, 3);
    }

    #[test]
    fn counting_skipped_over_cap() {
        let m = MetaFormation::new(vec![tetra(1), Formation::singleton(9)], edges(&[(9, 1), (9, 2), (9, 3)])).unwrap();
        let v = meta_rigid_3d(&m, &OracleConfig::default(), 2).unwrap();
        assert!(matches!(v.counting, Counting::Skipped { .. }));
        assert!(v.rigid);
    }

    #[test]
    fn edge_optimality() {
        let cfg = OracleConfig::default();
        let m = MetaFormation::new(vec![triangle(1), triangle(4)], edges(&[(1, 4), (1, 5), (2, 4)])).unwrap();
        assert!(edge_optimal_persistent(&m, Dim::Two, &cfg).unwrap());
        let extra = m.with_inter_edges(edges(&[(1, 4), (1, 5), (2, 4), (6, 3)])).unwrap();
        assert!(!edge_optimal_rigid(&extra, Dim::Two, &cfg).unwrap());
        let rerooted = m.with_inter_edges(edges(&[(1, 4), (1, 5), (3, 4)])).unwrap();
        assert!(edge_optimal_rigid(&rerooted, Dim::Two, &cfg).unwrap());
        assert!(!edge_optimal_persistent(&rerooted, Dim::Two, &cfg).unwrap());
    }
}
