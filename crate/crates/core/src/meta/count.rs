use serde::{Deserialize, Serialize};

use crate::dim::Dim;
use crate::graph::{Edge, MetaFormation, VertexId};

/// Meta-vertices touched by a set of inter-edges, split by how they are
/// touched. In the plane `k` stays empty and `j` holds the singly touched
/// meta-vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetaCount {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub k: Vec<usize>,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MetaCountViolation {
    pub edges: Vec<Edge>,
    pub count: MetaCount,
}

pub fn meta_count(meta: &MetaFormation, dim: Dim, subset: &[Edge]) -> MetaCount {
    let mut touched: Vec<Vec<VertexId>> = vec![Vec::new(); meta.meta_vertices().len()];
    for e in subset {
        for v in [e.tail, e.head] {
            let m = meta.owner(v).expect("inter-edge endpoint");
            if !touched[m].contains(&v) {
                touched[m].push(v);
            }
        }
    }
    classify_touched(meta, dim, &touched)
}

pub(crate) fn classify_touched(meta: &MetaFormation, dim: Dim, touched: &[Vec<VertexId>]) -> MetaCount {
    let mut c = MetaCount { i: Vec::new(), j: Vec::new(), k: Vec::new(), bound: 0 };
    let mut incident = 0;
    for (m, vs) in touched.iter().enumerate() {
        incident += vs.len();
        match (dim, vs.len()) {
            (_, 0) => {}
            (Dim::Two, 1) => c.j.push(m),
            (Dim::Two, _) => c.i.push(m),
            (Dim::Three, 1) => c.k.push(m),
            (Dim::Three, 2) => {
                if meta.meta_vertices()[m].has_pair(vs[0], vs[1]) {
                    c.j.push(m)
                } else {
                    c.i.push(m)
                }
            }
            (Dim::Three, _) => c.i.push(m),
        }
    }
    let raw = match dim {
        Dim::Two => 3 * c.i.len() + 2 * c.j.len(),
        Dim::Three => 6 * c.i.len() + 5 * c.j.len() + 3 * c.k.len(),
    };
    let offset = dim.max_total_dof();
    c.bound = if dim == Dim::Three && incident == 2 { 1 } else { raw.saturating_sub(offset) };
    c
}

/// Flags `subset` when it exceeds the spatial meta-counting bound.
pub fn meta_count_violation_3d(meta: &MetaFormation, subset: &[Edge]) -> Option<MetaCountViolation> {
    let count = meta_count(meta, Dim::Three, subset);
    (subset.len() > count.bound).then(|| MetaCountViolation { edges: subset.to_vec(), count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Formation;

    fn k4(a: VertexId) -> Formation {
        let v: Vec<VertexId> = (a..a + 4).collect();
        let mut e = Vec::new();
        for x in 0..4 {
            for y in 0..x {
                e.push((a + x, a + y));
            }
        }
        Formation::from_pairs(&v, &e).unwrap()
    }

    fn two_tetra(edges: &[(VertexId, VertexId)]) -> MetaFormation {
        MetaFormation::new(vec![k4(1), k4(5)], edges.iter().map(|&p| Edge::from(p)).collect()).unwrap()
    }

    #[test]
    fn six_spread_edges_pass() {
        let m = two_tetra(&[(1, 5), (1, 6), (2, 6), (2, 7), (3, 7), (3, 5)]);
        assert!(meta_count_violation_3d(&m, m.inter_edges()).is_none());
    }

    #[test]
    fn seven_edges_violate() {
        let m = two_tetra(&[(1, 5), (1, 6), (2, 6), (2, 7), (3, 7), (3, 5), (4, 8)]);
        let v = meta_count_violation_3d(&m, m.inter_edges()).unwrap();
        assert_eq!(v.count.bound, 6);
    }

    #[test]
    fn single_vertex_side() {
        let m = two_tetra(&[(1, 5), (1, 6), (1, 7), (1, 8)]);
        let v = meta_count_violation_3d(&m, m.inter_edges()).unwrap();
        assert_eq!(v.count.bound, 3);
        assert_eq!(v.count.k, vec![0]);
        assert_eq!(v.count.i, vec![1]);
    }

    #[test]
    fn connected_pair_is_j() {
        let m = two_tetra(&[(1, 5), (2, 5)]);
        let c = meta_count(&m, Dim::Three, m.inter_edges());
        assert_eq!((c.i.len(), c.j.len(), c.k.len()), (0, 1, 1));
        assert_eq!(c.bound, 2);
    }

    #[test]
    fn planar_classes() {
        let t = |a| Formation::from_pairs(&[a, a + 1, a + 2], &[(a + 1, a), (a + 2, a), (a + 2, a + 1)]).unwrap();
        let m = MetaFormation::new(vec![t(1), t(4)], vec![Edge::new(1, 4), Edge::new(2, 4), Edge::new(3, 4)]).unwrap();
        let c = meta_count(&m, Dim::Two, m.inter_edges());
        assert_eq!(c.bound, 2);
    }
}
