use serde::{Deserialize, Serialize};

use super::connectivity::three_connectivity;
use super::oracle::{generic_rank, OracleConfig};
use super::pebble;
use super::sparsity::{violation_of, SparsityParams, Violation};
use crate::dim::Dim;
use crate::graph::{UndirectedView, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum Witness {
    /// Edge subset over its counting budget.
    Violation(Violation),
    /// Two vertices whose removal disconnects the graph.
    SeparatingPair {
        pair: [VertexId; 2],
    },
    RankDeficit {
        observed: usize,
        required: usize,
    },
    /// Fewer edges than the rank a rigid graph needs.
    EdgeCount {
        edges: usize,
        required: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RigidityVerdict {
    pub rigid: bool,
    pub minimally_rigid: bool,
    /// Rank found by the pebble game or the oracle, when computed.
    pub rank: Option<usize>,
    pub required_rank: usize,
    /// Which test decided the verdict.
    pub criterion: String,
    pub witness: Option<Witness>,
}

impl RigidityVerdict {
    fn base(rigid: bool, required: usize, criterion: &str) -> Self {
        RigidityVerdict {
            rigid,
            minimally_rigid: rigid,
            rank: None,
            required_rank: required,
            criterion: criterion.into(),
            witness: None,
        }
    }
}

fn base_case(g: &UndirectedView, dim: Dim) -> Option<RigidityVerdict> {
    let required = dim.rigid_rank(g.vertex_count());
    match g.vertex_count() {
        0 | 1 => Some(RigidityVerdict::base(true, required, "single vertex")),
        2 => {
            let mut v = RigidityVerdict::base(g.edge_count() == 1, required, "two vertices");
            v.rank = Some(g.edge_count());
            if !v.rigid {
                v.witness = Some(Witness::RankDeficit { observed: 0, required: 1 });
            }
            Some(v)
        }
        _ => None,
    }
}

/// Exact planar generic rigidity by the (2,3) pebble game.
pub fn laman_check_2d(g: &UndirectedView) -> RigidityVerdict {
    if let Some(v) = base_case(g, Dim::Two) {
        return v;
    }
    let n = g.vertex_count();
    let required = 2 * n - 3;
    let order: Vec<usize> = (0..g.edge_count()).collect();
    let out = pebble::run_laman(n, g.edges(), &order);
    let rank = out.accepted.len();
    let rigid = rank == required;
    let witness = if !rigid {
        Some(Witness::RankDeficit { observed: rank, required })
    } else {
        out.rejected.first().map(|r| Witness::Violation(violation_of(g, &r.circuit, SparsityParams::LAMAN_2D)))
    };
    RigidityVerdict {
        rigid,
        minimally_rigid: rigid && g.edge_count() == required,
        rank: Some(rank),
        required_rank: required,
        criterion: "pebble game (2,3)".into(),
        witness,
    }
}

/// Spatial rigidity: necessary conditions first, then the rank oracle.
pub fn rigid_3d_check(g: &UndirectedView, cfg: &OracleConfig) -> RigidityVerdict {
    if let Some(v) = base_case(g, Dim::Three) {
        return v;
    }
    let n = g.vertex_count();
    let required = 3 * n - 6;
    let mut v = RigidityVerdict::base(false, required, "edge count");
    if g.edge_count() < required {
        v.witness = Some(Witness::EdgeCount { edges: g.edge_count(), required });
        return v;
    }
    let conn = three_connectivity(g);
    if let Some(pair) = conn.separating_pair {
        v.criterion = "3-connectivity".into();
        v.witness = Some(Witness::SeparatingPair { pair });
        return v;
    }
    let rank = generic_rank(g, Dim::Three, cfg);
    v.rank = Some(rank);
    v.criterion = "generic rank oracle".into();
    if rank < required {
        v.witness = Some(Witness::RankDeficit { observed: rank, required });
        return v;
    }
    v.rigid = true;
    v.minimally_rigid = g.edge_count() == required;
    v
}

pub fn check_rigidity(g: &UndirectedView, dim: Dim, cfg: &OracleConfig) -> RigidityVerdict {
    match dim {
        Dim::Two => laman_check_2d(g),
        Dim::Three => rigid_3d_check(g, cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn view(n: usize, e: &[(usize, usize)]) -> UndirectedView {
        UndirectedView::from_index_pairs(n, e)
    }

    const K4: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

    #[test]
    fn planar_examples() {
        let t = laman_check_2d(&view(3, &[(0, 1), (1, 2), (0, 2)]));
        assert!(t.rigid && t.minimally_rigid && t.witness.is_none());

        let c = laman_check_2d(&view(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]));
        assert!(!c.rigid);
        assert_eq!(c.witness, Some(Witness::RankDeficit { observed: 4, required: 5 }));

        let k = laman_check_2d(&view(4, &K4));
        assert!(k.rigid && !k.minimally_rigid);
    }

    #[test]
    fn base_cases() {
        let cfg = OracleConfig::default();
        for dim in [Dim::Two, Dim::Three] {
            assert!(check_rigidity(&view(1, &[]), dim, &cfg).minimally_rigid);
            assert!(check_rigidity(&view(2, &[(0, 1)]), dim, &cfg).minimally_rigid);
            assert!(!check_rigidity(&view(2, &[]), dim, &cfg).rigid);
        }
    }

    #[test]
    fn spatial_examples() {
        let cfg = OracleConfig::default();
        let k4 = rigid_3d_check(&view(4, &K4), &cfg);
        assert!(k4.rigid && k4.minimally_rigid);

        let tri = rigid_3d_check(&view(3, &[(0, 1), (1, 2), (0, 2)]), &cfg);
        assert!(tri.minimally_rigid);

        let k4_minus = rigid_3d_check(&view(4, &K4[..5]), &cfg);
        assert_eq!(k4_minus.witness, Some(Witness::EdgeCount { edges: 5, required: 6 }));
    }

    #[test]
    fn verdict_serializes_camel_case() {
        let v = laman_check_2d(&view(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]));
        let json = serde_json::to_string(&v).unwrap();
        assert!(json.contains("\"minimallyRigid\":false"));
        assert!(json.contains("\"kind\":\"rankDeficit\""));
    }
}
