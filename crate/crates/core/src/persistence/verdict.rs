use serde::{Deserialize, Serialize};

use super::ledger::{ledger, DofLedger};
use super::terminal::{first_terminal, terminal_subgraphs, DEFAULT_TERMINAL_CAP};
use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::graph::{Edge, Formation, MetaFormation, UndirectedView, VertexId};
use crate::rigidity::{check_rigidity, OracleConfig, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum PersistenceWitness {
    /// A terminal subgraph that is not rigid.
    NonRigidTerminal { retained: Vec<Edge>, removed: Vec<Edge>, rigidity: Option<Witness> },
    /// Persistent, but with too many leaders to be structurally persistent.
    Leaders { leaders: Vec<VertexId> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PersistenceVerdict {
    pub persistent: bool,
    pub structurally_persistent: bool,
    pub minimally_persistent: bool,
    pub criterion: String,
    pub terminal_subgraphs: Option<usize>,
    pub witness: Option<PersistenceWitness>,
    pub ledger: DofLedger,
    pub oracle: OracleConfig,
}

impl PersistenceVerdict {
    fn assemble(
        f: &Formation,
        dim: Dim,
        cfg: &OracleConfig,
        persistent: bool,
        minimally_rigid: bool,
        criterion: &str,
        witness: Option<PersistenceWitness>,
    ) -> Self {
        let ledger = ledger(f, dim);
        if persistent {
            debug_assert!(ledger.total_dof <= dim.max_total_dof());
        }
        let structural = persistent && (dim == Dim::Two || ledger.leaders.len() <= 1);
        let witness = match witness {
            None if persistent && !structural => Some(PersistenceWitness::Leaders { leaders: ledger.leaders.clone() }),
            w => w,
        };
        PersistenceVerdict {
            persistent,
            structurally_persistent: structural,
            minimally_persistent: persistent && minimally_rigid,
            criterion: criterion.into(),
            terminal_subgraphs: None,
            witness,
            ledger,
            oracle: *cfg,
        }
    }
}

pub fn is_persistent(f: &Formation, dim: Dim, cfg: &OracleConfig) -> Result<PersistenceVerdict> {
    is_persistent_with_cap(f, dim, cfg, DEFAULT_TERMINAL_CAP)
}

/// Persistent iff every terminal subgraph is rigid.
pub fn is_persistent_with_cap(f: &Formation, dim: Dim, cfg: &OracleConfig, cap: usize) -> Result<PersistenceVerdict> {
    let whole = check_rigidity(&UndirectedView::of(f), dim, cfg);
    let terminals = terminal_subgraphs(f, dim, cap)?;
    let mut witness = None;
    if whole.rigid {
        for t in &terminals {
            let sub = f.sub_edges(t.retained.clone());
            let v = check_rigidity(&UndirectedView::of(&sub), dim, cfg);
            if !v.rigid {
                witness = Some(PersistenceWitness::NonRigidTerminal {
                    retained: t.retained.clone(),
                    removed: t.removed.clone(),
                    rigidity: v.witness,
                });
                break;
            }
        }
    } else {
        let t = &terminals[0];
        witness = Some(PersistenceWitness::NonRigidTerminal {
            retained: t.retained.clone(),
            removed: t.removed.clone(),
            rigidity: whole.witness.clone(),
        });
    }
    let persistent = witness.is_none();
    let mut v = PersistenceVerdict::assemble(
        f,
        dim,
        cfg,
        persistent,
        whole.minimally_rigid,
        "rigidity of every terminal subgraph",
        witness,
    );
    v.terminal_subgraphs = Some(terminals.len());
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComplianceReport {
    pub compliant: bool,
    pub offenders: Vec<VertexId>,
}

/// Checks that every vertex sends at most as many inter-edges as it has
/// DOFs inside its own meta-vertex.
pub fn local_dof_compliance(meta: &MetaFormation, dim: Dim) -> ComplianceReport {
    let mut offenders = Vec::new();
    for m in meta.meta_vertices() {
        let l = ledger(m, dim);
        for x in &l.vertices {
            let sent = meta.inter_edges().iter().filter(|e| e.tail == x.vertex).count();
            if sent > x.dof {
                offenders.push(x.vertex);
            }
        }
    }
    offenders.sort_unstable();
    ComplianceReport { compliant: offenders.is_empty(), offenders }
}

/// Persistence of a merged formation. When inter-edges only use local
/// DOFs this reduces to rigidity of the merged graph; otherwise the full
/// terminal-subgraph criterion is applied to the flattened formation.
pub fn merged_persistence(meta: &MetaFormation, dim: Dim, cfg: &OracleConfig) -> Result<PersistenceVerdict> {
    for (i, m) in meta.meta_vertices().iter().enumerate() {
        if !is_persistent(m, dim, cfg)?.persistent {
            return Err(Error::NotPersistent { index: i, dim: dim.value() as u8 });
        }
    }
    let flat = meta.flatten();
    if !local_dof_compliance(meta, dim).compliant {
        let mut v = is_persistent(&flat, dim, cfg)?;
        v.criterion = "terminal subgraph enumeration (fallback: inter-edges leave vertices without local DOFs)".into();
        return Ok(v);
    }
    let r = check_rigidity(&UndirectedView::of(&flat), dim, cfg);
    let witness = (!r.rigid).then(|| {
        let t = first_terminal(&flat, dim);
        PersistenceWitness::NonRigidTerminal { retained: t.retained, removed: t.removed, rigidity: r.witness.clone() }
    });
    Ok(PersistenceVerdict::assemble(
        &flat,
        dim,
        cfg,
        r.rigid,
        r.minimally_rigid,
        "rigidity of merged graph (inter-edges leave local DOFs)",
        witness,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[VertexId], e: &[(VertexId, VertexId)]) -> Formation {
        Formation::from_pairs(v, e).unwrap()
    }

    fn triangle(a: VertexId) -> Formation {
        f(&[a, a + 1, a + 2], &[(a + 1, a), (a + 2, a), (a + 2, a + 1)])
    }

    #[test]
    fn rigid_but_not_persistent() {
        let g = f(&[1, 2, 3, 4], &[(2, 1), (3, 2), (4, 1), (4, 2), (4, 3)]);
        let v = is_persistent(&g, Dim::Two, &OracleConfig::default()).unwrap();
        assert!(!v.persistent);
        match v.witness {
            Some(PersistenceWitness::NonRigidTerminal { retained, .. }) => assert_eq!(retained.len(), 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn persistent_examples() {
        let cfg = OracleConfig::default();
        let b = f(&[1, 2, 3, 4], &[(2, 1), (3, 1), (3, 2), (4, 1), (4, 2)]);
        let v = is_persistent(&b, Dim::Two, &cfg).unwrap();
        assert!(v.persistent && v.minimally_persistent && v.structurally_persistent);

        let k4 = f(&[1, 2, 3, 4], &[(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)]);
        let v = is_persistent(&k4, Dim::Two, &cfg).unwrap();
        assert!(v.persistent && !v.minimally_persistent);
        assert_eq!(v.terminal_subgraphs, Some(3));
    }

    #[test]
    fn spatial_leaders() {
        let v = is_persistent(&triangle(1), Dim::Three, &OracleConfig::default()).unwrap();
        assert!(v.persistent);
        assert!(v.structurally_persistent);
        // Octahedron with both poles as leaders.
        let oct = f(
            &[1, 2, 3, 4, 5, 6],
            &[(2, 1), (3, 1), (4, 1), (5, 1), (2, 6), (3, 6), (4, 6), (5, 6), (2, 3), (3, 4), (4, 5), (5, 2)],
        );
        let v = is_persistent(&oct, Dim::Three, &OracleConfig::default()).unwrap();
        assert!(v.persistent && !v.structurally_persistent);
        assert_eq!(v.witness, Some(PersistenceWitness::Leaders { leaders: vec![1, 6] }));
    }

    #[test]
    fn compliance_examples() {
        let m =
            MetaFormation::new(vec![triangle(1), triangle(4)], vec![Edge::new(1, 4), Edge::new(1, 5), Edge::new(2, 4)])
                .unwrap();
        assert!(local_dof_compliance(&m, Dim::Two).compliant);
        let bad = m.with_inter_edges(vec![Edge::new(2, 4), Edge::new(2, 5)]).unwrap();
        assert_eq!(local_dof_compliance(&bad, Dim::Two).offenders, vec![2]);
        assert!(local_dof_compliance(&m.with_inter_edges(vec![]).unwrap(), Dim::Two).compliant);
    }

    #[test]
    fn merged_paths_agree() {
        let cfg = OracleConfig::default();
        let m =
            MetaFormation::new(vec![triangle(1), triangle(4)], vec![Edge::new(1, 4), Edge::new(1, 5), Edge::new(2, 4)])
                .unwrap();
        let fast = merged_persistence(&m, Dim::Two, &cfg).unwrap();
        assert!(fast.persistent);
        assert_eq!(fast.persistent, is_persistent(&m.flatten(), Dim::Two, &cfg).unwrap().persistent);

        let star = m.with_inter_edges(vec![Edge::new(4, 1), Edge::new(5, 1), Edge::new(6, 1)]).unwrap();
        let v = merged_persistence(&star, Dim::Two, &cfg).unwrap();
        assert!(!v.persistent);
        assert!(v.criterion.contains("fallback"));
    }

    #[test]
    fn non_persistent_member_rejected() {
        let g = f(&[1, 2, 3, 4], &[(2, 1), (3, 2), (4, 1), (4, 2), (4, 3)]);
        let m = MetaFormation::new(vec![g, Formation::singleton(9)], vec![]).unwrap();
        assert!(matches!(
            merged_persistence(&m, Dim::Two, &OracleConfig::default()),
            Err(Error::NotPersistent { index: 0, .. })
        ));
    }
}
