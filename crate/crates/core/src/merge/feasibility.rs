use serde::{Deserialize, Serialize};

use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::graph::Formation;
use crate::persistence::{is_persistent, ledger, PersistenceVerdict};
use crate::rigidity::OracleConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reason {
    #[serde(rename = "ok")]
    Ok,
    #[serde(rename = "missing-dof-exceeded")]
    MissingDofExceeded,
    #[serde(rename = "3D-nonstructural-vs-zero-dof")]
    NonStructuralVsZeroDof,
    #[serde(rename = "3D-two-lone-leaders")]
    TwoLoneLeaders,
    #[serde(rename = "too-few-vertices")]
    TooFewVertices,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::Ok => "ok",
            Reason::MissingDofExceeded => "missing-dof-exceeded",
            Reason::NonStructuralVsZeroDof => "3D-nonstructural-vs-zero-dof",
            Reason::TwoLoneLeaders => "3D-two-lone-leaders",
            Reason::TooFewVertices => "too-few-vertices",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Feasibility {
    pub feasible: bool,
    pub reason: Reason,
    pub missing_dof: Vec<usize>,
    pub total_missing_dof: usize,
}

/// DOF capacity of a formation of this size minus its actual DOFs.
pub fn missing_dof(f: &Formation, dim: Dim, cfg: &OracleConfig) -> Result<usize> {
    if !is_persistent(f, dim, cfg)?.persistent {
        return Err(Error::NotPersistent { index: 0, dim: dim.value() as u8 });
    }
    Ok(missing_unchecked(f, dim))
}

pub(crate) fn missing_unchecked(f: &Formation, dim: Dim) -> usize {
    dim.body_dof(f.vertex_count()).saturating_sub(ledger(f, dim).total_dof)
}

/// A single leader with all of the formation's DOFs and nothing else.
pub(crate) fn lone_leader(f: &Formation, dim: Dim) -> bool {
    let l = ledger(f, dim);
    dim == Dim::Three && f.vertex_count() >= 3 && l.leaders.len() == 1 && l.total_dof == 3
}

pub fn feasibility(collection: &[Formation], dim: Dim, cfg: &OracleConfig) -> Result<Feasibility> {
    let verdicts = collection
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let v = is_persistent(f, dim, cfg)?;
            if v.persistent {
                Ok(v)
            } else {
                Err(Error::NotPersistent { index: i, dim: dim.value() as u8 })
            }
        })
        .collect::<Result<Vec<PersistenceVerdict>>>()?;
    let missing: Vec<usize> = collection.iter().map(|f| missing_unchecked(f, dim)).collect();
    let total: usize = missing.iter().sum();
    let vertices: usize = collection.iter().map(Formation::vertex_count).sum();
    let reason = if vertices < dim.value() {
        Reason::TooFewVertices
    } else if total > dim.max_total_dof() {
        Reason::MissingDofExceeded
    } else if dim == Dim::Three && collection.len() == 2 {
        let zero = |i: usize| verdicts[i].ledger.total_dof == 0;
        let nonstructural = |i: usize| !verdicts[i].structurally_persistent;
        if (nonstructural(0) && zero(1)) || (nonstructural(1) && zero(0)) {
            Reason::NonStructuralVsZeroDof
        } else if lone_leader(&collection[0], dim) && lone_leader(&collection[1], dim) {
            Reason::TwoLoneLeaders
        } else {
            Reason::Ok
        }
    } else {
        Reason::Ok
    };
    Ok(Feasibility { feasible: reason == Reason::Ok, reason, missing_dof: missing, total_missing_dof: total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    fn triangle(a: VertexId) -> Formation {
        Formation::from_pairs(&[a, a + 1, a + 2], &[(a + 1, a), (a + 2, a), (a + 2, a + 1)]).unwrap()
    }

    #[test]
    fn missing_dof_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(missing_dof(&triangle(1), Dim::Two, &cfg).unwrap(), 0);
        assert_eq!(missing_dof(&Formation::singleton(1), Dim::Two, &cfg).unwrap(), 0);
        let k4 = Formation::from_pairs(&[1, 2, 3, 4], &[(1, 2), (2, 3), (3, 1), (4, 1), (4, 2), (3, 4)]).unwrap();
        assert_eq!(missing_dof(&k4, Dim::Two, &cfg).unwrap(), 1);
        let path = Formation::from_pairs(&[1, 2, 3], &[(2, 1), (3, 2)]).unwrap();
        assert!(missing_dof(&path, Dim::Two, &cfg).is_err());
    }

    #[test]
    fn planar_gate() {
        let cfg = OracleConfig::default();
        let ok = feasibility(&[triangle(1), triangle(4)], Dim::Two, &cfg).unwrap();
        assert!(ok.feasible);
        assert_eq!(ok.reason, Reason::Ok);
    }

    #[test]
    fn spatial_gates() {
        let cfg = OracleConfig::default();
        let r = feasibility(&[triangle(1), triangle(4)], Dim::Three, &cfg).unwrap();
        assert_eq!(r.reason, Reason::Ok);
        assert_eq!(r.total_missing_dof, 0);
        let r = feasibility(&[Formation::singleton(1), Formation::singleton(2)], Dim::Three, &cfg).unwrap();
        assert_eq!(r.reason, Reason::TooFewVertices);
    }

    #[test]
    fn reason_codes_serialize() {
        assert_eq!(serde_json::to_string(&Reason::TwoLoneLeaders).unwrap(), "\"3D-two-lone-leaders\"");
        assert_eq!(Reason::NonStructuralVsZeroDof.code(), "3D-nonstructural-vs-zero-dof");
    }
}
