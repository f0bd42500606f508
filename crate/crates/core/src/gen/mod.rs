//! Seeded instance generators.

mod henneberg;
mod orient;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use henneberg::{add_random_edges, min_rigid};
pub use orient::{orient_bounded, orient_exact};

use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::graph::{Formation, UndirectedView, VertexId};
use crate::persistence::{is_persistent, ledger};
use crate::rigidity::{check_rigidity, OracleConfig};

/// Largest generated formation.
pub const MAX_VERTICES: usize = 64;
const ATTEMPTS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenKind {
    #[serde(rename = "min-rigid-2d")]
    MinRigid2d,
    #[serde(rename = "min-persistent-2d")]
    MinPersistent2d,
    #[serde(rename = "min-persistent-3d")]
    MinPersistent3d,
    Tetra,
    Banana,
}

/// K4 with out-degrees 0, 1, 2, 3.
pub fn tetra() -> Formation {
    Formation::from_pairs(&[1, 2, 3, 4], &[(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)]).expect("valid")
}

/// Two copies of K5 minus the edge 1-2, glued along vertices 1 and 2.
/// Each vertex points to its lower-numbered neighbours.
pub fn double_banana() -> Formation {
    let mut edges = Vec::new();
    for side in [[1, 2, 3, 4, 5], [1, 2, 6, 7, 8]] {
        for i in 0..5 {
            for j in 0..i {
                let (a, b) = (side[j], side[i]);
                if (a, b) != (1, 2) {
                    edges.push((b, a));
                }
            }
        }
    }
    Formation::from_pairs(&[1, 2, 3, 4, 5, 6, 7, 8], &edges).expect("valid")
}

/// Random rigid formation on `ids` whose DOFs are `allocation`, spread over
/// randomly chosen vertices; all other vertices have out-degree `dim`.
/// Every out-degree is at most `dim`, so the result is persistent.
pub fn persistent_with_allocation<R: Rng>(
    ids: &[VertexId],
    dim: Dim,
    allocation: &[usize],
    rng: &mut R,
    cfg: &OracleConfig,
) -> Result<Formation> {
    let d = dim.value();
    let n = ids.len();
    let total: usize = allocation.iter().sum();
    if allocation.len() > n || allocation.iter().any(|&a| a == 0 || a > d) || total > dim.body_dof(n) {
        return Err(Error::InvalidOperation(format!("allocation {allocation:?} impossible on {n} vertices in {dim}")));
    }
    let extra = dim.body_dof(n) - total;
    if d * n - total > n * n.saturating_sub(1) / 2 {
        return Err(Error::InvalidOperation(format!(
            "allocation {allocation:?} needs more edges than {n} vertices allow"
        )));
    }
    for _ in 0..ATTEMPTS {
        let mut pairs = min_rigid(ids, dim, rng);
        add_random_edges(ids, &mut pairs, extra, rng);
        if pairs.len() != d * n - total {
            continue;
        }
        let mut slots: Vec<usize> = (0..n).collect();
        slots.shuffle(rng);
        let mut target = vec![d; n];
        for (&s, &a) in slots.iter().zip(allocation) {
            target[s] = d - a;
        }
        if let Some(edges) = orient_exact(ids, &pairs, &target, rng) {
            let f = Formation::new(ids.to_vec(), edges)?;
            if check_rigidity(&UndirectedView::of(&f), dim, cfg).rigid {
                return Ok(f);
            }
        }
    }
    Err(Error::InvalidOperation(format!("no formation with allocation {allocation:?} on {n} vertices found")))
}

/// Random minimally persistent formation with out-degrees at most `dim`.
pub fn min_persistent<R: Rng>(ids: &[VertexId], dim: Dim, rng: &mut R) -> Formation {
    let pairs = min_rigid(ids, dim, rng);
    let cap = vec![dim.value(); ids.len()];
    let edges = orient_bounded(ids, &pairs, &cap, rng).expect("independent graphs have bounded orientations");
    Formation::new(ids.to_vec(), edges).expect("valid")
}

/// Generates an instance of `kind` and checks its advertised property.
pub fn generate(kind: GenKind, n: usize, seed: u64, cfg: &OracleConfig) -> Result<Formation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ids: Vec<VertexId> = (1..=n as VertexId).collect();
    let sized = |lo: usize| {
        if n < lo || n > MAX_VERTICES {
            Err(Error::input("n", format!("must lie in {lo}..={MAX_VERTICES}, got {n}")))
        } else {
            Ok(())
        }
    };
    let f = match kind {
        GenKind::Tetra => tetra(),
        GenKind::Banana => double_banana(),
        GenKind::MinRigid2d => {
            sized(1)?;
            let pairs = min_rigid(&ids, Dim::Two, &mut rng);
            let edges =
                pairs.into_iter().map(|(a, b)| if rng.gen_bool(0.5) { (a, b) } else { (b, a) }).collect::<Vec<_>>();
            Formation::from_pairs(&ids, &edges)?
        }
        GenKind::MinPersistent2d => {
            sized(1)?;
            min_persistent(&ids, Dim::Two, &mut rng)
        }
        GenKind::MinPersistent3d => {
            sized(1)?;
            min_persistent(&ids, Dim::Three, &mut rng)
        }
    };
    let ok = match kind {
        GenKind::MinRigid2d => check_rigidity(&UndirectedView::of(&f), Dim::Two, cfg).minimally_rigid,
        GenKind::MinPersistent2d => is_persistent(&f, Dim::Two, cfg)?.minimally_persistent,
        GenKind::MinPersistent3d => is_persistent(&f, Dim::Three, cfg)?.minimally_persistent,
        GenKind::Tetra => ledger(&f, Dim::Three).total_dof == 6,
        GenKind::Banana => !check_rigidity(&UndirectedView::of(&f), Dim::Three, cfg).rigid,
    };
    if !ok {
        return Err(Error::InvalidOperation(format!("generated {kind:?} instance failed its self-check")));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rigidity::{generic_rank, three_connectivity};

    #[test]
    fn banana_shape() {
        let f = double_banana();
        assert_eq!(f.vertex_count(), 8);
        assert_eq!(f.edge_count(), 18);
        let g = UndirectedView::of(&f);
        assert_eq!(generic_rank(&g, Dim::Three, &OracleConfig::default()), 17);
        assert_eq!(three_connectivity(&g).separating_pair, Some([1, 2]));
    }

    #[test]
    fn kinds_pass_self_checks() {
        let cfg = OracleConfig::default();
        let f = generate(GenKind::MinPersistent2d, 6, 7, &cfg).unwrap();
        assert_eq!(f.edge_count(), 9);
        assert_eq!(generate(GenKind::Tetra, 0, 0, &cfg).unwrap().edge_count(), 6);
        for seed in 0..10 {
            generate(GenKind::MinPersistent3d, 9, seed, &cfg).unwrap();
            generate(GenKind::MinRigid2d, 9, seed, &cfg).unwrap();
        }
        assert!(generate(GenKind::MinPersistent2d, 0, 1, &cfg).is_err());
    }

    #[test]
    fn deterministic_per_seed() {
        let cfg = OracleConfig::default();
        assert_eq!(
            generate(GenKind::MinPersistent3d, 8, 3, &cfg).unwrap(),
            generate(GenKind::MinPersistent3d, 8, 3, &cfg).unwrap()
        );
    }

    #[test]
    fn allocations_realized() {
        let cfg = OracleConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let ids: Vec<VertexId> = (1..=7).collect();
        let zero = persistent_with_allocation(&ids, Dim::Three, &[], &mut rng, &cfg).unwrap();
        assert_eq!(ledger(&zero, Dim::Three).total_dof, 0);
        assert!(is_persistent(&zero, Dim::Three, &cfg).unwrap().persistent);
        let f = persistent_with_allocation(&ids[..6], Dim::Three, &[2, 1, 1], &mut rng, &cfg).unwrap();
        assert_eq!(ledger(&f, Dim::Three).allocation(), vec![2, 1, 1]);
        assert!(is_persistent(&f, Dim::Three, &cfg).unwrap().persistent);
        assert!(persistent_with_allocation(&ids[..5], Dim::Three, &[2, 1, 1], &mut rng, &cfg).is_err());
    }
}
