use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::matrix::{RigidityMatrix, RowBasis};
use crate::dim::Dim;
use crate::graph::UndirectedView;

/// Largest sampled coordinate.
pub const COORD_MAX: i64 = 1 << 20;

/// Seed and trial count of the randomized rank oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub seed: u64,
    pub trials: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { seed: 1, trials: 3 }
    }
}

impl OracleConfig {
    pub fn new(seed: u64, trials: u32) -> Self {
        OracleConfig { seed, trials: trials.max(1) }
    }

    /// Integer placements for every trial, reproducible from the seed.
    pub fn placements(&self, n: usize, dim: Dim) -> Vec<Vec<Vec<i64>>> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.trials.max(1))
            .map(|_| (0..n).map(|_| (0..dim.value()).map(|_| rng.gen_range(1..=COORD_MAX)).collect()).collect())
            .collect()
    }
}

/// Maximum rigidity-matrix rank over the sampled placements.
pub fn generic_rank(g: &UndirectedView, dim: Dim, cfg: &OracleConfig) -> usize {
    best_matrix(g, dim, cfg).1
}

/// The first placement achieving the maximal rank, with that rank.
pub(crate) fn best_matrix(g: &UndirectedView, dim: Dim, cfg: &OracleConfig) -> (RigidityMatrix, usize) {
    let cap = dim.rigid_rank(g.vertex_count()).min(g.edge_count());
    let mut best: Option<(RigidityMatrix, usize)> = None;
    for pos in cfg.placements(g.vertex_count(), dim) {
        let m = RigidityMatrix::new(g, dim, &pos);
        let r = m.rank();
        if best.as_ref().is_none_or(|(_, b)| r > *b) {
            best = Some((m, r));
        }
        if r >= cap {
            break;
        }
    }
    best.expect("at least one trial")
}

/// Greedily picks independent edges in `order`, using the placement of
/// maximal rank. Returns the accepted edge indices in the order visited.
pub fn independent_edges(g: &UndirectedView, dim: Dim, cfg: &OracleConfig, order: &[usize]) -> Vec<usize> {
    let (m, _) = best_matrix(g, dim, cfg);
    let mut basis = RowBasis::new(m.col_count());
    order.iter().copied().filter(|&e| basis.insert(m.row(e))).collect()
}
