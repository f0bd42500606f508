use super::matrix::RowBasis;
use super::oracle::{best_matrix, OracleConfig};
use super::pebble::PebbleGame;
use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::graph::{Edge, UndirectedView};

/// Extends the union of `fixed` to a minimally rigid spanning edge set.
/// Returns edge indices of `g`: the fixed edges first, then the greedy
/// additions in edge order.
pub fn minimally_rigid_spanning(
    g: &UndirectedView,
    dim: Dim,
    fixed: &[Vec<Edge>],
    cfg: &OracleConfig,
) -> Result<Vec<usize>> {
    let mut fixed_idx = Vec::new();
    let mut is_fixed = vec![false; g.edge_count()];
    for (s, set) in fixed.iter().enumerate() {
        for (k, e) in set.iter().enumerate() {
            let i = find_edge(g, *e)
                .ok_or_else(|| Error::input(format!("fixed[{s}][{k}]"), format!("edge {:?} not in graph", e.pair())))?;
            if !is_fixed[i] {
                is_fixed[i] = true;
                fixed_idx.push(i);
            }
        }
    }
    let order: Vec<usize> = fixed_idx.iter().copied().chain((0..g.edge_count()).filter(|&i| !is_fixed[i])).collect();
    let accepted = independent_in_order(g, dim, cfg, &order);
    if fixed_idx.iter().any(|i| !accepted.contains(i)) {
        return Err(Error::FixedNotIndependent);
    }
    if accepted.len() != dim.rigid_rank(g.vertex_count()) {
        return Err(Error::NotRigid { dim: dim.value() as u8 });
    }
    Ok(accepted)
}

/// Greedy independent subsequence of `order` in the generic rigidity
/// matroid of `dim`.
pub fn independent_in_order(g: &UndirectedView, dim: Dim, cfg: &OracleConfig, order: &[usize]) -> Vec<usize> {
    match dim {
        Dim::Two => {
            let mut game = PebbleGame::laman(g.vertex_count());
            order
                .iter()
                .copied()
                .filter(|&e| {
                    let (u, v) = g.edges()[e];
                    game.insert(e, u, v).is_ok()
                })
                .collect()
        }
        Dim::Three => {
            if g.edge_count() == 0 {
                return Vec::new();
            }
            let (m, _) = best_matrix(g, dim, cfg);
            let mut basis = RowBasis::new(m.col_count());
            order.iter().copied().filter(|&e| basis.insert(m.row(e))).collect()
        }
    }
}

fn find_edge(g: &UndirectedView, e: Edge) -> Option<usize> {
    let (a, b) = e.pair();
    (0..g.edge_count()).find(|&i| {
        let x = g.edge_ids(i).pair();
        x == (a, b) || x == (b, a)
    })
}
