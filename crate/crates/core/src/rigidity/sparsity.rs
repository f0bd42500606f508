use serde::{Deserialize, Serialize};

use super::pebble;
use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::graph::{Edge, UndirectedView};

/// Default vertex cap of the exhaustive (3,6) search.
pub const DEFAULT_SUBSET_CAP: usize = 20;

/// Counting parameters: at most `k|V'| - l` edges on any `V'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparsityParams {
    k: usize,
    l: usize,
}

impl SparsityParams {
    pub const LAMAN_2D: SparsityParams = SparsityParams { k: 2, l: 3 };
    pub const LAMAN_3D: SparsityParams = SparsityParams { k: 3, l: 6 };

    pub fn new(k: usize, l: usize) -> Result<Self> {
        match (k, l) {
            (2, 3) => Ok(Self::LAMAN_2D),
            (3, 6) => Ok(Self::LAMAN_3D),
            _ => Err(Error::input("sparsity", format!("unsupported parameters ({k},{l})"))),
        }
    }

    pub fn of(dim: Dim) -> Self {
        match dim {
            Dim::Two => Self::LAMAN_2D,
            Dim::Three => Self::LAMAN_3D,
        }
    }

    pub fn k(self) -> usize {
        self.k
    }

    pub fn l(self) -> usize {
        self.l
    }

    pub fn dim(self) -> Dim {
        if self.k == 2 {
            Dim::Two
        } else {
            Dim::Three
        }
    }

    /// Edge budget of a vertex set of size `n`. Small sets use the rank of
    /// a rigid body on `n` points, so two vertices allow a single edge.
    pub fn bound(self, n: usize) -> usize {
        self.dim().rigid_rank(n)
    }
}

/// A set of edges exceeding the sparsity budget of its vertex span.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub edges: Vec<Edge>,
    pub vertices: Vec<u32>,
    pub bound: usize,
}

/// Finds an over-counted edge subset, if any.
pub fn sparsity_violation(g: &UndirectedView, p: SparsityParams, cap: usize) -> Result<Option<Violation>> {
    match p.dim() {
        Dim::Two => Ok(laman_violation(g)),
        Dim::Three => exhaustive_violation(g, p, cap),
    }
}

fn laman_violation(g: &UndirectedView) -> Option<Violation> {
    let order: Vec<usize> = (0..g.edge_count()).collect();
    let out = pebble::run_laman(g.vertex_count(), g.edges(), &order);
    out.rejected.first().map(|r| violation_of(g, &r.circuit, SparsityParams::LAMAN_2D))
}

pub(crate) fn violation_of(g: &UndirectedView, edge_ids: &[usize], p: SparsityParams) -> Violation {
    let mut idx: Vec<usize> = edge_ids.iter().flat_map(|&e| [g.edges()[e].0, g.edges()[e].1]).collect();
    idx.sort_unstable();
    idx.dedup();
    let mut edge_ids = edge_ids.to_vec();
    edge_ids.sort_unstable();
    let mut vertices: Vec<u32> = idx.iter().map(|&i| g.id(i)).collect();
    vertices.sort_unstable();
    Violation { edges: edge_ids.iter().map(|&e| g.edge_ids(e)).collect(), bound: p.bound(idx.len()), vertices }
}

fn exhaustive_violation(g: &UndirectedView, p: SparsityParams, cap: usize) -> Result<Option<Violation>> {
    let n = g.vertex_count();
    if n > cap || n > 63 {
        return Err(Error::Resource { what: "vertices for exhaustive sparsity search".into(), cap });
    }
    let mut adj = vec![0u64; n];
    for &(a, b) in g.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    for size in 2..=n {
        let bound = p.bound(size);
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mask = combo.iter().fold(0u64, |m, &i| m | 1 << i);
            let count: u32 = combo.iter().map(|&i| (adj[i] & mask).count_ones()).sum::<u32>() / 2;
            if count as usize > bound {
                let ids: Vec<usize> = (0..g.edge_count())
                    .filter(|&e| {
                        let (a, b) = g.edges()[e];
                        mask >> a & 1 == 1 && mask >> b & 1 == 1
                    })
                    .collect();
                return Ok(Some(violation_of(g, &ids, p)));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances `c` to the next k-subset of 0..n in lexicographic order.
pub fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
