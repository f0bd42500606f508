//! Reference implementations shared by the integration tests. None of them
//! call into the library's rigidity or persistence code.
#![allow(dead_code)]

use std::collections::BTreeMap;

use formation_core::graph::{Formation, VertexId};

/// Mersenne prime 2^31 - 1; products of two residues fit in a u64.
pub const P: u64 = 2_147_483_647;

/// splitmix64, so the reference placements share nothing with the library.
pub struct Mix(u64);

impl Mix {
    pub fn new(seed: u64) -> Self {
        Mix(seed)
    }

    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn inv(a: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % P, P - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, piv);
        let iv = inv(rows[rank][c]);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c] * iv % P;
                for (x, &p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x = (*x + P - f * p % P) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of the rigidity matrix of `pairs` on vertices `0..n` at random
/// placements, maximized over two trials.
pub fn rank(n: usize, pairs: &[(usize, usize)], d: usize, seed: u64) -> usize {
    let mut rng = Mix::new(seed ^ 0x5EED);
    let mut best = 0;
    for _ in 0..2 {
        let pos: Vec<Vec<u64>> = (0..n).map(|_| (0..d).map(|_| 1 + rng.below(P - 1)).collect()).collect();
        let rows = pairs
            .iter()
            .map(|&(a, b)| {
                let mut row = vec![0; d * n];
                for k in 0..d {
                    let diff = (pos[a][k] + P - pos[b][k]) % P;
                    row[a * d + k] = diff;
                    row[b * d + k] = (P - diff) % P;
                }
                row
            })
            .collect();
        best = best.max(rank_mod_p(rows, d * n));
    }
    best
}

pub fn rigid_rank(n: usize, d: usize) -> usize {
    match (d, n) {
        (_, 0 | 1) => 0,
        (_, 2) => 1,
        (2, _) => 2 * n - 3,
        _ => 3 * n - 6,
    }
}

pub fn rigid(n: usize, pairs: &[(usize, usize)], d: usize) -> bool {
    rank(n, pairs, d, 7) == rigid_rank(n, d)
}

/// Index pairs of a formation (vertex positions in declaration order).
pub fn index_pairs(f: &Formation) -> Vec<(usize, usize)> {
    let pos: BTreeMap<VertexId, usize> = f.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect();
    f.edges().iter().map(|e| (pos[&e.tail], pos[&e.head])).collect()
}

pub fn formation_rigid(f: &Formation, d: usize) -> bool {
    rigid(f.vertex_count(), &index_pairs(f), d)
}

/// Largest (2,3)-sparse edge subset, grown greedily; every vertex subset
/// is checked explicitly. Sparse sets form a matroid, so greedy is exact.
pub fn laman_rank(n: usize, pairs: &[(usize, usize)]) -> usize {
    assert!(n <= 16);
    let mut kept: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in pairs {
        let need = (1u32 << a) | (1 << b);
        let ok = (0u32..1 << n).filter(|s| s & need == need).all(|s| {
            let inside = kept.iter().filter(|&&(x, y)| s >> x & 1 == 1 && s >> y & 1 == 1).count() + 1;
            inside + 3 <= 2 * s.count_ones() as usize
        });
        if ok {
            kept.push((a, b));
        }
    }
    kept.len()
}

pub fn dof_total(f: &Formation, d: usize) -> usize {
    f.vertices().iter().map(|&v| d.saturating_sub(f.out_degree(v))).sum()
}

pub fn body_dof(n: usize, d: usize) -> usize {
    match (d, n) {
        (2, 1) => 2,
        (2, _) => 3,
        (_, 1) => 3,
        (_, 2) => 5,
        _ => 6,
    }
}

fn choose(k: usize, items: &[usize]) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = choose(k - 1, &items[1..]);
    for c in &mut out {
        c.insert(0, items[0]);
    }
    out.extend(choose(k, &items[1..]));
    out
}

/// Number of terminal subgraphs the naive enumeration would visit.
pub fn terminal_count(f: &Formation, d: usize) -> u128 {
    f.vertices()
        .iter()
        .map(|&v| {
            let o = f.out_degree(v);
            if o > d {
                choose(d, &(0..o).collect::<Vec<_>>()).len() as u128
            } else {
                1
            }
        })
        .product()
}

/// Every way of keeping exactly `d` out-edges at each vertex that has
/// more, listed without any sharing between branches.
pub fn terminal_edge_sets(f: &Formation, d: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs = index_pairs(f);
    let mut groups: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut fixed = Vec::new();
    for i in 0..f.vertex_count() {
        let out: Vec<usize> = (0..pairs.len()).filter(|&e| pairs[e].0 == i).collect();
        if out.len() > d {
            groups.push(choose(d, &out));
        } else {
            fixed.extend(out);
        }
    }
    let mut sets = vec![fixed];
    for g in groups {
        let mut next = Vec::new();
        for s in &sets {
            for pick in &g {
                let mut t = s.clone();
                t.extend(pick);
                next.push(t);
            }
        }
        sets = next;
    }
    sets.into_iter().map(|s| s.into_iter().map(|e| pairs[e]).collect()).collect()
}

/// Persistence as rigidity of every terminal subgraph.
pub fn naive_persistent(f: &Formation, d: usize) -> bool {
    let n = f.vertex_count();
    terminal_edge_sets(f, d).iter().all(|s| rigid(n, s, d))
}
