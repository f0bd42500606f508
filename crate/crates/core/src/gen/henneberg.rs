use rand::seq::SliceRandom;
use rand::Rng;

use crate::dim::Dim;
use crate::graph::VertexId;

/// Random minimally rigid graph on `ids` grown by vertex additions and
/// edge splits. Edges are returned as unordered pairs.
pub fn min_rigid<R: Rng>(ids: &[VertexId], dim: Dim, rng: &mut R) -> Vec<(VertexId, VertexId)> {
    let d = dim.value();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let seed = ids.len().min(d);
    for i in 0..seed {
        for j in 0..i {
            edges.push((ids[j], ids[i]));
        }
    }
    for k in seed..ids.len() {
        let v = ids[k];
        let old = &ids[..k];
        if k > d && rng.gen_bool(0.5) {
            // Edge split: drop one edge, join v to its ends and d - 1 others.
            let pos = rng.gen_range(0..edges.len());
            let (a, b) = edges.swap_remove(pos);
            let mut others: Vec<VertexId> = old.iter().copied().filter(|&x| x != a && x != b).collect();
            others.shuffle(rng);
            edges.push((a, v));
            edges.push((b, v));
            edges.extend(others.into_iter().take(d - 1).map(|x| (x, v)));
        } else {
            let mut pick = old.to_vec();
            pick.shuffle(rng);
            edges.extend(pick.into_iter().take(d).map(|x| (x, v)));
        }
    }
    edges
}

/// Adds up to `count` random edges between non-adjacent vertices.
pub fn add_random_edges<R: Rng>(ids: &[VertexId], edges: &mut Vec<(VertexId, VertexId)>, count: usize, rng: &mut R) {
    let mut missing: Vec<(VertexId, VertexId)> = Vec::new();
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            if !edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a)) {
                missing.push((a, b));
            }
        }
    }
    missing.shuffle(rng);
    edges.extend(missing.into_iter().take(count));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Formation;
    use crate::graph::UndirectedView;
    use crate::rigidity::{check_rigidity, OracleConfig};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn grows_minimally_rigid_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for dim in [Dim::Two, Dim::Three] {
            for n in 1..12u32 {
                let ids: Vec<VertexId> = (1..=n).collect();
                let e = min_rigid(&ids, dim, &mut rng);
                assert_eq!(e.len(), dim.rigid_rank(n as usize));
                let f = Formation::from_pairs(&ids, &e).unwrap();
                let v = check_rigidity(&UndirectedView::of(&f), dim, &OracleConfig::default());
                assert!(v.minimally_rigid, "{dim} n={n}");
            }
        }
    }
}
