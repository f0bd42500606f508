use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Edge, VertexId};

/// Orients `pairs` so that each vertex gets exactly its target out-degree.
/// Returns `None` when no such orientation exists.
pub fn orient_exact<R: Rng>(
    ids: &[VertexId],
    pairs: &[(VertexId, VertexId)],
    target: &[usize],
    rng: &mut R,
) -> Option<Vec<Edge>> {
    if target.iter().sum::<usize>() != pairs.len() {
        return None;
    }
    orient_bounded(ids, pairs, target, rng)
}

/// Orients `pairs` with out-degrees bounded by `cap`, by augmenting paths.
pub fn orient_bounded<R: Rng>(
    ids: &[VertexId],
    pairs: &[(VertexId, VertexId)],
    cap: &[usize],
    rng: &mut R,
) -> Option<Vec<Edge>> {
    let n = ids.len();
    let index = |v: VertexId| ids.iter().position(|&x| x == v).expect("declared vertex");
    let mut order: Vec<usize> = (0..pairs.len()).collect();
    order.shuffle(rng);
    // tails[e] holds the current tail index of edge e.
    let mut tails: Vec<Option<usize>> = vec![None; pairs.len()];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in order {
        let (mut u, mut v) = (index(pairs[e].0), index(pairs[e].1));
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut u, &mut v);
        }
        let ends = |x: usize| -> usize {
            let (a, b) = (index(pairs[x].0), index(pairs[x].1));
            if tails[x] == Some(a) {
                b
            } else {
                a
            }
        };
        // Breadth-first search for a vertex with spare out-degree.
        let mut prev: Vec<Option<(usize, Option<usize>)>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in [u, v] {
            prev[s] = Some((s, None));
            queue.push_back(s);
        }
        let mut found = None;
        while let Some(x) = queue.pop_front() {
            if out[x].len() < cap[x] {
                found = Some(x);
                break;
            }
            for &f in &out[x] {
                let y = ends(f);
                if prev[y].is_none() {
                    prev[y] = Some((x, Some(f)));
                    queue.push_back(y);
                }
            }
        }
        let mut x = found?;
        while let Some((p, Some(f))) = prev[x] {
            // Reverse f: p -> x becomes x -> p.
            out[p].retain(|&g| g != f);
            out[x].push(f);
            tails[f] = Some(x);
            x = p;
        }
        out[x].push(e);
        tails[e] = Some(x);
    }
    Some(
        pairs
            .iter()
            .zip(&tails)
            .map(|(&(a, b), t)| {
                let t = ids[t.expect("assigned")];
                if t == a {
                    Edge::new(a, b)
                } else {
                    Edge::new(b, a)
                }
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn k4_with_prescribed_outdegrees() {
        let ids = [1, 2, 3, 4];
        let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let e = orient_exact(&ids, &pairs, &[0, 1, 2, 3], &mut rng).unwrap();
        for (i, &v) in ids.iter().enumerate() {
            assert_eq!(e.iter().filter(|x| x.tail == v).count(), i);
        }
        assert!(orient_exact(&ids, &pairs, &[0, 0, 3, 3], &mut rng).is_none());
    }
}
