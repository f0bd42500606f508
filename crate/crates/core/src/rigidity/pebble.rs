//! The (k, l) pebble game on an undirected graph, for k = 2, l = 3.

/// An edge the game could not accept, with the induced edge set of the
/// pebble-blocked region it falls in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub edge: usize,
    /// Accepted edges spanned by the region plus the rejected edge itself.
    pub circuit: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PebbleOutcome {
    pub accepted: Vec<usize>,
    pub rejected: Vec<Rejection>,
}

pub struct PebbleGame {
    k: u32,
    l: u32,
    pebbles: Vec<u32>,
    out: Vec<Vec<usize>>,
    accepted: Vec<(usize, usize, usize)>,
}

impl PebbleGame {
    pub fn new(n: usize, k: u32, l: u32) -> Self {
        PebbleGame { k, l, pebbles: vec![k; n], out: vec![Vec::new(); n], accepted: Vec::new() }
    }

    pub fn laman(n: usize) -> Self {
        Self::new(n, 2, 3)
    }

    /// Tries to insert edge `id` between `u` and `v`.
    pub fn insert(&mut self, id: usize, u: usize, v: usize) -> Result<(), Rejection> {
        loop {
            if self.pebbles[u] + self.pebbles[v] > self.l {
                let (tail, head) = if self.pebbles[u] > 0 { (u, v) } else { (v, u) };
                self.pebbles[tail] -= 1;
                self.out[tail].push(head);
                self.accepted.push((id, u, v));
                return Ok(());
            }
            if self.pebbles[u] < self.k && self.gather(u, v) {
                continue;
            }
            if self.pebbles[v] < self.k && self.gather(v, u) {
                continue;
            }
            let region = self.reach(u, v);
            let mut circuit: Vec<usize> =
                self.accepted.iter().filter(|&&(_, a, b)| region[a] && region[b]).map(|&(e, _, _)| e).collect();
            circuit.push(id);
            return Err(Rejection { edge: id, circuit });
        }
    }

    /// Moves one pebble to `root` along a reversed path, avoiding `other`.
    fn gather(&mut self, root: usize, other: usize) -> bool {
        let n = self.pebbles.len();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        seen[other] = true;
        let mut stack = vec![root];
        let mut found = None;
        while let Some(x) = stack.pop() {
            if x != root && self.pebbles[x] > 0 {
                found = Some(x);
                break;
            }
            for &y in &self.out[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        let Some(w) = found else {
            return false;
        };
        self.pebbles[w] -= 1;
        let mut y = w;
        while y != root {
            let x = parent[y];
            let pos = self.out[x].iter().position(|&z| z == y).expect("path edge");
            self.out[x].swap_remove(pos);
            self.out[y].push(x);
            y = x;
        }
        self.pebbles[root] += 1;
        true
    }

    fn reach(&self, u: usize, v: usize) -> Vec<bool> {
        let mut seen = vec![false; self.pebbles.len()];
        let mut stack = vec![u, v];
        seen[u] = true;
        seen[v] = true;
        while let Some(x) = stack.pop() {
            for &y in &self.out[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

/// Runs the (2,3) game on `edges` (index pairs) in the given order.
pub fn run_laman(n: usize, edges: &[(usize, usize)], order: &[usize]) -> PebbleOutcome {
    let mut game = PebbleGame::laman(n);
    let mut out = PebbleOutcome::default();
    for &e in order {
        let (u, v) = edges[e];
        match game.insert(e, u, v) {
            Ok(()) => out.accepted.push(e),
            Err(r) => out.rejected.push(r),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(edges: &[(usize, usize)]) -> Vec<usize> {
        (0..edges.len()).collect()
    }

    #[test]
    fn k4_rejects_one_edge() {
        let e = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let out = run_laman(4, &e, &all(&e));
        assert_eq!(out.accepted.len(), 5);
        assert_eq!(out.rejected.len(), 1);
        assert_eq!(out.rejected[0].circuit.len(), 6);
    }

    #[test]
    fn circuit_is_over_count() {
        // Two triangles sharing vertex 0, plus a K4 on 3..7 region.
        let e = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (3, 5), (4, 5), (2, 5)];
        let out = run_laman(6, &e, &all(&e));
        for r in &out.rejected {
            let mut vs: Vec<usize> = r.circuit.iter().flat_map(|&i| [e[i].0, e[i].1]).collect();
            vs.sort();
            vs.dedup();
            assert!(r.circuit.len() > 2 * vs.len() - 3);
        }
        assert_eq!(out.rejected.len(), 1);
        assert_eq!(out.rejected[0].circuit.len(), 6);
    }

    #[test]
    fn two_vertex_edge_accepted() {
        let out = run_laman(2, &[(0, 1)], &[0]);
        assert_eq!(out.accepted, vec![0]);
    }
}
