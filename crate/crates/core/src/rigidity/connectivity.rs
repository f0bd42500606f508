use serde::{Deserialize, Serialize};

use crate::graph::{UndirectedView, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConnectivityReport {
    pub three_connected: bool,
    pub separating_pair: Option<[VertexId; 2]>,
}

/// Checks that no pair of vertices disconnects the graph. Graphs on fewer
/// than four vertices are reported 3-connected.
pub fn three_connectivity(g: &UndirectedView) -> ConnectivityReport {
    let n = g.vertex_count();
    if n < 4 {
        return ConnectivityReport { three_connected: true, separating_pair: None };
    }
    let adj = g.adjacency();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| g.id(i));
    for (x, &a) in order.iter().enumerate() {
        for &b in &order[x + 1..] {
            if !connected_without(&adj, a, b) {
                return ConnectivityReport { three_connected: false, separating_pair: Some([g.id(a), g.id(b)]) };
            }
        }
    }
    ConnectivityReport { three_connected: true, separating_pair: None }
}

fn connected_without(adj: &[Vec<usize>], a: usize, b: usize) -> bool {
    let n = adj.len();
    let start = (0..n).find(|&v| v != a && v != b).expect("n >= 3");
    let mut seen = vec![false; n];
    seen[a] = true;
    seen[b] = true;
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n - 2
}
