use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::graph::{Edge, Formation};

/// Default cap on the number of distinct terminal edge sets.
pub const DEFAULT_TERMINAL_CAP: usize = 1_000_000;

/// Edges left once no vertex has more than `dim` outgoing edges, and one
/// removal sequence that leads there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TerminalSubgraph {
    pub retained: Vec<Edge>,
    pub removed: Vec<Edge>,
}

/// All terminal edge sets, sorted by their retained edge indices.
pub fn terminal_subgraphs(f: &Formation, dim: Dim, cap: usize) -> Result<Vec<TerminalSubgraph>> {
    let d = dim.value();
    let bound =
        f.out_degrees().iter().fold(1u128, |acc, &k| if k > d { acc.saturating_mul(binomial(k, d)) } else { acc });
    if bound > cap as u128 {
        return Err(Error::Resource { what: "terminal subgraphs".into(), cap });
    }
    let mut search = Search { f, d, seen: BTreeSet::new(), found: BTreeMap::new() };
    let all: Vec<usize> = (0..f.edge_count()).collect();
    search.visit(all, &mut Vec::new());
    Ok(search
        .found
        .into_iter()
        .map(|(kept, removed)| TerminalSubgraph {
            retained: kept.iter().map(|&i| f.edges()[i]).collect(),
            removed: removed.iter().map(|&i| f.edges()[i]).collect(),
        })
        .collect())
}

/// One terminal edge set, dropping the last excess edges of each vertex.
pub fn first_terminal(f: &Formation, dim: Dim) -> TerminalSubgraph {
    let d = dim.value();
    let mut used = vec![0usize; f.vertex_count()];
    let mut t = TerminalSubgraph { retained: Vec::new(), removed: Vec::new() };
    for &e in f.edges() {
        let i = f.index_of(e.tail).expect("declared tail");
        used[i] += 1;
        if used[i] > d {
            t.removed.push(e);
        } else {
            t.retained.push(e);
        }
    }
    t
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

struct Search<'a> {
    f: &'a Formation,
    d: usize,
    seen: BTreeSet<Vec<usize>>,
    found: BTreeMap<Vec<usize>, Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, kept: Vec<usize>, trace: &mut Vec<usize>) {
        if !self.seen.insert(kept.clone()) {
            return;
        }
        let mut deg = vec![0usize; self.f.vertex_count()];
        for &i in &kept {
            deg[self.f.index_of(self.f.edges()[i].tail).unwrap()] += 1;
        }
        let Some(v) = (0..deg.len()).filter(|&i| deg[i] > self.d).min_by_key(|&i| self.f.vertices()[i]) else {
            self.found.insert(kept, trace.clone());
            return;
        };
        let tail = self.f.vertices()[v];
        for &e in kept.iter().filter(|&&i| self.f.edges()[i].tail == tail) {
            let next: Vec<usize> = kept.iter().copied().filter(|&i| i != e).collect();
            trace.push(e);
            self.visit(next, trace);
            trace.pop();
        }
    }
}
