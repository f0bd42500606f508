//! Slot-level merge operations and the six base patterns built from them.
//!
//! A slot plan connects source slots `a0, a1, ...` to three target slots
//! `y0, y1, y2`. Operation (v) brings in a fresh source slot; operation
//! (e) hands one planned edge to a fresh source slot and tops it up.

use serde::{Deserialize, Serialize};

use super::plan::Rule;
use crate::error::{Error, Result};

pub const TARGET_SLOTS: usize = 3;
const MAX_INCIDENT: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotEdge {
    pub a: usize,
    pub b: usize,
    pub rule: Rule,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotPlan {
    pub edges: Vec<SlotEdge>,
    /// Operations applied so far.
    pub ops: usize,
    pub sources: usize,
}

impl SlotPlan {
    pub fn new() -> Self {
        Self::default()
    }

    fn incident(&self, b: usize) -> usize {
        self.edges.iter().filter(|e| e.b == b).count()
    }

    /// Connects `a` to the lowest target slots with spare incidence.
    fn top_up(&mut self, a: usize, count: usize, rule: Rule) -> Result<()> {
        for _ in 0..count {
            let b = (0..TARGET_SLOTS)
                .find(|&b| self.incident(b) < MAX_INCIDENT && !self.edges.iter().any(|e| e.a == a && e.b == b))
                .ok_or_else(|| Error::InvalidOperation(format!("no target slot left for source {a}")))?;
            self.edges.push(SlotEdge { a, b, rule });
        }
        Ok(())
    }

    pub fn degree(&self, a: usize) -> usize {
        self.edges.iter().filter(|e| e.a == a).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.sources).map(|a| self.degree(a)).collect()
    }
}

/// Operation (v): a fresh source connected to `3 - t` target slots.
pub fn op_v(plan: &mut SlotPlan) -> Result<usize> {
    let t = plan.ops;
    if t >= TARGET_SLOTS {
        return Err(Error::InvalidOperation(format!("operation (v) needs t < 3, got {t}")));
    }
    let a = plan.sources;
    plan.sources += 1;
    plan.top_up(a, TARGET_SLOTS - t, Rule::OpV)?;
    plan.ops += 1;
    Ok(a)
}

/// Operation (e): the planned edge `(k, j)` becomes `(i, j)` for a fresh
/// source `i`, which then receives `3 - t` further edges when `t < 3`.
pub fn op_e(plan: &mut SlotPlan, k: usize, j: usize) -> Result<usize> {
    let t = plan.ops;
    let pos = plan
        .edges
        .iter()
        .position(|e| e.a == k && e.b == j)
        .ok_or_else(|| Error::InvalidOperation(format!("no planned edge a{k}-y{j} to reroute")))?;
    let i = plan.sources;
    plan.sources += 1;
    plan.edges[pos] = SlotEdge { a: i, b: j, rule: Rule::OpE };
    plan.top_up(i, TARGET_SLOTS.saturating_sub(t), Rule::OpE)?;
    plan.ops += 1;
    Ok(i)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    V,
    E(usize, usize),
}

const BASES: [(&str, &[Op]); 6] = [
    ("3-2-1", &[Op::V, Op::V, Op::V]),
    ("2-2-2", &[Op::V, Op::V, Op::E(0, 2)]),
    ("3-1-1-1", &[Op::V, Op::V, Op::V, Op::E(1, 1)]),
    ("2-2-1-1", &[Op::V, Op::V, Op::E(0, 2), Op::E(2, 0)]),
    ("2-1-1-1-1", &[Op::V, Op::V, Op::E(0, 2), Op::E(1, 1), Op::E(2, 0)]),
    ("1-1-1-1-1-1", &[Op::V, Op::V, Op::V, Op::E(0, 1), Op::E(0, 2), Op::E(1, 1)]),
];

/// The six-edge base patterns, one per DOF allocation of a single side.
pub fn base_patterns() -> Vec<(&'static str, SlotPlan)> {
    BASES
        .iter()
        .map(|(name, ops)| {
            let mut p = SlotPlan::new();
            for op in *ops {
                match *op {
                    Op::V => op_v(&mut p),
                    Op::E(k, j) => op_e(&mut p, k, j),
                }
                .expect("base pattern operations are valid");
            }
            (*name, p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_vertex_operations() {
        let mut p = SlotPlan::new();
        for _ in 0..3 {
            op_v(&mut p).unwrap();
        }
        assert_eq!(p.edges.len(), 6);
        assert_eq!(p.degrees(), vec![3, 2, 1]);
        assert!(op_v(&mut p).is_err());
    }

    #[test]
    fn v_v_e_is_two_two_two() {
        let mut p = SlotPlan::new();
        op_v(&mut p).unwrap();
        op_v(&mut p).unwrap();
        op_e(&mut p, 0, 2).unwrap();
        assert_eq!(p.degrees(), vec![2, 2, 2]);
        assert_eq!(p.edges.len(), 6);
    }

    #[test]
    fn edge_operation_needs_an_edge() {
        assert!(op_e(&mut SlotPlan::new(), 0, 0).is_err());
    }

    #[test]
    fn bases_have_named_degrees() {
        for (name, p) in base_patterns() {
            let mut d = p.degrees();
            d.sort_unstable_by(|a, b| b.cmp(a));
            let s: Vec<String> = d.iter().map(usize::to_string).collect();
            assert_eq!(s.join("-"), name);
            assert_eq!(p.edges.len(), 6);
            for b in 0..TARGET_SLOTS {
                assert!(p.incident(b) <= 3);
            }
        }
    }
}
