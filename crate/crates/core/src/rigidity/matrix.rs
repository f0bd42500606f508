use super::field::Fp;
use crate::dim::Dim;
use crate::graph::UndirectedView;

/// Rigidity matrix of a framework with integer coordinates, reduced
/// modulo a large prime. Row `e` carries `p_i - p_j` in the column block
/// of `i` and `p_j - p_i` in the block of `j`.
#[derive(Debug, Clone)]
pub struct RigidityMatrix {
    dim: usize,
    cols: usize,
    rows: Vec<Vec<Fp>>,
}

impl RigidityMatrix {
    pub fn new(g: &UndirectedView, dim: Dim, positions: &[Vec<i64>]) -> Self {
        let d = dim.value();
        assert_eq!(positions.len(), g.vertex_count());
        let cols = d * g.vertex_count();
        let rows = g
            .edges()
            .iter()
            .map(|&(i, j)| {
                let mut row = vec![Fp::ZERO; cols];
                for k in 0..d {
                    let diff = positions[i][k] - positions[j][k];
                    row[d * i + k] = Fp::from_i64(diff);
                    row[d * j + k] = Fp::from_i64(-diff);
                }
                row
            })
            .collect();
        RigidityMatrix { dim: d, cols, rows }
    }

    pub fn row(&self, e: usize) -> &[Fp] {
        &self.rows[e]
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        let mut basis = RowBasis::new(self.cols);
        for row in &self.rows {
            basis.insert(row);
            if basis.rank() == self.cols {
                break;
            }
        }
        basis.rank()
    }
}

/// Incrementally built row echelon basis over the prime field.
#[derive(Debug, Clone)]
pub struct RowBasis {
    cols: usize,
    rows: Vec<(usize, Vec<Fp>)>,
}

impl RowBasis {
    pub fn new(cols: usize) -> Self {
        RowBasis { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `row` if it is independent of the rows inserted so far.
    pub fn insert(&mut self, row: &[Fp]) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        let mut r = row.to_vec();
        for (pivot, b) in &self.rows {
            let c = r[*pivot];
            if c.is_zero() {
                continue;
            }
            for (x, &y) in r.iter_mut().zip(b.iter()).skip(*pivot) {
                *x = *x - c * y;
            }
        }
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[pivot].inverse();
        for x in r.iter_mut().skip(pivot) {
            *x = *x * inv;
        }
        self.rows.push((pivot, r));
        true
    }
}
