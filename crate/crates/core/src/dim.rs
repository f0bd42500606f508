use std::fmt;

use serde::{Deserialize, Serialize};

/// Ambient dimension of the formation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Dim {
    Two,
    Three,
}

impl Dim {
    pub fn value(self) -> usize {
        match self {
            Dim::Two => 2,
            Dim::Three => 3,
        }
    }

    /// Degrees of freedom of a rigid body spanned by `n` points: a point,
    /// a segment, or a full body.
    pub fn body_dof(self, n: usize) -> usize {
        match (self, n) {
            (Dim::Two, 1) => 2,
            (Dim::Two, _) => 3,
            (Dim::Three, 1) => 3,
            (Dim::Three, 2) => 5,
            (Dim::Three, _) => 6,
        }
    }

    /// Rank of the rigidity matrix of a rigid graph on `n` vertices.
    pub fn rigid_rank(self, n: usize) -> usize {
        if n == 0 {
            return 0;
        }
        self.value() * n - self.body_dof(n)
    }

    /// Largest total DOF count of a persistent formation.
    pub fn max_total_dof(self) -> usize {
        match self {
            Dim::Two => 3,
            Dim::Three => 6,
        }
    }
}

impl TryFrom<u8> for Dim {
    type Error = String;

    fn try_from(v: u8) -> Result<Self, Self::Error> {
        match v {
            2 => Ok(Dim::Two),
            3 => Ok(Dim::Three),
            other => Err(format!("dimension must be 2 or 3, got {other}")),
        }
    }
}

impl From<Dim> for u8 {
    fn from(d: Dim) -> u8 {
        d.value() as u8
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}D", self.value())
    }
}
