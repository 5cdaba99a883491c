//! Davis orbicomplex of a theta cycle and jester-hat arithmetic.
//!
//! The singular set is a star with `N` labeled edges. Each branch with `n`
//! subdivisions contributes a polygonal orbifold with `r = n + 2` reflection
//! edges, attached along star edges `i` and `i + 1`.

use serde::{Deserialize, Serialize};

use crate::error::HatError;
use crate::graph::{Rational, ThetaCycle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchOrbifold {
    pub theta: usize,
    pub branch: usize,
    pub n: u32,
    pub r: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DavisOrbicomplex {
    #[serde(rename = "N")]
    pub n_labels: usize,
    pub orbifolds: Vec<BranchOrbifold>,
}

impl DavisOrbicomplex {
    /// Orbifolds attached along star edges `theta` and `theta + 1`.
    pub fn orbifolds_of(&self, theta: usize) -> impl Iterator<Item = &BranchOrbifold> {
        self.orbifolds.iter().filter(move |o| o.theta == theta)
    }
}

pub fn build_orbicomplex(graph: &ThetaCycle) -> DavisOrbicomplex {
    let orbifolds = graph
        .thetas()
        .iter()
        .enumerate()
        .flat_map(|(i, theta)| {
            theta.branches().iter().enumerate().map(move |(b, &n)| BranchOrbifold {
                theta: i + 1,
                branch: b + 1,
                n,
                r: u64::from(n) + 2,
            })
        })
        .collect();
    DavisOrbicomplex { n_labels: graph.len(), orbifolds }
}

/// A disk with `cone_points` order-two cone points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct JesterHat {
    pub cone_points: u64,
}

/// The jester hat covering an orbifold with `r` reflection edges in degree `d`:
/// `c = (d/2)(r - 3) + 2`.
pub fn jester_hat_cover(r: u64, d: u64) -> Result<JesterHat, HatError> {
    if d == 0 {
        return Err(HatError::ZeroDegree);
    }
    if d % 2 == 1 {
        return Err(HatError::OddDegree(d));
    }
    if r < 3 {
        return Err(HatError::DegenerateOrbifold(r));
    }
    Ok(JesterHat { cone_points: d / 2 * (r - 3) + 2 })
}

/// Orbifold Euler characteristic `1 - c/2`.
pub fn hat_euler_characteristic(hat: JesterHat) -> Rational {
    Rational::from_integer(1) - Rational::new(hat.cone_points as i64, 2)
}
