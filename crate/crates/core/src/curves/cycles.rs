use serde::Serialize;

use crate::error::{Error, Result};

/// The 1-cycle `n·𝔞 + m·𝔟` in a chosen homology basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleRelation {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl CycleRelation {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        let rel = CycleRelation { a, b };
        if rel.components().all(|c| c == 0) {
            return Err(Error::domain("cycle relation must not be zero"));
        }
        Ok(rel)
    }

    /// Genus-one specialization `u·𝔞 + v·𝔟`.
    pub fn pair(u: i64, v: i64) -> Result<Self> {
        CycleRelation::new(vec![u], vec![v])
    }

    pub fn components(&self) -> impl Iterator<Item = i64> + '_ {
        self.a.iter().chain(self.b.iter()).copied()
    }
}

/// Whether the integer components have greatest common divisor 1.
pub fn primitive_check(rel: &CycleRelation) -> Result<bool> {
    let g = rel.components().fold(0i64, gcd);
    if g == 0 {
        return Err(Error::domain("primitive_check of the zero vector"));
    }
    Ok(g == 1)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
