use std::fmt;
use std::str::FromStr;

use rug::Float;

use crate::error::{Error, Result};
use crate::numkernel::PrecisionContext;

/// An exact rational `p/q` kept in lowest terms with `q > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QRational {
    p: i64,
    q: i64,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl QRational {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::domain("rational with zero denominator"));
        }
        let g = gcd(p, q).max(1);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Ok(QRational { p, q })
    }

    pub fn integer(p: i64) -> Self {
        QRational { p, q: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.p
    }

    pub fn denom(&self) -> i64 {
        self.q
    }

    pub fn is_positive(&self) -> bool {
        self.p > 0
    }

    pub fn to_real(&self, ctx: &PrecisionContext) -> Float {
        ctx.ratio(self.p, self.q)
    }

    pub fn checked_add(&self, other: &QRational) -> Option<QRational> {
        let p = self
            .p
            .checked_mul(other.q)?
            .checked_add(other.p.checked_mul(self.q)?)?;
        let q = self.q.checked_mul(other.q)?;
        QRational::new(p, q).ok()
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl FromStr for QRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("{s:?} is not a rational p/q"));
        match s.split_once('/') {
            Some((p, q)) => QRational::new(
                p.trim().parse().map_err(|_| bad())?,
                q.trim().parse().map_err(|_| bad())?,
            ),
            None => Ok(QRational::integer(s.trim().parse().map_err(|_| bad())?)),
        }
    }
}
