use core::fmt;

use super::rational::{fmt_q, Q};

/// A point of the Riemann sphere with rational affine coordinate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Finite(Q),
    Infinity,
}

impl Point {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            Point::Finite(a) => Some(a),
            Point::Infinity => None,
        }
    }
    pub fn is_infinite(&self) -> bool {
        matches!(self, Point::Infinity)
    }
}

impl From<Q> for Point {
    fn from(a: Q) -> Self {
        Point::Finite(a)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(a) => f.write_str(&fmt_q(a)),
            Point::Infinity => f.write_str("inf"),
        }
    }
}
