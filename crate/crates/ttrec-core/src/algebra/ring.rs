use core::fmt::Debug;

use super::rational::{height, Q};
use num_traits::{One, Zero};

/// Commutative-or-not ring with shape-carrying elements (matrices know their size).
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, c: &Q) -> Self;
    fn from_q_like(&self, c: &Q) -> Self {
        self.one_like().scaled(c)
    }
}

pub trait Field: Ring {
    fn recip(&self) -> Option<Self>;
    fn over(&self, o: &Self) -> Option<Self> {
        o.recip().map(|r| self.times(&r))
    }
    /// Size heuristic for pivot choice; smaller is preferred.
    fn weight(&self) -> u64 {
        0
    }
}

impl Ring for Q {
    fn zero_like(&self) -> Self {
        Q::zero()
    }
    fn one_like(&self) -> Self {
        Q::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Q) -> Self {
        self * c
    }
}

impl Field for Q {
    fn recip(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| Q::recip(self))
    }
    fn weight(&self) -> u64 {
        height(self)
    }
}
