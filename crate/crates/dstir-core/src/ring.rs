//! The coefficient-ring abstraction shared by the series engine.
//!
//! Both supported rings contain `Q`, so scalar division by factorials is
//! always available; only units have multiplicative inverses.

use crate::exactalg::{LambdaPoly, Rat};

/// Commutative ring with an embedding of `Q`.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// The image of a rational scalar under the canonical embedding.
    fn from_rat(r: &Rat) -> Self;
    /// Multiplication by a rational scalar.
    fn scale(&self, r: &Rat) -> Self;
    /// Multiplicative inverse, defined exactly on units.
    fn try_inv(&self) -> Option<Self>;
}

impl Ring for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn try_inv(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(<Rat as num_traits::One>::one() / self)
        }
    }
}

impl Ring for LambdaPoly {
    fn zero() -> Self {
        LambdaPoly::zero()
    }
    fn one() -> Self {
        LambdaPoly::one()
    }
    fn is_zero(&self) -> bool {
        LambdaPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rat(r: &Rat) -> Self {
        LambdaPoly::constant(r.clone())
    }
    fn scale(&self, r: &Rat) -> Self {
        LambdaPoly::scale(self, r)
    }
    fn try_inv(&self) -> Option<Self> {
        LambdaPoly::try_inv(self)
    }
}
