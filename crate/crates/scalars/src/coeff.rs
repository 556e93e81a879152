//! Coefficient trait shared by all graded series types. Series code is
//! generic over the scalar so the same machinery runs over plain rationals,
//! rationals with unknowns, and polynomial coefficients (used for exactly
//! integrated ODE/integral parameters).

use crate::affine::AffineScalar;
use crate::rational::Rational;
use std::fmt::{Debug, Display};

pub trait Coeff: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rat(r: Rational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn mul_rat(&self, r: &Rational) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn one() -> Self {
        Self::from_rat(Rational::one())
    }

    /// Plain rational value, if the coefficient is one.
    fn try_rat(&self) -> Option<Rational>;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_rat(r: Rational) -> Self {
        r
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_rat(&self, r: &Rational) -> Self {
        self * r
    }
    fn try_rat(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Coeff for AffineScalar {
    fn zero() -> Self {
        AffineScalar::zero()
    }
    fn is_zero(&self) -> bool {
        AffineScalar::is_zero(self)
    }
    fn from_rat(r: Rational) -> Self {
        AffineScalar::from_rat(r)
    }
    fn add(&self, other: &Self) -> Self {
        AffineScalar::add(self, other)
    }
    fn neg(&self) -> Self {
        AffineScalar::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        AffineScalar::mul(self, other)
    }
    fn mul_rat(&self, r: &Rational) -> Self {
        AffineScalar::mul_rat(self, r)
    }
    fn try_rat(&self) -> Option<Rational> {
        self.as_rational()
    }
}
