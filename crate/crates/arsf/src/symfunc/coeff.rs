use crate::exact::{CyclotomicNumber, RatFun, Rational, UniPoly};
use num_traits::Zero;
use std::fmt::Debug;

/// Coefficient ring shared by symmetric-function expansions.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn mul_rat(&self, r: &Rational) -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        crate::exact::rat(0)
    }
    fn one() -> Self {
        crate::exact::rat(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn mul_rat(&self, r: &Rational) -> Self {
        self * r
    }
}

impl Coeff for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        UniPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        UniPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        UniPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        UniPoly::neg(self)
    }
    fn from_rational(r: &Rational) -> Self {
        UniPoly::constant(r.clone())
    }
    fn mul_rat(&self, r: &Rational) -> Self {
        self.scale(r)
    }
}

impl Coeff for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RatFun::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFun::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFun::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatFun::neg(self)
    }
    fn from_rational(r: &Rational) -> Self {
        RatFun::from_rational(r.clone())
    }
    fn mul_rat(&self, r: &Rational) -> Self {
        self.scale(r)
    }
}

impl Coeff for CyclotomicNumber {
    fn zero() -> Self {
        CyclotomicNumber::zero()
    }
    fn one() -> Self {
        CyclotomicNumber::one()
    }
    fn is_zero(&self) -> bool {
        CyclotomicNumber::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        CyclotomicNumber::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        CyclotomicNumber::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        CyclotomicNumber::mul(self, other)
    }
    fn neg(&self) -> Self {
        CyclotomicNumber::neg(self)
    }
    fn from_rational(r: &Rational) -> Self {
        CyclotomicNumber::from_rational(r.clone())
    }
    fn mul_rat(&self, r: &Rational) -> Self {
        self.scale(r)
    }
}
