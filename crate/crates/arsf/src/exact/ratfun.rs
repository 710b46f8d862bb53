use super::{rat, rational_to_string, Rational, UniPoly};
use crate::{ArsfError, Result};
use num_traits::{One, Zero};
use std::fmt;

/// Rational function in `t` over `Rational`.
///
/// Normal form: numerator and denominator coprime, denominator monic; zero is
/// `0/1`. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: UniPoly,
    den: UniPoly,
}

impl RatFun {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(ArsfError::RatFunDivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return RatFun {
                num: UniPoly::zero(),
                den: UniPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let lead = den.leading();
        if !lead.is_one() {
            let inv = rat(1) / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFun { num, den }
    }

    pub fn zero() -> Self {
        RatFun {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun::from_poly(UniPoly::one())
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFun {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        RatFun::from_poly(UniPoly::constant(c))
    }

    pub fn t() -> Self {
        RatFun::from_poly(UniPoly::t_power(1))
    }

    /// `t^k` with `k` possibly negative.
    pub fn t_power(k: i64) -> Self {
        if k >= 0 {
            RatFun::from_poly(UniPoly::t_power(k as usize))
        } else {
            RatFun {
                num: UniPoly::one(),
                den: UniPoly::t_power((-k) as usize),
            }
        }
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Is a polynomial (denominator 1)?
    pub fn as_poly(&self) -> Option<&UniPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::normalize(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(ArsfError::RatFunDivisionByZero);
        }
        Ok(Self::normalize(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn inv(&self) -> Result<Self> {
        RatFun::one().div(self)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalize(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFun::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact evaluation; a vanishing denominator is a pole error.
    pub fn eval(&self, t0: &Rational) -> Result<Rational> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return Err(ArsfError::RatFunPole(rational_to_string(t0)));
        }
        Ok(self.num.eval(t0) / d)
    }

    /// Substitute `t -> 1/t`.
    pub fn subst_inv_t(&self) -> Self {
        // f(1/t) = rev(num) * t^(deg den - deg num) / rev(den)
        let dn = self.num.degree() as i64;
        let dd = self.den.degree() as i64;
        let mut num = self.num.reversed();
        let mut den = self.den.reversed();
        if dd > dn {
            num = num.mul(&UniPoly::t_power((dd - dn) as usize));
        } else if dn > dd {
            den = den.mul(&UniPoly::t_power((dn - dd) as usize));
        }
        Self::normalize(num, den)
    }

    /// Power-series expansion about `t = 0` up to (excluding) `t^order`.
    /// Requires the denominator to be invertible at 0.
    pub fn series(&self, order: usize) -> Result<UniPoly> {
        let inv = self
            .den
            .inverse_mod_t(order)
            .ok_or_else(|| ArsfError::RatFunPole("0".into()))?;
        Ok(self.num.mul(&inv).truncate(order))
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
