use super::{rat, Rational};
use num_traits::{One, Zero};
use std::fmt;

/// Dense univariate polynomial over `Rational` in the formal variable `t`.
///
/// Invariant: no trailing zero coefficients, so `coeffs.len()` determines the
/// degree and the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly { coeffs: vec![c] }.normalized()
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        UniPoly { coeffs }.normalized()
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![rat(0); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// `t^k`.
    pub fn t_power(k: usize) -> Self {
        UniPoly::monomial(rat(1), k)
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(|| rat(0))
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        UniPoly { coeffs }.normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![rat(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly { coeffs }.normalized()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
        .normalized()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    ///
    /// Panics if `div` is zero.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = vec![rat(0); self.coeffs.len().saturating_sub(div.coeffs.len()) + 1];
        let dlead = div.leading();
        while !rem.is_zero() && rem.coeffs.len() >= div.coeffs.len() {
            let k = rem.coeffs.len() - div.coeffs.len();
            let c = rem.leading() / dlead.clone();
            quot[k] = c.clone();
            for (j, b) in div.coeffs.iter().enumerate() {
                let v = rem.coeff(k + j) - &c * b;
                rem.coeffs[k + j] = v;
            }
            rem = rem.normalized();
        }
        (UniPoly { coeffs: quot }.normalized(), rem)
    }

    /// Exact division; returns `None` when the remainder is nonzero.
    pub fn div_exact(&self, div: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(div);
        r.is_zero().then_some(q)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn make_monic(&self) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let lead = self.leading();
        self.scale(&(rat(1) / lead))
    }

    pub fn eval(&self, t0: &Rational) -> Rational {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * t0 + c;
        }
        acc
    }

    /// Coefficient list reversed: `t^deg * self(1/t)`.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        UniPoly { coeffs }.normalized()
    }

    /// Multiplicative inverse modulo `t^order` (requires nonzero constant term).
    pub fn inverse_mod_t(&self, order: usize) -> Option<Self> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return None;
        }
        let mut inv = vec![rat(1) / c0.clone()];
        for k in 1..order {
            // coefficient of t^k in self*inv must vanish
            let mut s = rat(0);
            for j in 1..=k.min(self.degree()) {
                s += self.coeff(j) * &inv[k - j];
            }
            inv.push(-s / c0.clone());
        }
        Some(UniPoly::from_coeffs(inv))
    }

    pub fn truncate(&self, order: usize) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().take(order).cloned().collect())
    }

    /// All integer coefficients?
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom() == &num_bigint::BigInt::from(1))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = super::rational_to_string(c);
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", cs),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != "1" {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divide_difference_of_squares() {
        // (1 - t^2) / (1 - t) = 1 + t
        let num = UniPoly::from_i64(&[1, 0, -1]);
        let den = UniPoly::from_i64(&[1, -1]);
        assert_eq!(num.div_exact(&den).unwrap(), UniPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = UniPoly::from_i64(&[2, 2]); // 2 + 2t
        let b = UniPoly::from_i64(&[4, 8, 4]); // 4(1+t)^2
        assert_eq!(a.gcd(&b), UniPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn inverse_mod_t_works() {
        let p = UniPoly::from_i64(&[1, -1]); // 1 - t
        let inv = p.inverse_mod_t(5).unwrap();
        assert_eq!(inv, UniPoly::from_i64(&[1, 1, 1, 1, 1]));
        assert!(UniPoly::from_i64(&[0, 1]).inverse_mod_t(3).is_none());
    }

    #[test]
    fn display_reads_naturally() {
        let p = UniPoly::from_i64(&[1, 0, -3]);
        assert_eq!(format!("{p}"), "-3*t^2 + 1");
    }
}
