//! Exact arithmetic kernel: rationals, cyclotomic numbers, and univariate
//! polynomials / rational functions in a formal parameter `t`.

mod cyclotomic;
mod poly;
mod ratfun;

pub use cyclotomic::{
    cyclotomic_polynomial, euler_phi, root_of_unity, CyclotomicNumber, CyclotomicSerial,
};
pub use poly::UniPoly;
pub use ratfun::RatFun;

use num_bigint::BigInt;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical string form `p/q` (or `p` when the denominator is 1).
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q`.
pub fn rational_from_str(s: &str) -> crate::Result<Rational> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| crate::ArsfError::InvalidInput(format!("bad integer {t:?}: {e}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den == BigInt::from(0) {
                return Err(crate::ArsfError::InvalidInput("zero denominator".into()));
            }
            Ok(Rational::new(parse_int(n)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_string_round_trip() {
        let r = ratio(-3, 6);
        assert_eq!(rational_to_string(&r), "-1/2");
        assert_eq!(rational_from_str("-1/2").unwrap(), r);
        assert_eq!(rational_from_str("7").unwrap(), rat(7));
        assert!(rational_from_str("1/0").is_err());
    }
}
