use crate::exact::{rat, CyclotomicNumber, Rational};
use crate::partitions::{b_poly, MultiPartition, PrimeKey};
#[cfg(test)]
use crate::partitions::Partition;
use crate::symfunc::z_lambda;
use crate::Result;
use std::collections::BTreeMap;

/// `g(lambda*) = prod_q N(q)^(n(lambda^(q)))` as a rational.
pub fn g_value(mp: &MultiPartition) -> Rational {
    let mut g = rat(1);
    for (q, lam) in mp.entries() {
        g *= super::series::power_rat(q.norm, lam.n_stat());
    }
    g
}

/// `b(lambda*) = prod_q b_(lambda^(q))(1/N(q))`.
pub fn b_value(mp: &MultiPartition) -> Rational {
    let mut b = rat(1);
    for (q, lam) in mp.entries() {
        let t0 = Rational::new(1.into(), q.norm.into());
        b *= b_poly(lam).eval(&t0);
    }
    b
}

/// `z(lambda*) = prod_q prod_i m_i! i^(m_i) / (1 - N(q)^(-lambda_i))`.
pub fn z_value(mp: &MultiPartition) -> Rational {
    let mut z = rat(1);
    for (q, lam) in mp.entries() {
        z *= z_lambda(lam);
        let t0 = Rational::new(1.into(), q.norm.into());
        for &r in lam.parts() {
            let mut tpow = rat(1);
            for _ in 0..r {
                tpow *= &t0;
            }
            z /= rat(1) - tpow;
        }
    }
    z
}

/// The norm grading of a homogeneous element: the ideal exponent map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormGrade {
    pub exponents: BTreeMap<PrimeKey, u64>,
}

impl NormGrade {
    pub fn norm(&self) -> u64 {
        self.exponents
            .iter()
            .map(|(q, &e)| q.norm.pow(e as u32))
            .product()
    }
}

pub fn norm_grade(mp: &MultiPartition) -> NormGrade {
    NormGrade {
        exponents: mp.entries().map(|(q, lam)| (*q, lam.size())).collect(),
    }
}

/// Unit tag for finite global Hall-Littlewood combinations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HlUnit {
    P,
    Q,
    /// `g(lambda*)^(-1) P_(lambda*)`, the Satake-normalized unit.
    NormalizedP,
}

/// Finitely supported combination of arithmetic Hall-Littlewood functions.
#[derive(Clone, Debug, PartialEq)]
pub struct HlCombination {
    pub unit: HlUnit,
    pub terms: BTreeMap<MultiPartition, CyclotomicNumber>,
}

impl HlCombination {
    pub fn new(unit: HlUnit) -> Self {
        HlCombination {
            unit,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(unit: HlUnit, mp: MultiPartition) -> Self {
        let mut c = HlCombination::new(unit);
        c.terms.insert(mp, CyclotomicNumber::one());
        c
    }

    /// Coefficients rebased to the plain `P` unit.
    fn p_coefficients(&self) -> BTreeMap<MultiPartition, CyclotomicNumber> {
        self.terms
            .iter()
            .map(|(mp, c)| {
                let c = match self.unit {
                    HlUnit::P => c.clone(),
                    HlUnit::Q => c.scale(&b_value(mp)),
                    HlUnit::NormalizedP => c.scale(&g_value(mp).recip()),
                };
                (mp.clone(), c)
            })
            .collect()
    }
}

/// The arithmetic Hall inner product, extended bilinearly from
/// `<P_(lambda*), Q_(mu*)> = delta`; equivalently `<P, P> = 1/b`.
pub fn arithmetic_pairing(a: &HlCombination, b: &HlCombination) -> Result<CyclotomicNumber> {
    let pa = a.p_coefficients();
    let pb = b.p_coefficients();
    let mut out = CyclotomicNumber::zero();
    for (mp, ca) in &pa {
        if let Some(cb) = pb.get(mp) {
            out = out.add(&ca.mul(cb).scale(&b_value(mp).recip()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn z_value_single_box() {
        // z({p:(1)}) = 1/(1 - 1/p)
        let mp = MultiPartition::single(PrimeKey::rational(5), p(&[1]));
        assert_eq!(z_value(&mp), rat(1) / (rat(1) - ratio(1, 5)));
    }

    #[test]
    fn pairing_duality() {
        let mp = MultiPartition::from_entries([
            (PrimeKey::rational(2), p(&[1, 1])),
            (PrimeKey::rational(3), p(&[2])),
        ]);
        let a = HlCombination::single(HlUnit::P, mp.clone());
        let b = HlCombination::single(HlUnit::Q, mp.clone());
        assert!(arithmetic_pairing(&a, &b).unwrap().is_one());
        // <P, P> = 1/b
        let pp = arithmetic_pairing(&a, &a).unwrap();
        assert_eq!(pp.as_rational().unwrap(), b_value(&mp).recip());
        // distinct indices pair to zero
        let other = HlCombination::single(
            HlUnit::Q,
            MultiPartition::single(PrimeKey::rational(2), p(&[2])),
        );
        assert!(arithmetic_pairing(&a, &other).unwrap().is_zero());
    }

    #[test]
    fn norm_grading_is_multiplicative() {
        let m1 = MultiPartition::single(PrimeKey::rational(2), p(&[2, 1]));
        let m2 = MultiPartition::from_entries([
            (PrimeKey::rational(2), p(&[1])),
            (PrimeKey::rational(3), p(&[1])),
        ]);
        // product of monomial units multiplies norms
        assert_eq!(norm_grade(&m1).norm() * norm_grade(&m2).norm(), 8 * 6);
        assert_eq!(norm_grade(&m1).norm(), m1.norm());
    }
}
