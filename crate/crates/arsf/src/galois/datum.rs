use super::character::CharacterData;
use super::group::FiniteGroup;
use crate::exact::{ratio, CyclotomicNumber, Rational};
use crate::partitions::PrimeKey;
use crate::symfunc::PowerTraceSeq;
use crate::{ArsfError, Result};
use num_bigint::BigInt;

/// Splitting data of one base-field prime in a Galois extension: the inertia
/// subgroup, a Frobenius representative normalizing it, and the residue
/// degrees of the primes above.
#[derive(Clone, Debug, PartialEq)]
pub struct SplittingDatum {
    pub prime: PrimeKey,
    pub inertia: Vec<u16>,
    pub frobenius: u16,
    pub residue_degrees: Vec<u32>,
}

impl SplittingDatum {
    pub fn unramified(prime: PrimeKey, frobenius: u16, group: &FiniteGroup) -> Self {
        let f = group.element_order(frobenius) as u32;
        let g = group.order() as u32 / f;
        SplittingDatum {
            prime,
            inertia: vec![0],
            frobenius,
            residue_degrees: vec![f; g as usize],
        }
    }

    pub fn ramification_index(&self) -> u32 {
        self.inertia.len() as u32
    }

    pub fn is_unramified(&self) -> bool {
        self.inertia.len() <= 1
    }

    /// Structural checks against the group: inertia is a subgroup normalized
    /// by the Frobenius, and `e * sum_i f_i = |G|`.
    pub fn validate(&self, group: &FiniteGroup) -> Result<()> {
        let mut inertia = self.inertia.clone();
        inertia.sort_unstable();
        inertia.dedup();
        if inertia.len() != self.inertia.len() {
            return Err(ArsfError::InvalidTable(format!(
                "duplicate inertia elements at prime {}",
                self.prime
            )));
        }
        if !group.is_subgroup(&inertia) {
            return Err(ArsfError::InvalidTable(format!(
                "inertia at prime {} is not a subgroup",
                self.prime
            )));
        }
        if !group.normalizes(self.frobenius, &inertia) {
            return Err(ArsfError::NotNormalizing(self.frobenius as usize));
        }
        let e = inertia.len() as u64;
        let ef_sum: u64 = self.residue_degrees.iter().map(|&f| e * f as u64).sum();
        if ef_sum != group.order() as u64 {
            return Err(ArsfError::InvalidTable(format!(
                "e*f*g bookkeeping fails at prime {}: e = {e}, f = {:?}, |G| = {}",
                self.prime,
                self.residue_degrees,
                group.order()
            )));
        }
        Ok(())
    }
}

/// Inertia-averaged power trace: the trace of the k-th power of Frobenius on
/// the inertia invariants, `(1/|I|) sum_{h in I} chi(sigma^k h)`.
pub fn inertia_power_trace(
    chi: &CharacterData,
    sigma: u16,
    inertia: &[u16],
    k: u64,
) -> Result<CyclotomicNumber> {
    let group = chi.group();
    if !group.normalizes(sigma, inertia) {
        return Err(ArsfError::NotNormalizing(sigma as usize));
    }
    let sk = group.pow(sigma, k);
    let mut s = CyclotomicNumber::zero();
    for &h in inertia {
        s = s.add(&chi.value(group.mul(sk, h)));
    }
    Ok(s.scale(&ratio(1, inertia.len() as i64)))
}

/// `dim V^I = (1/|I|) sum_{h in I} chi(h)`; must be a non-negative integer.
pub fn invariant_dim(chi: &CharacterData, inertia: &[u16]) -> Result<u64> {
    let d = inertia_power_trace(chi, 0, inertia, 1)?;
    match d.as_rational() {
        Some(r) if r.denom() == &BigInt::from(1) && r.numer() >= &BigInt::from(0) => {
            Ok(u64::try_from(r.numer().clone()).expect("non-negative"))
        }
        _ => Err(ArsfError::InvalidInput(format!(
            "invariant dimension is not a non-negative integer: {d}"
        ))),
    }
}

/// Per-prime package consumed by all series code: the norm and the power
/// traces of Frobenius on the inertia invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct GaloisDatum {
    pub prime: PrimeKey,
    pub power_traces: PowerTraceSeq,
    pub invariant_dim: u64,
}

/// Assemble the per-prime data for a character: traces for `k = 1..=degree`,
/// plus the invariant dimension, cross-checked against the trace at the
/// group-order power (where Frobenius acts trivially).
pub fn galois_datum(
    chi: &CharacterData,
    sd: &SplittingDatum,
    degree: usize,
) -> Result<GaloisDatum> {
    let traces: Vec<CyclotomicNumber> = (1..=degree as u64)
        .map(|k| inertia_power_trace(chi, sd.frobenius, &sd.inertia, k))
        .collect::<Result<_>>()?;
    let dim = invariant_dim(chi, &sd.inertia)?;
    let order_trace =
        inertia_power_trace(chi, sd.frobenius, &sd.inertia, chi.group().order() as u64)?;
    if order_trace.as_rational() != Some(Rational::from_integer(BigInt::from(dim))) {
        return Err(ArsfError::InvalidInput(format!(
            "trace at the group-order power ({order_trace}) disagrees with dim V^I = {dim}"
        )));
    }
    Ok(GaloisDatum {
        prime: sd.prime,
        power_traces: PowerTraceSeq::new(traces),
        invariant_dim: dim,
    })
}
