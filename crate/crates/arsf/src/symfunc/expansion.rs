use super::coeff::Coeff;
use crate::exact::Rational;
use crate::partitions::Partition;
use crate::{ArsfError, Result};
use std::collections::BTreeMap;
use std::fmt;

/// Hall-Littlewood parameter: a formal `t` or a rational specialization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TSpec {
    Symbolic,
    At(Rational),
}

impl fmt::Display for TSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TSpec::Symbolic => write!(f, "t"),
            TSpec::At(r) => write!(f, "{}", crate::exact::rational_to_string(r)),
        }
    }
}

/// Basis tag for a single-alphabet symmetric function expansion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    Homogeneous,
    PowerSum,
    Schur,
    HlP(TSpec),
    HlQ(TSpec),
    HlMod(TSpec),
}

impl Basis {
    pub fn t_param(&self) -> Option<&TSpec> {
        match self {
            Basis::HlP(t) | Basis::HlQ(t) | Basis::HlMod(t) => Some(t),
            _ => None,
        }
    }

    pub fn short_name(&self) -> String {
        match self {
            Basis::Monomial => "m".into(),
            Basis::Homogeneous => "h".into(),
            Basis::PowerSum => "p".into(),
            Basis::Schur => "s".into(),
            Basis::HlP(t) => format!("P[{t}]"),
            Basis::HlQ(t) => format!("Q[{t}]"),
            Basis::HlMod(t) => format!("H~[{t}]"),
        }
    }
}

/// Finitely supported expansion of a symmetric function in a tagged basis.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct SymExpansion<C: Coeff> {
    basis: Basis,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coeff> SymExpansion<C> {
    pub fn zero(basis: Basis) -> Self {
        SymExpansion {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The constant function 1 in any basis.
    pub fn unit(basis: Basis) -> Self {
        let mut e = SymExpansion::zero(basis);
        e.add_term(Partition::empty(), C::one());
        e
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, C)>) -> Self {
        let mut e = SymExpansion::zero(basis);
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &Partition) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|k| k.size() as u32).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, key: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = o.get().add(&c);
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(ArsfError::BasisMismatch(format!(
                "{} vs {}",
                self.basis.short_name(),
                other.basis.short_name()
            )));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = SymExpansion::zero(self.basis.clone());
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul(c));
        }
        out
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        let mut out = SymExpansion::zero(self.basis.clone());
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul_rat(r));
        }
        out
    }

    /// Drop all terms of degree above `max_degree`.
    pub fn truncate_degree(&self, max_degree: u32) -> Self {
        SymExpansion {
            basis: self.basis.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.size() as u32 <= max_degree)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SymExpansion<D> {
        let mut out = SymExpansion::zero(self.basis.clone());
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    /// Re-tag the basis without touching coefficients (for unit scaling
    /// between normalized and plain Hall-Littlewood units).
    pub fn with_basis(&self, basis: Basis) -> Self {
        SymExpansion {
            basis,
            terms: self.terms.clone(),
        }
    }
}

impl<C: Coeff> fmt::Debug for SymExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.basis.short_name())?;
        for (k, c) in &self.terms {
            write!(f, " {k}:{c:?}")?;
        }
        Ok(())
    }
}
