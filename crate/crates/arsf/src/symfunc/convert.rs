use super::coeff::Coeff;
use super::expansion::{Basis, SymExpansion, TSpec};
use super::transition::{classical_tables, hl_spec_tables, hl_symbolic_tables};
use crate::exact::{CyclotomicNumber, RatFun, Rational};
use crate::partitions::Partition;
use crate::{ArsfError, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A degree slice of transition rows, rational or symbolic in `t`.
enum Rows {
    Rat(Arc<Vec<Vec<Rational>>>),
    Fun(Arc<Vec<Vec<RatFun>>>),
}

struct DegreeTable {
    parts: Vec<Partition>,
    pos: std::collections::HashMap<Partition, usize>,
    to_p: Rows,
    from_p: Rows,
}

/// Coefficients that can absorb a transition-matrix entry.
pub trait ApplyEntry: Coeff {
    /// Whether symbolic (`RatFun`) transition entries are representable.
    const SYMBOLIC_ENTRIES: bool;
    fn mul_entry_rat(&self, e: &Rational) -> Self;
    fn mul_entry_fun(&self, e: &RatFun) -> Self;
}

impl ApplyEntry for RatFun {
    const SYMBOLIC_ENTRIES: bool = true;
    fn mul_entry_rat(&self, e: &Rational) -> Self {
        self.scale(e)
    }
    fn mul_entry_fun(&self, e: &RatFun) -> Self {
        self.mul(e)
    }
}

impl ApplyEntry for CyclotomicNumber {
    const SYMBOLIC_ENTRIES: bool = false;
    fn mul_entry_rat(&self, e: &Rational) -> Self {
        self.scale(e)
    }
    fn mul_entry_fun(&self, _e: &RatFun) -> Self {
        unreachable!("symbolic entries rejected for cyclotomic expansions")
    }
}

impl ApplyEntry for Rational {
    const SYMBOLIC_ENTRIES: bool = false;
    fn mul_entry_rat(&self, e: &Rational) -> Self {
        self * e
    }
    fn mul_entry_fun(&self, _e: &RatFun) -> Self {
        unreachable!("symbolic entries rejected for rational expansions")
    }
}

fn table_for<C: ApplyEntry>(basis: &Basis, degree: u32) -> Result<Option<DegreeTable>> {
    // PowerSum is the pivot: identity, no table
    let make = |parts: &[Partition],
                pos: &std::collections::HashMap<Partition, usize>,
                to_p: Rows,
                from_p: Rows| DegreeTable {
        parts: parts.to_vec(),
        pos: pos.clone(),
        to_p,
        from_p,
    };
    match basis {
        Basis::PowerSum => Ok(None),
        Basis::Monomial | Basis::Homogeneous | Basis::Schur => {
            let t = classical_tables(degree);
            let (to_p, from_p) = match basis {
                Basis::Monomial => (t.m_to_p.clone(), t.m_from_p.clone()),
                Basis::Homogeneous => (t.h_to_p.clone(), t.h_from_p.clone()),
                Basis::Schur => (t.s_to_p.clone(), t.s_from_p.clone()),
                _ => unreachable!(),
            };
            Ok(Some(make(
                &t.index.parts,
                &t.index.pos,
                Rows::Rat(Arc::new(to_p)),
                Rows::Rat(Arc::new(from_p)),
            )))
        }
        Basis::HlP(ts) | Basis::HlQ(ts) | Basis::HlMod(ts) => match ts {
            TSpec::Symbolic => {
                if !C::SYMBOLIC_ENTRIES {
                    return Err(ArsfError::RingMismatch(
                        "symbolic Hall-Littlewood basis requires rational-function coefficients"
                            .into(),
                    ));
                }
                let t = hl_symbolic_tables(degree)?;
                let (to_p, from_p) = match basis {
                    Basis::HlP(_) => (t.hlp_to_p.clone(), t.hlp_from_p.clone()),
                    Basis::HlQ(_) => (t.hlq_to_p.clone(), t.hlq_from_p.clone()),
                    Basis::HlMod(_) => (t.hlmod_to_p.clone(), t.hlmod_from_p.clone()),
                    _ => unreachable!(),
                };
                Ok(Some(make(
                    &t.index.parts,
                    &t.index.pos,
                    Rows::Fun(Arc::new(to_p)),
                    Rows::Fun(Arc::new(from_p)),
                )))
            }
            TSpec::At(t0) => {
                let t = hl_spec_tables(degree, t0)?;
                let (to_p, from_p) = match basis {
                    Basis::HlP(_) => (t.hlp_to_p.clone(), t.hlp_from_p.clone()),
                    Basis::HlQ(_) => (t.hlq_to_p.clone(), t.hlq_from_p.clone()),
                    Basis::HlMod(_) => (t.hlmod_to_p.clone(), t.hlmod_from_p.clone()),
                    _ => unreachable!(),
                };
                Ok(Some(make(
                    &t.index.parts,
                    &t.index.pos,
                    Rows::Rat(Arc::new(to_p)),
                    Rows::Rat(Arc::new(from_p)),
                )))
            }
        },
    }
}

fn apply_rows<C: ApplyEntry>(coeffs: &[(usize, C)], rows: &Rows, n: usize) -> Vec<C> {
    let mut out = vec![C::zero(); n];
    match rows {
        Rows::Rat(m) => {
            for (i, c) in coeffs {
                for (j, e) in m[*i].iter().enumerate() {
                    if !num_traits::Zero::is_zero(e) {
                        out[j] = out[j].add(&c.mul_entry_rat(e));
                    }
                }
            }
        }
        Rows::Fun(m) => {
            for (i, c) in coeffs {
                for (j, e) in m[*i].iter().enumerate() {
                    if !e.is_zero() {
                        out[j] = out[j].add(&c.mul_entry_fun(e));
                    }
                }
            }
        }
    }
    out
}

fn check_t_compat(a: &Basis, b: &Basis) -> Result<()> {
    if let (Some(TSpec::At(x)), Some(TSpec::At(y))) = (a.t_param(), b.t_param()) {
        if x != y {
            return Err(ArsfError::BasisMismatch(format!(
                "Hall-Littlewood parameters differ: {x} vs {y}"
            )));
        }
    }
    if matches!(a.t_param(), Some(TSpec::Symbolic)) && matches!(b.t_param(), Some(TSpec::At(_)))
        || matches!(a.t_param(), Some(TSpec::At(_)))
            && matches!(b.t_param(), Some(TSpec::Symbolic))
    {
        return Err(ArsfError::BasisMismatch(
            "cannot mix symbolic and specialized Hall-Littlewood parameters".into(),
        ));
    }
    Ok(())
}

impl<C: ApplyEntry> SymExpansion<C> {
    /// Re-express the same symmetric function in another basis, routed
    /// through power sums degree by degree.
    pub fn convert(&self, target: &Basis) -> Result<Self> {
        check_t_compat(self.basis(), target)?;
        if self.basis() == target {
            return Ok(self.clone());
        }
        let mut out = SymExpansion::zero(target.clone());
        let mut by_degree: BTreeMap<u32, Vec<(&Partition, &C)>> = BTreeMap::new();
        for (k, c) in self.terms() {
            by_degree.entry(k.size() as u32).or_default().push((k, c));
        }
        for (d, entries) in by_degree {
            let src = table_for::<C>(self.basis(), d)?;
            let dst = table_for::<C>(target, d)?;
            // source coefficients in the p basis
            let p_coeffs: Vec<(usize, C)> = match &src {
                None => {
                    let index = classical_tables(d).index.clone();
                    entries
                        .iter()
                        .map(|(k, c)| (index.pos[*k], (*c).clone()))
                        .collect()
                }
                Some(table) => {
                    let packed: Vec<(usize, C)> = entries
                        .iter()
                        .map(|(k, c)| (table.pos[*k], (*c).clone()))
                        .collect();
                    let v = apply_rows(&packed, &table.to_p, table.parts.len());
                    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
                }
            };
            match &dst {
                None => {
                    let index = classical_tables(d).index.clone();
                    for (j, c) in p_coeffs {
                        out.add_term(index.parts[j].clone(), c);
                    }
                }
                Some(table) => {
                    let v = apply_rows(&p_coeffs, &table.from_p, table.parts.len());
                    for (j, c) in v.into_iter().enumerate() {
                        out.add_term(table.parts[j].clone(), c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product of two expansions, multiplied in the power-sum basis and
    /// re-expressed in this expansion's basis.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.multiply_truncated(other, u32::MAX)
    }

    /// Product truncated to `max_degree` before leaving the power-sum basis,
    /// so truncated pipelines never build transition tables beyond their cap.
    pub fn multiply_truncated(&self, other: &Self, max_degree: u32) -> Result<Self> {
        check_t_compat(self.basis(), other.basis())?;
        let a = self.convert(&Basis::PowerSum)?;
        let b = other.convert(&Basis::PowerSum)?;
        let mut prod = SymExpansion::zero(Basis::PowerSum);
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                if ka.size() + kb.size() <= max_degree as u64 {
                    prod.add_term(ka.union(kb), ca.mul(cb));
                }
            }
        }
        prod.convert(self.basis())
    }
}

/// Structure constants of the Hall-Littlewood `P` basis at symbolic `t`:
/// the `P`-expansion of `P_lambda * P_mu`.
pub fn hl_structure_constants_symbolic(
    lambda: &Partition,
    mu: &Partition,
) -> Result<BTreeMap<Partition, RatFun>> {
    let basis = Basis::HlP(TSpec::Symbolic);
    let a = SymExpansion::<RatFun>::from_terms(basis.clone(), [(lambda.clone(), RatFun::one())]);
    let b = SymExpansion::<RatFun>::from_terms(basis, [(mu.clone(), RatFun::one())]);
    let prod = a.multiply(&b)?;
    Ok(prod.terms().map(|(k, c)| (k.clone(), c.clone())).collect())
}

/// Structure constants of the Hall-Littlewood `P` basis at `t = t0`.
pub fn hl_structure_constants_at(
    lambda: &Partition,
    mu: &Partition,
    t0: &Rational,
) -> Result<BTreeMap<Partition, Rational>> {
    let basis = Basis::HlP(TSpec::At(t0.clone()));
    let a = SymExpansion::<Rational>::from_terms(
        basis.clone(),
        [(lambda.clone(), crate::exact::rat(1))],
    );
    let b = SymExpansion::<Rational>::from_terms(basis, [(mu.clone(), crate::exact::rat(1))]);
    let prod = a.multiply(&b)?;
    Ok(prod.terms().map(|(k, c)| (k.clone(), c.clone())).collect())
}

/// Truncated plethystic exponential: `1 + h_1 + ... + h_degree` in the
/// homogeneous basis.
pub fn plethystic_exp_truncated(degree: u32) -> SymExpansion<RatFun> {
    let mut e = SymExpansion::zero(Basis::Homogeneous);
    e.add_term(Partition::empty(), RatFun::one());
    for m in 1..=degree {
        e.add_term(Partition::new(vec![m]), RatFun::one());
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio, UniPoly};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn h2_to_monomials() {
        let h2 = SymExpansion::<Rational>::from_terms(
            Basis::Homogeneous,
            [(p(&[2]), rat(1))],
        );
        let m = h2.convert(&Basis::Monomial).unwrap();
        assert_eq!(m.coeff(&p(&[2])), rat(1));
        assert_eq!(m.coeff(&p(&[1, 1])), rat(1));
    }

    #[test]
    fn hl_p2_to_monomials_symbolic() {
        let one = SymExpansion::<RatFun>::from_terms(
            Basis::HlP(TSpec::Symbolic),
            [(p(&[2]), RatFun::one())],
        );
        let m = one.convert(&Basis::Monomial).unwrap();
        assert_eq!(m.coeff(&p(&[2])), RatFun::one());
        assert_eq!(
            m.coeff(&p(&[1, 1])),
            RatFun::from_poly(UniPoly::from_i64(&[1, -1]))
        );
    }

    #[test]
    fn round_trips_all_bases() {
        let bases = [
            Basis::Monomial,
            Basis::Homogeneous,
            Basis::PowerSum,
            Basis::Schur,
            Basis::HlP(TSpec::Symbolic),
            Basis::HlQ(TSpec::Symbolic),
            Basis::HlMod(TSpec::Symbolic),
        ];
        // a haphazard symbolic expansion of mixed degrees
        let f = SymExpansion::<RatFun>::from_terms(
            Basis::Schur,
            [
                (p(&[3, 1]), RatFun::from_rational(ratio(2, 3))),
                (p(&[2]), RatFun::t()),
                (Partition::empty(), RatFun::one()),
            ],
        );
        for b1 in &bases {
            for b2 in &bases {
                let once = f.convert(b1).unwrap();
                let there = once.convert(b2).unwrap();
                let back = there.convert(b1).unwrap();
                assert_eq!(once, back, "{b1:?} <-> {b2:?}");
            }
        }
    }

    #[test]
    fn specialized_round_trip() {
        let t0 = ratio(1, 3);
        let f = SymExpansion::<Rational>::from_terms(
            Basis::HlP(TSpec::At(t0.clone())),
            [(p(&[2, 1]), rat(5)), (p(&[1]), ratio(-1, 2))],
        );
        let g = f.convert(&Basis::Schur).unwrap().convert(&Basis::HlP(TSpec::At(t0))).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn mixed_t_is_rejected() {
        let f = SymExpansion::<Rational>::from_terms(
            Basis::HlP(TSpec::At(ratio(1, 2))),
            [(p(&[1]), rat(1))],
        );
        assert!(f.convert(&Basis::HlQ(TSpec::At(ratio(1, 3)))).is_err());
    }

    #[test]
    fn pieri_product_symbolic() {
        // P_1 * P_1 = P_2 + (1+t) P_11
        let c = hl_structure_constants_symbolic(&p(&[1]), &p(&[1])).unwrap();
        assert_eq!(c[&p(&[2])], RatFun::one());
        assert_eq!(c[&p(&[1, 1])], RatFun::from_poly(UniPoly::from_i64(&[1, 1])));
    }

    #[test]
    fn multiply_by_unit() {
        let f = SymExpansion::<Rational>::from_terms(
            Basis::Schur,
            [(p(&[2, 1]), rat(4)), (p(&[1]), rat(-3))],
        );
        let one = SymExpansion::unit(Basis::Schur);
        assert_eq!(f.multiply(&one).unwrap(), f);
    }

    #[test]
    fn h1_squared_equals_p1_squared() {
        let h1 = SymExpansion::<Rational>::from_terms(Basis::Homogeneous, [(p(&[1]), rat(1))]);
        let lhs = h1.multiply(&h1).unwrap().convert(&Basis::Monomial).unwrap();
        let p1 = SymExpansion::<Rational>::from_terms(Basis::PowerSum, [(p(&[1]), rat(1))]);
        let rhs = p1.multiply(&p1).unwrap().convert(&Basis::Monomial).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_truncated_in_hl_basis() {
        // coefficient of P_lambda in Exp is t^n(lambda)
        let e = plethystic_exp_truncated(5)
            .convert(&Basis::HlP(TSpec::Symbolic))
            .unwrap();
        for (lam, c) in e.terms() {
            assert_eq!(
                c,
                &RatFun::from_poly(UniPoly::t_power(lam.n_stat() as usize)),
                "lambda = {lam}"
            );
        }
        assert_eq!(e.len(), (0..=5u32).map(|d| crate::partitions::enumerate_partitions(d).len()).sum::<usize>());
    }
}
