use super::expansion::{Basis, SymExpansion};
use crate::exact::{ratio, CyclotomicNumber};
use crate::partitions::Partition;
use crate::{ArsfError, Result};

/// Power-trace data `t_k = p_k` evaluated at an implicit finite eigenvalue
/// multiset. All downstream evaluations of symmetric functions at that
/// multiset go through these traces; the eigenvalues themselves are never
/// materialized.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerTraceSeq {
    traces: Vec<CyclotomicNumber>,
}

impl PowerTraceSeq {
    pub fn new(traces: Vec<CyclotomicNumber>) -> Self {
        PowerTraceSeq { traces }
    }

    /// Traces of a multiset consisting of `d` copies of the eigenvalue 1.
    pub fn ones(d: i64, degree: usize) -> Self {
        PowerTraceSeq {
            traces: vec![CyclotomicNumber::from_i64(d); degree],
        }
    }

    pub fn degree_bound(&self) -> usize {
        self.traces.len()
    }

    pub fn trace(&self, k: usize) -> Result<&CyclotomicNumber> {
        debug_assert!(k >= 1);
        self.traces.get(k - 1).ok_or(ArsfError::InsufficientTraces {
            have: self.traces.len(),
            need: k,
        })
    }

    /// `h_0..h_max` by Newton's identity `m h_m = sum_k t_k h_(m-k)`.
    pub fn h_evals(&self, max: usize) -> Result<Vec<CyclotomicNumber>> {
        let mut h = Vec::with_capacity(max + 1);
        h.push(CyclotomicNumber::one());
        for m in 1..=max {
            let mut s = CyclotomicNumber::zero();
            for k in 1..=m {
                s = s.add(&self.trace(k)?.mul(&h[m - k]));
            }
            h.push(s.scale(&ratio(1, m as i64)));
        }
        Ok(h)
    }

    /// `e_0..e_max` by the signed Newton identity
    /// `m e_m = sum_k (-1)^(k-1) t_k e_(m-k)`.
    pub fn e_evals(&self, max: usize) -> Result<Vec<CyclotomicNumber>> {
        let mut e = Vec::with_capacity(max + 1);
        e.push(CyclotomicNumber::one());
        for m in 1..=max {
            let mut s = CyclotomicNumber::zero();
            for k in 1..=m {
                let term = self.trace(k)?.mul(&e[m - k]);
                s = if k % 2 == 1 { s.add(&term) } else { s.sub(&term) };
            }
            e.push(s.scale(&ratio(1, m as i64)));
        }
        Ok(e)
    }

    pub fn p_eval(&self, lambda: &Partition) -> Result<CyclotomicNumber> {
        let mut out = CyclotomicNumber::one();
        for &r in lambda.parts() {
            out = out.mul(self.trace(r as usize)?);
        }
        Ok(out)
    }

    pub fn h_eval(&self, lambda: &Partition) -> Result<CyclotomicNumber> {
        let h = self.h_evals(lambda.part(0) as usize)?;
        let mut out = CyclotomicNumber::one();
        for &r in lambda.parts() {
            out = out.mul(&h[r as usize]);
        }
        Ok(out)
    }

    pub fn e_eval(&self, lambda: &Partition) -> Result<CyclotomicNumber> {
        let e = self.e_evals(lambda.part(0) as usize)?;
        let mut out = CyclotomicNumber::one();
        for &r in lambda.parts() {
            out = out.mul(&e[r as usize]);
        }
        Ok(out)
    }

    /// Schur evaluation through the Jacobi-Trudi determinant
    /// `det(h_(lambda_i - i + j))`.
    pub fn s_eval(&self, lambda: &Partition) -> Result<CyclotomicNumber> {
        let l = lambda.len();
        if l == 0 {
            return Ok(CyclotomicNumber::one());
        }
        let hmax = (lambda.part(0) as usize + l).saturating_sub(1);
        let h = self.h_evals(hmax)?;
        let entry = |i: usize, j: usize| -> CyclotomicNumber {
            let sub = lambda.part(i) as i64 - i as i64 + j as i64;
            if sub < 0 {
                CyclotomicNumber::zero()
            } else {
                h[sub as usize].clone()
            }
        };
        // Leibniz expansion; row counts here are tiny
        let mut total = CyclotomicNumber::zero();
        let mut perm: Vec<usize> = (0..l).collect();
        permute_signed(&mut perm, 0, 1, &mut |perm, sign| {
            let mut prod = CyclotomicNumber::one();
            for (i, &pi) in perm.iter().enumerate() {
                prod = prod.mul(&entry(i, pi));
                if prod.is_zero() {
                    break;
                }
            }
            if sign < 0 {
                prod = prod.neg();
            }
            total = total.add(&prod);
        });
        Ok(total)
    }
}

fn permute_signed(
    perm: &mut Vec<usize>,
    start: usize,
    sign: i64,
    visit: &mut impl FnMut(&[usize], i64),
) {
    let n = perm.len();
    if start == n {
        visit(perm, sign);
        return;
    }
    for i in start..n {
        perm.swap(start, i);
        let s = if i == start { sign } else { -sign };
        permute_signed(perm, start + 1, s, visit);
        perm.swap(start, i);
    }
}

/// Evaluate a cyclotomic-coefficient expansion at the traces. Homogeneous,
/// Schur and power-sum bases evaluate directly (Newton / Jacobi-Trudi);
/// everything else converts to power sums first.
pub fn eval_at_traces(
    f: &SymExpansion<CyclotomicNumber>,
    tr: &PowerTraceSeq,
) -> Result<CyclotomicNumber> {
    if f.degree() as usize > tr.degree_bound() {
        return Err(ArsfError::InsufficientTraces {
            have: tr.degree_bound(),
            need: f.degree() as usize,
        });
    }
    let mut total = CyclotomicNumber::zero();
    match f.basis() {
        Basis::PowerSum => {
            for (lam, c) in f.terms() {
                total = total.add(&c.mul(&tr.p_eval(lam)?));
            }
        }
        Basis::Homogeneous => {
            for (lam, c) in f.terms() {
                total = total.add(&c.mul(&tr.h_eval(lam)?));
            }
        }
        Basis::Schur => {
            for (lam, c) in f.terms() {
                total = total.add(&c.mul(&tr.s_eval(lam)?));
            }
        }
        _ => {
            let p = f.convert(&Basis::PowerSum)?;
            for (lam, c) in p.terms() {
                total = total.add(&c.mul(&tr.p_eval(lam)?));
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, root_of_unity};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn cyc(n: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_i64(n)
    }

    #[test]
    fn h2_at_pair_of_imaginary_units() {
        // multiset {i, -i}: t1 = 0, t2 = -2; h2 = (p1^2 + p2)/2 = -1
        let tr = PowerTraceSeq::new(vec![cyc(0), cyc(-2)]);
        let h = tr.h_evals(2).unwrap();
        assert_eq!(h[2], cyc(-1));
    }

    #[test]
    fn two_row_schur_vanishes_on_one_variable() {
        // single eigenvalue -1: t_k = (-1)^k
        let tr = PowerTraceSeq::new(vec![cyc(-1), cyc(1), cyc(-1), cyc(1)]);
        assert_eq!(tr.s_eval(&p(&[1, 1])).unwrap(), cyc(0));
        assert_eq!(tr.s_eval(&p(&[2])).unwrap(), cyc(1));
    }

    #[test]
    fn h_at_all_ones_is_stars_and_bars() {
        for d in 1..=4i64 {
            let tr = PowerTraceSeq::ones(d, 4);
            let h = tr.h_evals(4).unwrap();
            for m in 1..=4usize {
                let binom = num_integer::binomial(
                    num_bigint::BigInt::from(d + m as i64 - 1),
                    num_bigint::BigInt::from(m as i64),
                );
                assert_eq!(
                    h[m],
                    CyclotomicNumber::from_rational(crate::exact::Rational::from_integer(binom))
                );
            }
        }
    }

    #[test]
    fn eval_is_ring_homomorphism() {
        // traces of the multiset {zeta_3, 2}
        let z = root_of_unity(3, 1);
        let traces: Vec<CyclotomicNumber> = (1..=6i64)
            .map(|k| {
                root_of_unity(3, k).add(&cyc(1 << k)) // zeta^k + 2^k
            })
            .collect();
        let tr = PowerTraceSeq::new(traces);
        let f = SymExpansion::<CyclotomicNumber>::from_terms(
            Basis::Schur,
            [(p(&[2]), cyc(1)), (p(&[1, 1]), z)],
        );
        let g = SymExpansion::<CyclotomicNumber>::from_terms(
            Basis::Homogeneous,
            [(p(&[1]), cyc(3)), (p(&[2, 1]), cyc(-1))],
        );
        let lhs = eval_at_traces(&f.multiply(&g).unwrap(), &tr).unwrap();
        let rhs = eval_at_traces(&f, &tr).unwrap().mul(&eval_at_traces(&g, &tr).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn insufficient_traces_is_an_error() {
        let tr = PowerTraceSeq::new(vec![cyc(1)]);
        let f = SymExpansion::<CyclotomicNumber>::from_terms(Basis::PowerSum, [(p(&[2]), cyc(1))]);
        assert!(matches!(
            eval_at_traces(&f, &tr),
            Err(ArsfError::InsufficientTraces { .. })
        ));
        let _ = rat(0);
    }
}
