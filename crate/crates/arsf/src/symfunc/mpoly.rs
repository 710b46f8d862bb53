use crate::exact::{rat, Rational, UniPoly};
use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};

/// Multiply-shift hasher for packed exponent keys.
#[derive(Default)]
pub struct KeyHasher(u64);

impl Hasher for KeyHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0 ^ b as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        }
    }
    fn write_u64(&mut self, n: u64) {
        self.0 = n.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    }
}

type TermMap = HashMap<u64, UniPoly, BuildHasherDefault<KeyHasher>>;

/// Sparse multivariate polynomial over `UniPoly` coefficients in at most 8
/// variables, used by the Hall-Littlewood coset formula. Exponent vectors
/// are packed 8 bits per variable, so per-variable degrees must stay below
/// 256 (they stay below 40 here).
#[derive(Clone, Debug)]
pub struct MultiPoly {
    pub nvars: usize,
    terms: TermMap,
}

fn pack(e: &[u32]) -> u64 {
    let mut k = 0u64;
    for (i, &x) in e.iter().enumerate() {
        debug_assert!(x < 256);
        k |= (x as u64) << (8 * i);
    }
    k
}

fn unpack(key: u64, nvars: usize) -> Vec<u32> {
    (0..nvars).map(|i| ((key >> (8 * i)) & 0xFF) as u32).collect()
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= 8, "at most 8 variables supported");
        MultiPoly {
            nvars,
            terms: TermMap::default(),
        }
    }

    pub fn constant(nvars: usize, c: UniPoly) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(0, c);
        }
        p
    }

    pub fn monomial(nvars: usize, expt: Vec<u32>, c: UniPoly) -> Self {
        debug_assert_eq!(expt.len(), nvars);
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(pack(&expt), c);
        }
        p
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, expt: &[u32]) -> UniPoly {
        self.terms.get(&pack(expt)).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (Vec<u32>, &UniPoly)> + '_ {
        self.terms.iter().map(|(&k, c)| (unpack(k, self.nvars), c))
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (&k, c) in &other.terms {
            add_term(&mut self.terms, k, c.clone());
        }
    }

    /// Multiply by the linear factor `x_a - c * x_b`.
    pub fn mul_linear_pair(&self, a: usize, b: usize, c: &UniPoly) -> Self {
        let sa = 1u64 << (8 * a);
        let sb = 1u64 << (8 * b);
        let mut out = MultiPoly::zero(self.nvars);
        out.terms.reserve(self.terms.len() * 2);
        for (&k, v) in &self.terms {
            add_term(&mut out.terms, k + sa, v.clone());
            if !c.is_zero() {
                add_term(&mut out.terms, k + sb, v.mul(c).neg());
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (&ka, ca) in &self.terms {
            for (&kb, cb) in &other.terms {
                let c = ca.mul(cb);
                if !c.is_zero() {
                    add_term(&mut out.terms, ka + kb, c);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &UniPoly) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (&k, v) in &self.terms {
            let cv = v.mul(c);
            if !cv.is_zero() {
                out.terms.insert(k, cv);
            }
        }
        out
    }

    pub fn negate_in_place(&mut self) {
        for v in self.terms.values_mut() {
            *v = v.neg();
        }
    }

    /// Exact division by `(x_i - x_j)`; `None` when the remainder is nonzero.
    ///
    /// Long division in `x_i`, processed bucket-by-bucket in descending
    /// `x_i`-degree: cancelling the lead of a degree-`d` term pushes a
    /// compensating term into bucket `d - 1`, and bucket 0 at the end is the
    /// remainder.
    pub fn div_exact_by_var_diff(&self, i: usize, j: usize) -> Option<Self> {
        let shift_i = 8 * i;
        let si = 1u64 << shift_i;
        let sj = 1u64 << (8 * j);
        let maxdeg = self
            .terms
            .keys()
            .map(|&k| ((k >> shift_i) & 0xFF) as usize)
            .max()
            .unwrap_or(0);
        let mut buckets: Vec<TermMap> = (0..=maxdeg).map(|_| TermMap::default()).collect();
        for (&k, c) in &self.terms {
            buckets[((k >> shift_i) & 0xFF) as usize].insert(k, c.clone());
        }
        let mut quotient = MultiPoly::zero(self.nvars);
        for d in (1..=maxdeg).rev() {
            for (k, c) in std::mem::take(&mut buckets[d]) {
                if c.is_zero() {
                    continue;
                }
                add_term(&mut quotient.terms, k - si, c.clone());
                add_term(&mut buckets[d - 1], k - si + sj, c);
            }
        }
        buckets[0].retain(|_, c| !c.is_zero());
        buckets[0].is_empty().then_some(quotient)
    }

    /// Substitute numeric values for the variables and `t`.
    pub fn eval_rational(&self, xs: &[Rational], t0: &Rational) -> Rational {
        let mut acc = rat(0);
        for (e, c) in self.iter_terms() {
            let mut term = c.eval(t0);
            for (k, &ek) in e.iter().enumerate() {
                for _ in 0..ek {
                    term *= &xs[k];
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitute `x_k -> t^(k-1)` (principal specialization), returning a
    /// polynomial in `t`.
    pub fn eval_principal(&self) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (e, c) in self.iter_terms() {
            let shift: u32 = e.iter().enumerate().map(|(k, &ek)| k as u32 * ek).sum();
            acc = acc.add(&c.mul(&UniPoly::t_power(shift as usize)));
        }
        acc
    }
}

fn add_term(map: &mut TermMap, key: u64, c: UniPoly) {
    use std::collections::hash_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Occupied(mut o) => {
            let v = o.get().add(&c);
            if v.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = v;
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divide_by_variable_difference() {
        // x0^2 - x1^2 = (x0 - x1)(x0 + x1)
        let mut p = MultiPoly::zero(2);
        p.add_assign(&MultiPoly::monomial(2, vec![2, 0], UniPoly::one()));
        p.add_assign(&MultiPoly::monomial(2, vec![0, 2], UniPoly::one().neg()));
        let q = p.div_exact_by_var_diff(0, 1).unwrap();
        let mut expect = MultiPoly::zero(2);
        expect.add_assign(&MultiPoly::monomial(2, vec![1, 0], UniPoly::one()));
        expect.add_assign(&MultiPoly::monomial(2, vec![0, 1], UniPoly::one()));
        assert_eq!(q, expect);
        // x0^2 + x1 is not divisible
        let mut bad = MultiPoly::zero(2);
        bad.add_assign(&MultiPoly::monomial(2, vec![2, 0], UniPoly::one()));
        bad.add_assign(&MultiPoly::monomial(2, vec![0, 1], UniPoly::one()));
        assert!(bad.div_exact_by_var_diff(0, 1).is_none());
    }

    #[test]
    fn linear_pair_multiplication() {
        // (x0 - t x1)(x0 - x1) = x0^2 - (1+t) x0 x1 + t x1^2
        let one = MultiPoly::constant(2, UniPoly::one());
        let f = one
            .mul_linear_pair(0, 1, &UniPoly::t_power(1))
            .mul_linear_pair(0, 1, &UniPoly::one());
        assert_eq!(f.coeff(&[2, 0]), UniPoly::one());
        assert_eq!(f.coeff(&[1, 1]), UniPoly::from_i64(&[-1, -1]));
        assert_eq!(f.coeff(&[0, 2]), UniPoly::t_power(1));
    }
}
