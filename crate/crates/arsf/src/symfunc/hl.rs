use super::mpoly::MultiPoly;
use crate::exact::{rat, RatFun, Rational, UniPoly};
use crate::partitions::{b_poly, Partition};
use crate::{ArsfError, Result};
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// Hard cap on the degree of symbolic Hall-Littlewood expansions.
pub const SYMBOLIC_DEGREE_CAP: u32 = 8;

/// Distinct rearrangements of `padded`, each with a witness permutation `w`
/// such that `alpha[w[i]] = padded[i]`.
fn coset_representatives(padded: &[u32]) -> Vec<(Vec<u32>, Vec<usize>)> {
    let n = padded.len();
    let mut values: Vec<u32> = padded.to_vec();
    values.sort_unstable_by(|a, b| b.cmp(a));
    values.dedup();
    let mut out = Vec::new();
    let mut alpha = vec![u32::MAX; n];
    fn rec(
        values: &[u32],
        vi: usize,
        padded: &[u32],
        alpha: &mut Vec<u32>,
        out: &mut Vec<(Vec<u32>, Vec<usize>)>,
    ) {
        let n = padded.len();
        if vi == values.len() {
            // witness permutation: positions of value v in padded map, in
            // order, to positions of v in alpha
            let mut w = vec![0usize; n];
            for &v in values {
                let src: Vec<usize> = (0..n).filter(|&i| padded[i] == v).collect();
                let dst: Vec<usize> = (0..n).filter(|&k| alpha[k] == v).collect();
                for (s, d) in src.iter().zip(dst.iter()) {
                    w[*s] = *d;
                }
            }
            out.push((alpha.clone(), w));
            return;
        }
        let v = values[vi];
        let count = padded.iter().filter(|&&p| p == v).count();
        let free: Vec<usize> = (0..n).filter(|&k| alpha[k] == u32::MAX).collect();
        // choose `count` of the free slots for value v
        let mut choice: Vec<usize> = (0..count).collect();
        loop {
            for &c in &choice {
                alpha[free[c]] = v;
            }
            rec(values, vi + 1, padded, alpha, out);
            for &c in &choice {
                alpha[free[c]] = u32::MAX;
            }
            // next combination
            let mut i = count;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if choice[i] < free.len() - (count - i) {
                    choice[i] += 1;
                    for k in i + 1..count {
                        choice[k] = choice[k - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    rec(&values, 0, padded, &mut alpha, &mut out);
    out
}

/// The Hall-Littlewood polynomial `P_lambda(x_1, ..., x_nvars; t)` by the
/// coset-sum formula: for each rearrangement of the padded part vector, the
/// term `w(x^lambda prod_{lambda_i > lambda_j} (x_i - t x_j)/(x_i - x_j))`,
/// summed and reduced to a genuine polynomial by exact division by the
/// Vandermonde product.
pub fn hl_p_finite(lambda: &Partition, nvars: usize) -> Result<MultiPoly> {
    if lambda.len() > nvars {
        return Err(ArsfError::LengthExceeded {
            len: lambda.len(),
            bound: nvars,
        });
    }
    if nvars == 0 {
        return Ok(MultiPoly::constant(0, UniPoly::one()));
    }
    let padded: Vec<u32> = (0..nvars).map(|i| lambda.part(i)).collect();
    let pairs: Vec<(usize, usize)> = (0..nvars)
        .flat_map(|i| (i + 1..nvars).map(move |j| (i, j)))
        .filter(|&(i, j)| padded[i] > padded[j])
        .collect();
    let all_pairs: Vec<(usize, usize)> = (0..nvars)
        .flat_map(|i| (i + 1..nvars).map(move |j| (i, j)))
        .collect();

    let t = UniPoly::t_power(1);
    let mut total = MultiPoly::zero(nvars);
    for (alpha, w) in coset_representatives(&padded) {
        let mut sign = 1i64;
        let mut image: std::collections::HashSet<(usize, usize)> = Default::default();
        let mut term = MultiPoly::monomial(nvars, alpha, UniPoly::one());
        for &(i, j) in &pairs {
            let (a, b) = (w[i], w[j]);
            if a > b {
                sign = -sign;
            }
            image.insert((a.min(b), a.max(b)));
            term = term.mul_linear_pair(a, b, &t);
        }
        for &(k, l) in &all_pairs {
            if !image.contains(&(k, l)) {
                term = term.mul_linear_pair(k, l, &UniPoly::one());
            }
        }
        if sign < 0 {
            term.negate_in_place();
        }
        total.add_assign(&term);
    }
    for &(k, l) in &all_pairs {
        total = total
            .div_exact_by_var_diff(k, l)
            .expect("coset sum is divisible by the Vandermonde product");
    }
    Ok(total)
}

/// Numeric value of `P_lambda(xs; t0)` straight from the coset formula.
/// The evaluation points must be pairwise distinct.
pub fn hl_p_finite_eval(lambda: &Partition, xs: &[Rational], t0: &Rational) -> Result<Rational> {
    let nvars = xs.len();
    if lambda.len() > nvars {
        return Err(ArsfError::LengthExceeded {
            len: lambda.len(),
            bound: nvars,
        });
    }
    if nvars == 0 {
        return Ok(rat(1));
    }
    let padded: Vec<u32> = (0..nvars).map(|i| lambda.part(i)).collect();
    let pairs: Vec<(usize, usize)> = (0..nvars)
        .flat_map(|i| (i + 1..nvars).map(move |j| (i, j)))
        .filter(|&(i, j)| padded[i] > padded[j])
        .collect();
    let mut total = rat(0);
    for (alpha, w) in coset_representatives(&padded) {
        let mut term = rat(1);
        for (k, &e) in alpha.iter().enumerate() {
            for _ in 0..e {
                term *= &xs[k];
            }
        }
        for &(i, j) in &pairs {
            let num = &xs[w[i]] - t0 * &xs[w[j]];
            let den = &xs[w[i]] - &xs[w[j]];
            if den.is_zero() {
                return Err(ArsfError::InvalidInput(
                    "evaluation points must be distinct".into(),
                ));
            }
            term *= num / den;
        }
        total += term;
    }
    Ok(total)
}

/// `P_lambda` expanded in the monomial basis with polynomial coefficients in
/// `t`; computed in `|lambda|` variables (enough by stability) and cached.
pub fn hl_p_in_monomials(lambda: &Partition) -> Result<Arc<BTreeMap<Partition, UniPoly>>> {
    let degree = lambda.size() as u32;
    if degree > SYMBOLIC_DEGREE_CAP {
        return Err(ArsfError::DegreeCapExceeded {
            degree,
            cap: SYMBOLIC_DEGREE_CAP,
        });
    }
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<BTreeMap<Partition, UniPoly>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(lambda) {
        return Ok(hit.clone());
    }
    let nvars = lambda.size() as usize;
    let poly = hl_p_finite(lambda, nvars)?;
    let mut out = BTreeMap::new();
    for (e, c) in poly.iter_terms() {
        let mut sorted = e.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted == e {
            out.insert(Partition::new(e), c.clone());
        }
    }
    if lambda.is_empty() {
        out.insert(Partition::empty(), UniPoly::one());
    }
    let arc = Arc::new(out);
    cache.lock().unwrap().insert(lambda.clone(), arc.clone());
    Ok(arc)
}

/// The principal specialization `P_lambda[1/(1-t); t] = t^n(lambda) / b_lambda(t)`.
pub fn principal_specialization_p(lambda: &Partition) -> RatFun {
    RatFun::new(UniPoly::t_power(lambda.n_stat() as usize), b_poly(lambda))
        .expect("b_lambda is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn single_row_and_column() {
        // P_(1) in 2 vars = x1 + x2
        let f = hl_p_finite(&p(&[1]), 2).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.coeff(&[1, 0]), UniPoly::one());
        assert_eq!(f.coeff(&[0, 1]), UniPoly::one());
        // P_(1,1) in 2 vars = x1 x2
        let g = hl_p_finite(&p(&[1, 1]), 2).unwrap();
        assert_eq!(g.num_terms(), 1);
        assert_eq!(g.coeff(&[1, 1]), UniPoly::one());
        assert!(hl_p_finite(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn monomial_expansion_of_row_two() {
        // P_(2) = m_2 + (1-t) m_11
        let m = hl_p_in_monomials(&p(&[2])).unwrap();
        assert_eq!(m[&p(&[2])], UniPoly::one());
        assert_eq!(m[&p(&[1, 1])], UniPoly::from_i64(&[1, -1]));
    }

    #[test]
    fn stability_in_extra_variables() {
        // P_(2) in 3 vars restricted to x3 = 0 agrees with 2 vars
        let f2 = hl_p_finite(&p(&[2]), 2).unwrap();
        let f3 = hl_p_finite(&p(&[2]), 3).unwrap();
        let mut restricted = MultiPoly::zero(2);
        let mut total = 0;
        for (e, c) in f3.iter_terms() {
            if e[2] == 0 {
                restricted.add_assign(&MultiPoly::monomial(2, e[..2].to_vec(), c.clone()));
                total += 1;
            }
        }
        assert_eq!(restricted, f2);
        assert!(total > 0);
    }

    #[test]
    fn principal_specialization_small() {
        assert_eq!(principal_specialization_p(&Partition::empty()), RatFun::one());
        // (1): 1/(1-t)
        assert_eq!(
            principal_specialization_p(&p(&[1])),
            RatFun::new(UniPoly::one(), UniPoly::from_i64(&[1, -1])).unwrap()
        );
        // (1,1): t/((1-t)(1-t^2))
        assert_eq!(
            principal_specialization_p(&p(&[1, 1])),
            RatFun::new(
                UniPoly::t_power(1),
                UniPoly::from_i64(&[1, -1]).mul(&UniPoly::from_i64(&[1, 0, -1]))
            )
            .unwrap()
        );
    }

    #[test]
    fn principal_specialization_matches_truncated_finite_eval() {
        // P_lambda(1, t, ..., t^(k-1); t) agrees with the closed form as a
        // power series modulo t^k
        for lam in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[3, 1]), p(&[2, 2])] {
            let k = (lam.size() + 3) as usize;
            let finite = hl_p_finite(&lam, k).unwrap().eval_principal();
            let series = principal_specialization_p(&lam).series(k).unwrap();
            assert_eq!(finite.truncate(k), series, "lambda = {lam}");
        }
    }

    #[test]
    fn numeric_eval_matches_symbolic() {
        let lam = p(&[2, 1]);
        let xs = [rat(1), rat(3), ratio(1, 2)];
        let t0 = ratio(1, 5);
        let sym = hl_p_finite(&lam, 3).unwrap().eval_rational(&xs, &t0);
        let num = hl_p_finite_eval(&lam, &xs, &t0).unwrap();
        assert_eq!(sym, num);
    }
}
