use super::hl::{hl_p_in_monomials, SYMBOLIC_DEGREE_CAP};
use crate::exact::{rat, RatFun, Rational, UniPoly};
use crate::partitions::{b_poly, enumerate_partitions, kostka_foulkes_tilde, Partition};
use crate::{ArsfError, Result};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Partition ordering shared by all degree-`d` transition matrices.
pub struct DegreeIndex {
    pub parts: Vec<Partition>,
    pub pos: HashMap<Partition, usize>,
}

impl DegreeIndex {
    fn new(d: u32) -> Self {
        let parts = enumerate_partitions(d);
        let pos = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        DegreeIndex { parts, pos }
    }
}

/// Transition matrices between the classical bases and power sums at one
/// degree. Rows are indexed like `index.parts`; `u_to_p[i][j]` is the
/// coefficient of `p_(parts[j])` in the basis element `u_(parts[i])`.
pub struct ClassicalTables {
    pub index: Arc<DegreeIndex>,
    pub m_to_p: Vec<Vec<Rational>>,
    pub h_to_p: Vec<Vec<Rational>>,
    pub s_to_p: Vec<Vec<Rational>>,
    pub m_from_p: Vec<Vec<Rational>>,
    pub h_from_p: Vec<Vec<Rational>>,
    pub s_from_p: Vec<Vec<Rational>>,
    /// Schur expansion in the h basis (Jacobi-Trudi), kept for fast access.
    pub s_in_h: Vec<Vec<Rational>>,
}

/// `z_lambda = prod_v v^(m_v) m_v!`.
pub fn z_lambda(lambda: &Partition) -> Rational {
    let mut z = rat(1);
    let distinct: std::collections::BTreeSet<u32> = lambda.parts().iter().copied().collect();
    for v in distinct {
        let m = lambda.multiplicity(v) as u32;
        for k in 1..=m {
            z *= rat(k as i64);
        }
        for _ in 0..m {
            z *= rat(v as i64);
        }
    }
    z
}

/// `h_m` in the power-sum basis: `sum_(|mu|=m) p_mu / z_mu`.
fn h_one_part_in_p(m: u32) -> Vec<(Partition, Rational)> {
    enumerate_partitions(m)
        .into_iter()
        .map(|mu| {
            let z = z_lambda(&mu);
            (mu, rat(1) / z)
        })
        .collect()
}

/// Product of p-expansions: keys combine by partition union.
fn p_product(
    a: &HashMap<Partition, Rational>,
    b: &[(Partition, Rational)],
) -> HashMap<Partition, Rational> {
    let mut out: HashMap<Partition, Rational> = HashMap::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            *out.entry(ka.union(kb)).or_insert_with(|| rat(0)) += ca * cb;
        }
    }
    out.retain(|_, c| !num_traits::Zero::is_zero(c));
    out
}

fn h_lambda_in_p(lambda: &Partition) -> HashMap<Partition, Rational> {
    let mut acc: HashMap<Partition, Rational> = HashMap::from([(Partition::empty(), rat(1))]);
    for &part in lambda.parts() {
        acc = p_product(&acc, &h_one_part_in_p(part));
    }
    acc
}

/// Jacobi-Trudi: `s_lambda = det(h_(lambda_i - i + j))` expanded over the
/// symmetric group into an h-basis combination.
fn s_lambda_in_h(lambda: &Partition) -> HashMap<Partition, Rational> {
    let l = lambda.len();
    if l == 0 {
        return HashMap::from([(Partition::empty(), rat(1))]);
    }
    let mut out: HashMap<Partition, Rational> = HashMap::new();
    let mut perm: Vec<usize> = (0..l).collect();
    permute_with_sign(&mut perm, 0, 1, &mut |perm, sign| {
        let mut subscripts = Vec::with_capacity(l);
        for (i, &pi) in perm.iter().enumerate() {
            let sub = lambda.part(i) as i64 - i as i64 + pi as i64;
            if sub < 0 {
                return;
            }
            if sub > 0 {
                subscripts.push(sub as u32);
            }
        }
        let key = Partition::new(subscripts);
        *out.entry(key).or_insert_with(|| rat(0)) += rat(sign);
    });
    out.retain(|_, c| !num_traits::Zero::is_zero(c));
    out
}

fn permute_with_sign(
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
        permute_with_sign(perm, start + 1, s, visit);
        perm.swap(start, i);
    }
}

/// Expand `p_lambda` as a symmetric polynomial in `|lambda|` variables and
/// read off monomial-basis coefficients (the dominant exponent vector of each
/// orbit).
fn p_lambda_in_m(lambda: &Partition, index: &DegreeIndex) -> Vec<Rational> {
    let d = lambda.size() as usize;
    if d == 0 {
        return vec![rat(1)];
    }
    let mut poly: HashMap<Vec<u32>, Rational> = HashMap::from([(vec![0u32; d], rat(1))]);
    for &part in lambda.parts() {
        let mut next: HashMap<Vec<u32>, Rational> = HashMap::new();
        for (e, c) in &poly {
            for i in 0..d {
                let mut e2 = e.clone();
                e2[i] += part;
                *next.entry(e2).or_insert_with(|| rat(0)) += c;
            }
        }
        poly = next;
    }
    let mut row = vec![rat(0); index.parts.len()];
    for (e, c) in &poly {
        let mut sorted = e.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if &sorted == e {
            let key = Partition::new(e.clone());
            row[index.pos[&key]] = c.clone();
        }
    }
    row
}

fn invert_rational(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { rat(1) } else { rat(0) });
            }
            r
        })
        .collect();
    for c in 0..n {
        let piv = (c..n)
            .find(|&r| !num_traits::Zero::is_zero(&aug[r][c]))
            .expect("transition matrix is invertible");
        aug.swap(c, piv);
        let inv = rat(1) / aug[c][c].clone();
        for k in 0..2 * n {
            let v = &aug[c][k] * &inv;
            aug[c][k] = v;
        }
        for r in 0..n {
            if r != c && !num_traits::Zero::is_zero(&aug[r][c]) {
                let f = aug[r][c].clone();
                for k in 0..2 * n {
                    let v = &aug[r][k] - &f * &aug[c][k];
                    aug[r][k] = v;
                }
            }
        }
    }
    aug.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn invert_ratfun(m: &[Vec<RatFun>]) -> Vec<Vec<RatFun>> {
    let n = m.len();
    let mut aug: Vec<Vec<RatFun>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { RatFun::one() } else { RatFun::zero() });
            }
            r
        })
        .collect();
    for c in 0..n {
        let piv = (c..n)
            .find(|&r| !aug[r][c].is_zero())
            .expect("transition matrix is invertible");
        aug.swap(c, piv);
        let inv = aug[c][c].inv().expect("pivot nonzero");
        for k in 0..2 * n {
            aug[c][k] = aug[c][k].mul(&inv);
        }
        for r in 0..n {
            if r != c && !aug[r][c].is_zero() {
                let f = aug[r][c].clone();
                for k in 0..2 * n {
                    aug[r][k] = aug[r][k].sub(&f.mul(&aug[c][k]));
                }
            }
        }
    }
    aug.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn rows_to_matrix(
    rows: Vec<HashMap<Partition, Rational>>,
    index: &DegreeIndex,
) -> Vec<Vec<Rational>> {
    rows.into_iter()
        .map(|row| {
            let mut v = vec![rat(0); index.parts.len()];
            for (k, c) in row {
                v[index.pos[&k]] = c;
            }
            v
        })
        .collect()
}

pub fn classical_tables(d: u32) -> Arc<ClassicalTables> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<ClassicalTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&d) {
        return hit.clone();
    }
    let index = Arc::new(DegreeIndex::new(d));
    let h_to_p = rows_to_matrix(
        index.parts.iter().map(h_lambda_in_p).collect(),
        &index,
    );
    let s_in_h_rows: Vec<HashMap<Partition, Rational>> =
        index.parts.iter().map(s_lambda_in_h).collect();
    let s_to_p: Vec<Vec<Rational>> = s_in_h_rows
        .iter()
        .map(|row| {
            let mut v = vec![rat(0); index.parts.len()];
            for (hkey, c) in row {
                let hrow = &h_to_p[index.pos[hkey]];
                for (j, e) in hrow.iter().enumerate() {
                    v[j] += c * e;
                }
            }
            v
        })
        .collect();
    let s_in_h = rows_to_matrix(s_in_h_rows, &index);
    let p_to_m: Vec<Vec<Rational>> = index
        .parts
        .iter()
        .map(|lam| p_lambda_in_m(lam, &index))
        .collect();
    let m_to_p = invert_rational(&p_to_m);
    let m_from_p = p_to_m;
    let h_from_p = invert_rational(&h_to_p);
    let s_from_p = invert_rational(&s_to_p);
    let tables = Arc::new(ClassicalTables {
        index,
        m_to_p,
        h_to_p,
        s_to_p,
        m_from_p,
        h_from_p,
        s_from_p,
        s_in_h,
    });
    cache.lock().unwrap().insert(d, tables.clone());
    tables
}

/// Symbolic-`t` Hall-Littlewood transition matrices at one degree.
pub struct HlSymbolicTables {
    pub index: Arc<DegreeIndex>,
    pub hlp_to_p: Vec<Vec<RatFun>>,
    pub hlq_to_p: Vec<Vec<RatFun>>,
    pub hlmod_to_p: Vec<Vec<RatFun>>,
    pub hlp_from_p: Vec<Vec<RatFun>>,
    pub hlq_from_p: Vec<Vec<RatFun>>,
    pub hlmod_from_p: Vec<Vec<RatFun>>,
    /// `P_lambda` in monomials, polynomial in `t`.
    pub hlp_to_m: Vec<Vec<UniPoly>>,
}

pub fn hl_symbolic_tables(d: u32) -> Result<Arc<HlSymbolicTables>> {
    if d > SYMBOLIC_DEGREE_CAP {
        return Err(ArsfError::DegreeCapExceeded {
            degree: d,
            cap: SYMBOLIC_DEGREE_CAP,
        });
    }
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<HlSymbolicTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&d) {
        return Ok(hit.clone());
    }
    let classical = classical_tables(d);
    let index = classical.index.clone();
    let n = index.parts.len();
    let mut hlp_to_m: Vec<Vec<UniPoly>> = Vec::with_capacity(n);
    for lam in &index.parts {
        let mono = hl_p_in_monomials(lam)?;
        let mut row = vec![UniPoly::zero(); n];
        for (mu, c) in mono.iter() {
            row[index.pos[mu]] = c.clone();
        }
        hlp_to_m.push(row);
    }
    let hlp_to_p: Vec<Vec<RatFun>> = hlp_to_m
        .iter()
        .map(|mrow| {
            let mut v = vec![RatFun::zero(); n];
            for (k, c) in mrow.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (j, e) in classical.m_to_p[k].iter().enumerate() {
                    if !num_traits::Zero::is_zero(e) {
                        v[j] = v[j].add(&RatFun::from_poly(c.scale(e)));
                    }
                }
            }
            v
        })
        .collect();
    let hlq_to_p: Vec<Vec<RatFun>> = index
        .parts
        .iter()
        .zip(&hlp_to_p)
        .map(|(lam, row)| {
            let b = RatFun::from_poly(b_poly(lam));
            row.iter().map(|e| e.mul(&b)).collect()
        })
        .collect();
    let hlmod_to_p: Vec<Vec<RatFun>> = index
        .parts
        .iter()
        .map(|lam| {
            let mut v = vec![RatFun::zero(); n];
            for (k, mu) in index.parts.iter().enumerate() {
                let kf = kostka_foulkes_tilde(mu, lam);
                if kf.is_zero() {
                    continue;
                }
                for (j, e) in classical.s_to_p[k].iter().enumerate() {
                    if !num_traits::Zero::is_zero(e) {
                        v[j] = v[j].add(&RatFun::from_poly(kf.scale(e)));
                    }
                }
            }
            v
        })
        .collect();
    let hlp_from_p = invert_ratfun(&hlp_to_p);
    let hlq_from_p = invert_ratfun(&hlq_to_p);
    let hlmod_from_p = invert_ratfun(&hlmod_to_p);
    let tables = Arc::new(HlSymbolicTables {
        index,
        hlp_to_p,
        hlq_to_p,
        hlmod_to_p,
        hlp_from_p,
        hlq_from_p,
        hlmod_from_p,
        hlp_to_m,
    });
    cache.lock().unwrap().insert(d, tables.clone());
    Ok(tables)
}

/// Hall-Littlewood transition matrices specialized at a rational `t`.
pub struct HlSpecTables {
    pub index: Arc<DegreeIndex>,
    pub hlp_to_p: Vec<Vec<Rational>>,
    pub hlq_to_p: Vec<Vec<Rational>>,
    pub hlmod_to_p: Vec<Vec<Rational>>,
    pub hlp_from_p: Vec<Vec<Rational>>,
    pub hlq_from_p: Vec<Vec<Rational>>,
    pub hlmod_from_p: Vec<Vec<Rational>>,
}

pub fn hl_spec_tables(d: u32, t0: &Rational) -> Result<Arc<HlSpecTables>> {
    type Key = (u32, Rational);
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<HlSpecTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (d, t0.clone());
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let sym = hl_symbolic_tables(d)?;
    let eval_matrix = |m: &Vec<Vec<RatFun>>| -> Result<Vec<Vec<Rational>>> {
        m.iter()
            .map(|row| row.iter().map(|e| e.eval(t0)).collect())
            .collect()
    };
    let hlp_to_p = eval_matrix(&sym.hlp_to_p)?;
    let hlq_to_p = eval_matrix(&sym.hlq_to_p)?;
    let hlmod_to_p = eval_matrix(&sym.hlmod_to_p)?;
    let hlp_from_p = invert_rational(&hlp_to_p);
    let hlq_from_p = invert_rational(&hlq_to_p);
    let hlmod_from_p = invert_rational(&hlmod_to_p);
    let tables = Arc::new(HlSpecTables {
        index: sym.index.clone(),
        hlp_to_p,
        hlq_to_p,
        hlmod_to_p,
        hlp_from_p,
        hlq_from_p,
        hlmod_from_p,
    });
    cache.lock().unwrap().insert(key, tables.clone());
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn h2_in_monomials() {
        // h_2 = m_2 + m_11: route h -> p -> m
        let t = classical_tables(2);
        let i2 = t.index.pos[&p(&[2])];
        let i11 = t.index.pos[&p(&[1, 1])];
        let hrow = &t.h_to_p[i2];
        let mut m = vec![rat(0); 2];
        for (j, c) in hrow.iter().enumerate() {
            for (k, e) in t.m_from_p[j].iter().enumerate() {
                m[k] += c * e;
            }
        }
        assert_eq!(m[i2], rat(1));
        assert_eq!(m[i11], rat(1));
    }

    #[test]
    fn schur_in_monomials_is_kostka() {
        // s_lambda -> m coefficients are Kostka numbers (SSYT counts)
        use crate::partitions::enumerate_ssyt;
        for d in 1..=5u32 {
            let t = classical_tables(d);
            for (i, lam) in t.index.parts.iter().enumerate() {
                let mut m = vec![rat(0); t.index.parts.len()];
                for (j, c) in t.s_to_p[i].iter().enumerate() {
                    for (k, e) in t.m_from_p[j].iter().enumerate() {
                        m[k] += c * e;
                    }
                }
                for (k, mu) in t.index.parts.iter().enumerate() {
                    let kostka = enumerate_ssyt(lam, mu).unwrap().len() as i64;
                    assert_eq!(m[k], rat(kostka), "s_{lam} at m_{mu}");
                }
            }
        }
    }

    #[test]
    fn s11_is_e2() {
        // s_11 = m_11 in the monomial basis
        let t = classical_tables(2);
        let i11 = t.index.pos[&p(&[1, 1])];
        let i2 = t.index.pos[&p(&[2])];
        let mut m = vec![rat(0); 2];
        for (j, c) in t.s_to_p[i11].iter().enumerate() {
            for (k, e) in t.m_from_p[j].iter().enumerate() {
                m[k] += c * e;
            }
        }
        assert_eq!(m[i11], rat(1));
        assert_eq!(m[i2], rat(0));
    }

    #[test]
    fn z_values() {
        assert_eq!(z_lambda(&p(&[1])), rat(1));
        assert_eq!(z_lambda(&p(&[1, 1])), rat(2));
        assert_eq!(z_lambda(&p(&[2])), rat(2));
        assert_eq!(z_lambda(&p(&[2, 2, 1])), rat(8));
    }

    #[test]
    fn hl_tables_specialize_consistently() {
        use crate::exact::ratio;
        let d = 3;
        let sym = hl_symbolic_tables(d).unwrap();
        let spec = hl_spec_tables(d, &ratio(1, 2)).unwrap();
        for i in 0..sym.index.parts.len() {
            for j in 0..sym.index.parts.len() {
                assert_eq!(sym.hlp_to_p[i][j].eval(&ratio(1, 2)).unwrap(), spec.hlp_to_p[i][j]);
            }
        }
    }
}
