use super::{rat, rational_from_str, rational_to_string, Rational, UniPoly};
use crate::{ArsfError, Result};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut pk = 1;
            while n % p == 0 {
                n /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

fn divisors(n: u64) -> Vec<u64> {
    let mut d: Vec<u64> = (1..=n).filter(|k| n % k == 0).collect();
    d.sort_unstable();
    d
}

/// The `N`-th cyclotomic polynomial, computed by dividing `x^N - 1` by the
/// product of `Phi_d` over proper divisors `d` of `N`. Memoized.
pub fn cyclotomic_polynomial(n: u64) -> UniPoly {
    assert!(n >= 1, "conductor must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u64, UniPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        UniPoly::from_i64(&[-1, 1])
    } else {
        let mut xn_minus_1 = vec![rat(0); n as usize + 1];
        xn_minus_1[0] = rat(-1);
        xn_minus_1[n as usize] = rat(1);
        let mut quot = UniPoly::from_coeffs(xn_minus_1);
        for d in divisors(n) {
            if d < n {
                quot = quot
                    .div_exact(&cyclotomic_polynomial(d))
                    .expect("Phi_d divides x^N - 1");
            }
        }
        quot
    };
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// Exact element of the cyclotomic field Q(zeta_N) in the power basis
/// `1, zeta, ..., zeta^(phi(N)-1)` modulo the `N`-th cyclotomic polynomial.
///
/// Canonical form: the conductor is minimal, i.e. an element lying in a
/// subfield Q(zeta_d) for `d | N` is re-expressed at conductor `d`. Equality
/// is then coordinate-wise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    conductor: u64,
    coeffs: Vec<Rational>, // length phi(conductor)
}

impl CyclotomicNumber {
    pub fn zero() -> Self {
        CyclotomicNumber {
            conductor: 1,
            coeffs: vec![rat(0)],
        }
    }

    pub fn one() -> Self {
        CyclotomicNumber::from_rational(rat(1))
    }

    pub fn from_rational(c: Rational) -> Self {
        CyclotomicNumber {
            conductor: 1,
            coeffs: vec![c],
        }
    }

    pub fn from_i64(c: i64) -> Self {
        CyclotomicNumber::from_rational(rat(c))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Rational part if the element is rational, else `None`.
    pub fn as_rational(&self) -> Option<Rational> {
        (self.conductor == 1).then(|| self.coeffs[0].clone())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r == rat(1))
    }

    /// Build from a coefficient vector of `zeta_N` powers (any length),
    /// reducing mod `Phi_N` and minimizing the conductor.
    pub fn from_zeta_powers(conductor: u64, coeffs: Vec<Rational>) -> Self {
        CyclotomicNumber {
            conductor,
            coeffs: reduce_mod_phi(conductor, coeffs),
        }
        .minimized()
    }

    /// Lift to conductor `m` (requires `conductor | m`). Coefficients stay in
    /// the power basis of `zeta_m` via `zeta_N = zeta_m^(m/N)`.
    fn lift(&self, m: u64) -> Vec<Rational> {
        debug_assert_eq!(m % self.conductor, 0);
        let step = (m / self.conductor) as usize;
        let mut raw = vec![rat(0); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * step] = c.clone();
        }
        reduce_mod_phi(m, raw)
    }

    /// Re-express at the smallest conductor dividing the current one.
    fn minimized(self) -> Self {
        if self.conductor == 1 {
            return self;
        }
        let n = self.conductor;
        for d in divisors(n) {
            if d == n {
                break;
            }
            if let Some(coeffs) = project_to_subfield(n, &self.coeffs, d) {
                return CyclotomicNumber {
                    conductor: d,
                    coeffs,
                };
            }
        }
        self
    }

    fn binop(&self, other: &Self, f: impl Fn(&UniPoly, &UniPoly) -> UniPoly) -> Self {
        let m = num_integer::lcm(self.conductor, other.conductor);
        let a = UniPoly::from_coeffs(self.lift(m));
        let b = UniPoly::from_coeffs(other.lift(m));
        let raw = f(&a, &b);
        CyclotomicNumber::from_zeta_powers(m, raw.coeffs().to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.conductor == other.conductor {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect();
            return CyclotomicNumber {
                conductor: self.conductor,
                coeffs,
            }
            .minimized();
        }
        self.binop(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if let Some(r) = self.as_rational() {
            return other.scale(&r);
        }
        if let Some(r) = other.as_rational() {
            return self.scale(&r);
        }
        self.binop(other, |a, b| a.mul(b))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return CyclotomicNumber::zero();
        }
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Galois action `zeta_N -> zeta_N^a` for `gcd(a, N) = 1`.
    pub fn galois(&self, a: u64) -> Self {
        let n = self.conductor;
        debug_assert_eq!(num_integer::gcd(a, n), 1);
        CyclotomicNumber {
            conductor: n,
            coeffs: galois_raw(n, &self.coeffs, a),
        }
        .minimized()
    }

    /// Complex embedding `zeta_N -> exp(2 pi i / N)` in double precision.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.conductor as f64;
        let mut z = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / n;
            let cf = c.to_f64().unwrap_or(f64::NAN);
            z += Complex64::new(ang.cos() * cf, ang.sin() * cf);
        }
        z
    }

    pub fn to_serial(&self) -> CyclotomicSerial {
        CyclotomicSerial {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(rational_to_string).collect(),
        }
    }

    pub fn from_serial(s: &CyclotomicSerial) -> Result<Self> {
        if s.conductor == 0 {
            return Err(ArsfError::InvalidInput("conductor must be positive".into()));
        }
        let coeffs = s
            .coeffs
            .iter()
            .map(|c| rational_from_str(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(CyclotomicNumber::from_zeta_powers(s.conductor, coeffs))
    }
}

/// Serialization form: `{conductor: N, coeffs: ["p/q", ...]}`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct CyclotomicSerial {
    pub conductor: u64,
    pub coeffs: Vec<String>,
}

fn reduce_mod_phi(n: u64, raw: Vec<Rational>) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(n);
    let (_, rem) = UniPoly::from_coeffs(raw).div_rem(&phi);
    let mut v: Vec<Rational> = rem.coeffs().to_vec();
    v.resize(euler_phi(n) as usize, rat(0));
    v
}

/// `zeta_n -> zeta_n^a` on raw power-basis coefficients, without conductor
/// minimization (used inside minimization itself).
fn galois_raw(n: u64, coeffs: &[Rational], a: u64) -> Vec<Rational> {
    let mut raw = vec![rat(0); 1];
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            let e = (i as u64 * a % n) as usize;
            if raw.len() <= e {
                raw.resize(e + 1, rat(0));
            }
            raw[e] += c;
        }
    }
    reduce_mod_phi(n, raw)
}

/// Try to express an element of Q(zeta_n), given by power-basis coefficients,
/// in Q(zeta_d) for `d | n`. Returns the power-basis coefficients at
/// conductor `d` or `None` when the element does not lie in the subfield.
fn project_to_subfield(n: u64, coeffs: &[Rational], d: u64) -> Option<Vec<Rational>> {
    // Invariance under Gal(Q(zeta_n)/Q(zeta_d)) = { a mod n : a = 1 mod d }
    // is necessary; solving the linear system below is then sufficient.
    for a in 2..n {
        if num_integer::gcd(a, n) == 1 && a % d == 1 % d && galois_raw(n, coeffs, a) != coeffs {
            return None;
        }
    }
    // Solve M c = coeffs where column j of M is zeta_n^(j*n/d) in the power
    // basis of zeta_n, j < phi(d).
    let dim_n = euler_phi(n) as usize;
    let dim_d = euler_phi(d) as usize;
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(dim_d);
    for j in 0..dim_d {
        let e = ((j as u64) * (n / d)) as usize;
        let mut v = vec![rat(0); e + 1];
        v[e] = rat(1);
        cols.push(reduce_mod_phi(n, v));
    }
    solve_rectangular(&cols, coeffs, dim_n, dim_d)
}

/// Solve `sum_j c_j col_j = target` by Gaussian elimination; `None` when
/// inconsistent.
fn solve_rectangular(
    cols: &[Vec<Rational>],
    target: &[Rational],
    rows: usize,
    ncols: usize,
) -> Option<Vec<Rational>> {
    let mut aug: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = (0..ncols).map(|c| cols[c][r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut r0 = 0;
    for c in 0..ncols {
        let Some(pr) = (r0..rows).find(|&r| !aug[r][c].is_zero()) else {
            return None;
        };
        aug.swap(r0, pr);
        let inv = rat(1) / aug[r0][c].clone();
        for k in c..=ncols {
            let v = &aug[r0][k] * &inv;
            aug[r0][k] = v;
        }
        for r in 0..rows {
            if r != r0 && !aug[r][c].is_zero() {
                let f = aug[r][c].clone();
                for k in c..=ncols {
                    let v = &aug[r][k] - &f * &aug[r0][k];
                    aug[r][k] = v;
                }
            }
        }
        r0 += 1;
    }
    // consistency: all non-pivot rows must have zero RHS
    for r in r0..rows {
        if !aug[r][ncols].is_zero() {
            return None;
        }
    }
    Some((0..ncols).map(|c| aug[c][ncols].clone()).collect())
}

/// `zeta_N^k`, reduced and conductor-minimized.
pub fn root_of_unity(n: u64, k: i64) -> CyclotomicNumber {
    assert!(n >= 1);
    let e = k.rem_euclid(n as i64) as usize;
    CyclotomicNumber::from_zeta_powers(n, {
        let mut v = vec![rat(0); e + 1];
        v[e] = rat(1);
        v
    })
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", rational_to_string(&r));
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = rational_to_string(c);
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
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != "1" {
                    write!(f, "{mag}*")?;
                }
                write!(f, "z{}", self.conductor)?;
                if k > 1 {
                    write!(f, "^{k}")?;
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
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), UniPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), UniPoly::from_i64(&[1, 1]));
        // derived: divide x^4 - 1 by Phi_1 Phi_2
        assert_eq!(cyclotomic_polynomial(4), UniPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), UniPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_product_law() {
        // prod_{d | N} Phi_d = x^N - 1 for all N <= 60
        for n in 1..=60u64 {
            let mut prod = UniPoly::one();
            for d in divisors(n) {
                prod = prod.mul(&cyclotomic_polynomial(d));
            }
            let mut expect = vec![rat(0); n as usize + 1];
            expect[0] = rat(-1);
            expect[n as usize] = rat(1);
            assert_eq!(prod, UniPoly::from_coeffs(expect), "N = {n}");
        }
    }

    #[test]
    fn roots_of_unity_reduce() {
        assert!(root_of_unity(1, 0).is_one());
        assert_eq!(root_of_unity(4, 2), CyclotomicNumber::from_i64(-1));
        // zeta_3 + zeta_3^2 = -1
        let z3 = root_of_unity(3, 1);
        let s = z3.add(&root_of_unity(3, 2));
        assert_eq!(s, CyclotomicNumber::from_i64(-1));
    }

    #[test]
    fn mixed_conductor_products() {
        let i = root_of_unity(4, 1);
        assert_eq!(CyclotomicNumber::one().mul(&i), i);
        assert_eq!(i.mul(&i), CyclotomicNumber::from_i64(-1));
        // zeta_3 * zeta_4 = zeta_12^7
        let z = root_of_unity(3, 1).mul(&root_of_unity(4, 1));
        assert_eq!(z, root_of_unity(12, 7));
    }

    #[test]
    fn conductor_minimization_is_idempotent() {
        // zeta_8^2 = i lives at conductor 4
        let x = root_of_unity(8, 2);
        assert_eq!(x.conductor(), 4);
        let again = CyclotomicNumber::from_zeta_powers(4, x.coeffs().to_vec());
        assert_eq!(again, x);
        // zeta_6 = -zeta_3^2 stays at conductor 3... (Q(zeta_6) = Q(zeta_3))
        assert_eq!(root_of_unity(6, 1).conductor(), 3);
    }

    #[test]
    fn field_axioms_on_mixed_conductors() {
        let samples = [
            root_of_unity(3, 1),
            root_of_unity(4, 1).add(&CyclotomicNumber::one()),
            root_of_unity(5, 2).scale(&super::super::ratio(2, 3)),
            CyclotomicNumber::from_i64(-2),
            root_of_unity(8, 3),
        ];
        for a in &samples {
            for b in &samples {
                for c in &samples {
                    let lhs = a.mul(b).mul(c);
                    let rhs = a.mul(&b.mul(c));
                    assert_eq!(lhs, rhs);
                    let d1 = a.mul(&b.add(c));
                    let d2 = a.mul(b).add(&a.mul(c));
                    assert_eq!(d1, d2);
                }
            }
        }
    }

    #[test]
    fn serialization_round_trip() {
        let x = root_of_unity(12, 7).scale(&super::super::ratio(-5, 3));
        let s = x.to_serial();
        assert_eq!(CyclotomicNumber::from_serial(&s).unwrap(), x);
        let json = serde_json::to_string(&s).unwrap();
        let back: CyclotomicSerial = serde_json::from_str(&json).unwrap();
        assert_eq!(CyclotomicNumber::from_serial(&back).unwrap(), x);
    }

    #[test]
    fn galois_action_permutes_roots() {
        let z5 = root_of_unity(5, 1);
        assert_eq!(z5.galois(2), root_of_unity(5, 2));
        assert_eq!(z5.galois(2).galois(3), root_of_unity(5, 6 % 5));
    }
}
