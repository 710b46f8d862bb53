use super::datum::SplittingDatum;
use super::group::FiniteGroup;
use super::table::SplittingTable;
use crate::partitions::PrimeKey;
use crate::{ArsfError, Result};
use std::sync::Arc;

/// A field presented by its prime ideals with norms.
pub trait PrimeSource: Send + Sync {
    fn field_name(&self) -> String;
    fn primes_up_to(&self, bound: u64) -> Vec<PrimeKey>;
}

/// A Galois extension presented over its base field: a finite group together
/// with per-prime splitting data.
pub trait GaloisProvider: PrimeSource {
    fn group(&self) -> Arc<FiniteGroup>;
    fn splitting(&self, q: &PrimeKey) -> Result<SplittingDatum>;
}

/// A finite extension L/K presented by the fibers of its prime ideals.
pub trait Extension: Send + Sync {
    fn base_primes(&self, bound: u64) -> Vec<PrimeKey>;
    fn top_primes(&self, bound: u64) -> Vec<PrimeKey>;
    /// The primes of L above `q` with their relative residue degrees.
    fn primes_above(&self, q: &PrimeKey) -> Result<Vec<(PrimeKey, u32)>>;
}

/// Rational primes up to `bound` by sieve.
pub fn rational_primes(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return vec![];
    }
    let n = bound as usize;
    let mut is_prime = vec![true; n + 1];
    is_prime[0] = false;
    if n >= 1 {
        is_prime[1] = false;
    }
    let mut p = 2;
    while p * p <= n {
        if is_prime[p] {
            let mut k = p * p;
            while k <= n {
                is_prime[k] = false;
                k += p;
            }
        }
        p += 1;
    }
    (2..=n).filter(|&k| is_prime[k]).map(|k| k as u64).collect()
}

fn multiplicative_order(p: u64, m: u64) -> u64 {
    if m <= 2 {
        return 1;
    }
    debug_assert_eq!(num_integer::gcd(p % m, m), 1);
    let mut ord = 1;
    let mut x = p % m;
    while x != 1 {
        x = x * p % m;
        ord += 1;
    }
    ord
}

/// Splitting shape of `p` in the `m`-th cyclotomic field:
/// `(e, f, g)` with `m = p^a m'`, `e = phi(p^a)`, `f = ord_(m')(p)`.
pub fn cyclotomic_split_shape(m: u64, p: u64) -> (u64, u64, u64) {
    let mut mp = m;
    let mut e = 1u64;
    while mp % p == 0 {
        mp /= p;
        e *= p;
    }
    let e = e - e / p; // phi(p^a), with phi(1) = 1 handled below
    let e = if e == 0 { 1 } else { e };
    let f = multiplicative_order(p, mp);
    let g = crate::exact::euler_phi(mp) / f;
    (e, f, g)
}

// ---------------------------------------------------------------------------
// Rational and cyclotomic fields
// ---------------------------------------------------------------------------

/// The field of rational numbers (the `m = 1` cyclotomic field).
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    pub m: u64,
}

impl CyclotomicField {
    pub fn rational() -> Self {
        CyclotomicField { m: 1 }
    }
}

impl PrimeSource for CyclotomicField {
    fn field_name(&self) -> String {
        match self.m {
            1 => "Q".into(),
            m => format!("Q(z{m})"),
        }
    }

    fn primes_up_to(&self, bound: u64) -> Vec<PrimeKey> {
        let mut out = Vec::new();
        for p in rational_primes(bound) {
            let (_, f, g) = cyclotomic_split_shape(self.m, p);
            let Some(norm) = p.checked_pow(f as u32) else { continue };
            if norm > bound {
                continue;
            }
            for i in 0..g {
                out.push(PrimeKey {
                    p,
                    index: i as u32,
                    norm,
                });
            }
        }
        out.sort_unstable();
        out
    }
}

/// `Gal(Q(zeta_M)/Q(zeta_m))` with its splitting data, for `m | M`. The
/// group is the subgroup of units mod `M` congruent to 1 mod `m`.
pub struct CyclotomicGalois {
    pub m_top: u64,
    pub m_base: u64,
    group: Arc<FiniteGroup>,
    residues: Vec<u64>,
}

impl CyclotomicGalois {
    pub fn new(m_top: u64, m_base: u64) -> Result<Self> {
        if m_base == 0 || m_top % m_base != 0 {
            return Err(ArsfError::InvalidInput(format!(
                "{m_base} does not divide {m_top}"
            )));
        }
        let (group, residues) = FiniteGroup::unit_subgroup_mod(m_top, m_base);
        Ok(CyclotomicGalois {
            m_top,
            m_base,
            group,
            residues,
        })
    }

    pub fn over_rationals(m: u64) -> Self {
        CyclotomicGalois::new(m, 1).expect("1 divides everything")
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    fn base_field(&self) -> CyclotomicField {
        CyclotomicField { m: self.m_base }
    }
}

fn log_base(p: u64, norm: u64) -> Result<u64> {
    let mut f = 0;
    let mut x = 1u64;
    while x < norm {
        x = x.checked_mul(p).ok_or_else(|| {
            ArsfError::InvalidInput(format!("norm {norm} is not a power of {p}"))
        })?;
        f += 1;
    }
    if x != norm {
        return Err(ArsfError::InvalidInput(format!(
            "norm {norm} is not a power of {p}"
        )));
    }
    Ok(f.max(1))
}

impl PrimeSource for CyclotomicGalois {
    fn field_name(&self) -> String {
        self.base_field().field_name()
    }
    fn primes_up_to(&self, bound: u64) -> Vec<PrimeKey> {
        self.base_field().primes_up_to(bound)
    }
}

impl GaloisProvider for CyclotomicGalois {
    fn group(&self) -> Arc<FiniteGroup> {
        self.group.clone()
    }

    fn splitting(&self, q: &PrimeKey) -> Result<SplittingDatum> {
        let p = q.p;
        let f_base = log_base(p, q.norm)?;
        let big_m = self.m_top;
        let mut m_prime = big_m;
        while m_prime % p == 0 {
            m_prime /= p;
        }
        // absolute inertia: units congruent to 1 mod M'
        let inertia: Vec<u16> = self
            .residues
            .iter()
            .enumerate()
            .filter(|(_, &r)| r % m_prime == 1 % m_prime.max(1))
            .map(|(i, _)| i as u16)
            .collect();
        // relative Frobenius: the smallest residue in the subgroup matching
        // p^(f_base) mod M'
        let target = if m_prime <= 1 {
            0
        } else {
            let mut t = 1u64;
            for _ in 0..f_base {
                t = t * (p % m_prime) % m_prime;
            }
            t
        };
        let frobenius = self
            .residues
            .iter()
            .position(|&r| m_prime <= 1 || r % m_prime == target)
            .ok_or_else(|| ArsfError::MissingPrimeData(q.label()))? as u16;
        let f_top = multiplicative_order(p, m_prime);
        if f_top % f_base != 0 {
            return Err(ArsfError::InvalidInput(format!(
                "residue degree {f_base} at {q} does not divide {f_top}"
            )));
        }
        let f_rel = (f_top / f_base) as u32;
        let e_rel = inertia.len() as u64;
        let g_rel = self.group.order() as u64 / (e_rel * f_rel as u64);
        let sd = SplittingDatum {
            prime: *q,
            inertia,
            frobenius,
            residue_degrees: vec![f_rel; g_rel as usize],
        };
        sd.validate(&self.group)?;
        Ok(sd)
    }
}

/// The extension `Q(zeta_M)/Q(zeta_m)` as a fibration of primes. Primes over
/// `p` upstairs are assigned to downstairs primes in index blocks, which
/// nests correctly along towers.
pub struct CyclotomicExtension {
    pub m_top: u64,
    pub m_base: u64,
}

impl Extension for CyclotomicExtension {
    fn base_primes(&self, bound: u64) -> Vec<PrimeKey> {
        CyclotomicField { m: self.m_base }.primes_up_to(bound)
    }

    fn top_primes(&self, bound: u64) -> Vec<PrimeKey> {
        CyclotomicField { m: self.m_top }.primes_up_to(bound)
    }

    fn primes_above(&self, q: &PrimeKey) -> Result<Vec<(PrimeKey, u32)>> {
        let p = q.p;
        let f_base = log_base(p, q.norm)?;
        let (_, f_top, g_top) = cyclotomic_split_shape(self.m_top, p);
        let (_, _, g_base) = cyclotomic_split_shape(self.m_base, p);
        if f_top % f_base != 0 {
            return Err(ArsfError::InvalidInput(format!(
                "residue degrees inconsistent at {q}"
            )));
        }
        let f_rel = (f_top / f_base) as u32;
        let g_rel = g_top / g_base;
        let norm_top = p.pow(f_top as u32);
        Ok((0..g_rel)
            .map(|j| {
                (
                    PrimeKey {
                        p,
                        index: (q.index as u64 * g_rel + j) as u32,
                        norm: norm_top,
                    },
                    f_rel,
                )
            })
            .collect())
    }
}

// ---------------------------------------------------------------------------
// Quadratic fields
// ---------------------------------------------------------------------------

/// `Q(sqrt(d))/Q` by Kronecker-symbol splitting.
pub struct QuadraticGalois {
    pub discriminant: i64,
    group: Arc<FiniteGroup>,
}

impl QuadraticGalois {
    pub fn new(d: i64) -> Result<Self> {
        let discriminant = super::character::fundamental_discriminant(d)?;
        let group = FiniteGroup::from_mul_table("C2", vec![vec![0, 1], vec![1, 0]])?;
        Ok(QuadraticGalois {
            discriminant,
            group,
        })
    }

    /// Trivial and quadratic characters of the two-element Galois group.
    pub fn characters(&self) -> Vec<super::character::CharacterData> {
        use crate::exact::CyclotomicNumber;
        let triv = super::character::CharacterData::trivial(self.group.clone());
        let quad = super::character::CharacterData::new(
            &format!("chi:{}", self.discriminant),
            self.group.clone(),
            vec![CyclotomicNumber::one(), CyclotomicNumber::from_i64(-1)],
        )
        .expect("quadratic character");
        vec![triv, quad]
    }
}

impl PrimeSource for QuadraticGalois {
    fn field_name(&self) -> String {
        "Q".into()
    }
    fn primes_up_to(&self, bound: u64) -> Vec<PrimeKey> {
        rational_primes(bound).into_iter().map(PrimeKey::rational).collect()
    }
}

impl GaloisProvider for QuadraticGalois {
    fn group(&self) -> Arc<FiniteGroup> {
        self.group.clone()
    }

    fn splitting(&self, q: &PrimeKey) -> Result<SplittingDatum> {
        let p = q.p;
        let sd = match super::character::kronecker_symbol(self.discriminant, p) {
            0 => SplittingDatum {
                prime: *q,
                inertia: vec![0, 1],
                frobenius: 0,
                residue_degrees: vec![1],
            },
            1 => SplittingDatum::unramified(*q, 0, &self.group),
            _ => SplittingDatum::unramified(*q, 1, &self.group),
        };
        sd.validate(&self.group)?;
        Ok(sd)
    }
}

// ---------------------------------------------------------------------------
// The cubic fixture: splitting field of x^3 - a with group S3
// ---------------------------------------------------------------------------

/// Galois provider over Q for the splitting field of `x^3 - a`. Unramified
/// primes get their Frobenius class by counting roots of `x^3 - a mod p`;
/// ramified primes must come from the attached table.
pub struct CubicS3 {
    pub a: i64,
    table: SplittingTable,
}

impl CubicS3 {
    pub fn new(a: i64, table: SplittingTable) -> Result<Self> {
        if a == 0 {
            return Err(ArsfError::InvalidInput("a must be nonzero".into()));
        }
        if table.group.order() != 6 {
            return Err(ArsfError::InvalidTable(
                "cubic rule needs a group of order 6".into(),
            ));
        }
        let provider = CubicS3 { a, table };
        // consistency rule: unramified table entries must match the
        // root-counting recomputation
        for (p, sd) in &provider.table.primes {
            if sd.is_unramified() && provider.is_unramified_by_rule(*p) {
                let computed = provider.unramified_splitting(&sd.prime)?;
                let g = provider.table.group.clone();
                if g.class_of(computed.frobenius) != g.class_of(sd.frobenius) {
                    return Err(ArsfError::InvalidTable(format!(
                        "table entry at p = {p} disagrees with the root-count rule"
                    )));
                }
            }
        }
        Ok(provider)
    }

    /// The builtin `a = 2` fixture with its shipped ramified-prime table.
    pub fn builtin() -> Result<Self> {
        let table = SplittingTable::from_json(include_str!("../../fixtures/s3_x3_2.json"))?;
        CubicS3::new(2, table)
    }

    pub fn table(&self) -> &SplittingTable {
        &self.table
    }

    fn is_unramified_by_rule(&self, p: u64) -> bool {
        let a = self.a.unsigned_abs();
        p != 3 && a % p != 0
    }

    fn count_roots(&self, p: u64) -> u64 {
        let a = self.a.rem_euclid(p as i64) as u64;
        (0..p).filter(|&x| (x * x % p) * x % p == a).count() as u64
    }

    fn unramified_splitting(&self, q: &PrimeKey) -> Result<SplittingDatum> {
        let group = &self.table.group;
        let classes = group.classes();
        // classes ordered by size signature: identity, then by element order
        let class_rep_with_order = |ord: u64| -> Result<u16> {
            classes
                .iter()
                .map(|c| c[0])
                .find(|&g| group.element_order(g) == ord)
                .ok_or_else(|| ArsfError::InvalidTable(format!("no class of order {ord}")))
        };
        let frobenius = match self.count_roots(q.p) {
            3 => 0,
            1 => class_rep_with_order(2)?,
            0 => class_rep_with_order(3)?,
            n => {
                return Err(ArsfError::InvalidInput(format!(
                    "{n} roots of a cubic mod {}",
                    q.p
                )))
            }
        };
        Ok(SplittingDatum::unramified(*q, frobenius, group))
    }
}

impl PrimeSource for CubicS3 {
    fn field_name(&self) -> String {
        "Q".into()
    }
    fn primes_up_to(&self, bound: u64) -> Vec<PrimeKey> {
        rational_primes(bound).into_iter().map(PrimeKey::rational).collect()
    }
}

impl GaloisProvider for CubicS3 {
    fn group(&self) -> Arc<FiniteGroup> {
        self.table.group.clone()
    }

    fn splitting(&self, q: &PrimeKey) -> Result<SplittingDatum> {
        if let Some(sd) = self.table.primes.get(&q.p) {
            return Ok(SplittingDatum {
                prime: *q,
                ..sd.clone()
            });
        }
        if !self.is_unramified_by_rule(q.p) {
            return Err(ArsfError::MissingPrimeData(q.label()));
        }
        self.unramified_splitting(q)
    }
}

/// The splitting field of the cubic as a prime source (norms `p^f`).
pub struct CubicSplittingField<'a> {
    pub provider: &'a CubicS3,
}

impl PrimeSource for CubicSplittingField<'_> {
    fn field_name(&self) -> String {
        format!("splitting field of x^3 - {}", self.provider.a)
    }

    fn primes_up_to(&self, bound: u64) -> Vec<PrimeKey> {
        let mut out = Vec::new();
        for p in rational_primes(bound) {
            let Ok(sd) = self.provider.splitting(&PrimeKey::rational(p)) else { continue };
            let f = sd.residue_degrees[0];
            let g = sd.residue_degrees.len();
            let Some(norm) = p.checked_pow(f) else { continue };
            if norm > bound {
                continue;
            }
            for i in 0..g {
                out.push(PrimeKey {
                    p,
                    index: i as u32,
                    norm,
                });
            }
        }
        out.sort_unstable();
        out
    }
}

/// The splitting field of the cubic over Q as an extension.
pub struct CubicOverRationals<'a> {
    pub provider: &'a CubicS3,
}

impl Extension for CubicOverRationals<'_> {
    fn base_primes(&self, bound: u64) -> Vec<PrimeKey> {
        self.provider.primes_up_to(bound)
    }

    fn top_primes(&self, bound: u64) -> Vec<PrimeKey> {
        CubicSplittingField {
            provider: self.provider,
        }
        .primes_up_to(bound)
    }

    fn primes_above(&self, q: &PrimeKey) -> Result<Vec<(PrimeKey, u32)>> {
        let sd = self.provider.splitting(q)?;
        let f = sd.residue_degrees[0];
        let norm = q.p.pow(f);
        Ok((0..sd.residue_degrees.len())
            .map(|i| {
                (
                    PrimeKey {
                        p: q.p,
                        index: i as u32,
                        norm,
                    },
                    f,
                )
            })
            .collect())
    }
}

/// Galois provider for the splitting field of the cubic over the quadratic
/// subfield fixed by the alternating subgroup (the field of cube roots of
/// unity), with group A3.
pub struct CubicOverQuadratic<'a> {
    provider: &'a CubicS3,
    subgroup: Vec<u16>,
    group: Arc<FiniteGroup>,
}

impl<'a> CubicOverQuadratic<'a> {
    pub fn new(provider: &'a CubicS3) -> Result<Self> {
        let s3 = provider.group();
        let subgroup = s3.commutator_subgroup();
        if subgroup.len() != 3 {
            return Err(ArsfError::InvalidTable(
                "expected an order-3 commutator subgroup".into(),
            ));
        }
        // subgroup as its own group, relabelled by position
        let pos = |g: u16| subgroup.iter().position(|&x| x == g).unwrap() as u16;
        let mul = subgroup
            .iter()
            .map(|&a| subgroup.iter().map(|&b| pos(s3.mul(a, b))).collect())
            .collect();
        let group = FiniteGroup::from_mul_table("A3", mul)?;
        Ok(CubicOverQuadratic {
            provider,
            subgroup,
            group,
        })
    }

    /// The three characters of the cyclic cubic Galois group, in the order
    /// trivial, omega, omega^2.
    pub fn characters(&self) -> Vec<super::character::CharacterData> {
        use crate::exact::root_of_unity;
        // element 1 of the relabelled group generates
        (0..3)
            .map(|j| {
                let values: Vec<_> = self
                    .group
                    .classes()
                    .iter()
                    .map(|cls| {
                        // cyclic of order 3: discrete log is the power of
                        // the generator
                        let g = cls[0];
                        let mut k = 0;
                        let mut x = 0u16;
                        while x != g {
                            x = self.group.mul(x, 1);
                            k += 1;
                        }
                        root_of_unity(3, (j * k) as i64)
                    })
                    .collect();
                super::character::CharacterData::new(
                    &format!("cubic.{j}"),
                    self.group.clone(),
                    values,
                )
                .expect("cubic character")
            })
            .collect()
    }

    pub fn subgroup_elements(&self) -> &[u16] {
        &self.subgroup
    }

    /// Embedding of the relabelled A3 into the fixture group.
    pub fn embedding(&self) -> Vec<u16> {
        self.subgroup.clone()
    }
}

impl PrimeSource for CubicOverQuadratic<'_> {
    fn field_name(&self) -> String {
        "Q(z3)".into()
    }
    fn primes_up_to(&self, bound: u64) -> Vec<PrimeKey> {
        CyclotomicField { m: 3 }.primes_up_to(bound)
    }
}

impl GaloisProvider for CubicOverQuadratic<'_> {
    fn group(&self) -> Arc<FiniteGroup> {
        self.group.clone()
    }

    fn splitting(&self, q: &PrimeKey) -> Result<SplittingDatum> {
        let s3 = self.provider.group();
        let abs = self.provider.splitting(&PrimeKey::rational(q.p))?;
        let f_base = log_base(q.p, q.norm)?;
        // primes of the quadratic subfield over p correspond to double
        // cosets A3 \ S3 / D(P); the prime indexed by a double coset with
        // representative x carries the conjugated data x I x^-1 and
        // x sigma^(f_base) x^-1
        let mut d_gens = abs.inertia.clone();
        d_gens.push(abs.frobenius);
        let decomposition = s3.subgroup_generated(&d_gens);
        let mut cosets: Vec<Vec<u16>> = Vec::new();
        for x in 0..s3.order() as u16 {
            let mut coset: Vec<u16> = self
                .subgroup
                .iter()
                .flat_map(|&a| decomposition.iter().map(move |&d| (a, d)))
                .map(|(a, d)| s3.mul(s3.mul(a, x), d))
                .collect();
            coset.sort_unstable();
            coset.dedup();
            if !cosets.contains(&coset) {
                cosets.push(coset);
            }
        }
        cosets.sort();
        let coset = cosets
            .get(q.index as usize)
            .ok_or_else(|| ArsfError::MissingPrimeData(q.label()))?;
        let x = coset[0];
        let conj = |g: u16| s3.mul(s3.mul(x, g), s3.inv(x));
        let inertia_abs: Vec<u16> = abs.inertia.iter().map(|&h| conj(h)).collect();
        let sk = conj(s3.pow(abs.frobenius, f_base));
        let pos = |g: u16| -> Option<u16> {
            self.subgroup.iter().position(|&y| y == g).map(|i| i as u16)
        };
        let mut inertia: Vec<u16> = inertia_abs.iter().filter_map(|&h| pos(h)).collect();
        inertia.sort_unstable();
        // relative Frobenius: smallest subgroup element in sk * I_abs
        let frobenius = self
            .subgroup
            .iter()
            .position(|&y| inertia_abs.iter().any(|&h| s3.mul(sk, h) == y))
            .ok_or_else(|| ArsfError::MissingPrimeData(q.label()))? as u16;
        let f_abs = abs.residue_degrees[0] as u64;
        if f_abs % f_base != 0 {
            return Err(ArsfError::InvalidInput(format!(
                "residue degrees inconsistent at {q}"
            )));
        }
        let f_rel = (f_abs / f_base) as u32;
        let e_rel = inertia.len() as u64;
        let g_rel = 3 / (e_rel * f_rel as u64);
        let sd = SplittingDatum {
            prime: *q,
            inertia,
            frobenius,
            residue_degrees: vec![f_rel; g_rel as usize],
        };
        sd.validate(&self.group)?;
        Ok(sd)
    }
}

/// The cubic splitting field over the quadratic subfield as an extension.
pub struct CubicOverQuadraticExtension<'a> {
    pub relative: &'a CubicOverQuadratic<'a>,
}

impl Extension for CubicOverQuadraticExtension<'_> {
    fn base_primes(&self, bound: u64) -> Vec<PrimeKey> {
        self.relative.primes_up_to(bound)
    }

    fn top_primes(&self, bound: u64) -> Vec<PrimeKey> {
        CubicSplittingField {
            provider: self.relative.provider,
        }
        .primes_up_to(bound)
    }

    fn primes_above(&self, q: &PrimeKey) -> Result<Vec<(PrimeKey, u32)>> {
        let abs = self.relative.provider.splitting(&PrimeKey::rational(q.p))?;
        let f_base = log_base(q.p, q.norm)?;
        let f_abs = abs.residue_degrees[0] as u64;
        let g_abs = abs.residue_degrees.len() as u64;
        let (_, _, g_base) = cyclotomic_split_shape(3, q.p);
        let f_rel = (f_abs / f_base) as u32;
        let g_rel = g_abs / g_base;
        let norm = q.p.pow(f_abs as u32);
        Ok((0..g_rel)
            .map(|j| {
                (
                    PrimeKey {
                        p: q.p,
                        index: (q.index as u64 * g_rel + j) as u32,
                        norm,
                    },
                    f_rel,
                )
            })
            .collect())
    }
}

/// Trivial extension K/K of any field: the Galois provider behind the
/// Dedekind series.
pub struct TrivialGalois<S: PrimeSource> {
    pub field: S,
    group: Arc<FiniteGroup>,
}

impl<S: PrimeSource> TrivialGalois<S> {
    pub fn new(field: S) -> Self {
        TrivialGalois {
            field,
            group: FiniteGroup::trivial(),
        }
    }
}

impl<S: PrimeSource> PrimeSource for TrivialGalois<S> {
    fn field_name(&self) -> String {
        self.field.field_name()
    }
    fn primes_up_to(&self, bound: u64) -> Vec<PrimeKey> {
        self.field.primes_up_to(bound)
    }
}

impl<S: PrimeSource> GaloisProvider for TrivialGalois<S> {
    fn group(&self) -> Arc<FiniteGroup> {
        self.group.clone()
    }
    fn splitting(&self, q: &PrimeKey) -> Result<SplittingDatum> {
        Ok(SplittingDatum {
            prime: *q,
            inertia: vec![0],
            frobenius: 0,
            residue_degrees: vec![1],
        })
    }
}

/// A provider backed entirely by a table file, with unlisted primes served
/// by the rule named in the header when one exists.
pub enum TableBacked {
    Cubic(CubicS3),
    Pure(PureTable),
}

pub struct PureTable {
    pub table: SplittingTable,
}

impl TableBacked {
    pub fn from_table(table: SplittingTable) -> Result<Self> {
        match table.unramified_rule.clone().as_deref() {
            Some(rule) => {
                let a = rule
                    .strip_prefix("cubic-s3:")
                    .and_then(|s| s.parse::<i64>().ok())
                    .ok_or_else(|| {
                        ArsfError::InvalidTable(format!("unknown unramified rule {rule:?}"))
                    })?;
                Ok(TableBacked::Cubic(CubicS3::new(a, table)?))
            }
            None => Ok(TableBacked::Pure(PureTable { table })),
        }
    }

    pub fn as_provider(&self) -> &dyn GaloisProvider {
        match self {
            TableBacked::Cubic(c) => c,
            TableBacked::Pure(p) => p,
        }
    }
}

impl PrimeSource for PureTable {
    fn field_name(&self) -> String {
        "Q".into()
    }
    fn primes_up_to(&self, bound: u64) -> Vec<PrimeKey> {
        self.table
            .primes
            .keys()
            .filter(|&&p| p <= bound)
            .map(|&p| PrimeKey::rational(p))
            .collect()
    }
}

impl GaloisProvider for PureTable {
    fn group(&self) -> Arc<FiniteGroup> {
        self.table.group.clone()
    }
    fn splitting(&self, q: &PrimeKey) -> Result<SplittingDatum> {
        self.table
            .primes
            .get(&q.p)
            .map(|sd| SplittingDatum {
                prime: *q,
                ..sd.clone()
            })
            .ok_or_else(|| ArsfError::MissingPrimeData(q.label()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_prime_counts() {
        assert_eq!(
            CyclotomicField::rational()
                .primes_up_to(10)
                .iter()
                .map(|k| k.p)
                .collect::<Vec<_>>(),
            vec![2, 3, 5, 7]
        );
        assert_eq!(CyclotomicField::rational().primes_up_to(2).len(), 1);
        assert_eq!(CyclotomicField::rational().primes_up_to(100).len(), 25);
    }

    #[test]
    fn cyclotomic_splitting_mod_4() {
        let g4 = CyclotomicGalois::over_rationals(4);
        // 5 = 1 mod 4: trivial inertia, identity Frobenius
        let sd5 = g4.splitting(&PrimeKey::rational(5)).unwrap();
        assert!(sd5.is_unramified());
        assert_eq!(sd5.frobenius, 0);
        assert_eq!(sd5.residue_degrees, vec![1, 1]);
        // 2 ramifies fully
        let sd2 = g4.splitting(&PrimeKey::rational(2)).unwrap();
        assert_eq!(sd2.inertia.len(), 2);
        assert_eq!(sd2.residue_degrees, vec![1]);
        // 3 = 3 mod 4: inert
        let sd3 = g4.splitting(&PrimeKey::rational(3)).unwrap();
        assert!(sd3.is_unramified());
        assert_eq!(g4.residues()[sd3.frobenius as usize], 3);
        assert_eq!(sd3.residue_degrees, vec![2]);
    }

    #[test]
    fn cyclotomic_splitting_mod_3() {
        let g3 = CyclotomicGalois::over_rationals(3);
        let sd2 = g3.splitting(&PrimeKey::rational(2)).unwrap();
        assert!(sd2.is_unramified());
        assert_eq!(g3.residues()[sd2.frobenius as usize], 2);
    }

    #[test]
    fn relative_cyclotomic_tower_12_over_4() {
        // Gal(Q(z12)/Q(i)) = {1, 5}; the inert base prime 3 (norm 9)
        let rel = CyclotomicGalois::new(12, 4).unwrap();
        assert_eq!(rel.group().order(), 2);
        assert_eq!(rel.residues(), &[1, 5]);
        let q3 = PrimeKey {
            p: 3,
            index: 0,
            norm: 9,
        };
        let sd = rel.splitting(&q3).unwrap();
        // 3 ramifies in Q(z12)/Q(i) with e = 2
        assert_eq!(sd.inertia.len(), 2);
        assert_eq!(sd.residue_degrees, vec![1]);
        // split base prime 13 (norm 13): 13 = 1 mod 12, fully split
        let q13 = PrimeKey {
            p: 13,
            index: 0,
            norm: 13,
        };
        let sd13 = rel.splitting(&q13).unwrap();
        assert!(sd13.is_unramified());
        assert_eq!(sd13.frobenius, 0);
        assert_eq!(sd13.residue_degrees, vec![1, 1]);
        // 7 = 3 mod 4 is inert in Q(i), norm 49; 7 mod 12 = 7: f_top = 2, so
        // f_rel = 1 and the two z12-primes over 7 sit above the one
        // Q(i)-prime
        let q7 = PrimeKey {
            p: 7,
            index: 0,
            norm: 49,
        };
        let sd7 = rel.splitting(&q7).unwrap();
        assert!(sd7.is_unramified());
        assert_eq!(sd7.residue_degrees, vec![1, 1]);
    }

    #[test]
    fn cyclotomic_extension_fibers() {
        let ext = CyclotomicExtension {
            m_top: 12,
            m_base: 4,
        };
        // base prime 5 splits in Q(i) into two primes of norm 5; each has
        // one z12-prime above with f_rel = 2 (5 has order 2 mod 12)
        let q5a = PrimeKey {
            p: 5,
            index: 0,
            norm: 5,
        };
        let above = ext.primes_above(&q5a).unwrap();
        assert_eq!(above.len(), 1);
        assert_eq!(above[0].0.norm, 25);
        assert_eq!(above[0].1, 2);
        // tower consistency of block assignment: Q(z12)/Q directly
        let ext_full = CyclotomicExtension {
            m_top: 12,
            m_base: 1,
        };
        let all_above = ext_full.primes_above(&PrimeKey::rational(5)).unwrap();
        assert_eq!(all_above.len(), 2);
    }

    #[test]
    fn quadratic_matches_cyclotomic_for_gaussians() {
        let quad = QuadraticGalois::new(-1).unwrap();
        assert_eq!(quad.discriminant, -4);
        let cyc = CyclotomicGalois::over_rationals(4);
        for p in [2u64, 3, 5, 7, 11, 13] {
            let a = quad.splitting(&PrimeKey::rational(p)).unwrap();
            let b = cyc.splitting(&PrimeKey::rational(p)).unwrap();
            assert_eq!(a.inertia.len(), b.inertia.len(), "p = {p}");
            assert_eq!(a.residue_degrees, b.residue_degrees, "p = {p}");
        }
    }

    #[test]
    fn cubic_unramified_classes() {
        let cubic = CubicS3::builtin().unwrap();
        let g = cubic.group();
        // p = 5: one root (3^3 = 27 = 2 mod 5): transposition class
        let sd5 = cubic.splitting(&PrimeKey::rational(5)).unwrap();
        assert_eq!(g.element_order(sd5.frobenius), 2);
        // p = 7: no roots: 3-cycle class
        let sd7 = cubic.splitting(&PrimeKey::rational(7)).unwrap();
        assert_eq!(g.element_order(sd7.frobenius), 3);
        // p = 31: three roots: identity
        let sd31 = cubic.splitting(&PrimeKey::rational(31)).unwrap();
        assert_eq!(sd31.frobenius, 0);
        assert_eq!(sd31.residue_degrees.len(), 6);
    }

    #[test]
    fn cubic_ramified_from_fixture() {
        let cubic = CubicS3::builtin().unwrap();
        let sd2 = cubic.splitting(&PrimeKey::rational(2)).unwrap();
        assert_eq!(sd2.inertia.len(), 3);
        assert_eq!(sd2.residue_degrees, vec![2]);
        // sigma mod I nontrivial
        assert!(!sd2.inertia.contains(&sd2.frobenius));
        let sd3 = cubic.splitting(&PrimeKey::rational(3)).unwrap();
        assert_eq!(sd3.inertia.len(), 6);
        assert_eq!(sd3.residue_degrees, vec![1]);
    }

    #[test]
    fn cubic_relative_structure() {
        let cubic = CubicS3::builtin().unwrap();
        let rel = CubicOverQuadratic::new(&cubic).unwrap();
        assert_eq!(rel.group().order(), 3);
        // base prime over 3 in Q(z3) has norm 3; fully ramified upstairs
        let q3 = PrimeKey {
            p: 3,
            index: 0,
            norm: 3,
        };
        let sd = rel.splitting(&q3).unwrap();
        assert_eq!(sd.inertia.len(), 3);
        // inert prime 2 (norm 4): e_rel = 3 as well
        let q2 = PrimeKey {
            p: 2,
            index: 0,
            norm: 4,
        };
        let sd2 = rel.splitting(&q2).unwrap();
        assert_eq!(sd2.inertia.len(), 3);
        // split prime 7 (norm 7, two primes): relative Frobenius is the
        // 3-cycle itself
        let q7 = PrimeKey {
            p: 7,
            index: 0,
            norm: 7,
        };
        let sd7 = rel.splitting(&q7).unwrap();
        assert!(sd7.is_unramified());
        assert_eq!(rel.group().element_order(sd7.frobenius), 3);
        assert_eq!(sd7.residue_degrees, vec![3]);
    }

    #[test]
    fn frobenius_class_densities_logged() {
        // soft checks, printed not asserted
        let g4 = CyclotomicGalois::over_rationals(4);
        let mut split = 0u64;
        let mut inert = 0u64;
        for p in rational_primes(10_000) {
            if p == 2 {
                continue;
            }
            let sd = g4.splitting(&PrimeKey::rational(p)).unwrap();
            if sd.frobenius == 0 {
                split += 1;
            } else {
                inert += 1;
            }
        }
        println!("[soft] mod-4 Frobenius counts up to 10^4: split {split}, inert {inert}");

        let cubic = CubicS3::builtin().unwrap();
        let g = cubic.group();
        let mut counts = [0u64; 4];
        let mut total = 0u64;
        for p in rational_primes(10_000) {
            let Ok(sd) = cubic.splitting(&PrimeKey::rational(p)) else { continue };
            if !sd.is_unramified() {
                continue;
            }
            counts[g.element_order(sd.frobenius) as usize] += 1;
            total += 1;
        }
        println!(
            "[soft] cubic Frobenius proportions up to 10^4: identity {:.3}, transposition {:.3}, 3-cycle {:.3} (expect 0.167 / 0.5 / 0.333)",
            counts[1] as f64 / total as f64,
            counts[2] as f64 / total as f64,
            counts[3] as f64 / total as f64
        );
    }
}
