use super::group::FiniteGroup;
use crate::exact::{rat, ratio, root_of_unity, CyclotomicNumber, Rational};
use crate::{ArsfError, Result};
use num_bigint::BigInt;
use num_traits::Signed;
use std::sync::Arc;

/// Class function on a finite group with cyclotomic values; `dim` is the
/// value at the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterData {
    pub name: String,
    group: Arc<FiniteGroup>,
    class_values: Vec<CyclotomicNumber>,
}

impl CharacterData {
    pub fn new(
        name: &str,
        group: Arc<FiniteGroup>,
        class_values: Vec<CyclotomicNumber>,
    ) -> Result<Self> {
        if class_values.len() != group.classes().len() {
            return Err(ArsfError::InvalidInput(format!(
                "expected {} class values, got {}",
                group.classes().len(),
                class_values.len()
            )));
        }
        let c = CharacterData {
            name: name.to_string(),
            group,
            class_values,
        };
        let dim = c.value(0);
        match dim.as_rational() {
            Some(d) if d.denom() == &BigInt::from(1) && d.numer() > &BigInt::from(0) => {}
            _ => {
                return Err(ArsfError::InvalidInput(format!(
                    "character dimension must be a positive integer, got {dim}"
                )))
            }
        }
        Ok(c)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn value(&self, g: u16) -> CyclotomicNumber {
        self.class_values[self.group.class_of(g)].clone()
    }

    pub fn class_values(&self) -> &[CyclotomicNumber] {
        &self.class_values
    }

    pub fn dim(&self) -> u64 {
        let d = self.value(0).as_rational().expect("validated integer");
        u64::try_from(d.numer().clone()).expect("positive")
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let values = vec![CyclotomicNumber::one(); group.classes().len()];
        CharacterData::new("trivial", group, values).expect("trivial character")
    }

    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let mut values = vec![CyclotomicNumber::zero(); group.classes().len()];
        values[group.class_of(0)] = CyclotomicNumber::from_i64(group.order() as i64);
        CharacterData::new("regular", group, values).expect("regular character")
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let values = self
            .class_values
            .iter()
            .zip(&other.class_values)
            .map(|(a, b)| a.add(b))
            .collect();
        CharacterData::new(
            &format!("{}+{}", self.name, other.name),
            self.group.clone(),
            values,
        )
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let values = self
            .class_values
            .iter()
            .zip(&other.class_values)
            .map(|(a, b)| a.mul(b))
            .collect();
        CharacterData::new(
            &format!("{}*{}", self.name, other.name),
            self.group.clone(),
            values,
        )
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if !Arc::ptr_eq(&self.group, &other.group) && self.group != other.group {
            return Err(ArsfError::InvalidInput(
                "characters live on different groups".into(),
            ));
        }
        Ok(())
    }

    /// `<self, other> = (1/|G|) sum_g self(g) other(g^-1)`.
    pub fn inner(&self, other: &Self) -> Result<CyclotomicNumber> {
        self.check_same_group(other)?;
        let g = &self.group;
        let mut s = CyclotomicNumber::zero();
        for x in 0..g.order() as u16 {
            s = s.add(&self.value(x).mul(&other.value(g.inv(x))));
        }
        Ok(s.scale(&ratio(1, g.order() as i64)))
    }

    /// Pull back along a surjective homomorphism `projection: G -> Q`
    /// (element-indexed). The result is a character of `G`.
    pub fn inflate(
        &self,
        group: Arc<FiniteGroup>,
        projection: &[u16],
    ) -> Result<Self> {
        let q = &self.group;
        if projection.len() != group.order() {
            return Err(ArsfError::NotHomomorphism("projection length".into()));
        }
        if projection[0] != 0 {
            return Err(ArsfError::NotHomomorphism("identity must map to identity".into()));
        }
        for a in 0..group.order() as u16 {
            for b in 0..group.order() as u16 {
                let lhs = projection[group.mul(a, b) as usize];
                let rhs = q.mul(projection[a as usize], projection[b as usize]);
                if lhs != rhs {
                    return Err(ArsfError::NotHomomorphism(format!(
                        "projection fails at ({a},{b})"
                    )));
                }
            }
        }
        let values = group
            .classes()
            .iter()
            .map(|class| self.value(projection[class[0] as usize]))
            .collect();
        CharacterData::new(&format!("infl({})", self.name), group, values)
    }

    /// Induce along an injective homomorphism `embedding: H -> G`
    /// (element-indexed): `Ind(g) = (1/|H|) sum over x in G with
    /// x^-1 g x in H of chi(x^-1 g x)`.
    pub fn induce(&self, group: Arc<FiniteGroup>, embedding: &[u16]) -> Result<Self> {
        let h = &self.group;
        if embedding.len() != h.order() {
            return Err(ArsfError::NotHomomorphism("embedding length".into()));
        }
        if embedding[0] != 0 {
            return Err(ArsfError::NotHomomorphism("identity must map to identity".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for &x in embedding {
            if !seen.insert(x) {
                return Err(ArsfError::NotHomomorphism("embedding not injective".into()));
            }
        }
        for a in 0..h.order() as u16 {
            for b in 0..h.order() as u16 {
                if embedding[h.mul(a, b) as usize] != group.mul(embedding[a as usize], embedding[b as usize]) {
                    return Err(ArsfError::NotHomomorphism(format!(
                        "embedding fails at ({a},{b})"
                    )));
                }
            }
        }
        let preimage = |g: u16| -> Option<u16> {
            embedding.iter().position(|&x| x == g).map(|i| i as u16)
        };
        let values = group
            .classes()
            .iter()
            .map(|class| {
                let rep = class[0];
                let mut s = CyclotomicNumber::zero();
                for x in 0..group.order() as u16 {
                    let conj = group.mul(group.mul(group.inv(x), rep), x);
                    if let Some(hh) = preimage(conj) {
                        s = s.add(&self.value_on_subgroup(hh));
                    }
                }
                s.scale(&ratio(1, h.order() as i64))
            })
            .collect();
        CharacterData::new(&format!("ind({})", self.name), group, values)
    }

    fn value_on_subgroup(&self, h: u16) -> CyclotomicNumber {
        self.class_values[self.group.class_of(h)].clone()
    }
}

/// All Dirichlet characters mod `m` as characters of the unit group, in a
/// deterministic order with the trivial character first. Returns the group,
/// the residues it indexes, and the characters.
pub fn dirichlet_characters(m: u64) -> (Arc<FiniteGroup>, Vec<u64>, Vec<CharacterData>) {
    let (group, residues) = FiniteGroup::unit_group(m);
    // generators of (Z/m)^* via CRT on prime power factors
    struct Factor {
        modulus: u64,
        gens: Vec<(u64, u64)>, // (generator residue, order)
    }
    let mut factors: Vec<Factor> = Vec::new();
    let mut rest = m;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut pk = 1;
            while rest % p == 0 {
                rest /= p;
                pk *= p;
            }
            factors.push(Factor {
                modulus: pk,
                gens: prime_power_unit_gens(p, pk),
            });
        }
        p += 1;
    }
    if rest > 1 {
        factors.push(Factor {
            modulus: rest,
            gens: prime_power_unit_gens(rest, rest),
        });
    }
    // flatten generator list with CRT lifts
    let mut gens: Vec<(u64, u64)> = Vec::new(); // (residue mod m, order)
    for f in &factors {
        for &(g, ord) in &f.gens {
            // lift: g mod f.modulus, 1 mod everything else
            let mut lift = 0u64;
            for r in 0..m {
                let r = r + 1;
                if r % f.modulus == g % f.modulus
                    && factors
                        .iter()
                        .all(|o| o.modulus == f.modulus || r % o.modulus == 1)
                {
                    lift = r % m;
                    break;
                }
            }
            gens.push((lift, ord));
        }
    }
    // discrete logs of each residue with respect to the generators
    let dlog = |mut target: u64| -> Vec<u64> {
        let mut exps = vec![0u64; gens.len()];
        // brute force over the (small) product of generator orders
        fn rec(
            gens: &[(u64, u64)],
            m: u64,
            target: u64,
            idx: usize,
            acc: u64,
            exps: &mut Vec<u64>,
        ) -> bool {
            if idx == gens.len() {
                return acc == target;
            }
            let (g, ord) = gens[idx];
            let mut cur = acc;
            for e in 0..ord {
                exps[idx] = e;
                if rec(gens, m, target, idx + 1, cur, exps) {
                    return true;
                }
                cur = cur * g % m;
            }
            false
        }
        if m == 1 {
            return exps;
        }
        target %= m;
        let ok = rec(&gens, m, target, 0, 1 % m, &mut exps);
        debug_assert!(ok, "unit must be expressible in generators");
        exps
    };
    let logs: Vec<Vec<u64>> = residues.iter().map(|&r| dlog(r)).collect();
    // characters: one per exponent tuple
    let mut characters = Vec::new();
    let total: u64 = gens.iter().map(|&(_, ord)| ord).product();
    for j in 0..total {
        // mixed-radix digits of j over the generator orders
        let mut digits = Vec::with_capacity(gens.len());
        let mut jj = j;
        for &(_, ord) in &gens {
            digits.push(jj % ord);
            jj /= ord;
        }
        let values: Vec<CyclotomicNumber> = group
            .classes()
            .iter()
            .map(|class| {
                let r = class[0] as usize; // abelian: classes are singletons
                let mut v = CyclotomicNumber::one();
                for (k, &(_, ord)) in gens.iter().enumerate() {
                    v = v.mul(&root_of_unity(ord, (digits[k] * logs[r][k]) as i64));
                }
                v
            })
            .collect();
        let name = if j == 0 {
            "trivial".to_string()
        } else {
            format!("chi_{m}.{j}")
        };
        characters.push(CharacterData::new(&name, group.clone(), values).expect("character"));
    }
    (group, residues, characters)
}

fn prime_power_unit_gens(p: u64, pk: u64) -> Vec<(u64, u64)> {
    if pk <= 2 {
        return vec![];
    }
    if p == 2 {
        if pk == 4 {
            return vec![(3, 2)];
        }
        // (Z/2^a)^* = <-1> x <5>
        return vec![(pk - 1, 2), (5, pk / 4)];
    }
    let phi = pk - pk / p;
    let is_primitive = |g: u64| -> bool {
        let mut seen = 1u64;
        let mut x = g % pk;
        while x != 1 {
            x = x * g % pk;
            seen += 1;
        }
        seen == phi
    };
    let g = (2..pk)
        .filter(|&g| num_integer::gcd(g, pk) == 1)
        .find(|&g| is_primitive(g))
        .expect("primitive root exists mod odd prime powers");
    vec![(g, phi)]
}

/// Kronecker symbol `(d / n)`.
pub fn kronecker_symbol(d: i64, n: u64) -> i64 {
    let mut a = d;
    let mut n = n as i64;
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut result = 1i64;
    if n < 0 {
        n = -n;
    }
    // factor out 2s from n
    let mut n2 = 0;
    while n % 2 == 0 {
        n /= 2;
        n2 += 1;
    }
    if n2 > 0 {
        if a % 2 == 0 {
            return 0;
        }
        let amod8 = a.rem_euclid(8);
        let two_sym = if amod8 == 1 || amod8 == 7 { 1 } else { -1 };
        if n2 % 2 == 1 {
            result *= two_sym;
        }
    }
    a = a.rem_euclid(n);
    while a != 0 {
        let mut a2 = 0;
        while a % 2 == 0 {
            a /= 2;
            a2 += 1;
        }
        if a2 % 2 == 1 {
            let nmod8 = n.rem_euclid(8);
            if nmod8 == 3 || nmod8 == 5 {
                result = -result;
            }
        }
        // quadratic reciprocity
        if a.rem_euclid(4) == 3 && n.rem_euclid(4) == 3 {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        a = a.rem_euclid(n);
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// The quadratic character attached to a fundamental discriminant `d`, as a
/// Dirichlet character mod `|d|`.
pub fn kronecker_character(d: i64) -> Result<CharacterData> {
    let m = d.unsigned_abs();
    let (group, residues) = FiniteGroup::unit_group(m);
    let values: Vec<CyclotomicNumber> = group
        .classes()
        .iter()
        .map(|class| {
            let r = residues[class[0] as usize];
            CyclotomicNumber::from_i64(kronecker_symbol(d, r))
        })
        .collect();
    CharacterData::new(&format!("chi:{d}"), group, values)
}

/// The fundamental discriminant of `Q(sqrt(d))` for squarefree-able `d`.
pub fn fundamental_discriminant(d: i64) -> Result<i64> {
    if d == 0 || d == 1 {
        return Err(ArsfError::InvalidInput("d must define a quadratic field".into()));
    }
    // strip square factors
    let mut core = d;
    let mut f = 2i64;
    while f * f <= core.abs() {
        while core % (f * f) == 0 {
            core /= f * f;
        }
        f += 1;
    }
    Ok(if core.rem_euclid(4) == 1 { core } else { 4 * core })
}

/// The three irreducible characters of the symmetric group on 3 letters,
/// derived from the group structure: the 1-dimensional ones come from the
/// abelianization, the last from the regular character by orthogonality.
pub fn s3_characters(group: &Arc<FiniteGroup>) -> Result<Vec<CharacterData>> {
    let commutator = group.commutator_subgroup();
    let quotient_order = group.order() / commutator.len();
    if quotient_order != 2 {
        return Err(ArsfError::InvalidInput(
            "expected an index-2 commutator subgroup".into(),
        ));
    }
    let trivial = CharacterData::trivial(group.clone());
    let sign_values: Vec<CyclotomicNumber> = group
        .classes()
        .iter()
        .map(|class| {
            if commutator.contains(&class[0]) {
                CyclotomicNumber::one()
            } else {
                CyclotomicNumber::from_i64(-1)
            }
        })
        .collect();
    let sign = CharacterData::new("sign", group.clone(), sign_values)?;
    // remainder of the regular character
    let reg = CharacterData::regular(group.clone());
    let mut rest: Vec<CyclotomicNumber> = reg
        .class_values()
        .iter()
        .zip(trivial.class_values())
        .zip(sign.class_values())
        .map(|((r, t), s)| r.sub(t).sub(s))
        .collect();
    let rest_char = CharacterData {
        name: "rest".into(),
        group: group.clone(),
        class_values: rest.clone(),
    };
    let norm = rest_char.inner(&rest_char)?;
    let d2 = norm.as_rational().ok_or_else(|| {
        ArsfError::InvalidInput("regular remainder has non-rational norm".into())
    })?;
    // <rest, rest> = d^2 exactly when rest = d * (one irreducible)
    let d = int_sqrt(&d2)?;
    for v in &mut rest {
        *v = v.scale(&(rat(1) / rat(d)));
    }
    let std = CharacterData::new("std", group.clone(), rest)?;
    if std.inner(&std)?.as_rational() != Some(rat(1)) {
        return Err(ArsfError::InvalidInput(
            "two-dimensional character is not irreducible".into(),
        ));
    }
    Ok(vec![trivial, sign, std])
}

fn int_sqrt(r: &Rational) -> Result<i64> {
    if r.denom() != &BigInt::from(1) || r.is_negative() {
        return Err(ArsfError::InvalidInput(format!("not a square integer: {r}")));
    }
    let n = i64::try_from(r.numer().clone())
        .map_err(|_| ArsfError::InvalidInput("norm too large".into()))?;
    let s = (n as f64).sqrt().round() as i64;
    if s * s != n {
        return Err(ArsfError::InvalidInput(format!("{n} is not a perfect square")));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_i64(n)
    }

    #[test]
    fn dirichlet_mod_4() {
        let (_, residues, chars) = dirichlet_characters(4);
        assert_eq!(residues, vec![1, 3]);
        assert_eq!(chars.len(), 2);
        assert_eq!(chars[0].value(1), cyc(1));
        assert_eq!(chars[1].value(1), cyc(-1)); // chi(-1) = chi(3) = -1
    }

    #[test]
    fn dirichlet_mod_5_has_order_four_character() {
        let (_, residues, chars) = dirichlet_characters(5);
        assert_eq!(chars.len(), 4);
        // some character takes the value i (primitive 4th root)
        let i = root_of_unity(4, 1);
        let found = chars.iter().any(|c| {
            residues
                .iter()
                .enumerate()
                .any(|(k, _)| c.value(k as u16) == i)
        });
        assert!(found);
        // orthogonality of the full table
        for a in &chars {
            for b in &chars {
                let ip = a.inner(b).unwrap();
                if a.name == b.name {
                    assert!(ip.is_one());
                } else {
                    assert!(ip.is_zero());
                }
            }
        }
    }

    #[test]
    fn kronecker_matches_legendre() {
        // chi_{-4}(p) = +1 iff p = 1 mod 4
        assert_eq!(kronecker_symbol(-4, 5), 1);
        assert_eq!(kronecker_symbol(-4, 3), -1);
        assert_eq!(kronecker_symbol(-4, 13), 1);
        assert_eq!(kronecker_symbol(-4, 2), 0);
        // chi_{-3}
        assert_eq!(kronecker_symbol(-3, 7), 1);
        assert_eq!(kronecker_symbol(-3, 5), -1);
        assert_eq!(fundamental_discriminant(-1).unwrap(), -4);
        assert_eq!(fundamental_discriminant(-3).unwrap(), -3);
        assert_eq!(fundamental_discriminant(8).unwrap(), 8);
    }

    #[test]
    fn s3_character_table() {
        let (g, _) = FiniteGroup::symmetric_3();
        let chars = s3_characters(&g).unwrap();
        assert_eq!(chars.len(), 3);
        let std = &chars[2];
        assert_eq!(std.dim(), 2);
        // values on [e, transpositions, 3-cycles]
        assert_eq!(std.class_values()[0], cyc(2));
        assert_eq!(std.class_values()[1], cyc(0));
        assert_eq!(std.class_values()[2], cyc(-1));
        // column orthogonality: sum of dim * value = 0 off identity
        for cls in 1..3 {
            let mut s = CyclotomicNumber::zero();
            for c in &chars {
                s = s.add(&c.class_values()[cls].scale(&rat(c.dim() as i64)));
            }
            assert!(s.is_zero());
        }
    }

    #[test]
    fn induce_trivial_from_trivial_subgroup_is_regular() {
        let (c2, _) = FiniteGroup::unit_group(4);
        let triv_sub = CharacterData::trivial(FiniteGroup::trivial());
        let ind = triv_sub.induce(c2.clone(), &[0]).unwrap();
        assert_eq!(ind.class_values(), CharacterData::regular(c2).class_values());
    }

    #[test]
    fn inflate_sign_through_s3_quotient() {
        // S3 -> S3/A3 = C2; inflating the nontrivial character of C2 gives
        // the sign character
        let (s3, _) = FiniteGroup::symmetric_3();
        let a3 = s3.commutator_subgroup();
        let (_, _, c2_chars) = dirichlet_characters(4); // a convenient C2
        let c2 = c2_chars[1].group().clone();
        let projection: Vec<u16> = (0..6u16)
            .map(|g| if a3.contains(&g) { 0 } else { 1 })
            .collect();
        let infl = c2_chars[1].inflate(s3.clone(), &projection).unwrap();
        let sign = &s3_characters(&s3).unwrap()[1];
        assert_eq!(infl.class_values(), sign.class_values());
        let _ = c2;
    }

    #[test]
    fn sum_of_irreducibles_with_dims_is_regular() {
        let (s3, _) = FiniteGroup::symmetric_3();
        let chars = s3_characters(&s3).unwrap();
        let mut acc: Option<CharacterData> = None;
        for c in &chars {
            for _ in 0..c.dim() {
                acc = Some(match acc {
                    None => c.clone(),
                    Some(a) => a.direct_sum(c).unwrap(),
                });
            }
        }
        assert_eq!(
            acc.unwrap().class_values(),
            CharacterData::regular(s3).class_values()
        );
    }
}
