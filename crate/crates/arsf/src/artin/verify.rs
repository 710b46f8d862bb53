use super::series::{
    artin_series, dedekind_series, norm_map, relative_dedekind_series, ArithSeries, GlobalBasis,
};
use crate::galois::{
    dirichlet_characters, s3_characters, CharacterData, CubicOverQuadratic,
    CubicOverQuadraticExtension, CubicOverRationals, CubicS3, CubicSplittingField,
    CyclotomicExtension, CyclotomicField, CyclotomicGalois, FiniteGroup, GaloisProvider,
};
use crate::exact::CyclotomicNumber;
use crate::Result;

/// Result of one identity check.
#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub identity: String,
    pub pass: bool,
    pub details: String,
}

impl VerifyOutcome {
    fn pass(identity: impl Into<String>, checked: usize) -> Self {
        VerifyOutcome {
            identity: identity.into(),
            pass: true,
            details: format!("{checked} coefficients agree"),
        }
    }
}

/// Exact coefficient-by-coefficient comparison over every multipartition of
/// norm within the bound.
pub fn compare_series(identity: &str, a: &ArithSeries, b: &ArithSeries) -> VerifyOutcome {
    if a.primes != b.primes || a.bound != b.bound {
        return VerifyOutcome {
            identity: identity.into(),
            pass: false,
            details: "prime lists or bounds differ".into(),
        };
    }
    let index = a.index_set();
    for mp in &index {
        let ca = a.coefficient(mp);
        let cb = b.coefficient(mp);
        if ca != cb {
            return VerifyOutcome {
                identity: identity.into(),
                pass: false,
                details: format!("first mismatch at {mp}: {ca} vs {cb}"),
            };
        }
    }
    VerifyOutcome::pass(identity, index.len())
}

fn bases_to_check() -> [GlobalBasis; 2] {
    [GlobalBasis::Monomial, GlobalBasis::HlNorm]
}

/// The nontrivial character of `Gal(Q(zeta_12)/Q(i)) = {1, 5}` and its
/// ambient data.
fn tower_subgroup_character() -> (CyclotomicGalois, CharacterData, Vec<u16>) {
    let rel = CyclotomicGalois::new(12, 4).expect("4 | 12");
    let group = rel.group();
    let chi0 = CharacterData::new(
        "chi0",
        group,
        vec![CyclotomicNumber::one(), CyclotomicNumber::from_i64(-1)],
    )
    .expect("character of C2");
    // embedding of {1,5} into (Z/12)^* = [1,5,7,11]
    let (_, residues12) = FiniteGroup::unit_group(12);
    let embedding: Vec<u16> = rel
        .residues()
        .iter()
        .map(|r| residues12.iter().position(|x| x == r).unwrap() as u16)
        .collect();
    (rel, chi0, embedding)
}

/// Direct sum: the product of two Artin series is the series of the direct
/// sum of the characters.
pub fn verify_direct_sum(bound: u64) -> Result<Vec<VerifyOutcome>> {
    let mut out = Vec::new();
    // two characters mod 12
    let g12 = CyclotomicGalois::over_rationals(12);
    let (_, _, chars12) = dirichlet_characters(12);
    let (a, b) = (&chars12[1], &chars12[2]);
    for basis in bases_to_check() {
        let lhs = artin_series(a, &g12, bound, basis)?
            .multiply(&artin_series(b, &g12, bound, basis)?)?;
        let rhs = artin_series(&a.direct_sum(b)?, &g12, bound, basis)?;
        out.push(compare_series(
            &format!("direct_sum[{}+{} mod 12, {}]", a.name, b.name, basis.short_name()),
            &lhs,
            &rhs,
        ));
    }
    // standard and sign of the cubic fixture
    let cubic = CubicS3::builtin()?;
    let s3 = s3_characters(&cubic.group())?;
    for basis in bases_to_check() {
        let lhs = artin_series(&s3[2], &cubic, bound, basis)?
            .multiply(&artin_series(&s3[1], &cubic, bound, basis)?)?;
        let rhs = artin_series(&s3[2].direct_sum(&s3[1])?, &cubic, bound, basis)?;
        out.push(compare_series(
            &format!("direct_sum[std+sign of S3, {}]", basis.short_name()),
            &lhs,
            &rhs,
        ));
    }
    Ok(out)
}

/// Inflation: a character of a quotient Galois group gives the same series
/// through the bigger extension.
pub fn verify_inflation(bound: u64) -> Result<Vec<VerifyOutcome>> {
    let mut out = Vec::new();
    // chi_{-4} of Gal(Q(i)/Q), inflated to Gal(Q(zeta_12)/Q)
    let g4 = CyclotomicGalois::over_rationals(4);
    let g12 = CyclotomicGalois::over_rationals(12);
    let (_, residues4, chars4) = dirichlet_characters(4);
    let (group12, residues12) = FiniteGroup::unit_group(12);
    let projection: Vec<u16> = residues12
        .iter()
        .map(|r| residues4.iter().position(|x| x == &(r % 4)).unwrap() as u16)
        .collect();
    let inflated = chars4[1].inflate(group12, &projection)?;
    for basis in bases_to_check() {
        let lhs = artin_series(&chars4[1], &g4, bound, basis)?;
        let rhs = artin_series(&inflated, &g12, bound, basis)?;
        out.push(compare_series(
            &format!("inflation[chi-4 to mod 12, {}]", basis.short_name()),
            &lhs,
            &rhs,
        ));
    }
    // quadratic character of Gal(Q(zeta_3)/Q), inflated to the S3 fixture as
    // its sign character
    let cubic = CubicS3::builtin()?;
    let s3_group = cubic.group();
    let s3 = s3_characters(&s3_group)?;
    let g3 = CyclotomicGalois::over_rationals(3);
    let (_, _, chars3) = dirichlet_characters(3);
    let a3 = s3_group.commutator_subgroup();
    let projection: Vec<u16> = (0..6u16)
        .map(|g| if a3.contains(&g) { 0 } else { 1 })
        .collect();
    let inflated_sign = chars3[1].inflate(s3_group.clone(), &projection)?;
    for basis in bases_to_check() {
        let via_quadratic = artin_series(&chars3[1], &g3, bound, basis)?;
        let via_s3_sign = artin_series(&s3[1], &cubic, bound, basis)?;
        let via_inflated = artin_series(&inflated_sign, &cubic, bound, basis)?;
        out.push(compare_series(
            &format!("inflation[chi-3 = sign of S3, {}]", basis.short_name()),
            &via_quadratic,
            &via_s3_sign,
        ));
        out.push(compare_series(
            &format!("inflation[inflated quotient character, {}]", basis.short_name()),
            &via_s3_sign,
            &via_inflated,
        ));
    }
    Ok(out)
}

/// Induction: the norm map of a subgroup character's series equals the
/// series of the induced character.
pub fn verify_induction(bound: u64) -> Result<Vec<VerifyOutcome>> {
    let mut out = Vec::new();
    // tower Q(zeta_12)/Q(i)/Q
    let (rel, chi0, embedding) = tower_subgroup_character();
    let (group12, _) = FiniteGroup::unit_group(12);
    let induced = chi0.induce(group12, &embedding)?;
    let g12 = CyclotomicGalois::over_rationals(12);
    let ext = CyclotomicExtension { m_top: 4, m_base: 1 };
    for basis in bases_to_check() {
        let upstairs = artin_series(&chi0, &rel, bound, basis)?;
        let lhs = norm_map(&upstairs, &ext, "Q")?;
        let rhs = artin_series(&induced, &g12, bound, basis)?;
        out.push(compare_series(
            &format!("induction[tower 12/4/1, {}]", basis.short_name()),
            &lhs,
            &rhs,
        ));
    }
    // cubic fixture: inducing a cubic character of the alternating subgroup
    // gives the two-dimensional character
    let cubic = CubicS3::builtin()?;
    let relq = CubicOverQuadratic::new(&cubic)?;
    let omega = &relq.characters()[1];
    let induced_std = omega.induce(cubic.group(), &relq.embedding())?;
    let s3 = s3_characters(&cubic.group())?;
    // the induced character IS the standard character
    let char_match = induced_std.class_values() == s3[2].class_values();
    out.push(VerifyOutcome {
        identity: "induction[character identity Ind(omega) = std]".into(),
        pass: char_match,
        details: if char_match {
            "class values agree".into()
        } else {
            "class values differ".into()
        },
    });
    let ext3 = CyclotomicExtension { m_top: 3, m_base: 1 };
    for basis in bases_to_check() {
        let upstairs = artin_series(omega, &relq, bound, basis)?;
        let lhs = norm_map(&upstairs, &ext3, "Q")?;
        let rhs = artin_series(&s3[2], &cubic, bound, basis)?;
        out.push(compare_series(
            &format!("induction[S3 std via A3, {}]", basis.short_name()),
            &lhs,
            &rhs,
        ));
    }
    Ok(out)
}

/// Regular representation: the series of the regular character is the
/// relative Dedekind series.
pub fn verify_regular(bound: u64) -> Result<Vec<VerifyOutcome>> {
    let mut out = Vec::new();
    let g4 = CyclotomicGalois::over_rationals(4);
    let (group4, _) = FiniteGroup::unit_group(4);
    let ext4 = CyclotomicExtension { m_top: 4, m_base: 1 };
    for basis in bases_to_check() {
        let lhs = artin_series(&CharacterData::regular(group4.clone()), &g4, bound, basis)?;
        let rhs = relative_dedekind_series(&ext4, "Q", bound, basis)?;
        out.push(compare_series(
            &format!("regular[Q(i)/Q, {}]", basis.short_name()),
            &lhs,
            &rhs,
        ));
    }
    let cubic = CubicS3::builtin()?;
    let ext_e = CubicOverRationals { provider: &cubic };
    for basis in bases_to_check() {
        let lhs = artin_series(&CharacterData::regular(cubic.group()), &cubic, bound, basis)?;
        let rhs = relative_dedekind_series(&ext_e, "Q", bound, basis)?;
        out.push(compare_series(
            &format!("regular[S3 field/Q, {}]", basis.short_name()),
            &lhs,
            &rhs,
        ));
    }
    Ok(out)
}

/// Factorization of the relative Dedekind series into Artin series of the
/// irreducible characters with multiplicity their dimension.
pub fn verify_factorization(bound: u64) -> Result<Vec<VerifyOutcome>> {
    let mut out = Vec::new();
    let g4 = CyclotomicGalois::over_rationals(4);
    let (_, _, chars4) = dirichlet_characters(4);
    let ext4 = CyclotomicExtension { m_top: 4, m_base: 1 };
    let field_q = CyclotomicField::rational();
    for basis in bases_to_check() {
        let lhs = relative_dedekind_series(&ext4, "Q", bound, basis)?;
        let rhs = dedekind_series(&field_q, bound, basis)?
            .multiply(&artin_series(&chars4[1], &g4, bound, basis)?)?;
        out.push(compare_series(
            &format!("factorization[Q(i)/Q, {}]", basis.short_name()),
            &lhs,
            &rhs,
        ));
    }
    let cubic = CubicS3::builtin()?;
    let s3 = s3_characters(&cubic.group())?;
    let ext_e = CubicOverRationals { provider: &cubic };
    for basis in bases_to_check() {
        let lhs = relative_dedekind_series(&ext_e, "Q", bound, basis)?;
        let std_series = artin_series(&s3[2], &cubic, bound, basis)?;
        let rhs = dedekind_series(&field_q, bound, basis)?
            .multiply(&artin_series(&s3[1], &cubic, bound, basis)?)?
            .multiply(&std_series)?
            .multiply(&std_series)?;
        out.push(compare_series(
            &format!("factorization[S3 field/Q, {}]", basis.short_name()),
            &lhs,
            &rhs,
        ));
    }
    Ok(out)
}

/// Norm-map identities: upstairs Dedekind series push down to relative
/// Dedekind series, and the norm map composes along towers.
pub fn verify_norm_tower(bound: u64) -> Result<Vec<VerifyOutcome>> {
    let mut out = Vec::new();
    // N(zeta_L) = zeta_(L/K) for Q(zeta_12)/Q(i)
    let ext_12_4 = CyclotomicExtension { m_top: 12, m_base: 4 };
    let z12 = dedekind_series(&CyclotomicField { m: 12 }, bound, GlobalBasis::Monomial)?;
    let pushed = norm_map(&z12, &ext_12_4, "Q(i)")?;
    let rel = relative_dedekind_series(&ext_12_4, "Q(i)", bound, GlobalBasis::Monomial)?;
    out.push(compare_series("norm[N(zeta_12) = zeta_{12/4}]", &pushed, &rel));
    // tower composition on zeta of Q(zeta_12)
    let ext_4_1 = CyclotomicExtension { m_top: 4, m_base: 1 };
    let ext_12_1 = CyclotomicExtension { m_top: 12, m_base: 1 };
    let two_step = norm_map(&pushed, &ext_4_1, "Q")?;
    let one_step = norm_map(&z12, &ext_12_1, "Q")?;
    out.push(compare_series("norm[tower 12/4/1 composition]", &two_step, &one_step));
    // S3 tower: E / Q(zeta_3) / Q on zeta_E
    let cubic = CubicS3::builtin()?;
    let relq = CubicOverQuadratic::new(&cubic)?;
    let e_field = CubicSplittingField { provider: &cubic };
    let z_e = dedekind_series(&e_field, bound, GlobalBasis::Monomial)?;
    let ext_e_q3 = CubicOverQuadraticExtension { relative: &relq };
    let ext_e_q = CubicOverRationals { provider: &cubic };
    let ext_q3_q = CyclotomicExtension { m_top: 3, m_base: 1 };
    let down_one = norm_map(&z_e, &ext_e_q3, "Q(z3)")?;
    let rel_e_q3 = relative_dedekind_series(&ext_e_q3, "Q(z3)", bound, GlobalBasis::Monomial)?;
    out.push(compare_series("norm[N(zeta_E) = zeta_{E/Q(z3)}]", &down_one, &rel_e_q3));
    let two_step = norm_map(&down_one, &ext_q3_q, "Q")?;
    let one_step = norm_map(&z_e, &ext_e_q, "Q")?;
    out.push(compare_series("norm[tower E/Q(z3)/Q composition]", &two_step, &one_step));
    Ok(out)
}

/// Brauer-style decompositions: induced one-dimensional characters assemble
/// higher-dimensional Artin series.
pub fn verify_brauer(bound: u64) -> Result<Vec<VerifyOutcome>> {
    let mut out = Vec::new();
    // Ind from {1,5} to (Z/12)^* of the nontrivial character decomposes into
    // the two mod-12 characters with value -1 at 5
    let (rel, chi0, _) = tower_subgroup_character();
    let (_, residues12, chars12) = dirichlet_characters(12);
    let five = residues12.iter().position(|&r| r == 5).unwrap() as u16;
    let minus_one = CyclotomicNumber::from_i64(-1);
    let constituents: Vec<&CharacterData> = chars12
        .iter()
        .filter(|c| c.value(five) == minus_one)
        .collect();
    let pass = constituents.len() == 2;
    out.push(VerifyOutcome {
        identity: "brauer[two constituents with chi(5) = -1]".into(),
        pass,
        details: format!("found {}", constituents.len()),
    });
    let g12 = CyclotomicGalois::over_rationals(12);
    let ext = CyclotomicExtension { m_top: 4, m_base: 1 };
    for basis in bases_to_check() {
        let upstairs = artin_series(&chi0, &rel, bound, basis)?;
        let lhs = norm_map(&upstairs, &ext, "Q")?;
        let rhs = artin_series(constituents[0], &g12, bound, basis)?
            .multiply(&artin_series(constituents[1], &g12, bound, basis)?)?;
        out.push(compare_series(
            &format!("brauer[Ind = product of constituents, {}]", basis.short_name()),
            &lhs,
            &rhs,
        ));
    }
    Ok(out)
}

/// The whole identity suite.
pub fn verify_suite_core(bound: u64) -> Result<Vec<VerifyOutcome>> {
    let mut out = Vec::new();
    out.extend(verify_direct_sum(bound)?);
    out.extend(verify_inflation(bound)?);
    out.extend(verify_induction(bound)?);
    out.extend(verify_regular(bound)?);
    out.extend(verify_factorization(bound)?);
    out.extend(verify_norm_tower(bound)?);
    out.extend(verify_brauer(bound)?);
    Ok(out)
}
