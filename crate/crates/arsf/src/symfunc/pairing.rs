use super::expansion::{Basis, SymExpansion};
use super::transition::z_lambda;
use crate::exact::{RatFun, UniPoly};
use crate::partitions::Partition;
use crate::Result;

/// `z_lambda(t) = z_lambda * prod_j (1 - t^(lambda_j))^(-1)`, the power-sum
/// norm for the `t`-deformed Hall pairing.
pub fn z_lambda_t(lambda: &Partition) -> RatFun {
    let mut den = UniPoly::one();
    for &r in lambda.parts() {
        den = den.mul(&UniPoly::one().sub(&UniPoly::t_power(r as usize)));
    }
    RatFun::new(UniPoly::constant(z_lambda(lambda)), den).expect("denominator nonzero")
}

/// The `t`-deformed Hall pairing, bilinear with
/// `<p_lambda, p_mu>_t = delta z_lambda(t)`.
pub fn hall_pairing_t(f: &SymExpansion<RatFun>, g: &SymExpansion<RatFun>) -> Result<RatFun> {
    pairing_impl(f, g, z_lambda_t)
}

/// The classical Hall pairing (`t = 0`): `<p_lambda, p_mu> = delta z_lambda`.
pub fn hall_pairing(f: &SymExpansion<RatFun>, g: &SymExpansion<RatFun>) -> Result<RatFun> {
    pairing_impl(f, g, |lam| RatFun::from_rational(z_lambda(lam)))
}

fn pairing_impl(
    f: &SymExpansion<RatFun>,
    g: &SymExpansion<RatFun>,
    norm: impl Fn(&Partition) -> RatFun,
) -> Result<RatFun> {
    let a = f.convert(&Basis::PowerSum)?;
    let b = g.convert(&Basis::PowerSum)?;
    let mut out = RatFun::zero();
    for (lam, ca) in a.terms() {
        let cb = b.coeff(lam);
        if cb.is_zero() {
            continue;
        }
        out = out.add(&ca.mul(&cb).mul(&norm(lam)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::expansion::TSpec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn single(basis: Basis, lam: &[u32]) -> SymExpansion<RatFun> {
        SymExpansion::from_terms(basis, [(p(lam), RatFun::one())])
    }

    #[test]
    fn p1_norm() {
        // <p_1, p_1>_t = 1/(1-t)
        let f = single(Basis::PowerSum, &[1]);
        let expect = RatFun::new(UniPoly::one(), UniPoly::from_i64(&[1, -1])).unwrap();
        assert_eq!(hall_pairing_t(&f, &f).unwrap(), expect);
    }

    #[test]
    fn schur_orthonormal_at_t_zero() {
        let s2 = single(Basis::Schur, &[2]);
        let s11 = single(Basis::Schur, &[1, 1]);
        assert_eq!(hall_pairing(&s2, &s11).unwrap(), RatFun::zero());
        assert_eq!(hall_pairing(&s2, &s2).unwrap(), RatFun::one());
    }

    #[test]
    fn hl_p_q_dual_under_t_pairing() {
        for d in 0..=4u32 {
            for lam in crate::partitions::enumerate_partitions(d) {
                for mu in crate::partitions::enumerate_partitions(d) {
                    let f = single(Basis::HlP(TSpec::Symbolic), lam.parts());
                    let g = single(Basis::HlQ(TSpec::Symbolic), mu.parts());
                    let pr = hall_pairing_t(&f, &g).unwrap();
                    if lam == mu {
                        assert!(pr.is_one(), "<P_{lam}, Q_{mu}>_t = {pr}");
                    } else {
                        assert!(pr.is_zero(), "<P_{lam}, Q_{mu}>_t = {pr}");
                    }
                }
            }
        }
    }
}
