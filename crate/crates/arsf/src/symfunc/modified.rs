use super::expansion::{Basis, SymExpansion};
#[cfg(test)]
use super::expansion::TSpec;
use super::transition::hl_symbolic_tables;
use crate::exact::{RatFun, UniPoly};
use crate::partitions::{b_poly, enumerate_partitions, kostka_foulkes_tilde, Partition};
use crate::Result;

/// Modified Hall-Littlewood function in the Schur basis: the coefficient of
/// `s_mu` is the modified Kostka-Foulkes polynomial for shape `mu` and
/// content `lambda`.
pub fn modified_hl_schur(lambda: &Partition) -> SymExpansion<UniPoly> {
    let mut out = SymExpansion::zero(Basis::Schur);
    for mu in enumerate_partitions(lambda.size() as u32) {
        out.add_term(mu.clone(), kostka_foulkes_tilde(&mu, lambda));
    }
    out
}

/// Same function as a symbolic expansion, ready for conversions.
pub fn modified_hl_schur_ratfun(lambda: &Partition) -> SymExpansion<RatFun> {
    modified_hl_schur(lambda).map_coeffs(|c| RatFun::from_poly(c.clone()))
}

/// `P_lambda[X; 1/t]` in the power-sum basis: the symbolic transition row
/// with `t -> 1/t` substituted into every coefficient.
pub fn hl_p_inverted_t(lambda: &Partition) -> Result<SymExpansion<RatFun>> {
    let d = lambda.size() as u32;
    let tables = hl_symbolic_tables(d)?;
    let row = &tables.hlp_to_p[tables.index.pos[lambda]];
    let mut out = SymExpansion::zero(Basis::PowerSum);
    for (j, c) in row.iter().enumerate() {
        out.add_term(tables.index.parts[j].clone(), c.subst_inv_t());
    }
    Ok(out)
}

/// Independent construction of the modified Hall-Littlewood function through
/// its plethystic definition: `t^n(lambda) * Q_lambda[X / (1 - 1/t); 1/t]`,
/// computed in the power-sum basis where the plethysm acts diagonally by
/// `p_r -> p_r / (1 - t^(-r))`.
pub fn modified_hl_plethysm_oracle(lambda: &Partition) -> Result<SymExpansion<RatFun>> {
    let b_inv_t = RatFun::from_poly(b_poly(lambda)).subst_inv_t();
    let q_inv_t = hl_p_inverted_t(lambda)?.scale(&b_inv_t);
    let mut out = SymExpansion::zero(Basis::PowerSum);
    for (mu, c) in q_inv_t.terms() {
        // p_mu[X/(1-t^{-1})] = p_mu[X] * prod_r (1 - t^(-r))^(-1)
        //                    = p_mu[X] * prod_r t^r/(t^r - 1)
        let mut factor = RatFun::one();
        for &r in mu.parts() {
            let tr = UniPoly::t_power(r as usize);
            factor = factor.mul(&RatFun::new(tr.clone(), tr.sub(&UniPoly::one()))?);
        }
        out.add_term(mu.clone(), c.mul(&factor));
    }
    Ok(out.scale(&RatFun::from_poly(UniPoly::t_power(lambda.n_stat() as usize))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn single_box_is_s1() {
        let h = modified_hl_schur(&p(&[1]));
        assert_eq!(h.len(), 1);
        assert_eq!(h.coeff(&p(&[1])), UniPoly::one());
        let o = modified_hl_plethysm_oracle(&p(&[1])).unwrap();
        let direct = modified_hl_schur_ratfun(&p(&[1]))
            .convert(&Basis::PowerSum)
            .unwrap();
        assert_eq!(o, direct);
    }

    #[test]
    fn column_of_two() {
        // H~_(1,1) = s_2 + t s_11
        let h = modified_hl_schur(&p(&[1, 1]));
        assert_eq!(h.coeff(&p(&[2])), UniPoly::one());
        assert_eq!(h.coeff(&p(&[1, 1])), UniPoly::t_power(1));
    }

    #[test]
    fn oracle_agreement_small() {
        for d in 0..=4u32 {
            for lam in enumerate_partitions(d) {
                let a = modified_hl_schur_ratfun(&lam)
                    .convert(&Basis::PowerSum)
                    .unwrap();
                let b = modified_hl_plethysm_oracle(&lam).unwrap();
                assert_eq!(a, b, "lambda = {lam}");
            }
        }
    }

    #[test]
    fn hlmod_basis_tag_matches_schur_route() {
        // the HlMod symbolic table must produce the same p-expansion
        let lam = p(&[2, 1]);
        let via_table = SymExpansion::<RatFun>::from_terms(
            Basis::HlMod(TSpec::Symbolic),
            [(lam.clone(), RatFun::one())],
        )
        .convert(&Basis::PowerSum)
        .unwrap();
        let via_schur = modified_hl_schur_ratfun(&lam)
            .convert(&Basis::PowerSum)
            .unwrap();
        assert_eq!(via_table, via_schur);
    }
}
