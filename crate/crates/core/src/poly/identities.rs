//! Both sides of the refined product identity and of its one-parameter
//! specialisation, each built from an independent enumeration.
//!
//! The refined identity reads
//! `prod_{i<j} (x_i + y_j) = sum_A prod_i x_i^{SE_i} y_i^{SW_i} (x_i + y_i)^{V_i}`
//! and setting `y_i = λ x_i` gives
//! `sum_T λ^{U(T)} prod_i x_i^{ω(i)} = sum_A λ^{SW} (1 + λ)^{V} prod_i x_i^{SE_i + SW_i + V_i}`.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::{Monomial, PolyError, Polynomial};
use crate::asm::VertexStats;
use crate::enumeration::{enumerate_cmt_uncapped, BottomRow};
use crate::tournament::{binomial2, pairs, Tournament};
use crate::triangle::orientations_of;

/// Largest order the identity builders accept.
pub const MAX_POLY_ORDER: usize = 8;

fn check_order(n: usize) -> Result<(), PolyError> {
    match n {
        0 => Err(PolyError::ZeroOrder),
        n if n > MAX_POLY_ORDER => Err(PolyError::OrderTooLarge(n)),
        _ => Ok(()),
    }
}

fn all_cmt_stats(n: usize) -> impl Iterator<Item = VertexStats> {
    enumerate_cmt_uncapped(&BottomRow::standard(n)).map(|c| c.vertex_stats())
}

fn all_tournaments(n: usize) -> impl Iterator<Item = Tournament> {
    (0..1u64 << binomial2(n)).map(move |code| Tournament::from_code(n, code))
}

/// `prod_{i<j} (x_i + y_j)`, expanded.
pub fn lhs_refid(n: usize) -> Result<Polynomial, PolyError> {
    check_order(n)?;
    let mut p = Polynomial::one(n);
    for (i, j) in pairs(n) {
        let mut f = Polynomial::from_monomial(Monomial::x(n, i as usize));
        f.add_term(Monomial::y(n, j as usize), BigInt::one());
        p = p.checked_mul(&f)?;
    }
    Ok(p)
}

/// `sum_T` of tournament weights.
pub fn tournament_weight_sum(n: usize) -> Result<Polynomial, PolyError> {
    check_order(n)?;
    let mut p = Polynomial::zero(n);
    for t in all_tournaments(n) {
        p.add_term(t.weight(), BigInt::one());
    }
    Ok(p)
}

/// `sum_A prod_i x_i^{SE_i} y_i^{SW_i} (x_i + y_i)^{V_i}` over alternating
/// sign matrices of order `n`.
pub fn rhs_refid(n: usize) -> Result<Polynomial, PolyError> {
    check_order(n)?;
    let mut p = Polynomial::zero(n);
    for st in all_cmt_stats(n) {
        let mut base = Monomial::one(n);
        let mut term = Polynomial::one(n);
        for i in 1..=n {
            for _ in 0..st.se[i - 1] {
                base.mul_x(i);
            }
            for _ in 0..st.sw[i - 1] {
                base.mul_y(i);
            }
            if st.v[i - 1] > 0 {
                let mut f = Polynomial::from_monomial(Monomial::x(n, i));
                f.add_term(Monomial::y(n, i), BigInt::one());
                term = term.checked_mul(&f.checked_pow(st.v[i - 1])?)?;
            }
        }
        term = term.checked_mul(&Polynomial::from_monomial(base))?;
        p = p.checked_add(&term)?;
    }
    Ok(p)
}

/// `sum` of weights of all oriented complete monotone triangles of order `n`.
pub fn rhs_via_oriented(n: usize) -> Result<Polynomial, PolyError> {
    check_order(n)?;
    let mut p = Polynomial::zero(n);
    for c in enumerate_cmt_uncapped(&BottomRow::standard(n)) {
        for t in orientations_of(&c) {
            p.add_term(t.weight(), BigInt::one());
        }
    }
    Ok(p)
}

/// `sum_T λ^{U(T)} prod_i x_i^{ω(i)}`, with `U` the number of upsets and
/// `ω` the out-degrees.
pub fn brid_lhs(n: usize) -> Result<Polynomial, PolyError> {
    check_order(n)?;
    let mut p = Polynomial::zero(n);
    for t in all_tournaments(n) {
        let x = t.out_degrees();
        let m = Monomial::from_exponents(x, vec![0; n], t.upsets() as u32)?;
        p.add_term(m, BigInt::one());
    }
    Ok(p)
}

/// `sum_A λ^{SW} (1 + λ)^{V} prod_i x_i^{SE_i + SW_i + V_i}`.
pub fn brid_rhs(n: usize) -> Result<Polynomial, PolyError> {
    check_order(n)?;
    let mut one_plus_lambda = Polynomial::one(n);
    one_plus_lambda.add_term(Monomial::lambda(n), BigInt::one());
    let mut p = Polynomial::zero(n);
    for st in all_cmt_stats(n) {
        let x: Vec<u32> = (0..n).map(|i| st.se[i] + st.sw[i] + st.v[i]).collect();
        let base = Monomial::from_exponents(x, vec![0; n], st.sw_total())?;
        let term = Polynomial::from_monomial(base).checked_mul(&one_plus_lambda.checked_pow(st.v_total())?)?;
        p = p.checked_add(&term)?;
    }
    Ok(p)
}

/// Outcome of comparing independently built sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub n: usize,
    pub equal: bool,
    /// Distinct terms after collection, left then right.
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    /// Number of summands enumerated on each side before collection.
    pub lhs_raw: u64,
    pub rhs_raw: u64,
}

fn asm_count(n: usize) -> u64 {
    enumerate_cmt_uncapped(&BottomRow::standard(n)).count() as u64
}

/// Checks `lhs_refid = rhs_refid = rhs_via_oriented = tournament_weight_sum`.
pub fn refid_check(n: usize) -> Result<VerificationReport, PolyError> {
    let lhs = lhs_refid(n)?;
    let rhs = rhs_refid(n)?;
    let oriented = rhs_via_oriented(n)?;
    let tournaments = tournament_weight_sum(n)?;
    Ok(VerificationReport {
        identity: "refid".into(),
        n,
        equal: lhs == rhs && rhs == oriented && oriented == tournaments,
        lhs_terms: lhs.len(),
        rhs_terms: rhs.len(),
        lhs_raw: 1 << binomial2(n),
        rhs_raw: asm_count(n),
    })
}

/// Checks `brid_lhs = brid_rhs`.
pub fn brid_check(n: usize) -> Result<VerificationReport, PolyError> {
    let lhs = brid_lhs(n)?;
    let rhs = brid_rhs(n)?;
    Ok(VerificationReport {
        identity: "brid".into(),
        n,
        equal: lhs == rhs,
        lhs_terms: lhs.len(),
        rhs_terms: rhs.len(),
        lhs_raw: 1 << binomial2(n),
        rhs_raw: asm_count(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::from_monomial(Monomial::x(n, i))
    }

    fn y(n: usize, j: usize) -> Polynomial {
        Polynomial::from_monomial(Monomial::y(n, j))
    }

    #[test]
    fn order_one_is_one() {
        for p in [
            lhs_refid(1),
            rhs_refid(1),
            rhs_via_oriented(1),
            brid_lhs(1),
            brid_rhs(1),
        ] {
            assert_eq!(p.unwrap(), Polynomial::one(1));
        }
    }

    #[test]
    fn order_two() {
        let expected = x(2, 1).checked_add(&y(2, 2)).unwrap();
        assert_eq!(lhs_refid(2).unwrap(), expected);
        assert_eq!(rhs_refid(2).unwrap(), expected);
        assert_eq!(tournament_weight_sum(2).unwrap(), expected);
        let mut lx2 = Monomial::x(2, 2);
        lx2.mul_lambda(1);
        let b = x(2, 1).checked_add(&Polynomial::from_monomial(lx2)).unwrap();
        assert_eq!(brid_lhs(2).unwrap(), b);
        assert_eq!(brid_rhs(2).unwrap(), b);
    }

    #[test]
    fn order_three_has_eight_terms() {
        let r = refid_check(3).unwrap();
        assert!(r.equal);
        assert_eq!((r.lhs_terms, r.rhs_terms, r.lhs_raw, r.rhs_raw), (8, 8, 8, 7));
    }

    #[test]
    fn lambda_substitution_matches_tournament_side() {
        for n in 1..=4 {
            assert_eq!(lhs_refid(n).unwrap().substitute_lambda().unwrap(), brid_lhs(n).unwrap());
        }
    }

    #[test]
    fn homogeneous_of_degree_binomial() {
        for n in 1..=4 {
            let d = binomial2(n) as u32;
            assert!(lhs_refid(n).unwrap().terms().all(|(m, _)| m.total_degree() == d));
        }
    }

    #[test]
    fn brid_order_four_raw_terms() {
        let r = brid_check(4).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs_raw, 64);
        assert_eq!(r.rhs_raw, 42);
    }

    #[test]
    fn order_caps() {
        assert_eq!(lhs_refid(0), Err(PolyError::ZeroOrder));
        assert_eq!(
            rhs_refid(MAX_POLY_ORDER + 1),
            Err(PolyError::OrderTooLarge(MAX_POLY_ORDER + 1))
        );
    }
}
