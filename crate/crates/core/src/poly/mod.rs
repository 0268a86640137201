//! Sparse multivariate polynomials over `x_1..x_n`, `y_1..y_n` and `λ` with
//! arbitrary-precision integer coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic on `(x exponents, y exponents, λ exponent)`. Zero
//! coefficients are never stored, so two polynomials are equal exactly when
//! their term maps are equal.

mod identities;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use identities::{
    brid_check, brid_lhs, brid_rhs, lhs_refid, refid_check, rhs_refid, rhs_via_oriented, tournament_weight_sum,
    VerificationReport, MAX_POLY_ORDER,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials over {left} and {right} variables cannot be combined")]
    OrderMismatch { left: usize, right: usize },
    #[error("order {0} exceeds the supported maximum of {max}", max = MAX_POLY_ORDER)]
    OrderTooLarge(usize),
    #[error("order must be positive")]
    ZeroOrder,
    #[error("substitution requires a polynomial without λ")]
    LambdaPresent,
    #[error("malformed polynomial: {0}")]
    Malformed(String),
}

/// A monomial `Π x_i^{x[i]} y_i^{y[i]} λ^{lam}` (indices 0-based internally).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    x: Vec<u32>,
    y: Vec<u32>,
    lam: u32,
}

impl Monomial {
    /// The constant monomial `1` over `nvars` variables of each kind.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            x: vec![0; nvars],
            y: vec![0; nvars],
            lam: 0,
        }
    }

    pub fn from_exponents(x: Vec<u32>, y: Vec<u32>, lam: u32) -> Result<Self, PolyError> {
        if x.len() != y.len() {
            return Err(PolyError::OrderMismatch {
                left: x.len(),
                right: y.len(),
            });
        }
        Ok(Monomial { x, y, lam })
    }

    /// `x_i` with 1-based `i`.
    pub fn x(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.x[i - 1] = 1;
        m
    }

    /// `y_j` with 1-based `j`.
    pub fn y(nvars: usize, j: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.y[j - 1] = 1;
        m
    }

    pub fn lambda(nvars: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.lam = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.x.len()
    }

    pub fn x_exp(&self) -> &[u32] {
        &self.x
    }

    pub fn y_exp(&self) -> &[u32] {
        &self.y
    }

    pub fn lam_exp(&self) -> u32 {
        self.lam
    }

    pub fn total_degree(&self) -> u32 {
        self.x.iter().sum::<u32>() + self.y.iter().sum::<u32>() + self.lam
    }

    pub fn is_one(&self) -> bool {
        self.total_degree() == 0
    }

    /// Multiplies in `x_i` (1-based).
    pub fn mul_x(&mut self, i: usize) {
        self.x[i - 1] += 1;
    }

    /// Multiplies in `y_j` (1-based).
    pub fn mul_y(&mut self, j: usize) {
        self.y[j - 1] += 1;
    }

    pub fn mul_lambda(&mut self, e: u32) {
        self.lam += e;
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        if self.nvars() != other.nvars() {
            return Err(PolyError::OrderMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            y: self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect(),
            lam: self.lam + other.lam,
        }
    }

    /// `y_i ↦ λ x_i`.
    pub fn substitute_lambda(&self) -> Monomial {
        let moved: u32 = self.y.iter().sum();
        Monomial {
            x: self.x.iter().zip(&self.y).map(|(a, b)| a + b).collect(),
            y: vec![0; self.y.len()],
            lam: self.lam + moved,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.y.cmp(&other.y))
            .then_with(|| self.lam.cmp(&other.lam))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut factor = |f: &mut fmt::Formatter<'_>, name: String, e: u32| -> fmt::Result {
            if e == 0 {
                return Ok(());
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                f.write_str(&name)
            } else {
                write!(f, "{name}^{e}")
            }
        };
        for (i, &e) in self.x.iter().enumerate() {
            factor(f, format!("x{}", i + 1), e)?;
        }
        for (i, &e) in self.y.iter().enumerate() {
            factor(f, format!("y{}", i + 1), e)?;
        }
        factor(f, "lam".to_string(), self.lam)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::from_monomial(Monomial::one(nvars))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Polynomial::from_term(m, BigInt::one())
    }

    pub fn from_term(m: Monomial, coef: BigInt) -> Self {
        let mut p = Polynomial::zero(m.nvars());
        p.add_term(m, coef);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in canonical order: highest graded-lex monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Adds `coef * m` in place.
    ///
    /// Panics if `m` has a different number of variables.
    pub fn add_term(&mut self, m: Monomial, coef: BigInt) {
        assert_eq!(m.nvars(), self.nvars, "monomial arity mismatch");
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_order(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::OrderMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_order(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul_unchecked(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, e: u32) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..e {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// Substitutes `y_i = λ x_i` for every `i`.
    pub fn substitute_lambda(&self) -> Result<Polynomial, PolyError> {
        if self.terms.keys().any(|m| m.lam != 0) {
            return Err(PolyError::LambdaPresent);
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.substitute_lambda(), c.clone());
        }
        Ok(out)
    }

    /// Sum of coefficients; the number of objects when every term counts one object.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    x: Vec<u32>,
    y: Vec<u32>,
    lam: u32,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolynomialJson {
            n: self.nvars,
            terms: self
                .terms()
                .map(|(m, c)| TermJson {
                    x: m.x.clone(),
                    y: m.y.clone(),
                    lam: m.lam,
                    coef: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(deserializer)?;
        let mut p = Polynomial::zero(raw.n);
        for t in raw.terms {
            if t.x.len() != raw.n || t.y.len() != raw.n {
                return Err(serde::de::Error::custom(PolyError::Malformed(format!(
                    "term exponent vectors must have length {}",
                    raw.n
                ))));
            }
            let coef: BigInt = t
                .coef
                .parse()
                .map_err(|_| serde::de::Error::custom(PolyError::Malformed(format!("bad coefficient {:?}", t.coef))))?;
            p.add_term(
                Monomial {
                    x: t.x,
                    y: t.y,
                    lam: t.lam,
                },
                coef,
            );
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lin(n: usize, terms: &[Monomial]) -> Polynomial {
        let mut p = Polynomial::zero(n);
        for m in terms {
            p.add_term(m.clone(), BigInt::one());
        }
        p
    }

    #[test]
    fn unit_law() {
        let p = lin(2, &[Monomial::x(2, 1), Monomial::y(2, 2)]);
        assert_eq!(p.checked_mul(&Polynomial::one(2)).unwrap(), p);
    }

    #[test]
    fn binomial_square() {
        let p = lin(2, &[Monomial::x(2, 1), Monomial::y(2, 2)]);
        let sq = p.checked_mul(&p).unwrap();
        assert_eq!(sq.len(), 3);
        let mut x1sq = Monomial::one(2);
        x1sq.mul_x(1);
        x1sq.mul_x(1);
        let mut cross = Monomial::x(2, 1);
        cross.mul_y(2);
        let mut y2sq = Monomial::one(2);
        y2sq.mul_y(2);
        y2sq.mul_y(2);
        assert_eq!(sq.coefficient(&x1sq), BigInt::from(1));
        assert_eq!(sq.coefficient(&cross), BigInt::from(2));
        assert_eq!(sq.coefficient(&y2sq), BigInt::from(1));
    }

    #[test]
    fn three_pair_product_has_eight_terms() {
        // direct expansion: pick x_i or y_j from each of (1,2),(1,3),(2,3)
        let pairs = [(1, 2), (1, 3), (2, 3)];
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0..8u32 {
            let mut m = Monomial::one(3);
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 0 {
                    m.mul_x(i);
                } else {
                    m.mul_y(j);
                }
            }
            seen.insert(m);
        }
        let mut prod = Polynomial::one(3);
        for &(i, j) in &pairs {
            prod = prod
                .checked_mul(&lin(3, &[Monomial::x(3, i), Monomial::y(3, j)]))
                .unwrap();
        }
        assert_eq!(seen.len(), 8);
        assert_eq!(prod.len(), 8);
        for m in &seen {
            assert_eq!(prod.coefficient(m), BigInt::one());
        }
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let a = Polynomial::one(2);
        let b = Polynomial::one(3);
        assert_eq!(a.checked_add(&b), Err(PolyError::OrderMismatch { left: 2, right: 3 }));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn substitution_examples() {
        let y2 = Polynomial::from_monomial(Monomial::y(3, 2));
        let mut lx2 = Monomial::x(3, 2);
        lx2.mul_lambda(1);
        assert_eq!(y2.substitute_lambda().unwrap(), Polynomial::from_monomial(lx2));

        let mut m = Monomial::x(3, 1);
        m.mul_y(3);
        m.mul_y(3);
        let got = Polynomial::from_monomial(m).substitute_lambda().unwrap();
        let mut want = Monomial::x(3, 1);
        want.mul_x(3);
        want.mul_x(3);
        want.mul_lambda(2);
        assert_eq!(got, Polynomial::from_monomial(want));

        let with_lam = Polynomial::from_monomial(Monomial::lambda(2));
        assert_eq!(with_lam.substitute_lambda(), Err(PolyError::LambdaPresent));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = Polynomial::from_monomial(Monomial::x(2, 1));
        assert!(p.checked_sub(&p).unwrap().is_zero());
    }

    #[test]
    fn json_roundtrip_and_order() {
        let p = lin(2, &[Monomial::one(2), Monomial::x(2, 1), Monomial::y(2, 2)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"terms":[{"x":[1,0],"y":[0,0],"lam":0,"coef":"1"},{"x":[0,0],"y":[0,1],"lam":0,"coef":"1"},{"x":[0,0],"y":[0,0],"lam":0,"coef":"1"}]}"#
        );
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    fn arb_poly(n: usize, allow_lam: bool) -> impl Strategy<Value = Polynomial> {
        let lam_max = if allow_lam { 2u32 } else { 0 };
        prop::collection::vec(
            (
                prop::collection::vec(0u32..3, n),
                prop::collection::vec(0u32..3, n),
                0..=lam_max,
                -5i64..6,
            ),
            0..5,
        )
        .prop_map(move |ts| {
            let mut p = Polynomial::zero(n);
            for (x, y, lam, c) in ts {
                p.add_term(Monomial { x, y, lam }, BigInt::from(c));
            }
            p
        })
    }

    fn triple(allow_lam: bool) -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
        (1usize..=4).prop_flat_map(move |n| (arb_poly(n, allow_lam), arb_poly(n, allow_lam), arb_poly(n, allow_lam)))
    }

    proptest! {
        #[test]
        fn ring_laws((a, b, c) in triple(true)) {
            prop_assert_eq!(a.checked_add(&b).unwrap(), b.checked_add(&a).unwrap());
            prop_assert_eq!(a.checked_mul(&b).unwrap(), b.checked_mul(&a).unwrap());
            prop_assert_eq!(
                a.checked_add(&b).unwrap().checked_add(&c).unwrap(),
                a.checked_add(&b.checked_add(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.checked_mul(&b).unwrap().checked_mul(&c).unwrap(),
                a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.checked_mul(&b.checked_add(&c).unwrap()).unwrap(),
                a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn lambda_substitution_is_a_homomorphism((a, b, _c) in triple(false)) {
            let sa = a.substitute_lambda().unwrap();
            let sb = b.substitute_lambda().unwrap();
            prop_assert_eq!(
                a.checked_add(&b).unwrap().substitute_lambda().unwrap(),
                sa.checked_add(&sb).unwrap()
            );
            prop_assert_eq!(
                a.checked_mul(&b).unwrap().substitute_lambda().unwrap(),
                sa.checked_mul(&sb).unwrap()
            );
        }

        #[test]
        fn no_zero_coefficients_stored((a, b, _c) in triple(true)) {
            let s = a.checked_sub(&b).unwrap();
            prop_assert!(s.terms().all(|(_, c)| !c.is_zero()));
        }
    }
}
