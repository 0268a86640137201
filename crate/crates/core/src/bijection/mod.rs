//! The bijection between oriented monotone triangles and tournaments.
//!
//! `Φ` raises the X-rows one at a time in the order
//! `R_1; R_2 R_1; R_3 R_2 R_1; ...` until every row above the bottom is a
//! V-row, and `Ψ` undoes it with `L_1 L_2 ... L_{n-1}; ...; L_1 L_2; L_1`.
//! Both work for any strictly increasing bottom row; with bottom row `1..n`
//! the V-side is a tournament.

mod ops;
mod trace;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::tournament::{binomial2, Tournament, TournamentError};
use crate::triangle::Triangle;

pub use ops::{
    applicable_lowers, applicable_raises, lower_op, lower_step, raise_op, raise_step, transform_rows, OpError, OpKind,
    OpStep, Precondition, RowPair, Swap,
};
pub use trace::Trace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("input must be an admissible triangle with only x/y entries above the bottom row")]
    NotOriented,
    #[error("input must be an admissible triangle with only a/b entries above the bottom row")]
    NotPureV,
    #[error("bottom row is not 1..n")]
    NonStandardBottomRow,
    #[error("operator sequence stopped after {done} of {expected} steps")]
    IncompleteSequence { done: usize, expected: usize },
    #[error(transparent)]
    Op(#[from] OpError),
    #[error(transparent)]
    Tournament(#[from] TournamentError),
}

/// Row indices for `Φ`, in application order.
pub fn phi_sequence(n: usize) -> Vec<usize> {
    (1..n).flat_map(|g| (1..=g).rev()).collect()
}

/// Row indices for `Ψ`, in application order (the reverse of [`phi_sequence`]).
pub fn psi_sequence(n: usize) -> Vec<usize> {
    (1..n).rev().flat_map(|g| 1..=g).collect()
}

fn run(start: &Triangle, kind: OpKind, seq: &[usize]) -> Result<Trace, BijectionError> {
    let mut trace = Trace::new(start.clone());
    for &d in seq {
        let cur = trace.last();
        let step = match kind {
            OpKind::Raise => raise_step(cur, d)?,
            OpKind::Lower => lower_step(cur, d)?,
        };
        trace.push(step);
    }
    Ok(trace)
}

fn require_oriented(o: &Triangle) -> Result<(), BijectionError> {
    if o.is_pure_x() && o.is_admissible() {
        Ok(())
    } else {
        Err(BijectionError::NotOriented)
    }
}

fn require_pure_v(t: &Triangle) -> Result<(), BijectionError> {
    if t.is_pure_v() && t.is_admissible() {
        Ok(())
    } else {
        Err(BijectionError::NotPureV)
    }
}

/// `Φ` over an arbitrary bottom row: oriented triangle to admissible pure-V
/// triangle.
pub fn phi_s(o: &Triangle) -> Result<(Triangle, Trace), BijectionError> {
    require_oriented(o)?;
    let trace = run(o, OpKind::Raise, &phi_sequence(o.n()))?;
    Ok((trace.last().clone(), trace))
}

/// `Ψ` over an arbitrary bottom row.
pub fn psi_s(t: &Triangle) -> Result<(Triangle, Trace), BijectionError> {
    require_pure_v(t)?;
    let trace = run(t, OpKind::Lower, &psi_sequence(t.n()))?;
    Ok((trace.last().clone(), trace))
}

/// `Φ`: oriented complete monotone triangle to tournament.
pub fn phi(o: &Triangle) -> Result<(Tournament, Trace), BijectionError> {
    if !o.is_standard() {
        return Err(BijectionError::NonStandardBottomRow);
    }
    let (v, trace) = phi_s(o)?;
    Ok((Tournament::from_triangle(&v)?, trace))
}

/// `Ψ`: tournament to oriented complete monotone triangle.
pub fn psi(t: &Tournament) -> Result<(Triangle, Trace), BijectionError> {
    psi_s(&t.to_triangle())
}

/// Raises in a seeded random order: at each step one of the applicable
/// `R_d` is picked uniformly until none remains.
pub fn raise_randomly(o: &Triangle, seed: u64) -> Result<Trace, BijectionError> {
    require_oriented(o)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trace = Trace::new(o.clone());
    loop {
        let choices = applicable_raises(trace.last());
        let Some(&d) = choices.choose(&mut rng) else {
            break;
        };
        let step = raise_step(trace.last(), d)?;
        trace.push(step);
    }
    let expected = binomial2(o.n());
    if trace.len() != expected || !trace.last().is_pure_v() {
        return Err(BijectionError::IncompleteSequence {
            done: trace.len(),
            expected,
        });
    }
    Ok(trace)
}

/// `Φ` computed through a random achievable order of raisings.
pub fn phi_any_order(o: &Triangle, seed: u64) -> Result<(Tournament, Trace), BijectionError> {
    if !o.is_standard() {
        return Err(BijectionError::NonStandardBottomRow);
    }
    let trace = raise_randomly(o, seed)?;
    Ok((Tournament::from_triangle(trace.last())?, trace))
}
