//! The raising and lowering operators on a pair of adjacent rows.
//!
//! Raising `R_d` needs row `d` to be an X-row and row `d-1` a V-row (or the
//! notional row 0), both of rank `t`. It runs three phases:
//!
//! 1. simultaneous swaps of `b_jk` (row `d-1`, position `p`) with `x_j` (row
//!    `d`, position `p`), and of `a_jk` (row `d-1`, position `p`) with `y_k`
//!    (row `d`, position `p+1`);
//! 2. every `a_jk` left in row `d-1` becomes `x_j`, every `b_jk` becomes `y_k`;
//! 3. every `x_i` left in row `d` becomes `a_{i,i+t}`, every `y_j` becomes
//!    `b_{j-t,j}`.
//!
//! Lowering `L_d` is the exact mirror and undoes `R_d`.

use std::fmt;

use thiserror::Error;

use crate::triangle::{Entry, Ranking, RowKind, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpKind {
    Raise,
    Lower,
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OpKind::Raise => "R",
            OpKind::Lower => "L",
        })
    }
}

/// Which precondition of an operator failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precondition {
    /// `d` is not in `1..n`.
    RowOutOfRange,
    /// The triangle has no admissible ranking or fails a monotone property.
    NotAdmissible,
    /// Row `d` has the wrong kind (X-row for raising, V-row for lowering).
    LowerRowKind,
    /// Row `d - 1` has the wrong kind.
    UpperRowKind,
    /// Rows `d-1` and `d` have ranks that do not fit the operator.
    RankMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpError {
    #[error("{kind}_{d} is not applicable: {clause:?}")]
    NotApplicable {
        kind: OpKind,
        d: usize,
        clause: Precondition,
    },
    #[error("{kind}_{d} would create {entry}, outside 1..={max}")]
    IndexOverflow {
        kind: OpKind,
        d: usize,
        entry: String,
        max: u32,
    },
    #[error("{kind}_{d}: overlapping swap targets")]
    SwapConflict { kind: OpKind, d: usize },
}

/// New upper row, new lower row and the phase-1 swaps performed.
pub type RowPair = (Vec<Entry>, Vec<Entry>, Vec<Swap>);

/// One phase-1 exchange: `upper` sat at `upper_pos` in row `d-1` and `lower`
/// at `lower_pos` in row `d` (1-based positions, entries before the swap).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Swap {
    pub upper_pos: usize,
    pub lower_pos: usize,
    pub upper: Entry,
    pub lower: Entry,
}

/// The result of one operator application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpStep {
    pub kind: OpKind,
    pub d: usize,
    pub before: Triangle,
    pub after: Triangle,
    pub ranks_after: Ranking,
    pub swaps: Vec<Swap>,
}

fn not_applicable(kind: OpKind, d: usize, clause: Precondition) -> OpError {
    OpError::NotApplicable { kind, d, clause }
}

/// Returns the common rank `t` of the rows the operator works on.
fn check_pre(t: &Triangle, d: usize, kind: OpKind) -> Result<u32, OpError> {
    let n = t.n();
    if d == 0 || d >= n {
        return Err(not_applicable(kind, d, Precondition::RowOutOfRange));
    }
    let rk = t
        .ranking()
        .map_err(|_| not_applicable(kind, d, Precondition::NotAdmissible))?;
    let lower = t.row_kind(d);
    let upper = if d == 1 { None } else { Some(t.row_kind(d - 1)) };
    let (rank_d, rank_up) = (rk.rank(d), rk.rank(d - 1));
    let rank = match kind {
        OpKind::Raise => {
            if lower != RowKind::X {
                return Err(not_applicable(kind, d, Precondition::LowerRowKind));
            }
            if !matches!(upper, None | Some(RowKind::V(_))) {
                return Err(not_applicable(kind, d, Precondition::UpperRowKind));
            }
            if rank_up != rank_d {
                return Err(not_applicable(kind, d, Precondition::RankMismatch));
            }
            rank_d
        }
        OpKind::Lower => {
            if !matches!(lower, RowKind::V(_)) {
                return Err(not_applicable(kind, d, Precondition::LowerRowKind));
            }
            if !matches!(upper, None | Some(RowKind::X)) {
                return Err(not_applicable(kind, d, Precondition::UpperRowKind));
            }
            if rank_up != rank_d + 1 {
                return Err(not_applicable(kind, d, Precondition::RankMismatch));
            }
            rank_d
        }
    };
    if !t.is_admissible() {
        return Err(not_applicable(kind, d, Precondition::NotAdmissible));
    }
    Ok(rank)
}

/// Finds the phase-1 swap partners. The upper entry decides which lower
/// position can pair with it, so each upper entry has at most one partner;
/// a lower position claimed twice is reported as a conflict.
fn find_swaps(kind: OpKind, d: usize, upper: &[Entry], lower: &[Entry]) -> Result<Vec<Swap>, OpError> {
    let mut claimed = vec![false; lower.len()];
    let mut swaps = Vec::new();
    for (p, &u) in upper.iter().enumerate() {
        let target = match (kind, u) {
            (OpKind::Raise, Entry::B(j, _)) if lower[p] == Entry::X(j) => Some(p),
            (OpKind::Raise, Entry::A(_, k)) if lower[p + 1] == Entry::Y(k) => Some(p + 1),
            (OpKind::Lower, Entry::X(j)) if matches!(lower[p], Entry::B(jj, _) if jj == j) => Some(p),
            (OpKind::Lower, Entry::Y(k)) if matches!(lower[p + 1], Entry::A(_, kk) if kk == k) => Some(p + 1),
            _ => None,
        };
        if let Some(q) = target {
            if std::mem::replace(&mut claimed[q], true) {
                return Err(OpError::SwapConflict { kind, d });
            }
            swaps.push(Swap {
                upper_pos: p + 1,
                lower_pos: q + 1,
                upper: u,
                lower: lower[q],
            });
        }
    }
    Ok(swaps)
}

/// Runs the three phases on rows `d-1` (`upper`) and `d` (`lower`) whose
/// shared rank is `rank`; subscripts must stay within `1..=max`.
pub fn transform_rows(
    kind: OpKind,
    d: usize,
    rank: u32,
    max: u32,
    upper: &[Entry],
    lower: &[Entry],
) -> Result<RowPair, OpError> {
    let overflow = |entry: String| OpError::IndexOverflow { kind, d, entry, max };
    let mut upper = upper.to_vec();
    let mut lower = lower.to_vec();

    let swaps = find_swaps(kind, d, &upper, &lower)?;
    for s in &swaps {
        upper[s.upper_pos - 1] = s.lower;
        lower[s.lower_pos - 1] = s.upper;
    }

    let to_x = |e: Entry| match e {
        Entry::A(j, _) => Entry::X(j),
        Entry::B(_, k) => Entry::Y(k),
        other => other,
    };
    let to_v = |e: Entry| -> Result<Entry, OpError> {
        match e {
            Entry::X(i) => {
                let j = i.checked_add(rank).filter(|&j| j <= max);
                j.map(|j| Entry::A(i, j))
                    .ok_or_else(|| overflow(format!("a_({},{})", i, u64::from(i) + u64::from(rank))))
            }
            Entry::Y(j) => {
                let i = j.checked_sub(rank).filter(|&i| i >= 1);
                i.map(|i| Entry::B(i, j))
                    .ok_or_else(|| overflow(format!("b_({},{})", i64::from(j) - i64::from(rank), j)))
            }
            other => Ok(other),
        }
    };

    match kind {
        OpKind::Raise => {
            upper = upper.into_iter().map(to_x).collect();
            lower = lower.into_iter().map(to_v).collect::<Result<_, _>>()?;
        }
        OpKind::Lower => {
            upper = upper.into_iter().map(to_v).collect::<Result<_, _>>()?;
            lower = lower.into_iter().map(to_x).collect();
        }
    }
    Ok((upper, lower, swaps))
}

fn apply(t: &Triangle, d: usize, kind: OpKind) -> Result<OpStep, OpError> {
    let rank = check_pre(t, d, kind)?;
    let upper: &[Entry] = if d == 1 { &[] } else { t.row(d - 1) };
    let (upper, lower, swaps) = transform_rows(kind, d, rank, t.max_value(), upper, t.row(d))?;
    let mut out = t.clone();
    if d > 1 {
        *out.row_mut(d - 1) = upper;
    }
    *out.row_mut(d) = lower;
    let ranks_after = out.ranking().expect("operators keep a valid ranking");
    Ok(OpStep {
        kind,
        d,
        before: t.clone(),
        after: out,
        ranks_after,
        swaps,
    })
}

/// Applies `R_d`, keeping the full step record.
pub fn raise_step(t: &Triangle, d: usize) -> Result<OpStep, OpError> {
    apply(t, d, OpKind::Raise)
}

/// Applies `L_d`, keeping the full step record.
pub fn lower_step(t: &Triangle, d: usize) -> Result<OpStep, OpError> {
    apply(t, d, OpKind::Lower)
}

pub fn raise_op(t: &Triangle, d: usize) -> Result<Triangle, OpError> {
    raise_step(t, d).map(|s| s.after)
}

pub fn lower_op(t: &Triangle, d: usize) -> Result<Triangle, OpError> {
    lower_step(t, d).map(|s| s.after)
}

/// Rows `d` for which `R_d` applies.
pub fn applicable_raises(t: &Triangle) -> Vec<usize> {
    if !t.is_admissible() {
        return Vec::new();
    }
    let ds: Vec<usize> = (1..t.n()).filter(|&d| check_pre(t, d, OpKind::Raise).is_ok()).collect();
    debug_assert!(ds.windows(2).all(|w| w[1] - w[0] >= 2));
    ds
}

/// Rows `d` for which `L_d` applies.
pub fn applicable_lowers(t: &Triangle) -> Vec<usize> {
    if !t.is_admissible() {
        return Vec::new();
    }
    (1..t.n()).filter(|&d| check_pre(t, d, OpKind::Lower).is_ok()).collect()
}
