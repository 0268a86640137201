//! Left/right values and the monotone diagonal and row properties.

use std::fmt;

use super::{Entry, Ranking, RankingError, Triangle};

/// An entry together with its left and right values in a ranked triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuedEntry {
    pub entry: Entry,
    pub l: i64,
    pub r: i64,
}

impl ValuedEntry {
    /// Values of `entry` in a row of rank `rank`.
    pub fn new(entry: Entry, rank: u32) -> Self {
        let t = i64::from(rank);
        let (l, r) = match entry {
            Entry::Num(v) => (i64::from(v), i64::from(v)),
            Entry::X(i) => (i64::from(i), i64::from(i) + t),
            Entry::Y(j) => (i64::from(j) - t, i64::from(j)),
            Entry::A(i, j) | Entry::B(i, j) => (i64::from(i), i64::from(j)),
        };
        ValuedEntry { entry, l, r }
    }
}

/// Valued rows `1..=n` (index 0 holds row 1).
pub fn entry_values(t: &Triangle, rk: &Ranking) -> Vec<Vec<ValuedEntry>> {
    (1..=t.n())
        .map(|k| t.row(k).iter().map(|&e| ValuedEntry::new(e, rk.rank(k))).collect())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// `l(u) <= l(v)`, strict when `u` is a `y`.
    DiagonalLeft,
    /// `r(v) <= r(w)`, strict when `w` is an `x`.
    DiagonalRight,
    /// `l(u) < l(w)`.
    Row,
}

/// A failing arrangement: `u` and `w` are entries `position` and
/// `position + 1` of `row`, `v` sits above them in `row - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub row: usize,
    pub position: usize,
    pub lhs: i64,
    pub rhs: i64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::DiagonalLeft => "monotone diagonal (left values)",
            ViolationKind::DiagonalRight => "monotone diagonal (right values)",
            ViolationKind::Row => "monotone row",
        };
        write!(
            f,
            "{what} fails at row {}, positions {}-{}: {} vs {}",
            self.row,
            self.position,
            self.position + 1,
            self.lhs,
            self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub ranking: Result<Ranking, RankingError>,
    pub violations: Vec<Violation>,
}

/// Visits every arrangement of the valued triangle, stopping when `visit`
/// returns `false`.
fn arrangements(values: &[Vec<ValuedEntry>], mut visit: impl FnMut(Violation) -> bool) {
    for e in 2..=values.len() {
        let (upper, lower) = (&values[e - 2], &values[e - 1]);
        for (p, v) in upper.iter().enumerate() {
            let (u, w) = (lower[p], lower[p + 1]);
            let at = |kind, lhs, rhs| Violation {
                kind,
                row: e,
                position: p + 1,
                lhs,
                rhs,
            };
            let left_ok = if matches!(u.entry, Entry::Y(_)) {
                u.l < v.l
            } else {
                u.l <= v.l
            };
            if !left_ok && !visit(at(ViolationKind::DiagonalLeft, u.l, v.l)) {
                return;
            }
            let right_ok = if matches!(w.entry, Entry::X(_)) {
                v.r < w.r
            } else {
                v.r <= w.r
            };
            if !right_ok && !visit(at(ViolationKind::DiagonalRight, v.r, w.r)) {
                return;
            }
            if u.l >= w.l && !visit(at(ViolationKind::Row, u.l, w.l)) {
                return;
            }
        }
    }
}

impl AdmissibilityReport {
    pub fn check(t: &Triangle) -> Self {
        let ranking = t.ranking();
        let mut violations = Vec::new();
        if let Ok(rk) = &ranking {
            arrangements(&entry_values(t, rk), |v| {
                violations.push(v);
                true
            });
        }
        AdmissibilityReport { ranking, violations }
    }

    pub fn is_admissible(&self) -> bool {
        self.ranking.is_ok() && self.violations.is_empty()
    }
}

pub(super) fn is_admissible(t: &Triangle) -> bool {
    let Ok(rk) = t.ranking() else {
        return false;
    };
    let mut ok = true;
    arrangements(&entry_values(t, &rk), |_| {
        ok = false;
        false
    });
    ok
}

impl Triangle {
    pub fn entry_values(&self, rk: &Ranking) -> Vec<Vec<ValuedEntry>> {
        entry_values(self, rk)
    }
}
