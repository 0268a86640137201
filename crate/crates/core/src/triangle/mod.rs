//! The triangle object shared by oriented monotone triangles, tournaments and
//! every intermediate state of the bijection.
//!
//! Row `k` (1-based, top to bottom) has `k` entries. The bottom row holds
//! numerals, the rows above hold `x_i`, `y_j`, `a_ij` or `b_ij` symbols. A
//! notional empty row 0 sits above row 1; it only shows up in rankings.

mod admissible;
mod entry;
mod oriented;
mod ranking;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::Monomial;

pub use admissible::{AdmissibilityReport, ValuedEntry, Violation, ViolationKind};
pub use entry::{Entry, EntryParseError};
pub use oriented::{orientations_of, OcmtView, OrientError, Orientation};
pub use ranking::{Ranking, RankingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("a triangle needs at least one row")]
    Empty,
    #[error("row {row} has {found} entries, expected {row}")]
    BadShape { row: usize, found: usize },
    #[error("bottom row must be strictly increasing positive numerals")]
    BadBottomRow,
    #[error("numeral {value} above the bottom row (row {row})")]
    NumeralAboveBottom { row: usize, value: u32 },
    #[error("entry {entry} in row {row} has a subscript outside 1..={max}")]
    SubscriptOutOfRange { row: usize, entry: Entry, max: u32 },
    #[error("entry {entry} in row {row} needs i < j")]
    BadPair { row: usize, entry: Entry },
    #[error(transparent)]
    Parse(#[from] EntryParseError),
}

/// How the entries of a non-bottom row are made up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    /// Only `x`/`y` symbols.
    X,
    /// Only `a`/`b` symbols, all with subscript difference `d`.
    V(u32),
    /// Anything else: `x`/`y` mixed with `a`/`b`, or differing differences.
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    rows: Vec<Vec<Entry>>,
}

impl Triangle {
    pub fn new(rows: Vec<Vec<Entry>>) -> Result<Self, TriangleError> {
        if rows.is_empty() {
            return Err(TriangleError::Empty);
        }
        for (k, r) in rows.iter().enumerate() {
            if r.len() != k + 1 {
                return Err(TriangleError::BadShape {
                    row: k + 1,
                    found: r.len(),
                });
            }
        }
        let n = rows.len();
        let mut bottom = Vec::with_capacity(n);
        for e in &rows[n - 1] {
            match *e {
                Entry::Num(v) if v > 0 => bottom.push(v),
                _ => return Err(TriangleError::BadBottomRow),
            }
        }
        if bottom.windows(2).any(|w| w[0] >= w[1]) {
            return Err(TriangleError::BadBottomRow);
        }
        let max = bottom[n - 1];
        for (k, r) in rows[..n - 1].iter().enumerate() {
            for &e in r {
                let row = k + 1;
                let (lo, hi) = match e {
                    Entry::Num(value) => return Err(TriangleError::NumeralAboveBottom { row, value }),
                    Entry::X(i) | Entry::Y(i) => (i, i),
                    Entry::A(i, j) | Entry::B(i, j) => {
                        if i >= j {
                            return Err(TriangleError::BadPair { row, entry: e });
                        }
                        (i, j)
                    }
                };
                if lo == 0 || hi > max {
                    return Err(TriangleError::SubscriptOutOfRange { row, entry: e, max });
                }
            }
        }
        Ok(Triangle { rows })
    }

    /// Parses rows of entry tokens (`"x:3"`, `"a:1:5"`, `"n:4"`, ...).
    pub fn from_tokens<R, S>(rows: &[R]) -> Result<Self, TriangleError>
    where
        R: AsRef<[S]>,
        S: AsRef<str>,
    {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|s| s.as_ref().parse()).collect())
            .collect::<Result<Vec<Vec<Entry>>, _>>()?;
        Triangle::new(rows)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Entry>>) -> Self {
        Triangle { rows }
    }

    /// A triangle over `bottom` whose entry at row `k`, position `p`
    /// (both 1-based) is `fill(k, p)`.
    pub fn build(bottom: &[u32], mut fill: impl FnMut(usize, usize) -> Entry) -> Result<Self, TriangleError> {
        let n = bottom.len();
        let mut rows: Vec<Vec<Entry>> = (1..n).map(|k| (1..=k).map(|p| fill(k, p)).collect()).collect();
        rows.push(bottom.iter().map(|&v| Entry::Num(v)).collect());
        Triangle::new(rows)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Row `k`, 1-based; `k = n` is the bottom row.
    pub fn row(&self, k: usize) -> &[Entry] {
        &self.rows[k - 1]
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub(crate) fn row_mut(&mut self, k: usize) -> &mut Vec<Entry> {
        &mut self.rows[k - 1]
    }

    pub fn bottom(&self) -> Vec<u32> {
        self.rows[self.n() - 1]
            .iter()
            .map(|e| match e {
                Entry::Num(v) => *v,
                _ => unreachable!("bottom row holds numerals"),
            })
            .collect()
    }

    /// Largest bottom value; every subscript is at most this.
    pub fn max_value(&self) -> u32 {
        match self.rows[self.n() - 1].last() {
            Some(Entry::Num(v)) => *v,
            _ => unreachable!("bottom row holds numerals"),
        }
    }

    /// Bottom row is exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        self.bottom().into_iter().eq(1..=self.n() as u32)
    }

    /// Kind of row `k` for `1 <= k < n`.
    pub fn row_kind(&self, k: usize) -> RowKind {
        let row = self.row(k);
        if row.iter().all(|e| e.is_x_symbol()) {
            return RowKind::X;
        }
        let mut diff = None;
        for e in row {
            match e.difference() {
                Some(d) if diff.is_none() || diff == Some(d) => diff = Some(d),
                _ => return RowKind::Mixed,
            }
        }
        RowKind::V(diff.expect("rows are non-empty"))
    }

    /// Every row above the bottom is an X-row.
    pub fn is_pure_x(&self) -> bool {
        (1..self.n()).all(|k| self.row(k).iter().all(|e| e.is_x_symbol()))
    }

    /// Every row above the bottom holds only `a`/`b` symbols.
    pub fn is_pure_v(&self) -> bool {
        (1..self.n()).all(|k| self.row(k).iter().all(|e| e.is_v_symbol()))
    }

    pub fn ranking(&self) -> Result<Ranking, RankingError> {
        Ranking::compute(self)
    }

    pub fn check_admissible(&self) -> AdmissibilityReport {
        AdmissibilityReport::check(self)
    }

    pub fn is_admissible(&self) -> bool {
        admissible::is_admissible(self)
    }

    /// Product of the entry weights above the bottom row:
    /// `x_i, a_ij ↦ x_i` and `y_j, b_ij ↦ y_j`.
    pub fn weight(&self) -> Monomial {
        let mut m = Monomial::one(self.max_value() as usize);
        for row in &self.rows[..self.n() - 1] {
            for e in row {
                match *e {
                    Entry::X(i) | Entry::A(i, _) => m.mul_x(i as usize),
                    Entry::Y(j) | Entry::B(_, j) => m.mul_y(j as usize),
                    Entry::Num(_) => unreachable!(),
                }
            }
        }
        m
    }

    /// Text rendering: rows centred on a grid of `2n-1` slots of width
    /// `width`, each line optionally followed by its rank in brackets.
    /// Row 0 is emitted (blank) only when ranks are given.
    pub fn render(&self, ranks: Option<&Ranking>, width: usize) -> String {
        let n = self.n();
        let mut out = String::new();
        let mut line = |k: usize, entries: &[Entry]| {
            let mut slots = vec![String::new(); 2 * n - 1];
            for (p, e) in entries.iter().enumerate() {
                slots[n - k + 2 * p] = e.label();
            }
            let cells: Vec<String> = slots.iter().map(|s| format!("{s:>width$}")).collect();
            let body = cells.join(" ");
            match ranks {
                Some(rk) => out.push_str(&format!("{body}  [{}]\n", rk.rank(k))),
                None => {
                    out.push_str(body.trim_end());
                    out.push('\n');
                }
            }
        };
        if ranks.is_some() {
            line(0, &[]);
        }
        for k in 1..=n {
            line(k, &self.rows[k - 1]);
        }
        out
    }

    /// Widest entry label; the natural slot width for [`Triangle::render`].
    pub fn label_width(&self) -> usize {
        self.rows.iter().flatten().map(|e| e.label().len()).max().unwrap_or(1)
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(None, self.label_width()))
    }
}

#[derive(Serialize, Deserialize)]
struct TriangleJson {
    n: usize,
    rows: Vec<Vec<String>>,
}

impl Serialize for Triangle {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TriangleJson {
            n: self.n(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|e| e.to_string()).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Triangle {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = TriangleJson::deserialize(deserializer)?;
        if raw.rows.len() != raw.n {
            return Err(serde::de::Error::custom(format!(
                "declared order {} but {} rows",
                raw.n,
                raw.rows.len()
            )));
        }
        Triangle::from_tokens(&raw.rows).map_err(serde::de::Error::custom)
    }
}
