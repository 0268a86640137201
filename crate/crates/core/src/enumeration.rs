//! Exhaustive generators and the product formula for strict monotone
//! triangles.
//!
//! Triangle generators work upward from the bottom row. Each row above is
//! chosen in lexicographic order, and the row just above the bottom is the
//! most significant choice, so the output order is fixed and restartable.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::asm::{Asm, Cmt};
use crate::tournament::{binomial2, Tournament};
use crate::triangle::{orientations_of, Entry, Triangle};

/// Largest order any generator accepts.
pub const MAX_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("bottom row must be a non-empty strictly increasing list of positive integers")]
    BadBottomRow,
    #[error("order {n} exceeds the generation cap of {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("product formula for {0} is not an integer")]
    NonIntegralProduct(BottomRow),
}

/// A strictly increasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BottomRow(Vec<u32>);

impl BottomRow {
    pub fn new(values: Vec<u32>) -> Result<Self, EnumerationError> {
        if values.is_empty() || values[0] == 0 || values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(EnumerationError::BadBottomRow);
        }
        Ok(BottomRow(values))
    }

    /// `1, 2, ..., n`.
    pub fn standard(n: usize) -> Self {
        assert!(n >= 1, "order must be positive");
        BottomRow((1..=n as u32).collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> u32 {
        *self.0.last().expect("non-empty")
    }

    pub fn is_standard(&self) -> bool {
        self.0.iter().zip(1u32..).all(|(&a, b)| a == b)
    }

    fn capped(&self) -> Result<(), EnumerationError> {
        if self.len() > MAX_ORDER {
            Err(EnumerationError::OrderTooLarge {
                n: self.len(),
                max: MAX_ORDER,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for BottomRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses `a,b,c`.
impl FromStr for BottomRow {
    type Err = EnumerationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| EnumerationError::BadBottomRow)?;
        BottomRow::new(values)
    }
}

/// Every row that can sit above `lower`, in lexicographic order. Entry `p`
/// ranges over `[lower[p], lower[p+1]]` (or `[lower[p], lower[p+1])` when
/// `strict`), and the row must increase strictly.
fn rows_above(lower: &[u32], strict: bool) -> Vec<Vec<u32>> {
    fn go(lower: &[u32], strict: bool, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let p = cur.len();
        if p + 1 == lower.len() {
            out.push(cur.clone());
            return;
        }
        let hi = if strict { lower[p + 1] - 1 } else { lower[p + 1] };
        let lo = match cur.last() {
            Some(&prev) => lower[p].max(prev + 1),
            None => lower[p],
        };
        for v in lo..=hi {
            cur.push(v);
            go(lower, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lower, strict, &mut Vec::with_capacity(lower.len()), &mut out);
    out
}

struct Frame {
    options: Vec<Vec<u32>>,
    next: usize,
}

/// Lazy depth-first walk over numerical triangles with a fixed bottom row.
pub struct TriangleIter {
    bottom: Vec<u32>,
    strict: bool,
    frames: Vec<Frame>,
    started: bool,
}

impl TriangleIter {
    fn new(s: &BottomRow, strict: bool) -> Self {
        TriangleIter {
            bottom: s.values().to_vec(),
            strict,
            frames: Vec::new(),
            started: false,
        }
    }

    fn current(&self) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<u32>> = self
            .frames
            .iter()
            .rev()
            .map(|f| f.options[f.next - 1].clone())
            .collect();
        rows.push(self.bottom.clone());
        rows
    }
}

impl Iterator for TriangleIter {
    type Item = Cmt;

    fn next(&mut self) -> Option<Cmt> {
        if !self.started {
            self.started = true;
            if self.bottom.len() == 1 {
                return Some(Cmt::from_rows_unchecked(vec![self.bottom.clone()]));
            }
            self.frames.push(Frame {
                options: rows_above(&self.bottom, self.strict),
                next: 0,
            });
        }
        loop {
            let top = self.frames.last_mut()?;
            if top.next == top.options.len() {
                self.frames.pop();
                continue;
            }
            top.next += 1;
            let row = &top.options[top.next - 1];
            if row.len() == 1 {
                return Some(Cmt::from_rows_unchecked(self.current()));
            }
            let options = rows_above(row, self.strict);
            self.frames.push(Frame { options, next: 0 });
        }
    }
}

/// All monotone triangles with bottom row `s`: rows strictly increasing,
/// every entry weakly between its two lower neighbours.
pub fn enumerate_cmt(s: &BottomRow) -> Result<TriangleIter, EnumerationError> {
    s.capped()?;
    Ok(TriangleIter::new(s, false))
}

/// [`enumerate_cmt`] without the order cap, for callers with their own.
pub(crate) fn enumerate_cmt_uncapped(s: &BottomRow) -> TriangleIter {
    TriangleIter::new(s, false)
}

/// All strict monotone triangles with bottom row `s`: every entry `j` with
/// lower neighbours `i`, `k` satisfies `i <= j < k`.
pub fn enumerate_strict(s: &BottomRow) -> Result<TriangleIter, EnumerationError> {
    s.capped()?;
    Ok(TriangleIter::new(s, true))
}

/// All alternating sign matrices of order `n`, via their monotone triangles.
pub fn enumerate_asm(n: usize) -> Result<impl Iterator<Item = Asm>, EnumerationError> {
    Ok(enumerate_cmt(&BottomRow::standard(n))?.map(|c| c.to_asm().expect("complete triangle")))
}

/// All oriented monotone triangles with bottom row `s`.
pub fn enumerate_ocmt(s: &BottomRow) -> Result<impl Iterator<Item = Triangle>, EnumerationError> {
    Ok(enumerate_cmt(s)?.flat_map(|c| orientations_of(&c)))
}

/// All `2^(n choose 2)` tournaments, counting in binary over the pairs in
/// lexicographic order with `Forward = 0`.
pub fn enumerate_tournaments(n: usize) -> Result<impl Iterator<Item = Tournament>, EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::BadBottomRow);
    }
    if n > MAX_ORDER {
        return Err(EnumerationError::OrderTooLarge { n, max: MAX_ORDER });
    }
    let m = binomial2(n);
    Ok((0..1u64 << m).map(move |code| Tournament::from_code(n, code)))
}

/// `prod_{i<j} (a_j - a_i) / (j - i)`, in exact arithmetic.
pub fn count_strict_formula(s: &BottomRow) -> Result<BigInt, EnumerationError> {
    let a = s.values();
    let mut prod = BigRational::one();
    for j in 0..a.len() {
        for i in 0..j {
            prod *= BigRational::new(BigInt::from(a[j] - a[i]), BigInt::from(j - i));
        }
    }
    if !prod.is_integer() {
        return Err(EnumerationError::NonIntegralProduct(s.clone()));
    }
    Ok(prod.to_integer())
}

/// `2^(n choose 2)` times [`count_strict_formula`].
pub fn count_t_s(s: &BottomRow) -> Result<BigInt, EnumerationError> {
    Ok(count_strict_formula(s)? << binomial2(s.len()))
}

/// Pure-V triangles produced by lifting strict triangles and flipping
/// subsets of entries, together with the number of candidates the
/// admissibility filter rejected (expected to be zero).
#[derive(Debug, Clone)]
pub struct TsGeneration {
    pub triangles: Vec<Triangle>,
    pub rejected: usize,
}

/// Generates the admissible pure-V triangles over `s`. Entry `j` of row `k`
/// in a strict triangle becomes `a_{j, j+n-k}`, then every subset of these
/// entries is turned into `b`s.
pub fn generate_t_s(s: &BottomRow) -> Result<TsGeneration, EnumerationError> {
    let n = s.len();
    let m = binomial2(n);
    let mut triangles = Vec::new();
    let mut rejected = 0;
    for strict in enumerate_strict(s)? {
        for mask in 0..1u64 << m {
            let mut bit = 0;
            let rows: Vec<Vec<Entry>> = (1..=n)
                .map(|k| {
                    strict
                        .row(k)
                        .iter()
                        .map(|&j| {
                            if k == n {
                                return Entry::Num(j);
                            }
                            let hi = j + (n - k) as u32;
                            let flip = mask >> (m - 1 - bit) & 1 == 1;
                            bit += 1;
                            if flip {
                                Entry::B(j, hi)
                            } else {
                                Entry::A(j, hi)
                            }
                        })
                        .collect()
                })
                .collect();
            match Triangle::new(rows) {
                Ok(t) if t.is_admissible() => triangles.push(t),
                _ => rejected += 1,
            }
        }
    }
    Ok(TsGeneration { triangles, rejected })
}

/// Counts `|enumerate_ocmt(s)|` without materialising orientations.
pub fn count_ocmt(s: &BottomRow) -> Result<BigInt, EnumerationError> {
    let mut total = BigInt::from(0);
    for c in enumerate_cmt(s)? {
        total += BigInt::one() << c.vertex_stats().v_total();
    }
    Ok(total)
}
