//! Alternating sign matrices, complete monotone triangles and square ice.
//!
//! All indices at the public surface are 1-based. A [`Cmt`] may carry an
//! arbitrary strictly increasing bottom row; it is *complete* when that row
//! is `1..=n`, which is what the ASM correspondence requires.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row(usize),
    Column(usize),
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row(i) => write!(f, "row {i}"),
            Line::Column(j) => write!(f, "column {j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsmError {
    #[error("matrix is not square (or is empty)")]
    NotSquare,
    #[error("entry {value} at ({row},{col}) is not in {{-1,0,1}}")]
    EntryOutOfRange { row: usize, col: usize, value: i64 },
    #[error("{0} violates the alternating sign constraint")]
    RowColumnConstraintViolated(Line),
    #[error("invalid monotone triangle: {0}")]
    InvalidCmt(String),
}

/// An alternating sign matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct Asm {
    rows: Vec<Vec<i8>>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<MatrixJson> for Asm {
    type Error = AsmError;
    fn try_from(m: MatrixJson) -> Result<Self, AsmError> {
        if m.rows.len() != m.n {
            return Err(AsmError::NotSquare);
        }
        Asm::new(&m.rows)
    }
}

impl From<Asm> for MatrixJson {
    fn from(a: Asm) -> Self {
        MatrixJson {
            n: a.n(),
            rows: a.rows.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect(),
        }
    }
}

/// Checks prefix sums of one line: all in {0,1} and total 1.
fn line_ok(values: impl Iterator<Item = i64>) -> bool {
    let mut s = 0;
    for v in values {
        s += v;
        if !(0..=1).contains(&s) {
            return false;
        }
    }
    s == 1
}

impl Asm {
    /// Validates an integer matrix as an ASM using the prefix-sum criterion.
    pub fn new<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, AsmError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.as_ref().len() != n) {
            return Err(AsmError::NotSquare);
        }
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.as_ref().iter().enumerate() {
                if !(-1..=1).contains(&v) {
                    return Err(AsmError::EntryOutOfRange {
                        row: i + 1,
                        col: j + 1,
                        value: v,
                    });
                }
            }
        }
        for (i, r) in rows.iter().enumerate() {
            if !line_ok(r.as_ref().iter().copied()) {
                return Err(AsmError::RowColumnConstraintViolated(Line::Row(i + 1)));
            }
        }
        for j in 0..n {
            if !line_ok(rows.iter().map(|r| r.as_ref()[j])) {
                return Err(AsmError::RowColumnConstraintViolated(Line::Column(j + 1)));
            }
        }
        Ok(Asm {
            rows: rows
                .iter()
                .map(|r| r.as_ref().iter().map(|&v| v as i8).collect())
                .collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Asm {
            rows: (0..n).map(|i| (0..n).map(|j| i8::from(i == j)).collect()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    pub fn count(&self, value: i8) -> usize {
        self.rows.iter().flatten().filter(|&&v| v == value).count()
    }

    /// Cumulative column sums; row `k` contains exactly `k` ones.
    pub fn column_sums(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut acc = vec![0i8; n];
        self.rows
            .iter()
            .map(|r| {
                for (a, &v) in acc.iter_mut().zip(r) {
                    *a += v;
                }
                acc.iter().map(|&v| v as u8).collect()
            })
            .collect()
    }

    /// Recovers the matrix from its cumulative column sums by differencing
    /// consecutive rows.
    pub fn from_column_sums<R: AsRef<[u8]>>(sums: &[R]) -> Result<Self, AsmError> {
        let mut prev = vec![0i64; sums.len()];
        let mut rows = Vec::with_capacity(sums.len());
        for r in sums {
            let cur: Vec<i64> = r.as_ref().iter().map(|&v| i64::from(v)).collect();
            if cur.len() != prev.len() {
                return Err(AsmError::NotSquare);
            }
            rows.push(cur.iter().zip(&prev).map(|(a, b)| a - b).collect::<Vec<i64>>());
            prev = cur;
        }
        Asm::new(&rows)
    }

    pub fn to_cmt(&self) -> Cmt {
        let rows = self
            .column_sums()
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v == 1)
                    .map(|(j, _)| j as u32 + 1)
                    .collect()
            })
            .collect();
        Cmt { rows }
    }

    pub fn ice_grid(&self) -> IceGrid {
        IceGrid::from_asm(self)
    }

    pub fn vertex_stats(&self) -> VertexStats {
        self.to_cmt().vertex_stats()
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// How a non-bottom entry `j` of a monotone triangle sits between its
/// lower neighbours `i` and `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EntryType {
    /// `i = j < k`
    Southeast,
    /// `i < j = k`
    Southwest,
    /// `i < j < k`
    Vertical,
}

/// A monotone triangle: row `k` has `k` strictly increasing entries and
/// every entry lies weakly between its two lower neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CmtJson", into = "CmtJson")]
pub struct Cmt {
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct CmtJson {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<CmtJson> for Cmt {
    type Error = AsmError;
    fn try_from(c: CmtJson) -> Result<Self, AsmError> {
        if c.rows.len() != c.n {
            return Err(AsmError::InvalidCmt(format!(
                "declared order {} but {} rows",
                c.n,
                c.rows.len()
            )));
        }
        Cmt::with_any_bottom(c.rows)
    }
}

impl From<Cmt> for CmtJson {
    fn from(c: Cmt) -> Self {
        CmtJson { n: c.n(), rows: c.rows }
    }
}

impl Cmt {
    /// A complete monotone triangle (bottom row `1..=n`).
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, AsmError> {
        let c = Cmt::with_any_bottom(rows)?;
        if !c.is_complete() {
            return Err(AsmError::InvalidCmt("bottom row is not 1..n".into()));
        }
        Ok(c)
    }

    /// A monotone triangle with any strictly increasing positive bottom row.
    pub fn with_any_bottom(rows: Vec<Vec<u32>>) -> Result<Self, AsmError> {
        if rows.is_empty() {
            return Err(AsmError::InvalidCmt("no rows".into()));
        }
        for (k, r) in rows.iter().enumerate() {
            if r.len() != k + 1 {
                return Err(AsmError::InvalidCmt(format!("row {} has {} entries", k + 1, r.len())));
            }
            if r.windows(2).any(|w| w[0] >= w[1]) {
                return Err(AsmError::InvalidCmt(format!(
                    "row {} is not strictly increasing",
                    k + 1
                )));
            }
        }
        if rows.last().unwrap()[0] == 0 {
            return Err(AsmError::InvalidCmt("bottom row must be positive".into()));
        }
        for k in 1..rows.len() {
            let (up, low) = (&rows[k - 1], &rows[k]);
            for (p, &v) in up.iter().enumerate() {
                if v < low[p] || v > low[p + 1] {
                    return Err(AsmError::InvalidCmt(format!(
                        "entry {v} in row {} is not between {} and {}",
                        k,
                        low[p],
                        low[p + 1]
                    )));
                }
            }
        }
        Ok(Cmt { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        Cmt { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Row `k` (1-based).
    pub fn row(&self, k: usize) -> &[u32] {
        &self.rows[k - 1]
    }

    pub fn bottom(&self) -> &[u32] {
        self.rows.last().unwrap()
    }

    pub fn is_complete(&self) -> bool {
        self.bottom().iter().copied().eq(1..=self.n() as u32)
    }

    /// Classification of the entry at row `k` (< n), position `p` (both 1-based).
    pub fn entry_type(&self, k: usize, p: usize) -> EntryType {
        let j = self.rows[k - 1][p - 1];
        let below = &self.rows[k];
        let (i, kk) = (below[p - 1], below[p]);
        if i == j {
            EntryType::Southeast
        } else if j == kk {
            EntryType::Southwest
        } else {
            EntryType::Vertical
        }
    }

    /// Non-bottom entries in reading order with their types.
    pub fn classified_entries(&self) -> impl Iterator<Item = (usize, usize, u32, EntryType)> + '_ {
        (1..self.n()).flat_map(move |k| (1..=k).map(move |p| (k, p, self.rows[k - 1][p - 1], self.entry_type(k, p))))
    }

    /// Per-column vertex counts, read off the entry types. Columns range over
    /// `1..=max(bottom)`.
    pub fn vertex_stats(&self) -> VertexStats {
        let cols = *self.bottom().last().unwrap() as usize;
        let mut st = VertexStats {
            n: cols,
            se: vec![0; cols],
            sw: vec![0; cols],
            v: vec![0; cols],
        };
        for (_, _, j, ty) in self.classified_entries() {
            let c = j as usize - 1;
            match ty {
                EntryType::Southeast => st.se[c] += 1,
                EntryType::Southwest => st.sw[c] += 1,
                EntryType::Vertical => st.v[c] += 1,
            }
        }
        st
    }

    /// Inverse of [`Asm::to_cmt`].
    pub fn to_asm(&self) -> Result<Asm, AsmError> {
        if !self.is_complete() {
            return Err(AsmError::InvalidCmt("bottom row is not 1..n".into()));
        }
        let n = self.n();
        let mut prev = vec![0i64; n];
        let mut out = Vec::with_capacity(n);
        for r in &self.rows {
            let mut ind = vec![0i64; n];
            for &j in r {
                ind[j as usize - 1] = 1;
            }
            out.push(ind.iter().zip(&prev).map(|(a, b)| a - b).collect::<Vec<_>>());
            prev = ind;
        }
        Asm::new(&out)
    }
}

impl fmt::Display for Cmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let w = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for (k, r) in self.rows.iter().enumerate() {
            let mut slots = vec![String::new(); 2 * n - 1];
            for (p, v) in r.iter().enumerate() {
                slots[n - k - 1 + 2 * p] = v.to_string();
            }
            let line: Vec<String> = slots.iter().map(|s| format!("{s:>w$}")).collect();
            writeln!(f, "{}", line.join(" ").trim_end())?;
        }
        Ok(())
    }
}

/// The six square-ice vertex types, named by the directions their two
/// in-edges point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexType {
    H,
    V,
    NW,
    NE,
    SW,
    SE,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IceGrid {
    n: usize,
    types: Vec<Vec<VertexType>>,
}

impl IceGrid {
    /// Orients the square-ice edges from cumulative sums: the vertical edge
    /// below `(i,j)` points down iff the column sum through row `i` is 1, and
    /// the horizontal edge right of `(i,j)` points left iff the row sum
    /// through column `j` is 1.
    pub fn from_asm(a: &Asm) -> Self {
        let n = a.n();
        let col = a.column_sums();
        let types = (0..n)
            .map(|i| {
                let mut row_sum = 0i8;
                (0..n)
                    .map(|j| {
                        let left_sum = row_sum;
                        row_sum += a.rows[i][j];
                        let above = if i == 0 { 0 } else { col[i - 1][j] };
                        let from_north = above == 1;
                        let from_south = col[i][j] == 0;
                        let from_west = left_sum == 0;
                        let from_east = row_sum == 1;
                        match (from_north, from_south, from_west, from_east) {
                            (false, false, true, true) => VertexType::H,
                            (true, true, false, false) => VertexType::V,
                            (false, true, false, true) => VertexType::NW,
                            (false, true, true, false) => VertexType::NE,
                            (true, false, false, true) => VertexType::SW,
                            (true, false, true, false) => VertexType::SE,
                            other => unreachable!("ice rule broken at ({},{}): {other:?}", i + 1, j + 1),
                        }
                    })
                    .collect()
            })
            .collect();
        IceGrid { n, types }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertex type at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> VertexType {
        self.types[i - 1][j - 1]
    }

    pub fn types(&self) -> &[Vec<VertexType>] {
        &self.types
    }

    pub fn count(&self, ty: VertexType) -> usize {
        self.types.iter().flatten().filter(|&&t| t == ty).count()
    }

    /// SE/SW/V counts per column, from the grid rather than the triangle.
    pub fn vertex_stats(&self) -> VertexStats {
        let n = self.n;
        let mut st = VertexStats {
            n,
            se: vec![0; n],
            sw: vec![0; n],
            v: vec![0; n],
        };
        for row in &self.types {
            for (j, t) in row.iter().enumerate() {
                match t {
                    VertexType::SE => st.se[j] += 1,
                    VertexType::SW => st.sw[j] += 1,
                    VertexType::V => st.v[j] += 1,
                    _ => {}
                }
            }
        }
        st
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexStats {
    pub n: usize,
    pub se: Vec<u32>,
    pub sw: Vec<u32>,
    pub v: Vec<u32>,
}

impl VertexStats {
    pub fn se_total(&self) -> u32 {
        self.se.iter().sum()
    }

    pub fn sw_total(&self) -> u32 {
        self.sw.iter().sum()
    }

    pub fn v_total(&self) -> u32 {
        self.v.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn eq1() -> Asm {
        Asm::new(&[
            [0, 0, 0, 1, 0],
            [0, 0, 1, 0, 0],
            [0, 1, 0, -1, 1],
            [1, -1, 0, 1, 0],
            [0, 1, 0, 0, 0],
        ])
        .unwrap()
    }

    #[test]
    fn validates_examples() {
        assert_eq!(eq1().n(), 5);
        assert_eq!(Asm::new(&[[1i64]]).unwrap().n(), 1);
        assert_eq!(
            Asm::new(&[[1i64, 0], [1, 0]]),
            Err(AsmError::RowColumnConstraintViolated(Line::Column(1)))
        );
        assert_eq!(Asm::new(&[vec![1i64, 0], vec![0]]), Err(AsmError::NotSquare));
        assert_eq!(Asm::new::<[i64; 0]>(&[]), Err(AsmError::NotSquare));
        assert_eq!(
            Asm::new(&[[2i64]]),
            Err(AsmError::EntryOutOfRange {
                row: 1,
                col: 1,
                value: 2
            })
        );
        assert_eq!(
            Asm::new(&[[1i64, 0, 0], [0, 1, 0], [0, 1, 1]]),
            Err(AsmError::RowColumnConstraintViolated(Line::Row(3)))
        );
    }

    #[test]
    fn column_sums_examples() {
        let want: Vec<Vec<u8>> = vec![
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 1, 1, 0],
            vec![0, 1, 1, 0, 1],
            vec![1, 0, 1, 1, 1],
            vec![1, 1, 1, 1, 1],
        ];
        assert_eq!(eq1().column_sums(), want);
        assert_eq!(Asm::from_column_sums(&want).unwrap(), eq1());
        assert_eq!(
            Asm::from_column_sums(&[[1u8, 1], [1, 1]]),
            Err(AsmError::RowColumnConstraintViolated(Line::Row(1)))
        );
        let anti = Asm::new(&[[0i64, 1], [1, 0]]).unwrap();
        assert_eq!(anti.column_sums(), vec![vec![0, 1], vec![1, 1]]);
        let id = Asm::identity(4).column_sums();
        for (i, r) in id.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                assert_eq!(v, u8::from(j <= i));
            }
        }
    }

    #[test]
    fn cmt_of_eq1() {
        let c = eq1().to_cmt();
        let want = [
            vec![4],
            vec![3, 4],
            vec![2, 3, 5],
            vec![1, 3, 4, 5],
            vec![1, 2, 3, 4, 5],
        ];
        assert_eq!(c.rows(), &want[..]);
        assert_eq!(c.to_asm().unwrap(), eq1());
        assert_eq!(
            Asm::identity(3).to_cmt().rows(),
            &[vec![1], vec![1, 2], vec![1, 2, 3]][..]
        );
        assert_eq!(
            Cmt::new(vec![vec![1], vec![1, 2]]).unwrap().to_asm().unwrap(),
            Asm::identity(2)
        );
    }

    #[test]
    fn invalid_cmts() {
        assert!(Cmt::new(vec![vec![3], vec![1, 2]]).is_err());
        assert!(Cmt::new(vec![vec![1], vec![2, 1]]).is_err());
        assert!(Cmt::new(vec![vec![1], vec![1, 3]]).is_err());
        let general = Cmt::with_any_bottom(vec![vec![2], vec![1, 3]]).unwrap();
        assert!(matches!(general.to_asm(), Err(AsmError::InvalidCmt(_))));
    }

    /// Classifies vertices straight from an arrow picture: `horiz[i]` lists the
    /// n+1 horizontal arrows of row i (`R`/`L`), `vert[i]` the n vertical
    /// arrows below row i (`U`/`D`, level 0 is the top boundary).
    fn types_from_arrows(horiz: &[&str], vert: &[&str]) -> Vec<Vec<VertexType>> {
        let n = horiz.len();
        let h: Vec<Vec<char>> = horiz.iter().map(|r| r.chars().collect()).collect();
        let v: Vec<Vec<char>> = vert.iter().map(|r| r.chars().collect()).collect();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let north = v[i][j] == 'D';
                        let south = v[i + 1][j] == 'U';
                        let west = h[i][j] == 'R';
                        let east = h[i][j + 1] == 'L';
                        match (north, south, west, east) {
                            (false, false, true, true) => VertexType::H,
                            (true, true, false, false) => VertexType::V,
                            (false, true, false, true) => VertexType::NW,
                            (false, true, true, false) => VertexType::NE,
                            (true, false, false, true) => VertexType::SW,
                            (true, false, true, false) => VertexType::SE,
                            _ => panic!("not an ice configuration"),
                        }
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn ice_grid_of_eq1() {
        // the arrow picture of the example matrix, transcribed
        let horiz = ["RRRRLL", "RRRLLL", "RRLLRL", "RLRRLL", "RRLLLL"];
        let vert = ["UUUUU", "UUUDU", "UUDDU", "UDDUD", "DUDDD", "DDDDD"];
        let g = eq1().ice_grid();
        assert_eq!(g.types(), &types_from_arrows(&horiz, &vert)[..]);
        assert_eq!(g.get(3, 4), VertexType::V);
        assert_eq!(g.get(4, 2), VertexType::V);
        assert_eq!(g.count(VertexType::H), eq1().count(1));
        assert_eq!(g.count(VertexType::V), eq1().count(-1));
        assert_eq!(Asm::identity(1).ice_grid().get(1, 1), VertexType::H);
    }

    #[test]
    fn vertex_stats_of_eq1() {
        let st = eq1().vertex_stats();
        // entry-type classification of the triangle rows 4 / 3 4 / 2 3 5 / 1 3 4 5
        assert_eq!(st.se, vec![1, 0, 1, 0, 0]);
        assert_eq!(st.sw, vec![0, 0, 2, 2, 2]);
        assert_eq!(st.v, vec![0, 1, 0, 1, 0]);
        assert_eq!(st.v_total(), 2);
        assert_eq!(eq1().ice_grid().vertex_stats(), st);
    }

    #[test]
    fn identity_stats() {
        for n in 1..=6 {
            let st = Asm::identity(n).vertex_stats();
            let want: Vec<u32> = (1..=n as u32).map(|i| n as u32 - i).collect();
            assert_eq!(st.se, want);
            assert!(st.sw.iter().chain(&st.v).all(|&c| c == 0));
        }
    }

    #[test]
    fn json_shapes() {
        let s = serde_json::to_string(&Asm::identity(2)).unwrap();
        assert_eq!(s, r#"{"n":2,"rows":[[1,0],[0,1]]}"#);
        let bad: Result<Asm, _> = serde_json::from_str(r#"{"n":2,"rows":[[1,0],[1,0]]}"#);
        assert!(bad.is_err());
        let g = serde_json::to_string(&Asm::identity(1).ice_grid()).unwrap();
        assert_eq!(g, r#"{"n":1,"types":[["H"]]}"#);
        let c: Cmt = serde_json::from_str(r#"{"n":2,"rows":[[2],[1,2]]}"#).unwrap();
        assert_eq!(c.to_asm().unwrap().get(1, 2), 1);
    }

    /// Direct definition: nonzero entries alternate starting and ending with +1.
    fn alternates(line: &[i64]) -> bool {
        let nz: Vec<i64> = line.iter().copied().filter(|&v| v != 0).collect();
        !nz.is_empty() && nz[0] == 1 && *nz.last().unwrap() == 1 && nz.windows(2).all(|w| w[0] == -w[1])
    }

    proptest! {
        #[test]
        fn prefix_sum_criterion_matches_definition(
            (n, cells) in (1usize..=4).prop_flat_map(|n| (Just(n), prop::collection::vec(-1i64..=1, n * n)))
        ) {
            let rows: Vec<Vec<i64>> = cells.chunks(n).map(|c| c.to_vec()).collect();
            let direct = rows.iter().all(|r| alternates(r))
                && (0..n).all(|j| alternates(&rows.iter().map(|r| r[j]).collect::<Vec<_>>()));
            prop_assert_eq!(Asm::new(&rows).is_ok(), direct);
        }
    }
}
