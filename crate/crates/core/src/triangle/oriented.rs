//! Oriented monotone triangles: a monotone triangle with a left/right
//! orientation on every entry above the bottom row.

use thiserror::Error;

use super::{Entry, Triangle};
use crate::asm::{Cmt, EntryType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// Shown as `x_j`.
    Right,
    /// Shown as `y_j`.
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientError {
    #[error("triangle has a/b entries above the bottom row")]
    NotPureX,
    #[error("triangle is not admissible")]
    NotAdmissible,
    #[error("orientation grid does not match the triangle shape")]
    ShapeMismatch,
    #[error("entry at row {row}, position {position} cannot take that orientation")]
    ForcedOrientation { row: usize, position: usize },
}

/// An admissible pure-X triangle seen as a monotone triangle plus orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OcmtView {
    triangle: Triangle,
    cmt: Cmt,
    orientations: Vec<Vec<Orientation>>,
}

impl OcmtView {
    pub fn new(t: &Triangle) -> Result<Self, OrientError> {
        if !t.is_pure_x() {
            return Err(OrientError::NotPureX);
        }
        if !t.is_admissible() {
            return Err(OrientError::NotAdmissible);
        }
        let n = t.n();
        let mut rows = Vec::with_capacity(n);
        let mut orientations = Vec::with_capacity(n - 1);
        for k in 1..n {
            let (vals, ors) = t
                .row(k)
                .iter()
                .map(|e| match *e {
                    Entry::X(i) => (i, Orientation::Right),
                    Entry::Y(j) => (j, Orientation::Left),
                    _ => unreachable!("pure X row"),
                })
                .unzip();
            rows.push(vals);
            orientations.push(ors);
        }
        rows.push(t.bottom());
        // admissibility of a pure-X triangle makes the stripped array monotone
        let cmt = Cmt::with_any_bottom(rows).expect("admissible pure-X triangle strips to a monotone triangle");
        Ok(OcmtView {
            triangle: t.clone(),
            cmt,
            orientations,
        })
    }

    pub fn triangle(&self) -> &Triangle {
        &self.triangle
    }

    /// The underlying monotone triangle with orientations stripped.
    pub fn cmt(&self) -> &Cmt {
        &self.cmt
    }

    /// Orientations of rows `1..n` (index 0 is row 1).
    pub fn orientations(&self) -> &[Vec<Orientation>] {
        &self.orientations
    }

    /// Rebuilds the oriented triangle from a monotone triangle and an
    /// orientation per non-bottom entry, rejecting orientations that
    /// contradict a forced entry type.
    pub fn orient(cmt: &Cmt, orientations: &[Vec<Orientation>]) -> Result<Triangle, OrientError> {
        let n = cmt.n();
        if orientations.len() != n - 1 || orientations.iter().enumerate().any(|(k, r)| r.len() != k + 1) {
            return Err(OrientError::ShapeMismatch);
        }
        let mut rows: Vec<Vec<Entry>> = Vec::with_capacity(n);
        for k in 1..n {
            let mut row = Vec::with_capacity(k);
            for p in 1..=k {
                let o = orientations[k - 1][p - 1];
                let forced = match cmt.entry_type(k, p) {
                    EntryType::Southeast => Some(Orientation::Right),
                    EntryType::Southwest => Some(Orientation::Left),
                    EntryType::Vertical => None,
                };
                if forced.is_some_and(|f| f != o) {
                    return Err(OrientError::ForcedOrientation { row: k, position: p });
                }
                let v = cmt.row(k)[p - 1];
                row.push(match o {
                    Orientation::Right => Entry::X(v),
                    Orientation::Left => Entry::Y(v),
                });
            }
            rows.push(row);
        }
        rows.push(cmt.bottom().iter().map(|&v| Entry::Num(v)).collect());
        Ok(Triangle::from_rows_unchecked(rows))
    }
}

impl Triangle {
    pub fn as_oriented_cmt(&self) -> Result<OcmtView, OrientError> {
        OcmtView::new(self)
    }
}

/// All `2^r` oriented triangles over `c`, where `r` counts the vertical
/// (strictly between) entries. Free entries are taken in reading order with
/// the first one most significant and `x` before `y`.
pub fn orientations_of(c: &Cmt) -> Vec<Triangle> {
    let n = c.n();
    let mut base: Vec<Vec<Entry>> = Vec::with_capacity(n);
    let mut free = Vec::new();
    for k in 1..n {
        let row = (1..=k)
            .map(|p| {
                let v = c.row(k)[p - 1];
                match c.entry_type(k, p) {
                    EntryType::Southeast => Entry::X(v),
                    EntryType::Southwest => Entry::Y(v),
                    EntryType::Vertical => {
                        free.push((k - 1, p - 1));
                        Entry::X(v)
                    }
                }
            })
            .collect();
        base.push(row);
    }
    base.push(c.bottom().iter().map(|&v| Entry::Num(v)).collect());
    let r = free.len();
    (0..1u64 << r)
        .map(|mask| {
            let mut rows = base.clone();
            for (b, &(k, p)) in free.iter().enumerate() {
                if mask >> (r - 1 - b) & 1 == 1 {
                    if let Entry::X(v) = rows[k][p] {
                        rows[k][p] = Entry::Y(v);
                    }
                }
            }
            let t = Triangle::from_rows_unchecked(rows);
            debug_assert!(
                t.is_admissible(),
                "orientation of a monotone triangle must be admissible"
            );
            t
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::Asm;
    use crate::triangle::fixtures::{eq7, eq8};

    fn eq5() -> Cmt {
        Cmt::new(vec![
            vec![4],
            vec![3, 4],
            vec![2, 3, 5],
            vec![1, 3, 4, 5],
            vec![1, 2, 3, 4, 5],
        ])
        .unwrap()
    }

    #[test]
    fn view_of_eq7() {
        let v = eq7().as_oriented_cmt().unwrap();
        assert_eq!(v.cmt(), &eq5());
        assert_eq!(v.orientations()[0], vec![Orientation::Left]);
        assert_eq!(OcmtView::orient(v.cmt(), v.orientations()).unwrap(), eq7());
        assert_eq!(eq8().as_oriented_cmt(), Err(OrientError::NotPureX));
    }

    #[test]
    fn not_admissible_view() {
        let t = Triangle::from_tokens(&[vec!["x:2"], vec!["n:1", "n:2"]]).unwrap();
        assert_eq!(t.as_oriented_cmt(), Err(OrientError::NotAdmissible));
    }

    #[test]
    fn forced_orientation_rejected() {
        let c = Cmt::new(vec![vec![1], vec![1, 2]]).unwrap();
        assert_eq!(
            OcmtView::orient(&c, &[vec![Orientation::Left]]),
            Err(OrientError::ForcedOrientation { row: 1, position: 1 })
        );
        assert_eq!(OcmtView::orient(&c, &[]), Err(OrientError::ShapeMismatch));
    }

    #[test]
    fn orientations_of_eq5() {
        let all = orientations_of(&eq5());
        assert_eq!(all.len(), 4);
        assert_eq!(all[1], eq7());
        assert!(all.iter().all(|t| t.is_admissible() && t.is_pure_x()));
    }

    #[test]
    fn identity_has_one_orientation() {
        for n in 1..=5 {
            let all = orientations_of(&Asm::identity(n).to_cmt());
            assert_eq!(all.len(), 1);
            assert!((1..n).all(|k| all[0].row(k).iter().all(|e| matches!(e, Entry::X(_)))));
        }
    }
}
