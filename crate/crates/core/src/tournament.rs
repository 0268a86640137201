//! Tournaments on `{1..n}` and their triangle encoding.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::Monomial;
use crate::triangle::{Entry, Triangle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TournamentError {
    #[error("order must be positive")]
    ZeroOrder,
    #[error("expected {expected} edges, got {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("edge {index} should be pair ({i},{j})")]
    PairOutOfOrder { index: usize, i: u32, j: u32 },
    #[error("triangle has x/y entries above the bottom row")]
    NotPureV,
    #[error("triangle is not admissible")]
    NotAdmissible,
    #[error("triangle bottom row is not 1..n")]
    NonStandardBottomRow,
}

/// Orientation of the pair `(i, j)` with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    /// `i → j`
    #[serde(rename = "fwd")]
    Forward,
    /// `j → i`, an upset
    #[serde(rename = "bwd")]
    Backward,
}

/// Pairs of `{1..n}` in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (u32, u32)> {
    let n = n as u32;
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// Position of `(i, j)`, `i < j`, in [`pairs`].
pub fn pair_index(n: usize, i: u32, j: u32) -> usize {
    let (i, j) = (i as usize, j as usize);
    // pairs starting below i, then offset within row i
    (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
}

pub fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tournament {
    n: usize,
    dirs: Vec<Direction>,
}

impl Tournament {
    /// Directions given in lexicographic pair order.
    pub fn new(n: usize, dirs: Vec<Direction>) -> Result<Self, TournamentError> {
        if n == 0 {
            return Err(TournamentError::ZeroOrder);
        }
        if dirs.len() != binomial2(n) {
            return Err(TournamentError::WrongEdgeCount {
                expected: binomial2(n),
                found: dirs.len(),
            });
        }
        Ok(Tournament { n, dirs })
    }

    /// Builds from directed edges `from → to`; every pair must appear once.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, TournamentError> {
        if n == 0 {
            return Err(TournamentError::ZeroOrder);
        }
        let mut dirs: Vec<Option<Direction>> = vec![None; binomial2(n)];
        for &(from, to) in edges {
            let (i, j, d) = if from < to {
                (from, to, Direction::Forward)
            } else {
                (to, from, Direction::Backward)
            };
            if i == 0 || i == j || j as usize > n {
                return Err(TournamentError::WrongEdgeCount {
                    expected: binomial2(n),
                    found: edges.len(),
                });
            }
            let idx = pair_index(n, i, j);
            if dirs[idx].replace(d).is_some() {
                return Err(TournamentError::PairOutOfOrder { index: idx, i, j });
            }
        }
        let found = dirs.iter().filter(|d| d.is_some()).count();
        let dirs: Option<Vec<Direction>> = dirs.into_iter().collect();
        match dirs {
            Some(dirs) => Tournament::new(n, dirs),
            None => Err(TournamentError::WrongEdgeCount {
                expected: binomial2(n),
                found,
            }),
        }
    }

    pub fn all_forward(n: usize) -> Self {
        Tournament {
            n,
            dirs: vec![Direction::Forward; binomial2(n)],
        }
    }

    pub fn all_backward(n: usize) -> Self {
        Tournament {
            n,
            dirs: vec![Direction::Backward; binomial2(n)],
        }
    }

    /// The tournament whose lexicographic direction bits spell `code`, first
    /// pair most significant, `Forward = 0`.
    pub fn from_code(n: usize, code: u64) -> Self {
        let m = binomial2(n);
        let dirs = (0..m)
            .map(|p| {
                if code >> (m - 1 - p) & 1 == 1 {
                    Direction::Backward
                } else {
                    Direction::Forward
                }
            })
            .collect();
        Tournament { n, dirs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn direction(&self, i: u32, j: u32) -> Direction {
        self.dirs[pair_index(self.n, i, j)]
    }

    /// `(i, j, direction)` in lexicographic pair order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32, Direction)> + '_ {
        pairs(self.n).zip(&self.dirs).map(|((i, j), &d)| (i, j, d))
    }

    /// Edges as `(from, to)`.
    pub fn arcs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges().map(|(i, j, d)| match d {
            Direction::Forward => (i, j),
            Direction::Backward => (j, i),
        })
    }

    /// Number of edges pointing from a larger to a smaller vertex.
    pub fn upsets(&self) -> usize {
        self.dirs.iter().filter(|&&d| d == Direction::Backward).count()
    }

    /// `ω(i)` for `i = 1..n` (index `i - 1`).
    pub fn out_degrees(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.n];
        for (from, _) in self.arcs() {
            out[from as usize - 1] += 1;
        }
        out
    }

    /// Product of edge weights: `i → j` weighs `x_i` when `i < j` and `y_i`
    /// when `i > j`.
    pub fn weight(&self) -> Monomial {
        let mut m = Monomial::one(self.n);
        for (from, to) in self.arcs() {
            if from < to {
                m.mul_x(from as usize);
            } else {
                m.mul_y(from as usize);
            }
        }
        m
    }

    /// Row `k` holds the pairs with difference `n - k` in ascending order;
    /// forward pairs become `a_ij`, backward ones `b_ij`.
    pub fn to_triangle(&self) -> Triangle {
        let n = self.n;
        let mut rows: Vec<Vec<Entry>> = (1..n)
            .map(|k| {
                let t = (n - k) as u32;
                (1..=k as u32)
                    .map(|i| match self.direction(i, i + t) {
                        Direction::Forward => Entry::A(i, i + t),
                        Direction::Backward => Entry::B(i, i + t),
                    })
                    .collect()
            })
            .collect();
        rows.push((1..=n as u32).map(Entry::Num).collect());
        Triangle::from_rows_unchecked(rows)
    }

    /// Inverse of [`Tournament::to_triangle`].
    pub fn from_triangle(t: &Triangle) -> Result<Self, TournamentError> {
        if !t.is_pure_v() {
            return Err(TournamentError::NotPureV);
        }
        if !t.is_standard() {
            return Err(TournamentError::NonStandardBottomRow);
        }
        if !t.is_admissible() {
            return Err(TournamentError::NotAdmissible);
        }
        let n = t.n();
        let mut dirs = vec![Direction::Forward; binomial2(n)];
        for k in 1..n {
            for e in t.row(k) {
                let (i, j, d) = match *e {
                    Entry::A(i, j) => (i, j, Direction::Forward),
                    Entry::B(i, j) => (i, j, Direction::Backward),
                    _ => unreachable!("pure V row"),
                };
                dirs[pair_index(n, i, j)] = d;
            }
        }
        Tournament::new(n, dirs)
    }
}

/// Space-separated arrow tokens in pair order: `1>5` for the edge `1 → 5`,
/// `1<4` for `4 → 1`.
impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .edges()
            .map(|(i, j, d)| match d {
                Direction::Forward => format!("{i}>{j}"),
                Direction::Backward => format!("{i}<{j}"),
            })
            .collect();
        f.write_str(&toks.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    pair: [u32; 2],
    dir: Direction,
}

#[derive(Serialize, Deserialize)]
struct TournamentJson {
    n: usize,
    edges: Vec<EdgeJson>,
}

impl Serialize for Tournament {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TournamentJson {
            n: self.n,
            edges: self.edges().map(|(i, j, dir)| EdgeJson { pair: [i, j], dir }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tournament {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = TournamentJson::deserialize(deserializer)?;
        if raw.edges.len() != binomial2(raw.n) {
            return Err(serde::de::Error::custom(TournamentError::WrongEdgeCount {
                expected: binomial2(raw.n),
                found: raw.edges.len(),
            }));
        }
        for (index, ((i, j), e)) in pairs(raw.n).zip(&raw.edges).enumerate() {
            if e.pair != [i, j] {
                return Err(serde::de::Error::custom(TournamentError::PairOutOfOrder {
                    index,
                    i,
                    j,
                }));
            }
        }
        Tournament::new(raw.n, raw.edges.into_iter().map(|e| e.dir).collect()).map_err(serde::de::Error::custom)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::eq8_tournament;
    use super::*;
    use crate::triangle::fixtures::{eq7, eq8};
    use proptest::prelude::*;

    #[test]
    fn pair_indexing() {
        for n in 1..=7 {
            for (k, (i, j)) in pairs(n).enumerate() {
                assert_eq!(pair_index(n, i, j), k);
            }
        }
    }

    #[test]
    fn eq8_encoding() {
        let t = eq8_tournament();
        assert_eq!(t.to_triangle(), eq8());
        assert_eq!(Tournament::from_triangle(&eq8()).unwrap(), t);
        assert_eq!(Tournament::from_triangle(&eq7()), Err(TournamentError::NotPureV));
    }

    #[test]
    fn small_encodings() {
        let t = Tournament::all_forward(3).to_triangle();
        let want = Triangle::from_tokens(&[vec!["a:1:3"], vec!["a:1:2", "a:2:3"], vec!["n:1", "n:2", "n:3"]]).unwrap();
        assert_eq!(t, want);
        let single = Tournament::all_forward(1);
        assert_eq!(single.to_triangle().n(), 1);
        assert_eq!(Tournament::from_triangle(&single.to_triangle()).unwrap(), single);
    }

    #[test]
    fn from_triangle_errors() {
        let skewed =
            Triangle::from_tokens(&[vec!["a:1:4"], vec!["a:1:2", "a:2:4"], vec!["n:1", "n:2", "n:4"]]).unwrap();
        assert_eq!(
            Tournament::from_triangle(&skewed),
            Err(TournamentError::NonStandardBottomRow)
        );
        let swapped =
            Triangle::from_tokens(&[vec!["a:1:3"], vec!["a:2:3", "a:1:2"], vec!["n:1", "n:2", "n:3"]]).unwrap();
        assert_eq!(Tournament::from_triangle(&swapped), Err(TournamentError::NotAdmissible));
    }

    #[test]
    fn statistics() {
        let t = eq8_tournament();
        // b-entries of the triangle: b12 b23 b13 b24 b35 b14 b25
        assert_eq!(t.upsets(), 7);
        assert_eq!(t.out_degrees(), vec![1, 1, 3, 3, 2]);
        assert_eq!(t.weight(), eq7().weight());
        assert_eq!(Tournament::all_forward(6).upsets(), 0);
        assert_eq!(Tournament::all_backward(6).upsets(), 15);
        assert_eq!(Tournament::all_forward(4).out_degrees(), vec![3, 2, 1, 0]);
        assert_eq!(Tournament::all_backward(4).out_degrees(), vec![0, 1, 2, 3]);
        let mut x1sq_x2 = Monomial::one(3);
        x1sq_x2.mul_x(1);
        x1sq_x2.mul_x(1);
        x1sq_x2.mul_x(2);
        assert_eq!(Tournament::all_forward(3).weight(), x1sq_x2);
    }

    #[test]
    fn exhaustive_order_four() {
        for code in 0..64 {
            let t = Tournament::from_code(4, code);
            let tri = t.to_triangle();
            assert!(tri.is_admissible());
            assert_eq!(Tournament::from_triangle(&tri).unwrap(), t);
            assert_eq!(tri.weight(), t.weight());
            // y_i := λ x_i turns the weight into λ^U Π x_i^ω(i)
            let s = t.weight().substitute_lambda();
            assert_eq!(s.lam_exp() as usize, t.upsets());
            assert_eq!(s.x_exp(), &t.out_degrees()[..]);
        }
    }

    #[test]
    fn display_and_json() {
        let t = Tournament::from_edges(3, &[(1, 2), (3, 1), (2, 3)]).unwrap();
        assert_eq!(t.to_string(), "1>2 1<3 2>3");
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(
            s,
            r#"{"n":3,"edges":[{"pair":[1,2],"dir":"fwd"},{"pair":[1,3],"dir":"bwd"},{"pair":[2,3],"dir":"fwd"}]}"#
        );
        assert_eq!(serde_json::from_str::<Tournament>(&s).unwrap(), t);
        let shuffled =
            r#"{"n":3,"edges":[{"pair":[1,3],"dir":"fwd"},{"pair":[1,2],"dir":"bwd"},{"pair":[2,3],"dir":"fwd"}]}"#;
        assert!(serde_json::from_str::<Tournament>(shuffled).is_err());
        assert!(Tournament::from_edges(3, &[(1, 2), (2, 1), (2, 3)]).is_err());
        assert!(Tournament::from_edges(3, &[(1, 2)]).is_err());
    }

    proptest! {
        #[test]
        fn triangle_roundtrip((n, code) in (1usize..=7).prop_flat_map(|n| (Just(n), 0u64..(1u64 << binomial2(n))))) {
            let t = Tournament::from_code(n, code);
            let tri = t.to_triangle();
            prop_assert!(tri.is_admissible());
            prop_assert_eq!(Tournament::from_triangle(&tri).unwrap(), t.clone());
            prop_assert_eq!(t.out_degrees().iter().sum::<u32>() as usize, binomial2(n));
        }
    }
}
