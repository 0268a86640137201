use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One cell of a triangle.
///
/// `A(i, j)` is the edge `i → j` and `B(i, j)` the edge `j → i` (always
/// `i < j`). `X(i)` is an outgoing edge from `i` to some larger vertex not yet
/// fixed, `Y(j)` one from `j` to a smaller vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Num(u32),
    X(u32),
    Y(u32),
    A(u32, u32),
    B(u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse triangle entry {0:?}")]
pub struct EntryParseError(pub String);

impl Entry {
    pub fn is_x_symbol(&self) -> bool {
        matches!(self, Entry::X(_) | Entry::Y(_))
    }

    pub fn is_v_symbol(&self) -> bool {
        matches!(self, Entry::A(..) | Entry::B(..))
    }

    /// `j - i` for `a_ij` / `b_ij`.
    pub fn difference(&self) -> Option<u32> {
        match *self {
            Entry::A(i, j) | Entry::B(i, j) => Some(j - i),
            _ => None,
        }
    }

    /// Trace label in the usual subscript notation: `x_3`, `b_{14}`, `a_{2,11}`.
    pub fn label(&self) -> String {
        let pair = |c: char, i: u32, j: u32| {
            if i < 10 && j < 10 {
                format!("{c}_{{{i}{j}}}")
            } else {
                format!("{c}_{{{i},{j}}}")
            }
        };
        let single = |c: char, i: u32| {
            if i < 10 {
                format!("{c}_{i}")
            } else {
                format!("{c}_{{{i}}}")
            }
        };
        match *self {
            Entry::Num(v) => v.to_string(),
            Entry::X(i) => single('x', i),
            Entry::Y(j) => single('y', j),
            Entry::A(i, j) => pair('a', i, j),
            Entry::B(i, j) => pair('b', i, j),
        }
    }
}

/// The JSON token form: `n:<v>`, `x:<i>`, `y:<j>`, `a:<i>:<j>`, `b:<i>:<j>`.
impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Num(v) => write!(f, "n:{v}"),
            Entry::X(i) => write!(f, "x:{i}"),
            Entry::Y(j) => write!(f, "y:{j}"),
            Entry::A(i, j) => write!(f, "a:{i}:{j}"),
            Entry::B(i, j) => write!(f, "b:{i}:{j}"),
        }
    }
}

impl FromStr for Entry {
    type Err = EntryParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || EntryParseError(s.to_string());
        let mut parts = s.split(':');
        let tag = parts.next().ok_or_else(err)?;
        let nums = parts
            .map(|p| {
                if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(err());
                }
                p.parse::<u32>().map_err(|_| err())
            })
            .collect::<Result<Vec<u32>, _>>()?;
        match (tag, nums.as_slice()) {
            ("n", &[v]) => Ok(Entry::Num(v)),
            ("x", &[i]) => Ok(Entry::X(i)),
            ("y", &[j]) => Ok(Entry::Y(j)),
            ("a", &[i, j]) => Ok(Entry::A(i, j)),
            ("b", &[i, j]) => Ok(Entry::B(i, j)),
            _ => Err(err()),
        }
    }
}
