//! Alternating sign matrices, oriented monotone triangles and tournaments.
//!
//! The central object is [`Triangle`], a triangular array whose entries are
//! numerals, `x`/`y` symbols or `a`/`b` edge symbols. Oriented monotone
//! triangles (alternating sign matrices with an orientation on every `-1`)
//! and tournaments are both triangles of this kind, and
//! [`bijection::phi`] / [`bijection::psi`] move between them one pair of
//! rows at a time while preserving the weight monomial.
//!
//! ```
//! use asm_tournaments::{bijection, Triangle};
//!
//! let o = Triangle::from_tokens(&[vec!["y:2"], vec!["n:1", "n:2"]]).unwrap();
//! let (t, _trace) = bijection::phi(&o).unwrap();
//! assert_eq!(t.to_string(), "1<2");
//! assert_eq!(t.weight(), o.weight());
//! ```

pub mod asm;
pub mod bijection;
pub mod enumeration;
pub mod poly;
pub mod tournament;
pub mod triangle;

pub use asm::{Asm, AsmError, Cmt, EntryType, IceGrid, VertexStats, VertexType};
pub use bijection::{phi, phi_any_order, phi_s, psi, psi_s, BijectionError, Trace};
pub use enumeration::{BottomRow, EnumerationError};
pub use poly::{Monomial, PolyError, Polynomial};
pub use tournament::{Direction, Tournament, TournamentError};
pub use triangle::{Entry, Ranking, Triangle, TriangleError};
