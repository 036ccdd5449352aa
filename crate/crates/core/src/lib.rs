//! Algorithms on signed graphs.
//!
//! A signed graph is an undirected graph whose edges carry a sign. This crate
//! provides balance testing with certificates, shortest negative cycles,
//! exact balanced colorings, the Kneser and Schrijver signed graph families,
//! obstruction-based peel coloring, a checkable certificate for short negative
//! cycles in balanced 3-chromatic graphs, and an exhaustive search for small
//! extremal signed graphs.
//!
//! ```
//! use signed_graphs::{Sign, SignedGraph};
//!
//! let triangle = SignedGraph::new(3, [
//!     (0, 1, Sign::Negative),
//!     (1, 2, Sign::Negative),
//!     (0, 2, Sign::Negative),
//! ]).unwrap();
//! assert!(!triangle.is_balanced().is_balanced());
//! assert_eq!(triangle.negative_girth().length(), Some(3));
//! ```

pub mod balance;
pub mod bounds;
pub mod budget;
pub mod canon;
pub mod cert;
pub mod coloring;
pub mod cover;
pub mod distance;
mod dsu;
pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod kneser;
pub mod kst;
pub mod mycielski;
pub mod plain;
pub mod search;

pub use balance::{BalanceResult, NegativeCycle, SwitchingAssignment};
pub use budget::Budget;
pub use cover::Girth;
pub use error::{Error, Result};
pub use graph::{Edge, EdgeState, Sign, SignedGraph};
pub use plain::PlainGraph;
