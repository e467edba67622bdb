//! Spanning trees of the fan graph `F_n` in a pivot Gray code order.
//!
//! Consecutive trees in the listing differ by removing one edge and adding
//! another that shares an endpoint with it. The crate provides
//!
//! * [`fan`]: the graph, tree representation, pivot moves and text/bit formats;
//! * [`greedy`]: the greedy rule that defines the listing;
//! * [`recursive`]: a constant-amortized-time, linear-space generator of the
//!   same listing, as a push-style sink or a pull-style stream;
//! * [`rank`]: closed-form counting and linear-time rank/unrank;
//! * [`oracle`]: brute-force enumeration and property checks;
//! * [`cli`]: the `fan-pivot` command-line tool.
//!
//! ```
//! use fan_pivot::fan::FanDims;
//! use fan_pivot::recursive::{list_stream, Direction};
//!
//! let dims = FanDims::new(4).unwrap();
//! let trees: Vec<String> = list_stream(dims, Direction::Forward)
//!     .snapshots()
//!     .map(|(_, t)| t.to_text())
//!     .collect();
//! assert_eq!(trees.len(), 8);
//! assert_eq!(trees[0], "2-3,3-4,2-inf");
//! ```
//!
//! Runnable examples live in `examples/`; see the README for the list.

pub mod cli;
pub mod error;
pub mod fan;
pub mod greedy;
pub mod oracle;
pub mod rank;
pub mod recursive;

pub use error::{Error, Result};
pub use fan::{Edge, FanDims, PivotMove, SpanningTree, Vertex};
pub use rank::RankInt;
