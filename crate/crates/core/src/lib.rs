//! Identifying a hidden antichain over `[n]` with superset queries.
//!
//! A query is a set `Q ⊆ [n]`; the answer is YES when `Q` contains some
//! member of the hidden `k`-member antichain. Equivalently, the answers are the
//! values of a monotone Boolean function whose minimal DNF has `k` terms.
//!
//! The crate provides
//! * [`set`]: bitmask sets, families, antichains and minimal covers;
//! * [`oracle`]: the truthful answerer and the brute-force consistency referee;
//! * [`nonadaptive`]: optimal one-shot query families and their decoders;
//! * [`adaptive`]: the element-removal subroutine, the minimal-cover solver,
//!   the `2n`-query solver for pairs and an exact minimax referee;
//! * [`adversary`]: executable lower-bound strategies and confusion pairs;
//! * [`combinatorics`]: counting referees for minimal covers and antichains.

pub mod adaptive;
pub mod adversary;
pub mod combinatorics;
mod error;
pub mod nonadaptive;
pub mod oracle;
pub mod sample;
pub mod set;

pub use error::{Error, Result};
pub use oracle::{answer_query, OracleState, QueryOracle, Transcript};
pub use set::{Antichain, SetFamily, SubsetMask};

/// Version tag carried by every JSON document the CLI emits.
pub const SCHEMA_VERSION: u32 = 1;
