//! Common intervals of two sequences over a finite alphabet.
//!
//! A common interval is a set of symbols that occurs as the content of a
//! contiguous block in both sequences. The search decomposes each sequence
//! into its dominating orders (permutations over subsets of the alphabet),
//! streams those orders pairwise, and runs a guided stack search per pair,
//! so the total work scales with the domination numbers q1, q2 of the two
//! inputs rather than with n1·n2.
//!
//! Entry point: [`pipeline::find_common_intervals`]. Every production path
//! has a brute-force counterpart in [`oracle`] used by tests and the CLI
//! `verify` mode.

pub mod counters;
pub mod domination;
pub mod guided;
pub mod model;
pub mod oracle;
pub mod pipeline;
pub mod retrieve;
pub mod rmq;
pub mod synth;
pub mod uf;

pub use counters::Counters;
pub use model::{Error, Location, OccIndex, OrderSlice, PositionMap, Pos, Sequence, Sym, TokenMap};
pub use pipeline::{Coords, LocationsMode, ResultRecord, SearchOptions, Stats};
