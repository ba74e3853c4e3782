//! Distance certificates, extremal-pair constructions, and diameter bounds
//! for Fibonacci-run graphs.
//!
//! The vertex set for length `n` consists of the binary strings `r` of
//! length `n` such that in `r·00` every maximal run of 1s is immediately
//! followed by a strictly longer run of 0s; two vertices are adjacent when
//! they differ in exactly one position. There are `F(n+2)` such strings
//! (Fibonacci numbers with `F(1) = F(2) = 1`), and the graph they form is
//! connected.
//!
//! Distances are at least the Hamming distance, and exceed it exactly when
//! *barriers* force detours: a barrier is a maximal solid run of 1s in one
//! string whose facing window in the other string — trimmed to the span
//! between its first and last 1 — still contains a 0. Summing a per-barrier
//! cost over both orientations yields a certified distance that this crate
//! verifies against breadth-first search on small graphs and uses to prove
//! lower bounds on the diameter that beat the long-conjectured value
//! `n − p` for infinitely many lengths.
//!
//! Modules:
//! * [`strings`] — run-constrained bit strings, enumeration, counting;
//! * [`graph`] — explicit graph construction and BFS oracles;
//! * [`barriers`] — barrier detection and the certified-distance formula;
//! * [`constructions`] — validated extremal-pair families;
//! * [`bounds`] — interval parameters, best certified bounds, tabulations.
//!
//! ```
//! use fibrun::barriers::distance_certified;
//! use fibrun::bounds::best_lower_bound;
//!
//! let report = best_lower_bound(91);
//! assert!(report.certified > report.conjectured);
//!
//! // The witness is an ordinary vertex pair; re-certify it from scratch.
//! let cert = distance_certified(&report.witness.u, &report.witness.v).unwrap();
//! assert_eq!(cert.certified_distance as u64, report.certified);
//! ```

pub mod barriers;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod strings;

pub use error::{Error, Result};
