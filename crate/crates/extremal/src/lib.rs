//! Combinatorics of extremal assignments on stable labeled trees.
//!
//! An *extremal assignment* of order `n` is a rule that marks, on every
//! stable `n`-labeled tree, a proper subset of the internal vertices, in a
//! way that is compatible with all contractions of trees.  Every such rule
//! is determined by a finite antichain of set partitions of `{1..n}` (its
//! *generators*), and this crate computes with that generator form:
//!
//! * [`partitions`] — set partitions and integer partitions of `{1..n}`
//!   with the refinement order, corruptions, tight common upper bounds and
//!   equal-sum part replacements;
//! * [`trees`] — stable `n`-labeled trees, contraction, enumeration, basic
//!   partitions and a text grammar;
//! * [`assignments`] — assignments in generator form: membership,
//!   extremality checking, smallest-containing closure, unions and
//!   intersections, equivalence, restriction, the weight / unlabeled-vertex
//!   / degree-function families, and brute-force oracles;
//! * [`smooth`] — contraction indicators, simple intersecting families and
//!   weight-data feasibility;
//! * [`invariant`] — relabeling-invariant assignments as families of
//!   integer partitions;
//! * [`geometry`] — boundary divisor classes, F-curves, the intersection
//!   pairing and F-nef feasibility certificates;
//! * [`toric`] — graph tubes, co-transitivity and the complete-multipartite
//!   modularity criterion;
//! * [`ratlp`] — exact rational linear feasibility with replayable
//!   witnesses and infeasibility certificates.
//!
//! All arithmetic that feeds a reported result is exact (big rationals);
//! no floating point is used anywhere.

pub mod error;
pub mod par;

pub mod partitions;
pub mod ratlp;
pub mod trees;

pub mod assignments;
pub mod geometry;
pub mod invariant;
pub mod smooth;
pub mod toric;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
