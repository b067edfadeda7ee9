//! λ-fold relative Heffter arrays.
//!
//! The crate is organised around a pipeline: build or load a partially
//! filled array ([`array`], [`io`], [`construct`]), check it ([`verify`]),
//! pick row and column orderings ([`orderings`]), turn those into relative
//! difference families and cyclic cycle decompositions ([`decomp`]), and
//! finally realise the pair of decompositions as a face 2-colourable
//! embedding on an orientable surface ([`topology`]).
//!
//! Positions are 1-based `(row, column)` pairs throughout. Entries are
//! stored as signed integers exactly as written; reduction modulo `v`
//! happens only inside the checks that need it.

pub mod array;
pub mod construct;
pub mod decomp;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod orderings;
pub mod perm;
pub mod topology;
pub mod verify;

pub use array::{diagonal_cells, Cell, DiagSpec, HeffterParams, PFArray};
pub use construct::search::{Certificate, SearchBudget, SearchResult, SkeletonConstraint};
pub use decomp::{CycleGraph, DifferenceFamily, LineKind};
pub use error::{HeffterError, Result};
pub use io::ArrayDoc;
pub use orderings::{OrderingPair, Orientations, SearchOutcome};
pub use topology::{DirectedEdgeLabel, FaceColor, FaceSet, RotationSystem};
pub use verify::{Obstruction, VerificationReport, Violation};

/// Least non-negative residue of `x` modulo `v`.
#[inline]
pub fn residue(x: i64, v: usize) -> usize {
    x.rem_euclid(v as i64) as usize
}
