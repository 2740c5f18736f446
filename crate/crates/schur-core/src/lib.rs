//! Exact symbolic engine for Schur functions realized as Jacobi-Trudi
//! determinants, the paired box matrix built from two such determinants,
//! Plucker relations on its maximal minors, the bilinear discrete Hirota
//! identities those relations induce on Schur functions, and the
//! Littlewood-Richardson rule that governs the same products
//! combinatorially.
//!
//! The crate is `no_std` + `alloc`: every computation is exact (BigInt
//! coefficients, no floats) and independent of any host facilities.

#![no_std]

#[macro_use]
extern crate alloc;

pub mod hirota;
pub mod jt;
pub mod lr;
pub mod matrix;
pub mod partition;
pub mod plucker;
pub mod poly;
mod util;

pub use hirota::{
    column_seeds, determinant_seeds, main_identity, quantum_identity, quantum_rectangle_ladder,
    required_seeds, verify_identity, EvolveError, Evolver, HirotaTerm, Mismatch, Provenance,
    QState, TermKind, VerifyReport,
};
pub use jt::{
    box_matrix, jt_matrix, schur_decompose, schur_of, schur_plain, schur_quantum, schur_skew,
    BoxFamily, BoxMatrix, JtFamily, MinorForm,
};
pub use lr::{
    act, conjecture_check, default_max_entry, enumerate_ssyt, lr_multiply, rectangle_bijections,
    ActionTrace, ColumnWord, ConjectureReport, RectangleCase, Tableau,
};
pub use matrix::{RowLabel, SymMatrix};
pub use partition::{
    CornerCoords, Interval, IntervalChain, NoSuchColumn, PaddedPartition, ParseError, Partition,
};
pub use plucker::{
    box_relation, generate, verify, BoxRelation, BoxTerm, BoxTermKind, PluckerRelation,
    PluckerTerm, RelationFamily,
};
pub use poly::{Mode, Monomial, Polynomial, Symbol};
