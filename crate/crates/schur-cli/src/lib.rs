//! Rendering and sweep plumbing behind the `schur` binary.

pub mod report;
pub mod sweep;
