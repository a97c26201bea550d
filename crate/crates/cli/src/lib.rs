//! File formats and report assembly for the `specrad` binary.
//!
//! Lives as a library so the format parsers and report builders are
//! testable without spawning the binary.

pub mod formats;
pub mod report;
