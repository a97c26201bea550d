//! Exact spectral radii of the six standard matrices of graphs and
//! digraphs — adjacency, Laplacian, signless Laplacian, distance,
//! distance Laplacian, distance signless Laplacian — together with a
//! sharp row-support upper bound for nonnegative (and, via entrywise
//! moduli, arbitrary-sign) matrices, its twelve graph and digraph
//! specializations, and a property-testing harness that fuzzes the
//! inequality and equality claims.

// Indexed loops are the native idiom for the dense kernels here.
#![allow(clippy::needless_range_loop)]

pub mod bounds;
pub mod graphs;
pub mod harness;
pub mod linalg;
pub mod spectra;

pub use bounds::{BoundKind, BoundReport, BoundsError, DiagnosticVerdict, ExpressionValue, Tolerances};
pub use graphs::{Digraph, DistanceData, Graph, GraphClass, GraphError};
pub use linalg::{DenseMatrix, LinalgError, SolverMethod, SpectralResult};
pub use spectra::{MatrixKind, SpectraError};
