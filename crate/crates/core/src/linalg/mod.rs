//! Dense square matrices and spectral-radius solvers.
//!
//! Three independent routes to ρ(M) = max |λ| are provided:
//!
//! * [`spectral_radius_symmetric`] — cyclic Jacobi rotations, for symmetric input;
//! * [`spectral_radius_general`] — Householder reduction to upper Hessenberg
//!   followed by shifted QR iteration, for arbitrary real input (handles
//!   complex-conjugate eigenvalue pairs via 2×2 block extraction);
//! * [`spectral_radius_nonnegative`] — power iteration on M + I, for
//!   entrywise-nonnegative input (Perron–Frobenius route).
//!
//! Having three routes lets higher layers cross-validate every radius they
//! report.

mod jacobi;
mod power;
mod qr;

pub use jacobi::spectral_radius_symmetric;
pub use power::spectral_radius_nonnegative;
pub use qr::spectral_radius_general;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Convergence tolerance shared by all three solvers (relative to the
/// natural scale of the matrix; see each solver for the exact criterion).
pub const SOLVER_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("matrix dimension must be at least 1")]
    ZeroDimension,

    #[error("expected {expected} entries for an n x n matrix, got {actual}")]
    EntryCount { expected: usize, actual: usize },

    #[error("entry ({row},{col}) is not finite")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("matrix is not symmetric: |m[{row},{col}] - m[{col},{row}]| = {diff:e}")]
    NotSymmetric { row: usize, col: usize, diff: f64 },

    #[error("entry ({row},{col}) = {value} is negative")]
    NegativeEntry { row: usize, col: usize, value: f64 },

    #[error("{method} did not converge within {iterations} iterations")]
    NoConvergence { method: SolverMethod, iterations: usize },
}

/// Which solver produced a [`SpectralResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolverMethod {
    SymmetricJacobi,
    GeneralQr,
    PowerIteration,
}

impl std::fmt::Display for SolverMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self {
            SolverMethod::SymmetricJacobi => "symmetric-jacobi",
            SolverMethod::GeneralQr => "general-qr",
            SolverMethod::PowerIteration => "power-iteration",
        };
        f.write_str(tag)
    }
}

/// A computed spectral radius together with solver metadata.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectralResult {
    /// ρ(M): the largest modulus among the eigenvalues. Always ≥ 0.
    pub radius: f64,
    pub method: SolverMethod,
    /// Sweeps (Jacobi), QR steps, or matrix-vector products (power iteration).
    pub iterations: usize,
    /// Solver-specific convergence measure at termination: off-diagonal
    /// Frobenius norm (Jacobi), largest subdiagonal magnitude at deflation
    /// (QR), or ‖Mx − ρx‖∞ / ‖x‖∞ (power iteration).
    pub residual: f64,
    /// Dominant eigenvector when the method yields one (Jacobi and power
    /// iteration; the QR route extracts moduli only).
    pub eigenvector: Option<Vec<f64>>,
}

/// Square real matrix in row-major order. The common carrier for all six
/// graph matrices and for raw user input.
///
/// Invariants, enforced at construction: n ≥ 1, exactly n·n entries, every
/// entry finite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DenseMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    pub fn new(n: usize, entries: Vec<f64>) -> Result<Self, LinalgError> {
        if n == 0 {
            return Err(LinalgError::ZeroDimension);
        }
        if entries.len() != n * n {
            return Err(LinalgError::EntryCount {
                expected: n * n,
                actual: entries.len(),
            });
        }
        for (pos, &v) in entries.iter().enumerate() {
            if !v.is_finite() {
                return Err(LinalgError::NonFiniteEntry {
                    row: pos / n,
                    col: pos % n,
                });
            }
        }
        Ok(DenseMatrix { n, entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(LinalgError::EntryCount {
                    expected: n * n,
                    actual: rows.iter().map(Vec::len).sum(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::new(n, entries)
    }

    /// All-zero n×n matrix. Panics if n = 0.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "DenseMatrix dimension must be at least 1");
        DenseMatrix {
            n,
            entries: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.entries[i * self.n + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&v| v >= 0.0)
    }

    /// First negative entry, if any.
    pub fn first_negative(&self) -> Option<(usize, usize, f64)> {
        self.entries
            .iter()
            .position(|&v| v < 0.0)
            .map(|pos| (pos / self.n, pos % self.n, self.entries[pos]))
    }

    /// Checks |m_ij − m_ji| ≤ atol for every pair.
    pub fn is_symmetric(&self, atol: f64) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if (self.get(i, j) - self.get(j, i)).abs() > atol {
                    return false;
                }
            }
        }
        true
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn scaled(&self, c: f64) -> Self {
        DenseMatrix {
            n: self.n,
            entries: self.entries.iter().map(|v| c * v).collect(),
        }
    }

    /// Simultaneous row and column permutation: out[i][j] = self[perm[i]][perm[j]].
    /// A similarity transform, so every spectral radius is preserved.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.get(perm[i], perm[j]));
            }
        }
        out
    }
}

/// Entrywise absolute value |M| = (|m_ij|).
pub fn entrywise_abs(m: &DenseMatrix) -> DenseMatrix {
    DenseMatrix {
        n: m.n,
        entries: m.entries.iter().map(|v| v.abs()).collect(),
    }
}

/// Minimum and maximum of the n row sums of a nonnegative matrix.
///
/// Together with ρ these bracket the spectral radius: min ≤ ρ(M) ≤ max,
/// with both equalities exactly when the row sums are all equal (for
/// irreducible M).
pub fn row_sum_interval(m: &DenseMatrix) -> Result<(f64, f64), LinalgError> {
    require_nonnegative(m)?;
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for i in 0..m.n() {
        let s: f64 = m.row(i).iter().sum();
        min = min.min(s);
        max = max.max(s);
    }
    Ok((min, max))
}

/// True iff the support digraph of M (arc i→j when m_ij ≠ 0, i ≠ j) is
/// strongly connected. A 1×1 matrix is irreducible by convention.
pub fn is_irreducible(m: &DenseMatrix) -> bool {
    let n = m.n();
    if n == 1 {
        return true;
    }
    let mut forward = vec![Vec::new(); n];
    let mut reverse = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && m.get(i, j) != 0.0 {
                forward[i].push(j);
                reverse[j].push(i);
            }
        }
    }
    reaches_all(&forward, 0) && reaches_all(&reverse, 0)
}

fn reaches_all(adj: &[Vec<usize>], start: usize) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == adj.len()
}

pub(crate) fn require_nonnegative(m: &DenseMatrix) -> Result<(), LinalgError> {
    match m.first_negative() {
        Some((row, col, value)) => Err(LinalgError::NegativeEntry { row, col, value }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[f64]]) -> DenseMatrix {
        DenseMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn constructor_validates() {
        assert!(matches!(
            DenseMatrix::new(0, vec![]),
            Err(LinalgError::ZeroDimension)
        ));
        assert!(matches!(
            DenseMatrix::new(2, vec![1.0; 3]),
            Err(LinalgError::EntryCount { .. })
        ));
        assert!(matches!(
            DenseMatrix::new(2, vec![1.0, f64::NAN, 0.0, 1.0]),
            Err(LinalgError::NonFiniteEntry { row: 0, col: 1 })
        ));
        assert!(DenseMatrix::new(1, vec![5.0]).is_ok());
    }

    #[test]
    fn entrywise_abs_examples() {
        let a = mat(&[&[1.0, -2.0], &[-3.0, 4.0]]);
        assert_eq!(entrywise_abs(&a), mat(&[&[1.0, 2.0], &[3.0, 4.0]]));

        // nonnegative input is a fixed point
        let b = mat(&[&[0.0, 1.0], &[2.0, 3.0]]);
        assert_eq!(entrywise_abs(&b), b);

        let lap_p3 = mat(&[&[1.0, -1.0, 0.0], &[-1.0, 2.0, -1.0], &[0.0, -1.0, 1.0]]);
        let abs_p3 = mat(&[&[1.0, 1.0, 0.0], &[1.0, 2.0, 1.0], &[0.0, 1.0, 1.0]]);
        assert_eq!(entrywise_abs(&lap_p3), abs_p3);
    }

    #[test]
    fn row_sum_interval_examples() {
        let a = mat(&[&[1.0, 2.0], &[3.0, 4.0]]);
        assert_eq!(row_sum_interval(&a).unwrap(), (3.0, 7.0));

        let ones = DenseMatrix::new(3, vec![1.0; 9]).unwrap();
        assert_eq!(row_sum_interval(&ones).unwrap(), (3.0, 3.0));

        // adjacency of P_3: row sums 1, 2, 1
        let p3 = mat(&[&[0.0, 1.0, 0.0], &[1.0, 0.0, 1.0], &[0.0, 1.0, 0.0]]);
        assert_eq!(row_sum_interval(&p3).unwrap(), (1.0, 2.0));

        let signed = mat(&[&[1.0, -2.0], &[3.0, 4.0]]);
        assert!(matches!(
            row_sum_interval(&signed),
            Err(LinalgError::NegativeEntry { row: 0, col: 1, .. })
        ));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&mat(&[&[0.0, 1.0], &[1.0, 0.0]])));
        assert!(!is_irreducible(&mat(&[&[1.0, 1.0], &[0.0, 1.0]])));
        // directed 3-cycle
        let c3 = mat(&[&[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0], &[1.0, 0.0, 0.0]]);
        assert!(is_irreducible(&c3));
        // n = 1 is irreducible regardless of the entry
        assert!(is_irreducible(&mat(&[&[0.0]])));
        // diagonal entries do not create support arcs
        assert!(!is_irreducible(&mat(&[&[5.0, 0.0], &[0.0, 5.0]])));
    }

    #[test]
    fn permuted_is_similarity() {
        let a = mat(&[&[1.0, 2.0, 0.0], &[0.0, 3.0, 4.0], &[5.0, 0.0, 6.0]]);
        let p = a.permuted(&[2, 0, 1]);
        assert_eq!(p.get(0, 0), a.get(2, 2));
        assert_eq!(p.get(0, 1), a.get(2, 0));
        assert_eq!(p.get(2, 1), a.get(1, 0));
    }
}
