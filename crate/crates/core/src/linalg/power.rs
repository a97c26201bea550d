use super::{
    require_nonnegative, DenseMatrix, LinalgError, SolverMethod, SpectralResult, SOLVER_TOLERANCE,
};

const MAX_ITERATIONS: usize = 100_000;

/// Perron root of a nonnegative matrix by power iteration on M + I.
///
/// The +I shift makes M + I primitive whenever M is irreducible, so the
/// iteration cannot cycle on periodic inputs (directed cycles would
/// otherwise loop forever); the returned radius is ρ(M + I) − 1 = ρ(M).
/// Converged when successive estimates agree to `SOLVER_TOLERANCE`
/// relative and the residual ‖Mx − ρx‖∞ / ‖x‖∞ is below the same scale.
///
/// Reducible inputs whose dominant blocks are tied through off-diagonal
/// coupling may never settle; the iteration cap turns that into
/// [`LinalgError::NoConvergence`] rather than a hang. For irreducible M
/// the returned eigenvector is strictly positive.
pub fn spectral_radius_nonnegative(m: &DenseMatrix) -> Result<SpectralResult, LinalgError> {
    require_nonnegative(m)?;
    let n = m.n();
    if n == 1 {
        return Ok(SpectralResult {
            radius: m.get(0, 0),
            method: SolverMethod::PowerIteration,
            iterations: 0,
            residual: 0.0,
            eigenvector: Some(vec![1.0]),
        });
    }

    let mut v = vec![1.0; n];
    let mut prev = f64::INFINITY;
    for iter in 1..=MAX_ITERATIONS {
        let mut w = m.matvec(&v);
        for i in 0..n {
            w[i] += v[i];
        }
        // v ≥ 0 with ‖v‖∞ = 1, so est = ‖w‖∞ ≥ 1
        let est = w.iter().fold(0.0f64, |acc, &x| acc.max(x));
        // Mv − (est−1)v = w − est·v, with ‖v‖∞ = 1
        let mut residual = 0.0f64;
        for i in 0..n {
            residual = residual.max((w[i] - est * v[i]).abs());
        }
        for x in w.iter_mut() {
            *x /= est;
        }
        v = w;
        let scale = est.max(1.0);
        if (est - prev).abs() <= SOLVER_TOLERANCE * scale && residual <= SOLVER_TOLERANCE * scale {
            return Ok(SpectralResult {
                radius: est - 1.0,
                method: SolverMethod::PowerIteration,
                iterations: iter,
                residual,
                eigenvector: Some(v),
            });
        }
        prev = est;
    }
    Err(LinalgError::NoConvergence {
        method: SolverMethod::PowerIteration,
        iterations: MAX_ITERATIONS,
    })
}
