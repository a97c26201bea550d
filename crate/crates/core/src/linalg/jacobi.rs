use super::{DenseMatrix, LinalgError, SolverMethod, SpectralResult, SOLVER_TOLERANCE};

/// Per-entry absolute tolerance for the symmetry precondition.
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

const MAX_SWEEPS: usize = 100;

/// Spectral radius of a symmetric matrix via cyclic Jacobi rotations.
///
/// Every eigenvalue of a real symmetric matrix is real, so ρ(M) is the
/// largest |λ| on the diagonal once the off-diagonal mass is annihilated.
/// Converged when the off-diagonal Frobenius norm drops below
/// `SOLVER_TOLERANCE · (1 + ‖M‖_F)`.
pub fn spectral_radius_symmetric(m: &DenseMatrix) -> Result<SpectralResult, LinalgError> {
    let n = m.n();
    for i in 0..n {
        for j in (i + 1)..n {
            let diff = (m.get(i, j) - m.get(j, i)).abs();
            if diff > SYMMETRY_TOLERANCE {
                return Err(LinalgError::NotSymmetric { row: i, col: j, diff });
            }
        }
    }
    if n == 1 {
        return Ok(SpectralResult {
            radius: m.get(0, 0).abs(),
            method: SolverMethod::SymmetricJacobi,
            iterations: 0,
            residual: 0.0,
            eigenvector: Some(vec![1.0]),
        });
    }

    // Work on the symmetrized copy; input asymmetry is at most 1e-12 per entry.
    let mut a = m.clone();
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (a.get(i, j) + a.get(j, i));
            a.set(i, j, avg);
            a.set(j, i, avg);
        }
    }
    let mut v = DenseMatrix::identity(n);
    let threshold = SOLVER_TOLERANCE * (1.0 + m.frobenius_norm());

    for sweep in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&a);
        if off <= threshold {
            return Ok(finish(&a, &v, sweep, off));
        }
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let (c, s) = rotation(a.get(p, p), a.get(q, q), apq);
                apply_rotation(&mut a, &mut v, p, q, c, s);
            }
        }
    }

    let off = off_diagonal_norm(&a);
    if off <= threshold {
        return Ok(finish(&a, &v, MAX_SWEEPS, off));
    }
    Err(LinalgError::NoConvergence {
        method: SolverMethod::SymmetricJacobi,
        iterations: MAX_SWEEPS,
    })
}

/// Rotation (c, s) annihilating a_pq, numerically stable form
/// t = sign(θ) / (|θ| + √(1+θ²)) with θ = (a_qq − a_pp) / (2 a_pq).
fn rotation(app: f64, aqq: f64, apq: f64) -> (f64, f64) {
    let theta = 0.5 * (aqq - app) / apq;
    let t = if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        -1.0 / (-theta + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    (c, t * c)
}

fn apply_rotation(a: &mut DenseMatrix, v: &mut DenseMatrix, p: usize, q: usize, c: f64, s: f64) {
    let n = a.n();
    for k in 0..n {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, c * akp - s * akq);
        a.set(k, q, s * akp + c * akq);
    }
    for k in 0..n {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, c * apk - s * aqk);
        a.set(q, k, s * apk + c * aqk);
    }
    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, c * vkp - s * vkq);
        v.set(k, q, s * vkp + c * vkq);
    }
}

fn off_diagonal_norm(a: &DenseMatrix) -> f64 {
    let n = a.n();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let x = a.get(i, j);
                sum += x * x;
            }
        }
    }
    sum.sqrt()
}

fn finish(a: &DenseMatrix, v: &DenseMatrix, sweeps: usize, off: f64) -> SpectralResult {
    let n = a.n();
    let mut best = 0;
    for i in 1..n {
        if a.get(i, i).abs() > a.get(best, best).abs() {
            best = i;
        }
    }
    let eigenvector = (0..n).map(|k| v.get(k, best)).collect();
    SpectralResult {
        radius: a.get(best, best).abs(),
        method: SolverMethod::SymmetricJacobi,
        iterations: sweeps,
        residual: off,
        eigenvector: Some(eigenvector),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[f64]]) -> DenseMatrix {
        DenseMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn swap_matrix() {
        let r = spectral_radius_symmetric(&mat(&[&[0.0, 1.0], &[1.0, 0.0]])).unwrap();
        assert!((r.radius - 1.0).abs() < 1e-12);
        assert_eq!(r.method, SolverMethod::SymmetricJacobi);
    }

    #[test]
    fn identity_3x3() {
        let r = spectral_radius_symmetric(&DenseMatrix::identity(3)).unwrap();
        assert!((r.radius - 1.0).abs() < 1e-12);
    }

    #[test]
    fn path_p3_adjacency() {
        // char poly λ³ − 2λ: roots 0, ±√2
        let p3 = mat(&[&[0.0, 1.0, 0.0], &[1.0, 0.0, 1.0], &[0.0, 1.0, 0.0]]);
        let r = spectral_radius_symmetric(&p3).unwrap();
        assert!((r.radius - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn negative_dominant_eigenvalue_counts_by_modulus() {
        // eigenvalues 1 and -3: radius 3
        let m = mat(&[&[-1.0, 2.0], &[2.0, -1.0]]);
        let r = spectral_radius_symmetric(&m).unwrap();
        assert!((r.radius - 3.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let m = mat(&[&[0.0, 1.0], &[2.0, 0.0]]);
        assert!(matches!(
            spectral_radius_symmetric(&m),
            Err(LinalgError::NotSymmetric { .. })
        ));
    }

    #[test]
    fn one_by_one_takes_modulus() {
        let r = spectral_radius_symmetric(&mat(&[&[-4.0]])).unwrap();
        assert_eq!(r.radius, 4.0);
    }

    #[test]
    fn eigenvector_satisfies_residual() {
        let m = mat(&[&[2.0, 1.0, 0.0], &[1.0, 3.0, 1.0], &[0.0, 1.0, 2.0]]);
        let r = spectral_radius_symmetric(&m).unwrap();
        let x = r.eigenvector.as_ref().unwrap();
        let mx = m.matvec(x);
        // dominant eigenvalue here is positive, so Mx ≈ ρx
        for (a, b) in mx.iter().zip(x) {
            assert!((a - r.radius * b).abs() < 1e-10);
        }
    }
}
