use super::{DenseMatrix, LinalgError, SolverMethod, SpectralResult, SOLVER_TOLERANCE};

/// Spectral radius of an arbitrary real square matrix.
///
/// Householder reduction to upper Hessenberg form, then Francis double-shift
/// QR iteration. The converged matrix is quasi-upper-triangular: real
/// eigenvalues sit in 1×1 diagonal blocks, complex-conjugate pairs in 2×2
/// blocks, and ρ(M) is the largest block modulus. Eigenvalue moduli only;
/// no eigenvector is produced.
pub fn spectral_radius_general(m: &DenseMatrix) -> Result<SpectralResult, LinalgError> {
    let mut h = m.clone();
    hessenberg_in_place(&mut h);
    let (iterations, residual) = francis_qr(&mut h)?;
    Ok(SpectralResult {
        radius: quasi_triangular_radius(&h),
        method: SolverMethod::GeneralQr,
        iterations,
        residual,
        eigenvector: None,
    })
}

/// H ← QᵀMQ upper Hessenberg, via Householder similarity transforms.
/// Q is not accumulated; only eigenvalues are wanted.
fn hessenberg_in_place(a: &mut DenseMatrix) {
    let n = a.n();
    let mut v = vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        let mut norm2 = 0.0;
        for i in (k + 1)..n {
            let x = a.get(i, k);
            norm2 += x * x;
        }
        if norm2 == 0.0 {
            continue;
        }
        let x0 = a.get(k + 1, k);
        let alpha = if x0 >= 0.0 {
            -norm2.sqrt()
        } else {
            norm2.sqrt()
        };
        v[k + 1] = x0 - alpha;
        for i in (k + 2)..n {
            v[i] = a.get(i, k);
        }
        let vtv: f64 = v[k + 1..n].iter().map(|t| t * t).sum();
        if vtv == 0.0 {
            continue;
        }
        let beta = 2.0 / vtv;

        // left: rows k+1..n, columns k..n
        for j in k..n {
            let mut w = 0.0;
            for i in (k + 1)..n {
                w += v[i] * a.get(i, j);
            }
            let wb = beta * w;
            for i in (k + 1)..n {
                a.set(i, j, a.get(i, j) - wb * v[i]);
            }
        }
        // right: all rows, columns k+1..n
        for i in 0..n {
            let mut w = 0.0;
            for j in (k + 1)..n {
                w += a.get(i, j) * v[j];
            }
            let wb = beta * w;
            for j in (k + 1)..n {
                a.set(i, j, a.get(i, j) - wb * v[j]);
            }
        }

        a.set(k + 1, k, alpha);
        for i in (k + 2)..n {
            a.set(i, k, 0.0);
        }
    }
}

/// Francis double-shift QR with deflation on an upper Hessenberg matrix.
/// Returns (iterations, largest subdiagonal magnitude seen at deflation).
fn francis_qr(h: &mut DenseMatrix) -> Result<(usize, f64), LinalgError> {
    let n = h.n();
    if n <= 2 {
        return Ok((0, 0.0));
    }
    let max_iter = 30 * n;
    let hnorm = h.frobenius_norm();
    // deflation threshold per subdiagonal position; the hnorm fallback covers
    // the degenerate case of two exactly-zero neighboring diagonal entries
    // (e.g. permutation matrices), where the pinned formula would demand an
    // exact zero
    let thresh = |h: &DenseMatrix, k: usize| -> f64 {
        let t = SOLVER_TOLERANCE * (h.get(k, k).abs() + h.get(k + 1, k + 1).abs());
        if t == 0.0 {
            SOLVER_TOLERANCE * hnorm
        } else {
            t
        }
    };

    let mut iter = 0usize;
    let mut stalled = 0usize;
    let mut max_deflated = 0.0f64;
    let mut p = n;

    while p > 2 {
        // bottom 1×1 deflation
        if h.get(p - 1, p - 2).abs() <= thresh(h, p - 2) {
            max_deflated = max_deflated.max(h.get(p - 1, p - 2).abs());
            h.set(p - 1, p - 2, 0.0);
            p -= 1;
            stalled = 0;
            continue;
        }
        // bottom 2×2 deflation
        if p >= 4 && h.get(p - 2, p - 3).abs() <= thresh(h, p - 3) {
            max_deflated = max_deflated.max(h.get(p - 2, p - 3).abs());
            h.set(p - 2, p - 3, 0.0);
            p -= 2;
            stalled = 0;
            continue;
        }
        if p == 3 && h.get(1, 0).abs() <= thresh(h, 0) {
            max_deflated = max_deflated.max(h.get(1, 0).abs());
            h.set(1, 0, 0.0);
            p -= 2;
            stalled = 0;
            continue;
        }

        iter += 1;
        stalled += 1;
        if iter > max_iter {
            return Err(LinalgError::NoConvergence {
                method: SolverMethod::GeneralQr,
                iterations: max_iter,
            });
        }

        // start of the unreduced block ending at p
        let mut q0 = p - 1;
        while q0 > 0 {
            if h.get(q0, q0 - 1).abs() <= thresh(h, q0 - 1) {
                max_deflated = max_deflated.max(h.get(q0, q0 - 1).abs());
                h.set(q0, q0 - 1, 0.0);
                break;
            }
            q0 -= 1;
        }

        // Double shift from the trailing 2×2 block; after 10 fruitless
        // steps on the same block, the classic asymmetric exceptional
        // shift (roots 1.75w and −0.25w) — a symmetric choice like w, w
        // can coincide with the stalling shift and never break the cycle.
        let (s, t) = if stalled.is_multiple_of(10) {
            let w = h.get(p - 1, p - 2).abs() + h.get(p - 2, p - 3).abs();
            (1.5 * w, -0.4375 * w * w)
        } else {
            let a11 = h.get(p - 2, p - 2);
            let a12 = h.get(p - 2, p - 1);
            let a21 = h.get(p - 1, p - 2);
            let a22 = h.get(p - 1, p - 1);
            (a11 + a22, a11 * a22 - a12 * a21)
        };

        // first column of H² − sH + tI on the active block
        let h00 = h.get(q0, q0);
        let h10 = h.get(q0 + 1, q0);
        let h01 = h.get(q0, q0 + 1);
        let h11 = h.get(q0 + 1, q0 + 1);
        let mut x = h00 * h00 + h01 * h10 - s * h00 + t;
        let mut y = h10 * (h00 + h11 - s);
        let mut z = if q0 + 2 < p {
            h10 * h.get(q0 + 2, q0 + 1)
        } else {
            0.0
        };

        // chase the bulge down the active block
        for k in q0..(p - 1) {
            let use3 = k + 2 < p;
            let (v0, v1, v2, tau) = if use3 {
                householder3(x, y, z)
            } else {
                let (a, b, tau) = householder2(x, y);
                (a, b, 0.0, tau)
            };

            let col_start = if k > q0 { k - 1 } else { k };
            for j in col_start..n {
                let mut dot = v0 * h.get(k, j) + v1 * h.get(k + 1, j);
                if use3 {
                    dot += v2 * h.get(k + 2, j);
                }
                dot *= tau;
                h.set(k, j, h.get(k, j) - dot * v0);
                h.set(k + 1, j, h.get(k + 1, j) - dot * v1);
                if use3 {
                    h.set(k + 2, j, h.get(k + 2, j) - dot * v2);
                }
            }
            let row_end = if use3 { (k + 4).min(p) } else { p };
            for i in 0..row_end {
                let mut dot = v0 * h.get(i, k) + v1 * h.get(i, k + 1);
                if use3 {
                    dot += v2 * h.get(i, k + 2);
                }
                dot *= tau;
                h.set(i, k, h.get(i, k) - dot * v0);
                h.set(i, k + 1, h.get(i, k + 1) - dot * v1);
                if use3 {
                    h.set(i, k + 2, h.get(i, k + 2) - dot * v2);
                }
            }
            // the reflector annihilated the bulge below the subdiagonal
            if k > q0 {
                h.set(k + 1, k - 1, 0.0);
                if use3 {
                    h.set(k + 2, k - 1, 0.0);
                }
            }

            if k + 2 < p - 1 {
                x = h.get(k + 1, k);
                y = h.get(k + 2, k);
                z = h.get(k + 3, k);
            } else if k + 1 < p - 1 {
                x = h.get(k + 1, k);
                y = h.get(k + 2, k);
                z = 0.0;
            }
        }
    }

    if p == 2 && h.get(1, 0).abs() <= thresh(h, 0) {
        max_deflated = max_deflated.max(h.get(1, 0).abs());
        h.set(1, 0, 0.0);
    }
    Ok((iter, max_deflated))
}

/// Reflector for (x, y, z) with v0 = 1: returns (1, v1, v2, tau).
fn householder3(x: f64, y: f64, z: f64) -> (f64, f64, f64, f64) {
    let norm = (x * x + y * y + z * z).sqrt();
    if norm == 0.0 {
        return (1.0, 0.0, 0.0, 0.0);
    }
    let u0 = x + x.signum() * norm;
    if u0 == 0.0 {
        return (1.0, 0.0, 0.0, 0.0);
    }
    let v1 = y / u0;
    let v2 = z / u0;
    let tau = 2.0 / (1.0 + v1 * v1 + v2 * v2);
    (1.0, v1, v2, tau)
}

fn householder2(x: f64, y: f64) -> (f64, f64, f64) {
    let norm = (x * x + y * y).sqrt();
    if norm == 0.0 {
        return (1.0, 0.0, 0.0);
    }
    let u0 = x + x.signum() * norm;
    if u0 == 0.0 {
        return (1.0, 0.0, 0.0);
    }
    let v1 = y / u0;
    let tau = 2.0 / (1.0 + v1 * v1);
    (1.0, v1, tau)
}

/// Largest eigenvalue modulus of a quasi-upper-triangular matrix. A 2×2
/// block with negative discriminant holds a conjugate pair of modulus
/// √det; everything else reads off the diagonal.
fn quasi_triangular_radius(h: &DenseMatrix) -> f64 {
    let n = h.n();
    let mut radius = 0.0f64;
    let mut i = 0;
    while i < n {
        if i + 1 < n && h.get(i + 1, i) != 0.0 {
            let a = h.get(i, i);
            let b = h.get(i, i + 1);
            let c = h.get(i + 1, i);
            let d = h.get(i + 1, i + 1);
            let tr = 0.5 * (a + d);
            let det = a * d - b * c;
            let disc = tr * tr - det;
            if disc >= 0.0 {
                let sq = disc.sqrt();
                radius = radius.max((tr + sq).abs()).max((tr - sq).abs());
            } else {
                radius = radius.max(det.sqrt());
            }
            i += 2;
        } else {
            radius = radius.max(h.get(i, i).abs());
            i += 1;
        }
    }
    radius
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[f64]]) -> DenseMatrix {
        DenseMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rotation_matrix_has_unit_radius() {
        // eigenvalues ±i
        let m = mat(&[&[0.0, 1.0], &[-1.0, 0.0]]);
        let r = spectral_radius_general(&m).unwrap();
        assert!((r.radius - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_by_two_real_spectrum() {
        // char poly λ² − 5λ − 2, dominant root (5 + √33)/2
        let m = mat(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let r = spectral_radius_general(&m).unwrap();
        let expect = (5.0 + 33f64.sqrt()) / 2.0;
        assert!((r.radius - expect).abs() < 1e-12);
    }

    #[test]
    fn directed_cycle_laplacian() {
        // I minus the cyclic permutation: eigenvalues 1 − ω^k, max modulus √3
        let m = mat(&[
            &[1.0, -1.0, 0.0],
            &[0.0, 1.0, -1.0],
            &[-1.0, 0.0, 1.0],
        ]);
        let r = spectral_radius_general(&m).unwrap();
        assert!((r.radius - 3f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn one_by_one() {
        let r = spectral_radius_general(&mat(&[&[-7.5]])).unwrap();
        assert_eq!(r.radius, 7.5);
        assert_eq!(r.iterations, 0);
    }

    #[test]
    fn permutation_matrices_have_unit_radius() {
        // directed n-cycles: adjacency is a cyclic permutation, all
        // eigenvalues are roots of unity
        for n in 3..=12 {
            let mut m = DenseMatrix::zeros(n);
            for i in 0..n {
                m.set(i, (i + 1) % n, 1.0);
            }
            let r = spectral_radius_general(&m).unwrap();
            assert!(
                (r.radius - 1.0).abs() < 1e-9,
                "n = {n}: radius {} != 1",
                r.radius
            );
        }
    }

    #[test]
    fn companion_matrix_roots() {
        // p(x) = (x−1)(x−2)(x−3) = x³ − 6x² + 11x − 6
        let m = mat(&[
            &[0.0, 0.0, 6.0],
            &[1.0, 0.0, -11.0],
            &[0.0, 1.0, 6.0],
        ]);
        let r = spectral_radius_general(&m).unwrap();
        assert!((r.radius - 3.0).abs() < 1e-10);
    }

    #[test]
    fn upper_triangular_reads_diagonal() {
        let m = mat(&[
            &[1.0, 2.0, 3.0],
            &[0.0, -4.0, 5.0],
            &[0.0, 0.0, 2.0],
        ]);
        let r = spectral_radius_general(&m).unwrap();
        assert!((r.radius - 4.0).abs() < 1e-12);
    }

    #[test]
    fn agrees_with_trace_for_larger_dense_case() {
        // 5×5 with known dominant eigenvalue: rank-one J has spectrum {5, 0}
        let m = DenseMatrix::new(5, vec![1.0; 25]).unwrap();
        let r = spectral_radius_general(&m).unwrap();
        assert!((r.radius - 5.0).abs() < 1e-10);
    }
}
