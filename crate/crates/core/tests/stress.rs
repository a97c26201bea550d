//! Deep solver stress runs, ignored by default (`cargo test -- --ignored`).
//! These hammer the QR route on the structures that historically break
//! shifted-QR implementations: permutation matrices (eigenvalues on the
//! unit circle, zero diagonal), sparse sign patterns, and near-reducible
//! block forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specrad::harness::trial_seed;
use specrad::linalg::{
    is_irreducible, spectral_radius_general, spectral_radius_nonnegative,
    spectral_radius_symmetric, DenseMatrix,
};

fn random_matrix(n: usize, density: f64, signed: bool, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if rng.random::<f64>() < density {
                let v = if signed {
                    rng.random_range(-1.0..1.0)
                } else {
                    rng.random::<f64>()
                };
                m.set(i, j, v);
            }
        }
    }
    m
}

#[test]
#[ignore = "deep stress run"]
fn qr_never_stalls_on_random_matrices() {
    let mut failures = 0usize;
    let mut trials = 0usize;
    for seed in 0..40u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(0xBEEF, seed));
        for &density in &[0.05, 0.1, 0.3, 0.5, 0.8, 1.0] {
            for &n in &[1usize, 2, 3, 5, 8, 13, 21, 34, 40] {
                for &signed in &[false, true] {
                    trials += 1;
                    let m = random_matrix(n, density, signed, &mut rng);
                    if spectral_radius_general(&m).is_err() {
                        failures += 1;
                        eprintln!("stall: n={n} density={density} signed={signed} seed={seed}");
                    }
                }
            }
        }
    }
    assert_eq!(failures, 0, "{failures} stalls out of {trials}");
}

#[test]
#[ignore = "deep stress run"]
fn qr_handles_permutation_structures() {
    // random permutation matrices and companion forms: all eigenvalues on
    // or near the unit circle with zero diagonals
    for seed in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(0xCAFE, seed));
        let n = rng.random_range(2..=50);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            perm.swap(i, j);
        }
        let mut m = DenseMatrix::zeros(n);
        for (i, &p) in perm.iter().enumerate() {
            m.set(i, p, 1.0);
        }
        let r = spectral_radius_general(&m).expect("permutation matrices converge");
        assert!(
            (r.radius - 1.0).abs() < 1e-8,
            "n={n} seed={seed}: permutation radius {}",
            r.radius
        );
    }
    // directed cycles of every length up to 60
    for n in 2..=60 {
        let mut m = DenseMatrix::zeros(n);
        for i in 0..n {
            m.set(i, (i + 1) % n, 1.0);
        }
        let r = spectral_radius_general(&m).expect("cycles converge");
        assert!((r.radius - 1.0).abs() < 1e-8, "cycle n={n}: {}", r.radius);
    }
}

#[test]
#[ignore = "deep stress run"]
fn solver_triple_agreement_at_scale() {
    let mut worst_sym: f64 = 0.0;
    let mut worst_perron: f64 = 0.0;
    for seed in 0..600u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(0xD00D, seed));
        let n = rng.random_range(1..=30);
        let density = [0.1, 0.5, 1.0][rng.random_range(0..3)];

        let m = random_matrix(n, density, true, &mut rng);
        let mut sym = m.clone();
        for i in 0..n {
            for j in 0..n {
                sym.set(i, j, 0.5 * (m.get(i, j) + m.get(j, i)));
            }
        }
        let jacobi = spectral_radius_symmetric(&sym).unwrap();
        let qr = spectral_radius_general(&sym).unwrap();
        worst_sym = worst_sym.max((jacobi.radius - qr.radius).abs() / qr.radius.max(1.0));

        let nonneg = random_matrix(n, density, false, &mut rng);
        if is_irreducible(&nonneg) {
            let power = spectral_radius_nonnegative(&nonneg).unwrap();
            let qr = spectral_radius_general(&nonneg).unwrap();
            worst_perron = worst_perron.max((power.radius - qr.radius).abs() / qr.radius.max(1.0));
        }
    }
    eprintln!("worst symmetric deviation: {worst_sym:e}");
    eprintln!("worst Perron deviation: {worst_perron:e}");
    assert!(worst_sym <= 1e-8);
    assert!(worst_perron <= 1e-8);
}
