// scratch: worst permutation discrepancy vs radius floor
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specrad::linalg::{spectral_radius_general, DenseMatrix};

fn main() {
    let floors = [0.0, 1e-6, 1e-3, 1e-2, 0.05, 0.1, 0.3];
    let mut worst = vec![(0.0f64, 0.0f64); floors.len()];
    for seed in 0..60000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(2..=14);
        let density = rng.random_range(0.03..0.7);
        let mut m = DenseMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if rng.random::<f64>() < density {
                    m.set(i, j, rng.random_range(-1.0..1.0));
                }
            }
        }
        let Ok(base) = spectral_radius_general(&m) else { continue };
        let perm: Vec<usize> = (0..n).rev().collect();
        let Ok(p) = spectral_radius_general(&m.permuted(&perm)) else { continue };
        let norm = m.frobenius_norm().max(1.0);
        let rel = (base.radius - p.radius).abs() / base.radius.max(1.0);
        let level = base.radius.min(p.radius) / norm;
        for (idx, &floor) in floors.iter().enumerate() {
            if level >= floor && rel > worst[idx].0 {
                worst[idx] = (rel, base.radius);
            }
        }
    }
    for (idx, &floor) in floors.iter().enumerate() {
        println!("floor {:>7}: worst rel diff {:e} (radius {:e})", floor, worst[idx].0, worst[idx].1);
    }
}
