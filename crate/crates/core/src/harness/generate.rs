//! Deterministic instance generation.
//!
//! Per-trial seeding is pinned so stored violations replay across releases:
//!
//! ```text
//! trial_seed(master, i) = splitmix64(master + i · 0x9E3779B97F4A7C15)
//! ```
//!
//! with wrapping arithmetic and the standard splitmix64 finalizer. The
//! per-trial RNG is ChaCha8 seeded from that value.

use super::{HarnessError, Instance, TrialConfig};
use crate::graphs::{is_connected, is_strongly_connected, Digraph, Graph};
use crate::linalg::{is_irreducible, DenseMatrix};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// Attempts per instance for conditioned models before
/// [`HarnessError::GenerationExhausted`].
pub const RETRY_CAP: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Model {
    /// Undirected G(n, p) with p = density.
    Gnp,
    /// Pairing-model r-regular graph; retries on loops and multi-edges.
    RandomRegular,
    /// Bipartite with constant degrees per side, random biadjacency with
    /// the given margins.
    BipartiteSemiRegular,
    /// Directed G(n, p) over ordered pairs.
    DigraphGnp,
    /// Entrywise-nonnegative matrix with the given fill density.
    NonnegMatrix,
    /// Matrix with entries of both signs.
    SignedMatrix,
}

impl Model {
    pub fn label(self) -> &'static str {
        match self {
            Model::Gnp => "gnp",
            Model::RandomRegular => "random-regular",
            Model::BipartiteSemiRegular => "bipartite-semiregular",
            Model::DigraphGnp => "digraph-gnp",
            Model::NonnegMatrix => "nonneg-matrix",
            Model::SignedMatrix => "signed-matrix",
        }
    }
}

impl std::fmt::Display for Model {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gnp" => Ok(Model::Gnp),
            "random-regular" => Ok(Model::RandomRegular),
            "bipartite-semiregular" => Ok(Model::BipartiteSemiRegular),
            "digraph-gnp" => Ok(Model::DigraphGnp),
            "nonneg-matrix" => Ok(Model::NonnegMatrix),
            "signed-matrix" => Ok(Model::SignedMatrix),
            other => Err(format!(
                "unknown model '{other}' (expected gnp, random-regular, \
                 bipartite-semiregular, digraph-gnp, nonneg-matrix or signed-matrix)"
            )),
        }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stable (master seed, trial index) → per-trial seed derivation.
pub fn trial_seed(master: u64, trial_index: u64) -> u64 {
    splitmix64(master.wrapping_add(trial_index.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

/// Produce the instance for one trial: a pure function of
/// (config, trial_index). Conditioned models resample up to [`RETRY_CAP`]
/// times, then signal exhaustion.
pub fn generate(config: &TrialConfig, trial_index: u64) -> Result<Instance, HarnessError> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(config.seed, trial_index));
    let (lo, hi) = config.size_range;
    let mut n = rng.random_range(lo..=hi);
    if matches!(
        config.model,
        Model::RandomRegular | Model::BipartiteSemiRegular
    ) {
        n = n.max(2);
    }

    for _ in 0..RETRY_CAP {
        let candidate = match config.model {
            Model::Gnp => {
                let g = gnp_graph(n, config.density, &mut rng);
                (!config.require_connected || is_connected(&g)).then_some(Instance::Graph(g))
            }
            Model::DigraphGnp => {
                let d = gnp_digraph(n, config.density, &mut rng);
                (!config.require_connected || is_strongly_connected(&d))
                    .then_some(Instance::Digraph(d))
            }
            Model::RandomRegular => {
                let r = regular_degree(n, config.degree, config.density);
                random_regular(n, r, &mut rng).map(Instance::Graph)
            }
            Model::BipartiteSemiRegular => {
                bipartite_semiregular(n, &mut rng).map(Instance::Graph)
            }
            Model::NonnegMatrix => {
                let m = random_matrix(n, config.density, false, &mut rng);
                (!config.require_connected || is_irreducible(&m)).then_some(Instance::Matrix(m))
            }
            Model::SignedMatrix => {
                let m = random_matrix(n, config.density, true, &mut rng);
                (!config.require_connected || is_irreducible(&m)).then_some(Instance::Matrix(m))
            }
        };
        if let Some(instance) = candidate {
            return Ok(instance);
        }
    }
    Err(HarnessError::GenerationExhausted {
        model: config.model,
        n,
        attempts: RETRY_CAP,
    })
}

fn gnp_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("sampled pairs are valid simple edges")
}

fn gnp_digraph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random::<f64>() < p {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, arcs).expect("sampled pairs are valid arcs")
}

/// Degree for the regular model: the requested one, otherwise derived from
/// the density; clamped to [1, n−1] and bumped to keep n·r even.
fn regular_degree(n: usize, requested: Option<usize>, density: f64) -> usize {
    let mut r = requested
        .unwrap_or_else(|| (density * (n - 1) as f64).round() as usize)
        .clamp(1, n - 1);
    if n % 2 == 1 && r % 2 == 1 {
        // n odd forces even r; n−1 is even, so the bump stays in range
        r = if r < n - 1 { r + 1 } else { r - 1 };
    }
    r
}

fn random_regular(n: usize, r: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    if r >= n || n * r % 2 == 1 {
        return None;
    }
    let mut stubs: Vec<usize> = (0..n)
        .flat_map(|v| std::iter::repeat_n(v, r))
        .collect();
    stubs.shuffle(rng);
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(n * r / 2);
    for pair in stubs.chunks_exact(2) {
        let (u, v) = (pair[0], pair[1]);
        if u == v {
            return None;
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return None;
        }
        edges.push(key);
    }
    Graph::new(n, edges).ok()
}

/// Part sizes a + b = n and degrees with a·r = b·s, then a random constant-
/// margin biadjacency by stub pairing. Falls back to the complete bipartite
/// margins (r = b, s = a), which always satisfy the constraint.
fn bipartite_semiregular(n: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let a = rng.random_range(1..n);
    let b = n - a;
    let mut r = b;
    let mut s = a;
    for _ in 0..8 {
        let candidate = rng.random_range(1..=b);
        if (a * candidate) % b == 0 {
            r = candidate;
            s = a * candidate / b;
            break;
        }
    }
    let left: Vec<usize> = (0..a).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    let mut right: Vec<usize> = (a..n).flat_map(|v| std::iter::repeat_n(v, s)).collect();
    right.shuffle(rng);
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(left.len());
    for (&u, &v) in left.iter().zip(&right) {
        if !seen.insert((u, v)) {
            return None;
        }
        edges.push((u, v));
    }
    Graph::new(n, edges).ok()
}

fn random_matrix(n: usize, density: f64, signed: bool, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if rng.random::<f64>() < density {
                let value = if signed {
                    rng.random_range(-1.0..1.0)
                } else {
                    rng.random::<f64>()
                };
                m.set(i, j, value);
            }
        }
    }
    m
}
