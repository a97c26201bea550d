//! Randomized and exhaustive verification of the bound claims.
//!
//! A [`TrialConfig`] pins a generator model, sizes, density and a master
//! seed; every trial derives its own RNG from (seed, trial index), so a
//! reported failure replays from two integers. [`run_suite`] evaluates a
//! set of properties over the generated instances, shrinks any violations
//! greedily, and returns a deterministic [`SuiteResult`].

mod enumerate;
mod generate;
mod properties;
mod shrink;

pub use enumerate::{enumerate_graphs, GraphEnumerator, MAX_ENUMERATION_VERTICES};
pub use generate::{generate, trial_seed, Model};
pub use properties::{evaluate, ObservedValues, Outcome, PropertyId, ALL_PROPERTIES};
pub use shrink::shrink;

use crate::bounds::{
    digraph_bound, general_bound, graph_bound, modulus_bound, BoundKind, Tolerances,
};
use crate::graphs::{Digraph, Graph};
use crate::linalg::DenseMatrix;
use crate::spectra::MatrixKind;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid trial config: {0}")]
    InvalidConfig(String),

    #[error("generation exhausted after {attempts} attempts (model {model}, n = {n})")]
    GenerationExhausted {
        model: Model,
        n: usize,
        attempts: usize,
    },

    #[error("exhaustive enumeration capped at n <= {max}, got {n}")]
    SizeTooLarge { n: usize, max: usize },

    #[error("violation does not reproduce on the stored instance")]
    NotReproducible,
}

/// One generated test input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Instance {
    Graph(Graph),
    Digraph(Digraph),
    Matrix(DenseMatrix),
}

impl Instance {
    pub fn size(&self) -> usize {
        match self {
            Instance::Graph(g) => g.n(),
            Instance::Digraph(d) => d.n(),
            Instance::Matrix(m) => m.n(),
        }
    }
}

/// Everything a trial sweep needs; serializable so reports can echo it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub model: Model,
    /// Inclusive vertex/dimension range; models that need n ≥ 2 clamp up.
    pub size_range: (usize, usize),
    /// Edge/arc/entry probability in (0, 1]; also sets the derived degree
    /// for the regular model when `degree` is unset.
    pub density: f64,
    /// Fixed degree for the random-regular model.
    pub degree: Option<usize>,
    pub trials: u64,
    pub seed: u64,
    pub tolerances: Tolerances,
    /// Resample (bounded retries) until the instance is connected,
    /// strongly connected, or irreducible, depending on the model.
    pub require_connected: bool,
}

impl TrialConfig {
    pub fn new(model: Model, seed: u64) -> Self {
        TrialConfig {
            model,
            size_range: (1, 20),
            density: 0.5,
            degree: None,
            trials: 100,
            seed,
            tolerances: Tolerances::default(),
            require_connected: false,
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.trials < 1 {
            return Err(HarnessError::InvalidConfig("trials must be >= 1".into()));
        }
        let (lo, hi) = self.size_range;
        if lo < 1 || lo > hi {
            return Err(HarnessError::InvalidConfig(format!(
                "size range [{lo}, {hi}] must be ordered and start at 1 or more"
            )));
        }
        if !(self.density > 0.0 && self.density <= 1.0) {
            return Err(HarnessError::InvalidConfig(format!(
                "density {} must lie in (0, 1]",
                self.density
            )));
        }
        Ok(())
    }
}

/// A property failure, self-contained enough to replay.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Violation {
    pub property: PropertyId,
    pub trial_index: u64,
    pub trial_seed: u64,
    pub instance: Instance,
    pub observed: ObservedValues,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCounts {
    pub pass: u64,
    pub fail: u64,
    pub skip: u64,
}

/// Outcome of a suite run. Serialization is byte-stable for a fixed
/// (config, property set): wall time is excluded and violations are sorted.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteResult {
    pub config: TrialConfig,
    pub properties: BTreeMap<PropertyId, PropertyCounts>,
    /// Shrunken violations, deduplicated, sorted by (trial, property).
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteResult {
    pub fn total_failures(&self) -> u64 {
        self.properties.values().map(|c| c.fail).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_failures() == 0
    }
}

/// Run every property over every generated instance. Generation failures
/// count as skips; failures are shrunk before reporting. The fail counts
/// reflect violations before shrink-deduplication.
pub fn run_suite(
    config: &TrialConfig,
    properties: &[PropertyId],
) -> Result<SuiteResult, HarnessError> {
    config.validate()?;
    let started = Instant::now();
    let mut props: Vec<PropertyId> = properties.to_vec();
    props.sort();
    props.dedup();

    let mut counts: BTreeMap<PropertyId, PropertyCounts> = props
        .iter()
        .map(|&p| (p, PropertyCounts::default()))
        .collect();
    let mut raw: Vec<Violation> = Vec::new();

    for trial in 0..config.trials {
        let instance = match generate(config, trial) {
            Ok(instance) => instance,
            Err(_) => {
                for p in &props {
                    counts.get_mut(p).expect("initialized above").skip += 1;
                }
                continue;
            }
        };
        for &property in &props {
            let entry = counts.get_mut(&property).expect("initialized above");
            match evaluate(property, &instance, &config.tolerances) {
                Outcome::Pass => entry.pass += 1,
                Outcome::Skip => entry.skip += 1,
                Outcome::Fail(observed) => {
                    entry.fail += 1;
                    raw.push(Violation {
                        property,
                        trial_index: trial,
                        trial_seed: trial_seed(config.seed, trial),
                        instance: instance.clone(),
                        observed,
                    });
                }
            }
        }
    }

    let mut violations: Vec<Violation> = Vec::new();
    for v in raw {
        let shrunk = shrink(&v, &config.tolerances).unwrap_or(v);
        let duplicate = violations
            .iter()
            .any(|w| w.property == shrunk.property && w.instance == shrunk.instance);
        if !duplicate {
            violations.push(shrunk);
        }
    }
    violations.sort_by_key(|v| (v.trial_index, v.property));

    Ok(SuiteResult {
        config: config.clone(),
        properties: counts,
        violations,
        wall_time: started.elapsed(),
    })
}

/// An instance that attained (or nearly attained) some bound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EqualityCase {
    pub trial_index: u64,
    pub instance: Instance,
    pub kind: BoundKind,
    pub gap: f64,
}

/// Sweep the configured model and record every (instance, bound kind) whose
/// gap is within the gap tolerance. An exploration aid for the open
/// sufficiency question: it asserts nothing, it only collects candidates.
pub fn equality_case_search(config: &TrialConfig) -> Result<Vec<EqualityCase>, HarnessError> {
    config.validate()?;
    let tol = &config.tolerances;
    let mut found = Vec::new();
    for trial in 0..config.trials {
        let Ok(instance) = generate(config, trial) else {
            continue;
        };
        let mut reports = Vec::new();
        match &instance {
            Instance::Matrix(m) => {
                let report = if m.is_nonnegative() {
                    general_bound(m, tol)
                } else {
                    modulus_bound(m, tol)
                };
                if let Ok(r) = report {
                    reports.push(r);
                }
            }
            Instance::Graph(g) => {
                for kind in MatrixKind::ALL {
                    if let Ok(r) = graph_bound(kind, g, tol) {
                        reports.push(r);
                    }
                }
            }
            Instance::Digraph(d) => {
                for kind in MatrixKind::ALL {
                    if let Ok(r) = digraph_bound(kind, d, tol) {
                        reports.push(r);
                    }
                }
            }
        }
        for report in reports {
            let gap = report.gap.expect("bound operations attach exact radii");
            if gap.abs() <= tol.gap_tol * report.bound.abs().max(1.0) {
                found.push(EqualityCase {
                    trial_index: trial,
                    instance: instance.clone(),
                    kind: report.kind,
                    gap,
                });
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_property_set_runs_nothing() {
        let config = TrialConfig {
            trials: 5,
            ..TrialConfig::new(Model::Gnp, 1)
        };
        let result = run_suite(&config, &[]).unwrap();
        assert!(result.properties.is_empty());
        assert!(result.violations.is_empty());
        assert!(result.passed());
    }

    #[test]
    fn soundness_suite_on_nonneg_matrices_is_clean() {
        let config = TrialConfig {
            trials: 60,
            size_range: (1, 12),
            ..TrialConfig::new(Model::NonnegMatrix, 7)
        };
        let result = run_suite(
            &config,
            &[
                PropertyId::NonnegBoundSound,
                PropertyId::RowSumSandwich,
                PropertyId::AbsDomination,
            ],
        )
        .unwrap();
        assert!(result.passed(), "violations: {:?}", result.violations);
        assert!(result.properties[&PropertyId::NonnegBoundSound].pass > 0);
    }

    #[test]
    fn bipartite_equality_suite_on_connected_graphs_is_clean() {
        let config = TrialConfig {
            trials: 60,
            size_range: (2, 12),
            require_connected: true,
            ..TrialConfig::new(Model::Gnp, 3)
        };
        let result = run_suite(&config, &[PropertyId::BipartiteLaplacianEquality]).unwrap();
        assert!(result.passed(), "violations: {:?}", result.violations);
        let counts = result.properties[&PropertyId::BipartiteLaplacianEquality];
        assert_eq!(counts.pass, 60);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut config = TrialConfig::new(Model::Gnp, 0);
        config.trials = 0;
        assert!(matches!(
            run_suite(&config, &[]),
            Err(HarnessError::InvalidConfig(_))
        ));
        let mut config = TrialConfig::new(Model::Gnp, 0);
        config.size_range = (5, 2);
        assert!(config.validate().is_err());
        let mut config = TrialConfig::new(Model::Gnp, 0);
        config.density = 0.0;
        assert!(config.validate().is_err());
    }

    #[test]
    fn equality_search_reports_regular_instances() {
        let config = TrialConfig {
            trials: 10,
            size_range: (4, 8),
            degree: Some(3),
            ..TrialConfig::new(Model::RandomRegular, 11)
        };
        let cases = equality_case_search(&config).unwrap();
        // every r-regular instance attains the adjacency and signless
        // Laplacian bounds
        let adjacency_hits = cases
            .iter()
            .filter(|c| c.kind == BoundKind::Graph(MatrixKind::Adjacency))
            .count();
        let signless_hits = cases
            .iter()
            .filter(|c| c.kind == BoundKind::Graph(MatrixKind::SignlessLaplacian))
            .count();
        assert!(adjacency_hits > 0);
        assert_eq!(adjacency_hits, signless_hits);
    }
}
