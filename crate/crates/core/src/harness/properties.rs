//! The checkable properties: every inequality and equality claim the
//! bounds make, as executable predicates over generated instances.
//!
//! A property either passes, fails with observed values, or skips when it
//! does not apply to the instance at hand (wrong instance type, missing
//! connectivity, or a solver that declined to converge on a degenerate
//! reducible input).

use super::Instance;
use crate::bounds::{
    digraph_bound, equality_diagnostic, general_bound, graph_bound, modulus_bound,
    specialization_check, specialization_check_digraph, BoundReport, Tolerances,
};
use crate::graphs::{is_bipartite, is_connected, Graph};
use crate::linalg::{
    entrywise_abs, is_irreducible, row_sum_interval, spectral_radius_general,
    spectral_radius_nonnegative, spectral_radius_symmetric,
};
use crate::spectra::{exact_graph_radius, MatrixKind};
use serde::{Deserialize, Serialize};

/// Expression-agreement tolerance for the equality necessary condition
/// (looser than the report-level expression tolerance: the exact radius
/// itself is only known to solver accuracy).
pub const NECESSARY_CONDITION_EXPR_TOL: f64 = 1e-6;

/// Per-index tolerance for the closed-form vs row-support identity.
pub const SPECIALIZATION_TOL: f64 = 1e-10;

/// Cross-solver agreement tolerance, relative to max(1, radius).
pub const SOLVER_AGREEMENT_TOL: f64 = 1e-8;

/// Similarity-invariance tolerance, relative to max(1, radius).
pub const PERMUTATION_TOL: f64 = 1e-9;

/// Radii below this fraction of the matrix scale are treated as
/// numerically zero for the invariance comparison (defective spectra).
pub const DEFECT_FLOOR: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PropertyId {
    /// ρ(B) ≤ row-support bound for nonnegative B.
    NonnegBoundSound,
    /// ρ(A) ≤ modulus-route bound for any real A.
    ModulusBoundSound,
    /// ρ(A) ≤ ρ(|A|).
    AbsDomination,
    /// min row sum ≤ ρ ≤ max row sum; equal row sums pin ρ exactly on
    /// irreducible input.
    RowSumSandwich,
    /// Connected graphs: Laplacian radius ≤ signless Laplacian radius,
    /// with equality exactly on bipartite graphs.
    BipartiteLaplacianEquality,
    /// Every applicable graph-kind bound dominates its exact radius.
    GraphBoundsSound,
    /// Every applicable digraph-kind bound dominates its exact radius.
    DigraphBoundsSound,
    /// Irreducible input attaining a bound has all expressions equal.
    EqualityExpressions,
    /// Closed-form expressions match the row-support expressions on the
    /// built matrices.
    SpecializationIdentity,
    /// Jacobi vs QR on symmetrized input; power iteration vs QR on
    /// irreducible nonnegative input.
    SolverAgreement,
    /// Simultaneous row/column permutations leave radii unchanged.
    PermutationInvariance,
}

pub const ALL_PROPERTIES: [PropertyId; 11] = [
    PropertyId::NonnegBoundSound,
    PropertyId::ModulusBoundSound,
    PropertyId::AbsDomination,
    PropertyId::RowSumSandwich,
    PropertyId::BipartiteLaplacianEquality,
    PropertyId::GraphBoundsSound,
    PropertyId::DigraphBoundsSound,
    PropertyId::EqualityExpressions,
    PropertyId::SpecializationIdentity,
    PropertyId::SolverAgreement,
    PropertyId::PermutationInvariance,
];

impl PropertyId {
    pub fn label(self) -> &'static str {
        match self {
            PropertyId::NonnegBoundSound => "nonneg-bound-sound",
            PropertyId::ModulusBoundSound => "modulus-bound-sound",
            PropertyId::AbsDomination => "abs-domination",
            PropertyId::RowSumSandwich => "row-sum-sandwich",
            PropertyId::BipartiteLaplacianEquality => "bipartite-laplacian-equality",
            PropertyId::GraphBoundsSound => "graph-bounds-sound",
            PropertyId::DigraphBoundsSound => "digraph-bounds-sound",
            PropertyId::EqualityExpressions => "equality-expressions",
            PropertyId::SpecializationIdentity => "specialization-identity",
            PropertyId::SolverAgreement => "solver-agreement",
            PropertyId::PermutationInvariance => "permutation-invariance",
        }
    }
}

impl std::fmt::Display for PropertyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// What a failing property saw, for the violation record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObservedValues {
    pub bound: Option<f64>,
    pub exact_radius: Option<f64>,
    pub expressions: Vec<f64>,
    pub detail: String,
}

impl ObservedValues {
    fn message(detail: impl Into<String>) -> Self {
        ObservedValues {
            bound: None,
            exact_radius: None,
            expressions: Vec::new(),
            detail: detail.into(),
        }
    }

    fn from_report(report: &BoundReport, detail: impl Into<String>) -> Self {
        ObservedValues {
            bound: Some(report.bound),
            exact_radius: report.exact_radius,
            expressions: report.expressions.iter().map(|e| e.value).collect(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Outcome {
    Pass,
    Fail(ObservedValues),
    Skip,
}

/// Evaluate one property on one instance; a pure function of its inputs.
pub fn evaluate(property: PropertyId, instance: &Instance, tol: &Tolerances) -> Outcome {
    match property {
        PropertyId::NonnegBoundSound => nonneg_bound_sound(instance, tol),
        PropertyId::ModulusBoundSound => modulus_bound_sound(instance, tol),
        PropertyId::AbsDomination => abs_domination(instance, tol),
        PropertyId::RowSumSandwich => row_sum_sandwich(instance, tol),
        PropertyId::BipartiteLaplacianEquality => bipartite_laplacian_equality(instance, tol),
        PropertyId::GraphBoundsSound => graph_bounds_sound(instance, tol),
        PropertyId::DigraphBoundsSound => digraph_bounds_sound(instance, tol),
        PropertyId::EqualityExpressions => equality_expressions(instance, tol),
        PropertyId::SpecializationIdentity => specialization_identity(instance),
        PropertyId::SolverAgreement => solver_agreement(instance),
        PropertyId::PermutationInvariance => permutation_invariance(instance),
    }
}

fn soundness_outcome(report: &BoundReport, tol: &Tolerances, label: &str) -> Outcome {
    let gap = report.gap.expect("bound operations attach exact radii");
    if gap < -tol.gap_tol * report.bound.abs().max(1.0) {
        Outcome::Fail(ObservedValues::from_report(
            report,
            format!("{label}: exact radius exceeds the bound by {:e}", -gap),
        ))
    } else {
        Outcome::Pass
    }
}

fn nonneg_bound_sound(instance: &Instance, tol: &Tolerances) -> Outcome {
    let Instance::Matrix(m) = instance else {
        return Outcome::Skip;
    };
    if !m.is_nonnegative() {
        return Outcome::Skip;
    }
    match general_bound(m, tol) {
        Ok(report) => soundness_outcome(&report, tol, "general bound"),
        Err(_) => Outcome::Skip,
    }
}

fn modulus_bound_sound(instance: &Instance, tol: &Tolerances) -> Outcome {
    let Instance::Matrix(m) = instance else {
        return Outcome::Skip;
    };
    match modulus_bound(m, tol) {
        Ok(report) => soundness_outcome(&report, tol, "modulus bound"),
        Err(_) => Outcome::Skip,
    }
}

fn abs_domination(instance: &Instance, tol: &Tolerances) -> Outcome {
    let Instance::Matrix(m) = instance else {
        return Outcome::Skip;
    };
    let (Ok(signed), Ok(unsigned)) = (
        spectral_radius_general(m),
        spectral_radius_general(&entrywise_abs(m)),
    ) else {
        return Outcome::Skip;
    };
    if signed.radius > unsigned.radius + tol.gap_tol * unsigned.radius.max(1.0) {
        Outcome::Fail(ObservedValues {
            bound: Some(unsigned.radius),
            exact_radius: Some(signed.radius),
            expressions: Vec::new(),
            detail: "entrywise moduli must dominate the signed radius".into(),
        })
    } else {
        Outcome::Pass
    }
}

fn row_sum_sandwich(instance: &Instance, tol: &Tolerances) -> Outcome {
    let Instance::Matrix(m) = instance else {
        return Outcome::Skip;
    };
    if !m.is_nonnegative() {
        return Outcome::Skip;
    }
    let (min_sum, max_sum) = row_sum_interval(m).expect("nonnegativity checked");
    let Ok(result) = spectral_radius_general(m) else {
        return Outcome::Skip;
    };
    let rho = result.radius;
    let scale = max_sum.max(1.0);
    if rho < min_sum - tol.gap_tol * scale || rho > max_sum + tol.gap_tol * scale {
        return Outcome::Fail(ObservedValues {
            bound: Some(max_sum),
            exact_radius: Some(rho),
            expressions: vec![min_sum, max_sum],
            detail: "radius escaped the row-sum interval".into(),
        });
    }
    let rows_equal = max_sum - min_sum <= 1e-12 * scale;
    if rows_equal && is_irreducible(m) && (rho - max_sum).abs() > tol.gap_tol * scale {
        return Outcome::Fail(ObservedValues {
            bound: Some(max_sum),
            exact_radius: Some(rho),
            expressions: vec![min_sum, max_sum],
            detail: "equal row sums on an irreducible matrix must pin the radius".into(),
        });
    }
    Outcome::Pass
}

fn bipartite_laplacian_equality(instance: &Instance, tol: &Tolerances) -> Outcome {
    let Instance::Graph(g) = instance else {
        return Outcome::Skip;
    };
    if !is_connected(g) {
        return Outcome::Skip;
    }
    let (Ok(mu), Ok(q)) = (
        exact_graph_radius(MatrixKind::Laplacian, g),
        exact_graph_radius(MatrixKind::SignlessLaplacian, g),
    ) else {
        return Outcome::Skip;
    };
    let scale = q.radius.max(1.0);
    if mu.radius > q.radius + tol.gap_tol * scale {
        return Outcome::Fail(ObservedValues {
            bound: Some(q.radius),
            exact_radius: Some(mu.radius),
            expressions: Vec::new(),
            detail: "Laplacian radius exceeded the signless Laplacian radius".into(),
        });
    }
    let equal = (mu.radius - q.radius).abs() <= tol.gap_tol * scale;
    let bipartite = is_bipartite(g).is_some();
    if equal != bipartite {
        return Outcome::Fail(ObservedValues {
            bound: Some(q.radius),
            exact_radius: Some(mu.radius),
            expressions: Vec::new(),
            detail: format!("radius equality {equal} but bipartite {bipartite}"),
        });
    }
    Outcome::Pass
}

fn applicable_graph_kinds(g: &Graph) -> Vec<MatrixKind> {
    let connected = is_connected(g);
    MatrixKind::ALL
        .into_iter()
        .filter(|k| connected || !k.is_distance_family())
        .collect()
}

fn graph_bounds_sound(instance: &Instance, tol: &Tolerances) -> Outcome {
    let Instance::Graph(g) = instance else {
        return Outcome::Skip;
    };
    for kind in applicable_graph_kinds(g) {
        match graph_bound(kind, g, tol) {
            Ok(report) => {
                if let Outcome::Fail(obs) = soundness_outcome(&report, tol, kind.label()) {
                    return Outcome::Fail(obs);
                }
            }
            Err(_) => return Outcome::Skip,
        }
    }
    Outcome::Pass
}

fn digraph_bounds_sound(instance: &Instance, tol: &Tolerances) -> Outcome {
    let Instance::Digraph(d) = instance else {
        return Outcome::Skip;
    };
    let strong = crate::graphs::is_strongly_connected(d);
    for kind in MatrixKind::ALL {
        if kind.is_distance_family() && !strong {
            continue;
        }
        match digraph_bound(kind, d, tol) {
            Ok(report) => {
                if let Outcome::Fail(obs) = soundness_outcome(&report, tol, kind.label()) {
                    return Outcome::Fail(obs);
                }
            }
            Err(_) => return Outcome::Skip,
        }
    }
    Outcome::Pass
}

fn equality_expressions(instance: &Instance, tol: &Tolerances) -> Outcome {
    let mut reports: Vec<BoundReport> = Vec::new();
    match instance {
        Instance::Matrix(m) => {
            let report = if m.is_nonnegative() {
                general_bound(m, tol)
            } else {
                modulus_bound(m, tol)
            };
            match report {
                Ok(r) => reports.push(r),
                Err(_) => return Outcome::Skip,
            }
        }
        Instance::Graph(g) => {
            for kind in applicable_graph_kinds(g) {
                match graph_bound(kind, g, tol) {
                    Ok(r) => reports.push(r),
                    Err(_) => return Outcome::Skip,
                }
            }
        }
        Instance::Digraph(d) => {
            let strong = crate::graphs::is_strongly_connected(d);
            for kind in MatrixKind::ALL {
                if kind.is_distance_family() && !strong {
                    continue;
                }
                match digraph_bound(kind, d, tol) {
                    Ok(r) => reports.push(r),
                    Err(_) => return Outcome::Skip,
                }
            }
        }
    }
    let diag_tol = Tolerances {
        gap_tol: tol.gap_tol,
        eq_tol: NECESSARY_CONDITION_EXPR_TOL,
    };
    for report in &reports {
        let verdict = equality_diagnostic(report, report.irreducible, &diag_tol)
            .expect("reports carry exact radii");
        if verdict.violates_necessary_condition {
            return Outcome::Fail(ObservedValues::from_report(
                report,
                "bound attained on irreducible input with unequal expressions",
            ));
        }
    }
    Outcome::Pass
}

fn specialization_identity(instance: &Instance) -> Outcome {
    let checks = match instance {
        Instance::Graph(g) => specialization_check(g),
        Instance::Digraph(d) => specialization_check_digraph(d),
        Instance::Matrix(_) => return Outcome::Skip,
    };
    match checks {
        Ok(results) => {
            for (kind, discrepancy) in results {
                if discrepancy > SPECIALIZATION_TOL {
                    return Outcome::Fail(ObservedValues::message(format!(
                        "{kind} expressions deviate from the row-support form by {discrepancy:e}"
                    )));
                }
            }
            Outcome::Pass
        }
        Err(_) => Outcome::Skip,
    }
}

fn solver_agreement(instance: &Instance) -> Outcome {
    let Instance::Matrix(m) = instance else {
        return Outcome::Skip;
    };
    // symmetrize for the Jacobi route
    let n = m.n();
    let mut sym = m.clone();
    for i in 0..n {
        for j in 0..n {
            let avg = 0.5 * (m.get(i, j) + m.get(j, i));
            sym.set(i, j, avg);
        }
    }
    let (Ok(jacobi), Ok(qr_sym)) = (
        spectral_radius_symmetric(&sym),
        spectral_radius_general(&sym),
    ) else {
        return Outcome::Skip;
    };
    if (jacobi.radius - qr_sym.radius).abs() > SOLVER_AGREEMENT_TOL * qr_sym.radius.max(1.0) {
        return Outcome::Fail(ObservedValues {
            bound: Some(jacobi.radius),
            exact_radius: Some(qr_sym.radius),
            expressions: Vec::new(),
            detail: "Jacobi and QR disagree on a symmetric matrix".into(),
        });
    }
    if m.is_nonnegative() && is_irreducible(m) {
        let (Ok(power), Ok(qr)) = (spectral_radius_nonnegative(m), spectral_radius_general(m))
        else {
            return Outcome::Skip;
        };
        if (power.radius - qr.radius).abs() > SOLVER_AGREEMENT_TOL * qr.radius.max(1.0) {
            return Outcome::Fail(ObservedValues {
                bound: Some(power.radius),
                exact_radius: Some(qr.radius),
                expressions: Vec::new(),
                detail: "power iteration and QR disagree on an irreducible matrix".into(),
            });
        }
    }
    Outcome::Pass
}

fn permutation_invariance(instance: &Instance) -> Outcome {
    let Instance::Matrix(m) = instance else {
        return Outcome::Skip;
    };
    let n = m.n();
    let Ok(base) = spectral_radius_general(m) else {
        return Outcome::Skip;
    };
    // A dominant eigenvalue that is numerically zero relative to the matrix
    // scale can be defective (structurally nilpotent support), where any
    // dense solver recovers it only to ~eps^(1/chain-length); the 1e-9
    // comparison is meaningful above this floor.
    let floor = DEFECT_FLOOR * m.frobenius_norm().max(1.0);
    if base.radius < floor {
        return Outcome::Skip;
    }
    let reversal: Vec<usize> = (0..n).rev().collect();
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    for perm in [reversal, rotation] {
        let Ok(permuted) = spectral_radius_general(&m.permuted(&perm)) else {
            return Outcome::Skip;
        };
        if permuted.radius < floor {
            return Outcome::Skip;
        }
        if (permuted.radius - base.radius).abs() > PERMUTATION_TOL * base.radius.max(1.0) {
            return Outcome::Fail(ObservedValues {
                bound: Some(base.radius),
                exact_radius: Some(permuted.radius),
                expressions: Vec::new(),
                detail: "similarity permutation changed the radius".into(),
            });
        }
    }
    Outcome::Pass
}
