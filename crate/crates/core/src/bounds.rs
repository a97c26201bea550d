//! The row-support spectral-radius bound and its graph specializations.
//!
//! For a nonnegative n×n matrix B with l_k nonzero off-diagonal entries in
//! row k, the spectral radius satisfies
//!
//! ```text
//! ρ(B) ≤ max_i { b_ii + √( Σ_{k≠i} l_k · b_ki² ) }
//! ```
//!
//! — note the radicand aggregates column i, weighted by the row counts l_k.
//! For an arbitrary-sign matrix the same expression evaluated on the
//! entrywise moduli bounds ρ(A) (since ρ(A) ≤ ρ(|A|)), which is how the
//! Laplacian-family bounds work.
//!
//! When the bound is attained by an irreducible matrix, all n per-index
//! expressions must coincide; [`equality_diagnostic`] checks that necessary
//! condition. It is not sufficient — no sufficiency characterization is
//! known, so [`BoundReport::all_equal`] never certifies equality.
//!
//! Twelve closed-form specializations are provided: for each of the six
//! matrix kinds of a graph ([`graph_bound`]) or digraph ([`digraph_bound`]),
//! the per-index expressions reduce to small integer aggregates of degrees,
//! neighbor-degree sums, transmissions, or distance-column square sums.
//! Those integers are accumulated exactly in u64 and only the final square
//! root is floating point, so expression-equality checks are exact whenever
//! the underlying condition is an integer identity.

use crate::graphs::{
    degrees, distance_matrix, distance_matrix_digraph, in_neighbor_outdegree_sums, is_connected,
    is_strongly_connected, neighbor_degree_sums, out_degrees, Digraph, Graph, GraphError,
};
use crate::linalg::{
    entrywise_abs, is_irreducible, spectral_radius_general, DenseMatrix, LinalgError,
};
use crate::spectra::{
    build_digraph_matrix, build_graph_matrix, exact_digraph_radius, exact_graph_radius, MatrixKind,
    SpectraError,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("entry ({row},{col}) = {value} is negative; use modulus_bound for signed input")]
    NegativeEntry { row: usize, col: usize, value: f64 },

    #[error("equality diagnostic requires a report carrying an exact radius")]
    MissingExactRadius,

    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error(transparent)]
    Solver(#[from] LinalgError),
}

impl From<SpectraError> for BoundsError {
    fn from(e: SpectraError) -> Self {
        match e {
            SpectraError::Graph(g) => BoundsError::Graph(g),
            SpectraError::Solver(s) => BoundsError::Solver(s),
        }
    }
}

/// Comparison tolerances, both relative to max(1, bound).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Equality-of-bound-and-radius tolerance (gap ≈ 0).
    pub gap_tol: f64,
    /// Expression-equality and argmax-tie tolerance.
    pub eq_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            gap_tol: 1e-8,
            eq_tol: 1e-9,
        }
    }
}

/// Which bound a report came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundKind {
    /// Row-support bound on a nonnegative matrix.
    General,
    /// Row-support bound on the entrywise moduli of a signed matrix.
    Modulus,
    /// Closed-form specialization for an undirected graph matrix.
    Graph(MatrixKind),
    /// Closed-form specialization for a digraph matrix.
    Digraph(MatrixKind),
}

/// One per-index expression e_i = c_i + √s_i.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpressionValue {
    pub index: usize,
    /// c_i: the diagonal entry (its modulus on the signed route).
    pub diag_term: f64,
    /// s_i ≥ 0: an exact integer for every graph specialization.
    pub radicand: f64,
    pub value: f64,
}

impl ExpressionValue {
    fn new(index: usize, diag_term: f64, radicand: f64) -> Self {
        ExpressionValue {
            index,
            diag_term,
            radicand,
            value: diag_term + radicand.sqrt(),
        }
    }
}

/// Full evaluation of one bound on one input.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub expressions: Vec<ExpressionValue>,
    /// max_i e_i, the upper bound on the spectral radius.
    pub bound: f64,
    /// Indices whose expression is within tolerance of the max, ascending.
    pub argmax: Vec<usize>,
    pub exact_radius: Option<f64>,
    /// bound − exact_radius; ≥ −tolerance by the theorem, 0 at equality.
    pub gap: Option<f64>,
    /// All n expressions agree within the expression tolerance. Necessary
    /// for equality on irreducible input, never sufficient.
    pub all_equal: bool,
    pub irreducible: bool,
}

/// Outcome of the equality necessary-condition check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosticVerdict {
    /// |bound − ρ| within the gap tolerance.
    pub equality_holds: bool,
    pub all_expressions_equal: bool,
    /// Irreducible input attained the bound with unequal expressions —
    /// impossible if both the bound and the solver are correct.
    pub violates_necessary_condition: bool,
}

/// Row-support bound for a nonnegative matrix, with the exact radius and
/// equality diagnostics attached.
pub fn general_bound(b: &DenseMatrix, tol: &Tolerances) -> Result<BoundReport, BoundsError> {
    if let Some((row, col, value)) = b.first_negative() {
        return Err(BoundsError::NegativeEntry { row, col, value });
    }
    let expressions = support_expressions(b);
    let exact = spectral_radius_general(b)?.radius;
    Ok(assemble(
        BoundKind::General,
        expressions,
        Some(exact),
        is_irreducible(b),
        tol,
    ))
}

/// Modulus-route bound for a matrix with entries of any sign: the
/// expressions are evaluated on |A| while the exact radius is ρ(A) itself.
pub fn modulus_bound(a: &DenseMatrix, tol: &Tolerances) -> Result<BoundReport, BoundsError> {
    let abs = entrywise_abs(a);
    let expressions = support_expressions(&abs);
    let exact = spectral_radius_general(a)?.radius;
    Ok(assemble(
        BoundKind::Modulus,
        expressions,
        Some(exact),
        is_irreducible(a),
        tol,
    ))
}

/// Closed-form bound for one matrix kind of an undirected graph.
///
/// Per-index expressions, with S_i the neighbor-degree sum, D_i the
/// transmission and d_ki the distance from k to i:
///
/// * adjacency: √S_i
/// * Laplacian / signless Laplacian: d_i + √S_i
/// * distance: √((n−1)·Σ_k d_ki²)
/// * distance (signless) Laplacian: D_i + √((n−1)·Σ_k d_ki²)
pub fn graph_bound(
    kind: MatrixKind,
    g: &Graph,
    tol: &Tolerances,
) -> Result<BoundReport, BoundsError> {
    let expressions = graph_expressions(kind, g)?;
    let exact = exact_graph_radius(kind, g)?.radius;
    let irreducible = if kind.is_distance_family() {
        true // connectivity established; distance support is complete
    } else {
        is_connected(g)
    };
    Ok(assemble(
        BoundKind::Graph(kind),
        expressions,
        Some(exact),
        irreducible,
        tol,
    ))
}

/// Closed-form bound for one matrix kind of a digraph. T_i is the sum of
/// out-degrees over the in-neighbors of i (the bound aggregates column i,
/// so the arcs pointing *into* i are what count); distance kinds use
/// directed distances into i.
pub fn digraph_bound(
    kind: MatrixKind,
    d: &Digraph,
    tol: &Tolerances,
) -> Result<BoundReport, BoundsError> {
    let expressions = digraph_expressions(kind, d)?;
    let exact = exact_digraph_radius(kind, d)?.radius;
    let irreducible = if kind.is_distance_family() {
        true
    } else {
        is_strongly_connected(d)
    };
    Ok(assemble(
        BoundKind::Digraph(kind),
        expressions,
        Some(exact),
        irreducible,
        tol,
    ))
}

/// Check the equality necessary condition on a finished report: if an
/// irreducible input attains its bound, every per-index expression must
/// agree. Expression equality alone certifies nothing (sufficiency is
/// open), so only the implication is diagnosed.
pub fn equality_diagnostic(
    report: &BoundReport,
    irreducible: bool,
    tol: &Tolerances,
) -> Result<DiagnosticVerdict, BoundsError> {
    let exact = report.exact_radius.ok_or(BoundsError::MissingExactRadius)?;
    let scale = report.bound.abs().max(1.0);
    let equality_holds = (report.bound - exact).abs() <= tol.gap_tol * scale;
    let all_expressions_equal = expressions_all_equal(&report.expressions, tol.eq_tol, scale);
    Ok(DiagnosticVerdict {
        equality_holds,
        all_expressions_equal,
        violates_necessary_condition: irreducible && equality_holds && !all_expressions_equal,
    })
}

/// Internal-consistency check: for every applicable kind, the closed-form
/// expressions must equal the row-support expressions evaluated on the
/// actually-built matrix, index by index. Returns the worst absolute
/// discrepancy per kind (over diagonal term, radicand and value).
pub fn specialization_check(g: &Graph) -> Result<Vec<(MatrixKind, f64)>, BoundsError> {
    let connected = is_connected(g);
    let mut out = Vec::new();
    for kind in MatrixKind::ALL {
        if kind.is_distance_family() && !connected {
            continue;
        }
        let specialized = graph_expressions(kind, g)?;
        let matrix = build_graph_matrix(kind, g)?;
        out.push((kind, expression_discrepancy(&specialized, &matrix)));
    }
    Ok(out)
}

pub fn specialization_check_digraph(d: &Digraph) -> Result<Vec<(MatrixKind, f64)>, BoundsError> {
    let strong = is_strongly_connected(d);
    let mut out = Vec::new();
    for kind in MatrixKind::ALL {
        if kind.is_distance_family() && !strong {
            continue;
        }
        let specialized = digraph_expressions(kind, d)?;
        let matrix = build_digraph_matrix(kind, d)?;
        out.push((kind, expression_discrepancy(&specialized, &matrix)));
    }
    Ok(out)
}

/// The general per-index expressions of a nonnegative matrix: l_k counts
/// the nonzero off-diagonal entries of row k (exact ≠ 0 — inputs are
/// constructed values, not computed ones; pre-threshold noisy data first),
/// and index i aggregates column i weighted by those counts.
pub(crate) fn support_expressions(b: &DenseMatrix) -> Vec<ExpressionValue> {
    let n = b.n();
    let mut row_support = vec![0usize; n];
    for (k, support) in row_support.iter_mut().enumerate() {
        *support = b
            .row(k)
            .iter()
            .enumerate()
            .filter(|&(j, &v)| j != k && v != 0.0)
            .count();
    }
    (0..n)
        .map(|i| {
            let mut radicand = 0.0;
            for k in 0..n {
                if k != i {
                    let x = b.get(k, i);
                    radicand += row_support[k] as f64 * x * x;
                }
            }
            ExpressionValue::new(i, b.get(i, i), radicand)
        })
        .collect()
}

fn graph_expressions(kind: MatrixKind, g: &Graph) -> Result<Vec<ExpressionValue>, GraphError> {
    let n = g.n();
    match kind {
        MatrixKind::Adjacency => {
            let s = neighbor_degree_sums(g);
            Ok((0..n)
                .map(|i| ExpressionValue::new(i, 0.0, s[i] as f64))
                .collect())
        }
        MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
            let d = degrees(g);
            let s = neighbor_degree_sums(g);
            Ok((0..n)
                .map(|i| ExpressionValue::new(i, d[i] as f64, s[i] as f64))
                .collect())
        }
        MatrixKind::Distance
        | MatrixKind::DistanceLaplacian
        | MatrixKind::DistanceSignlessLaplacian => {
            let dd = distance_matrix(g)?;
            Ok(distance_expressions(kind, &dd))
        }
    }
}

fn digraph_expressions(kind: MatrixKind, d: &Digraph) -> Result<Vec<ExpressionValue>, GraphError> {
    let n = d.n();
    match kind {
        MatrixKind::Adjacency => {
            let t = in_neighbor_outdegree_sums(d);
            Ok((0..n)
                .map(|i| ExpressionValue::new(i, 0.0, t[i] as f64))
                .collect())
        }
        MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
            let deg = out_degrees(d);
            let t = in_neighbor_outdegree_sums(d);
            Ok((0..n)
                .map(|i| ExpressionValue::new(i, deg[i] as f64, t[i] as f64))
                .collect())
        }
        MatrixKind::Distance
        | MatrixKind::DistanceLaplacian
        | MatrixKind::DistanceSignlessLaplacian => {
            let dd = distance_matrix_digraph(d)?;
            Ok(distance_expressions(kind, &dd))
        }
    }
}

fn distance_expressions(
    kind: MatrixKind,
    dd: &crate::graphs::DistanceData,
) -> Vec<ExpressionValue> {
    let n = dd.n();
    (0..n)
        .map(|i| {
            // (n−1)·Σ_k d_ki², exactly in u64 (n = 1 gives an empty radicand)
            let col_sq: u64 = (0..n).map(|k| dd.get(k, i) * dd.get(k, i)).sum();
            let radicand = (n as u64 - 1) * col_sq;
            let diag = if kind == MatrixKind::Distance {
                0.0
            } else {
                dd.transmissions()[i] as f64
            };
            ExpressionValue::new(i, diag, radicand as f64)
        })
        .collect()
}

fn assemble(
    kind: BoundKind,
    expressions: Vec<ExpressionValue>,
    exact_radius: Option<f64>,
    irreducible: bool,
    tol: &Tolerances,
) -> BoundReport {
    let bound = expressions
        .iter()
        .map(|e| e.value)
        .fold(f64::NEG_INFINITY, f64::max);
    let scale = bound.abs().max(1.0);
    let argmax = expressions
        .iter()
        .filter(|e| bound - e.value <= tol.eq_tol * scale)
        .map(|e| e.index)
        .collect();
    let all_equal = expressions_all_equal(&expressions, tol.eq_tol, scale);
    let gap = exact_radius.map(|r| bound - r);
    BoundReport {
        kind,
        expressions,
        bound,
        argmax,
        exact_radius,
        gap,
        all_equal,
        irreducible,
    }
}

fn expressions_all_equal(expressions: &[ExpressionValue], eq_tol: f64, scale: f64) -> bool {
    let max = expressions
        .iter()
        .map(|e| e.value)
        .fold(f64::NEG_INFINITY, f64::max);
    let min = expressions
        .iter()
        .map(|e| e.value)
        .fold(f64::INFINITY, f64::min);
    max - min <= eq_tol * scale
}

fn expression_discrepancy(specialized: &[ExpressionValue], matrix: &DenseMatrix) -> f64 {
    let general = support_expressions(&entrywise_abs(matrix));
    let mut worst = 0.0f64;
    for (s, g) in specialized.iter().zip(&general) {
        worst = worst
            .max((s.diag_term - g.diag_term).abs())
            .max((s.radicand - g.radicand).abs())
            .max((s.value - g.value).abs());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[f64]]) -> DenseMatrix {
        DenseMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn general_bound_swap_matrix() {
        let r = general_bound(&mat(&[&[0.0, 1.0], &[1.0, 0.0]]), &tol()).unwrap();
        assert_eq!(r.bound, 1.0);
        assert_eq!(r.expressions[0].value, 1.0);
        assert_eq!(r.expressions[1].value, 1.0);
        assert!(r.all_equal);
        assert!(r.irreducible);
        assert!(r.gap.unwrap().abs() < 1e-10);
        assert_eq!(r.argmax, vec![0, 1]);
    }

    #[test]
    fn general_bound_hand_worked_2x2() {
        // l = (1, 1): e_1 = 1 + √9 = 4, e_2 = 4 + √4 = 6
        let r = general_bound(&mat(&[&[1.0, 2.0], &[3.0, 4.0]]), &tol()).unwrap();
        assert_eq!(r.expressions[0].value, 4.0);
        assert_eq!(r.expressions[1].value, 6.0);
        assert_eq!(r.bound, 6.0);
        assert_eq!(r.argmax, vec![1]);
        assert!(!r.all_equal);
        let exact = (5.0 + 33f64.sqrt()) / 2.0;
        assert!((r.exact_radius.unwrap() - exact).abs() < 1e-10);
        assert!((r.gap.unwrap() - (6.0 - exact)).abs() < 1e-10);
    }

    #[test]
    fn general_bound_scalar() {
        let r = general_bound(&mat(&[&[5.0]]), &tol()).unwrap();
        assert_eq!(r.bound, 5.0);
        assert_eq!(r.expressions[0].radicand, 0.0);
        assert_eq!(r.gap.unwrap(), 0.0);
        assert!(r.irreducible);
    }

    #[test]
    fn general_bound_rejects_signs() {
        assert!(matches!(
            general_bound(&mat(&[&[0.0, -1.0], &[1.0, 0.0]]), &tol()),
            Err(BoundsError::NegativeEntry { row: 0, col: 1, .. })
        ));
    }

    #[test]
    fn modulus_bound_reduces_to_general_on_moduli() {
        let signed = modulus_bound(&mat(&[&[1.0, -2.0], &[-3.0, 4.0]]), &tol()).unwrap();
        let unsigned = general_bound(&mat(&[&[1.0, 2.0], &[3.0, 4.0]]), &tol()).unwrap();
        assert_eq!(signed.bound, unsigned.bound);
        for (s, u) in signed.expressions.iter().zip(&unsigned.expressions) {
            assert_eq!(s.value, u.value);
        }
        // same characteristic polynomial here, so even the radii agree
        assert!((signed.exact_radius.unwrap() - unsigned.exact_radius.unwrap()).abs() < 1e-10);
    }

    #[test]
    fn modulus_bound_path_laplacian() {
        // |L(P_3)| row supports (1, 2, 1): expressions 1+√2, 2+√2, 1+√2;
        // the exact Laplacian radius is 3, so the gap is √2 − 1
        let lap = mat(&[&[1.0, -1.0, 0.0], &[-1.0, 2.0, -1.0], &[0.0, -1.0, 1.0]]);
        let r = modulus_bound(&lap, &tol()).unwrap();
        let sqrt2 = 2f64.sqrt();
        assert!((r.expressions[0].value - (1.0 + sqrt2)).abs() < 1e-15);
        assert!((r.expressions[1].value - (2.0 + sqrt2)).abs() < 1e-15);
        assert!((r.expressions[2].value - (1.0 + sqrt2)).abs() < 1e-15);
        assert!((r.bound - 3.414214).abs() < 1e-6);
        assert!((r.exact_radius.unwrap() - 3.0).abs() < 1e-10);
        assert!((r.gap.unwrap() - (sqrt2 - 1.0)).abs() < 1e-9);
    }

    #[test]
    fn modulus_bound_zero_matrix() {
        let r = modulus_bound(&DenseMatrix::zeros(2), &tol()).unwrap();
        assert_eq!(r.bound, 0.0);
        assert_eq!(r.gap.unwrap(), 0.0);
        assert!(!r.irreducible);
    }

    #[test]
    fn graph_bound_adjacency_path() {
        let r = graph_bound(MatrixKind::Adjacency, &Graph::path(3), &tol()).unwrap();
        assert!((r.bound - 2f64.sqrt()).abs() < 1e-15);
        assert!(
            r.gap.unwrap().abs() < 1e-10,
            "bipartite semi-regular attains the bound"
        );
        assert!(r.all_equal);
    }

    #[test]
    fn graph_bound_signless_star() {
        let r = graph_bound(MatrixKind::SignlessLaplacian, &Graph::star(3), &tol()).unwrap();
        let sqrt3 = 3f64.sqrt();
        assert!((r.bound - (3.0 + sqrt3)).abs() < 1e-15);
        assert_eq!(r.argmax, vec![0]);
        assert!((r.exact_radius.unwrap() - 4.0).abs() < 1e-10);
        assert!(r.gap.unwrap() > 0.7, "star bound is strict");
        assert!(!r.all_equal);
    }

    #[test]
    fn graph_bound_distance_signless_path() {
        let r =
            graph_bound(MatrixKind::DistanceSignlessLaplacian, &Graph::path(3), &tol()).unwrap();
        assert!((r.bound - (3.0 + 10f64.sqrt())).abs() < 1e-15);
        let exact = (7.0 + 17f64.sqrt()) / 2.0;
        assert!((r.exact_radius.unwrap() - exact).abs() < 1e-10);
    }

    #[test]
    fn graph_bound_distance_triangle_attains() {
        let r = graph_bound(MatrixKind::Distance, &Graph::complete(3), &tol()).unwrap();
        assert_eq!(r.bound, 2.0);
        assert!(r.gap.unwrap().abs() < 1e-10);
    }

    #[test]
    fn graph_bound_single_vertex_distance_kinds() {
        let g = Graph::new(1, []).unwrap();
        for kind in MatrixKind::ALL {
            let r = graph_bound(kind, &g, &tol()).unwrap();
            assert_eq!(r.bound, 0.0, "{kind}");
            assert_eq!(r.expressions[0].radicand, 0.0);
            assert_eq!(r.gap.unwrap(), 0.0);
        }
    }

    #[test]
    fn graph_bound_disconnected_distance_errors() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(
            graph_bound(MatrixKind::Distance, &g, &tol()),
            Err(BoundsError::Graph(GraphError::Disconnected))
        ));
        // adjacency-family kinds still work, flagged reducible
        let r = graph_bound(MatrixKind::Adjacency, &g, &tol()).unwrap();
        assert!(!r.irreducible);
    }

    #[test]
    fn digraph_bound_cycle_examples() {
        let c3 = Digraph::cycle(3);
        let adj = digraph_bound(MatrixKind::Adjacency, &c3, &tol()).unwrap();
        assert_eq!(adj.bound, 1.0);
        assert!(adj.gap.unwrap().abs() < 1e-9);

        let q = digraph_bound(MatrixKind::SignlessLaplacian, &c3, &tol()).unwrap();
        assert_eq!(q.bound, 2.0);
        assert!(q.gap.unwrap().abs() < 1e-9);

        let dl = digraph_bound(MatrixKind::DistanceLaplacian, &c3, &tol()).unwrap();
        assert!((dl.bound - (3.0 + 10f64.sqrt())).abs() < 1e-15);
        assert!((dl.exact_radius.unwrap() - 21f64.sqrt()).abs() < 1e-9);

        let c5 = Digraph::cycle(5);
        let dist = digraph_bound(MatrixKind::Distance, &c5, &tol()).unwrap();
        assert!((dist.bound - 120f64.sqrt()).abs() < 1e-12);
        assert!((dist.exact_radius.unwrap() - 10.0).abs() < 1e-9);
    }

    #[test]
    fn equality_diagnostic_cases() {
        let t = tol();
        // complete graph: equality with all expressions equal — consistent
        let k4 = graph_bound(MatrixKind::Adjacency, &Graph::complete(4), &t).unwrap();
        let v = equality_diagnostic(&k4, k4.irreducible, &t).unwrap();
        assert!(v.equality_holds && v.all_expressions_equal);
        assert!(!v.violates_necessary_condition);

        // P_4: strict bound, unequal expressions — consistent
        let p4 = graph_bound(MatrixKind::Adjacency, &Graph::path(4), &t).unwrap();
        assert!((p4.bound - 3f64.sqrt()).abs() < 1e-15);
        assert!((p4.exact_radius.unwrap() - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-10);
        let v = equality_diagnostic(&p4, p4.irreducible, &t).unwrap();
        assert!(!v.equality_holds && !v.all_expressions_equal);
        assert!(!v.violates_necessary_condition);

        // star signless Laplacian: strict, unequal — consistent
        let star = graph_bound(MatrixKind::SignlessLaplacian, &Graph::star(3), &t).unwrap();
        let v = equality_diagnostic(&star, star.irreducible, &t).unwrap();
        assert!(!v.equality_holds && !v.all_expressions_equal);
        assert!(!v.violates_necessary_condition);
    }

    #[test]
    fn equality_diagnostic_needs_exact_radius() {
        let mut r = graph_bound(MatrixKind::Adjacency, &Graph::path(3), &tol()).unwrap();
        r.exact_radius = None;
        assert!(matches!(
            equality_diagnostic(&r, true, &tol()),
            Err(BoundsError::MissingExactRadius)
        ));
    }

    #[test]
    fn specialization_identity_small_instances() {
        for g in [
            Graph::path(3),
            Graph::complete(4),
            Graph::cycle(5),
            Graph::star(4),
        ] {
            for (kind, disc) in specialization_check(&g).unwrap() {
                assert!(disc <= 1e-12, "{kind} discrepancy {disc}");
            }
        }
        for d in [Digraph::cycle(3), Digraph::cycle(5), Digraph::complete(3)] {
            for (kind, disc) in specialization_check_digraph(&d).unwrap() {
                assert!(disc <= 1e-12, "{kind} discrepancy {disc}");
            }
        }
    }

    #[test]
    fn specialization_check_skips_distance_kinds_when_disconnected() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let kinds: Vec<MatrixKind> = specialization_check(&g)
            .unwrap()
            .into_iter()
            .map(|(k, _)| k)
            .collect();
        assert_eq!(
            kinds,
            vec![
                MatrixKind::Adjacency,
                MatrixKind::Laplacian,
                MatrixKind::SignlessLaplacian
            ]
        );
    }

    #[test]
    fn scale_covariance() {
        let b = mat(&[&[1.0, 2.0, 0.0], &[0.5, 0.0, 3.0], &[4.0, 0.0, 1.0]]);
        let base = general_bound(&b, &tol()).unwrap();
        let scaled = general_bound(&b.scaled(2.0), &tol()).unwrap();
        assert!((scaled.bound - 2.0 * base.bound).abs() < 1e-12);
    }
}
