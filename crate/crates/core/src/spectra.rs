//! The six standard matrices of a graph or digraph and their exact
//! spectral radii.
//!
//! For an undirected graph every one of the six matrices is symmetric, so
//! the Jacobi solver is the oracle. Digraph Laplacian and distance-Laplacian
//! matrices can have complex eigenvalues, so every digraph radius goes
//! through the general QR solver instead; the power-iteration route is never
//! applied to matrices with negative entries.

use crate::graphs::{
    degrees, distance_matrix, distance_matrix_digraph, out_degrees, Digraph, Graph, GraphError,
};
use crate::linalg::{
    spectral_radius_general, spectral_radius_symmetric, DenseMatrix, LinalgError, SpectralResult,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error(transparent)]
    Solver(#[from] LinalgError),
}

/// The six matrix families. Adjacency-family diagonals hold degrees,
/// distance-family diagonals hold transmissions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    Distance,
    DistanceLaplacian,
    DistanceSignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 6] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
        MatrixKind::Distance,
        MatrixKind::DistanceLaplacian,
        MatrixKind::DistanceSignlessLaplacian,
    ];

    /// Distance-family kinds need a connected / strongly connected input.
    pub fn is_distance_family(self) -> bool {
        matches!(
            self,
            MatrixKind::Distance
                | MatrixKind::DistanceLaplacian
                | MatrixKind::DistanceSignlessLaplacian
        )
    }

    /// Laplacian kinds carry negative off-diagonal entries, so their bound
    /// goes through the entrywise-modulus route.
    pub fn is_signed(self) -> bool {
        matches!(self, MatrixKind::Laplacian | MatrixKind::DistanceLaplacian)
    }

    pub fn label(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::SignlessLaplacian => "signless-laplacian",
            MatrixKind::Distance => "distance",
            MatrixKind::DistanceLaplacian => "distance-laplacian",
            MatrixKind::DistanceSignlessLaplacian => "distance-signless-laplacian",
        }
    }
}

impl std::fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Build the requested matrix of an undirected graph.
pub fn build_graph_matrix(kind: MatrixKind, g: &Graph) -> Result<DenseMatrix, GraphError> {
    let n = g.n();
    match kind {
        MatrixKind::Adjacency | MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
            let mut m = DenseMatrix::zeros(n);
            let off = if kind == MatrixKind::Laplacian { -1.0 } else { 1.0 };
            for &(u, v) in g.edges() {
                m.set(u, v, off);
                m.set(v, u, off);
            }
            if kind != MatrixKind::Adjacency {
                for (i, d) in degrees(g).into_iter().enumerate() {
                    m.set(i, i, d as f64);
                }
            }
            Ok(m)
        }
        MatrixKind::Distance | MatrixKind::DistanceLaplacian
        | MatrixKind::DistanceSignlessLaplacian => {
            let dd = distance_matrix(g)?;
            Ok(distance_family(kind, &dd))
        }
    }
}

/// Build the requested matrix of a digraph; the diagonal uses out-degrees
/// or out-transmissions.
pub fn build_digraph_matrix(kind: MatrixKind, d: &Digraph) -> Result<DenseMatrix, GraphError> {
    let n = d.n();
    match kind {
        MatrixKind::Adjacency | MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
            let mut m = DenseMatrix::zeros(n);
            let off = if kind == MatrixKind::Laplacian { -1.0 } else { 1.0 };
            for &(u, v) in d.arcs() {
                m.set(u, v, off);
            }
            if kind != MatrixKind::Adjacency {
                for (i, deg) in out_degrees(d).into_iter().enumerate() {
                    m.set(i, i, deg as f64);
                }
            }
            Ok(m)
        }
        MatrixKind::Distance | MatrixKind::DistanceLaplacian
        | MatrixKind::DistanceSignlessLaplacian => {
            let dd = distance_matrix_digraph(d)?;
            Ok(distance_family(kind, &dd))
        }
    }
}

fn distance_family(kind: MatrixKind, dd: &crate::graphs::DistanceData) -> DenseMatrix {
    let n = dd.n();
    let mut m = DenseMatrix::zeros(n);
    let sign = if kind == MatrixKind::DistanceLaplacian { -1.0 } else { 1.0 };
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m.set(i, j, sign * dd.get(i, j) as f64);
            }
        }
    }
    if kind != MatrixKind::Distance {
        for (i, &tr) in dd.transmissions().iter().enumerate() {
            m.set(i, i, tr as f64);
        }
    }
    m
}

/// Exact ρ of the requested matrix of an undirected graph
/// (symmetric solver: all six matrices are symmetric).
pub fn exact_graph_radius(kind: MatrixKind, g: &Graph) -> Result<SpectralResult, SpectraError> {
    let m = build_graph_matrix(kind, g)?;
    Ok(spectral_radius_symmetric(&m)?)
}

/// Exact ρ of the requested matrix of a digraph (general solver:
/// Laplacian-family eigenvalues may be complex).
pub fn exact_digraph_radius(kind: MatrixKind, d: &Digraph) -> Result<SpectralResult, SpectraError> {
    let m = build_digraph_matrix(kind, d)?;
    Ok(spectral_radius_general(&m)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entries(m: &DenseMatrix) -> Vec<f64> {
        m.entries().to_vec()
    }

    #[test]
    fn build_examples() {
        let k2 = Graph::complete(2);
        let q = build_graph_matrix(MatrixKind::SignlessLaplacian, &k2).unwrap();
        assert_eq!(entries(&q), vec![1.0, 1.0, 1.0, 1.0]);

        let p3 = Graph::path(3);
        let dsl = build_graph_matrix(MatrixKind::DistanceSignlessLaplacian, &p3).unwrap();
        assert_eq!(
            entries(&dsl),
            vec![3.0, 1.0, 2.0, 1.0, 2.0, 1.0, 2.0, 1.0, 3.0]
        );

        let c3 = Digraph::cycle(3);
        let lap = build_digraph_matrix(MatrixKind::Laplacian, &c3).unwrap();
        assert_eq!(
            entries(&lap),
            vec![1.0, -1.0, 0.0, 0.0, 1.0, -1.0, -1.0, 0.0, 1.0]
        );
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let g = Graph::cycle(5);
        for kind in [MatrixKind::Laplacian, MatrixKind::DistanceLaplacian] {
            let m = build_graph_matrix(kind, &g).unwrap();
            for i in 0..m.n() {
                let s: f64 = m.row(i).iter().sum();
                assert_eq!(s, 0.0, "{kind} row {i}");
            }
        }
    }

    #[test]
    fn signless_row_sums_are_twice_the_diagonal() {
        let g = Graph::star(3);
        let q = build_graph_matrix(MatrixKind::SignlessLaplacian, &g).unwrap();
        let d = degrees(&g);
        for i in 0..q.n() {
            let s: f64 = q.row(i).iter().sum();
            assert_eq!(s, 2.0 * d[i] as f64);
        }
    }

    #[test]
    fn exact_radius_examples() {
        let r = exact_graph_radius(MatrixKind::Adjacency, &Graph::complete(4)).unwrap();
        assert!((r.radius - 3.0).abs() < 1e-12);

        // distance signless Laplacian of P_3: largest root of λ²−7λ+8
        let r = exact_graph_radius(MatrixKind::DistanceSignlessLaplacian, &Graph::path(3)).unwrap();
        let expect = (7.0 + 17f64.sqrt()) / 2.0;
        assert!((r.radius - expect).abs() < 1e-12);

        let r = exact_digraph_radius(MatrixKind::Laplacian, &Digraph::cycle(3)).unwrap();
        assert!((r.radius - 3f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn distance_kinds_need_connectivity() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(
            build_graph_matrix(MatrixKind::Distance, &g),
            Err(GraphError::Disconnected)
        ));
        let d = Digraph::new(2, [(0, 1)]).unwrap();
        assert!(matches!(
            build_digraph_matrix(MatrixKind::DistanceLaplacian, &d),
            Err(GraphError::NotStronglyConnected)
        ));
    }

    #[test]
    fn degenerate_single_vertex() {
        let g = Graph::new(1, []).unwrap();
        for kind in MatrixKind::ALL {
            let r = exact_graph_radius(kind, &g).unwrap();
            assert_eq!(r.radius, 0.0, "{kind}");
        }
    }
}
