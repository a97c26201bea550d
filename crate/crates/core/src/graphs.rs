//! Simple graphs and digraphs: degrees, connectivity, BFS distances,
//! transmissions, and the regular / bipartite semi-regular classifier.
//!
//! Degree aggregates are kept in exact integer arithmetic throughout.
//! In particular the neighbor-degree sum S_i = Σ_{j∼i} d_j is used instead
//! of the average neighbor degree m_i = S_i / d_i wherever a bound or an
//! equality condition is evaluated, so that "d_i·m_i equal for all i" is an
//! exact integer comparison rather than a float one. m_i itself is exposed
//! only for display and is undefined on isolated vertices.

use crate::linalg::DenseMatrix;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be at least 1")]
    ZeroVertices,

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is disconnected: distance matrix undefined")]
    Disconnected,

    #[error("digraph is not strongly connected: distance matrix undefined")]
    NotStronglyConnected,
}

/// Simple undirected graph on vertices 0..n. Edges are stored as
/// canonical (min, max) pairs, sorted; no loops, no duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroVertices);
        }
        let mut canonical: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            for &w in [u, v].iter() {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            canonical.push((u.min(v), u.max(v)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph { n, edges: canonical })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbor lists in ascending vertex order.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is a valid simple graph")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is a valid simple graph")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is a valid simple graph")
    }

    /// K_{a,b} with part {0..a} joined to part {a..a+b}.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::new(a + b, edges).expect("complete bipartite graph is valid")
    }

    /// Star K_{1,k} with the center at vertex 0.
    pub fn star(k: usize) -> Self {
        Self::complete_bipartite(1, k)
    }
}

/// Simple digraph on vertices 0..n. Arcs are ordered pairs, sorted;
/// no loops, no duplicates. Opposite arcs (u,v) and (v,u) may coexist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroVertices);
        }
        let mut sorted: Vec<(usize, usize)> = Vec::new();
        for (u, v) in arcs {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            for &w in [u, v].iter() {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            sorted.push((u, v));
        }
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Digraph { n, arcs: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn out_lists(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            out[u].push(v);
        }
        out
    }

    pub fn in_lists(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            inc[v].push(u);
        }
        for list in &mut inc {
            list.sort_unstable();
        }
        inc
    }

    /// Directed cycle 0 → 1 → … → n−1 → 0.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 2, "directed cycles need at least 2 vertices");
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("directed cycle is valid")
    }

    /// Complete digraph: both arcs between every vertex pair.
    pub fn complete(n: usize) -> Self {
        let arcs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
        Digraph::new(n, arcs).expect("complete digraph is valid")
    }
}

/// All-pairs BFS distances with their row sums (the vertex transmissions).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceData {
    n: usize,
    /// Row-major n×n grid of hop counts; zero diagonal.
    dist: Vec<u64>,
    transmissions: Vec<u64>,
}

impl DistanceData {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.dist[i * self.n + j]
    }

    /// D_i (or D_i^+): the i-th row sum of the distance matrix.
    pub fn transmissions(&self) -> &[u64] {
        &self.transmissions
    }

    pub fn dense(&self) -> DenseMatrix {
        DenseMatrix::new(self.n, self.dist.iter().map(|&d| d as f64).collect())
            .expect("distance grid is finite and square")
    }
}

/// Degree regularity classification used by the bound equality cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphClass {
    /// Every vertex has degree r.
    Regular(usize),
    /// Bipartite with constant degree r on one side and s on the other;
    /// `parts.0` holds the degree-r side. Sides are ordered so r ≥ s, with
    /// the side containing the lowest vertex first on ties.
    BipartiteSemiRegular {
        r: usize,
        s: usize,
        parts: (Vec<usize>, Vec<usize>),
    },
    Other,
}

pub fn degrees(g: &Graph) -> Vec<usize> {
    let mut d = vec![0; g.n()];
    for &(u, v) in g.edges() {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

pub fn out_degrees(d: &Digraph) -> Vec<usize> {
    let mut out = vec![0; d.n()];
    for &(u, _) in d.arcs() {
        out[u] += 1;
    }
    out
}

/// S_i = Σ_{j∼i} d_j, the integer numerator of the average neighbor
/// degree: d_i·m_i = S_i exactly. Zero on isolated vertices.
pub fn neighbor_degree_sums(g: &Graph) -> Vec<u64> {
    let deg = degrees(g);
    let mut s = vec![0u64; g.n()];
    for &(u, v) in g.edges() {
        s[u] += deg[v] as u64;
        s[v] += deg[u] as u64;
    }
    s
}

/// T_i = Σ over arcs (j, i) of d_j^+: out-degrees of the in-neighbors.
/// This is the column aggregation the adjacency and Laplacian digraph
/// bounds use.
pub fn in_neighbor_outdegree_sums(d: &Digraph) -> Vec<u64> {
    let out = out_degrees(d);
    let mut t = vec![0u64; d.n()];
    for &(u, v) in d.arcs() {
        t[v] += out[u] as u64;
    }
    t
}

/// Average neighbor degree m_i = S_i / d_i, for display only; None on
/// isolated vertices. No bound evaluates this float.
pub fn average_neighbor_degrees(g: &Graph) -> Vec<Option<f64>> {
    let deg = degrees(g);
    let sums = neighbor_degree_sums(g);
    deg.iter()
        .zip(&sums)
        .map(|(&d, &s)| (d > 0).then(|| s as f64 / d as f64))
        .collect()
}

/// Average out-degree of the out-neighbors, for display only; unused by
/// any bound. None on vertices without out-arcs.
pub fn average_out_neighbor_out_degrees(d: &Digraph) -> Vec<Option<f64>> {
    let out = out_degrees(d);
    let mut sums = vec![0u64; d.n()];
    for &(u, v) in d.arcs() {
        sums[u] += out[v] as u64;
    }
    out.iter()
        .zip(&sums)
        .map(|(&deg, &s)| (deg > 0).then(|| s as f64 / deg as f64))
        .collect()
}

fn bfs_layers(adj: &[Vec<usize>], start: usize) -> Vec<Option<u64>> {
    let mut dist = vec![None; adj.len()];
    dist[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have distances");
        for &v in &adj[u] {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

pub fn is_connected(g: &Graph) -> bool {
    bfs_layers(&g.adjacency_lists(), 0).iter().all(Option::is_some)
}

pub fn is_strongly_connected(d: &Digraph) -> bool {
    let forward = bfs_layers(&d.out_lists(), 0).iter().all(Option::is_some);
    if !forward {
        return false;
    }
    let mut reversed = vec![Vec::new(); d.n()];
    for &(u, v) in d.arcs() {
        reversed[v].push(u);
    }
    bfs_layers(&reversed, 0).iter().all(Option::is_some)
}

/// Two-coloring by BFS, ascending start vertices across components.
/// Returns (side of vertex 0's color, other side) or None on an odd cycle.
pub fn is_bipartite(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let adj = g.adjacency_lists();
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    for start in 0..g.n() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are colored");
            for &v in &adj[u] {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut parts = (Vec::new(), Vec::new());
    for (v, c) in color.iter().enumerate() {
        match c {
            Some(false) => parts.0.push(v),
            Some(true) => parts.1.push(v),
            None => unreachable!("every vertex was colored"),
        }
    }
    Some(parts)
}

/// BFS from every vertex of a connected graph.
pub fn distance_matrix(g: &Graph) -> Result<DistanceData, GraphError> {
    let adj = g.adjacency_lists();
    all_pairs(&adj, g.n()).ok_or(GraphError::Disconnected)
}

/// Directed BFS from every vertex of a strongly connected digraph;
/// entry (i, j) is the length of the shortest directed path i → j.
pub fn distance_matrix_digraph(d: &Digraph) -> Result<DistanceData, GraphError> {
    let out = d.out_lists();
    all_pairs(&out, d.n()).ok_or(GraphError::NotStronglyConnected)
}

fn all_pairs(adj: &[Vec<usize>], n: usize) -> Option<DistanceData> {
    let mut dist = vec![0u64; n * n];
    let mut transmissions = vec![0u64; n];
    for i in 0..n {
        let layers = bfs_layers(adj, i);
        let mut total = 0u64;
        for (j, d) in layers.iter().enumerate() {
            let d = (*d)?;
            dist[i * n + j] = d;
            total += d;
        }
        transmissions[i] = total;
    }
    Some(DistanceData { n, dist, transmissions })
}

/// Regular / bipartite semi-regular / other, by degree inspection.
///
/// Meaningful for connected graphs (the equality characterizations assume
/// connectivity); on disconnected input the definition is applied
/// literally to the degree sequence and coloring.
pub fn classify(g: &Graph) -> GraphClass {
    let deg = degrees(g);
    let first = deg[0];
    if deg.iter().all(|&d| d == first) {
        return GraphClass::Regular(first);
    }
    let Some((side_a, side_b)) = is_bipartite(g) else {
        return GraphClass::Other;
    };
    let constant_degree = |side: &[usize]| -> Option<usize> {
        let d0 = deg[*side.first()?];
        side.iter().all(|&v| deg[v] == d0).then_some(d0)
    };
    match (constant_degree(&side_a), constant_degree(&side_b)) {
        (Some(ra), Some(rb)) => {
            // larger-degree side first; ties keep vertex 0's side first
            if rb > ra {
                GraphClass::BipartiteSemiRegular {
                    r: rb,
                    s: ra,
                    parts: (side_b, side_a),
                }
            } else {
                GraphClass::BipartiteSemiRegular {
                    r: ra,
                    s: rb,
                    parts: (side_a, side_b),
                }
            }
        }
        _ => GraphClass::Other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_examples() {
        assert_eq!(degrees(&Graph::path(3)), vec![1, 2, 1]);
        assert_eq!(degrees(&Graph::complete(4)), vec![3, 3, 3, 3]);
        assert_eq!(out_degrees(&Digraph::cycle(3)), vec![1, 1, 1]);
    }

    #[test]
    fn neighbor_degree_sum_examples() {
        assert_eq!(neighbor_degree_sums(&Graph::path(3)), vec![2, 2, 2]);
        // star: center sees 1+1+1, each leaf sees the center's 3
        assert_eq!(neighbor_degree_sums(&Graph::star(3)), vec![3, 3, 3, 3]);
        let single = Graph::new(1, []).unwrap();
        assert_eq!(neighbor_degree_sums(&single), vec![0]);
    }

    #[test]
    fn in_neighbor_outdegree_sum_examples() {
        assert_eq!(in_neighbor_outdegree_sums(&Digraph::cycle(3)), vec![1, 1, 1]);
        let d = Digraph::new(3, [(0, 2), (1, 2)]).unwrap();
        assert_eq!(in_neighbor_outdegree_sums(&d), vec![0, 0, 2]);
        assert_eq!(in_neighbor_outdegree_sums(&Digraph::complete(3)), vec![4, 4, 4]);
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&Graph::path(3)));
        assert!(!is_connected(&Graph::new(2, []).unwrap()));
        let one_arc = Digraph::new(2, [(0, 1)]).unwrap();
        assert!(!is_strongly_connected(&one_arc));
        assert!(is_strongly_connected(&Digraph::cycle(4)));
        let single = Graph::new(1, []).unwrap();
        assert!(is_connected(&single));
    }

    #[test]
    fn bipartite_examples() {
        let (a, b) = is_bipartite(&Graph::cycle(4)).unwrap();
        assert_eq!((a, b), (vec![0, 2], vec![1, 3]));
        assert!(is_bipartite(&Graph::complete(3)).is_none());
        let (a, b) = is_bipartite(&Graph::star(3)).unwrap();
        assert_eq!((a, b), (vec![0], vec![1, 2, 3]));
    }

    #[test]
    fn distance_matrix_examples() {
        let dd = distance_matrix(&Graph::path(3)).unwrap();
        let rows: Vec<u64> = (0..3).flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| dd.get(i, j))
            .collect();
        assert_eq!(rows, vec![0, 1, 2, 1, 0, 1, 2, 1, 0]);
        assert_eq!(dd.transmissions(), &[3, 2, 3]);

        let dc = distance_matrix_digraph(&Digraph::cycle(4)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(dc.get(i, j) as usize, (j + 4 - i) % 4);
            }
        }
        assert_eq!(dc.transmissions(), &[6, 6, 6, 6]);

        let disconnected = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(distance_matrix(&disconnected), Err(GraphError::Disconnected));
        let weak = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(
            distance_matrix_digraph(&weak),
            Err(GraphError::NotStronglyConnected)
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&Graph::cycle(5)), GraphClass::Regular(2));
        match classify(&Graph::star(3)) {
            GraphClass::BipartiteSemiRegular { r, s, parts } => {
                assert_eq!((r, s), (3, 1));
                assert_eq!(parts.0, vec![0]);
                assert_eq!(parts.1, vec![1, 2, 3]);
            }
            other => panic!("expected semi-regular star, got {other:?}"),
        }
        // P_4: the two degree-2 vertices are adjacent, so per-side degrees
        // cannot be constant
        assert_eq!(classify(&Graph::path(4)), GraphClass::Other);
        // P_3 = K_{1,2}: the degree-2 center leads
        match classify(&Graph::path(3)) {
            GraphClass::BipartiteSemiRegular { r, s, parts } => {
                assert_eq!((r, s), (2, 1));
                assert_eq!(parts.0, vec![1]);
                assert_eq!(parts.1, vec![0, 2]);
            }
            other => panic!("expected semi-regular path, got {other:?}"),
        }
    }

    #[test]
    fn validation_rejects_bad_input() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(2, [(0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 2 })
        );
        assert_eq!(Graph::new(0, []), Err(GraphError::ZeroVertices));
        assert_eq!(Digraph::new(3, [(1, 1)]), Err(GraphError::Loop(1)));
        // opposite arcs are distinct
        assert!(Digraph::new(2, [(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn handshake() {
        let g = Graph::complete_bipartite(2, 3);
        assert_eq!(degrees(&g).iter().sum::<usize>(), 2 * g.edge_count());
        let d = Digraph::complete(4);
        assert_eq!(out_degrees(&d).iter().sum::<usize>(), d.arc_count());
    }

    #[test]
    fn display_averages() {
        let m = average_neighbor_degrees(&Graph::path(3));
        assert_eq!(m, vec![Some(2.0), Some(1.0), Some(2.0)]);
        let lonely = Graph::new(2, []).unwrap();
        assert_eq!(average_neighbor_degrees(&lonely), vec![None, None]);
    }
}
