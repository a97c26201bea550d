//! Greedy counterexample minimization.
//!
//! A shrink step deletes one vertex (reindexing the rest), removes one
//! edge or arc, or zeroes one matrix entry. A step is kept only if the
//! property still fails on the reduced instance, so side conditions such
//! as connectivity are preserved automatically: a reduction that breaks
//! them makes the property skip, which is not a failure, so the reduction
//! is rejected. The fixpoint of this loop is returned.

use super::properties::{evaluate, ObservedValues, Outcome};
use super::{HarnessError, Instance, Violation};
use crate::bounds::Tolerances;
use crate::graphs::{Digraph, Graph};
use crate::linalg::DenseMatrix;

/// Minimize a reproducible violation. Errors if the stored instance no
/// longer fails its property.
pub fn shrink(violation: &Violation, tol: &Tolerances) -> Result<Violation, HarnessError> {
    let check = |instance: &Instance| -> Option<ObservedValues> {
        match evaluate(violation.property, instance, tol) {
            Outcome::Fail(observed) => Some(observed),
            _ => None,
        }
    };
    let Some(mut observed) = check(&violation.instance) else {
        return Err(HarnessError::NotReproducible);
    };
    let mut current = violation.instance.clone();
    loop {
        let mut progressed = false;
        for candidate in reductions(&current) {
            if let Some(obs) = check(&candidate) {
                current = candidate;
                observed = obs;
                progressed = true;
                break;
            }
        }
        if !progressed {
            break;
        }
    }
    Ok(Violation {
        property: violation.property,
        trial_index: violation.trial_index,
        trial_seed: violation.trial_seed,
        instance: current,
        observed,
    })
}

/// All single-step reductions, most aggressive first; deterministic order.
fn reductions(instance: &Instance) -> Vec<Instance> {
    match instance {
        Instance::Graph(g) => {
            let mut out: Vec<Instance> = (0..g.n())
                .filter_map(|v| delete_graph_vertex(g, v).map(Instance::Graph))
                .collect();
            for skip in 0..g.edge_count() {
                let edges = g
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &e)| e);
                out.push(Instance::Graph(
                    Graph::new(g.n(), edges).expect("removing an edge keeps the graph valid"),
                ));
            }
            out
        }
        Instance::Digraph(d) => {
            let mut out: Vec<Instance> = (0..d.n())
                .filter_map(|v| delete_digraph_vertex(d, v).map(Instance::Digraph))
                .collect();
            for skip in 0..d.arc_count() {
                let arcs = d
                    .arcs()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &a)| a);
                out.push(Instance::Digraph(
                    Digraph::new(d.n(), arcs).expect("removing an arc keeps the digraph valid"),
                ));
            }
            out
        }
        Instance::Matrix(m) => {
            let n = m.n();
            let mut out: Vec<Instance> = if n > 1 {
                (0..n)
                    .map(|v| Instance::Matrix(delete_index(m, v)))
                    .collect()
            } else {
                Vec::new()
            };
            for i in 0..n {
                for j in 0..n {
                    if m.get(i, j) != 0.0 {
                        let mut reduced = m.clone();
                        reduced.set(i, j, 0.0);
                        out.push(Instance::Matrix(reduced));
                    }
                }
            }
            out
        }
    }
}

fn delete_graph_vertex(g: &Graph, victim: usize) -> Option<Graph> {
    if g.n() <= 1 {
        return None;
    }
    let remap = |v: usize| if v > victim { v - 1 } else { v };
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| u != victim && v != victim)
        .map(|&(u, v)| (remap(u), remap(v)));
    Graph::new(g.n() - 1, edges).ok()
}

fn delete_digraph_vertex(d: &Digraph, victim: usize) -> Option<Digraph> {
    if d.n() <= 1 {
        return None;
    }
    let remap = |v: usize| if v > victim { v - 1 } else { v };
    let arcs = d
        .arcs()
        .iter()
        .filter(|&&(u, v)| u != victim && v != victim)
        .map(|&(u, v)| (remap(u), remap(v)));
    Digraph::new(d.n() - 1, arcs).ok()
}

fn delete_index(m: &DenseMatrix, victim: usize) -> DenseMatrix {
    let n = m.n();
    let mut entries = Vec::with_capacity((n - 1) * (n - 1));
    for i in 0..n {
        if i == victim {
            continue;
        }
        for j in 0..n {
            if j != victim {
                entries.push(m.get(i, j));
            }
        }
    }
    DenseMatrix::new(n - 1, entries).expect("minor of a valid matrix is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::properties::{PropertyId, ALL_PROPERTIES};

    /// Search-based minimization against an arbitrary predicate, for
    /// exercising the reduction machinery without a real theorem failure.
    fn minimize(start: Instance, fails: impl Fn(&Instance) -> bool) -> Instance {
        assert!(fails(&start), "starting instance must fail");
        let mut current = start;
        loop {
            match reductions(&current).into_iter().find(|c| fails(c)) {
                Some(next) => current = next,
                None => return current,
            }
        }
    }

    #[test]
    fn minimizes_to_the_failing_core() {
        // predicate: "contains a triangle" — on a 10-vertex graph with one
        // triangle plus noise, the fixpoint is exactly K_3
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        edges.extend([(2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9)]);
        let g = Graph::new(10, edges).unwrap();
        let has_triangle = |inst: &Instance| -> bool {
            let Instance::Graph(g) = inst else { return false };
            let adj = g.adjacency_lists();
            for &(u, v) in g.edges() {
                if adj[u].iter().any(|w| adj[v].contains(w)) {
                    return true;
                }
            }
            false
        };
        let result = minimize(Instance::Graph(g), has_triangle);
        let Instance::Graph(min) = result else { panic!() };
        assert_eq!(min.n(), 3);
        assert_eq!(min.edge_count(), 3);
    }

    #[test]
    fn already_minimal_instance_is_unchanged() {
        let k3 = Graph::complete(3);
        let has_three_edges = |inst: &Instance| -> bool {
            matches!(inst, Instance::Graph(g) if g.edge_count() == 3)
        };
        let result = minimize(Instance::Graph(k3.clone()), has_three_edges);
        assert_eq!(result, Instance::Graph(k3));
    }

    #[test]
    fn matrix_entries_get_zeroed() {
        // predicate: entry sum exceeds 2 — the greedy fixpoint is a 2×2
        // with three surviving unit entries (one more zeroing would drop
        // the sum to 2)
        let m = DenseMatrix::new(3, vec![1.0; 9]).unwrap();
        let heavy = |inst: &Instance| -> bool {
            matches!(inst, Instance::Matrix(m) if m.entries().iter().sum::<f64>() > 2.0)
        };
        let Instance::Matrix(min) = minimize(Instance::Matrix(m), heavy) else {
            panic!()
        };
        let total: f64 = min.entries().iter().sum();
        assert_eq!(min.n(), 2, "index deletion shrinks the dimension first");
        assert_eq!(total, 3.0);
    }

    #[test]
    fn non_reproducing_violation_is_rejected() {
        // this instance passes every property, so any claimed violation of
        // it must be refused
        let violation = Violation {
            property: PropertyId::GraphBoundsSound,
            trial_index: 0,
            trial_seed: 0,
            instance: Instance::Graph(Graph::complete(4)),
            observed: ObservedValues {
                bound: None,
                exact_radius: None,
                expressions: Vec::new(),
                detail: "fabricated".into(),
            },
        };
        assert!(matches!(
            shrink(&violation, &Tolerances::default()),
            Err(HarnessError::NotReproducible)
        ));
        for property in ALL_PROPERTIES {
            assert!(!matches!(
                evaluate(property, &violation.instance, &Tolerances::default()),
                Outcome::Fail(_)
            ));
        }
    }
}
