//! Exhaustive labeled-graph enumeration by edge subsets.
//!
//! Labeled (not isomorphism-reduced) enumeration is deliberate: every
//! property checked over these streams is isomorphism-invariant, and the
//! subset walk is simpler and cheap at the sizes involved. C(7,2) = 21
//! candidate edges is the ceiling: 2^21 subsets.

use super::HarnessError;
use crate::graphs::{is_connected, Graph};

pub const MAX_ENUMERATION_VERTICES: usize = 7;

/// Streams every labeled simple graph on exactly `n` vertices, optionally
/// filtered to connected ones.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<GraphEnumerator, HarnessError> {
    if n == 0 {
        return Err(HarnessError::InvalidConfig(
            "enumeration needs at least one vertex".into(),
        ));
    }
    if n > MAX_ENUMERATION_VERTICES {
        return Err(HarnessError::SizeTooLarge {
            n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    Ok(GraphEnumerator {
        n,
        connected_only,
        next_mask: 0,
        mask_count: 1u64 << pairs.len(),
        pairs,
    })
}

pub struct GraphEnumerator {
    n: usize,
    connected_only: bool,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    mask_count: u64,
}

impl Iterator for GraphEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.mask_count {
            let mask = self.next_mask;
            self.next_mask += 1;
            let edges = self
                .pairs
                .iter()
                .enumerate()
                .filter(|&(bit, _)| mask & (1 << bit) != 0)
                .map(|(_, &pair)| pair);
            let graph = Graph::new(self.n, edges).expect("subset of vertex pairs is simple");
            if !self.connected_only || is_connected(&graph) {
                return Some(graph);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_values() {
        // all labeled graphs: 2^C(n,2)
        assert_eq!(enumerate_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(4, false).unwrap().count(), 64);
        // connected labeled graphs: 1, 1, 4, 38, 728 for n = 1..5
        assert_eq!(enumerate_graphs(1, true).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(2, true).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_graphs(4, true).unwrap().count(), 38);
        assert_eq!(enumerate_graphs(5, true).unwrap().count(), 728);
    }

    #[test]
    fn two_vertices_connected_is_the_single_edge() {
        let graphs: Vec<Graph> = enumerate_graphs(2, true).unwrap().collect();
        assert_eq!(graphs, vec![Graph::complete(2)]);
    }

    #[test]
    fn single_vertex() {
        let graphs: Vec<Graph> = enumerate_graphs(1, false).unwrap().collect();
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].n(), 1);
    }

    #[test]
    fn size_cap_is_enforced() {
        assert!(matches!(
            enumerate_graphs(8, false),
            Err(HarnessError::SizeTooLarge { n: 8, max: 7 })
        ));
        assert!(enumerate_graphs(0, false).is_err());
    }
}
