//! Exhaustive-search connectivity, independent of the flow code.

use crate::error::{GraphError, Result};
use crate::graph::Graph;

pub const MAX_VERTEX_ORACLE_ORDER: usize = 10;
pub const MAX_EDGE_ORACLE_ORDER: usize = 20;

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w))
        .collect()
}

/// Whether the vertices in `alive` induce a connected subgraph on at
/// least two vertices.
fn connected_on(adj: &[u32], alive: u32) -> bool {
    if alive.count_ones() < 2 {
        return false;
    }
    let mut seen = 1u32 << alive.trailing_zeros();
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            next |= adj[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        next &= alive & !seen;
        seen |= next;
        frontier = next;
    }
    seen == alive
}

/// Smallest vertex set whose deletion leaves a disconnected graph or a
/// single vertex, by trying every subset in order of increasing size.
pub fn brute_force_vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > MAX_VERTEX_ORACLE_ORDER {
        return Err(GraphError::TooLarge {
            requested: n,
            max: MAX_VERTEX_ORACLE_ORDER,
        });
    }
    if n <= 1 {
        return Ok(0);
    }
    let adj = adjacency_masks(g);
    let all = (1u32 << n) - 1;
    for size in 0..n {
        let hit = (0..=all)
            .filter(|s| s.count_ones() as usize == size)
            .any(|s| !connected_on(&adj, all & !s));
        if hit {
            return Ok(size);
        }
    }
    unreachable!("deleting n-1 vertices always leaves a singleton")
}

/// Smallest number of edges whose deletion disconnects the graph, found by
/// scanning every vertex bipartition `(S, V∖S)` with `0 ∈ S` and counting
/// crossing edges. 0 for n ≤ 1.
pub fn brute_force_edge_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > MAX_EDGE_ORACLE_ORDER {
        return Err(GraphError::TooLarge {
            requested: n,
            max: MAX_EDGE_ORACLE_ORDER,
        });
    }
    if n <= 1 {
        return Ok(0);
    }
    let adj = adjacency_masks(g);
    let all = (1u32 << n) - 1;
    let mut best = usize::MAX;
    // subsets of {1..n-1}; S is that subset plus vertex 0, V∖S nonempty
    for rest in 0..(1u32 << (n - 1)) - 1 {
        let side = rest << 1 | 1;
        let other = all & !side;
        let crossing: u32 = (0..n)
            .filter(|&v| side >> v & 1 == 1)
            .map(|v| (adj[v] & other).count_ones())
            .sum();
        best = best.min(crossing as usize);
    }
    Ok(best)
}

pub fn component_count(g: &Graph) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Delete-and-count: `v` is a cut vertex iff removing it increases the
/// number of components.
pub fn brute_force_cut_vertices(g: &Graph) -> Vec<usize> {
    let base = component_count(g);
    (0..g.order())
        .filter(|&v| component_count(&g.delete_vertices(&[v]).expect("vertex in range")) > base)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::k_n1_r;

    #[test]
    fn oracle_examples() {
        assert_eq!(
            brute_force_vertex_connectivity(&Graph::complete(4).unwrap()).unwrap(),
            3
        );
        assert_eq!(
            brute_force_edge_connectivity(&Graph::complete(4).unwrap()).unwrap(),
            3
        );
        assert_eq!(
            brute_force_vertex_connectivity(&k_n1_r(7, 2).unwrap()).unwrap(),
            2
        );
        assert_eq!(
            brute_force_vertex_connectivity(&k_n1_r(9, 4).unwrap()).unwrap(),
            4
        );
        assert_eq!(
            brute_force_vertex_connectivity(&Graph::complete(1).unwrap()).unwrap(),
            0
        );
        assert_eq!(
            brute_force_edge_connectivity(&Graph::complete(1).unwrap()).unwrap(),
            0
        );
        assert_eq!(
            brute_force_edge_connectivity(&Graph::empty(3).unwrap()).unwrap(),
            0
        );
        assert_eq!(
            brute_force_vertex_connectivity(&Graph::empty(3).unwrap()).unwrap(),
            0
        );
        assert_eq!(
            brute_force_edge_connectivity(&Graph::cycle(6).unwrap()).unwrap(),
            2
        );
    }

    #[test]
    fn guards() {
        assert!(brute_force_vertex_connectivity(&Graph::path(11).unwrap()).is_err());
        assert!(brute_force_edge_connectivity(&Graph::path(21).unwrap()).is_err());
    }

    #[test]
    fn flow_agrees_on_every_connected_graph_up_to_six() {
        use super::super::{edge_connectivity, vertex_connectivity};
        for n in 1..=6usize {
            let pairs = n * (n - 1) / 2;
            for mask in 0..1u64 << pairs {
                let g = Graph::from_edge_mask(n, mask).unwrap();
                if !g.is_connected() {
                    continue;
                }
                let (k, l) = (vertex_connectivity(&g), edge_connectivity(&g));
                assert_eq!(k, brute_force_vertex_connectivity(&g).unwrap(), "{g:?}");
                assert_eq!(l, brute_force_edge_connectivity(&g).unwrap(), "{g:?}");
                assert!(k <= l && l <= g.min_degree());
            }
        }
    }
}
