use std::collections::VecDeque;

use crate::graph::Graph;

/// Residual network with integer capacities; arcs are stored in pairs so
/// that `e ^ 1` is the reverse of `e`.
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    initial: Vec<u32>,
    pred: Vec<usize>,
    queue: VecDeque<usize>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            initial: Vec::new(),
            pred: vec![usize::MAX; nodes],
            queue: VecDeque::with_capacity(nodes),
        }
    }

    fn arc(&mut self, u: usize, v: usize, c: u32) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.initial.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.initial.push(0);
    }

    /// Edmonds-Karp from `s` to `t`, stopping once the flow reaches `limit`.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.cap.clone_from(&self.initial);
        let mut flow = 0;
        while flow < limit {
            self.pred.iter_mut().for_each(|p| *p = usize::MAX);
            self.queue.clear();
            self.queue.push_back(s);
            let mut found = false;
            'bfs: while let Some(u) = self.queue.pop_front() {
                for &e in &self.head[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && v != s && self.pred[v] == usize::MAX {
                        self.pred[v] = e;
                        if v == t {
                            found = true;
                            break 'bfs;
                        }
                        self.queue.push_back(v);
                    }
                }
            }
            if !found {
                break;
            }
            // unit bottleneck: every augmenting path here crosses a capacity-1 arc
            let mut bottleneck = u32::MAX;
            let mut v = t;
            while v != s {
                let e = self.pred[v];
                bottleneck = bottleneck.min(self.cap[e]);
                v = self.to[e ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = self.pred[v];
                self.cap[e] -= bottleneck;
                self.cap[e ^ 1] += bottleneck;
                v = self.to[e ^ 1];
            }
            flow += bottleneck as usize;
        }
        flow.min(limit)
    }
}

fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    2 * g.size() == n * n.saturating_sub(1)
}

/// Vertex connectivity κ(G).
///
/// 0 for disconnected graphs and for n ≤ 1; n − 1 for K_n. Otherwise the
/// minimum, over non-adjacent pairs, of the max-flow between them in the
/// vertex-split network (`v_in → v_out` with capacity 1).
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    if is_complete(g) {
        return n - 1;
    }
    let big = n as u32;
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.arc(2 * v, 2 * v + 1, 1);
    }
    for (u, v) in g.edges() {
        net.arc(2 * u + 1, 2 * v, big);
        net.arc(2 * v + 1, 2 * u, big);
    }
    let mut best = g.min_degree();
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            best = best.min(net.max_flow(2 * s + 1, 2 * t, best));
            if best == 1 {
                return 1;
            }
        }
    }
    best
}

/// Edge connectivity λ(G): 0 for disconnected graphs and n ≤ 1, otherwise
/// the minimum over sinks `t ≠ 0` of the unit-capacity max-flow from 0.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let mut net = FlowNetwork::new(n);
    for (u, v) in g.edges() {
        net.arc(u, v, 1);
        net.arc(v, u, 1);
    }
    let mut best = g.min_degree();
    for t in 1..n {
        best = best.min(net.max_flow(0, t, best));
        if best == 1 {
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{join_family, k_n1_r};

    #[test]
    fn complete_graphs() {
        assert_eq!(vertex_connectivity(&Graph::complete(6).unwrap()), 5);
        assert_eq!(edge_connectivity(&Graph::complete(6).unwrap()), 5);
        assert_eq!(vertex_connectivity(&Graph::complete(2).unwrap()), 1);
        assert_eq!(vertex_connectivity(&Graph::complete(1).unwrap()), 0);
        assert_eq!(edge_connectivity(&Graph::complete(1).unwrap()), 0);
        assert_eq!(vertex_connectivity(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn families() {
        assert_eq!(vertex_connectivity(&k_n1_r(8, 3).unwrap()), 3);
        assert_eq!(edge_connectivity(&k_n1_r(8, 3).unwrap()), 3);
        assert_eq!(vertex_connectivity(&join_family(3, 2, 2).unwrap()), 2);
        for n in 2..10 {
            assert_eq!(edge_connectivity(&Graph::path(n).unwrap()), 1);
        }
        assert_eq!(edge_connectivity(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(vertex_connectivity(&Graph::cycle(5).unwrap()), 2);
    }

    #[test]
    fn disconnected_is_zero() {
        let k3 = Graph::complete(3).unwrap();
        let g = k3.disjoint_union(&k3).unwrap();
        assert_eq!(vertex_connectivity(&g), 0);
        assert_eq!(edge_connectivity(&g), 0);
    }

    #[test]
    fn kappa_below_lambda() {
        // two K4s sharing a vertex: κ = 1, λ = 3
        let k4 = Graph::complete(4).unwrap();
        let mut g = k4.disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        for v in 4..7 {
            g = g.add_edge(3, v).unwrap();
        }
        assert_eq!(vertex_connectivity(&g), 1);
        assert_eq!(edge_connectivity(&g), 3);
    }
}
