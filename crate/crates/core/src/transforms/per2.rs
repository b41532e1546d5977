use serde::Serialize;

use crate::connectivity::cut_vertex_count;
use crate::error::{GraphError, Result};
use crate::graph::Graph;

fn hypothesis(msg: impl Into<String>) -> GraphError {
    GraphError::Hypothesis(msg.into())
}

/// A connected graph glued onto a clique vertex by identifying `root` with it.
#[derive(Debug, Clone)]
pub struct Attachment {
    pub at: usize,
    pub graph: Graph,
    pub root: usize,
}

/// Two cliques `K_p`, `K_q` sharing the vertex `u`, with a path of `t`
/// vertices starting at `w_1 ∈ K_p` and one of `s` vertices starting at
/// `v_1 ∈ K_q`. The transformed graph detaches `v_1` from `K_q ∖ {u}` and
/// merges `K_q ∖ {v_1}` with `K_p` into one clique.
///
/// Core numbering: `u = 0`, `K_p = {0, 1, .., p-1}` with `w_1 = 1`,
/// `K_q = {0, p, .., p+q-2}` with `v_1 = p`. Path vertices follow, then the
/// non-root vertices of each attachment in order.
#[derive(Debug, Clone, Serialize)]
pub struct Per2Instance {
    pub p: usize,
    pub q: usize,
    pub t: usize,
    pub s: usize,
    /// Core vertices carrying an attachment.
    pub attached_at: Vec<usize>,
    #[serde(skip)]
    pub assembled: Graph,
    #[serde(skip)]
    pub transformed: Graph,
}

impl Per2Instance {
    pub const U: usize = 0;
    pub const W1: usize = 1;

    pub fn v1(&self) -> usize {
        self.p
    }

    pub fn kp(&self) -> Vec<usize> {
        (0..self.p).collect()
    }

    pub fn kq(&self) -> Vec<usize> {
        std::iter::once(0)
            .chain(self.p..self.p + self.q - 1)
            .collect()
    }

    pub fn cut_vertex_counts(&self) -> (usize, usize) {
        (
            cut_vertex_count(&self.assembled),
            cut_vertex_count(&self.transformed),
        )
    }
}

pub fn build_per2(
    p: usize,
    q: usize,
    t: usize,
    s: usize,
    attachments: &[Attachment],
) -> Result<Per2Instance> {
    if p < 3 || q < 3 {
        return Err(hypothesis(format!(
            "clique orders must be at least 3, got p = {p}, q = {q}"
        )));
    }
    if s < 1 || t < s {
        return Err(hypothesis(format!(
            "need t >= s >= 1, got t = {t}, s = {s}"
        )));
    }
    let core = p + q - 1;
    let (u, w1, v1) = (0, 1, p);
    for a in attachments {
        if a.at >= core {
            return Err(GraphError::VertexOutOfRange {
                vertex: a.at,
                order: core,
            });
        }
        if [u, w1, v1].contains(&a.at) {
            return Err(hypothesis(format!(
                "attachments must avoid u, v_1 and w_1, got vertex {}",
                a.at
            )));
        }
        a.graph.check_vertex(a.root)?;
        if !a.graph.is_connected() {
            return Err(hypothesis("attached graphs must be connected"));
        }
    }

    let n = core
        + (t - 1)
        + (s - 1)
        + attachments
            .iter()
            .map(|a| a.graph.order() - 1)
            .sum::<usize>();
    let mut g = Graph::empty(n)?;
    let kp: Vec<usize> = (0..p).collect();
    let kq: Vec<usize> = std::iter::once(0).chain(p..core).collect();
    for clique in [&kp, &kq] {
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                g.set_edge(a, b);
            }
        }
    }
    let mut next = core;
    for (start, len) in [(w1, t), (v1, s)] {
        let mut prev = start;
        for _ in 1..len {
            g.set_edge(prev, next);
            prev = next;
            next += 1;
        }
    }
    for a in attachments {
        let map: Vec<usize> = (0..a.graph.order())
            .map(|x| {
                if x == a.root {
                    a.at
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        for (x, y) in a.graph.edges() {
            g.set_edge(map[x], map[y]);
        }
    }

    let mut transformed = g.clone();
    for &b in &kq[1..] {
        if b != v1 {
            transformed.clear_edge(v1, b);
        }
    }
    for &b in kq.iter().filter(|&&b| b != v1) {
        for &a in &kp {
            if a != b && !transformed.has_edge(a, b) {
                transformed.set_edge(a, b);
            }
        }
    }

    Ok(Per2Instance {
        p,
        q,
        t,
        s,
        attached_at: attachments.iter().map(|a| a.at).collect(),
        assembled: g,
        transformed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::harary_index;

    #[test]
    fn bare_bowtie() {
        let inst = build_per2(3, 3, 1, 1, &[]).unwrap();
        assert_eq!(inst.assembled.order(), 5);
        assert_eq!(inst.assembled.size(), 6);
        assert!(harary_index(&inst.transformed) > harary_index(&inst.assembled));
        // s = 1: u v_1 becomes a pendant edge
        assert_eq!(inst.transformed.degree(inst.v1()), 1);
        assert!(inst.transformed.has_edge(Per2Instance::U, inst.v1()));
        let (a, b) = inst.cut_vertex_counts();
        assert_eq!(a, b);
    }

    #[test]
    fn with_paths_and_attachment() {
        let tri = Graph::complete(3).unwrap();
        let inst = build_per2(
            4,
            3,
            3,
            2,
            &[Attachment {
                at: 2,
                graph: tri,
                root: 0,
            }],
        )
        .unwrap();
        assert_eq!(inst.assembled.order(), 6 + 2 + 1 + 2);
        assert!(inst.assembled.is_connected());
        assert!(harary_index(&inst.transformed) > harary_index(&inst.assembled));
        let (a, b) = inst.cut_vertex_counts();
        assert_eq!(a, b);
        // K_q ∖ {v_1} ∪ K_p is a clique in G'
        let merged: Vec<usize> = inst
            .kp()
            .into_iter()
            .chain(inst.kq().into_iter().filter(|&x| x != inst.v1()))
            .collect();
        for (i, &a) in merged.iter().enumerate() {
            for &b in &merged[i + 1..] {
                if a != b {
                    assert!(inst.transformed.has_edge(a, b));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_hypotheses() {
        assert!(build_per2(2, 3, 1, 1, &[]).is_err());
        assert!(build_per2(3, 3, 1, 2, &[]).is_err());
        assert!(build_per2(3, 3, 1, 0, &[]).is_err());
        let k2 = Graph::complete(2).unwrap();
        let at = |v| Attachment {
            at: v,
            graph: k2.clone(),
            root: 0,
        };
        assert!(build_per2(3, 3, 1, 1, &[at(0)]).is_err());
        assert!(build_per2(3, 3, 1, 1, &[at(1)]).is_err());
        assert!(build_per2(3, 3, 1, 1, &[at(3)]).is_err());
        assert!(build_per2(3, 3, 1, 1, &[at(9)]).is_err());
        assert!(build_per2(3, 3, 1, 1, &[at(2)]).is_ok());
        let disconnected = Attachment {
            at: 2,
            graph: Graph::empty(2).unwrap(),
            root: 0,
        };
        assert!(build_per2(3, 3, 1, 1, &[disconnected]).is_err());
    }
}
