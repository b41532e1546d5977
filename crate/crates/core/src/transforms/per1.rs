use serde::Serialize;

use crate::connectivity::cut_vertex_count;
use crate::error::{GraphError, Result};
use crate::graph::Graph;
use crate::metrics::distance_profile;
use crate::rational::ExactRational;

fn hypothesis(msg: impl Into<String>) -> GraphError {
    GraphError::Hypothesis(msg.into())
}

/// Edge-twin rerouting: `G1` has an edge `uv` whose endpoints share the
/// remaining neighbourhood `{w_1..w_k}`; `u` is glued to the start `x_1` of a
/// shortest path `x_1..x_t` in `G2` and `v` to the start `z_1` of a path
/// `z_1..z_s`. The transformed graph moves every `v w_i` edge to `x_2 w_i`.
///
/// Vertex numbering of `assembled`/`transformed`: `G1` keeps its indices,
/// the other vertices of `G2` follow in increasing order, then `z_2..z_s`.
#[derive(Debug, Clone, Serialize)]
pub struct Per1Instance {
    #[serde(skip)]
    pub g1: Graph,
    #[serde(skip)]
    pub g2: Graph,
    pub u: usize,
    pub v: usize,
    /// Common neighbours of `u` and `v` in `G1`.
    pub w: Vec<usize>,
    /// `x_1..x_t` in assembled numbering; `x_1 = u`.
    pub x: Vec<usize>,
    /// `z_1..z_s` in assembled numbering; `z_1 = v`.
    pub z: Vec<usize>,
    pub s: usize,
    pub t: usize,
    /// `S1 = V(G1) ∖ {u, v}`.
    pub s1: Vec<usize>,
    /// `S2 = V(G2) ∖ {x_1..x_t}`.
    pub s2: Vec<usize>,
    /// `S3 = {x_1..x_t} ∪ {z_1..z_s}`.
    pub s3: Vec<usize>,
    #[serde(skip)]
    pub assembled: Graph,
    #[serde(skip)]
    pub transformed: Graph,
}

/// Validates the hypotheses and assembles the `(G, G')` pair.
pub fn build_per1(
    g1: &Graph,
    uv: (usize, usize),
    g2: &Graph,
    path: &[usize],
    s: usize,
) -> Result<Per1Instance> {
    let (u, v) = uv;
    g1.check_vertex(u)?;
    g1.check_vertex(v)?;
    if !g1.is_connected() || !g2.is_connected() {
        return Err(hypothesis("G1 and G2 must be connected"));
    }
    if u == v || !g1.has_edge(u, v) {
        return Err(hypothesis(format!("{u}{v} is not an edge of G1")));
    }
    let nu: Vec<usize> = g1.neighbors(u).filter(|&x| x != v).collect();
    let nv: Vec<usize> = g1.neighbors(v).filter(|&x| x != u).collect();
    if nu != nv {
        return Err(hypothesis(format!(
            "N(u)∖{{v}} = {nu:?} differs from N(v)∖{{u}} = {nv:?}"
        )));
    }
    if nu.is_empty() {
        return Err(hypothesis("u and v need at least one common neighbour"));
    }
    if s < 1 {
        return Err(hypothesis("the path at v needs at least one vertex"));
    }
    let t = path.len();
    if t < s + 2 {
        return Err(hypothesis(format!("need t >= s + 2, got t = {t}, s = {s}")));
    }
    for &x in path {
        g2.check_vertex(x)?;
    }
    for pair in path.windows(2) {
        if !g2.has_edge(pair[0], pair[1]) {
            return Err(hypothesis(format!(
                "{}-{} is not an edge of G2",
                pair[0], pair[1]
            )));
        }
    }
    let d = crate::metrics::bfs_distances(g2, path[0])?[path[t - 1]];
    if d != Some(t as u32 - 1) {
        return Err(hypothesis(format!(
            "x_1..x_t is not a shortest path: d(x_1, x_t) = {d:?}, path length {}",
            t - 1
        )));
    }

    let n1 = g1.order();
    let n2 = g2.order();
    let n = n1 + n2 - 1 + s - 1;
    // G2 vertex -> assembled vertex
    let mut g2_map = vec![usize::MAX; n2];
    g2_map[path[0]] = u;
    let mut next = n1;
    for (x, slot) in g2_map.iter_mut().enumerate() {
        if x != path[0] {
            *slot = next;
            next += 1;
        }
    }
    let z: Vec<usize> = std::iter::once(v).chain(next..next + s - 1).collect();

    let mut g = Graph::empty(n)?;
    for (a, b) in g1.edges() {
        g.set_edge(a, b);
    }
    for (a, b) in g2.edges() {
        g.set_edge(g2_map[a], g2_map[b]);
    }
    for pair in z.windows(2) {
        g.set_edge(pair[0], pair[1]);
    }

    let x: Vec<usize> = path.iter().map(|&p| g2_map[p]).collect();
    let mut transformed = g.clone();
    for &wi in &nu {
        transformed.clear_edge(v, wi);
        transformed.set_edge(x[1], wi);
    }

    let on_path: Vec<bool> = (0..n2).map(|p| path.contains(&p)).collect();
    let s2 = (0..n2)
        .filter(|&p| !on_path[p])
        .map(|p| g2_map[p])
        .collect();
    let mut s3: Vec<usize> = x.iter().chain(&z).copied().collect();
    s3.sort_unstable();
    s3.dedup();

    Ok(Per1Instance {
        g1: g1.clone(),
        g2: g2.clone(),
        u,
        v,
        w: nu,
        x,
        z,
        s,
        t,
        s1: (0..n1).filter(|&y| y != u && y != v).collect(),
        s2,
        s3,
        assembled: g,
        transformed,
    })
}

impl Per1Instance {
    pub fn cut_vertex_counts(&self) -> (usize, usize) {
        (
            cut_vertex_count(&self.assembled),
            cut_vertex_count(&self.transformed),
        )
    }

    /// For every `y ∈ S1`, the gain in `Σ 1/d(y, ·)` over the targets
    /// `z_1..z_s, x_2..x_t` when passing from `G` to `G'`.
    pub fn deltas(&self) -> Vec<(usize, ExactRational)> {
        let before = distance_profile(&self.assembled);
        let after = distance_profile(&self.transformed);
        let targets: Vec<usize> = self.z.iter().chain(&self.x[1..]).copied().collect();
        self.s1
            .iter()
            .map(|&y| {
                let mut gain = ExactRational::zero();
                for &target in &targets {
                    let db = before
                        .distance(y, target)
                        .expect("assembled graph is connected");
                    let da = after
                        .distance(y, target)
                        .expect("transformed graph is connected");
                    gain += &(ExactRational::new(1, da) - ExactRational::new(1, db));
                }
                (y, gain)
            })
            .collect()
    }
}
