use crate::error::{GraphError, Result};
use crate::graph::Graph;

/// `G_{t,s}`: `G` with a path of `t` vertices starting at `u` and one of `s`
/// vertices starting at `v` (so `t - 1` and `s - 1` new vertices).
pub fn attach_two_paths(g: &Graph, u: usize, v: usize, t: usize, s: usize) -> Result<Graph> {
    if t < 1 || s < 1 {
        return Err(GraphError::InvalidArgument("path orders start at 1".into()));
    }
    g.attach_path(u, t - 1)?.attach_path(v, s - 1)
}

fn check_twins(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.is_connected() {
        return Err(GraphError::Hypothesis("G must be connected".into()));
    }
    if u == v || !g.has_edge(u, v) {
        return Err(GraphError::Hypothesis(format!("{u}{v} is not an edge")));
    }
    let nu: Vec<usize> = g.neighbors(u).filter(|&x| x != v).collect();
    let nv: Vec<usize> = g.neighbors(v).filter(|&x| x != u).collect();
    if nu != nv || nu.is_empty() {
        return Err(GraphError::Hypothesis(format!(
            "need N(u)∖{{v}} = N(v)∖{{u}} ≠ ∅, got {nu:?} and {nv:?}"
        )));
    }
    Ok(())
}

/// Returns `(G_{t,s}, G_{t-1,s+1})` for `t ≥ s + 2 ≥ 3`.
pub fn path_shift(g: &Graph, u: usize, v: usize, t: usize, s: usize) -> Result<(Graph, Graph)> {
    check_twins(g, u, v)?;
    if s < 1 || t < s + 2 {
        return Err(GraphError::Hypothesis(format!(
            "need t >= s + 2 >= 3, got t = {t}, s = {s}"
        )));
    }
    Ok((
        attach_two_paths(g, u, v, t, s)?,
        attach_two_paths(g, u, v, t - 1, s + 1)?,
    ))
}

/// Repeats [`path_shift`] from `(t, s)` until the lengths differ by at most
/// one. Returns the visited `(t, s)` pairs, starting with the input.
pub fn balance_sequence(t: usize, s: usize) -> Vec<(usize, usize)> {
    let mut seq = vec![(t, s)];
    let (mut t, mut s) = (t, s);
    while s >= 1 && t >= s + 2 {
        t -= 1;
        s += 1;
        seq.push((t, s));
    }
    seq
}
