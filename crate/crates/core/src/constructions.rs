//! Builders for the extremal families.
//!
//! | family | graph |
//! |---|---|
//! | [`g_nk`] | `K_{n-k}` with `n-k` pendant paths of almost equal lengths |
//! | [`k_n1_r`] | `K_{n-1}` plus a vertex joined to `r` of its vertices |
//! | [`join_family`] | `(K_{n1} ∪ K_{n2}) ∨ K_{n3}` |
//! | [`second_max_family`] | second maximizers for vertex connectivity `r` |

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::{are_isomorphic, Graph};

/// `K_{n-k}` on vertices `0..n-k` with the `k` remaining vertices split into
/// one pendant path per core vertex. Writing `k = q(n-k) + s`, core vertices
/// `0..s` get paths of `q + 1` vertices and the rest get `q`.
///
/// `g_nk(n, 0)` is `K_n` and `g_nk(n, n-2)` is `P_n`.
pub fn g_nk(n: usize, k: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(format!("g_nk needs n >= 2, got n = {n}")));
    }
    if k > n - 2 {
        return Err(invalid(format!(
            "g_nk needs 0 <= k <= n-2, got n = {n}, k = {k}"
        )));
    }
    let core = n - k;
    let (q, s) = (k / core, k % core);
    let mut g = Graph::complete(core)?;
    for v in 0..core {
        g = g.attach_path(v, if v < s { q + 1 } else { q })?;
    }
    Ok(g)
}

/// `K_{n-1}` on `0..n-1`, plus vertex `n-1` adjacent to `0..r`.
pub fn k_n1_r(n: usize, r: usize) -> Result<Graph> {
    if n < 3 || r < 1 || r > n - 2 {
        return Err(invalid(format!(
            "k_n1_r needs n >= 3 and 1 <= r <= n-2, got n = {n}, r = {r}"
        )));
    }
    let mut g = Graph::complete(n - 1)?.disjoint_union(&Graph::empty(1)?)?;
    for v in 0..r {
        g.set_edge(v, n - 1);
    }
    Ok(g)
}

/// `(K_{n1} ∪ K_{n2}) ∨ K_{n3}` with vertex blocks in that order.
pub fn join_family(n1: usize, n2: usize, n3: usize) -> Result<Graph> {
    if n2 < 1 || n1 < n2 || n3 < 1 {
        return Err(invalid(format!(
            "join_family needs n1 >= n2 >= 1 and n3 >= 1, got ({n1}, {n2}, {n3})"
        )));
    }
    Graph::complete(n1)?
        .disjoint_union(&Graph::complete(n2)?)?
        .join(&Graph::complete(n3)?)
}

/// Isomorphism-class representatives of the claimed second maximizers of
/// the Harary index among graphs of order `n` with vertex connectivity `r`.
///
/// * `r = n-2`: `K_{n-2} ∨ O_2` minus one edge of the `K_{n-2}`.
/// * `r <= n-3`: `K(n-1, r)` minus one edge of its `K_{n-1}`. Such edges lie
///   inside the `r` attachment vertices, inside the other `n-r-1`, or between
///   the two groups; one representative of each kind that exists, with
///   isomorphic duplicates dropped. For `r = 1` a between-groups deletion
///   leaves the added vertex at distance 3 from the far endpoint, so its
///   index falls `1/6` short and it is not a second maximizer; it is left
///   out.
/// * `r = n-4` additionally: `G_{2,2,n-4}`.
pub fn second_max_family(n: usize, r: usize) -> Result<Vec<Graph>> {
    if n < 4 || r < 1 || r > n - 2 {
        return Err(invalid(format!(
            "second_max_family needs n >= 4 and 1 <= r <= n-2, got n = {n}, r = {r}"
        )));
    }
    if r == n - 2 {
        let g = Graph::complete(n - 2)?.join(&Graph::empty(2)?)?;
        return Ok(vec![g.remove_edge(0, 1)?]);
    }

    let base = k_n1_r(n, r)?;
    let mut deletions = vec![(r, r + 1)];
    if r >= 2 {
        deletions.push((0, r));
        deletions.push((0, 1));
    }
    let mut candidates = deletions
        .into_iter()
        .map(|(u, v)| base.remove_edge(u, v))
        .collect::<Result<Vec<_>>>()?;
    if n >= 5 && r == n - 4 {
        candidates.push(join_family(2, 2, n - 4)?);
    }
    dedup_isomorphic(candidates)
}

/// Keeps the first graph of every isomorphism class, preserving order.
pub fn dedup_isomorphic(graphs: Vec<Graph>) -> Result<Vec<Graph>> {
    let mut kept: Vec<Graph> = Vec::new();
    for g in graphs {
        let mut seen = false;
        for h in &kept {
            if are_isomorphic(&g, h)? {
                seen = true;
                break;
            }
        }
        if !seen {
            kept.push(g);
        }
    }
    Ok(kept)
}

/// A named family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum ConstructionSpec {
    Gnk { n: usize, k: usize },
    Knr { n: usize, r: usize },
    Join { n1: usize, n2: usize, n3: usize },
    SecondMax { n: usize, r: usize },
}

impl ConstructionSpec {
    /// Every family except `SecondMax` yields exactly one graph.
    pub fn build(&self) -> Result<Vec<Graph>> {
        match *self {
            ConstructionSpec::Gnk { n, k } => g_nk(n, k).map(|g| vec![g]),
            ConstructionSpec::Knr { n, r } => k_n1_r(n, r).map(|g| vec![g]),
            ConstructionSpec::Join { n1, n2, n3 } => join_family(n1, n2, n3).map(|g| vec![g]),
            ConstructionSpec::SecondMax { n, r } => second_max_family(n, r),
        }
    }
}
