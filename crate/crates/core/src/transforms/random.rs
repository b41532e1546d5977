//! Seeded generators whose outputs satisfy the lemma hypotheses by
//! construction.

use rand::seq::SliceRandom;
use rand::Rng;

use super::per1::{build_per1, Per1Instance};
use super::per2::{build_per2, Attachment, Per2Instance};
use super::shift::path_shift;
use crate::graph::Graph;

/// A graph with an edge `0-1` whose endpoints have the same neighbours
/// `2..2+k` besides each other, plus extra vertices hanging off that set.
pub fn twin_edge_graph<R: Rng>(rng: &mut R, max_common: usize, max_extra: usize) -> Graph {
    let k = rng.gen_range(1..=max_common.max(1));
    let extra = rng.gen_range(0..=max_extra);
    let n = 2 + k + extra;
    let mut g = Graph::empty(n).expect("small order");
    g.set_edge(0, 1);
    for w in 2..2 + k {
        g.set_edge(0, w);
        g.set_edge(1, w);
    }
    for a in 2..2 + k {
        for b in a + 1..2 + k {
            if rng.gen_bool(0.5) {
                g.set_edge(a, b);
            }
        }
    }
    for y in 2 + k..n {
        // at least one edge back into {w_i} ∪ earlier extras keeps G connected
        let anchor = rng.gen_range(2..y);
        g.set_edge(y, anchor);
        for other in 2..y {
            if other != anchor && rng.gen_bool(0.3) {
                g.set_edge(y, other);
            }
        }
    }
    g
}

/// A connected graph on `0..t` and some extras in which `0, 1, .., t-1` is a
/// shortest path: extras touch at most three consecutive path vertices or
/// hang as leaves off earlier extras, so no detour is shorter.
pub fn graph_with_shortest_path<R: Rng>(rng: &mut R, t: usize, max_extra: usize) -> Graph {
    let extra = rng.gen_range(0..=max_extra);
    let mut g = Graph::path(t)
        .expect("t >= 1")
        .disjoint_union(&Graph::empty(extra).expect("small"))
        .expect("small");
    for y in t..t + extra {
        if y > t && rng.gen_bool(0.3) {
            g.set_edge(y, rng.gen_range(t..y));
            continue;
        }
        let start = rng.gen_range(0..t);
        let window: Vec<usize> = (start..(start + 3).min(t)).collect();
        let mut any = false;
        for &x in &window {
            if rng.gen_bool(0.5) {
                g.set_edge(y, x);
                any = true;
            }
        }
        if !any {
            g.set_edge(y, *window.choose(rng).expect("nonempty window"));
        }
    }
    g
}

pub fn random_per1<R: Rng>(rng: &mut R) -> Per1Instance {
    let g1 = twin_edge_graph(rng, 3, 3);
    let s = rng.gen_range(1..=3);
    let t = s + 2 + rng.gen_range(0..=2);
    let g2 = graph_with_shortest_path(rng, t, 3);
    let path: Vec<usize> = (0..t).collect();
    build_per1(&g1, (0, 1), &g2, &path, s).expect("generator satisfies the hypotheses")
}

/// A random tree on `order` vertices rooted at 0.
fn random_tree<R: Rng>(rng: &mut R, order: usize) -> Graph {
    let mut g = Graph::empty(order).expect("small");
    for v in 1..order {
        g.set_edge(v, rng.gen_range(0..v));
    }
    g
}

pub fn random_per2<R: Rng>(rng: &mut R) -> Per2Instance {
    let p = rng.gen_range(3..=5);
    let q = rng.gen_range(3..=5);
    let s = rng.gen_range(1..=3);
    let t = s + rng.gen_range(0..=2);
    let mut attachments = Vec::new();
    for at in (2..p).chain(p + 1..p + q - 1) {
        if rng.gen_bool(0.5) {
            let order = rng.gen_range(2..=4);
            attachments.push(Attachment {
                at,
                graph: random_tree(rng, order),
                root: 0,
            });
        }
    }
    build_per2(p, q, t, s, &attachments).expect("generator satisfies the hypotheses")
}

/// A path-shift instance: base graph with twin edge `0-1`, and `(t, s)`.
#[derive(Debug, Clone)]
pub struct PathShiftInstance {
    pub base: Graph,
    pub t: usize,
    pub s: usize,
    pub before: Graph,
    pub after: Graph,
}

pub fn random_path_shift<R: Rng>(rng: &mut R) -> PathShiftInstance {
    let base = twin_edge_graph(rng, 3, 3);
    let s = rng.gen_range(1..=3);
    let t = s + 2 + rng.gen_range(0..=3);
    let (before, after) =
        path_shift(&base, 0, 1, t, s).expect("generator satisfies the hypotheses");
    PathShiftInstance {
        base,
        t,
        s,
        before,
        after,
    }
}

/// A graph on `min_n..=max_n` vertices; each pair is an edge with a
/// probability drawn once per graph.
pub fn random_graph<R: Rng>(rng: &mut R, min_n: usize, max_n: usize) -> Graph {
    let n = rng.gen_range(min_n..=max_n);
    let density: f64 = rng.gen_range(0.1..0.9);
    let mut g = Graph::empty(n).expect("small order");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.set_edge(u, v);
            }
        }
    }
    g
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}
