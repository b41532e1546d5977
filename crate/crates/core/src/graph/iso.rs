use super::{iter_bits, Graph};
use crate::error::{GraphError, Result};

/// Orders above this are refused; the search is exponential in the worst case.
pub const MAX_ISOMORPHISM_ORDER: usize = 16;

/// Degree plus the count of vertices at each BFS distance (last slot:
/// unreachable). Equal for corresponding vertices under any isomorphism.
fn signatures(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let words = g.row_words();
    (0..n)
        .map(|s| {
            let mut sig = vec![0u32; n + 1];
            let mut seen = vec![0u64; words];
            let mut frontier = vec![0u64; words];
            seen[s / 64] |= 1 << (s % 64);
            frontier[s / 64] |= 1 << (s % 64);
            let mut reached = 1;
            let mut level = 0;
            loop {
                let mut next = vec![0u64; words];
                for u in iter_bits(&frontier) {
                    for (nw, rw) in next.iter_mut().zip(g.row(u)) {
                        *nw |= rw;
                    }
                }
                let mut grew = 0;
                for (nw, sw) in next.iter_mut().zip(seen.iter_mut()) {
                    *nw &= !*sw;
                    *sw |= *nw;
                    grew += nw.count_ones();
                }
                if grew == 0 {
                    break;
                }
                level += 1;
                sig[level] = grew;
                reached += grew as usize;
                frontier = next;
            }
            sig[0] = g.degree(s) as u32;
            sig[n] = (n - reached) as u32;
            sig
        })
        .collect()
}

/// True iff some vertex bijection maps the edges of `g` onto those of `h`.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    let n = g.order();
    for order in [n, h.order()] {
        if order > MAX_ISOMORPHISM_ORDER {
            return Err(GraphError::TooLarge {
                requested: order,
                max: MAX_ISOMORPHISM_ORDER,
            });
        }
    }
    if n != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    let sg = signatures(g);
    let sh = signatures(h);
    let mut a = sg.clone();
    let mut b = sh.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(false);
    }

    // Visit g's vertices so that each one (after the first of its component)
    // has an already-mapped neighbour; seed components with the vertex whose
    // signature class is smallest.
    let class_size = |v: usize| sg.iter().filter(|s| **s == sg[v]).count();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let seed = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (class_size(v), v))
            .expect("unplaced vertex");
        placed[seed] = true;
        order.push(seed);
        let mut i = order.len() - 1;
        while i < order.len() {
            let mut nbrs: Vec<usize> = g.neighbors(order[i]).filter(|&w| !placed[w]).collect();
            nbrs.sort_by_key(|&w| (class_size(w), w));
            for w in nbrs {
                placed[w] = true;
                order.push(w);
            }
            i += 1;
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(g, h, &sg, &sh, &order, 0, &mut map, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    sg: &[Vec<u32>],
    sh: &[Vec<u32>],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for y in 0..h.order() {
        if used[y] || sh[y] != sg[x] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&px| g.has_edge(x, px) == h.has_edge(y, map[px]));
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(g, h, sg, sh, order, depth + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
        use rand::Rng;
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.4) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn relabeled_path() {
        let p = Graph::path(4).unwrap();
        let q = p.relabel(&[2, 0, 3, 1]).unwrap();
        assert!(are_isomorphic(&p, &q).unwrap());
    }

    #[test]
    fn distinguishes_different_graphs() {
        let k4e = Graph::complete(4).unwrap().remove_edge(0, 1).unwrap();
        assert!(!are_isomorphic(&k4e, &Graph::path(4).unwrap()).unwrap());
        // same degree sequence, different structure: C6 vs two triangles
        let c6 = Graph::cycle(6).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let tt = k3.disjoint_union(&k3).unwrap();
        assert!(!are_isomorphic(&c6, &tt).unwrap());
    }

    #[test]
    fn k5_minus_edge_vs_k4_plus_degree3_vertex() {
        let k5e = Graph::complete(5).unwrap().remove_edge(2, 4).unwrap();
        let mut k = Graph::complete(4).unwrap().attach_path(0, 1).unwrap();
        k = k.add_edge(1, 4).unwrap().add_edge(2, 4).unwrap();
        assert!(are_isomorphic(&k5e, &k).unwrap());
    }

    #[test]
    fn random_relabelings_are_isomorphic() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 0..=12 {
            let g = random_graph(n, &mut rng);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm).unwrap();
            assert!(are_isomorphic(&g, &h).unwrap());
            assert!(are_isomorphic(&h, &g).unwrap());
        }
    }

    #[test]
    fn equivalence_on_small_sample() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let gs: Vec<Graph> = (0..30).map(|_| random_graph(5, &mut rng)).collect();
        for a in &gs {
            assert!(are_isomorphic(a, a).unwrap());
            for b in &gs {
                let ab = are_isomorphic(a, b).unwrap();
                assert_eq!(ab, are_isomorphic(b, a).unwrap());
                if !ab {
                    continue;
                }
                for c in &gs {
                    if are_isomorphic(b, c).unwrap() {
                        assert!(are_isomorphic(a, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn size_guard() {
        let g = Graph::path(17).unwrap();
        assert!(are_isomorphic(&g, &g).is_err());
    }
}
