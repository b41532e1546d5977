//! Distances, the distance distribution γ(G,k), and the Harary and Wiener
//! indices.
//!
//! Two independent routes compute the Harary index: [`harary_index`] weights
//! the distribution `γ(G,k)` obtained from bit-parallel level expansion, and
//! [`harary_index_pairwise`] sums `1/d(u,v)` over the queue-BFS distance
//! matrix. They must agree exactly on every graph.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{GraphError, Result};
use crate::graph::{iter_bits, Graph};
use crate::rational::ExactRational;

/// Shortest-path distances from a single source; `None` marks an
/// unreachable vertex.
pub type DistanceRow = Vec<Option<u32>>;

/// Queue-based BFS from `src`.
pub fn bfs_distances(g: &Graph, src: usize) -> Result<DistanceRow> {
    g.check_vertex(src)?;
    let mut dist: DistanceRow = vec![None; g.order()];
    let mut queue = VecDeque::new();
    dist[src] = Some(0);
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices are reached");
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    n: usize,
    matrix: Vec<Option<u32>>,
    gamma: BTreeMap<u32, u64>,
    unreachable_pairs: u64,
}

impl DistanceProfile {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<u32> {
        self.matrix[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Option<u32>] {
        &self.matrix[u * self.n..(u + 1) * self.n]
    }

    /// Nonzero entries of `k ↦ γ(G,k)`, `k ≥ 1`.
    pub fn gamma(&self) -> &BTreeMap<u32, u64> {
        &self.gamma
    }

    pub fn gamma_at(&self, k: u32) -> u64 {
        self.gamma.get(&k).copied().unwrap_or(0)
    }

    pub fn unreachable_pairs(&self) -> u64 {
        self.unreachable_pairs
    }

    /// Largest finite distance (0 for graphs with fewer than two vertices).
    pub fn diameter(&self) -> u32 {
        self.gamma.keys().next_back().copied().unwrap_or(0)
    }
}

/// All-pairs distances by repeated queue BFS, with the pair distribution.
pub fn distance_profile(g: &Graph) -> DistanceProfile {
    let n = g.order();
    let mut matrix = Vec::with_capacity(n * n);
    for s in 0..n {
        matrix.extend(bfs_distances(g, s).expect("source in range"));
    }
    let mut gamma = BTreeMap::new();
    let mut unreachable_pairs = 0;
    for u in 0..n {
        for v in u + 1..n {
            match matrix[u * n + v] {
                Some(d) => *gamma.entry(d).or_insert(0) += 1,
                None => unreachable_pairs += 1,
            }
        }
    }
    DistanceProfile {
        n,
        matrix,
        gamma,
        unreachable_pairs,
    }
}

/// `γ(G,k)` for every `k ≥ 1` plus the number of unreachable pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DistanceCounts {
    pub gamma: BTreeMap<u32, u64>,
    pub unreachable_pairs: u64,
}

/// Counts ordered pairs per distance by expanding BFS levels as bit sets,
/// calling `visit(k, count)` once per nonempty level of every source.
/// Returns the number of ordered unreachable pairs.
fn for_each_level(g: &Graph, mut visit: impl FnMut(u32, u64)) -> u64 {
    let n = g.order();
    let mut unreachable = 0u64;
    if g.row_words() == 1 {
        let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
        for s in 0..n {
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut k = 0;
            loop {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    next |= rows[f.trailing_zeros() as usize];
                    f &= f - 1;
                }
                next &= !seen;
                if next == 0 {
                    break;
                }
                k += 1;
                visit(k, next.count_ones() as u64);
                seen |= next;
                frontier = next;
            }
            unreachable += (n as u32 - seen.count_ones()) as u64;
        }
        return unreachable;
    }

    let words = g.row_words();
    let mut seen = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    let mut next = vec![0u64; words];
    for s in 0..n {
        seen.iter_mut().for_each(|w| *w = 0);
        frontier.iter_mut().for_each(|w| *w = 0);
        seen[s / 64] = 1 << (s % 64);
        frontier[s / 64] = 1 << (s % 64);
        let mut reached = 1u64;
        let mut k = 0;
        loop {
            next.iter_mut().for_each(|w| *w = 0);
            for u in iter_bits(&frontier) {
                for (nw, rw) in next.iter_mut().zip(g.row(u)) {
                    *nw |= rw;
                }
            }
            let mut grew = 0u64;
            for (nw, sw) in next.iter_mut().zip(seen.iter_mut()) {
                *nw &= !*sw;
                *sw |= *nw;
                grew += nw.count_ones() as u64;
            }
            if grew == 0 {
                break;
            }
            k += 1;
            visit(k, grew);
            reached += grew;
            std::mem::swap(&mut frontier, &mut next);
        }
        unreachable += n as u64 - reached;
    }
    unreachable
}

/// The distance distribution via bit-parallel BFS levels.
pub fn distance_counts(g: &Graph) -> DistanceCounts {
    let mut gamma = BTreeMap::new();
    let unreachable = for_each_level(g, |k, c| *gamma.entry(k).or_insert(0u64) += c);
    for c in gamma.values_mut() {
        *c /= 2;
    }
    DistanceCounts {
        gamma,
        unreachable_pairs: unreachable / 2,
    }
}

/// `Σ_k γ(G,k)/k`, exact. Unreachable pairs contribute nothing.
pub fn harary_from_gamma(gamma: &BTreeMap<u32, u64>) -> ExactRational {
    let lcm = gamma
        .keys()
        .fold(BigInt::from(1), |acc, &k| acc.lcm(&BigInt::from(k)));
    let numer: BigInt = gamma
        .iter()
        .map(|(&k, &c)| BigInt::from(c) * (&lcm / BigInt::from(k)))
        .sum();
    ExactRational::new(numer, lcm)
}

/// The Harary index `H(G) = Σ_{k≥1} γ(G,k)/k`.
pub fn harary_index(g: &Graph) -> ExactRational {
    harary_from_gamma(&distance_counts(g).gamma)
}

/// The Harary index as the direct sum of `1/d(u,v)` over unordered pairs at
/// finite distance.
pub fn harary_index_pairwise(g: &Graph) -> ExactRational {
    let n = g.order();
    let mut total = ExactRational::zero();
    for u in 0..n {
        let row = bfs_distances(g, u).expect("source in range");
        for d in row.into_iter().skip(u + 1).flatten() {
            total += &ExactRational::new(1, d);
        }
    }
    total
}

/// Sum of all pairwise distances. Defined only for connected graphs.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    let counts = distance_counts(g);
    if counts.unreachable_pairs > 0 {
        return Err(GraphError::Disconnected("the Wiener index"));
    }
    Ok(counts.gamma.iter().map(|(&k, &c)| k as u64 * c).sum())
}

/// `lcm(1, ..., n-1)`: every finite distance on `n` vertices divides it, so
/// `scale · H(G)` is an integer for every graph of order `n`.
pub fn harary_scale(n: usize) -> u64 {
    (1..n.max(2) as u64).fold(1, |acc, k| acc.lcm(&k))
}

/// `scale · H(G)` as an exact integer. `scale` must be a multiple of every
/// finite distance in `g`; [`harary_scale`] of the order always is.
/// Intended for small graphs in hot loops.
pub fn harary_scaled(g: &Graph, scale: u64) -> u64 {
    let mut twice = 0u64;
    for_each_level(g, |k, c| {
        debug_assert_eq!(
            scale % k as u64,
            0,
            "scale {scale} not divisible by distance {k}"
        );
        twice += c * (scale / k as u64);
    });
    twice / 2
}

/// Converts an integer produced by [`harary_scaled`] back to `H(G)`.
pub fn unscale(value: u64, scale: u64) -> ExactRational {
    ExactRational::new(value, scale)
}
