//! Simple undirected graphs stored as bit-set adjacency rows.
//!
//! Every row is a fixed number of `u64` words, so neighbourhood unions and
//! intersections used by BFS and the enumeration sweep are plain word
//! operations. Values are treated as immutable: the public editing
//! operations return new graphs.

mod graph6;
mod iso;

pub use graph6::{emit_graph6, parse_graph6};
pub use iso::{are_isomorphic, MAX_ISOMORPHISM_ORDER};

use std::fmt;

use crate::error::{invalid, GraphError, Result};

/// Largest order accepted by the direct constructors.
pub const DEFAULT_MAX_ORDER: usize = 512;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

fn check_order(n: usize) -> Result<()> {
    if n > DEFAULT_MAX_ORDER {
        return Err(GraphError::TooLarge {
            requested: n,
            max: DEFAULT_MAX_ORDER,
        });
    }
    Ok(())
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        let words = words_for(n);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
        })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(invalid("a path needs at least one vertex"));
        }
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(invalid("a cycle needs at least three vertices"));
        }
        let mut g = Graph::path(n)?;
        g.set_edge(0, n - 1);
        Ok(g)
    }

    /// Builds a graph from an edge list. Duplicate edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            if g.has_edge(u, v) {
                return Err(GraphError::EdgePresent(u, v));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Decodes an edge mask over the pairs `(i, j)`, `i < j`, ordered by `j`
    /// then `i` (the graph6 upper-triangle order). Bit `p` is the `p`-th pair.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Graph> {
        let pairs = n * n.saturating_sub(1) / 2;
        if pairs > 64 {
            return Err(invalid(format!(
                "edge masks cover at most 64 pairs, order {n} needs {pairs}"
            )));
        }
        if pairs < 64 && mask >> pairs != 0 {
            return Err(invalid(format!(
                "mask {mask:#x} has bits beyond the {pairs} vertex pairs"
            )));
        }
        let mut g = Graph::empty(n)?;
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    g.set_edge(i, j);
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_edge_mask`]; `None` when the order needs
    /// more than 64 pair bits.
    pub fn edge_mask(&self) -> Option<u64> {
        if self.n * self.n.saturating_sub(1) / 2 > 64 {
            return None;
        }
        let mut mask = 0u64;
        let mut bit = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        Some(mask)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Number of `u64` words in every adjacency row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Adjacency row of `v` as a bit set.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(GraphError::EdgePresent(u, v));
        }
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeAbsent(u, v));
        }
        let mut g = self.clone();
        g.clear_edge(u, v);
        Ok(g)
    }

    /// `self ∪ other`; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let offset = self.n;
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + offset, v + offset);
        }
        Ok(g)
    }

    /// `self ∨ other`: the disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, self.n + v);
            }
        }
        Ok(g)
    }

    /// Hangs a path of `extra` new vertices off `v`. The new vertices get
    /// indices `n, n+1, ...` in path order, `n` being adjacent to `v`.
    pub fn attach_path(&self, v: usize, extra: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if extra == 0 {
            return Ok(self.clone());
        }
        let mut g = Graph::empty(self.n + extra)?;
        for (a, b) in self.edges() {
            g.set_edge(a, b);
        }
        let mut prev = v;
        for w in self.n..self.n + extra {
            g.set_edge(prev, w);
            prev = w;
        }
        Ok(g)
    }

    /// Subgraph induced by the vertices not in `removed`, renumbered in
    /// increasing order.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<Graph> {
        let mut keep = vec![true; self.n];
        for &v in removed {
            self.check_vertex(v)?;
            keep[v] = false;
        }
        let index: Vec<Option<usize>> = keep
            .iter()
            .scan(0usize, |next, &k| {
                Some(if k {
                    *next += 1;
                    Some(*next - 1)
                } else {
                    None
                })
            })
            .collect();
        let mut g = Graph::empty(keep.iter().filter(|&&k| k).count())?;
        for (u, v) in self.edges() {
            if let (Some(a), Some(b)) = (index[u], index[v]) {
                g.set_edge(a, b);
            }
        }
        Ok(g)
    }

    /// Applies the vertex bijection `perm` (old index `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(invalid("permutation length differs from the graph order"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(invalid("not a permutation"));
            }
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// True iff a BFS from vertex 0 reaches every vertex. The graphs on zero
    /// and one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        let mut next = vec![0u64; self.words];
        seen[0] = 1;
        frontier[0] = 1;
        let mut reached = 1;
        loop {
            next.iter_mut().for_each(|w| *w = 0);
            for u in iter_bits(&frontier) {
                for (nw, rw) in next.iter_mut().zip(self.row(u)) {
                    *nw |= rw;
                }
            }
            let mut grew = 0;
            for (nw, sw) in next.iter_mut().zip(seen.iter_mut()) {
                *nw &= !*sw;
                *sw |= *nw;
                grew += nw.count_ones() as usize;
            }
            if grew == 0 {
                break;
            }
            reached += grew;
            std::mem::swap(&mut frontier, &mut next);
        }
        reached == self.n
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        Ok(())
    }

    /// Unchecked symmetric insertion, for builders that own the graph.
    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// Iterates over the indices of the set bits of a multi-word bit set.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i * 64 + b)
        })
    })
}
