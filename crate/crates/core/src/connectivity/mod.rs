//! Cut vertices, blocks, and vertex/edge connectivity.
//!
//! Production routines use a lowpoint DFS and unit-capacity max-flow; the
//! [`oracle`] submodule holds exhaustive-subset versions used to check them.

mod flow;
pub mod oracle;

pub use flow::{edge_connectivity, vertex_connectivity};

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Sorted articulation points.
    pub cut_vertices: Vec<usize>,
    /// Each block as a sorted vertex list; blocks sorted lexicographically.
    /// An isolated vertex forms a block on its own.
    pub blocks: Vec<Vec<usize>>,
}

/// Articulation points, per component for disconnected input.
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    lowpoint_dfs(g, false).cut_vertices
}

pub fn blocks(g: &Graph) -> BlockDecomposition {
    lowpoint_dfs(g, true)
}

/// Number of cut vertices; avoids allocating block lists.
pub fn cut_vertex_count(g: &Graph) -> usize {
    cut_vertices(g).len()
}

struct Frame {
    v: usize,
    parent: usize,
    next: usize,
}

/// Iterative Hopcroft-Tarjan DFS. Block extraction keeps an edge stack and
/// is skipped when only cut vertices are wanted.
fn lowpoint_dfs(g: &Graph, want_blocks: bool) -> BlockDecomposition {
    const NONE: usize = usize::MAX;
    let n = g.order();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![NONE; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if adj[root].is_empty() && want_blocks {
            blocks.push(vec![root]);
            continue;
        }
        let mut root_children = 0;
        let mut stack = vec![Frame {
            v: root,
            parent: NONE,
            next: 0,
        }];
        while let Some(top) = stack.last_mut() {
            let v = top.v;
            if top.next < adj[v].len() {
                let w = adj[v][top.next];
                top.next += 1;
                if disc[w] == NONE {
                    if want_blocks {
                        edge_stack.push((v, w));
                    }
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push(Frame {
                        v: w,
                        parent: v,
                        next: 0,
                    });
                } else if w != top.parent && disc[w] < disc[v] {
                    low[v] = low[v].min(disc[w]);
                    if want_blocks {
                        edge_stack.push((v, w));
                    }
                }
                continue;
            }
            let parent = top.parent;
            stack.pop();
            if parent == NONE {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent == root {
                    root_children += 1;
                } else {
                    is_cut[parent] = true;
                }
                if want_blocks {
                    let mut block = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (parent, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    blocks.push(block);
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    blocks.sort();
    BlockDecomposition {
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
        blocks,
    }
}
