//! The shifting operation `S_ij` (Kelmans transformation) and shifted graphs.

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};

/// Record of one application of `S_ij`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftStep {
    pub i: usize,
    pub j: usize,
    /// Number of edges rewritten from `{j, w}` to `{i, w}`.
    pub changed: usize,
}

/// Applies `S_ij` for `1 <= i < j <= n`: every edge `{j, w}` with `w != i`
/// and `{i, w}` absent from `g` becomes `{i, w}`. Collisions are judged
/// against the input graph, so the edge count is preserved.
pub fn shift(g: &Graph, i: usize, j: usize) -> Result<(Graph, ShiftStep)> {
    if i == 0 || i >= j || j > g.n() {
        return Err(Error::invalid(format!(
            "shift needs 1 <= i < j <= n, got i = {i}, j = {j}, n = {}",
            g.n()
        )));
    }
    let rows = g.rows();
    let bi = 1u64 << (i - 1);
    let movable = rows[j - 1] & !bi & !rows[i - 1];
    let mut out = g.clone();
    for w in BitIter(movable) {
        out.remove_edge(j, w + 1)?;
        out.add_edge(i, w + 1)?;
    }
    debug_assert_eq!(out.edge_count(), g.edge_count());
    Ok((
        out,
        ShiftStep {
            i,
            j,
            changed: movable.count_ones() as usize,
        },
    ))
}

/// Down-set test: for each edge `{u, v}` and each `u' < u` with `u' != v`,
/// `{u', v}` must be an edge. Equivalent to `S_ij(g) = g` for all `i < j`.
pub fn is_shifted(g: &Graph) -> bool {
    let rows = g.rows();
    (0..g.n()).all(|u| {
        let below = (1u64 << u) - 1;
        BitIter(rows[u]).all(|v| {
            let need = below & !(1u64 << v);
            rows[v] & need == need
        })
    })
}

/// Applies `S_ij` over pairs in lexicographic order, restarting the sweep
/// after every change, until the graph is shifted.
pub fn shift_closure(g: &Graph) -> Graph {
    let n = g.n();
    let mut cur = g.clone();
    'sweep: loop {
        for i in 1..=n {
            for j in i + 1..=n {
                let (next, step) = shift(&cur, i, j).expect("labels in range");
                if step.changed > 0 {
                    cur = next;
                    continue 'sweep;
                }
            }
        }
        return cur;
    }
}

/// Sum of endpoint labels over all edges; strictly decreases under any
/// shift that changes the graph.
pub fn label_weight(g: &Graph) -> usize {
    g.edges().iter().map(|&(u, v)| u + v).sum()
}
