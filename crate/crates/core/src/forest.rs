//! Exact linear-forest analysis and bipartite matching / vertex cover.
//!
//! The largest linear forest in `G` has `n - pc(G)` edges, where `pc(G)` is
//! the minimum number of vertex-disjoint paths (single vertices allowed)
//! covering `V(G)`. `pc` is computed by a subset DP: for each vertex subset
//! `S` we keep `best[S]`, the minimum path cover of `G[S]`, and `ends[S]`,
//! the vertices `v` at which some optimal cover can have a path ending.
//! Any other `v ∈ S` can end a cover with `best[S] + 1` paths (split the path
//! through `v` at `v`), so the pair `(best, ends)` determines the full
//! `(subset, endpoint)` table.

use crate::error::{Error, Result};
use crate::graph::{low_mask, BipartiteGraph, BitIter, Graph};

/// Default vertex cap for [`max_linear_forest`].
pub const DEFAULT_LF_CAP: usize = 16;

/// Hard ceiling on the configurable cap: the tables take `9 * 2^n` bytes.
pub const MAX_LF_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForestStats {
    /// Maximum number of edges of a linear-forest subgraph.
    pub lf: usize,
    /// Edges `(u, v)`, `u < v`, of one maximum linear forest.
    pub witness: Option<Vec<(usize, usize)>>,
}

/// Reusable DP tables, so hot loops in the oracle do not reallocate.
#[derive(Default, Clone)]
pub(crate) struct LfScratch {
    best: Vec<u8>,
    ends: Vec<u64>,
}

impl LfScratch {
    fn fill(&mut self, rows: &[u64]) {
        let n = rows.len();
        let size = 1usize << n;
        if self.best.len() < size {
            self.best.resize(size, 0);
            self.ends.resize(size, 0);
        }
        self.best[0] = 0;
        self.ends[0] = 0;
        for s in 1..size {
            let mut best = u8::MAX;
            let mut ends = 0u64;
            for u in BitIter(s as u64) {
                let rest = s & !(1 << u);
                let val = if rest == 0 {
                    1
                } else if self.ends[rest] & rows[u] != 0 {
                    self.best[rest]
                } else {
                    self.best[rest] + 1
                };
                if val < best {
                    best = val;
                    ends = 1 << u;
                } else if val == best {
                    ends |= 1 << u;
                }
            }
            self.best[s] = best;
            self.ends[s] = ends;
        }
    }

    /// `lf` of the graph given by 0-based bitrows (`rows.len() <= MAX_LF_CAP`).
    pub(crate) fn lf(&mut self, rows: &[u64]) -> usize {
        let n = rows.len();
        if n == 0 {
            return 0;
        }
        self.fill(rows);
        n - self.best[(1usize << n) - 1] as usize
    }

    fn cover_len(&self, s: usize, v: usize) -> u8 {
        if self.ends[s] >> v & 1 == 1 {
            self.best[s]
        } else {
            self.best[s] + 1
        }
    }

    /// Backtracks one optimal cover after [`fill`]; lowest labels win ties.
    fn witness(&self, rows: &[u64]) -> Vec<(usize, usize)> {
        let n = rows.len();
        let mut edges = Vec::new();
        if n == 0 {
            return edges;
        }
        let mut s = (1usize << n) - 1;
        let mut v = self.ends[s].trailing_zeros() as usize;
        loop {
            let val = self.cover_len(s, v);
            let rest = s & !(1 << v);
            if rest == 0 {
                break;
            }
            let cont = BitIter(rows[v] & rest as u64).find(|&w| self.cover_len(rest, w) == val);
            match cont {
                Some(w) => {
                    edges.push((v.min(w) + 1, v.max(w) + 1));
                    v = w;
                }
                None => {
                    debug_assert_eq!(val, self.best[rest] + 1);
                    v = self.ends[rest].trailing_zeros() as usize;
                }
            }
            s = rest;
        }
        edges.sort_unstable();
        edges
    }
}

/// True iff every component of `g` is a path or an isolated vertex.
pub fn is_linear_forest(g: &Graph) -> bool {
    if (1..=g.n()).any(|v| g.degree(v) > 2) {
        return false;
    }
    // acyclic iff e = n - (#components)
    let mut seen = 0u64;
    let mut components = 0;
    for start in 0..g.n() {
        if seen >> start & 1 == 1 {
            continue;
        }
        components += 1;
        let mut frontier = 1u64 << start;
        while frontier != 0 {
            seen |= frontier;
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= g.rows()[v];
            }
            frontier = next & !seen;
        }
    }
    g.edge_count() + components == g.n()
}

/// Same as [`max_linear_forest_capped`] with [`DEFAULT_LF_CAP`].
pub fn max_linear_forest(g: &Graph) -> Result<LinearForestStats> {
    max_linear_forest_capped(g, DEFAULT_LF_CAP)
}

/// Exact maximum linear forest with a witness. Refuses graphs with more than
/// `cap` vertices rather than approximating.
pub fn max_linear_forest_capped(g: &Graph, cap: usize) -> Result<LinearForestStats> {
    let cap = cap.min(MAX_LF_CAP);
    if g.n() > cap {
        return Err(Error::TooLarge {
            what: "linear-forest oracle",
            n: g.n(),
            cap,
        });
    }
    let mut scratch = LfScratch::default();
    let lf = scratch.lf(g.rows());
    let witness = scratch.witness(g.rows());
    debug_assert_eq!(witness.len(), lf);
    Ok(LinearForestStats {
        lf,
        witness: Some(witness),
    })
}

/// `g` contains no linear forest with `k` edges, i.e. `lf(g) <= k - 1`.
pub fn is_lnk_free(g: &Graph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::invalid("edge budget k must be at least 1"));
    }
    if g.n() > DEFAULT_LF_CAP {
        return Err(Error::TooLarge {
            what: "linear-forest oracle",
            n: g.n(),
            cap: DEFAULT_LF_CAP,
        });
    }
    Ok(LfScratch::default().lf(g.rows()) < k)
}

/// Maximum matching as `(x, y)` label pairs (augmenting paths, Kuhn).
pub fn maximum_matching(bg: &BipartiteGraph) -> Vec<(usize, usize)> {
    let mate_of_y = kuhn(bg);
    let mut out: Vec<_> = mate_of_y
        .iter()
        .enumerate()
        .filter_map(|(y, m)| m.map(|x| (x + 1, y + 1)))
        .collect();
    out.sort_unstable();
    out
}

fn kuhn(bg: &BipartiteGraph) -> Vec<Option<usize>> {
    fn augment(x: usize, rows: &[u64], visited: &mut u64, mate_of_y: &mut [Option<usize>]) -> bool {
        for y in BitIter(rows[x] & !*visited) {
            *visited |= 1 << y;
            if mate_of_y[y].is_none_or(|x2| augment(x2, rows, visited, mate_of_y)) {
                mate_of_y[y] = Some(x);
                return true;
            }
        }
        false
    }
    let mut mate_of_y = vec![None; bg.ny()];
    for x in 0..bg.nx() {
        let mut visited = 0u64;
        augment(x, bg.rows(), &mut visited, &mut mate_of_y);
    }
    mate_of_y
}

pub fn matching_number(bg: &BipartiteGraph) -> usize {
    kuhn(bg).iter().flatten().count()
}

/// A vertex set of a bipartite graph, split by part (1-based labels).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BipartiteVertexSet {
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
}

impl BipartiteVertexSet {
    pub fn len(&self) -> usize {
        self.xs.len() + self.ys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every edge has an endpoint in the set.
    pub fn covers(&self, bg: &BipartiteGraph) -> bool {
        let ymask: u64 = self.ys.iter().map(|&y| 1u64 << (y - 1)).sum();
        bg.rows()
            .iter()
            .enumerate()
            .all(|(x, &r)| self.xs.contains(&(x + 1)) || r & !ymask == 0)
    }
}

/// Minimum vertex cover via König's construction: with `Z` the vertices
/// reachable from unmatched X-vertices along alternating paths, the cover is
/// `(X \ Z) ∪ (Y ∩ Z)`.
pub fn min_vertex_cover_bipartite(bg: &BipartiteGraph) -> BipartiteVertexSet {
    let mate_of_y = kuhn(bg);
    let mut x_matched = 0u64;
    for x in mate_of_y.iter().flatten() {
        x_matched |= 1 << x;
    }
    let all_x = low_mask(bg.nx());
    let mut zx = all_x & !x_matched;
    let mut zy = 0u64;
    let mut frontier = zx;
    while frontier != 0 {
        let mut reach_y = 0;
        for x in BitIter(frontier) {
            reach_y |= bg.rows()[x];
        }
        reach_y &= !zy;
        zy |= reach_y;
        let mut next = 0;
        for y in BitIter(reach_y) {
            if let Some(x) = mate_of_y[y] {
                next |= 1 << x;
            }
        }
        frontier = next & !zx;
        zx |= frontier;
    }
    BipartiteVertexSet {
        xs: BitIter(all_x & !zx).map(|x| x + 1).collect(),
        ys: BitIter(zy).map(|y| y + 1).collect(),
    }
}
