//! Labeled simple graphs on `[n] = {1, ..., n}` stored as adjacency bitrows.
//!
//! Every public method speaks 1-based labels. Row `v - 1` holds the neighbors
//! of vertex `v`, with bit `w - 1` set when `{v, w}` is an edge.

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold (one `u64` per bitrow).
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n > MAX_VERTICES`.
    pub fn empty(n: usize) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "graph on {n} vertices exceeds {MAX_VERTICES}"
        );
        Graph {
            n,
            rows: vec![0; n],
        }
    }

    /// Builds a graph from 1-based edge pairs. Duplicate pairs are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph representation",
                n,
                cap: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Wraps raw 0-based bitrows. Used by the search kernels; the rows must
    /// already be symmetric and loop-free.
    pub(crate) fn from_rows(rows: &[u64]) -> Self {
        let g = Graph {
            n: rows.len(),
            rows: rows.to_vec(),
        };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The 0-based adjacency bitrows.
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    fn check_label(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::invalid(format!(
                "vertex label {v} outside 1..={}",
                self.n
            )))
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_label(u)?;
        self.check_label(v)?;
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v
            && (1..=self.n).contains(&u)
            && (1..=self.n).contains(&v)
            && self.rows[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.rows[u - 1] |= 1 << (v - 1);
        self.rows[v - 1] |= 1 << (u - 1);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.rows[u - 1] &= !(1 << (v - 1));
        self.rows[v - 1] &= !(1 << (u - 1));
        Ok(())
    }

    /// Copy of `self` with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows
            .get(v.wrapping_sub(1))
            .map_or(0, |r| r.count_ones() as usize)
    }

    /// Neighbors of `v` in increasing label order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.rows.get(v.wrapping_sub(1)).copied().unwrap_or(0);
        BitIter(row).map(|b| b + 1)
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above = self.rows[u] & !low_mask(u + 1);
            out.extend(BitIter(above).map(|v| (u + 1, v + 1)));
        }
        out
    }

    /// True when every edge of `self` is an edge of `other` on the same labels.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// Checks the symmetric / irreflexive / in-range invariants.
    pub fn is_well_formed(&self) -> bool {
        let mask = low_mask(self.n);
        self.rows.len() == self.n
            && (0..self.n).all(|u| {
                let r = self.rows[u];
                r & !mask == 0 && r >> u & 1 == 0 && BitIter(r).all(|v| self.rows[v] >> u & 1 == 1)
            })
    }

    fn relabeled_into(&self, dst: &mut Graph, offset: usize) {
        for (u, &row) in self.rows.iter().enumerate() {
            dst.rows[u + offset] |= row << offset;
        }
    }
}

/// Iterates the set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// `K_n`. Rejects `n = 0`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("complete graph needs at least one vertex"));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "graph representation",
            n,
            cap: MAX_VERTICES,
        });
    }
    let full = low_mask(n);
    let rows = (0..n).map(|u| full & !(1 << u)).collect();
    Ok(Graph { n, rows })
}

/// `E_n`, the edgeless graph on `n` vertices.
pub fn empty_graph(n: usize) -> Graph {
    Graph::empty(n)
}

/// `g1 ∨ g2`: disjoint union plus every pair between the two sides.
/// `g2`'s labels are offset by `g1.n()`.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let mut g = disjoint_union(g1, g2);
    let (n1, n2) = (g1.n, g2.n);
    let left = low_mask(n1);
    let right = low_mask(n1 + n2) & !left;
    for u in 0..n1 {
        g.rows[u] |= right;
    }
    for u in n1..n1 + n2 {
        g.rows[u] |= left;
    }
    g
}

/// `g1 ∪ g2` with `g2`'s labels offset by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let mut g = Graph::empty(g1.n + g2.n);
    g1.relabeled_into(&mut g, 0);
    g2.relabeled_into(&mut g, g1.n);
    g
}

/// Bipartite graph with parts `X = {x_1..x_nx}` and `Y = {y_1..y_ny}`.
/// Row `i` holds the Y-neighbors of `x_{i+1}`; intra-part edges cannot be
/// represented.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    nx: usize,
    ny: usize,
    rows: Vec<u64>,
}

impl BipartiteGraph {
    /// # Panics
    /// If either part exceeds 64 vertices or the two together exceed
    /// [`MAX_VERTICES`].
    pub fn empty(nx: usize, ny: usize) -> Self {
        assert!(
            nx + ny <= MAX_VERTICES,
            "bipartite graph on {nx}+{ny} vertices exceeds {MAX_VERTICES}"
        );
        BipartiteGraph {
            nx,
            ny,
            rows: vec![0; nx],
        }
    }

    pub fn from_edges(nx: usize, ny: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if nx + ny > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph representation",
                n: nx + ny,
                cap: MAX_VERTICES,
            });
        }
        let mut g = Self::empty(nx, ny);
        for &(x, y) in edges {
            g.add_edge(x, y)?;
        }
        Ok(g)
    }

    pub(crate) fn from_rows(ny: usize, rows: &[u64]) -> Self {
        debug_assert!(rows.iter().all(|r| r & !low_mask(ny) == 0));
        BipartiteGraph {
            nx: rows.len(),
            ny,
            rows: rows.to_vec(),
        }
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    /// Row `i` is the bitset of Y-neighbors (bit `j` for `y_{j+1}`) of `x_{i+1}`.
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn add_edge(&mut self, x: usize, y: usize) -> Result<()> {
        if x == 0 || x > self.nx || y == 0 || y > self.ny {
            return Err(Error::invalid(format!(
                "bipartite edge (x{x}, y{y}) outside parts {}x{}",
                self.nx, self.ny
            )));
        }
        self.rows[x - 1] |= 1 << (y - 1);
        Ok(())
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        (1..=self.nx).contains(&x)
            && (1..=self.ny).contains(&y)
            && self.rows[x - 1] >> (y - 1) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Edges as `(x, y)` label pairs, row-major.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, &r)| BitIter(r).map(move |y| (x + 1, y + 1)))
            .collect()
    }

    /// The same edges as a general graph: `x_i ↦ i`, `y_j ↦ nx + j`.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.nx + self.ny);
        for (x, &r) in self.rows.iter().enumerate() {
            g.rows[x] = r << self.nx;
            for y in BitIter(r) {
                g.rows[self.nx + y] |= 1 << x;
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_empty() {
        assert_eq!(complete_graph(1).unwrap().edge_count(), 0);
        assert_eq!(complete_graph(4).unwrap().edge_count(), 6);
        assert!(complete_graph(0).is_err());
        assert_eq!(empty_graph(0).n(), 0);
        let e7 = empty_graph(7);
        assert_eq!((e7.n(), e7.edge_count()), (7, 0));
        let k64 = complete_graph(64).unwrap();
        assert_eq!(k64.edge_count(), 64 * 63 / 2);
        assert!(k64.is_well_formed());
    }

    #[test]
    fn join_examples() {
        let g = join(&complete_graph(2).unwrap(), &empty_graph(3));
        assert_eq!(g.edge_count(), 7);
        let star = join(&complete_graph(1).unwrap(), &empty_graph(4));
        assert_eq!(star.edge_count(), 4);
        assert_eq!(star.degree(1), 4);
        let k3 = complete_graph(3).unwrap();
        assert_eq!(join(&k3, &empty_graph(0)), k3);
        // K_2 ∨ (E_3 ∪ K_2), the even-k dominating construction at n=7, k=6
        let inner = disjoint_union(&empty_graph(3), &complete_graph(2).unwrap());
        let g = join(&complete_graph(2).unwrap(), &inner);
        assert_eq!(g.n(), 7);
        assert_eq!(g.edge_count(), 12);
        assert!(g.is_well_formed());
    }

    #[test]
    fn disjoint_union_examples() {
        let g = disjoint_union(&complete_graph(3).unwrap(), &empty_graph(2));
        assert_eq!((g.n(), g.edge_count()), (5, 3));
        let k4 = complete_graph(4).unwrap();
        assert_eq!(disjoint_union(&empty_graph(0), &k4), k4);
        let two = disjoint_union(&complete_graph(2).unwrap(), &complete_graph(2).unwrap());
        assert_eq!(two.edges(), vec![(1, 2), (3, 4)]);
    }

    #[test]
    fn edge_ops_keep_invariants() {
        let mut g = Graph::empty(5);
        g.add_edge(1, 5).unwrap();
        g.add_edge(3, 2).unwrap();
        assert!(g.has_edge(5, 1) && g.has_edge(2, 3));
        assert!(g.is_well_formed());
        assert_eq!(g.edges(), vec![(1, 5), (2, 3)]);
        assert!(g.add_edge(2, 2).is_err());
        assert!(g.add_edge(0, 2).is_err());
        assert!(g.add_edge(1, 6).is_err());
        g.remove_edge(1, 5).unwrap();
        assert!(!g.has_edge(1, 5));
        assert!(g.is_well_formed());
        assert_eq!(g.neighbors(3).collect::<Vec<_>>(), vec![2]);
        assert!(!g.has_edge(0, 1));
        assert_eq!(g.degree(9), 0);
    }

    #[test]
    fn bipartite_to_graph() {
        let bg = BipartiteGraph::from_edges(2, 3, &[(1, 1), (1, 3), (2, 2)]).unwrap();
        let g = bg.to_graph();
        assert_eq!(g.edges(), vec![(1, 3), (1, 5), (2, 4)]);
        assert!(g.is_well_formed());
        assert_eq!(bg.edge_count(), 3);
        assert!(BipartiteGraph::from_edges(2, 3, &[(3, 1)]).is_err());
    }
}
