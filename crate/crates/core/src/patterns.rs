//! Exact copy counts `N(G, T)` for `T = K_s`, `K*_{s,t}` and bipartite `K_{s,t}`.
//!
//! Clique-star copies are ordered pairs `(W1, W2)` of disjoint sets with
//! `|W1| = s` inducing a clique and every `W1`-`W2` pair adjacent; edges
//! inside `W2` are irrelevant. Biclique copies are pairs `(S ⊆ X, T ⊆ Y)`;
//! for `s != t` both size orientations are counted.
//!
//! Counting is done in `u128`, which is exact for every graph representable
//! here: the number of disjoint set pairs on 64 vertices is below `3^64`.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{low_mask, BipartiteGraph, BitIter, Graph};

/// Arbitrary-precision non-negative count.
pub type Count = BigUint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    Clique,
    CliqueStar,
    Biclique,
}

impl PatternKind {
    pub fn name(self) -> &'static str {
        match self {
            PatternKind::Clique => "clique",
            PatternKind::CliqueStar => "clique-star",
            PatternKind::Biclique => "biclique",
        }
    }
}

impl std::str::FromStr for PatternKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "clique" => Ok(PatternKind::Clique),
            "clique-star" => Ok(PatternKind::CliqueStar),
            "biclique" => Ok(PatternKind::Biclique),
            _ => Err(Error::invalid(format!(
                "unknown pattern kind {s:?} (expected clique, clique-star or biclique)"
            ))),
        }
    }
}

/// Which pattern to count. `t` is 0 for cliques.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PatternSpec {
    kind: PatternKind,
    s: usize,
    t: usize,
}

impl PatternSpec {
    pub fn new(kind: PatternKind, s: usize, t: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::invalid("pattern size s must be at least 1"));
        }
        match kind {
            PatternKind::Clique => Ok(PatternSpec { kind, s, t: 0 }),
            _ if t == 0 => Err(Error::invalid(format!("{} needs t >= 1", kind.name()))),
            _ => Ok(PatternSpec { kind, s, t }),
        }
    }

    pub fn clique(s: usize) -> Result<Self> {
        Self::new(PatternKind::Clique, s, 0)
    }

    pub fn clique_star(s: usize, t: usize) -> Result<Self> {
        Self::new(PatternKind::CliqueStar, s, t)
    }

    pub fn biclique(s: usize, t: usize) -> Result<Self> {
        Self::new(PatternKind::Biclique, s, t)
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Count on a general host. Bicliques need a [`BipartiteGraph`].
    pub fn count(&self, g: &Graph) -> Result<Count> {
        self.count_rows(g.rows()).map(Count::from)
    }

    pub fn count_bipartite(&self, bg: &BipartiteGraph) -> Result<Count> {
        match self.kind {
            PatternKind::Biclique => {
                Ok(biclique_count_raw(bg.rows(), bg.ny(), self.s, self.t).into())
            }
            _ => Ok(self.count_rows(bg.to_graph().rows())?.into()),
        }
    }

    pub(crate) fn count_rows(&self, rows: &[u64]) -> Result<u128> {
        match self.kind {
            PatternKind::Clique => Ok(clique_count_raw(rows, self.s)),
            PatternKind::CliqueStar => Ok(clique_star_count_raw(rows, self.s, self.t)),
            PatternKind::Biclique => Err(Error::Unsupported(
                "biclique counts need a bipartite host".into(),
            )),
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PatternKind::Clique => write!(f, "K_{}", self.s),
            PatternKind::CliqueStar => write!(f, "K*_{{{},{}}}", self.s, self.t),
            PatternKind::Biclique => write!(f, "K_{{{},{}}}", self.s, self.t),
        }
    }
}

/// `C(a, b)` in `u128`; exact for `a <= 64` and beyond.
pub(crate) fn choose(a: usize, b: usize) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Visits every `need`-clique drawn from `cand` in increasing label order,
/// passing the clique mask and its common neighborhood.
fn cliques_rec<F: FnMut(u64, u64)>(
    rows: &[u64],
    cand: u64,
    need: usize,
    clique: u64,
    common: u64,
    f: &mut F,
) {
    if need == 0 {
        f(clique, common);
        return;
    }
    if (cand.count_ones() as usize) < need {
        return;
    }
    for v in BitIter(cand) {
        let above = !low_mask(v + 1);
        cliques_rec(
            rows,
            cand & rows[v] & above,
            need - 1,
            clique | 1 << v,
            common & rows[v],
            f,
        );
    }
}

pub(crate) fn for_each_clique<F: FnMut(u64, u64)>(rows: &[u64], s: usize, mut f: F) {
    let all = low_mask(rows.len());
    cliques_rec(rows, all, s, 0, all, &mut f);
}

pub(crate) fn clique_count_raw(rows: &[u64], s: usize) -> u128 {
    if s == 1 {
        return rows.len() as u128;
    }
    if s == 2 {
        return rows.iter().map(|r| r.count_ones() as u128).sum::<u128>() / 2;
    }
    let mut count = 0u128;
    for_each_clique(rows, s, |_, _| count += 1);
    count
}

pub(crate) fn clique_star_count_raw(rows: &[u64], s: usize, t: usize) -> u128 {
    let mut count = 0u128;
    for_each_clique(rows, s, |_, common| {
        count += choose(common.count_ones() as usize, t);
    });
    count
}

fn xsubsets_rec<F: FnMut(u64)>(rows: &[u64], from: usize, need: usize, common: u64, f: &mut F) {
    if need == 0 {
        f(common);
        return;
    }
    for x in from..=rows.len().saturating_sub(need) {
        xsubsets_rec(rows, x + 1, need - 1, common & rows[x], f);
    }
}

/// Pairs `(S ⊆ X, T ⊆ Y)`, `|S| = s`, `|T| = t`, completely joined.
fn biclique_one_orientation(rows: &[u64], ny: usize, s: usize, t: usize) -> u128 {
    if s > rows.len() {
        return 0;
    }
    let mut count = 0u128;
    xsubsets_rec(rows, 0, s, low_mask(ny), &mut |common| {
        count += choose(common.count_ones() as usize, t);
    });
    count
}

pub(crate) fn biclique_count_raw(rows: &[u64], ny: usize, s: usize, t: usize) -> u128 {
    let one = biclique_one_orientation(rows, ny, s, t);
    if s == t {
        one
    } else {
        one + biclique_one_orientation(rows, ny, t, s)
    }
}

/// Number of `s`-subsets inducing a complete subgraph (0 when `s > n`).
pub fn count_cliques(g: &Graph, s: usize) -> Count {
    clique_count_raw(g.rows(), s).into()
}

/// Ordered `K*_{s,t}` copies `(W1, W2)`.
pub fn count_clique_stars(g: &Graph, s: usize, t: usize) -> Count {
    clique_star_count_raw(g.rows(), s, t).into()
}

/// `K_{s,t}` copies with `S ⊆ X`, `T ⊆ Y`; both orientations when `s != t`.
pub fn count_bicliques(bg: &BipartiteGraph, s: usize, t: usize) -> Count {
    biclique_count_raw(bg.rows(), bg.ny(), s, t).into()
}

/// One orientation only: `|S| = s` in X and `|T| = t` in Y.
pub fn count_bicliques_oriented(bg: &BipartiteGraph, s: usize, t: usize) -> Count {
    biclique_one_orientation(bg.rows(), bg.ny(), s, t).into()
}
