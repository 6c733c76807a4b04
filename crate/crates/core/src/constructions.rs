//! The extremal graphs: `H(n,k,m)`, the clique / dominating lower-bound
//! graphs, the bipartite towers and `G*`.
//!
//! Cliques and dominating sets always sit on the lowest labels, so every
//! construction here is a shifted graph verbatim.

use crate::error::{Error, Result};
use crate::formulas::{ceil_half_km1, ceil_half_kp1};
use crate::graph::{complete_graph, disjoint_union, empty_graph, join, BipartiteGraph, Graph};

/// `K_n` for any `n >= 0` (`K_0` is the empty graph on no vertices).
fn clique(n: usize) -> Graph {
    if n == 0 {
        empty_graph(0)
    } else {
        complete_graph(n).expect("n >= 1")
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "graph representation",
            n,
            cap: crate::graph::MAX_VERTICES,
        });
    }
    Ok(())
}

/// `H(n,k,m)`: `A = [m]` a clique, `C = [k-m] ⊆ A`, and every vertex of
/// `B = [n] \ A` joined to all of `C`.
pub fn build_h(n: usize, k: usize, m: usize) -> Result<Graph> {
    let lo = ceil_half_kp1(k as u64) as usize;
    if !(lo <= m && m <= k && k <= n) {
        return Err(Error::invalid(format!(
            "H(n,k,m) needs ceil((k+1)/2) <= m <= k <= n, got n={n}, k={k}, m={m}"
        )));
    }
    check_n(n)?;
    let mut g = Graph::empty(n);
    for u in 1..=m {
        for v in u + 1..=m {
            g.add_edge(u, v)?;
        }
    }
    for c in 1..=k - m {
        for b in m + 1..=n {
            g.add_edge(c, b)?;
        }
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnrestrictedVariant {
    /// `K_k ∪ E_{n-k}`
    Clique,
    /// `K_{(k-1)/2} ∨ E_{n-(k-1)/2}` for odd `k`,
    /// `K_{k/2-1} ∨ (K_2 ∪ E_{n-k/2-1})` for even `k`.
    Dominating,
}

/// Lower-bound constructions for the `L_{n,k}`-free problems, `1 <= k <= n-1`.
pub fn build_extremal_unrestricted(
    n: usize,
    k: usize,
    variant: UnrestrictedVariant,
) -> Result<Graph> {
    if k == 0 || k >= n {
        return Err(Error::invalid(format!(
            "construction needs 1 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    check_n(n)?;
    Ok(match variant {
        UnrestrictedVariant::Clique => disjoint_union(&clique(k), &empty_graph(n - k)),
        UnrestrictedVariant::Dominating if k % 2 == 1 => {
            let h = (k - 1) / 2;
            join(&clique(h), &empty_graph(n - h))
        }
        UnrestrictedVariant::Dominating => {
            let h = k / 2 - 1;
            join(
                &clique(h),
                &disjoint_union(&clique(2), &empty_graph(n - k / 2 - 1)),
            )
        }
    })
}

/// Lower-bound constructions for the `M_{k+1}`-free problems, `n >= 2k+1`:
/// `K_{2k+1} ∪ E_{n-2k-1}` ([`UnrestrictedVariant::Clique`]) or
/// `K_k ∨ E_{n-k}` ([`UnrestrictedVariant::Dominating`]).
pub fn build_extremal_matching(n: usize, k: usize, variant: UnrestrictedVariant) -> Result<Graph> {
    if n < 2 * k + 1 {
        return Err(Error::invalid(format!(
            "matching construction needs n >= 2k+1, got n={n}, k={k}"
        )));
    }
    check_n(n)?;
    Ok(match variant {
        UnrestrictedVariant::Clique => {
            disjoint_union(&clique(2 * k + 1), &empty_graph(n - 2 * k - 1))
        }
        UnrestrictedVariant::Dominating => join(&clique(k), &empty_graph(n - k)),
    })
}

fn check_bip(n: usize) -> Result<()> {
    if 2 * n > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "graph representation",
            n: 2 * n,
            cap: crate::graph::MAX_VERTICES,
        });
    }
    Ok(())
}

/// Bipartite lower-bound graph with parts of size `n`.
///
/// Odd `k`: `x_1..x_{(k-1)/2}` joined to all of Y. Even `k`: `x_1..x_{k/2-1}`
/// joined to all of Y, plus `y_1` joined to the remaining `n-k/2+1` X-vertices.
pub fn build_extremal_bipartite(n: usize, k: usize) -> Result<BipartiteGraph> {
    if k == 0 || 2 * n < k + 1 || n < ceil_half_km1(k as u64) as usize {
        return Err(Error::invalid(format!(
            "bipartite construction needs k >= 1, 2n >= k+1, n >= ceil((k-1)/2); got n={n}, k={k}"
        )));
    }
    check_bip(n)?;
    let mut g = BipartiteGraph::empty(n, n);
    let full = if k % 2 == 1 { (k - 1) / 2 } else { k / 2 - 1 };
    for x in 1..=full {
        for y in 1..=n {
            g.add_edge(x, y)?;
        }
    }
    if k.is_multiple_of(2) {
        for x in full + 1..=n {
            g.add_edge(x, 1)?;
        }
    }
    Ok(g)
}

/// `K_{k,n} ∪ E_{n-k}` in parts of size `n`: the `M_{k+1}`-free bipartite
/// extremal graph, `n >= k`.
pub fn build_extremal_bipartite_matching(n: usize, k: usize) -> Result<BipartiteGraph> {
    if n < k {
        return Err(Error::invalid(format!(
            "bipartite matching construction needs n >= k, got n={n}, k={k}"
        )));
    }
    build_gstar(n, k, k)
}

/// `G*`: with `X1` the first `x` X-vertices and `Y1` the first `kceil - x`
/// Y-vertices, edges are `(X1 × Y) ∪ (X × Y1)`.
pub fn build_gstar(n: usize, kceil: usize, x: usize) -> Result<BipartiteGraph> {
    if !(x <= kceil && kceil <= n) {
        return Err(Error::invalid(format!(
            "G* needs 0 <= x <= kceil <= n, got n={n}, kceil={kceil}, x={x}"
        )));
    }
    check_bip(n)?;
    let mut g = BipartiteGraph::empty(n, n);
    for xi in 1..=n {
        for y in 1..=n {
            if xi <= x || y <= kceil - x {
                g.add_edge(xi, y)?;
            }
        }
    }
    Ok(g)
}
