//! Exact evaluators for the closed forms: the matching-family results, the
//! linear-forest results, and the intermediate counting functions used to
//! derive them.
//!
//! Binomials follow the zero convention `C(a, b) = 0` whenever `b < 0`,
//! `a < 0` or `b > a`, which makes every displayed expression total. Each
//! evaluator enforces the parameter range its closed form is asserted on and
//! returns [`Error::OutOfRange`] outside it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::patterns::Count;

/// `C(a, b)` with the zero convention.
pub fn binom(a: i64, b: i64) -> Count {
    if b < 0 || a < 0 || b > a {
        return Count::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= (a - i) as u64;
        acc /= (i + 1) as u64;
    }
    acc
}

fn c(a: u64, b: u64) -> Count {
    binom(a as i64, b as i64)
}

/// `C(a, b)` where `a` may have gone negative through subtraction.
fn cs(a: i64, b: i64) -> Count {
    binom(a, b)
}

fn big(v: u64) -> Count {
    Count::from(v)
}

/// `⌊(k-1)/2⌋`
pub fn floor_half_km1(k: u64) -> u64 {
    k.saturating_sub(1) / 2
}

/// `⌈(k+1)/2⌉`
pub fn ceil_half_kp1(k: u64) -> u64 {
    (k + 2) / 2
}

/// `⌈(k-1)/2⌉`
pub fn ceil_half_km1(k: u64) -> u64 {
    k / 2
}

fn out_of_range(formula: &'static str, params: String, reason: &str) -> Error {
    Error::OutOfRange {
        formula,
        params,
        reason: reason.to_string(),
    }
}

macro_rules! require {
    ($cond:expr, $name:expr, $params:expr) => {
        if !($cond) {
            return Err(out_of_range($name, $params, stringify!($cond)));
        }
    };
}

/// A value together with the label of the branch that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub value: Count,
    pub branch: &'static str,
}

fn max_of(a: (&'static str, Count), b: (&'static str, Count)) -> Evaluation {
    if b.1 > a.1 {
        Evaluation {
            value: b.1,
            branch: b.0,
        }
    } else {
        Evaluation {
            value: a.1,
            branch: a.0,
        }
    }
}

fn single(branch: &'static str, value: Count) -> Evaluation {
    Evaluation { value, branch }
}

// ---- matching family ------------------------------------------------------

pub fn ex_edges_matching_eval(n: u64, k: u64) -> Result<Evaluation> {
    require!(n > 2 * k, "ex-edges-matching", format!("n={n}, k={k}"));
    Ok(max_of(
        ("K_{2k+1}", c(2 * k + 1, 2)),
        ("K_k v E_{n-k}", c(k, 2) + big(k * (n - k))),
    ))
}

/// Maximum edges in an `M_{k+1}`-free graph on `n >= 2k+1` vertices.
pub fn ex_edges_matching(n: u64, k: u64) -> Result<Count> {
    ex_edges_matching_eval(n, k).map(|e| e.value)
}

pub fn ex_cliques_matching_eval(n: u64, k: u64, s: u64) -> Result<Evaluation> {
    let p = format!("n={n}, k={k}, s={s}");
    require!(s >= 2, "ex-cliques-matching", p.clone());
    require!(n > 2 * k, "ex-cliques-matching", p);
    Ok(max_of(
        ("K_{2k+1}", c(2 * k + 1, s)),
        ("K_k v E_{n-k}", c(k, s) + big(n - k) * c(k, s - 1)),
    ))
}

pub fn ex_cliques_matching(n: u64, k: u64, s: u64) -> Result<Count> {
    ex_cliques_matching_eval(n, k, s).map(|e| e.value)
}

pub fn ex_cliquestar_matching_eval(n: u64, k: u64, s: u64, t: u64) -> Result<Evaluation> {
    let p = format!("n={n}, k={k}, s={s}, t={t}");
    require!(s >= 1 && t >= 2, "ex-cliquestar-matching", p.clone());
    require!(n > 2 * k, "ex-cliquestar-matching", p);
    Ok(max_of(
        ("K_{2k+1}", c(2 * k + 1, s + t) * c(s + t, t)),
        (
            "K_k v E_{n-k}",
            cs(k as i64, s as i64) * cs(n as i64 - s as i64, t as i64)
                + big(n - k) * c(k, s + t - 1) * c(s + t - 1, t),
        ),
    ))
}

pub fn ex_cliquestar_matching(n: u64, k: u64, s: u64, t: u64) -> Result<Count> {
    ex_cliquestar_matching_eval(n, k, s, t).map(|e| e.value)
}

pub fn ex_bip_biclique_matching_eval(n: u64, k: u64, s: u64, t: u64) -> Result<Evaluation> {
    let p = format!("n={n}, k={k}, s={s}, t={t}");
    require!(s >= 2 && t >= 2, "ex-bip-biclique-matching", p.clone());
    require!(n >= k, "ex-bip-biclique-matching", p);
    Ok(if s == t {
        single("s=t", c(k, s) * c(n, s))
    } else {
        single("s!=t", c(k, s) * c(n, t) + c(k, t) * c(n, s))
    })
}

pub fn ex_bip_biclique_matching(n: u64, k: u64, s: u64, t: u64) -> Result<Count> {
    ex_bip_biclique_matching_eval(n, k, s, t).map(|e| e.value)
}

// ---- linear forests -------------------------------------------------------

pub fn ex_edges_linforest_eval(n: u64, k: u64) -> Result<Evaluation> {
    require!(
        k >= 1 && k < n,
        "ex-edges-linforest",
        format!("n={n}, k={k}")
    );
    let corr = u64::from(k.is_multiple_of(2));
    let dominating = c(n, 2) - c(n - floor_half_km1(k), 2) + big(corr);
    Ok(max_of(("K_k", c(k, 2)), ("dominating", dominating)))
}

/// Maximum edges of an `L_{n,k}`-free graph, `1 <= k <= n-1`.
pub fn ex_edges_linforest(n: u64, k: u64) -> Result<Count> {
    ex_edges_linforest_eval(n, k).map(|e| e.value)
}

pub fn ex_cliques_linforest_eval(n: u64, k: u64, s: u64) -> Result<Evaluation> {
    let p = format!("n={n}, k={k}, s={s}");
    require!(s >= 2, "ex-cliques-linforest", p.clone());
    require!(k >= 1 && n > k, "ex-cliques-linforest", p);
    let (lo, hi) = (floor_half_km1(k), ceil_half_kp1(k));
    Ok(max_of(
        ("K_k", c(k, s)),
        ("dominating", c(hi, s) + big(n - hi) * c(lo, s - 1)),
    ))
}

pub fn ex_cliques_linforest(n: u64, k: u64, s: u64) -> Result<Count> {
    ex_cliques_linforest_eval(n, k, s).map(|e| e.value)
}

pub fn ex_cliquestar_linforest_eval(n: u64, k: u64, s: u64, t: u64) -> Result<Evaluation> {
    let p = format!("n={n}, k={k}, s={s}, t={t}");
    require!(s >= 1 && t >= 2, "ex-cliquestar-linforest", p.clone());
    require!(k >= 1 && n > k, "ex-cliquestar-linforest", p);
    let (lo, hi) = (floor_half_km1(k) as i64, ceil_half_kp1(k) as i64);
    let (n_, s_, t_) = (n as i64, s as i64, t as i64);
    let dominating = cs(lo, s_) * cs(n_ - s_, t_)
        + big(n - hi as u64) * cs(lo, s_ - 1) * cs(lo - s_ + 1, t_)
        + (cs(hi, s_) - cs(lo, s_)) * cs(hi - s_, t_);
    Ok(max_of(
        ("K_k", c(k, s + t) * c(s + t, t)),
        ("dominating", dominating),
    ))
}

pub fn ex_cliquestar_linforest(n: u64, k: u64, s: u64, t: u64) -> Result<Count> {
    ex_cliquestar_linforest_eval(n, k, s, t).map(|e| e.value)
}

pub fn ex_bip_biclique_linforest_eval(n: u64, k: u64, s: u64, t: u64) -> Result<Evaluation> {
    let p = format!("n={n}, k={k}, s={s}, t={t}");
    require!(s >= 1 && t >= 1, "ex-bip-biclique-linforest", p.clone());
    require!(k >= 2, "ex-bip-biclique-linforest", p.clone());
    require!(
        n >= ceil_half_km1(k),
        "ex-bip-biclique-linforest",
        p.clone()
    );
    require!(2 * n > k, "ex-bip-biclique-linforest", p);
    if k % 2 == 1 {
        let h = (k - 1) / 2;
        return Ok(if s == t {
            single("odd k, s=t", c(h, s) * c(n, s))
        } else {
            single("odd k, s!=t", c(h, s) * c(n, t) + c(h, t) * c(n, s))
        });
    }
    let half = k / 2;
    let h = half - 1;
    Ok(match (s, t) {
        (1, 1) => single("even k, s=t=1", big(half * (n - 1) + 1)),
        _ if s == t => single("even k, s=t>=2", c(h, s) * c(n, s)),
        (1, _) => single(
            "even k, s=1, t>=2",
            big(half) * c(n, t) + big(n - 1) * c(h, t),
        ),
        (_, 1) => single(
            "even k, s>=2, t=1",
            big(half) * c(n, s) + big(n - 1) * c(h, s),
        ),
        _ => single("even k, s,t>=2", c(h, t) * c(n, s) + c(h, s) * c(n, t)),
    })
}

pub fn ex_bip_biclique_linforest(n: u64, k: u64, s: u64, t: u64) -> Result<Count> {
    ex_bip_biclique_linforest_eval(n, k, s, t).map(|e| e.value)
}

// ---- intermediate counts --------------------------------------------------

fn check_h(name: &'static str, n: u64, k: u64, m: u64) -> Result<()> {
    let p = format!("n={n}, k={k}, m={m}");
    require!(ceil_half_kp1(k) <= m, name, p.clone());
    require!(m <= k && k <= n, name, p);
    Ok(())
}

/// `f(m) = C(m,s) + (n-m) C(k-m, s-1)`, the clique count of `H(n,k,m)`.
pub fn count_h_cliques_closed(n: u64, k: u64, m: u64, s: u64) -> Result<Count> {
    check_h("h-cliques", n, k, m)?;
    require!(s >= 1, "h-cliques", format!("s={s}"));
    Ok(c(m, s) + big(n - m) * c(k - m, s - 1))
}

/// The three class sizes `(f1, f2, f3)` of clique-star copies in `H(n,k,m)`:
/// clique side inside `C`, clique side meeting `B`, clique side meeting `A \ C`.
pub fn h_cliquestar_classes(n: u64, k: u64, m: u64, s: u64, t: u64) -> Result<[Count; 3]> {
    check_h("h-cliquestars", n, k, m)?;
    require!(s >= 1 && t >= 1, "h-cliquestars", format!("s={s}, t={t}"));
    let (n_, k_, m_, s_, t_) = (n as i64, k as i64, m as i64, s as i64, t as i64);
    let f1 = cs(k_ - m_, s_) * cs(n_ - s_, t_);
    let f2 = big(n - m) * cs(k_ - m_, s_ - 1) * cs(k_ - m_ - s_ + 1, t_);
    let f3 = (cs(m_, s_) - cs(k_ - m_, s_)) * cs(m_ - s_, t_);
    Ok([f1, f2, f3])
}

/// `f1 + f2 + f3`, the clique-star count of `H(n,k,m)`.
pub fn count_h_cliquestars_closed(n: u64, k: u64, m: u64, s: u64, t: u64) -> Result<Count> {
    let [f1, f2, f3] = h_cliquestar_classes(n, k, m, s, t)?;
    Ok(f1 + f2 + f3)
}

/// `f_{s,t}(x) = C(x,s)C(n,t) + C(n,s)C(K-x,t) - C(x,s)C(K-x,t)` with
/// `K = kceil`: oriented biclique count of the two-tower graph `G*`.
pub fn f_bip_closed(n: u64, kceil: u64, x: u64, s: u64, t: u64) -> Result<Count> {
    let p = format!("n={n}, kceil={kceil}, x={x}, s={s}, t={t}");
    require!(x <= kceil && kceil <= n, "f-bip", p.clone());
    require!(s >= 1 && t >= 1, "f-bip", p);
    let rest = kceil - x;
    Ok(c(x, s) * c(n, t) + c(n, s) * c(rest, t) - c(x, s) * c(rest, t))
}

// ---- named dispatch (CLI) -------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    ExEdgesMatching,
    ExCliquesMatching,
    ExCliquestarMatching,
    ExBipBicliqueMatching,
    ExEdgesLinforest,
    ExCliquesLinforest,
    ExCliquestarLinforest,
    ExBipBicliqueLinforest,
    HCliques,
    HCliquestars,
    FBip,
}

impl Formula {
    pub const ALL: [Formula; 11] = [
        Formula::ExEdgesMatching,
        Formula::ExCliquesMatching,
        Formula::ExCliquestarMatching,
        Formula::ExBipBicliqueMatching,
        Formula::ExEdgesLinforest,
        Formula::ExCliquesLinforest,
        Formula::ExCliquestarLinforest,
        Formula::ExBipBicliqueLinforest,
        Formula::HCliques,
        Formula::HCliquestars,
        Formula::FBip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::ExEdgesMatching => "ex-edges-matching",
            Formula::ExCliquesMatching => "ex-cliques-matching",
            Formula::ExCliquestarMatching => "ex-cliquestar-matching",
            Formula::ExBipBicliqueMatching => "ex-bip-biclique-matching",
            Formula::ExEdgesLinforest => "ex-edges-linforest",
            Formula::ExCliquesLinforest => "ex-cliques-linforest",
            Formula::ExCliquestarLinforest => "ex-cliquestar-linforest",
            Formula::ExBipBicliqueLinforest => "ex-bip-biclique-linforest",
            Formula::HCliques => "h-cliques",
            Formula::HCliquestars => "h-cliquestars",
            Formula::FBip => "f-bip",
        }
    }

    /// Positional parameter names.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Formula::ExEdgesMatching | Formula::ExEdgesLinforest => &["n", "k"],
            Formula::ExCliquesMatching | Formula::ExCliquesLinforest => &["n", "k", "s"],
            Formula::ExCliquestarMatching
            | Formula::ExBipBicliqueMatching
            | Formula::ExCliquestarLinforest
            | Formula::ExBipBicliqueLinforest => &["n", "k", "s", "t"],
            Formula::HCliques => &["n", "k", "m", "s"],
            Formula::HCliquestars => &["n", "k", "m", "s", "t"],
            Formula::FBip => &["n", "kceil", "x", "s", "t"],
        }
    }

    pub fn evaluate(self, args: &[u64]) -> Result<Evaluation> {
        if args.len() != self.params().len() {
            return Err(Error::invalid(format!(
                "{} takes {} arguments ({}), got {}",
                self.name(),
                self.params().len(),
                self.params().join(" "),
                args.len()
            )));
        }
        let a = args;
        match self {
            Formula::ExEdgesMatching => ex_edges_matching_eval(a[0], a[1]),
            Formula::ExCliquesMatching => ex_cliques_matching_eval(a[0], a[1], a[2]),
            Formula::ExCliquestarMatching => ex_cliquestar_matching_eval(a[0], a[1], a[2], a[3]),
            Formula::ExBipBicliqueMatching => ex_bip_biclique_matching_eval(a[0], a[1], a[2], a[3]),
            Formula::ExEdgesLinforest => ex_edges_linforest_eval(a[0], a[1]),
            Formula::ExCliquesLinforest => ex_cliques_linforest_eval(a[0], a[1], a[2]),
            Formula::ExCliquestarLinforest => ex_cliquestar_linforest_eval(a[0], a[1], a[2], a[3]),
            Formula::ExBipBicliqueLinforest => {
                ex_bip_biclique_linforest_eval(a[0], a[1], a[2], a[3])
            }
            Formula::HCliques => {
                count_h_cliques_closed(a[0], a[1], a[2], a[3]).map(|v| single("f(m)", v))
            }
            Formula::HCliquestars => count_h_cliquestars_closed(a[0], a[1], a[2], a[3], a[4])
                .map(|v| single("f1+f2+f3", v)),
            Formula::FBip => {
                f_bip_closed(a[0], a[1], a[2], a[3], a[4]).map(|v| single("f_{s,t}(x)", v))
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Formula::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Formula::ALL.iter().map(|f| f.name()).collect();
                Error::invalid(format!(
                    "unknown formula {s:?}; one of {}",
                    names.join(", ")
                ))
            })
    }
}
