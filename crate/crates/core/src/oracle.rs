//! Brute-force extremal search.
//!
//! The oracle maximizes pattern counts over every graph that avoids a linear
//! forest with `k` edges (or, for the matching family, a matching with `k+1`
//! edges). It never consults the closed forms; those are only attached to the
//! output records for comparison.
//!
//! Graphs are enumerated by a DFS over the edge slots in lexicographic order.
//! Each slot is first included, if the graph stays free, and then excluded.
//! Adding one edge raises `lf` (and `ν`) by at most one, so the search
//! carries an upper bound on the measure and only runs the exact DP once the
//! bound reaches the budget.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::constructions::build_h;
use crate::error::{Error, Result};
use crate::forest::{max_linear_forest, LfScratch};
use crate::formulas::{self, ceil_half_kp1};
use crate::graph::{BipartiteGraph, BitIter, Graph};
use crate::graph6::encode_graph6;
use crate::patterns::{biclique_count_raw, Count, PatternKind, PatternSpec};
use crate::shifting::is_shifted;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchMode {
    /// Every labelled graph.
    Full,
    /// Shifted graphs only. Valid for clique and clique-star counts on
    /// general hosts, since shifting preserves freeness and never lowers them.
    ShiftedOnly,
}

impl SearchMode {
    pub fn name(self) -> &'static str {
        match self {
            SearchMode::Full => "full",
            SearchMode::ShiftedOnly => "shifted-only",
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(SearchMode::Full),
            "shifted-only" | "shifted" => Ok(SearchMode::ShiftedOnly),
            _ => Err(Error::invalid(format!(
                "unknown search mode {s:?} (expected full or shifted-only)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HostKind {
    General,
    /// Bipartite with fixed, equal parts.
    Bipartite,
}

impl HostKind {
    pub fn name(self) -> &'static str {
        match self {
            HostKind::General => "general",
            HostKind::Bipartite => "bipartite",
        }
    }
}

impl fmt::Display for HostKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HostKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(HostKind::General),
            "bipartite" => Ok(HostKind::Bipartite),
            _ => Err(Error::invalid(format!("unknown host kind {s:?}"))),
        }
    }
}

/// The equality claims the oracle can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// `ex(n, K_2, L_{n,k})`
    Edges,
    /// `ex(n, K_s, L_{n,k})`
    Cliques,
    /// `ex(n, K*_{s,t}, L_{n,k})`
    CliqueStars,
    /// `ex_bip(n, K_{s,t}, L_{n,k})`
    Bipartite,
    /// `ex(n, K_2, M_{k+1})`
    EdgesMatching,
    /// `ex(n, K_s, M_{k+1})`
    CliquesMatching,
    /// `ex(n, K*_{s,t}, M_{k+1})`
    CliqueStarsMatching,
    /// `ex_bip(n, K_{s,t}, M_{k+1})`
    BipartiteMatching,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::Edges,
        TheoremId::Cliques,
        TheoremId::CliqueStars,
        TheoremId::Bipartite,
        TheoremId::EdgesMatching,
        TheoremId::CliquesMatching,
        TheoremId::CliqueStarsMatching,
        TheoremId::BipartiteMatching,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Edges => "edges",
            TheoremId::Cliques => "cliques",
            TheoremId::CliqueStars => "clique-stars",
            TheoremId::Bipartite => "bipartite",
            TheoremId::EdgesMatching => "edges-matching",
            TheoremId::CliquesMatching => "cliques-matching",
            TheoremId::CliqueStarsMatching => "clique-stars-matching",
            TheoremId::BipartiteMatching => "bipartite-matching",
        }
    }

    pub fn host(self) -> HostKind {
        match self {
            TheoremId::Bipartite | TheoremId::BipartiteMatching => HostKind::Bipartite,
            _ => HostKind::General,
        }
    }

    pub fn is_matching(self) -> bool {
        matches!(
            self,
            TheoremId::EdgesMatching
                | TheoremId::CliquesMatching
                | TheoremId::CliqueStarsMatching
                | TheoremId::BipartiteMatching
        )
    }

    pub fn pattern_kind(self) -> PatternKind {
        match self {
            TheoremId::Edges
            | TheoremId::Cliques
            | TheoremId::EdgesMatching
            | TheoremId::CliquesMatching => PatternKind::Clique,
            TheoremId::CliqueStars | TheoremId::CliqueStarsMatching => PatternKind::CliqueStar,
            TheoremId::Bipartite | TheoremId::BipartiteMatching => PatternKind::Biclique,
        }
    }

    /// The closed-form value claimed for this tuple.
    pub fn formula(self, n: usize, k: usize, pattern: &PatternSpec) -> Result<Count> {
        let (n, k) = (n as u64, k as u64);
        let (s, t) = (pattern.s() as u64, pattern.t() as u64);
        if pattern.kind() != self.pattern_kind() {
            return Err(Error::invalid(format!(
                "theorem {} is about {} patterns, got {pattern}",
                self.name(),
                self.pattern_kind().name()
            )));
        }
        match self {
            TheoremId::Edges if s == 2 => formulas::ex_edges_linforest(n, k),
            TheoremId::EdgesMatching if s == 2 => formulas::ex_edges_matching(n, k),
            TheoremId::Edges | TheoremId::EdgesMatching => {
                Err(Error::invalid("edge theorems count K_2 only"))
            }
            TheoremId::Cliques => formulas::ex_cliques_linforest(n, k, s),
            TheoremId::CliqueStars => formulas::ex_cliquestar_linforest(n, k, s, t),
            TheoremId::Bipartite => formulas::ex_bip_biclique_linforest(n, k, s, t),
            TheoremId::CliquesMatching => formulas::ex_cliques_matching(n, k, s),
            TheoremId::CliqueStarsMatching => formulas::ex_cliquestar_matching(n, k, s, t),
            TheoremId::BipartiteMatching => formulas::ex_bip_biclique_matching(n, k, s, t),
        }
    }

    /// Largest `k` for which the claim is stated at order (or part size) `n`,
    /// and the smallest.
    pub fn k_bounds(self, n: usize) -> (usize, usize) {
        match self {
            TheoremId::Edges | TheoremId::Cliques | TheoremId::CliqueStars => {
                (1, n.saturating_sub(1))
            }
            TheoremId::Bipartite => (2, (2 * n).saturating_sub(1)),
            TheoremId::EdgesMatching
            | TheoremId::CliquesMatching
            | TheoremId::CliqueStarsMatching => (1, n.saturating_sub(1) / 2),
            TheoremId::BipartiteMatching => (1, n),
        }
    }

    fn budget(self, k: usize) -> Budget {
        if self.is_matching() {
            Budget::Matching(k)
        } else {
            Budget::LinearForest(k)
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = TheoremId::ALL.iter().map(|t| t.name()).collect();
                Error::invalid(format!(
                    "unknown theorem {s:?} (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

/// One oracle result next to the value the matching closed form claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalRecord {
    pub theorem: TheoremId,
    pub n: usize,
    pub k: usize,
    pub pattern: PatternSpec,
    pub host: HostKind,
    pub mode: SearchMode,
    /// `None` when no closed form is stated for the tuple.
    pub formula: Option<Count>,
    pub oracle: Count,
    /// A free graph attaining `oracle`. Bipartite witnesses are the
    /// `2n`-vertex graph with X on `1..=nx` and Y after it.
    pub witness: Graph,
    pub parts: Option<(usize, usize)>,
    pub millis: u64,
}

impl ExtremalRecord {
    pub fn matches(&self) -> bool {
        self.formula.as_ref() == Some(&self.oracle)
    }

    pub fn witness_g6(&self) -> String {
        encode_graph6(&self.witness)
    }

    /// The witness in part form, for bipartite records.
    pub fn witness_bipartite(&self) -> Option<BipartiteGraph> {
        let (nx, ny) = self.parts?;
        let rows: Vec<u64> = self.witness.rows()[..nx].iter().map(|r| r >> nx).collect();
        Some(BipartiteGraph::from_rows(ny, &rows))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest order searched exhaustively over all labelled graphs.
    pub full_cap: usize,
    /// Largest order searched over shifted graphs.
    pub shifted_cap: usize,
    /// Largest part size for bipartite hosts.
    pub bipartite_cap: usize,
    /// Number of leading slot decisions enumerated up front; each resulting
    /// prefix becomes one parallel task.
    pub split_depth: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            full_cap: 7,
            shifted_cap: 10,
            bipartite_cap: 5,
            split_depth: 12,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Budget {
    /// Free iff `lf <= k - 1`.
    LinearForest(usize),
    /// Free iff `ν <= k`.
    Matching(usize),
}

impl Budget {
    fn limit(self) -> usize {
        match self {
            Budget::LinearForest(k) => k - 1,
            Budget::Matching(k) => k,
        }
    }

    fn measure(self, rows: &[u64], scratch: &mut LfScratch) -> usize {
        match self {
            Budget::LinearForest(_) => scratch.lf(rows),
            Budget::Matching(_) => matching_number_rows(rows, crate::graph::low_mask(rows.len())),
        }
    }
}

/// Maximum matching by exhaustive branching on the lowest free vertex.
fn matching_number_rows(rows: &[u64], avail: u64) -> usize {
    if avail == 0 {
        return 0;
    }
    let v = avail.trailing_zeros() as usize;
    let rest = avail & !(1 << v);
    let mut best = matching_number_rows(rows, rest);
    for w in BitIter(rows[v] & rest) {
        best = best.max(1 + matching_number_rows(rows, rest & !(1 << w)));
    }
    best
}

/// `ν(G)` by brute force over all matchings. Exponential; meant for small
/// graphs and as an independent check of the bipartite routine.
pub fn general_matching_number(g: &Graph) -> usize {
    matching_number_rows(g.rows(), crate::graph::low_mask(g.n()))
}

enum Objective {
    General(Vec<PatternSpec>),
    Bipartite {
        nx: usize,
        ny: usize,
        sizes: Vec<(usize, usize)>,
    },
}

impl Objective {
    fn len(&self) -> usize {
        match self {
            Objective::General(p) => p.len(),
            Objective::Bipartite { sizes, .. } => sizes.len(),
        }
    }

    fn eval(&self, rows: &[u64], out: &mut [u128]) {
        match self {
            Objective::General(patterns) => {
                for (o, p) in out.iter_mut().zip(patterns) {
                    *o = p.count_rows(rows).expect("validated pattern");
                }
            }
            Objective::Bipartite { nx, ny, sizes } => {
                let bip: Vec<u64> = rows[..*nx].iter().map(|r| r >> nx).collect();
                for (o, &(s, t)) in out.iter_mut().zip(sizes) {
                    *o = biclique_count_raw(&bip, *ny, s, t);
                }
            }
        }
    }
}

struct Space {
    n: usize,
    slots: Vec<(usize, usize)>,
    shifted: bool,
    budget: Budget,
    objective: Objective,
}

/// Per-objective maxima, first attained in DFS order.
struct Best {
    values: Vec<Option<(u128, Vec<u64>)>>,
    scratch_counts: Vec<u128>,
}

impl Best {
    fn new(len: usize) -> Self {
        Best {
            values: vec![None; len],
            scratch_counts: vec![0; len],
        }
    }

    /// Folds `other` in; `other` is later in DFS order, so it wins only on
    /// strict improvement.
    fn merge(&mut self, other: Best) {
        for (mine, theirs) in self.values.iter_mut().zip(other.values) {
            if let Some((v, w)) = theirs {
                if mine.as_ref().is_none_or(|(m, _)| v > *m) {
                    *mine = Some((v, w));
                }
            }
        }
    }
}

impl Space {
    fn limit(&self) -> usize {
        self.budget.limit()
    }

    /// Adds slot `d` if allowed; returns the new bound on the measure.
    fn include(
        &self,
        d: usize,
        rows: &mut [u64],
        ub: usize,
        scratch: &mut LfScratch,
    ) -> Option<usize> {
        let (u, v) = self.slots[d];
        if self.shifted {
            let left = u == 0 || rows[u - 1] >> v & 1 == 1;
            let down = v == u + 1 || rows[u] >> (v - 1) & 1 == 1;
            if !(left && down) {
                return None;
            }
        }
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        if ub < self.limit() {
            return Some(ub + 1);
        }
        let m = self.budget.measure(rows, scratch);
        if m <= self.limit() {
            Some(m)
        } else {
            rows[u] &= !(1 << v);
            rows[v] &= !(1 << u);
            None
        }
    }

    fn exclude_after(&self, d: usize, rows: &mut [u64]) {
        let (u, v) = self.slots[d];
        rows[u] &= !(1 << v);
        rows[v] &= !(1 << u);
    }

    fn prefixes(
        &self,
        d: usize,
        stop: usize,
        rows: &mut Vec<u64>,
        ub: usize,
        scratch: &mut LfScratch,
        out: &mut Vec<(Vec<u64>, usize)>,
    ) {
        if d == stop {
            out.push((rows.clone(), ub));
            return;
        }
        if let Some(nub) = self.include(d, rows, ub, scratch) {
            self.prefixes(d + 1, stop, rows, nub, scratch, out);
            self.exclude_after(d, rows);
        }
        self.prefixes(d + 1, stop, rows, ub, scratch, out);
    }

    fn search(
        &self,
        d: usize,
        rows: &mut [u64],
        ub: usize,
        scratch: &mut LfScratch,
        best: &mut Best,
    ) {
        if d == self.slots.len() {
            let Best {
                values,
                scratch_counts,
            } = best;
            self.objective.eval(rows, scratch_counts);
            for (slot, &c) in values.iter_mut().zip(scratch_counts.iter()) {
                if slot.as_ref().is_none_or(|(m, _)| c > *m) {
                    *slot = Some((c, rows.to_vec()));
                }
            }
            return;
        }
        if let Some(nub) = self.include(d, rows, ub, scratch) {
            self.search(d + 1, rows, nub, scratch, best);
            self.exclude_after(d, rows);
        }
        self.search(d + 1, rows, ub, scratch, best);
    }

    fn run(&self, split_depth: usize, parallel: bool) -> Vec<(u128, Vec<u64>)> {
        let mut scratch = LfScratch::default();
        let mut rows = vec![0u64; self.n];
        let best = if parallel {
            let stop = split_depth.min(self.slots.len());
            let mut tasks = Vec::new();
            self.prefixes(0, stop, &mut rows, 0, &mut scratch, &mut tasks);
            let parts: Vec<Best> = tasks
                .into_par_iter()
                .map_init(LfScratch::default, |scratch, (mut rows, ub)| {
                    let mut best = Best::new(self.objective.len());
                    self.search(stop, &mut rows, ub, scratch, &mut best);
                    best
                })
                .collect();
            let mut acc = Best::new(self.objective.len());
            for p in parts {
                acc.merge(p);
            }
            acc
        } else {
            let mut best = Best::new(self.objective.len());
            self.search(0, &mut rows, 0, &mut scratch, &mut best);
            best
        };
        best.values
            .into_iter()
            .map(|v| v.expect("the empty graph is always a leaf"))
            .collect()
    }
}

fn general_slots(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::TooLarge { what, n, cap });
    }
    Ok(())
}

fn millis_since(start: Instant) -> u64 {
    start.elapsed().as_millis().try_into().unwrap_or(u64::MAX)
}

/// Raw maxima and witness rows over general hosts, one per pattern.
fn search_general(
    n: usize,
    budget: Budget,
    patterns: &[PatternSpec],
    mode: SearchMode,
    cfg: &OracleConfig,
) -> Result<Vec<(u128, Vec<u64>)>> {
    if let Some(p) = patterns.iter().find(|p| p.kind() == PatternKind::Biclique) {
        return Err(Error::Unsupported(format!(
            "{p} is counted on bipartite hosts only"
        )));
    }
    match mode {
        SearchMode::Full => check_cap("full extremal search", n, cfg.full_cap)?,
        SearchMode::ShiftedOnly => check_cap("shifted extremal search", n, cfg.shifted_cap)?,
    }
    let space = Space {
        n,
        slots: general_slots(n),
        shifted: mode == SearchMode::ShiftedOnly,
        budget,
        objective: Objective::General(patterns.to_vec()),
    };
    Ok(space.run(cfg.split_depth, mode == SearchMode::Full))
}

fn search_bipartite(
    n: usize,
    budget: Budget,
    sizes: &[(usize, usize)],
    cfg: &OracleConfig,
) -> Result<Vec<(u128, Vec<u64>)>> {
    check_cap("bipartite extremal search", n, cfg.bipartite_cap)?;
    if let Some(&(s, t)) = sizes.iter().find(|&&(s, t)| s == 0 || t == 0) {
        return Err(Error::invalid(format!(
            "biclique sizes must be positive, got ({s},{t})"
        )));
    }
    let slots = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, n + y)))
        .collect();
    let space = Space {
        n: 2 * n,
        slots,
        shifted: false,
        budget,
        objective: Objective::Bipartite {
            nx: n,
            ny: n,
            sizes: sizes.to_vec(),
        },
    };
    Ok(space.run(cfg.split_depth, true))
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::invalid(format!(
            "oracle needs 1 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    Ok(())
}

fn theorem_for(kind: PatternKind, matching: bool) -> TheoremId {
    match (kind, matching) {
        (PatternKind::Clique, false) => TheoremId::Cliques,
        (PatternKind::CliqueStar, false) => TheoremId::CliqueStars,
        (PatternKind::Biclique, false) => TheoremId::Bipartite,
        (PatternKind::Clique, true) => TheoremId::CliquesMatching,
        (PatternKind::CliqueStar, true) => TheoremId::CliqueStarsMatching,
        (PatternKind::Biclique, true) => TheoremId::BipartiteMatching,
    }
}

#[allow(clippy::too_many_arguments)]
fn general_records(
    theorem_of: impl Fn(&PatternSpec) -> TheoremId,
    n: usize,
    k: usize,
    budget: Budget,
    patterns: &[PatternSpec],
    mode: SearchMode,
    cfg: &OracleConfig,
) -> Result<Vec<ExtremalRecord>> {
    let start = Instant::now();
    let raw = search_general(n, budget, patterns, mode, cfg)?;
    let millis = millis_since(start);
    Ok(patterns
        .iter()
        .zip(raw)
        .map(|(p, (value, rows))| {
            let theorem = theorem_of(p);
            ExtremalRecord {
                theorem,
                n,
                k,
                pattern: *p,
                host: HostKind::General,
                mode,
                formula: theorem.formula(n, k, p).ok(),
                oracle: value.into(),
                witness: Graph::from_rows(&rows),
                parts: None,
                millis,
            }
        })
        .collect())
}

fn bipartite_records(
    theorem: TheoremId,
    n: usize,
    k: usize,
    sizes: &[(usize, usize)],
    cfg: &OracleConfig,
) -> Result<Vec<ExtremalRecord>> {
    let start = Instant::now();
    let raw = search_bipartite(n, theorem.budget(k), sizes, cfg)?;
    let millis = millis_since(start);
    sizes
        .iter()
        .zip(raw)
        .map(|(&(s, t), (value, rows))| {
            let pattern = PatternSpec::biclique(s, t)?;
            Ok(ExtremalRecord {
                theorem,
                n,
                k,
                pattern,
                host: HostKind::Bipartite,
                mode: SearchMode::Full,
                formula: theorem.formula(n, k, &pattern).ok(),
                oracle: value.into(),
                witness: Graph::from_rows(&rows),
                parts: Some((n, n)),
                millis,
            })
        })
        .collect()
}

/// Maximum count of `pattern` over `L_{n,k}`-free graphs on `n` vertices.
pub fn extremal_count(
    n: usize,
    k: usize,
    pattern: PatternSpec,
    mode: SearchMode,
    cfg: &OracleConfig,
) -> Result<ExtremalRecord> {
    Ok(extremal_count_many(n, k, &[pattern], mode, cfg)?.remove(0))
}

/// [`extremal_count`] for several patterns sharing one enumeration.
pub fn extremal_count_many(
    n: usize,
    k: usize,
    patterns: &[PatternSpec],
    mode: SearchMode,
    cfg: &OracleConfig,
) -> Result<Vec<ExtremalRecord>> {
    check_k(n, k)?;
    general_records(
        |p| theorem_for(p.kind(), false),
        n,
        k,
        Budget::LinearForest(k),
        patterns,
        mode,
        cfg,
    )
}

/// Maximum count of `pattern` over graphs on `n` vertices with `ν <= k`
/// (full search).
pub fn extremal_count_matching(
    n: usize,
    k: usize,
    patterns: &[PatternSpec],
    cfg: &OracleConfig,
) -> Result<Vec<ExtremalRecord>> {
    general_records(
        |p| theorem_for(p.kind(), true),
        n,
        k,
        Budget::Matching(k),
        patterns,
        SearchMode::Full,
        cfg,
    )
}

/// Maximum `K_{s,t}` count over `L`-free bipartite graphs with parts of size
/// `n`, where `L` is the linear forests with `k` edges.
pub fn extremal_count_bipartite(
    n: usize,
    k: usize,
    s: usize,
    t: usize,
    cfg: &OracleConfig,
) -> Result<ExtremalRecord> {
    Ok(extremal_count_bipartite_many(n, k, &[(s, t)], cfg)?.remove(0))
}

pub fn extremal_count_bipartite_many(
    n: usize,
    k: usize,
    sizes: &[(usize, usize)],
    cfg: &OracleConfig,
) -> Result<Vec<ExtremalRecord>> {
    if k == 0 || n == 0 {
        return Err(Error::invalid(format!(
            "bipartite oracle needs n, k >= 1, got n={n}, k={k}"
        )));
    }
    bipartite_records(TheoremId::Bipartite, n, k, sizes, cfg)
}

/// Bipartite maxima under `ν <= k`.
pub fn extremal_count_bipartite_matching(
    n: usize,
    k: usize,
    sizes: &[(usize, usize)],
    cfg: &OracleConfig,
) -> Result<Vec<ExtremalRecord>> {
    if n == 0 {
        return Err(Error::invalid("bipartite oracle needs n >= 1"));
    }
    bipartite_records(TheoremId::BipartiteMatching, n, k, sizes, cfg)
}

/// Parameter ranges for [`verify_theorem`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRanges {
    pub n_min: usize,
    pub n_max: usize,
    /// Inclusive `k` range; `None` means every `k` the claim covers.
    pub k_range: Option<(usize, usize)>,
    pub s_values: Vec<usize>,
    /// Ignored for clique theorems.
    pub t_values: Vec<usize>,
}

impl VerifyRanges {
    pub fn up_to(n_max: usize) -> Self {
        VerifyRanges {
            n_min: 1,
            n_max,
            k_range: None,
            s_values: vec![2],
            t_values: vec![2],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleError {
    pub n: usize,
    pub k: usize,
    pub error: Error,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub theorem: TheoremId,
    pub mode: SearchMode,
    pub records: Vec<ExtremalRecord>,
    pub errors: Vec<TupleError>,
}

impl Verification {
    /// All tuples ran and every one matched. Vacuously true when empty.
    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.records.iter().all(ExtremalRecord::matches)
    }
}

/// The pattern list a theorem sweeps for the given `s`/`t` values.
pub fn theorem_patterns(theorem: TheoremId, ranges: &VerifyRanges) -> Result<Vec<PatternSpec>> {
    let mut out = Vec::new();
    match theorem.pattern_kind() {
        PatternKind::Clique if matches!(theorem, TheoremId::Edges | TheoremId::EdgesMatching) => {
            out.push(PatternSpec::clique(2)?);
        }
        PatternKind::Clique => {
            for &s in &ranges.s_values {
                if s < 2 {
                    return Err(Error::invalid(format!("{theorem} needs s >= 2, got {s}")));
                }
                out.push(PatternSpec::clique(s)?);
            }
        }
        PatternKind::CliqueStar => {
            for &s in &ranges.s_values {
                for &t in &ranges.t_values {
                    if s < 1 || t < 2 {
                        return Err(Error::invalid(format!(
                            "{theorem} needs s >= 1, t >= 2, got ({s},{t})"
                        )));
                    }
                    out.push(PatternSpec::clique_star(s, t)?);
                }
            }
        }
        PatternKind::Biclique => {
            let lo = if theorem.is_matching() { 2 } else { 1 };
            for &s in &ranges.s_values {
                for &t in &ranges.t_values {
                    if s < lo || t < lo {
                        return Err(Error::invalid(format!(
                            "{theorem} needs s, t >= {lo}, got ({s},{t})"
                        )));
                    }
                    out.push(PatternSpec::biclique(s, t)?);
                }
            }
        }
    }
    Ok(out)
}

/// Runs the oracle on every in-range tuple and attaches the closed form.
///
/// Configuration problems (bad `s`/`t`, a `k` range the claim does not cover,
/// shifted search on bipartite hosts) are returned as errors. Per-tuple
/// failures such as cap violations are collected and the sweep continues.
pub fn verify_theorem(
    theorem: TheoremId,
    ranges: &VerifyRanges,
    mode: SearchMode,
    cfg: &OracleConfig,
) -> Result<Verification> {
    if theorem.host() == HostKind::Bipartite && mode == SearchMode::ShiftedOnly {
        return Err(Error::Unsupported(
            "shifted-only search is not justified for bipartite hosts".into(),
        ));
    }
    let patterns = theorem_patterns(theorem, ranges)?;
    if let Some((lo, hi)) = ranges.k_range {
        let (min_k, max_k) = theorem.k_bounds(ranges.n_max);
        if lo > hi || lo < min_k || hi > max_k {
            return Err(Error::invalid(format!(
                "k range {lo}..={hi} is outside {min_k}..={max_k}, the range {theorem} covers at n = {}",
                ranges.n_max
            )));
        }
    }
    let mut out = Verification {
        theorem,
        mode,
        records: Vec::new(),
        errors: Vec::new(),
    };
    for n in ranges.n_min.max(1)..=ranges.n_max {
        let (mut lo, mut hi) = theorem.k_bounds(n);
        if let Some((a, b)) = ranges.k_range {
            lo = lo.max(a);
            hi = hi.min(b);
        }
        for k in lo..=hi {
            let got = match theorem.host() {
                HostKind::General => {
                    general_records(|_| theorem, n, k, theorem.budget(k), &patterns, mode, cfg)
                }
                HostKind::Bipartite => {
                    let sizes: Vec<_> = patterns.iter().map(|p| (p.s(), p.t())).collect();
                    bipartite_records(theorem, n, k, &sizes, cfg)
                }
            };
            match got {
                Ok(records) => out.records.extend(records),
                Err(error) => out.errors.push(TupleError { n, k, error }),
            }
        }
    }
    Ok(out)
}

/// For a shifted `g` with `lf(g) = k - 1`, the least `m` in
/// `ceil((k+1)/2)..=k` with `E(g) ⊆ E(H(n,k,m))`, or `None` if there is none.
pub fn check_shifted_subgraph_of_h(g: &Graph, k: usize) -> Result<Option<usize>> {
    if !is_shifted(g) {
        return Err(Error::invalid("graph is not shifted"));
    }
    let lf = max_linear_forest(g)?.lf;
    if k == 0 || lf != k - 1 {
        return Err(Error::invalid(format!(
            "need lf(g) = k - 1, got lf = {lf}, k = {k}"
        )));
    }
    let lo = ceil_half_kp1(k as u64) as usize;
    for m in lo..=k {
        if g.is_subgraph_of(&build_h(g.n(), k, m)?) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn shifted_rec(slots: &[(usize, usize)], d: usize, rows: &mut [u64], out: &mut Vec<Graph>) {
    if d == slots.len() {
        out.push(Graph::from_rows(rows));
        return;
    }
    let (u, v) = slots[d];
    let left = u == 0 || rows[u - 1] >> v & 1 == 1;
    let down = v == u + 1 || rows[u] >> (v - 1) & 1 == 1;
    if left && down {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        shifted_rec(slots, d + 1, rows, out);
        rows[u] &= !(1 << v);
        rows[v] &= !(1 << u);
    }
    shifted_rec(slots, d + 1, rows, out);
}

/// Every shifted graph on `[n]` (there are `2^(n-1)` for `n >= 1`).
pub fn enumerate_shifted_graphs(n: usize) -> Result<Vec<Graph>> {
    check_cap("shifted graph enumeration", n, 24)?;
    let mut out = Vec::new();
    shifted_rec(&general_slots(n), 0, &mut vec![0; n], &mut out);
    Ok(out)
}
