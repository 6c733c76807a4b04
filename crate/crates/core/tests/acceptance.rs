//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact (`TOLERANCE = 0`). A criterion listed in
//! `KNOWN_FAILING` still runs in full and still prints FAIL; the process exit
//! status only ignores it, and turns red if such a criterion starts passing.

use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use linforest::constructions::{
    build_extremal_bipartite, build_extremal_bipartite_matching, build_extremal_matching,
    build_extremal_unrestricted, build_gstar, build_h, UnrestrictedVariant,
};
use linforest::forest::{is_lnk_free, max_linear_forest};
use linforest::formulas::{
    ceil_half_km1, ceil_half_kp1, count_h_cliques_closed, count_h_cliquestars_closed,
    ex_bip_biclique_linforest_eval, ex_bip_biclique_matching_eval, ex_cliques_linforest,
    ex_cliques_linforest_eval, ex_cliques_matching_eval, ex_cliquestar_linforest_eval,
    ex_cliquestar_matching_eval, ex_edges_linforest, ex_edges_linforest_eval,
    ex_edges_matching_eval, f_bip_closed, Evaluation,
};
use linforest::oracle::{
    check_shifted_subgraph_of_h, enumerate_shifted_graphs, general_matching_number, verify_theorem,
    ExtremalRecord, HostKind, OracleConfig, SearchMode, TheoremId, Verification, VerifyRanges,
};
use linforest::patterns::{
    count_bicliques, count_bicliques_oriented, count_clique_stars, count_cliques,
};
use linforest::shifting::shift;
use linforest::{BipartiteGraph, Count, Graph};

/// Allowed |formula - oracle| for every equality below.
const TOLERANCE: u64 = 0;
const SEED: u64 = 0x5eed_1f0e;
const LEMMA_SAMPLES: usize = 10_000;

/// Criteria that are expected to print FAIL; see the decisions ledger.
/// Criterion 4: the even-k bipartite values are not the true maxima.
const KNOWN_FAILING: &[u32] = &[4];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn within_tolerance(a: &Count, b: &Count) -> bool {
    let diff = if a > b { a - b } else { b - a };
    diff <= BigUint::from(TOLERANCE)
}

fn record_ok(r: &ExtremalRecord) -> bool {
    let Some(f) = &r.formula else { return false };
    within_tolerance(f, &r.oracle)
}

/// Re-checks a witness through the forest and counting modules.
fn witness_ok(r: &ExtremalRecord) -> bool {
    let free = match r.theorem {
        TheoremId::EdgesMatching | TheoremId::CliquesMatching | TheoremId::CliqueStarsMatching => {
            general_matching_number(&r.witness) <= r.k
        }
        TheoremId::BipartiteMatching => general_matching_number(&r.witness) <= r.k,
        _ => is_lnk_free(&r.witness, r.k).unwrap(),
    };
    let count = match r.host {
        HostKind::General => r.pattern.count(&r.witness).unwrap(),
        HostKind::Bipartite => r
            .pattern
            .count_bipartite(&r.witness_bipartite().unwrap())
            .unwrap(),
    };
    free && count == r.oracle
}

fn summarize(runs: &[Verification]) -> Outcome {
    let rows: Vec<&ExtremalRecord> = runs.iter().flat_map(|v| &v.records).collect();
    let errors: usize = runs.iter().map(|v| v.errors.len()).sum();
    let bad: Vec<&&ExtremalRecord> = rows.iter().filter(|r| !record_ok(r)).collect();
    let bad_witness = rows.iter().filter(|r| !witness_ok(r)).count();
    let mut detail = format!(
        "{} tuples, {} mismatches, {} witness failures, {} errors",
        rows.len(),
        bad.len(),
        bad_witness,
        errors
    );
    for r in bad.iter().take(6) {
        detail.push_str(&format!(
            "\n      n={} k={} {}: oracle {} vs formula {}",
            r.n,
            r.k,
            r.pattern,
            r.oracle,
            r.formula
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_else(|| "-".into())
        ));
    }
    if bad.len() > 6 {
        detail.push_str(&format!("\n      ... {} more", bad.len() - 6));
    }
    Outcome {
        pass: !rows.is_empty() && bad.is_empty() && bad_witness == 0 && errors == 0,
        detail,
    }
}

fn ranges(n_min: usize, n_max: usize, s: &[usize], t: &[usize]) -> VerifyRanges {
    VerifyRanges {
        n_min,
        n_max,
        k_range: None,
        s_values: s.to_vec(),
        t_values: t.to_vec(),
    }
}

fn verify(theorem: TheoremId, r: &VerifyRanges, mode: SearchMode) -> Verification {
    verify_theorem(theorem, r, mode, &OracleConfig::default()).expect("valid sweep configuration")
}

fn criterion_1() -> Outcome {
    summarize(&[verify(
        TheoremId::Edges,
        &ranges(2, 7, &[2], &[]),
        SearchMode::Full,
    )])
}

fn criterion_2() -> Outcome {
    let full = verify(
        TheoremId::Cliques,
        &ranges(2, 7, &[2, 3, 4], &[]),
        SearchMode::Full,
    );
    let shifted = verify(
        TheoremId::Cliques,
        &ranges(2, 9, &[2, 3, 4], &[]),
        SearchMode::ShiftedOnly,
    );
    summarize(&[full, shifted])
}

fn criterion_3() -> Outcome {
    let a = verify(
        TheoremId::CliqueStars,
        &ranges(2, 7, &[1], &[2, 3]),
        SearchMode::Full,
    );
    let b = verify(
        TheoremId::CliqueStars,
        &ranges(2, 7, &[2], &[2]),
        SearchMode::Full,
    );
    summarize(&[a, b])
}

fn criterion_4() -> Outcome {
    let v = verify(
        TheoremId::Bipartite,
        &ranges(2, 4, &[1, 2], &[1, 2]),
        SearchMode::Full,
    );
    let odd_ok = v.records.iter().filter(|r| r.k % 2 == 1).all(record_ok);
    let even_bad = v
        .records
        .iter()
        .filter(|r| r.k % 2 == 0 && !record_ok(r))
        .count();
    let mut out = summarize(&[v]);
    out.detail = format!(
        "{}\n      odd k all equal: {odd_ok}; even-k mismatches: {even_bad}",
        out.detail
    );
    out
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen();
    let mut g = Graph::empty(n);
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn lf(g: &Graph) -> usize {
    max_linear_forest(g).unwrap().lf
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut a_bad, mut b_bad, mut c_bad) = (0, 0, 0);

    // (a) + (b): freeness preservation, edge conservation, count monotonicity
    for _ in 0..LEMMA_SAMPLES {
        let n = rng.gen_range(2..=9);
        let g = random_graph(&mut rng, n);
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        let (h, _) = shift(&g, i, j).unwrap();
        // lf(h) <= lf(g) is freeness preservation for every k at once
        if h.edge_count() != g.edge_count() || lf(&h) > lf(&g) {
            a_bad += 1;
        }
        let cliques = (1..=4).all(|s| count_cliques(&h, s) >= count_cliques(&g, s));
        let stars = (1..=2)
            .all(|s| (1..=3).all(|t| count_clique_stars(&h, s, t) >= count_clique_stars(&g, s, t)));
        if !(cliques && stars) {
            b_bad += 1;
        }
    }

    // (c): k-stability, on non-adjacent pairs with d(u) + d(v) >= k
    let mut c_done = 0;
    while c_done < LEMMA_SAMPLES {
        let n = rng.gen_range(3..=9);
        let g = random_graph(&mut rng, n);
        let u = rng.gen_range(1..=n);
        let v = rng.gen_range(1..=n);
        if u == v || g.has_edge(u, v) {
            continue;
        }
        let dsum = g.degree(u) + g.degree(v);
        let kmax = dsum.min(n - 1);
        if kmax == 0 {
            continue;
        }
        let k = if rng.gen_bool(0.5) {
            kmax
        } else {
            rng.gen_range(1..=kmax)
        };
        let plus = g.with_edge(u, v).unwrap();
        if is_lnk_free(&g, k).unwrap() != is_lnk_free(&plus, k).unwrap() {
            c_bad += 1;
        }
        c_done += 1;
    }

    // (d): every shifted graph sits inside some H(n, lf+1, m)
    let (mut d_checked, mut d_bad) = (0, 0);
    for n in 1..=7 {
        for g in enumerate_shifted_graphs(n).unwrap() {
            let k = lf(&g) + 1;
            if check_shifted_subgraph_of_h(&g, k).unwrap().is_none() {
                d_bad += 1;
            }
            d_checked += 1;
        }
    }

    Outcome {
        pass: a_bad + b_bad + c_bad + d_bad == 0,
        detail: format!(
            "(a) {a_bad}/{LEMMA_SAMPLES} violations, (b) {b_bad}/{LEMMA_SAMPLES}, (c) {c_bad}/{LEMMA_SAMPLES}, (d) {d_bad}/{d_checked} shifted graphs"
        ),
    }
}

fn criterion_6() -> Outcome {
    let (mut checked, mut bad) = (0, 0);
    for n in 1..=12u64 {
        for k in 1..=n {
            for m in ceil_half_kp1(k)..=k {
                let h = build_h(n as usize, k as usize, m as usize).unwrap();
                for s in 1..=3u64 {
                    checked += 1;
                    if count_h_cliques_closed(n, k, m, s).unwrap() != count_cliques(&h, s as usize)
                    {
                        bad += 1;
                    }
                    for t in 1..=3u64 {
                        checked += 1;
                        let direct = count_clique_stars(&h, s as usize, t as usize);
                        if count_h_cliquestars_closed(n, k, m, s, t).unwrap() != direct {
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    for n in 1..=6u64 {
        for kc in 0..=n {
            for x in 0..=kc {
                let g = build_gstar(n as usize, kc as usize, x as usize).unwrap();
                for s in 1..=3u64 {
                    for t in 1..=3u64 {
                        checked += 1;
                        let direct = count_bicliques_oriented(&g, s as usize, t as usize);
                        if f_bip_closed(n, kc, x, s, t).unwrap() != direct {
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    Outcome {
        pass: bad == 0,
        detail: format!("{checked} closed-form evaluations, {bad} disagreements"),
    }
}

fn unrestricted_variant(e: &Evaluation) -> UnrestrictedVariant {
    match e.branch {
        "K_k" | "K_{2k+1}" => UnrestrictedVariant::Clique,
        _ => UnrestrictedVariant::Dominating,
    }
}

fn criterion_7() -> Outcome {
    let (mut checked, mut bad) = (0, 0);
    let mut fail = |ok: bool| {
        checked += 1;
        if !ok {
            bad += 1;
        }
    };
    for n in 2..=30u64 {
        for k in 1..=12u64.min(n - 1) {
            let (nu, ku) = (n as usize, k as usize);
            let e = ex_edges_linforest_eval(n, k).unwrap();
            let g = build_extremal_unrestricted(nu, ku, unrestricted_variant(&e)).unwrap();
            fail(count_cliques(&g, 2) == e.value);
            for s in 2..=4u64 {
                let e = ex_cliques_linforest_eval(n, k, s).unwrap();
                let g = build_extremal_unrestricted(nu, ku, unrestricted_variant(&e)).unwrap();
                fail(count_cliques(&g, s as usize) == e.value);
            }
            for s in 1..=4u64 {
                for t in 2..=3u64 {
                    let e = ex_cliquestar_linforest_eval(n, k, s, t).unwrap();
                    let g = build_extremal_unrestricted(nu, ku, unrestricted_variant(&e)).unwrap();
                    fail(count_clique_stars(&g, s as usize, t as usize) == e.value);
                }
            }
        }
        // matching family
        for k in 1..=12u64 {
            if n < 2 * k + 1 {
                break;
            }
            let (nu, ku) = (n as usize, k as usize);
            let e = ex_edges_matching_eval(n, k).unwrap();
            let g = build_extremal_matching(nu, ku, unrestricted_variant(&e)).unwrap();
            fail(count_cliques(&g, 2) == e.value);
            for s in 2..=4u64 {
                let e = ex_cliques_matching_eval(n, k, s).unwrap();
                let g = build_extremal_matching(nu, ku, unrestricted_variant(&e)).unwrap();
                fail(count_cliques(&g, s as usize) == e.value);
            }
            for s in 1..=4u64 {
                for t in 2..=3u64 {
                    let e = ex_cliquestar_matching_eval(n, k, s, t).unwrap();
                    let g = build_extremal_matching(nu, ku, unrestricted_variant(&e)).unwrap();
                    fail(count_clique_stars(&g, s as usize, t as usize) == e.value);
                }
            }
        }
    }
    // bipartite hosts, parts of size n
    for n in 1..=30u64 {
        for k in 2..=12u64 {
            if 2 * n < k + 1 || n < ceil_half_km1(k) {
                continue;
            }
            let g: BipartiteGraph = build_extremal_bipartite(n as usize, k as usize).unwrap();
            for s in 1..=4u64 {
                for t in 1..=3u64 {
                    let e = ex_bip_biclique_linforest_eval(n, k, s, t).unwrap();
                    fail(count_bicliques(&g, s as usize, t as usize) == e.value);
                }
            }
        }
        for k in 1..=12u64.min(n) {
            let g = build_extremal_bipartite_matching(n as usize, k as usize).unwrap();
            for s in 2..=4u64 {
                for t in 2..=3u64 {
                    let e = ex_bip_biclique_matching_eval(n, k, s, t).unwrap();
                    fail(count_bicliques(&g, s as usize, t as usize) == e.value);
                }
            }
        }
    }
    Outcome {
        pass: bad == 0,
        detail: format!("{checked} construction counts, {bad} differ from the winning branch"),
    }
}

/// `f(i-1) + f(i+1) >= 2 f(i)` for every interior point.
fn convex(values: &[Count]) -> bool {
    values.windows(3).all(|w| &w[0] + &w[2] >= &w[1] + &w[1])
}

fn criterion_8() -> Outcome {
    let (mut seqs, mut bad) = (0u64, 0u64);
    for n in 1..=200u64 {
        for k in 1..=40u64.min(n) {
            let ms: Vec<u64> = (ceil_half_kp1(k)..=k).collect();
            if ms.len() >= 3 {
                for s in 1..=6u64 {
                    let f: Vec<Count> = ms
                        .iter()
                        .map(|&m| count_h_cliques_closed(n, k, m, s).unwrap())
                        .collect();
                    seqs += 1;
                    bad += u64::from(!convex(&f));
                    for t in 1..=6u64 {
                        let g: Vec<Count> = ms
                            .iter()
                            .map(|&m| count_h_cliquestars_closed(n, k, m, s, t).unwrap())
                            .collect();
                        seqs += 1;
                        bad += u64::from(!convex(&g));
                    }
                }
            }
            let kc = ceil_half_km1(k);
            if kc >= 2 && kc <= n {
                for s in 1..=6u64 {
                    for t in 1..=6u64 {
                        let h: Vec<Count> = (0..=kc)
                            .map(|x| {
                                f_bip_closed(n, kc, x, s, t).unwrap()
                                    + f_bip_closed(n, kc, x, t, s).unwrap()
                            })
                            .collect();
                        seqs += 1;
                        bad += u64::from(!convex(&h));
                    }
                }
            }
        }
    }
    Outcome {
        pass: bad == 0,
        detail: format!("{seqs} sequences, {bad} with a negative second difference"),
    }
}

fn criterion_9() -> Outcome {
    let mut bad = 0;
    let mut checked = 0;
    for n in 2..=200u64 {
        for k in 1..n {
            checked += 1;
            if ex_cliques_linforest(n, k, 2).unwrap() != ex_edges_linforest(n, k).unwrap() {
                bad += 1;
            }
        }
    }
    let small = |s: &[usize], t: &[usize], n_max: usize| VerifyRanges {
        k_range: Some((1, 2)),
        ..ranges(3, n_max, s, t)
    };
    let runs = [
        verify(
            TheoremId::EdgesMatching,
            &small(&[2], &[], 7),
            SearchMode::Full,
        ),
        verify(
            TheoremId::CliquesMatching,
            &small(&[2, 3], &[], 7),
            SearchMode::Full,
        ),
        verify(
            TheoremId::CliqueStarsMatching,
            &small(&[1, 2], &[2, 3], 7),
            SearchMode::Full,
        ),
        verify(
            TheoremId::BipartiteMatching,
            &VerifyRanges {
                n_min: 2,
                ..small(&[2, 3], &[2, 3], 4)
            },
            SearchMode::Full,
        ),
    ];
    let oracle = summarize(&runs);
    Outcome {
        pass: bad == 0 && oracle.pass,
        detail: format!(
            "s=2 consistency: {checked} pairs, {bad} disagreements; matching oracle: {}",
            oracle.detail
        ),
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "edges vs full oracle, n <= 7", criterion_1),
        (
            2,
            "cliques vs full (n <= 7) and shifted (n <= 9) oracles",
            criterion_2,
        ),
        (3, "clique-stars vs full oracle, n <= 7", criterion_3),
        (
            4,
            "bipartite bicliques vs exhaustive oracle, parts <= 4",
            criterion_4,
        ),
        (
            5,
            "shifting, monotonicity, stability and containment properties",
            criterion_5,
        ),
        (6, "closed forms vs direct counts on H and G*", criterion_6),
        (7, "constructions attain the winning branch", criterion_7),
        (8, "convexity of the intermediate counts", criterion_8),
        (
            9,
            "cross-family consistency and matching oracle",
            criterion_9,
        ),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let out = run();
        println!(
            "criterion {id}: {} {name} [{:.1}s]\n      {}",
            if out.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            out.detail
        );
        if out.pass == KNOWN_FAILING.contains(&id) {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
