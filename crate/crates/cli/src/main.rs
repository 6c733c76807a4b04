use std::fs;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use linforest::constructions::{
    build_extremal_bipartite, build_extremal_matching, build_extremal_unrestricted, build_gstar,
    build_h, UnrestrictedVariant,
};
use linforest::forest::{is_lnk_free, max_linear_forest_capped, DEFAULT_LF_CAP};
use linforest::formulas::{self, Formula};
use linforest::graph6::{encode_graph6, parse_graph6};
use linforest::oracle::{
    extremal_count_bipartite_many, extremal_count_many, extremal_count_matching, verify_theorem,
    ExtremalRecord, OracleConfig, SearchMode, TheoremId, VerifyRanges,
};
use linforest::report::VerificationReport;
use linforest::shifting::{shift, shift_closure};
use linforest::{BipartiteGraph, Error, Graph, PatternKind, PatternSpec};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "linforest",
    version,
    about = "Linear forests, shifting and generalized Turán counts"
)]
struct Cli {
    /// Worker threads for the oracle [env: LINF_THREADS; default: all cores]
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Largest linear forest of each graph6 line
    Lf {
        /// graph6 file (default: stdin)
        input: Option<PathBuf>,
        /// Refuse graphs with more vertices than this
        #[arg(long, default_value_t = DEFAULT_LF_CAP)]
        cap: usize,
    },
    /// Apply S_ij (or the full shifting closure) to each graph6 line
    Shift {
        #[arg(long, required_unless_present = "fixpoint")]
        i: Option<usize>,
        #[arg(long, required_unless_present = "fixpoint")]
        j: Option<usize>,
        /// Shift until no S_ij changes the graph
        #[arg(long)]
        fixpoint: bool,
        /// Also print the resulting edge list
        #[arg(long)]
        edges: bool,
        input: Option<PathBuf>,
    },
    /// Count copies of a pattern in each graph6 line
    Count {
        #[arg(value_parser = parse_kind)]
        kind: PatternKind,
        s: usize,
        t: Option<usize>,
        /// For bicliques: the first NX vertices form X, the rest Y
        #[arg(long)]
        parts: Option<usize>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Print an extremal construction as graph6
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        kceil: Option<usize>,
        #[arg(long)]
        x: Option<usize>,
        /// Also print lf, counts and agreement with the closed form
        #[arg(long)]
        check: bool,
    },
    /// Evaluate a closed form, e.g. `formula ex-cliques-linforest 100 5 3`
    Formula {
        name: String,
        args: Vec<u64>,
        /// Also print which branch of the maximum wins
        #[arg(long)]
        branch: bool,
    },
    /// Compare the oracle against a closed form over a parameter sweep
    Verify {
        #[arg(value_parser = parse_theorem)]
        theorem: TheoremId,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Inclusive range `a..b` (default: every k the claim covers)
        #[arg(long, value_parser = parse_range)]
        k_range: Option<(usize, usize)>,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        s: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        t: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Mode::Full)]
        mode: Mode,
        /// CSV report path (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Run the oracle for one tuple
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_kind)]
        pattern: PatternKind,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Mode::Full)]
        mode: Mode,
        /// Forbid a matching with k+1 edges instead of a linear forest with k edges
        #[arg(long)]
        matching: bool,
        #[command(flatten)]
        caps: Caps,
    },
}

#[derive(clap::Args)]
struct Caps {
    #[arg(long, default_value_t = OracleConfig::default().full_cap)]
    full_cap: usize,
    #[arg(long, default_value_t = OracleConfig::default().shifted_cap)]
    shifted_cap: usize,
    #[arg(long, default_value_t = OracleConfig::default().bipartite_cap)]
    bipartite_cap: usize,
    #[arg(long, default_value_t = OracleConfig::default().split_depth)]
    split_depth: usize,
}

impl Caps {
    fn config(&self) -> OracleConfig {
        OracleConfig {
            full_cap: self.full_cap,
            shifted_cap: self.shifted_cap,
            bipartite_cap: self.bipartite_cap,
            split_depth: self.split_depth,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Full,
    ShiftedOnly,
}

impl From<Mode> for SearchMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Full => SearchMode::Full,
            Mode::ShiftedOnly => SearchMode::ShiftedOnly,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "H")]
    H,
    Clique,
    Dominating,
    BipOdd,
    BipEven,
    Gstar,
    MatchingClique,
    MatchingDominating,
}

fn parse_kind(s: &str) -> Result<PatternKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let a = a.parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b = b
        .trim_start_matches('=')
        .parse()
        .map_err(|_| format!("bad range end {b:?}"))?;
    Ok((a, b))
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge { .. } => EXIT_CAP,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn need(v: Option<usize>, name: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| usage(format!("--{name} is required for this family")))
}

fn open(input: &Option<PathBuf>) -> Result<Box<dyn BufRead>, Failure> {
    Ok(match input {
        Some(p) => Box::new(BufReader::new(fs::File::open(p)?)),
        None => Box::new(BufReader::new(io::stdin())),
    })
}

/// Applies `f` to every non-blank graph6 line; parse errors are reported
/// with their line number and turn the exit status nonzero.
fn for_each_graph(
    input: &Option<PathBuf>,
    mut f: impl FnMut(Graph, &mut dyn Write) -> Result<(), Failure>,
) -> Result<u8, Failure> {
    let mut text = String::new();
    open(input)?.read_to_string(&mut text)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut status = 0;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => f(g, &mut out)?,
            Err(e) => {
                eprintln!("line {}: {e}", i + 1);
                status = EXIT_USAGE;
            }
        }
    }
    Ok(status)
}

fn edge_list(edges: &[(usize, usize)]) -> String {
    edges
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn split_parts(g: &Graph, nx: usize) -> Result<BipartiteGraph, Failure> {
    if nx > g.n() {
        return Err(usage(format!("--parts {nx} exceeds the order {}", g.n())));
    }
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if (u <= nx) == (v <= nx) {
            return Err(usage(format!("edge {u}-{v} lies inside one part")));
        }
        edges.push((u, v - nx));
    }
    Ok(BipartiteGraph::from_edges(nx, g.n() - nx, &edges)?)
}

fn print_record(r: &ExtremalRecord) {
    let formula = r
        .formula
        .as_ref()
        .map(ToString::to_string)
        .unwrap_or_else(|| "-".into());
    let parts = r
        .parts
        .map(|(x, y)| format!(" parts={x},{y}"))
        .unwrap_or_default();
    println!(
        "{} n={} k={} {} oracle={} formula={} match={} witness={}{}",
        r.theorem,
        r.n,
        r.k,
        r.pattern,
        r.oracle,
        formula,
        r.matches(),
        r.witness_g6(),
        parts
    );
}

/// Exact claims print `closed-form=` / `equal=`; extremal claims print
/// `ex=` / `attains=`.
#[derive(Clone, Copy)]
enum Claim {
    Exact,
    Extremal,
}

fn construct_check_line(
    label: &str,
    value: &linforest::Count,
    kind: Claim,
    claim: Result<linforest::Count, Error>,
) -> String {
    let (name, verdict) = match kind {
        Claim::Exact => ("closed-form", "equal"),
        Claim::Extremal => ("ex", "attains"),
    };
    match claim {
        Ok(c) => format!("{label}={value} {name}={c} {verdict}={}", *value == c),
        Err(_) => format!("{label}={value}"),
    }
}

fn cmd_construct(
    family: Family,
    n: usize,
    k: Option<usize>,
    m: Option<usize>,
    kceil: Option<usize>,
    x: Option<usize>,
    check: bool,
) -> Result<u8, Failure> {
    use linforest::patterns::{count_bicliques, count_cliques};
    let (n64, k64) = (n as u64, k.unwrap_or(0) as u64);
    let bipartite = |g: BipartiteGraph,
                     k: Option<usize>,
                     kind: Claim,
                     claim: Result<linforest::Count, Error>| {
        let whole = g.to_graph();
        println!("{} parts={},{}", encode_graph6(&whole), g.nx(), g.ny());
        if check {
            let lf = max_linear_forest_capped(&whole, 24)?.lf;
            println!("lf={lf}");
            if let Some(k) = k {
                println!("free={}", is_lnk_free(&whole, k)?);
            }
            println!(
                "{}",
                construct_check_line("edges", &count_bicliques(&g, 1, 1), kind, claim)
            );
        }
        Ok::<u8, Failure>(0)
    };
    let general = |g: Graph,
                   k: Option<usize>,
                   kind: Claim,
                   claims: Vec<(usize, Result<linforest::Count, Error>)>| {
        println!("{}", encode_graph6(&g));
        if check {
            let lf = max_linear_forest_capped(&g, 24)?.lf;
            println!("lf={lf}");
            if let Some(k) = k {
                println!("free={}", is_lnk_free(&g, k).unwrap_or(lf < k));
            }
            for (s, claim) in claims {
                println!(
                    "{}",
                    construct_check_line(&format!("K_{s}"), &count_cliques(&g, s), kind, claim)
                );
            }
        }
        Ok::<u8, Failure>(0)
    };
    match family {
        Family::H => {
            let (k, m) = (need(k, "k")?, need(m, "m")?);
            let g = build_h(n, k, m)?;
            let claims = (2..=3)
                .map(|s| {
                    (
                        s,
                        formulas::count_h_cliques_closed(n64, k64, m as u64, s as u64),
                    )
                })
                .collect();
            general(g, Some(k), Claim::Exact, claims)
        }
        Family::Clique | Family::Dominating => {
            let k = need(k, "k")?;
            let v = if matches!(family, Family::Clique) {
                UnrestrictedVariant::Clique
            } else {
                UnrestrictedVariant::Dominating
            };
            let g = build_extremal_unrestricted(n, k, v)?;
            let claims = (2..=3)
                .map(|s| (s, formulas::ex_cliques_linforest(n64, k64, s as u64)))
                .collect();
            general(g, Some(k), Claim::Extremal, claims)
        }
        Family::MatchingClique | Family::MatchingDominating => {
            let k = need(k, "k")?;
            let v = if matches!(family, Family::MatchingClique) {
                UnrestrictedVariant::Clique
            } else {
                UnrestrictedVariant::Dominating
            };
            let g = build_extremal_matching(n, k, v)?;
            let claims = (2..=3)
                .map(|s| (s, formulas::ex_cliques_matching(n64, k64, s as u64)))
                .collect();
            general(g, None, Claim::Extremal, claims)
        }
        Family::BipOdd | Family::BipEven => {
            let k = need(k, "k")?;
            let odd = matches!(family, Family::BipOdd);
            if (k % 2 == 1) != odd {
                return Err(usage(format!(
                    "k = {k} does not have the parity of this family"
                )));
            }
            let g = build_extremal_bipartite(n, k)?;
            let claim = formulas::ex_bip_biclique_linforest(n64, k64, 1, 1);
            bipartite(g, Some(k), Claim::Extremal, claim)
        }
        Family::Gstar => {
            let (kc, x) = (need(kceil, "kceil")?, need(x, "x")?);
            let g = build_gstar(n, kc, x)?;
            let claim = formulas::f_bip_closed(n64, kc as u64, x as u64, 1, 1);
            bipartite(g, None, Claim::Exact, claim)
        }
    }
}

fn cmd_verify(
    theorem: TheoremId,
    ranges: VerifyRanges,
    mode: SearchMode,
    out: Option<PathBuf>,
    cfg: OracleConfig,
) -> Result<u8, Failure> {
    let v = verify_theorem(theorem, &ranges, mode, &cfg)?;
    let report = VerificationReport::new(&v, &ranges);
    let text = report.to_csv()?;
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    let mismatches = v.records.iter().filter(|r| !r.matches()).count();
    eprintln!(
        "{theorem} ({mode}): {} rows, {mismatches} mismatches, {} errors",
        v.records.len(),
        v.errors.len()
    );
    for e in &v.errors {
        eprintln!("n={} k={}: {}", e.n, e.k, e.error);
    }
    Ok(
        if v.errors
            .iter()
            .any(|e| matches!(e.error, Error::TooLarge { .. }))
        {
            EXIT_CAP
        } else if !v.errors.is_empty() {
            EXIT_USAGE
        } else if mismatches > 0 {
            EXIT_MISMATCH
        } else {
            0
        },
    )
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.cmd {
        Cmd::Lf { input, cap } => for_each_graph(&input, |g, out| {
            let stats = max_linear_forest_capped(&g, cap)?;
            writeln!(
                out,
                "lf={} witness={}",
                stats.lf,
                edge_list(&stats.witness.unwrap_or_default())
            )?;
            Ok(())
        }),
        Cmd::Shift {
            i,
            j,
            fixpoint,
            edges,
            input,
        } => for_each_graph(&input, |g, out| {
            let h = if fixpoint {
                shift_closure(&g)
            } else {
                shift(&g, i.unwrap_or(0), j.unwrap_or(0))?.0
            };
            if edges {
                writeln!(out, "{} edges={}", encode_graph6(&h), edge_list(&h.edges()))?;
            } else {
                writeln!(out, "{}", encode_graph6(&h))?;
            }
            Ok(())
        }),
        Cmd::Count {
            kind,
            s,
            t,
            parts,
            input,
        } => {
            let spec = PatternSpec::new(kind, s, t.unwrap_or(0))?;
            for_each_graph(&input, |g, out| {
                let c = if kind == PatternKind::Biclique {
                    let nx = parts.ok_or_else(|| usage("biclique counts need --parts NX"))?;
                    spec.count_bipartite(&split_parts(&g, nx)?)?
                } else {
                    spec.count(&g)?
                };
                writeln!(out, "{c}")?;
                Ok(())
            })
        }
        Cmd::Construct {
            family,
            n,
            k,
            m,
            kceil,
            x,
            check,
        } => cmd_construct(family, n, k, m, kceil, x, check),
        Cmd::Formula { name, args, branch } => {
            let f: Formula = name.parse()?;
            let e = f.evaluate(&args)?;
            if branch {
                println!("{} {}", e.value, e.branch);
            } else {
                println!("{}", e.value);
            }
            Ok(0)
        }
        Cmd::Verify {
            theorem,
            n_min,
            n_max,
            k_range,
            s,
            t,
            mode,
            out,
            caps,
        } => {
            let ranges = VerifyRanges {
                n_min,
                n_max,
                k_range,
                s_values: s,
                t_values: t,
            };
            cmd_verify(theorem, ranges, mode.into(), out, caps.config())
        }
        Cmd::Extremal {
            n,
            k,
            pattern,
            s,
            t,
            mode,
            matching,
            caps,
        } => {
            let cfg = caps.config();
            let mode = SearchMode::from(mode);
            let records = match (pattern, matching) {
                (PatternKind::Biclique, true) => {
                    linforest::oracle::extremal_count_bipartite_matching(n, k, &[(s, t)], &cfg)?
                }
                (PatternKind::Biclique, false) => {
                    if mode == SearchMode::ShiftedOnly {
                        return Err(Error::Unsupported(
                            "shifted-only search is not justified for bipartite hosts".into(),
                        )
                        .into());
                    }
                    extremal_count_bipartite_many(n, k, &[(s, t)], &cfg)?
                }
                (_, true) => {
                    extremal_count_matching(n, k, &[PatternSpec::new(pattern, s, t)?], &cfg)?
                }
                (_, false) => {
                    extremal_count_many(n, k, &[PatternSpec::new(pattern, s, t)?], mode, &cfg)?
                }
            };
            records.iter().for_each(print_record);
            Ok(
                if records.iter().all(|r| r.formula.is_none() || r.matches()) {
                    0
                } else {
                    EXIT_MISMATCH
                },
            )
        }
    }
}

fn threads(flag: Option<usize>) -> Result<Option<usize>, Failure> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("LINF_THREADS") {
        Ok(v) if !v.trim().is_empty() => v.trim().parse().map(Some).map_err(|_| {
            usage(format!(
                "LINF_THREADS must be a positive integer, got {v:?}"
            ))
        }),
        _ => Ok(None),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let setup = threads(cli.threads).and_then(|t| match t {
        Some(0) => Err(usage("thread count must be positive")),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| usage(e.to_string())),
        None => Ok(()),
    });
    match setup.and_then(|()| run(cli)) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
