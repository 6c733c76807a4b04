//! Verification reports as CSV.
//!
//! A report is a few `#` comment lines (tool version, theorem, mode, ranges,
//! per-tuple errors) followed by a CSV table with a mandatory header row.
//! All counts are written in exact decimal. Bipartite witnesses are the
//! graph6 of the `2n`-vertex graph plus a `parts=nx,ny` column.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph6::parse_graph6;
use crate::oracle::{ExtremalRecord, HostKind, SearchMode, TheoremId, Verification, VerifyRanges};
use crate::patterns::{Count, PatternSpec};

pub const COLUMNS: [&str; 13] = [
    "theorem",
    "n",
    "k",
    "s",
    "t",
    "host",
    "mode",
    "formula",
    "oracle",
    "match",
    "witness_g6",
    "parts",
    "millis",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportError {
    pub n: usize,
    pub k: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub version: String,
    pub theorem: TheoremId,
    pub mode: SearchMode,
    pub ranges: VerifyRanges,
    pub rows: Vec<ExtremalRecord>,
    pub errors: Vec<ReportError>,
}

impl VerificationReport {
    pub fn new(v: &Verification, ranges: &VerifyRanges) -> Self {
        VerificationReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            theorem: v.theorem,
            mode: v.mode,
            ranges: ranges.clone(),
            rows: v.records.clone(),
            errors: v
                .errors
                .iter()
                .map(|e| ReportError {
                    n: e.n,
                    k: e.k,
                    message: e.error.to_string(),
                })
                .collect(),
        }
    }

    /// Pass iff every tuple ran and every row matches.
    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.rows.iter().all(ExtremalRecord::matches)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut out = String::new();
        let r = &self.ranges;
        writeln!(out, "# linforest {}", self.version).unwrap();
        writeln!(
            out,
            "# theorem={} mode={} n={}..{} k={} s={} t={}",
            self.theorem,
            self.mode,
            r.n_min,
            r.n_max,
            match r.k_range {
                Some((a, b)) => format!("{a}..{b}"),
                None => "all".into(),
            },
            join(&r.s_values),
            join(&r.t_values),
        )
        .unwrap();
        writeln!(
            out,
            "# status={}",
            if self.passed() { "pass" } else { "fail" }
        )
        .unwrap();
        for e in &self.errors {
            writeln!(
                out,
                "# error n={} k={}: {}",
                e.n,
                e.k,
                e.message.replace('\n', " ")
            )
            .unwrap();
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(COLUMNS).map_err(csv_err)?;
        for rec in &self.rows {
            w.write_record(row(rec)).map_err(csv_err)?;
        }
        let body = w.into_inner().map_err(|e| Error::invalid(e.to_string()))?;
        out.push_str(std::str::from_utf8(&body).expect("csv output is utf-8"));
        Ok(out)
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut version = None;
        let mut params = None;
        let mut errors = Vec::new();
        let mut body_start = text.len();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let Some(comment) = line.strip_prefix('#') else {
                body_start = offset;
                break;
            };
            let comment = comment.trim();
            if let Some(v) = comment.strip_prefix("linforest ") {
                version = Some(v.to_string());
            } else if comment.starts_with("theorem=") {
                params = Some(parse_params(comment)?);
            } else if let Some(e) = comment.strip_prefix("error ") {
                errors.push(parse_error_line(e)?);
            }
            offset += line.len();
        }
        let version =
            version.ok_or_else(|| Error::invalid("report is missing the version line"))?;
        let (theorem, mode, ranges) =
            params.ok_or_else(|| Error::invalid("report is missing the parameter line"))?;

        let mut rdr = csv::Reader::from_reader(&text.as_bytes()[body_start..]);
        let headers = rdr.headers().map_err(csv_err)?.clone();
        if headers.iter().ne(COLUMNS.iter().copied()) {
            return Err(Error::invalid(format!(
                "unexpected report columns: {}",
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut rows = Vec::new();
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(csv_err)?;
            let fields: Vec<&str> = rec.iter().collect();
            rows.push(
                parse_row(&fields)
                    .map_err(|e| Error::invalid(format!("report row {}: {e}", i + 1)))?,
            );
        }
        Ok(VerificationReport {
            version,
            theorem,
            mode,
            ranges,
            rows,
            errors,
        })
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::invalid(format!("csv: {e}"))
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn num<T: FromStr>(field: &str, what: &str) -> Result<T> {
    field
        .parse()
        .map_err(|_| Error::invalid(format!("bad {what} {field:?}")))
}

fn list(field: &str) -> Result<Vec<usize>> {
    if field.is_empty() {
        return Ok(Vec::new());
    }
    field.split(',').map(|x| num(x, "list entry")).collect()
}

fn range(field: &str) -> Result<(usize, usize)> {
    let (a, b) = field
        .split_once("..")
        .ok_or_else(|| Error::invalid(format!("bad range {field:?}")))?;
    Ok((num(a, "range start")?, num(b, "range end")?))
}

fn parse_params(line: &str) -> Result<(TheoremId, SearchMode, VerifyRanges)> {
    let mut theorem = None;
    let mut mode = None;
    let mut ranges = VerifyRanges {
        n_min: 0,
        n_max: 0,
        k_range: None,
        s_values: Vec::new(),
        t_values: Vec::new(),
    };
    for kv in line.split_whitespace() {
        let (key, val) = kv
            .split_once('=')
            .ok_or_else(|| Error::invalid(format!("bad header field {kv:?}")))?;
        match key {
            "theorem" => theorem = Some(val.parse()?),
            "mode" => mode = Some(val.parse()?),
            "n" => (ranges.n_min, ranges.n_max) = range(val)?,
            "k" if val == "all" => ranges.k_range = None,
            "k" => ranges.k_range = Some(range(val)?),
            "s" => ranges.s_values = list(val)?,
            "t" => ranges.t_values = list(val)?,
            _ => return Err(Error::invalid(format!("unknown header field {key:?}"))),
        }
    }
    match (theorem, mode) {
        (Some(t), Some(m)) => Ok((t, m, ranges)),
        _ => Err(Error::invalid("parameter line needs theorem= and mode=")),
    }
}

fn parse_error_line(e: &str) -> Result<ReportError> {
    let (head, message) = e
        .split_once(": ")
        .ok_or_else(|| Error::invalid(format!("bad error line {e:?}")))?;
    let mut n = None;
    let mut k = None;
    for kv in head.split_whitespace() {
        match kv.split_once('=') {
            Some(("n", v)) => n = Some(num(v, "n")?),
            Some(("k", v)) => k = Some(num(v, "k")?),
            _ => return Err(Error::invalid(format!("bad error field {kv:?}"))),
        }
    }
    match (n, k) {
        (Some(n), Some(k)) => Ok(ReportError {
            n,
            k,
            message: message.to_string(),
        }),
        _ => Err(Error::invalid(format!("bad error line {e:?}"))),
    }
}

fn row(rec: &ExtremalRecord) -> Vec<String> {
    vec![
        rec.theorem.to_string(),
        rec.n.to_string(),
        rec.k.to_string(),
        rec.pattern.s().to_string(),
        rec.pattern.t().to_string(),
        rec.host.to_string(),
        rec.mode.to_string(),
        rec.formula
            .as_ref()
            .map(ToString::to_string)
            .unwrap_or_default(),
        rec.oracle.to_string(),
        rec.matches().to_string(),
        rec.witness_g6(),
        rec.parts
            .map(|(x, y)| format!("parts={x},{y}"))
            .unwrap_or_default(),
        rec.millis.to_string(),
    ]
}

fn parse_row(f: &[&str]) -> Result<ExtremalRecord> {
    if f.len() != COLUMNS.len() {
        return Err(Error::invalid(format!(
            "expected {} fields, got {}",
            COLUMNS.len(),
            f.len()
        )));
    }
    let theorem: TheoremId = f[0].parse()?;
    let pattern = PatternSpec::new(theorem.pattern_kind(), num(f[3], "s")?, num(f[4], "t")?)?;
    let formula = if f[7].is_empty() {
        None
    } else {
        Some(num::<Count>(f[7], "formula")?)
    };
    let parts = if f[11].is_empty() {
        None
    } else {
        let p = f[11]
            .strip_prefix("parts=")
            .and_then(|p| p.split_once(','))
            .ok_or_else(|| Error::invalid(format!("bad parts {:?}", f[11])))?;
        Some((num(p.0, "parts")?, num(p.1, "parts")?))
    };
    let rec = ExtremalRecord {
        theorem,
        n: num(f[1], "n")?,
        k: num(f[2], "k")?,
        pattern,
        host: HostKind::from_str(f[5])?,
        mode: SearchMode::from_str(f[6])?,
        formula,
        oracle: num(f[8], "oracle")?,
        witness: parse_graph6(f[10])?,
        parts,
        millis: num(f[12], "millis")?,
    };
    let claimed: bool = num(f[9], "match")?;
    if claimed != rec.matches() {
        return Err(Error::invalid(
            "match column disagrees with formula and oracle",
        ));
    }
    Ok(rec)
}
