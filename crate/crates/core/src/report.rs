//! Sweeps over complete intersections and their table/JSON/CSV encodings.
//!
//! CSV columns are fixed as `n,degrees,chern_number,bound,verdict,note`, with
//! degrees joined by `;`. JSON rows use the same field names, with `degrees`
//! as an array and the two big integers as decimal strings. Both layouts are
//! frozen in `schema/report_row.schema.json`.

use std::fmt::Write as _;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chern::{
    arv_obstruction, chern_number, obstruction_bound, residue_bundle, twist_leading_coefficient,
    twist_values, twisted_cotangent_chern_series, CompleteIntersection, ObstructionReport, Verdict,
};
use crate::delpezzo::{enumerate_exceptional, feasibility, product_of_lines_fan, toric_power_map};
use crate::error::{Error, Result};

pub const CSV_COLUMNS: [&str; 6] = ["n", "degrees", "chern_number", "bound", "verdict", "note"];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Self::Table),
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(Error::Input(format!(
                "unknown format {other:?}; expected table, json or csv"
            ))),
        }
    }
}

/// Parses an inclusive range `A:B`; `A > B` is rejected.
pub fn parse_range(s: &str) -> Result<(u32, u32)> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| Error::Input(format!("range {s:?} must look like A:B")))?;
    let parse = |v: &str| {
        v.trim()
            .parse::<u32>()
            .map_err(|e| Error::Input(format!("range bound {v:?}: {e}")))
    };
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo > hi {
        return Err(Error::Input(format!("empty range {lo}:{hi}")));
    }
    Ok((lo, hi))
}

/// Parses a comma-separated multidegree such as `3,2`.
pub fn parse_degrees(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse::<u32>()
                .map_err(|e| Error::Input(format!("degree {v:?}: {e}")))
        })
        .collect()
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// A flattened [`ObstructionReport`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: u32,
    pub degrees: Vec<u32>,
    #[serde(with = "decimal")]
    pub chern_number: BigInt,
    #[serde(with = "decimal")]
    pub bound: BigInt,
    pub verdict: Verdict,
    pub note: String,
}

impl From<&ObstructionReport> for ReportRow {
    fn from(r: &ObstructionReport) -> Self {
        Self {
            n: r.variety.dimension(),
            degrees: r.variety.degrees().to_vec(),
            chern_number: r.chern_number.clone(),
            bound: r.bound.clone(),
            verdict: r.verdict,
            note: r.note.to_string(),
        }
    }
}

impl ReportRow {
    fn joined_degrees(&self) -> String {
        self.degrees
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(";")
    }

    fn csv_record(&self) -> [String; 6] {
        [
            self.n.to_string(),
            self.joined_degrees(),
            self.chern_number.to_string(),
            self.bound.to_string(),
            self.verdict.to_string(),
            self.note.clone(),
        ]
    }

    fn from_csv_record(rec: &csv::StringRecord) -> Result<Self> {
        if rec.len() != CSV_COLUMNS.len() {
            return Err(Error::Input(format!("CSV row has {} fields", rec.len())));
        }
        let bad = |what: &str, v: &str| Error::Input(format!("CSV {what} {v:?}"));
        let verdict = match &rec[4] {
            "Obstructed" => Verdict::Obstructed,
            "Inconclusive" => Verdict::Inconclusive,
            v => return Err(bad("verdict", v)),
        };
        let degrees = rec[1]
            .split(';')
            .map(|v| v.parse::<u32>().map_err(|_| bad("degree", v)))
            .collect::<Result<_>>()?;
        Ok(Self {
            n: rec[0].parse().map_err(|_| bad("n", &rec[0]))?,
            degrees,
            chern_number: rec[2].parse().map_err(|_| bad("chern_number", &rec[2]))?,
            bound: rec[3].parse().map_err(|_| bad("bound", &rec[3]))?,
            verdict,
            note: rec[5].to_string(),
        })
    }
}

/// A grid of complete intersections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSpec {
    pub dim_range: (u32, u32),
    pub codim_max: usize,
    pub degree_range: (u32, u32),
    pub twist: i64,
    pub output_format: OutputFormat,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            dim_range: (2, 4),
            codim_max: 1,
            degree_range: (3, 5),
            twist: 2,
            output_format: OutputFormat::Table,
        }
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let (n_lo, n_hi) = self.dim_range;
        let (d_lo, d_hi) = self.degree_range;
        if n_lo > n_hi || d_lo > d_hi {
            return Err(Error::Input("sweep ranges must be non-empty".into()));
        }
        if n_lo < 2 {
            return Err(Error::Input(
                "the obstruction is defined for dimension >= 2".into(),
            ));
        }
        if d_lo < 1 {
            return Err(Error::Input("degrees must be at least 1".into()));
        }
        if self.codim_max < 1 {
            return Err(Error::Input("codim-max must be at least 1".into()));
        }
        if self.twist != 2 {
            return Err(Error::Input(format!(
                "sweep rows carry the twist-2 obstruction verdict; twist {} is not supported \
                 (use `chern --twist` for single Chern numbers)",
                self.twist
            )));
        }
        Ok(())
    }

    /// Every `(n, d_1 >= ... >= d_p)` in the grid, in lexicographic order.
    pub fn grid(&self) -> Result<Vec<CompleteIntersection>> {
        self.validate()?;
        let (d_lo, d_hi) = self.degree_range;
        let mut multidegrees = Vec::new();
        for p in 1..=self.codim_max {
            non_increasing(p, d_lo, d_hi, &mut Vec::new(), &mut multidegrees);
        }
        let mut out = Vec::new();
        for n in self.dim_range.0..=self.dim_range.1 {
            for degs in &multidegrees {
                out.push(CompleteIntersection::new(n, degs.clone())?);
            }
        }
        out.sort();
        Ok(out)
    }
}

fn non_increasing(len: usize, lo: u32, hi: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() == len {
        out.push(prefix.clone());
        return;
    }
    let top = prefix.last().copied().unwrap_or(hi);
    for d in lo..=top {
        prefix.push(d);
        non_increasing(len, lo, hi, prefix, out);
        prefix.pop();
    }
}

/// Evaluates the obstruction on every grid point. Rows are sorted by
/// `(n, degrees)`, so the result does not depend on `threads`.
pub fn run_sweep(spec: &SweepSpec, threads: Option<usize>) -> Result<Vec<ReportRow>> {
    let grid = spec.grid()?;
    let work = || -> Result<Vec<ReportRow>> {
        grid.par_iter()
            .map(|x| arv_obstruction(x).map(|r| ReportRow::from(&r)))
            .collect()
    };
    let mut rows = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Input(format!("thread pool: {e}")))?
            .install(work)?,
        None => work()?,
    };
    rows.sort();
    Ok(rows)
}

pub fn write_rows<W: Write>(
    rows: &[ReportRow],
    format: OutputFormat,
    mut out: W,
) -> std::io::Result<()> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_COLUMNS)?;
            for row in rows {
                w.write_record(row.csv_record())?;
            }
            w.flush()
        }
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)
        }
        OutputFormat::Table => out.write_all(render_table(rows).as_bytes()),
    }
}

pub fn render_table(rows: &[ReportRow]) -> String {
    let records: Vec<[String; 6]> = rows.iter().map(ReportRow::csv_record).collect();
    let mut widths = CSV_COLUMNS.map(str::len);
    for rec in &records {
        for (w, field) in widths.iter_mut().zip(rec) {
            *w = (*w).max(field.chars().count());
        }
    }
    let mut s = String::new();
    let mut line = |fields: &[&str]| {
        let cells: Vec<String> = fields
            .iter()
            .zip(widths)
            .enumerate()
            .map(|(i, (f, w))| {
                if i == 5 {
                    f.to_string()
                } else {
                    format!("{f:<w$}")
                }
            })
            .collect();
        let _ = writeln!(s, "{}", cells.join("  ").trim_end());
    };
    line(&CSV_COLUMNS);
    for rec in &records {
        let refs: Vec<&str> = rec.iter().map(String::as_str).collect();
        line(&refs);
    }
    s
}

pub fn rows_from_csv(text: &str) -> Result<Vec<ReportRow>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| Error::Input(format!("CSV header: {e}")))?;
    if header.iter().ne(CSV_COLUMNS) {
        return Err(Error::Input(format!("unexpected CSV header {header:?}")));
    }
    reader
        .records()
        .map(|rec| {
            let rec = rec.map_err(|e| Error::Input(format!("CSV: {e}")))?;
            ReportRow::from_csv_record(&rec)
        })
        .collect()
}

pub fn rows_from_json(text: &str) -> Result<Vec<ReportRow>> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("JSON: {e}")))
}

/// Text for `chern`: the truncated series and the top Chern number.
pub fn render_chern(x: &CompleteIntersection, twist: i64) -> Result<String> {
    let series = twisted_cotangent_chern_series(x, twist);
    let c_n = chern_number(x, twist)?;
    let n = x.dimension();
    Ok(format!(
        "variety: {x}\ntwist: {twist}\nc(Ω¹_X({twist})) = {series}  (mod h^{})\nc_{n} = {c_n}\n",
        n + 1
    ))
}

fn linear_factor(slope: i64) -> String {
    match slope {
        0 => "1".into(),
        1 => "1+x".into(),
        -1 => "1-x".into(),
        s if s < 0 => format!("1-{}x", -s),
        s => format!("1+{s}x"),
    }
}

/// Text for `residues`: the four residues of ω and their sum.
pub fn render_residues(n: u32, d: u32) -> Result<String> {
    let r = residue_bundle(n, d)?;
    Ok(format!(
        "ω = (1+x)^{} / (x^{} (1+2x) ({}))\n\
         Res_0        = {}\n\
         Res_-1/2     = {}\n\
         Res_1/(d-2)  = {}\n\
         Res_infinity = {}\n\
         sum          = {}\n\
         d·Res_0      = {}\n",
        n + 2,
        n + 1,
        linear_factor(2 - d as i64),
        r.at_zero,
        r.at_minus_half,
        r.at_inv_d_minus_2,
        r.at_infinity,
        r.sum(),
        &r.at_zero * crate::series::rat(d as i64),
    ))
}

/// Text for `delpezzo --blowups r`.
pub fn render_delpezzo(r: usize, list: bool) -> Result<String> {
    let f = feasibility(r)?;
    let mut s = String::new();
    let _ = writeln!(s, "surface: P² blown up at {r} point(s)");
    let _ = writeln!(s, "degree K²: {}", f.degree);
    let _ = writeln!(s, "exceptional classes: {}", f.exceptional_count);
    let _ = writeln!(
        s,
        "classes span Pic: {}",
        if f.spanning { "yes" } else { "no" }
    );
    let _ = writeln!(s, "verdict: {}", f.verdict);
    if let Some(w) = f.toric_witness {
        let _ = writeln!(
            s,
            "toric certificate: (X,Y,Z) ↦ (X^{p},Y^{p},Z^{p}) preserves the fan, degree {}",
            w.degree,
            p = w.power
        );
    }
    if list {
        for c in enumerate_exceptional(r)? {
            let _ = writeln!(s, "  {c}");
        }
    }
    Ok(s)
}

/// Text for `delpezzo --p1xp1`: the degree-8 surface that is not a blow-up
/// of `P²`, handled by the product of power maps.
pub fn render_product_of_lines() -> Result<String> {
    let w = toric_power_map(&product_of_lines_fan(), crate::delpezzo::WITNESS_POWER)?;
    Ok(format!(
        "surface: P¹ × P¹\ndegree K²: 8\nverdict: PossiblyAdmits\n\
         toric certificate: power map on each factor, degree {}\n",
        w.degree
    ))
}

/// Text for `limit`: the values `c_n(Ω¹_X(2m))` and the interpolated leading
/// coefficient against `2^n deg X`.
pub fn render_limit(x: &CompleteIntersection) -> Result<String> {
    let values = twist_values(x)?;
    let lead = twist_leading_coefficient(x)?;
    let expected = obstruction_bound(x);
    let mut s = format!("variety: {x}\n");
    for (m, v) in values.iter().enumerate() {
        let _ = writeln!(
            s,
            "m = {}: c_{}(Ω¹_X({})) = {v}",
            m + 1,
            x.dimension(),
            2 * (m + 1)
        );
    }
    let _ = writeln!(s, "leading coefficient: {lead}");
    let _ = writeln!(s, "2^n·deg X: {expected}");
    let matches = lead == crate::series::Rational::from_integer(expected);
    let _ = writeln!(s, "match: {}", if matches { "yes" } else { "no" });
    if !matches {
        return Err(Error::Internal(format!(
            "leading coefficient {lead} differs from 2^n·deg X"
        )));
    }
    Ok(s)
}
