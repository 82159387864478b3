//! Rendering of report tables as aligned text, CSV, JSON or JSON lines.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
    Jsonl,
}

/// One table cell. Exact values stay exact until rendering.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// Small index-like integers (`n`, `i`, `j`, counts); JSON numbers.
    Index(u64),
    /// Exact rational or big integer; always rendered as a string.
    Exact(BigRational),
    /// Monte-Carlo estimates.
    Float(f64),
    Text(String),
    Empty,
}

impl Cell {
    pub fn exact_int(x: impl Into<BigInt>) -> Cell {
        Cell::Exact(BigRational::from_integer(x.into()))
    }

    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    fn render(&self, decimal: Option<usize>) -> String {
        match self {
            Cell::Index(v) => v.to_string(),
            Cell::Exact(r) => match decimal {
                Some(k) => rational_to_decimal(r, k),
                None => r.to_string(),
            },
            Cell::Float(x) => format!("{:.*}", decimal.unwrap_or(6), x),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(&self, decimal: Option<usize>) -> Value {
        match self {
            Cell::Index(v) => Value::from(*v),
            Cell::Float(x) => match decimal {
                Some(_) => Value::String(self.render(decimal)),
                None => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
            },
            Cell::Empty => Value::Null,
            _ => Value::String(self.render(decimal)),
        }
    }
}

/// `r` to `digits` places after the point, ties to even.
pub fn rational_to_decimal(r: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let num = r.numer().abs() * &scale;
    let den = r.denom().abs();
    let (mut q, rem) = num.div_rem(&den);
    let twice: BigInt = rem * 2;
    if twice > den || (twice == den && q.is_odd()) {
        q += 1;
    }
    let negative = r.numer().sign() == Sign::Minus && !q.is_zero();
    let s = q.to_string();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if digits == 0 {
        out.push_str(&s);
        return out;
    }
    let padded = format!("{s:0>width$}", width = digits + 1);
    let (int, frac) = padded.split_at(padded.len() - digits);
    let _ = write!(out, "{int}.{frac}");
    out
}

/// Rows plus an optional document used for `--format json` when the natural
/// JSON shape is not a list of rows (graphs, series).
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub document: Option<Value>,
    /// Table format prints cells only, no header or alignment.
    pub bare: bool,
}

impl Report {
    pub fn new(columns: &[&str]) -> Self {
        Report {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Report::default()
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn with_document(mut self, doc: Value) -> Self {
        self.document = Some(doc);
        self
    }

    fn row_object(&self, row: &[Cell], decimal: Option<usize>) -> Value {
        let mut map = Map::new();
        for (c, cell) in self.columns.iter().zip(row) {
            map.insert(c.clone(), cell.to_json(decimal));
        }
        Value::Object(map)
    }

    pub fn render(&self, format: Format, decimal: Option<usize>) -> String {
        match format {
            Format::Table => self.render_table(decimal),
            Format::Csv => self.render_csv(decimal),
            Format::Json => {
                let doc = match &self.document {
                    Some(d) => d.clone(),
                    None => Value::Array(
                        self.rows
                            .iter()
                            .map(|r| self.row_object(r, decimal))
                            .collect(),
                    ),
                };
                let mut s = serde_json::to_string_pretty(&doc).expect("json");
                s.push('\n');
                s
            }
            Format::Jsonl => {
                let mut s = String::new();
                for r in &self.rows {
                    s.push_str(&self.row_object(r, decimal).to_string());
                    s.push('\n');
                }
                s
            }
        }
    }

    fn render_table(&self, decimal: Option<usize>) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| c.render(decimal)).collect())
            .collect();
        let mut out = String::new();
        if self.bare {
            for r in &cells {
                out.push_str(&r.join("\t"));
                out.push('\n');
            }
            return out;
        }
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for r in &cells {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |out: &mut String, items: &[String]| {
            let mut s = String::new();
            for (k, (item, w)) in items.iter().zip(&widths).enumerate() {
                if k > 0 {
                    s.push_str("  ");
                }
                let _ = write!(s, "{item:<w$}");
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        line(&mut out, &self.columns);
        for r in &cells {
            line(&mut out, r);
        }
        out
    }

    fn render_csv(&self, decimal: Option<usize>) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("csv");
        for r in &self.rows {
            w.write_record(r.iter().map(|c| c.render(decimal)))
                .expect("csv");
        }
        String::from_utf8(w.into_inner().expect("csv")).expect("utf8")
    }
}
