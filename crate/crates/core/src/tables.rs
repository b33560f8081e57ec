//! Count tables, cycle summaries, and their text/CSV/JSON/b-file forms.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde_json::{json, Map, Number, Value};

use crate::counting::{self, cyclic_coprime_sum, path_edge_sum, BigCount};
use crate::error::{domain, Error, Result};
use crate::problem::{cycle_decomposition, CycleDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    /// `d_n^k` for `0 <= k < n`, with `Der_n` in column 0.
    LinearTriangle,
    /// `D_n^k` for `1 <= k < n`, `n >= 2`.
    ModularGrid,
    /// Forbidden edges and cycle structure for every `1 <= k < n`.
    CycleSummary,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::LinearTriangle => "linear",
            TableKind::ModularGrid => "modular",
            TableKind::CycleSummary => "cycles",
        }
    }

    fn min_n(self) -> usize {
        match self {
            TableKind::LinearTriangle => 1,
            _ => 2,
        }
    }

    fn min_k(self) -> usize {
        match self {
            TableKind::LinearTriangle => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(TableKind::LinearTriangle),
            "modular" => Ok(TableKind::ModularGrid),
            "cycles" => Ok(TableKind::CycleSummary),
            other => Err(Error::Parse(format!("unknown table kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// A populated table. Cells outside a kind's domain are absent, never zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    kind: TableKind,
    max_n: usize,
    cells: BTreeMap<(usize, usize), BigCount>,
    cycles: BTreeMap<(usize, usize), CycleDecomposition>,
}

impl CountTable {
    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// For cycle summaries the cell value is the maximum cycle length.
    pub fn get(&self, n: usize, k: usize) -> Option<&BigCount> {
        self.cells.get(&(n, k))
    }

    pub fn cycle(&self, n: usize, k: usize) -> Option<&CycleDecomposition> {
        self.cycles.get(&(n, k))
    }

    /// Populated cells in `(n, k)` order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &BigCount)> {
        self.cells.iter().map(|(&(n, k), v)| (n, k, v))
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn row_ns(&self) -> std::ops::RangeInclusive<usize> {
        self.kind.min_n()..=self.max_n
    }

    /// Grid columns shared by every row.
    fn column_ks(&self) -> std::ops::Range<usize> {
        self.kind.min_k()..self.max_n
    }
}

fn modular_cells(max_n: usize) -> Result<Vec<((usize, usize), BigCount)>> {
    let coords: Vec<(usize, usize)> = (2..=max_n)
        .flat_map(|n| (1..n).map(move |k| (n, k)))
        .collect();
    #[cfg(feature = "parallel")]
    let iter = coords.into_par_iter();
    #[cfg(not(feature = "parallel"))]
    let iter = coords.into_iter();
    iter.map(|(n, k)| counting::count_modular(n, k).map(|v| ((n, k), v)))
        .collect()
}

pub fn build_table(kind: TableKind, max_n: usize) -> Result<CountTable> {
    if max_n < kind.min_n() {
        return Err(domain(format!(
            "{kind} tables need max_n >= {}, got {max_n}",
            kind.min_n()
        )));
    }
    let mut cells = BTreeMap::new();
    let mut cycles = BTreeMap::new();
    match kind {
        TableKind::LinearTriangle => {
            let triangle = counting::linear_triangle(max_n)?;
            for n in 1..=max_n {
                for (k, v) in triangle.row(n).unwrap_or_default().iter().enumerate() {
                    cells.insert((n, k), v.clone());
                }
            }
        }
        TableKind::ModularGrid => cells.extend(modular_cells(max_n)?),
        TableKind::CycleSummary => {
            for n in 2..=max_n {
                for k in 1..n {
                    let c = cycle_decomposition(n, k)?;
                    cells.insert((n, k), BigCount::from(c.max_cycle_length()));
                    cycles.insert((n, k), c);
                }
            }
        }
    }
    Ok(CountTable {
        kind,
        max_n,
        cells,
        cycles,
    })
}

/// `13`-style pair for small `n`, `10-13` once labels reach two digits.
fn pair_label(n: usize, a: usize, b: usize) -> String {
    if n >= 10 {
        format!("{a}-{b}")
    } else {
        format!("{a}{b}")
    }
}

/// Modular edges with the wrap-around edges after a semicolon, e.g.
/// `13, 24, 35, 46; 51, 62`.
pub fn paper_edge_list(n: usize, k: usize) -> String {
    let upper: Vec<String> = (1..=n - k).map(|j| pair_label(n, j, j + k)).collect();
    let lower: Vec<String> = (n - k + 1..=n)
        .map(|j| pair_label(n, j, j + k - n))
        .collect();
    format!("{}; {}", upper.join(", "), lower.join(", "))
}

/// One row of the cycle summary: shift, forbidden edges, the `n`-cycle,
/// its `k`-th power, and the maximum cycle length.
pub fn cycle_summary_cells(c: &CycleDecomposition) -> [String; 5] {
    let n = c.n();
    let sep = if n >= 10 { " " } else { "" };
    let base: Vec<String> = (1..=n).map(|x| x.to_string()).collect();
    [
        format!("k={}", c.k()),
        paper_edge_list(n, c.k()),
        format!("({})", base.join(sep)),
        c.cycle_notation(),
        c.max_cycle_length().to_string(),
    ]
}

pub const CYCLE_SUMMARY_HEADER: [&str; 5] = [
    "k",
    "Forbidden Substrings",
    "Permutation",
    "kth-power",
    "max cycle length",
];

fn align(rows: &[Vec<String>], right: bool, sep: &str) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| {
                if right {
                    format!("{cell:>w$}", w = widths[c])
                } else {
                    format!("{cell:<w$}", w = widths[c])
                }
            })
            .collect();
        out.push_str(line.join(sep).trim_end());
        out.push('\n');
    }
    out
}

fn render_text(table: &CountTable) -> String {
    match table.kind {
        TableKind::LinearTriangle => {
            let mut rows = vec![std::iter::once("n".to_string())
                .chain(table.column_ks().map(|k| {
                    if k == 0 {
                        "Der".into()
                    } else {
                        format!("k={k}")
                    }
                }))
                .collect::<Vec<_>>()];
            for n in table.row_ns() {
                let mut row = vec![n.to_string()];
                row.extend(table.column_ks().map(|k| cell_text(table.get(n, k))));
                rows.push(row);
            }
            align(&rows, true, "  ")
        }
        TableKind::ModularGrid => {
            let mut rows = vec![std::iter::once(String::new())
                .chain(table.column_ks().map(|k| format!("k={k}")))
                .collect::<Vec<_>>()];
            for n in table.row_ns() {
                let mut row = vec![format!("n = {n}")];
                row.extend(table.column_ks().map(|k| cell_text(table.get(n, k))));
                rows.push(row);
            }
            align(&rows, true, "  ")
        }
        TableKind::CycleSummary => {
            let mut out = String::new();
            for n in table.row_ns() {
                if n > 2 {
                    out.push('\n');
                }
                out.push_str(&format!("n = {n}\n"));
                let mut rows = vec![CYCLE_SUMMARY_HEADER.map(String::from).to_vec()];
                for k in 1..n {
                    if let Some(c) = table.cycle(n, k) {
                        rows.push(cycle_summary_cells(c).to_vec());
                    }
                }
                out.push_str(&align(&rows, false, " | "));
            }
            out
        }
    }
}

fn cell_text(v: Option<&BigCount>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn machine_edges(n: usize, k: usize) -> String {
    (1..=n)
        .map(|j| format!("{}-{}", j, (j + k - 1) % n + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

fn machine_cycles(c: &CycleDecomposition) -> String {
    c.cycles()
        .iter()
        .map(|cy| {
            let body: Vec<String> = cy.iter().map(usize::to_string).collect();
            format!("({})", body.join(" "))
        })
        .collect()
}

fn csv_header(table: &CountTable) -> Vec<String> {
    match table.kind {
        TableKind::CycleSummary => ["n", "k", "gcd", "edges", "kth_power", "max_cycle_length"]
            .map(String::from)
            .to_vec(),
        _ => std::iter::once("n".to_string())
            .chain(table.column_ks().map(|k| {
                if k == 0 {
                    "Der".into()
                } else {
                    format!("k{k}")
                }
            }))
            .collect(),
    }
}

fn render_csv(table: &CountTable) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(csv_header(table)).map_err(io)?;
    match table.kind {
        TableKind::CycleSummary => {
            for (&(n, k), c) in &table.cycles {
                w.write_record([
                    n.to_string(),
                    k.to_string(),
                    c.gcd().to_string(),
                    machine_edges(n, k),
                    machine_cycles(c),
                    c.max_cycle_length().to_string(),
                ])
                .map_err(io)?;
            }
        }
        _ => {
            for n in table.row_ns() {
                let mut row = vec![n.to_string()];
                row.extend(table.column_ks().map(|k| cell_text(table.get(n, k))));
                w.write_record(&row).map_err(io)?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

fn big_number(v: &BigCount) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal digits form a JSON number"))
}

fn render_json(table: &CountTable) -> String {
    let mut rows = Vec::new();
    match table.kind {
        TableKind::CycleSummary => {
            for (&(n, k), c) in &table.cycles {
                let edges: Vec<Value> = (1..=n).map(|j| json!([j, (j + k - 1) % n + 1])).collect();
                rows.push(json!({
                    "n": n,
                    "k": k,
                    "value": c.max_cycle_length(),
                    "gcd": c.gcd(),
                    "edges": edges,
                    "cycles": c.cycles(),
                }));
            }
        }
        _ => {
            for n in table.row_ns() {
                for k in table.column_ks() {
                    let value = table.get(n, k).map_or(Value::Null, big_number);
                    rows.push(json!({ "n": n, "k": k, "value": value }));
                }
            }
        }
    }
    let mut obj = Map::new();
    obj.insert("kind".into(), json!(table.kind.name()));
    obj.insert("max_n".into(), json!(table.max_n));
    obj.insert("rows".into(), Value::Array(rows));
    let mut s = Value::Object(obj).to_string();
    s.push('\n');
    s
}

/// Render a table. Numbers are written in full decimal.
pub fn render(table: &CountTable, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(render_text(table)),
        Format::Csv => render_csv(table),
        Format::Json => Ok(render_json(table)),
    }
}

fn parse_usize(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected an integer, got {s:?}")))
}

fn parse_big(s: &str) -> Result<BigCount> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected a nonnegative integer, got {s:?}")))
}

fn check_cycle(n: usize, k: usize) -> Result<CycleDecomposition> {
    cycle_decomposition(n, k).map_err(|e| Error::Parse(format!("row ({n}, {k}): {e}")))
}

/// Inverse of `render(.., Format::Csv)`. The kind is read off the header.
pub fn parse_csv(text: &str) -> Result<CountTable> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    let io = |e: csv::Error| Error::Parse(e.to_string());
    let header: Vec<String> = r.headers().map_err(io)?.iter().map(String::from).collect();
    let mut cells = BTreeMap::new();
    let mut cycles = BTreeMap::new();

    if header.first().map(String::as_str) != Some("n") {
        return Err(Error::Parse("CSV header must start with n".into()));
    }
    let kind = match header.get(1).map(String::as_str) {
        Some("k") => TableKind::CycleSummary,
        Some("Der") => TableKind::LinearTriangle,
        _ => TableKind::ModularGrid,
    };
    let mut max_n = kind.min_n();
    for record in r.records() {
        let record = record.map_err(io)?;
        let n = parse_usize(&record[0])?;
        max_n = max_n.max(n);
        if kind == TableKind::CycleSummary {
            let k = parse_usize(&record[1])?;
            let c = check_cycle(n, k)?;
            let consistent = record[2] == c.gcd().to_string()
                && record[3] == machine_edges(n, k)
                && record[4] == machine_cycles(&c)
                && record[5] == c.max_cycle_length().to_string();
            if !consistent {
                return Err(Error::Parse(format!(
                    "row ({n}, {k}) disagrees with its cycle structure"
                )));
            }
            cells.insert((n, k), BigCount::from(c.max_cycle_length()));
            cycles.insert((n, k), c);
            continue;
        }
        for (col, field) in record.iter().enumerate().skip(1) {
            if field.is_empty() {
                continue;
            }
            let k = col - 1 + kind.min_k();
            cells.insert((n, k), parse_big(field)?);
        }
    }
    if kind == TableKind::ModularGrid && header.len() > 1 {
        max_n = max_n.max(header.len());
    }
    Ok(CountTable {
        kind,
        max_n,
        cells,
        cycles,
    })
}

/// Inverse of `render(.., Format::Json)`.
pub fn parse_json(text: &str) -> Result<CountTable> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let field = |obj: &Value, key: &str| -> Result<Value> {
        obj.get(key)
            .cloned()
            .ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
    };
    let kind: TableKind = field(&v, "kind")?
        .as_str()
        .ok_or_else(|| Error::Parse("kind must be a string".into()))?
        .parse()?;
    let max_n = parse_usize(&field(&v, "max_n")?.to_string())?;
    let rows = field(&v, "rows")?;
    let rows = rows
        .as_array()
        .ok_or_else(|| Error::Parse("rows must be an array".into()))?;
    let mut cells = BTreeMap::new();
    let mut cycles = BTreeMap::new();
    for row in rows {
        let n = parse_usize(&field(row, "n")?.to_string())?;
        let k = parse_usize(&field(row, "k")?.to_string())?;
        match field(row, "value")? {
            Value::Null => {}
            Value::Number(num) => {
                cells.insert((n, k), parse_big(&num.to_string())?);
            }
            other => return Err(Error::Parse(format!("bad value {other}"))),
        }
        if kind == TableKind::CycleSummary {
            let c = check_cycle(n, k)?;
            let stored: Vec<Vec<usize>> = serde_json::from_value(field(row, "cycles")?)
                .map_err(|e| Error::Parse(e.to_string()))?;
            if stored != c.cycles() {
                return Err(Error::Parse(format!(
                    "row ({n}, {k}) disagrees with its cycle structure"
                )));
            }
            cycles.insert((n, k), c);
        }
    }
    Ok(CountTable {
        kind,
        max_n,
        cells,
        cycles,
    })
}

/// OEIS sequences reproduced here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OeisSequence {
    /// `D_n = Der_n + (-1)^(n-1)`, offset 1.
    A000240,
    /// `d_n^3`, offset 0; for `n <= 3` there is nothing to forbid and the
    /// term is `n!`.
    A277609,
}

impl OeisSequence {
    pub fn offset(self) -> usize {
        match self {
            OeisSequence::A000240 => 1,
            OeisSequence::A277609 => 0,
        }
    }

    pub fn term(self, n: usize) -> BigCount {
        match self {
            OeisSequence::A000240 => cyclic_coprime_sum(n),
            OeisSequence::A277609 => path_edge_sum(n, n.saturating_sub(3)),
        }
    }
}

impl FromStr for OeisSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A000240" => Ok(OeisSequence::A000240),
            "A277609" => Ok(OeisSequence::A277609),
            other => Err(Error::Parse(format!("unsupported sequence {other:?}"))),
        }
    }
}

/// b-file lines `index value` from the sequence offset through `max_n`.
pub fn oeis_bfile(sequence: OeisSequence, max_n: usize) -> String {
    let mut out = String::new();
    for n in sequence.offset()..=max_n {
        out.push_str(&format!("{n} {}\n", sequence.term(n)));
    }
    out
}
