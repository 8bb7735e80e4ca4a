//! Comparison tables, placement listings and profile diffs.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::benefit::{BenefitClass, BenefitId, Rating, SchemeProfile};
use crate::catalog::{Catalog, CatalogError, ExpectedPlacement};
use crate::placement::{place, Placement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
    Markdown,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown table format `{0}` (expected text, csv or md)")]
pub struct UnknownFormat(pub String);

impl FromStr for TableFormat {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(TableFormat::Text),
            "csv" => Ok(TableFormat::Csv),
            "md" | "markdown" => Ok(TableFormat::Markdown),
            _ => Err(UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Symbols {
    /// ● ○ and blank
    #[default]
    Unicode,
    /// `*` `o` and blank
    Ascii,
}

impl Symbols {
    pub fn symbol(self, r: Rating) -> &'static str {
        match (self, r) {
            (_, Rating::Absent) => "",
            (Symbols::Unicode, Rating::Full) => "●",
            (Symbols::Unicode, Rating::Partial) => "○",
            (Symbols::Ascii, Rating::Full) => "*",
            (Symbols::Ascii, Rating::Partial) => "o",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableSpec {
    pub format: TableFormat,
    /// Ignored for CSV, which always spells ratings out.
    pub symbols: Symbols,
}

impl TableSpec {
    pub fn new(format: TableFormat) -> Self {
        TableSpec {
            format,
            symbols: Symbols::Unicode,
        }
    }
}

/// Base profiles, then combined profiles, each ordered by category and id.
pub fn table_rows(catalog: &Catalog) -> Result<Vec<SchemeProfile>, CatalogError> {
    let key = |p: &SchemeProfile| (p.category, p.id.clone());
    let mut base = catalog.schemes.clone();
    base.sort_by_key(key);
    let mut combined = catalog.resolved_combined()?;
    combined.sort_by_key(key);
    base.extend(combined);
    Ok(base)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn render_table(catalog: &Catalog, spec: TableSpec) -> Result<String, CatalogError> {
    let rows = table_rows(catalog)?;
    let mut out = String::new();
    match spec.format {
        TableFormat::Csv => {
            let header: Vec<String> = ["id", "name", "category"]
                .iter()
                .map(|s| s.to_string())
                .chain(BenefitId::ALL.iter().map(|b| b.to_string()))
                .collect();
            let _ = writeln!(out, "{}", header.join(","));
            for p in &rows {
                let mut cells = vec![csv_field(p.id.as_str()), csv_field(&p.name), p.category.to_string()];
                cells.extend(p.vector.iter().map(|(_, r)| r.word().to_string()));
                let _ = writeln!(out, "{}", cells.join(","));
            }
        }
        TableFormat::Markdown => {
            let mut header = String::from("| id | name | category |");
            let mut rule = String::from("|---|---|---|");
            for b in BenefitId::ALL {
                let _ = write!(header, " {b} |");
                rule.push_str(":-:|");
            }
            let _ = writeln!(out, "{header}\n{rule}");
            for p in &rows {
                let _ = write!(out, "| {} | {} | {} |", p.id, md_cell(&p.name), p.category);
                for (_, r) in p.vector.iter() {
                    let _ = write!(out, " {} |", spec.symbols.symbol(r));
                }
                out.push('\n');
            }
        }
        TableFormat::Text => render_text_table(&rows, spec.symbols, &mut out),
    }
    Ok(out)
}

const CELL: usize = 3;

fn render_text_table(rows: &[SchemeProfile], symbols: Symbols, out: &mut String) {
    let width = |f: &dyn Fn(&SchemeProfile) -> usize, min: usize| rows.iter().map(f).max().unwrap_or(0).max(min);
    let id_w = width(&|p| p.id.as_str().chars().count(), 2);
    let name_w = width(&|p| p.name.chars().count(), 4);
    let cat_w = width(&|p| p.category.token().len(), 8);
    let lead = id_w + name_w + cat_w + 4;

    let groups = [
        BenefitClass::Usability,
        BenefitClass::Deployability,
        BenefitClass::Security,
        BenefitClass::Mimicry,
    ];
    let mut group_line = format!("{:lead$}", "");
    let mut header = format!("{:<id_w$}  {:<name_w$}  {:<cat_w$}", "id", "name", "category");
    for class in groups {
        let n = BenefitId::ALL.iter().filter(|b| b.class() == class).count();
        let span = n * (CELL + 1) - 1;
        let label: String = class.name().chars().take(span).collect();
        let _ = write!(group_line, " |{label:<span$}");
        header.push_str(" |");
        let cols: Vec<String> = BenefitId::ALL
            .iter()
            .filter(|b| b.class() == class)
            .map(|b| format!("{:<CELL$}", b.to_string()))
            .collect();
        header.push_str(&cols.join(" "));
    }
    let _ = writeln!(out, "{}", group_line.trim_end());
    let _ = writeln!(out, "{}", header.trim_end());

    for p in rows {
        let mut line = format!("{:<id_w$}  {:<name_w$}  {:<cat_w$}", p.id.as_str(), p.name, p.category.token());
        for class in groups {
            line.push_str(" |");
            let cols: Vec<String> = p
                .vector
                .iter()
                .filter(|(b, _)| b.class() == class)
                .map(|(_, r)| format!("{:<CELL$}", symbols.symbol(r)))
                .collect();
            line.push_str(&cols.join(" "));
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
}

/// Agreement between a computed placement and its recorded expectation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectationStatus {
    /// No expectation recorded.
    Unchecked,
    Ok,
    /// Segments agree; a drawn-position disagreement is on record.
    Errata,
    Mismatch,
}

impl ExpectationStatus {
    pub fn label(self) -> &'static str {
        match self {
            ExpectationStatus::Unchecked => "-",
            ExpectationStatus::Ok => "ok",
            ExpectationStatus::Errata => "errata",
            ExpectationStatus::Mismatch => "mismatch",
        }
    }
}

pub fn expectation_status(placement: &Placement, expected: Option<&ExpectedPlacement>) -> ExpectationStatus {
    let Some(e) = expected else {
        return ExpectationStatus::Unchecked;
    };
    let coord_ok = |want: Option<f64>, have: f64| want.is_none_or(|w| w == have);
    if placement.vseg != e.vsegment
        || placement.hseg != e.hsegment
        || !coord_ok(e.x, placement.x)
        || !coord_ok(e.y, placement.y)
    {
        ExpectationStatus::Mismatch
    } else if e.errata.is_some() {
        ExpectationStatus::Errata
    } else {
        ExpectationStatus::Ok
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlacementRow {
    pub id: String,
    pub name: String,
    pub combined: bool,
    pub placement: Placement,
    pub status: ExpectationStatus,
}

/// Placement of every scheme, base schemes first, in table order.
pub fn placement_rows(catalog: &Catalog) -> Result<Vec<PlacementRow>, CatalogError> {
    let n_base = catalog.schemes.len();
    Ok(table_rows(catalog)?
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            let placement = place(&p);
            PlacementRow {
                status: expectation_status(&placement, catalog.expectation(p.id.as_str())),
                id: p.id.to_string(),
                name: p.name,
                combined: i >= n_base,
                placement,
            }
        })
        .collect())
}

pub fn render_placement_rows(rows: &[PlacementRow]) -> String {
    let id_w = rows.iter().map(|r| r.id.len()).max().unwrap_or(0).max(2);
    let mut out = format!(
        "{:<id_w$}  {:<4}  {:>4}  {:<4}  {:>4}  {:<13}  status\n",
        "id", "vseg", "vsub", "hseg", "hsub", "position"
    );
    for r in rows {
        let p = &r.placement;
        let _ = writeln!(
            out,
            "{:<id_w$}  {:<4}  {:>4}  {:<4}  {:>4}  {:<13}  {}",
            r.id,
            p.vseg.label(),
            p.vsub,
            p.hseg.label(),
            p.hsub,
            format!("x={} y={}", p.x, p.y),
            r.status.label()
        );
    }
    out
}

pub fn render_placements(catalog: &Catalog) -> Result<String, CatalogError> {
    Ok(render_placement_rows(&placement_rows(catalog)?))
}

/// One line per benefit whose ratings differ: `M4: absent → full`.
pub fn render_diff(a: &SchemeProfile, b: &SchemeProfile) -> String {
    let mut out = String::new();
    for bid in BenefitId::ALL {
        let (ra, rb) = (a.rating_of(bid), b.rating_of(bid));
        if ra != rb {
            let _ = writeln!(out, "{bid}: {ra} → {rb}");
        }
    }
    out
}
