//! Scheme catalogs: a line-oriented record format, its canonical
//! serialization, and the built-in reference catalog.
//!
//! ```text
//! # comment
//! [scheme pw]
//! name = Passwords
//! category = password
//! U3 = full
//! S2 = partial
//!
//! [combined l1_pw]
//! parts = pw,l1
//! override S9 = absent
//! reason = why the operator result is wrong here
//!
//! [expect pw]
//! vsegment = V1
//! hsegment = none
//! x = 0
//! y = 1
//! ```
//!
//! Omitted ratings are absent. Benefit ids are case-insensitive. Parsing is
//! all-or-nothing and every error carries its 1-based line number.

use std::collections::{HashMap, HashSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

use crate::benefit::{BenefitId, Category, Rating, SchemeId, SchemeProfile};
use crate::combine::{combine_profiles, CombineError, CombinedScheme, Override};
use crate::placement::{HorizontalSegment, VerticalSegment};

const REFERENCE: &str = include_str!("../data/reference.cat");

/// Figure-derived assertion about where a scheme lands.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedPlacement {
    pub scheme: SchemeId,
    pub vsegment: VerticalSegment,
    pub hsegment: HorizontalSegment,
    pub x: Option<f64>,
    pub y: Option<f64>,
    /// Known, unresolved disagreement between the drawn and derived position.
    pub errata: Option<String>,
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    /// Where the catalog came from; not part of equality.
    pub source: String,
    pub schemes: Vec<SchemeProfile>,
    pub combined: Vec<CombinedScheme>,
    pub expectations: Vec<ExpectedPlacement>,
}

impl PartialEq for Catalog {
    fn eq(&self, other: &Self) -> bool {
        self.schemes == other.schemes
            && self.combined == other.combined
            && self.expectations == other.expectations
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("combined `{combined}` references unknown scheme `{part}`")]
    DanglingPart { combined: String, part: String },
    #[error("expectation references unknown scheme `{0}`")]
    DanglingExpectation(String),
    #[error("combined `{id}`: {source}")]
    Combine {
        id: String,
        #[source]
        source: CombineError,
    },
}

impl Catalog {
    pub fn new(source: impl Into<String>) -> Self {
        Catalog {
            source: source.into(),
            ..Default::default()
        }
    }

    pub fn scheme(&self, id: &str) -> Option<&SchemeProfile> {
        self.schemes.iter().find(|s| s.id.as_str() == id)
    }

    pub fn combined_scheme(&self, id: &str) -> Option<&CombinedScheme> {
        self.combined.iter().find(|c| c.id.as_str() == id)
    }

    pub fn expectation(&self, id: &str) -> Option<&ExpectedPlacement> {
        self.expectations.iter().find(|e| e.scheme.as_str() == id)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.scheme(id).is_some() || self.combined_scheme(id).is_some()
    }

    /// Profile of a combined declaration, overrides applied.
    pub fn resolve(&self, c: &CombinedScheme) -> Result<SchemeProfile, CatalogError> {
        let parts = c
            .parts
            .iter()
            .map(|p| {
                self.scheme(p.as_str()).ok_or_else(|| CatalogError::DanglingPart {
                    combined: c.id.to_string(),
                    part: p.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        combine_profiles(c.id.clone(), c.name.as_deref(), &parts, &c.overrides).map_err(|source| {
            CatalogError::Combine {
                id: c.id.to_string(),
                source,
            }
        })
    }

    pub fn resolved_combined(&self) -> Result<Vec<SchemeProfile>, CatalogError> {
        self.combined.iter().map(|c| self.resolve(c)).collect()
    }

    /// Base or combined profile by id.
    pub fn profile(&self, id: &str) -> Result<Option<SchemeProfile>, CatalogError> {
        if let Some(s) = self.scheme(id) {
            return Ok(Some(s.clone()));
        }
        self.combined_scheme(id).map(|c| self.resolve(c)).transpose()
    }

    /// Every base profile followed by every resolved combined profile.
    pub fn all_profiles(&self) -> Result<Vec<SchemeProfile>, CatalogError> {
        let mut out = self.schemes.clone();
        out.extend(self.resolved_combined()?);
        Ok(out)
    }

    /// Structural checks that parsing guarantees; useful for catalogs built
    /// in code.
    pub fn check(&self) -> Result<(), CatalogError> {
        let mut seen = HashSet::new();
        for id in self.schemes.iter().map(|s| &s.id).chain(self.combined.iter().map(|c| &c.id)) {
            if !seen.insert(id.as_str()) {
                return Err(CatalogError::DuplicateId(id.to_string()));
            }
        }
        for c in &self.combined {
            self.resolve(c)?;
        }
        let mut expected = HashSet::new();
        for e in &self.expectations {
            if !self.contains(e.scheme.as_str()) {
                return Err(CatalogError::DanglingExpectation(e.scheme.to_string()));
            }
            if !expected.insert(e.scheme.as_str()) {
                return Err(CatalogError::DuplicateId(e.scheme.to_string()));
            }
        }
        Ok(())
    }

    /// Sorts every section by id, the canonical order.
    pub fn normalize(&mut self) {
        self.schemes.sort_by(|a, b| a.id.cmp(&b.id));
        self.combined.sort_by(|a, b| a.id.cmp(&b.id));
        self.expectations.sort_by(|a, b| a.scheme.cmp(&b.scheme));
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed section header `{0}`")]
    MalformedHeader(String),
    #[error("unknown section kind `{0}`")]
    UnknownSection(String),
    #[error("invalid id `{0}` (expected [a-z0-9_-]+)")]
    InvalidId(String),
    #[error("line outside any record: `{0}`")]
    OutsideRecord(String),
    #[error("expected `key = value`, got `{0}`")]
    MalformedLine(String),
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("unknown benefit id `{0}`")]
    UnknownBenefit(String),
    #[error("invalid rating `{0}`")]
    InvalidRating(String),
    #[error("unknown category `{0}`")]
    UnknownCategory(String),
    #[error("invalid segment `{0}`")]
    InvalidSegment(String),
    #[error("invalid decimal `{0}`")]
    InvalidNumber(String),
    #[error("empty value for `{0}`")]
    EmptyValue(String),
    #[error("duplicate key `{0}`")]
    DuplicateKey(String),
    #[error("missing `{key}` in `{id}`")]
    MissingKey { key: &'static str, id: String },
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("combined scheme needs at least two parts")]
    TooFewParts,
    #[error("part `{0}` is not a scheme in this catalog")]
    DanglingPart(String),
    #[error("expectation for unknown scheme `{0}`")]
    DanglingExpectation(String),
    #[error("override of {0} has no reason")]
    OverrideWithoutReason(BenefitId),
    #[error("reason without a preceding override")]
    ReasonWithoutOverride,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

enum Record {
    Scheme(SchemeRecord),
    Combined(CombinedRecord),
    Expect(ExpectRecord),
}

struct SchemeRecord {
    line: usize,
    id: SchemeId,
    name: Option<String>,
    category: Option<Category>,
    notes: Option<String>,
    ratings: Vec<(BenefitId, Rating)>,
}

struct CombinedRecord {
    line: usize,
    id: SchemeId,
    name: Option<String>,
    parts: Option<(usize, Vec<SchemeId>)>,
    overrides: Vec<(usize, BenefitId, Rating, Option<String>)>,
}

struct ExpectRecord {
    line: usize,
    id: SchemeId,
    vsegment: Option<VerticalSegment>,
    hsegment: Option<HorizontalSegment>,
    x: Option<f64>,
    y: Option<f64>,
    errata: Option<String>,
}

fn set_once<T>(slot: &mut Option<T>, value: T, key: &str, line: usize) -> Result<(), ParseError> {
    if slot.is_some() {
        return Err(err(line, ParseErrorKind::DuplicateKey(key.to_string())));
    }
    *slot = Some(value);
    Ok(())
}

fn text_value(key: &str, value: &str, line: usize) -> Result<String, ParseError> {
    if value.is_empty() {
        return Err(err(line, ParseErrorKind::EmptyValue(key.to_string())));
    }
    Ok(value.to_string())
}

fn parse_decimal(s: &str, line: usize) -> Result<f64, ParseError> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    let (int, frac) = match digits.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (digits, None),
    };
    let all_digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int) || frac.is_some_and(|f| !all_digits(f)) {
        return Err(err(line, ParseErrorKind::InvalidNumber(s.to_string())));
    }
    s.parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| err(line, ParseErrorKind::InvalidNumber(s.to_string())))
}

fn parse_vsegment(s: &str, line: usize) -> Result<VerticalSegment, ParseError> {
    VerticalSegment::ALL
        .iter()
        .copied()
        .find(|v| v.label() == s)
        .ok_or_else(|| err(line, ParseErrorKind::InvalidSegment(s.to_string())))
}

fn parse_hsegment(s: &str, line: usize) -> Result<HorizontalSegment, ParseError> {
    [
        HorizontalSegment::OnAxis,
        HorizontalSegment::H1,
        HorizontalSegment::H2,
        HorizontalSegment::H3,
    ]
    .into_iter()
    .find(|h| h.label() == s)
    .ok_or_else(|| err(line, ParseErrorKind::InvalidSegment(s.to_string())))
}

fn parse_rating(s: &str, allow_absent: bool, line: usize) -> Result<Rating, ParseError> {
    match Rating::from_str(s) {
        Ok(Rating::Absent) if !allow_absent => Err(err(line, ParseErrorKind::InvalidRating(s.to_string()))),
        Ok(r) => Ok(r),
        Err(_) => Err(err(line, ParseErrorKind::InvalidRating(s.to_string()))),
    }
}

fn parse_benefit(s: &str, line: usize) -> Result<BenefitId, ParseError> {
    BenefitId::from_str(s).map_err(|_| err(line, ParseErrorKind::UnknownBenefit(s.to_string())))
}

fn parse_header(inner: &str, raw: &str, line: usize) -> Result<Record, ParseError> {
    let mut tokens = inner.split_whitespace();
    let (kind, id) = match (tokens.next(), tokens.next(), tokens.next()) {
        (Some(k), Some(i), None) => (k, i),
        _ => return Err(err(line, ParseErrorKind::MalformedHeader(raw.to_string()))),
    };
    let id = SchemeId::new(id).map_err(|_| err(line, ParseErrorKind::InvalidId(id.to_string())))?;
    Ok(match kind {
        "scheme" => Record::Scheme(SchemeRecord {
            line,
            id,
            name: None,
            category: None,
            notes: None,
            ratings: Vec::new(),
        }),
        "combined" => Record::Combined(CombinedRecord {
            line,
            id,
            name: None,
            parts: None,
            overrides: Vec::new(),
        }),
        "expect" => Record::Expect(ExpectRecord {
            line,
            id,
            vsegment: None,
            hsegment: None,
            x: None,
            y: None,
            errata: None,
        }),
        other => return Err(err(line, ParseErrorKind::UnknownSection(other.to_string()))),
    })
}

fn apply_line(record: &mut Record, key: &str, value: &str, line: usize) -> Result<(), ParseError> {
    match record {
        Record::Scheme(s) => match key {
            "name" => set_once(&mut s.name, text_value(key, value, line)?, key, line),
            "notes" => set_once(&mut s.notes, text_value(key, value, line)?, key, line),
            "category" => {
                let c = Category::from_str(value)
                    .map_err(|_| err(line, ParseErrorKind::UnknownCategory(value.to_string())))?;
                set_once(&mut s.category, c, key, line)
            }
            _ => {
                let b = parse_benefit(key, line)?;
                if s.ratings.iter().any(|(seen, _)| *seen == b) {
                    return Err(err(line, ParseErrorKind::DuplicateKey(b.to_string())));
                }
                s.ratings.push((b, parse_rating(value, false, line)?));
                Ok(())
            }
        },
        Record::Combined(c) => {
            if let Some(rest) = key.strip_prefix("override") {
                let benefit_token = rest.trim();
                if rest.len() == benefit_token.len() || benefit_token.is_empty() {
                    return Err(err(line, ParseErrorKind::UnknownKey(key.to_string())));
                }
                let b = parse_benefit(benefit_token, line)?;
                if let Some((_, pending, _, None)) = c.overrides.last() {
                    return Err(err(line, ParseErrorKind::OverrideWithoutReason(*pending)));
                }
                if c.overrides.iter().any(|(_, seen, _, _)| *seen == b) {
                    return Err(err(line, ParseErrorKind::DuplicateKey(format!("override {b}"))));
                }
                c.overrides.push((line, b, parse_rating(value, true, line)?, None));
                return Ok(());
            }
            match key {
                "name" => set_once(&mut c.name, text_value(key, value, line)?, key, line),
                "parts" => {
                    let parts = value
                        .split(',')
                        .map(|p| {
                            let p = p.trim();
                            SchemeId::new(p).map_err(|_| err(line, ParseErrorKind::InvalidId(p.to_string())))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    if parts.len() < 2 {
                        return Err(err(line, ParseErrorKind::TooFewParts));
                    }
                    set_once(&mut c.parts, (line, parts), key, line)
                }
                "reason" => match c.overrides.last_mut() {
                    Some((_, _, _, reason @ None)) => {
                        *reason = Some(text_value(key, value, line)?);
                        Ok(())
                    }
                    _ => Err(err(line, ParseErrorKind::ReasonWithoutOverride)),
                },
                _ => Err(err(line, ParseErrorKind::UnknownKey(key.to_string()))),
            }
        }
        Record::Expect(e) => match key {
            "vsegment" => set_once(&mut e.vsegment, parse_vsegment(value, line)?, key, line),
            "hsegment" => set_once(&mut e.hsegment, parse_hsegment(value, line)?, key, line),
            "x" => set_once(&mut e.x, parse_decimal(value, line)?, key, line),
            "y" => set_once(&mut e.y, parse_decimal(value, line)?, key, line),
            "errata" => set_once(&mut e.errata, text_value(key, value, line)?, key, line),
            _ => Err(err(line, ParseErrorKind::UnknownKey(key.to_string()))),
        },
    }
}

/// Parses catalog text. The result is in canonical (id-sorted) order.
pub fn parse_catalog(text: &str) -> Result<Catalog, ParseError> {
    let mut records: Vec<Record> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('[') {
            let inner = rest
                .strip_suffix(']')
                .ok_or_else(|| err(line, ParseErrorKind::MalformedHeader(trimmed.to_string())))?;
            records.push(parse_header(inner, trimmed, line)?);
            continue;
        }
        let (key, value) = trimmed
            .split_once('=')
            .ok_or_else(|| err(line, ParseErrorKind::MalformedLine(trimmed.to_string())))?;
        let record = records
            .last_mut()
            .ok_or_else(|| err(line, ParseErrorKind::OutsideRecord(trimmed.to_string())))?;
        apply_line(record, key.trim(), value.trim(), line)?;
    }

    build(records)
}

fn build(records: Vec<Record>) -> Result<Catalog, ParseError> {
    let mut catalog = Catalog::new("");
    let mut ids: HashSet<SchemeId> = HashSet::new();
    let mut base_ids: HashSet<SchemeId> = HashSet::new();
    let mut pending_parts = Vec::new();
    let mut pending_expect = Vec::new();
    let mut expected: HashMap<SchemeId, usize> = HashMap::new();

    for record in records {
        match record {
            Record::Scheme(s) => {
                if !ids.insert(s.id.clone()) {
                    return Err(err(s.line, ParseErrorKind::DuplicateId(s.id.to_string())));
                }
                base_ids.insert(s.id.clone());
                let missing = |key| err(s.line, ParseErrorKind::MissingKey { key, id: s.id.to_string() });
                let name = s.name.ok_or_else(|| missing("name"))?;
                let category = s.category.ok_or_else(|| missing("category"))?;
                let mut profile = SchemeProfile::new(s.id, name, category);
                profile.notes = s.notes;
                for (b, r) in s.ratings {
                    profile.vector.set(b, r);
                }
                catalog.schemes.push(profile);
            }
            Record::Combined(c) => {
                if !ids.insert(c.id.clone()) {
                    return Err(err(c.line, ParseErrorKind::DuplicateId(c.id.to_string())));
                }
                let (parts_line, parts) = c.parts.ok_or_else(|| {
                    err(c.line, ParseErrorKind::MissingKey { key: "parts", id: c.id.to_string() })
                })?;
                let overrides = c
                    .overrides
                    .into_iter()
                    .map(|(line, benefit, rating, reason)| {
                        let reason = reason.ok_or_else(|| err(line, ParseErrorKind::OverrideWithoutReason(benefit)))?;
                        Ok(Override { benefit, rating, reason })
                    })
                    .collect::<Result<Vec<_>, ParseError>>()?;
                pending_parts.push((parts_line, parts.clone()));
                catalog.combined.push(CombinedScheme {
                    id: c.id,
                    name: c.name,
                    parts,
                    overrides,
                });
            }
            Record::Expect(e) => {
                if expected.insert(e.id.clone(), e.line).is_some() {
                    return Err(err(e.line, ParseErrorKind::DuplicateId(format!("expect {}", e.id))));
                }
                let missing = |key| err(e.line, ParseErrorKind::MissingKey { key, id: e.id.to_string() });
                let vsegment = e.vsegment.ok_or_else(|| missing("vsegment"))?;
                let hsegment = e.hsegment.ok_or_else(|| missing("hsegment"))?;
                pending_expect.push((e.line, e.id.clone()));
                catalog.expectations.push(ExpectedPlacement {
                    scheme: e.id,
                    vsegment,
                    hsegment,
                    x: e.x,
                    y: e.y,
                    errata: e.errata,
                });
            }
        }
    }

    for (line, parts) in pending_parts {
        if let Some(p) = parts.iter().find(|p| !base_ids.contains(*p)) {
            return Err(err(line, ParseErrorKind::DanglingPart(p.to_string())));
        }
    }
    for (line, id) in pending_expect {
        if !ids.contains(&id) {
            return Err(err(line, ParseErrorKind::DanglingExpectation(id.to_string())));
        }
    }

    catalog.normalize();
    Ok(catalog)
}

/// Parses and records `source` on the result.
pub fn parse_catalog_named(text: &str, source: impl Into<String>) -> Result<Catalog, ParseError> {
    let mut c = parse_catalog(text)?;
    c.source = source.into();
    Ok(c)
}

/// Canonical text: sections sorted by id, ratings in U1..M4 order, absent
/// ratings omitted, one blank line between records.
pub fn serialize_catalog(catalog: &Catalog) -> String {
    let mut c = catalog.clone();
    c.normalize();
    let mut blocks: Vec<String> = Vec::new();

    for s in &c.schemes {
        let mut b = String::new();
        let _ = writeln!(b, "[scheme {}]", s.id);
        let _ = writeln!(b, "name = {}", s.name);
        let _ = writeln!(b, "category = {}", s.category);
        if let Some(n) = &s.notes {
            let _ = writeln!(b, "notes = {n}");
        }
        for (id, r) in s.vector.offered() {
            let _ = writeln!(b, "{id} = {r}");
        }
        blocks.push(b);
    }
    for cs in &c.combined {
        let mut b = String::new();
        let _ = writeln!(b, "[combined {}]", cs.id);
        if let Some(n) = &cs.name {
            let _ = writeln!(b, "name = {n}");
        }
        let parts: Vec<&str> = cs.parts.iter().map(SchemeId::as_str).collect();
        let _ = writeln!(b, "parts = {}", parts.join(","));
        for o in &cs.overrides {
            let _ = writeln!(b, "override {} = {}", o.benefit, o.rating);
            let _ = writeln!(b, "reason = {}", o.reason);
        }
        blocks.push(b);
    }
    for e in &c.expectations {
        let mut b = String::new();
        let _ = writeln!(b, "[expect {}]", e.scheme);
        let _ = writeln!(b, "vsegment = {}", e.vsegment);
        let _ = writeln!(b, "hsegment = {}", e.hsegment);
        if let Some(x) = e.x {
            let _ = writeln!(b, "x = {}", Decimal(x));
        }
        if let Some(y) = e.y {
            let _ = writeln!(b, "y = {}", Decimal(y));
        }
        if let Some(t) = &e.errata {
            let _ = writeln!(b, "errata = {t}");
        }
        blocks.push(b);
    }
    blocks.join("\n")
}

/// Shortest round-tripping decimal without exponent notation.
pub(crate) struct Decimal(pub f64);

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // f64 Display never uses exponents and round-trips; normalize -0
        let v = if self.0 == 0.0 { 0.0 } else { self.0 };
        write!(f, "{v}")
    }
}

/// The built-in catalog: 18 stand-alone schemes, their combinations with
/// passwords, and expected chart positions.
pub fn reference_catalog() -> Catalog {
    parse_catalog_named(REFERENCE, "builtin").expect("embedded reference catalog parses")
}

/// Raw text of the built-in catalog.
pub fn reference_catalog_text() -> &'static str {
    REFERENCE
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(text: &str) -> (usize, ParseErrorKind) {
        let e = parse_catalog(text).unwrap_err();
        (e.line, e.kind)
    }

    #[test]
    fn minimal_record() {
        let c = parse_catalog("[scheme pw]\nname = Web passwords\ncategory = password\nU3 = full").unwrap();
        assert_eq!(c.schemes.len(), 1);
        let pw = &c.schemes[0];
        assert_eq!(pw.rating_of(BenefitId::U3), Rating::Full);
        assert_eq!(pw.vector.offered().count(), 1);
    }

    #[test]
    fn case_insensitive_benefits_and_comments() {
        let c = parse_catalog("# hi\n\n  [scheme a]\r\nname = A\ncategory = other\ns3 = partial\r\n").unwrap();
        assert_eq!(c.schemes[0].rating_of(BenefitId::S3), Rating::Partial);
    }

    #[test]
    fn bad_rating_names_line_and_token() {
        let e = parse_catalog("[scheme a]\nname = A\ncategory = other\nS3 = ful\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert_eq!(e.kind, ParseErrorKind::InvalidRating("ful".into()));
        assert!(e.to_string().contains("line 4") && e.to_string().contains("ful"));
    }

    #[test]
    fn scheme_rating_absent_is_not_a_rating_line() {
        assert_eq!(
            kind("[scheme a]\nname = A\ncategory = other\nS3 = absent\n"),
            (4, ParseErrorKind::InvalidRating("absent".into()))
        );
    }

    #[test]
    fn error_kinds() {
        assert_eq!(kind("[thing a]\n"), (1, ParseErrorKind::UnknownSection("thing".into())));
        assert_eq!(kind("[scheme]\n"), (1, ParseErrorKind::MalformedHeader("[scheme]".into())));
        assert_eq!(kind("[scheme A]\n"), (1, ParseErrorKind::InvalidId("A".into())));
        assert_eq!(kind("name = x\n"), (1, ParseErrorKind::OutsideRecord("name = x".into())));
        assert_eq!(
            kind("[scheme a]\nname = A\ncategory = other\nS12 = full\n"),
            (4, ParseErrorKind::UnknownBenefit("S12".into()))
        );
        assert_eq!(
            kind("[scheme a]\nname = A\ncategory = cats\n"),
            (3, ParseErrorKind::UnknownCategory("cats".into()))
        );
        assert_eq!(
            kind("[scheme a]\nname = A\n"),
            (1, ParseErrorKind::MissingKey { key: "category", id: "a".into() })
        );
        assert_eq!(
            kind("[scheme a]\nname = A\nname = B\n"),
            (3, ParseErrorKind::DuplicateKey("name".into()))
        );
        assert_eq!(kind("[scheme a]\nname\n"), (2, ParseErrorKind::MalformedLine("name".into())));
    }

    const TWO: &str = "[scheme a]\nname = A\ncategory = other\n[scheme b]\nname = B\ncategory = other\n";

    #[test]
    fn duplicate_ids_across_sections() {
        let text = format!("{TWO}[combined a]\nparts = a,b\n");
        assert_eq!(kind(&text), (7, ParseErrorKind::DuplicateId("a".into())));
    }

    #[test]
    fn dangling_part() {
        let text = format!("{TWO}[combined ab]\nparts = a,zz\n");
        assert_eq!(kind(&text), (8, ParseErrorKind::DanglingPart("zz".into())));
        let text = format!("{TWO}[combined ab]\nparts = a\n");
        assert_eq!(kind(&text), (8, ParseErrorKind::TooFewParts));
    }

    #[test]
    fn dangling_expectation() {
        let text = format!("{TWO}[expect q]\nvsegment = V1\nhsegment = none\n");
        assert_eq!(kind(&text), (7, ParseErrorKind::DanglingExpectation("q".into())));
    }

    #[test]
    fn override_needs_reason() {
        let text = format!("{TWO}[combined ab]\nparts = a,b\noverride S9 = absent\n");
        assert_eq!(kind(&text), (9, ParseErrorKind::OverrideWithoutReason(BenefitId::S9)));
        let text = format!("{TWO}[combined ab]\nparts = a,b\noverride S9 = absent\noverride S1 = full\nreason = x\n");
        assert_eq!(kind(&text), (10, ParseErrorKind::OverrideWithoutReason(BenefitId::S9)));
        let text = format!("{TWO}[combined ab]\nparts = a,b\nreason = x\n");
        assert_eq!(kind(&text), (9, ParseErrorKind::ReasonWithoutOverride));
    }

    #[test]
    fn combined_override_round_trip() {
        let text = format!("{TWO}[combined ab]\nparts = a,b\noverride s9 = absent\nreason = shared verifier\n");
        let c = parse_catalog(&text).unwrap();
        let out = serialize_catalog(&c);
        assert!(out.contains("override S9 = absent\nreason = shared verifier\n"), "{out}");
        assert_eq!(parse_catalog(&out).unwrap(), c);
    }

    #[test]
    fn all_absent_serializes_to_name_and_category() {
        let c = parse_catalog("[scheme a]\nname = A\ncategory = other\n").unwrap();
        assert_eq!(serialize_catalog(&c), "[scheme a]\nname = A\ncategory = other\n");
    }

    #[test]
    fn decimals() {
        assert_eq!(parse_decimal("10.4", 1), Ok(10.4));
        assert_eq!(parse_decimal("-2", 1), Ok(-2.0));
        for bad in ["", "1e5", "inf", "NaN", ".5", "5.", "+1", "1.2.3"] {
            assert!(parse_decimal(bad, 1).is_err(), "{bad}");
        }
        assert_eq!(Decimal(10.4).to_string(), "10.4");
        assert_eq!(Decimal(16.0).to_string(), "16");
        assert_eq!(Decimal(-0.0).to_string(), "0");
    }

    #[test]
    fn check_flags_programmatic_defects() {
        let mut c = parse_catalog(TWO).unwrap();
        assert_eq!(c.check(), Ok(()));
        c.schemes.push(c.schemes[0].clone());
        assert_eq!(c.check(), Err(CatalogError::DuplicateId("a".into())));
    }
}
