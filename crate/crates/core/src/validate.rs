//! Catalog lints.
//!
//! | rule | severity       | checks                                                    |
//! |------|----------------|-----------------------------------------------------------|
//! | R1   | error          | duplicate ids, dangling parts or expectations            |
//! | R2   | warning        | mimicry hierarchy, `M2 >= M3 >= M4`                       |
//! | R3   | error/warning  | computed segment (error) or coordinate (warning) mismatch |
//! | R4   | warning        | override that restates what the operator already yields   |
//! | R5   | info           | S10/S11/M1 offered; these never move a scheme             |

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::benefit::{BenefitId, SchemeProfile, PLACEMENT_NEUTRAL};
use crate::catalog::Catalog;
use crate::combine::combine_vectors;
use crate::placement::place;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Info,
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Info => "info",
            Severity::Warning => "warning",
            Severity::Error => "error",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LintFinding {
    pub rule: Rule,
    pub severity: Severity,
    pub scheme: String,
    pub message: String,
}

impl fmt::Display for LintFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}: {}", self.severity, self.rule, self.scheme, self.message)
    }
}

fn finding(rule: Rule, severity: Severity, scheme: impl Into<String>, message: impl Into<String>) -> LintFinding {
    LintFinding {
        rule,
        severity,
        scheme: scheme.into(),
        message: message.into(),
    }
}

/// Runs every rule. Findings are sorted by rule, then scheme id.
pub fn validate(catalog: &Catalog) -> Vec<LintFinding> {
    let mut out = Vec::new();
    let profiles = check_structure(catalog, &mut out);

    for p in &profiles {
        check_mimicry_hierarchy(p, &mut out);
        check_neutral_benefits(p, &mut out);
    }
    check_expectations(catalog, &profiles, &mut out);
    check_redundant_overrides(catalog, &mut out);

    out.sort_by(|a, b| {
        (a.rule, &a.scheme, std::cmp::Reverse(a.severity), &a.message).cmp(&(
            b.rule,
            &b.scheme,
            std::cmp::Reverse(b.severity),
            &b.message,
        ))
    });
    out
}

pub fn error_count(findings: &[LintFinding]) -> usize {
    findings.iter().filter(|f| f.severity == Severity::Error).count()
}

/// R1. Returns the profiles that could be resolved.
fn check_structure(catalog: &Catalog, out: &mut Vec<LintFinding>) -> Vec<SchemeProfile> {
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for id in catalog
        .schemes
        .iter()
        .map(|s| s.id.as_str())
        .chain(catalog.combined.iter().map(|c| c.id.as_str()))
    {
        *counts.entry(id).or_default() += 1;
    }
    let mut reported = HashSet::new();
    for (id, n) in &counts {
        if *n > 1 && reported.insert(*id) {
            out.push(finding(Rule::R1, Severity::Error, *id, format!("id declared {n} times")));
        }
    }

    let mut profiles = catalog.schemes.clone();
    for c in &catalog.combined {
        match catalog.resolve(c) {
            Ok(p) => profiles.push(p),
            Err(e) => out.push(finding(Rule::R1, Severity::Error, c.id.as_str(), e.to_string())),
        }
    }

    let mut seen = HashSet::new();
    for e in &catalog.expectations {
        if !catalog.contains(e.scheme.as_str()) {
            out.push(finding(Rule::R1, Severity::Error, e.scheme.as_str(), "expectation for unknown scheme"));
        } else if !seen.insert(e.scheme.as_str()) {
            out.push(finding(Rule::R1, Severity::Error, e.scheme.as_str(), "more than one expectation"));
        }
    }
    profiles
}

/// R2.
fn check_mimicry_hierarchy(p: &SchemeProfile, out: &mut Vec<LintFinding>) {
    let (m2, m3, m4) = (p.rating_of(BenefitId::M2), p.rating_of(BenefitId::M3), p.rating_of(BenefitId::M4));
    if !(m2 >= m3 && m3 >= m4) {
        out.push(finding(
            Rule::R2,
            Severity::Warning,
            p.id.as_str(),
            format!("mimicry benefits not cumulative (M2={m2}, M3={m3}, M4={m4})"),
        ));
    }
}

/// R5.
fn check_neutral_benefits(p: &SchemeProfile, out: &mut Vec<LintFinding>) {
    let offered: Vec<String> = PLACEMENT_NEUTRAL
        .iter()
        .filter(|&&b| p.rating_of(b).is_offered())
        .map(|b| b.to_string())
        .collect();
    if !offered.is_empty() {
        out.push(finding(
            Rule::R5,
            Severity::Info,
            p.id.as_str(),
            format!("{} offered but not used for placement", offered.join(", ")),
        ));
    }
}

/// R3.
fn check_expectations(catalog: &Catalog, profiles: &[SchemeProfile], out: &mut Vec<LintFinding>) {
    for e in &catalog.expectations {
        let Some(p) = profiles.iter().find(|p| p.id == e.scheme) else {
            continue;
        };
        let got = place(p);
        if got.vseg != e.vsegment || got.hseg != e.hsegment {
            out.push(finding(
                Rule::R3,
                Severity::Error,
                e.scheme.as_str(),
                format!(
                    "expected {}/{}, computed {}/{}",
                    e.vsegment, e.hsegment, got.vseg, got.hseg
                ),
            ));
        }
        let mismatch = |want: Option<f64>, have: f64| want.is_some_and(|w| w != have);
        if mismatch(e.x, got.x) || mismatch(e.y, got.y) {
            let show = |v: Option<f64>| v.map_or("-".to_string(), |v| v.to_string());
            out.push(finding(
                Rule::R3,
                Severity::Warning,
                e.scheme.as_str(),
                format!(
                    "expected ({}, {}), computed ({}, {})",
                    show(e.x),
                    show(e.y),
                    got.x,
                    got.y
                ),
            ));
        }
    }
}

/// R4.
fn check_redundant_overrides(catalog: &Catalog, out: &mut Vec<LintFinding>) {
    for c in &catalog.combined {
        let parts: Option<Vec<_>> = c.parts.iter().map(|id| catalog.scheme(id.as_str())).collect();
        let Some(base) = parts.and_then(|ps| combine_vectors(ps.iter().map(|p| &p.vector))) else {
            continue;
        };
        for o in &c.overrides {
            if base.get(o.benefit) == o.rating {
                out.push(finding(
                    Rule::R4,
                    Severity::Warning,
                    c.id.as_str(),
                    format!("override {} = {} matches the combined result", o.benefit, o.rating),
                ));
            }
        }
    }
}
