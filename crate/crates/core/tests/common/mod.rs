//! Shared oracles, strategies and properties for the integration suites.

#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use udsmap::benefit::{BenefitId, BenefitVector, Category, Rating, SchemeId, SchemeProfile};
use udsmap::catalog::{Catalog, ExpectedPlacement};
use udsmap::combine::{combine_vectors, merge_rule, CombinedScheme, MergeRule, Override};
use udsmap::placement::{place_vector, HorizontalSegment, VerticalSegment};

pub const MATRIX: &str = include_str!("../data/benefit_matrix.txt");

/// Rows of the transcribed benefit matrix, in file order.
pub fn matrix_rows() -> Vec<(String, BenefitVector)> {
    MATRIX
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut fields = l.split_whitespace();
            let id = fields.next().expect("id").to_string();
            let cells: String = fields.collect();
            assert_eq!(cells.len(), 31, "row {id}");
            let mut v = BenefitVector::new();
            for (b, c) in BenefitId::ALL.iter().zip(cells.chars()) {
                let r = match c {
                    'F' => Rating::Full,
                    'P' => Rating::Partial,
                    '.' => Rating::Absent,
                    other => panic!("row {id}: bad cell {other:?}"),
                };
                v.set(*b, r);
            }
            (id, v)
        })
        .collect()
}

/// Sublevel by enumeration: every rating assignment of `n` benefits, reduced
/// to distinct (full, partial) counts with full < n, ranked by full first.
pub fn brute_force_sublevels(n: u32) -> Vec<((u32, u32), u32)> {
    let mut pairs = BTreeSet::new();
    for code in 0..3u32.pow(n) {
        let (mut full, mut partial, mut c) = (0, 0, code);
        for _ in 0..n {
            match c % 3 {
                2 => full += 1,
                1 => partial += 1,
                _ => {}
            }
            c /= 3;
        }
        if full < n {
            pairs.insert((full, partial));
        }
    }
    pairs.into_iter().zip(1..).collect()
}

pub fn rating() -> impl Strategy<Value = Rating> {
    prop_oneof![Just(Rating::Absent), Just(Rating::Partial), Just(Rating::Full)]
}

pub fn vector() -> impl Strategy<Value = BenefitVector> {
    proptest::collection::vec(0usize..3, 31).prop_map(|codes| {
        let mut v = BenefitVector::new();
        for (b, c) in BenefitId::ALL.iter().zip(codes) {
            v.set(*b, Rating::ALL[c]);
        }
        v
    })
}

/// A vector and a pointwise upgrade of it.
pub fn vector_and_upgrade() -> impl Strategy<Value = (BenefitVector, BenefitVector)> {
    (vector(), vector()).prop_map(|(v, u)| {
        let mut w = v;
        for b in BenefitId::ALL {
            w.set(b, v.get(b).max(u.get(b)));
        }
        (v, w)
    })
}

fn combine2(a: &BenefitVector, b: &BenefitVector) -> BenefitVector {
    combine_vectors([a, b]).expect("two inputs")
}

pub fn prop_lattice_laws(a: BenefitVector, b: BenefitVector, c: BenefitVector) -> Result<(), TestCaseError> {
    prop_assert_eq!(combine2(&a, &b), combine2(&b, &a));
    prop_assert_eq!(combine2(&combine2(&a, &b), &c), combine2(&a, &combine2(&b, &c)));
    prop_assert_eq!(combine2(&a, &a), a);
    prop_assert_eq!(combine_vectors([&a, &b, &c]).unwrap(), combine2(&combine2(&a, &b), &c));
    Ok(())
}

/// Union benefits never drop below any part; intersection benefits never
/// rise above any part.
pub fn prop_dominance(a: BenefitVector, b: BenefitVector) -> Result<(), TestCaseError> {
    let c = combine2(&a, &b);
    for id in BenefitId::ALL {
        match merge_rule(id) {
            MergeRule::Union => prop_assert!(c.get(id) >= a.get(id) && c.get(id) >= b.get(id), "{}", id),
            MergeRule::Intersection => prop_assert!(c.get(id) <= a.get(id) && c.get(id) <= b.get(id), "{}", id),
        }
    }
    Ok(())
}

pub fn prop_monotone(v: BenefitVector, w: BenefitVector) -> Result<(), TestCaseError> {
    let (pv, pw) = (place_vector(&v), place_vector(&w));
    prop_assert!(pw.x >= pv.x, "x {} -> {}", pv.x, pw.x);
    prop_assert!(pw.y >= pv.y, "y {} -> {}", pv.y, pw.y);
    prop_assert!(pw.vseg >= pv.vseg);
    Ok(())
}

pub fn prop_bounds(v: BenefitVector) -> Result<(), TestCaseError> {
    let p = place_vector(&v);
    prop_assert!([0.0, 2.0, 4.0, 8.0, 10.0, 14.0, 16.0].contains(&p.x), "x = {}", p.x);
    let lo = 6.0 * f64::from(p.vseg.index());
    prop_assert!(p.y > lo && p.y < lo + 6.0, "y = {} in {}", p.y, p.vseg);
    for boundary in [6.0, 12.0, 18.0] {
        prop_assert!(p.x != boundary && p.y != boundary);
    }
    prop_assert!(p.vsub >= 1 && p.vsub <= p.vseg.sublevels());
    prop_assert_eq!(p.hseg == HorizontalSegment::OnAxis, p.hsub == 0);
    Ok(())
}

pub fn prop_sublevel_oracle(n: u32, ratings: Vec<Rating>) -> Result<(), TestCaseError> {
    let ratings = &ratings[..n as usize];
    let full = ratings.iter().filter(|&&r| r == Rating::Full).count() as u32;
    let partial = ratings.iter().filter(|&&r| r == Rating::Partial).count() as u32;
    let table = brute_force_sublevels(n);
    prop_assert_eq!(table.len() as u32, udsmap::placement::sublevel_count(n).unwrap());
    let got = udsmap::placement::sublevel_from_counts(n, full, partial);
    match table.iter().find(|(fp, _)| *fp == (full, partial)) {
        Some((_, want)) => prop_assert_eq!(got, Ok(*want)),
        None => prop_assert!(got.is_err()),
    }
    Ok(())
}

fn id_token() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_-]{0,6}"
}

fn text_value() -> impl Strategy<Value = String> {
    "[A-Za-z0-9][A-Za-z0-9 +,.()/&-]{0,14}[A-Za-z0-9)]"
}

fn category() -> impl Strategy<Value = Category> {
    proptest::sample::select(Category::ALL.to_vec())
}

fn vsegment() -> impl Strategy<Value = VerticalSegment> {
    proptest::sample::select(VerticalSegment::ALL.to_vec())
}

fn hsegment() -> impl Strategy<Value = HorizontalSegment> {
    proptest::sample::select(vec![
        HorizontalSegment::OnAxis,
        HorizontalSegment::H1,
        HorizontalSegment::H2,
        HorizontalSegment::H3,
    ])
}

/// Structurally valid catalogs with unique ids.
pub fn catalog() -> impl Strategy<Value = Catalog> {
    let schemes = proptest::collection::btree_map(
        id_token(),
        (text_value(), category(), proptest::option::of(text_value()), vector()),
        2..6,
    );
    schemes
        .prop_flat_map(|schemes| {
            let ids: Vec<String> = schemes.keys().cloned().collect();
            let n = ids.len();
            let combined = proptest::collection::vec(
                (
                    proptest::sample::subsequence(ids.clone(), 2..=n),
                    proptest::option::of(text_value()),
                    proptest::collection::btree_map(
                        proptest::sample::select(BenefitId::ALL.to_vec()),
                        (rating(), text_value()),
                        0..3,
                    ),
                ),
                0..3,
            );
            let expectations = proptest::collection::btree_map(
                proptest::sample::select(ids),
                (
                    vsegment(),
                    hsegment(),
                    proptest::option::of(-1000.0..1000.0f64),
                    proptest::option::of(-1000.0..1000.0f64),
                    proptest::option::of(text_value()),
                ),
                0..3,
            );
            (Just(schemes), combined, expectations)
        })
        .prop_map(|(schemes, combined, expectations)| {
            let mut c = Catalog::default();
            for (id, (name, category, notes, vector)) in schemes {
                let mut p = SchemeProfile::new(SchemeId::new(id).unwrap(), name, category);
                p.notes = notes;
                p.vector = vector;
                c.schemes.push(p);
            }
            for (i, (parts, name, overrides)) in combined.into_iter().enumerate() {
                c.combined.push(CombinedScheme {
                    id: SchemeId::new(format!("x-combo{i}")).unwrap(),
                    name,
                    parts: parts.into_iter().map(|p| SchemeId::new(p).unwrap()).collect(),
                    overrides: overrides
                        .into_iter()
                        .map(|(benefit, (rating, reason))| Override { benefit, rating, reason })
                        .collect(),
                });
            }
            for (id, (vsegment, hsegment, x, y, errata)) in expectations {
                c.expectations.push(ExpectedPlacement {
                    scheme: SchemeId::new(id).unwrap(),
                    vsegment,
                    hsegment,
                    x,
                    y,
                    errata,
                });
            }
            c.normalize();
            c
        })
}
