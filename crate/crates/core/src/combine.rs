//! Benefit vector of a multi-factor scheme.
//!
//! A combined scheme keeps only the usability and deployability benefits
//! every factor offers (minimum) and gains every security benefit any factor
//! offers (maximum), except No-Trusted-Third-Party and Unlinkable, which a
//! single weak factor is enough to lose (minimum). On the three-valued scale
//! intersection and union are plain min and max.

use thiserror::Error;

use crate::benefit::{
    BenefitClass, BenefitId, BenefitVector, Category, Rating, SchemeId, SchemeProfile,
    SECURITY_MIN_EXCEPTIONS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombineError {
    #[error("a combined scheme needs at least two parts, got {0}")]
    TooFewParts(usize),
    #[error("unknown part `{0}`")]
    UnknownPart(String),
    #[error("override of {0} has no reason")]
    MissingReason(BenefitId),
}

/// How one benefit is merged across factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MergeRule {
    /// Minimum over parts.
    Intersection,
    /// Maximum over parts.
    Union,
}

pub fn merge_rule(b: BenefitId) -> MergeRule {
    match b.class() {
        BenefitClass::Usability | BenefitClass::Deployability => MergeRule::Intersection,
        _ if SECURITY_MIN_EXCEPTIONS.contains(&b) => MergeRule::Intersection,
        BenefitClass::Security | BenefitClass::Mimicry => MergeRule::Union,
    }
}

/// A manual correction to one cell of the operator's output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Override {
    pub benefit: BenefitId,
    pub rating: Rating,
    pub reason: String,
}

/// Declaration of a multi-factor scheme in terms of catalog ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinedScheme {
    pub id: SchemeId,
    /// Defaults to the part names joined by ` + `.
    pub name: Option<String>,
    pub parts: Vec<SchemeId>,
    pub overrides: Vec<Override>,
}

/// Pure combination rule, without overrides. `None` for an empty input.
pub fn combine_vectors<'a, I>(vectors: I) -> Option<BenefitVector>
where
    I: IntoIterator<Item = &'a BenefitVector>,
{
    vectors.into_iter().copied().reduce(|acc, v| {
        let mut out = BenefitVector::new();
        for b in BenefitId::ALL {
            let r = match merge_rule(b) {
                MergeRule::Intersection => acc.get(b).min(v.get(b)),
                MergeRule::Union => acc.get(b).max(v.get(b)),
            };
            out.set(b, r);
        }
        out
    })
}

/// Applies overrides in order; later overrides of the same benefit win.
pub fn apply_overrides(mut vector: BenefitVector, overrides: &[Override]) -> BenefitVector {
    for o in overrides {
        vector.set(o.benefit, o.rating);
    }
    vector
}

/// Builds the profile of a combined scheme.
///
/// The category is shared by all parts when they agree, `other` otherwise.
pub fn combine_profiles(
    id: SchemeId,
    name: Option<&str>,
    parts: &[&SchemeProfile],
    overrides: &[Override],
) -> Result<SchemeProfile, CombineError> {
    if parts.len() < 2 {
        return Err(CombineError::TooFewParts(parts.len()));
    }
    if let Some(o) = overrides.iter().find(|o| o.reason.trim().is_empty()) {
        return Err(CombineError::MissingReason(o.benefit));
    }
    let vector = combine_vectors(parts.iter().map(|p| &p.vector)).expect("at least two parts");
    let category = if parts.iter().all(|p| p.category == parts[0].category) {
        parts[0].category
    } else {
        Category::Other
    };
    let name = match name {
        Some(n) => n.to_string(),
        None => parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join(" + "),
    };
    Ok(SchemeProfile {
        id,
        name,
        category,
        vector: apply_overrides(vector, overrides),
        notes: None,
    })
}
