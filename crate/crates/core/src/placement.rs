//! Placement of a benefit vector on the exposure-resistance (vertical) by
//! mimicry-resistance (horizontal) chart.
//!
//! Each axis runs over three segments of six chart units. A segment is
//! chosen by gate benefits that must be fully offered; the position inside
//! a segment (its sublevel) is ranked by how many of the segment's governing
//! benefits are offered fully, then partially. One fully offered benefit
//! always outranks any number of partial ones.
//!
//! Sublevels never sit on a segment boundary, so no coordinate is ever 6,
//! 12 or 18.

use std::fmt;

use thiserror::Error;

use crate::benefit::{BenefitId, BenefitVector, Rating, SchemeProfile, V2_GATE, V3_GATE};

/// Chart units per segment along either axis.
pub const SEGMENT_SPAN: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlacementError {
    #[error("a segment needs at least one governing benefit")]
    NoBenefits,
    #[error("{full} full + {partial} partial exceeds {n} governing benefits")]
    InconsistentCounts { n: u32, full: u32, partial: u32 },
    #[error("all {n} governing benefits are full; the scheme belongs to the next segment")]
    SegmentComplete { n: u32 },
    #[error("sublevel {sublevel} outside 1..={max} for {segment}")]
    SublevelOutOfRange {
        segment: String,
        sublevel: u32,
        max: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerticalSegment {
    V1,
    V2,
    V3,
}

impl VerticalSegment {
    pub const ALL: [VerticalSegment; 3] = [VerticalSegment::V1, VerticalSegment::V2, VerticalSegment::V3];

    pub fn index(self) -> u32 {
        self as u32
    }

    pub fn label(self) -> &'static str {
        match self {
            VerticalSegment::V1 => "V1",
            VerticalSegment::V2 => "V2",
            VerticalSegment::V3 => "V3",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VerticalSegment::V1 => "Negligible-resistance/Guessable",
            VerticalSegment::V2 => "Guess-resistant/Leakable",
            VerticalSegment::V3 => "Leak-resistant",
        }
    }

    /// Benefits counted for sublevels. V2 counts the merged S6/S9 rating in
    /// S6's slot; see [`governing_ratings`].
    pub fn governing(self) -> &'static [BenefitId] {
        match self {
            VerticalSegment::V1 => &[BenefitId::S3, BenefitId::S4],
            VerticalSegment::V2 => &[BenefitId::S1, BenefitId::S5, BenefitId::S6, BenefitId::S7],
            VerticalSegment::V3 => &[BenefitId::S2, BenefitId::S8],
        }
    }

    pub fn sublevels(self) -> u32 {
        sublevel_count(self.governing().len() as u32).expect("governing sets are nonempty")
    }

    pub fn is_top(self) -> bool {
        self == VerticalSegment::V3
    }
}

impl fmt::Display for VerticalSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HorizontalSegment {
    OnAxis,
    H1,
    H2,
    H3,
}

impl HorizontalSegment {
    pub fn index(self) -> Option<u32> {
        match self {
            HorizontalSegment::OnAxis => None,
            HorizontalSegment::H1 => Some(0),
            HorizontalSegment::H2 => Some(1),
            HorizontalSegment::H3 => Some(2),
        }
    }

    /// `none` for the vertical axis, `H1`..`H3` otherwise.
    pub fn label(self) -> &'static str {
        match self {
            HorizontalSegment::OnAxis => "none",
            HorizontalSegment::H1 => "H1",
            HorizontalSegment::H2 => "H2",
            HorizontalSegment::H3 => "H3",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            HorizontalSegment::OnAxis => "No mimicry resistance",
            HorizontalSegment::H1 => "Infrequent intercept/capture resistant",
            HorizontalSegment::H2 => "Intercept/capture and reuse resistant",
            HorizontalSegment::H3 => "Spoof-resistant",
        }
    }

    pub fn governing(self) -> Option<BenefitId> {
        match self {
            HorizontalSegment::OnAxis => None,
            HorizontalSegment::H1 => Some(BenefitId::M2),
            HorizontalSegment::H2 => Some(BenefitId::M3),
            HorizontalSegment::H3 => Some(BenefitId::M4),
        }
    }
}

impl fmt::Display for HorizontalSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A point in chart units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartPoint {
    pub x: f64,
    pub y: f64,
}

impl ChartPoint {
    /// Coordinate-wise maximum.
    pub fn join(self, other: ChartPoint) -> ChartPoint {
        ChartPoint {
            x: self.x.max(other.x),
            y: self.y.max(other.y),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Placement {
    pub vseg: VerticalSegment,
    pub vsub: u32,
    pub hseg: HorizontalSegment,
    pub hsub: u32,
    pub x: f64,
    pub y: f64,
}

impl Placement {
    pub fn point(&self) -> ChartPoint {
        ChartPoint { x: self.x, y: self.y }
    }
}

/// Number of sublevels in a segment with `n` governing benefits:
/// `2 + 3 + ... + (n + 1)`.
pub fn sublevel_count(n: u32) -> Result<u32, PlacementError> {
    if n == 0 {
        return Err(PlacementError::NoBenefits);
    }
    Ok((n + 1) * (n + 2) / 2 - 1)
}

/// Sublevel (1-based) for `full` fully offered and `partial` partially
/// offered benefits out of `n`.
///
/// Sublevels are laid out in blocks by `full`: block `f` holds the
/// `n + 1 - f` possible partial counts. `full == n` would be the first
/// sublevel of the next segment and is rejected; callers at the top segment
/// clamp instead.
pub fn sublevel_from_counts(n: u32, full: u32, partial: u32) -> Result<u32, PlacementError> {
    if n == 0 {
        return Err(PlacementError::NoBenefits);
    }
    if full.checked_add(partial).is_none_or(|s| s > n) {
        return Err(PlacementError::InconsistentCounts { n, full, partial });
    }
    if full == n {
        return Err(PlacementError::SegmentComplete { n });
    }
    let preceding: u32 = (0..full).map(|f| n + 1 - f).sum();
    Ok(preceding + partial + 1)
}

pub fn vertical_segment(vector: &BenefitVector) -> VerticalSegment {
    let all_full = |set: &[BenefitId]| set.iter().all(|&b| vector.get(b) == Rating::Full);
    if !all_full(&V2_GATE) {
        VerticalSegment::V1
    } else if all_full(&V3_GATE) {
        VerticalSegment::V3
    } else {
        VerticalSegment::V2
    }
}

/// Ratings of the segment's governing benefits, with S6 replaced by the
/// merged S6/S9 rating inside V2.
pub fn governing_ratings(vector: &BenefitVector, vseg: VerticalSegment) -> Vec<Rating> {
    vseg.governing()
        .iter()
        .map(|&b| {
            if vseg == VerticalSegment::V2 && b == BenefitId::S6 {
                vector.merged_s6()
            } else {
                vector.get(b)
            }
        })
        .collect()
}

pub fn vertical_sublevel(vector: &BenefitVector, vseg: VerticalSegment) -> Result<u32, PlacementError> {
    let ratings = governing_ratings(vector, vseg);
    let n = ratings.len() as u32;
    let full = ratings.iter().filter(|&&r| r == Rating::Full).count() as u32;
    let partial = ratings.iter().filter(|&&r| r == Rating::Partial).count() as u32;
    match sublevel_from_counts(n, full, partial) {
        Err(PlacementError::SegmentComplete { .. }) if vseg.is_top() => sublevel_count(n),
        other => other,
    }
}

/// Segment picked by the strongest mimicry benefit offered at all, and its
/// sublevel (1 = partial, 2 = full; 0 on the axis).
pub fn horizontal_placement(vector: &BenefitVector) -> (HorizontalSegment, u32) {
    for seg in [HorizontalSegment::H3, HorizontalSegment::H2, HorizontalSegment::H1] {
        let b = seg.governing().expect("off-axis segments have a benefit");
        match vector.get(b) {
            Rating::Full => return (seg, 2),
            Rating::Partial => return (seg, 1),
            Rating::Absent => {}
        }
    }
    (HorizontalSegment::OnAxis, 0)
}

/// Chart coordinates of a (segment, sublevel) pair on each axis.
///
/// Vertical sublevels are spaced evenly with a gap at both segment edges:
/// `y = 6 * vindex + 6 * vsub / (count + 1)`. Horizontal sublevels sit at 2
/// and 4 units into their segment.
pub fn coordinates(
    vseg: VerticalSegment,
    vsub: u32,
    hseg: HorizontalSegment,
    hsub: u32,
) -> Result<(f64, f64), PlacementError> {
    let count = vseg.sublevels();
    if vsub == 0 || vsub > count {
        return Err(PlacementError::SublevelOutOfRange {
            segment: vseg.label().to_string(),
            sublevel: vsub,
            max: count,
        });
    }
    // single division keeps y correctly rounded (10.4, not 10.400000000000002)
    let y = f64::from(SEGMENT_SPAN * vseg.index() * (count + 1) + SEGMENT_SPAN * vsub) / f64::from(count + 1);

    let x = match hseg.index() {
        None if hsub == 0 => 0.0,
        Some(h) if (1..=2).contains(&hsub) => f64::from(SEGMENT_SPAN * h + 2 * hsub),
        _ => {
            return Err(PlacementError::SublevelOutOfRange {
                segment: hseg.label().to_string(),
                sublevel: hsub,
                max: if hseg == HorizontalSegment::OnAxis { 0 } else { 2 },
            })
        }
    };
    Ok((x, y))
}

pub fn place_vector(vector: &BenefitVector) -> Placement {
    let vseg = vertical_segment(vector);
    let vsub = vertical_sublevel(vector, vseg).expect("segment chosen by its own gates");
    let (hseg, hsub) = horizontal_placement(vector);
    let (x, y) = coordinates(vseg, vsub, hseg, hsub).expect("sublevels computed in range");
    Placement {
        vseg,
        vsub,
        hseg,
        hsub,
        x,
        y,
    }
}

pub fn place(profile: &SchemeProfile) -> Placement {
    place_vector(&profile.vector)
}

/// Chart point of a multi-factor scheme drawn from its factors' markers:
/// the larger x and the larger y.
pub fn combine_markers(a: &Placement, b: &Placement) -> ChartPoint {
    a.point().join(b.point())
}

/// [`combine_markers`] folded over any number of factors.
pub fn combine_marker_points<'a, I>(placements: I) -> Option<ChartPoint>
where
    I: IntoIterator<Item = &'a Placement>,
{
    placements.into_iter().map(Placement::point).reduce(ChartPoint::join)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benefit::BenefitId::*;
    use crate::benefit::Rating::{Full, Partial};

    fn vec_of(entries: &[(BenefitId, Rating)]) -> BenefitVector {
        entries.iter().fold(BenefitVector::new(), |v, &(b, r)| v.with(b, r))
    }

    #[test]
    fn sublevel_counts() {
        assert_eq!(sublevel_count(1), Ok(2));
        assert_eq!(sublevel_count(2), Ok(5));
        assert_eq!(sublevel_count(4), Ok(14));
        assert_eq!(sublevel_count(0), Err(PlacementError::NoBenefits));
        assert_eq!(VerticalSegment::V1.sublevels(), 5);
        assert_eq!(VerticalSegment::V2.sublevels(), 14);
        assert_eq!(VerticalSegment::V3.sublevels(), 5);
    }

    #[test]
    fn worked_sublevels() {
        assert_eq!(sublevel_from_counts(4, 0, 4), Ok(5));
        assert_eq!(sublevel_from_counts(4, 1, 1), Ok(7));
        assert_eq!(sublevel_from_counts(4, 0, 0), Ok(1));
        assert_eq!(sublevel_from_counts(2, 1, 0), Ok(4));
    }

    #[test]
    fn sublevel_errors() {
        assert!(matches!(
            sublevel_from_counts(2, 2, 1),
            Err(PlacementError::InconsistentCounts { .. })
        ));
        assert!(matches!(
            sublevel_from_counts(2, u32::MAX, 1),
            Err(PlacementError::InconsistentCounts { .. })
        ));
        assert_eq!(sublevel_from_counts(2, 2, 0), Err(PlacementError::SegmentComplete { n: 2 }));
        assert_eq!(sublevel_from_counts(0, 0, 0), Err(PlacementError::NoBenefits));
    }

    #[test]
    fn gates_require_full() {
        assert_eq!(vertical_segment(&BenefitVector::new()), VerticalSegment::V1);
        let v = vec_of(&[(S3, Full), (S4, Partial)]);
        assert_eq!(vertical_segment(&v), VerticalSegment::V1);
        let v = vec_of(&[(S3, Full), (S4, Full)]);
        assert_eq!(vertical_segment(&v), VerticalSegment::V2);
        let v = vec_of(&[(S1, Full), (S3, Full), (S4, Full), (S5, Full), (S6, Full), (S7, Full), (S9, Partial)]);
        assert_eq!(vertical_segment(&v), VerticalSegment::V2);
        let v = v.with(S9, Full);
        assert_eq!(vertical_segment(&v), VerticalSegment::V3);
    }

    #[test]
    fn top_segment_clamps() {
        let v = vec_of(&[
            (S1, Full), (S2, Full), (S3, Full), (S4, Full), (S5, Full),
            (S6, Full), (S7, Full), (S8, Full), (S9, Full),
        ]);
        let p = place_vector(&v);
        assert_eq!((p.vseg, p.vsub, p.y), (VerticalSegment::V3, 5, 17.0));
    }

    #[test]
    fn horizontal_priority() {
        assert_eq!(horizontal_placement(&vec_of(&[(M4, Full)])), (HorizontalSegment::H3, 2));
        assert_eq!(
            horizontal_placement(&vec_of(&[(M2, Full), (M3, Partial)])),
            (HorizontalSegment::H2, 1)
        );
        assert_eq!(horizontal_placement(&vec_of(&[(M2, Full)])), (HorizontalSegment::H1, 2));
        assert_eq!(horizontal_placement(&vec_of(&[(M1, Full)])), (HorizontalSegment::OnAxis, 0));
    }

    #[test]
    fn coordinate_examples() {
        use HorizontalSegment as H;
        use VerticalSegment as V;
        assert_eq!(coordinates(V::V3, 4, H::OnAxis, 0), Ok((0.0, 16.0)));
        assert_eq!(coordinates(V::V1, 1, H::H3, 2), Ok((16.0, 1.0)));
        assert_eq!(coordinates(V::V2, 11, H::H2, 2), Ok((10.0, 10.4)));
        assert_eq!(coordinates(V::V2, 1, H::H1, 1), Ok((2.0, 6.4)));
        assert_eq!(coordinates(V::V2, 14, H::H1, 1), Ok((2.0, 11.6)));
    }

    #[test]
    fn coordinate_range_errors() {
        use HorizontalSegment as H;
        use VerticalSegment as V;
        assert!(coordinates(V::V1, 0, H::OnAxis, 0).is_err());
        assert!(coordinates(V::V1, 6, H::OnAxis, 0).is_err());
        assert!(coordinates(V::V2, 15, H::OnAxis, 0).is_err());
        assert!(coordinates(V::V1, 1, H::OnAxis, 1).is_err());
        assert!(coordinates(V::V1, 1, H::H2, 0).is_err());
        assert!(coordinates(V::V1, 1, H::H2, 3).is_err());
    }

    #[test]
    fn marker_join() {
        let a = Placement {
            vseg: VerticalSegment::V1,
            vsub: 1,
            hseg: HorizontalSegment::H3,
            hsub: 2,
            x: 16.0,
            y: 1.0,
        };
        let b = Placement {
            vseg: VerticalSegment::V3,
            vsub: 4,
            hseg: HorizontalSegment::OnAxis,
            hsub: 0,
            x: 0.0,
            y: 16.0,
        };
        assert_eq!(combine_markers(&a, &b), ChartPoint { x: 16.0, y: 16.0 });
        assert_eq!(combine_markers(&a, &a), a.point());
        assert_eq!(combine_marker_points([&a, &b, &a]), Some(ChartPoint { x: 16.0, y: 16.0 }));
        assert_eq!(combine_marker_points(std::iter::empty()), None);
    }
}
