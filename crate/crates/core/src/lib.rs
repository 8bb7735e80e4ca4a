//! Placement of web-authentication schemes on a two-dimensional chart of
//! exposure resistance against mimicry resistance.
//!
//! A scheme is a vector of 31 three-valued benefit ratings. From it the
//! crate computes a vertical segment and sublevel, a horizontal segment and
//! sublevel, and chart coordinates. Multi-factor schemes are derived from
//! their factors. Catalogs of schemes are read from a small record format
//! and rendered as tables or an SVG chart.
//!
//! ```
//! use udsmap::catalog::reference_catalog;
//! use udsmap::placement::place;
//!
//! let catalog = reference_catalog();
//! let l4 = catalog.scheme("l4").unwrap();
//! let p = place(l4);
//! assert_eq!((p.x, p.y), (16.0, 1.0));
//! ```

pub mod benefit;
pub mod catalog;
pub mod chart;
pub mod cli;
pub mod combine;
pub mod placement;
pub mod report;
pub mod validate;

pub use benefit::{BenefitClass, BenefitId, BenefitVector, Category, Rating, SchemeId, SchemeProfile};
pub use catalog::{parse_catalog, reference_catalog, serialize_catalog, Catalog, ParseError};
pub use combine::{combine_profiles, CombinedScheme, Override};
pub use placement::{place, ChartPoint, HorizontalSegment, Placement, VerticalSegment};
pub use validate::{validate, LintFinding, Rule, Severity};
