//! SVG rendering of the exposure/mimicry chart.
//!
//! Framework units run from the origin at the bottom left; the transform to
//! pixels is affine, with y flipped. Schemes sharing a point share a marker
//! whose label lists every name there.

use std::fmt::Write as _;

use crate::benefit::SchemeProfile;
use crate::catalog::{Catalog, CatalogError};
use crate::placement::{place, ChartPoint, HorizontalSegment, VerticalSegment, SEGMENT_SPAN};

#[derive(Debug, Clone, PartialEq)]
pub struct ChartConfig {
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    /// Both axes run from 0 to this value.
    pub axis_max: f64,
    /// Ascending.
    pub band_radii: [f64; 3],
    /// Fills for `band_radii`, innermost first.
    pub band_fills: [String; 3],
    pub gridlines: [f64; 3],
    pub grid_opacity: f64,
    pub marker_radius: f64,
    pub font_size: f64,
    pub captions: bool,
    /// Also draw resolved combined schemes, as diamonds.
    pub include_combined: bool,
    /// Emit non-ASCII label characters as character references.
    pub ascii_labels: bool,
}

impl Default for ChartConfig {
    fn default() -> Self {
        ChartConfig {
            width: 640.0,
            height: 640.0,
            margin: 60.0,
            axis_max: 19.0,
            band_radii: [6.0, 12.0, 18.0],
            band_fills: ["#d9d9d9".into(), "#e8e8e8".into(), "#f5f5f5".into()],
            gridlines: [6.0, 12.0, 18.0],
            grid_opacity: 0.4,
            marker_radius: 5.0,
            font_size: 11.0,
            captions: true,
            include_combined: false,
            ascii_labels: false,
        }
    }
}

impl ChartConfig {
    fn scale_x(&self) -> f64 {
        (self.width - 2.0 * self.margin) / self.axis_max
    }

    fn scale_y(&self) -> f64 {
        (self.height - 2.0 * self.margin) / self.axis_max
    }

    /// Pixel position of a framework point.
    pub fn to_pixels(&self, p: ChartPoint) -> (f64, f64) {
        (
            self.margin + p.x * self.scale_x(),
            self.height - self.margin - p.y * self.scale_y(),
        )
    }
}

/// Schemes drawn at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct Marker {
    pub point: ChartPoint,
    pub combined: bool,
    pub names: Vec<String>,
}

impl Marker {
    pub fn label(&self) -> String {
        self.names.join(", ")
    }
}

fn coalesce(mut profiles: Vec<SchemeProfile>, combined: bool) -> Vec<Marker> {
    profiles.sort_by_key(|p| (p.category, p.id.clone()));
    let mut markers: Vec<Marker> = Vec::new();
    for p in &profiles {
        let point = place(p).point();
        match markers.iter_mut().find(|m| m.point == point) {
            Some(m) => m.names.push(p.name.clone()),
            None => markers.push(Marker {
                point,
                combined,
                names: vec![p.name.clone()],
            }),
        }
    }
    markers.sort_by(|a, b| (a.point.y, a.point.x).partial_cmp(&(b.point.y, b.point.x)).expect("finite"));
    markers
}

/// Markers in paint order: base schemes, then combined ones if enabled.
pub fn markers(catalog: &Catalog, config: &ChartConfig) -> Result<Vec<Marker>, CatalogError> {
    let mut out = coalesce(catalog.schemes.clone(), false);
    if config.include_combined {
        out.extend(coalesce(catalog.resolved_combined()?, true));
    }
    Ok(out)
}

fn escape(s: &str, ascii: bool) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c if ascii && !c.is_ascii() => {
                let _ = write!(out, "&#x{:X};", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

pub fn render_svg(catalog: &Catalog, config: &ChartConfig) -> Result<String, CatalogError> {
    let markers = markers(catalog, config)?;
    let c = config;
    let px = |x: f64, y: f64| c.to_pixels(ChartPoint { x, y });
    let (ox, oy) = px(0.0, 0.0);
    let (ex, ey) = px(c.axis_max, c.axis_max);
    let fs = c.font_size;
    let text = |s: &str| escape(s, c.ascii_labels);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{:.2}" height="{:.2}" viewBox="0 0 {:.2} {:.2}" font-family="sans-serif" font-size="{:.2}">"#,
        c.width, c.height, c.width, c.height, fs
    );
    let _ = writeln!(s, r#"<rect width="{:.2}" height="{:.2}" fill="white"/>"#, c.width, c.height);

    // outermost band first so the darker ones paint over it
    for (r, fill) in c.band_radii.iter().zip(&c.band_fills).rev() {
        let (rx, _) = px(*r, 0.0);
        let (_, ry) = px(0.0, *r);
        let _ = writeln!(
            s,
            r#"<path class="band" d="M {ox:.2} {oy:.2} L {rx:.2} {oy:.2} A {:.2} {:.2} 0 0 0 {ox:.2} {ry:.2} Z" fill="{}"/>"#,
            rx - ox,
            oy - ry,
            text(fill)
        );
    }

    for g in c.gridlines {
        let (gx, _) = px(g, 0.0);
        let _ = writeln!(
            s,
            r#"<line class="grid" x1="{gx:.2}" y1="{oy:.2}" x2="{gx:.2}" y2="{ey:.2}" stroke="black" stroke-dasharray="4 4" stroke-opacity="{}"/>"#,
            c.grid_opacity
        );
    }
    for g in c.gridlines {
        let (_, gy) = px(0.0, g);
        let _ = writeln!(
            s,
            r#"<line class="grid" x1="{ox:.2}" y1="{gy:.2}" x2="{ex:.2}" y2="{gy:.2}" stroke="black" stroke-dasharray="4 4" stroke-opacity="{}"/>"#,
            c.grid_opacity
        );
    }

    let _ = writeln!(s, r#"<line class="axis" x1="{ox:.2}" y1="{oy:.2}" x2="{ex:.2}" y2="{oy:.2}" stroke="black"/>"#);
    let _ = writeln!(s, r#"<line class="axis" x1="{ox:.2}" y1="{oy:.2}" x2="{ox:.2}" y2="{ey:.2}" stroke="black"/>"#);
    let _ = writeln!(
        s,
        r#"<text class="axis-label" x="{:.2}" y="{:.2}" text-anchor="middle">Mimicry Resistance</text>"#,
        (ox + ex) / 2.0,
        oy + 2.0 * fs + 20.0
    );
    let (lx, ly) = (c.margin / 2.0 - fs, (oy + ey) / 2.0);
    let _ = writeln!(
        s,
        r#"<text class="axis-label" x="{lx:.2}" y="{ly:.2}" text-anchor="middle" transform="rotate(-90 {lx:.2} {ly:.2})">Exposure Resistance</text>"#
    );

    if c.captions {
        let span = f64::from(SEGMENT_SPAN);
        for h in [HorizontalSegment::H1, HorizontalSegment::H2, HorizontalSegment::H3] {
            let mid = span * f64::from(h.index().expect("off-axis")) + span / 2.0;
            let (hx, _) = px(mid, 0.0);
            let _ = writeln!(
                s,
                r#"<text class="caption" x="{hx:.2}" y="{:.2}" text-anchor="middle"><title>{}</title>{}</text>"#,
                oy + fs + 6.0,
                text(h.name()),
                h.label()
            );
        }
        for v in VerticalSegment::ALL {
            let mid = span * f64::from(v.index()) + span / 2.0;
            let (_, vy) = px(0.0, mid);
            let _ = writeln!(
                s,
                r#"<text class="caption" x="{:.2}" y="{vy:.2}" text-anchor="end"><title>{}</title>{}</text>"#,
                ox - 6.0,
                text(v.name()),
                v.label()
            );
        }
    }

    let r = c.marker_radius;
    for m in &markers {
        let (mx, my) = c.to_pixels(m.point);
        let shape = if m.combined {
            format!(
                r#"<path d="M {mx:.2} {:.2} L {:.2} {my:.2} L {mx:.2} {:.2} L {:.2} {my:.2} Z" fill="white" stroke="black"/>"#,
                my - r * 1.3,
                mx + r * 1.3,
                my + r * 1.3,
                mx - r * 1.3
            )
        } else {
            format!(r#"<circle cx="{mx:.2}" cy="{my:.2}" r="{r:.2}" fill="black"/>"#)
        };
        let _ = writeln!(
            s,
            r#"<g class="{}">{shape}<text class="label" x="{:.2}" y="{:.2}">{}</text></g>"#,
            if m.combined { "marker combined" } else { "marker" },
            mx + r + 3.0,
            my - r,
            text(&m.label())
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
