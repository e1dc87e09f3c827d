//! Minimal static SVG rendering for the principal plane and the
//! correlation circle.

use std::fmt::Write;

use ndarray::Array2;

const SIZE: f64 = 600.0;
const MARGIN: f64 = 50.0;
const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn color_for(label: i64) -> &'static str {
    PALETTE[label.rem_euclid(PALETTE.len() as i64) as usize]
}

/// Scatter of the first two score columns (the second axis is zero when
/// only one component exists), colored by label when given.
pub fn scatter_svg(scores: &Array2<f64>, labels: Option<&[i64]>, title: &str) -> String {
    let n = scores.nrows();
    let coord = |i: usize, s: usize| {
        if s < scores.ncols() {
            scores[[i, s]]
        } else {
            0.0
        }
    };
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for i in 0..n {
        xmin = xmin.min(coord(i, 0));
        xmax = xmax.max(coord(i, 0));
        ymin = ymin.min(coord(i, 1));
        ymax = ymax.max(coord(i, 1));
    }
    let span = |lo: f64, hi: f64| if hi > lo { hi - lo } else { 1.0 };
    let (xs, ys) = (span(xmin, xmax), span(ymin, ymax));
    let inner = SIZE - 2.0 * MARGIN;
    let px = |v: f64| MARGIN + (v - xmin) / xs * inner;
    let py = |v: f64| SIZE - MARGIN - (v - ymin) / ys * inner;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<rect x="{MARGIN}" y="{MARGIN}" width="{inner}" height="{inner}" fill="none" stroke="black"/>"#
    );
    let _ = writeln!(
        out,
        r#"<text x="{}" y="30" text-anchor="middle" font-family="sans-serif" font-size="16">{}</text>"#,
        SIZE / 2.0,
        escape(title)
    );
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle" font-family="sans-serif" font-size="12">PC1</text>"#,
        SIZE / 2.0,
        SIZE - 15.0
    );
    let _ = writeln!(
        out,
        r#"<text x="15" y="{}" text-anchor="middle" font-family="sans-serif" font-size="12" transform="rotate(-90 15 {})">PC2</text>"#,
        SIZE / 2.0,
        SIZE / 2.0
    );
    for i in 0..n {
        let fill = labels.map_or(PALETTE[0], |l| color_for(l[i]));
        let _ = writeln!(
            out,
            r#"<circle cx="{:.2}" cy="{:.2}" r="2" fill="{fill}" fill-opacity="0.7"/>"#,
            px(coord(i, 0)),
            py(coord(i, 1))
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Unit circle with one labeled arrow per variable, using the first two
/// circle columns.
pub fn circle_svg(circle: &Array2<f64>, names: &[String]) -> String {
    let center = SIZE / 2.0;
    let radius = SIZE / 2.0 - MARGIN;
    let coord = |j: usize, s: usize| {
        if s < circle.ncols() {
            circle[[j, s]]
        } else {
            0.0
        }
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r##"<defs><marker id="head" markerWidth="8" markerHeight="8" refX="6" refY="3" orient="auto"><path d="M0,0 L6,3 L0,6 z" fill="#d62728"/></marker></defs>"##
    );
    let _ = writeln!(
        out,
        r#"<circle cx="{center}" cy="{center}" r="{radius}" fill="none" stroke="black"/>"#
    );
    let _ = writeln!(
        out,
        r#"<line x1="{MARGIN}" y1="{center}" x2="{}" y2="{center}" stroke="gray" stroke-dasharray="4"/>"#,
        SIZE - MARGIN
    );
    let _ = writeln!(
        out,
        r#"<line x1="{center}" y1="{MARGIN}" x2="{center}" y2="{}" stroke="gray" stroke-dasharray="4"/>"#,
        SIZE - MARGIN
    );
    for (j, name) in names.iter().enumerate() {
        let x = center + coord(j, 0) * radius;
        let y = center - coord(j, 1) * radius;
        let _ = writeln!(
            out,
            r##"<line x1="{center}" y1="{center}" x2="{x:.2}" y2="{y:.2}" stroke="#d62728" marker-end="url(#head)"/>"##
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12">{}</text>"#,
            x + 4.0,
            y - 4.0,
            escape(name)
        );
    }
    out.push_str("</svg>\n");
    out
}
