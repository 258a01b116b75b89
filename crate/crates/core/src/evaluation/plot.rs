//! Static SVG line plots of result tables.

use std::fmt::Write as _;

use super::{PlotMetric, ResultTable};
use crate::decimal::format_decimal;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 56.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"];

pub(super) fn line_plot(table: &ResultTable, metric: PlotMetric) -> String {
    let use_beta = table.aggregates().all(|r| r.beta.is_some());
    let x_of = |r: &super::ResultRow| if use_beta { r.beta.unwrap_or(0.0) } else { r.n as f64 };
    let y_of = |r: &super::ResultRow| match metric {
        PlotMetric::Outcome => r.outcome,
        PlotMetric::F1 => r.f1,
    };
    let xs: Vec<f64> = table.aggregates().map(x_of).collect();
    let x_min = xs.iter().copied().fold(f64::INFINITY, f64::min);
    let x_max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = if x_max > x_min { x_max - x_min } else { 1.0 };
    let sx = |x: f64| MARGIN + (x - x_min) / span * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - y.clamp(0.0, 1.0) * (HEIGHT - 2.0 * MARGIN);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (x0, y0, x1, y1) = (MARGIN, HEIGHT - MARGIN, WIDTH - MARGIN, MARGIN);
    let _ = writeln!(svg, r#"<path d="M{x0},{y1} L{x0},{y0} L{x1},{y0}" fill="none" stroke="black"/>"#);
    for tick in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let y = sy(tick);
        let _ = writeln!(svg, r#"<text x="{}" y="{}" text-anchor="end">{tick}</text>"#, x0 - 6.0, y + 4.0);
    }
    if xs.is_empty() {
        svg.push_str("</svg>\n");
        return svg;
    }
    for x in [x_min, x_max] {
        let _ =
            writeln!(svg, r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#, sx(x), y0 + 18.0, format_decimal(x));
    }
    let x_label = if use_beta { "beta" } else { "cascades" };
    let y_label = match metric {
        PlotMetric::Outcome => "success probability",
        PlotMetric::F1 => "F1",
    };
    let _ = writeln!(svg, r#"<text x="{}" y="{}" text-anchor="middle">{x_label}</text>"#, WIDTH / 2.0, HEIGHT - 12.0);
    let _ = writeln!(
        svg,
        r#"<text x="16" y="{}" text-anchor="middle" transform="rotate(-90 16 {})">{y_label}</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );

    for (idx, label) in table.experiments().iter().enumerate() {
        let color = COLORS[idx % COLORS.len()];
        let mut pts: Vec<(f64, f64)> =
            table.aggregates().filter(|r| &r.experiment == label).map(|r| (x_of(r), y_of(r))).collect();
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
        let _ =
            writeln!(svg, r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#, coords.join(" "));
        let ly = MARGIN + 16.0 * idx as f64;
        let _ = writeln!(svg, r#"<text x="{}" y="{ly}" fill="{color}">{label}</text>"#, x1 - 140.0);
    }
    svg.push_str("</svg>\n");
    svg
}
