//! SVG pictures for the browser demo: a Munn-tree line for single words
//! and a layered drawing of a Cayley-graph ball.

use fim::cayley::{ball_edges, EdgeClass};
use fim::homology::weight;
use fim::monogenic::{enumerate_ball, normal_form, Gen, Interval};
use std::fmt::Write;

const CELL: f64 = 46.0;
const ROW: f64 = 84.0;
const GAP: f64 = 20.0;
const MARGIN: f64 = 28.0;
const RADIUS: f64 = 7.0;

/// Horizontal Munn-tree picture of a monogenic element: one circle per
/// integer from `a` to `b`, the out-vertex filled black, labels underneath
/// (the in-vertex is the one labelled 0).
pub fn munn_line_svg(m: Interval) -> String {
    let cells = m.size() + 1;
    let width = 2.0 * MARGIN + (cells - 1) as f64 * CELL;
    let height = 86.0;
    let y = 38.0;
    let x_of = |p: i64| MARGIN + (p - m.a()) as f64 * CELL;
    let mut svg = String::new();
    write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width:.0} {height:.0}\" \
         width=\"{width:.0}\" height=\"{height:.0}\" role=\"img\">"
    )
    .unwrap();
    if cells > 1 {
        write!(
            svg,
            "<line x1=\"{:.1}\" y1=\"{y}\" x2=\"{:.1}\" y2=\"{y}\" \
             stroke=\"#1a1a1a\" stroke-width=\"1.5\"/>",
            x_of(m.a()),
            x_of(m.b()),
        )
        .unwrap();
    }
    for p in m.a()..=m.b() {
        let fill = if p == m.t() { "#1a1a1a" } else { "#ffffff" };
        write!(
            svg,
            "<circle cx=\"{:.1}\" cy=\"{y}\" r=\"{RADIUS}\" fill=\"{fill}\" \
             stroke=\"#1a1a1a\" stroke-width=\"1.5\"/>\
             <text x=\"{:.1}\" y=\"{:.0}\" text-anchor=\"middle\" \
             font-size=\"13\" font-family=\"inherit\" fill=\"#444444\">{p}</text>",
            x_of(p),
            x_of(p),
            y + 32.0,
        )
        .unwrap();
    }
    svg.push_str("</svg>");
    svg
}

fn row_width(s: i64) -> f64 {
    (s + 1).pow(2) as f64 * CELL + s as f64 * GAP
}

/// Vertex position in the layered ball drawing: rows indexed by size, each
/// row split into its strongly connected components ordered by `a`
/// ascending, vertices within a component ordered by `t`.
fn position(m: Interval, max_size: i64) -> (f64, f64) {
    let s = m.size();
    let x0 = MARGIN + (row_width(max_size) - row_width(s)) / 2.0;
    let group = (m.a() + s) as f64;
    let index = (m.t() - m.a()) as f64;
    let x = x0 + group * ((s + 1) as f64 * CELL + GAP) + (index + 0.5) * CELL;
    let y = MARGIN + 14.0 + s as f64 * ROW;
    (x, y)
}

fn edge_style(class: EdgeClass) -> (&'static str, &'static str) {
    match class {
        EdgeClass::Tree => ("#1a1a1a", ""),
        EdgeClass::Strong => ("#2563eb", " stroke-dasharray=\"6 3\""),
        EdgeClass::Transition => ("#dc2626", " stroke-width=\"2.5\""),
    }
}

/// Layered SVG of the ball of radius `n`: tree edges black, strong edges
/// blue dashed, transition edges red with their weight printed at the
/// midpoint. Same-row edge pairs bow apart so the two directions stay
/// visible; every vertex carries its normal form as a tooltip.
pub fn ball_svg(n: i64) -> String {
    let width = 2.0 * MARGIN + row_width(n);
    let height = 2.0 * MARGIN + 28.0 + n as f64 * ROW;
    let mut svg = String::new();
    write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width:.0} {height:.0}\" \
         width=\"{width:.0}\" height=\"{height:.0}\" role=\"img\">"
    )
    .unwrap();
    for marker in ["tree", "strong", "transition"] {
        let color = match marker {
            "tree" => "#1a1a1a",
            "strong" => "#2563eb",
            _ => "#dc2626",
        };
        write!(
            svg,
            "<defs><marker id=\"arrow-{marker}\" viewBox=\"0 0 8 8\" refX=\"7\" refY=\"4\" \
             markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">\
             <path d=\"M0,0 L8,4 L0,8 z\" fill=\"{color}\"/></marker></defs>"
        )
        .unwrap();
    }
    for (e, class) in ball_edges(n) {
        let (x1, y1) = position(e.source, n);
        let (x2, y2) = position(e.target(), n);
        let (color, extra) = edge_style(class);
        let class_name = match class {
            EdgeClass::Tree => "tree",
            EdgeClass::Strong => "strong",
            EdgeClass::Transition => "transition",
        };
        // Shorten toward the target so arrowheads sit outside the circle.
        let (dx, dy) = (x2 - x1, y2 - y1);
        let len = (dx * dx + dy * dy).sqrt().max(1.0);
        let (tx, ty) = (x2 - dx / len * (RADIUS + 2.0), y2 - dy / len * (RADIUS + 2.0));
        let (sx, sy) = (x1 + dx / len * (RADIUS + 2.0), y1 + dy / len * (RADIUS + 2.0));
        if (y1 - y2).abs() < 0.5 {
            // Same row: antiparallel pairs exist, so bow x-edges up and
            // y-edges down.
            let bow = if e.gen == Gen::X { -14.0 } else { 14.0 };
            write!(
                svg,
                "<path d=\"M{sx:.1},{sy:.1} Q{:.1},{:.1} {tx:.1},{ty:.1}\" fill=\"none\" \
                 stroke=\"{color}\"{extra} marker-end=\"url(#arrow-{class_name})\"/>",
                (sx + tx) / 2.0,
                sy + bow,
            )
            .unwrap();
        } else {
            write!(
                svg,
                "<line x1=\"{sx:.1}\" y1=\"{sy:.1}\" x2=\"{tx:.1}\" y2=\"{ty:.1}\" \
                 stroke=\"{color}\"{extra} marker-end=\"url(#arrow-{class_name})\"/>"
            )
            .unwrap();
        }
        if class == EdgeClass::Transition {
            let w = weight(&e).expect("transition edges have a weight");
            write!(
                svg,
                "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\" font-size=\"12\" \
                 font-family=\"inherit\" fill=\"#dc2626\">w={w}</text>",
                (x1 + x2) / 2.0 + 12.0,
                (y1 + y2) / 2.0,
            )
            .unwrap();
        }
    }
    for m in enumerate_ball(n) {
        let (x, y) = position(m, n);
        let fill = if m.is_identity() { "#1a1a1a" } else { "#ffffff" };
        write!(
            svg,
            "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"{RADIUS}\" fill=\"{fill}\" \
             stroke=\"#1a1a1a\" stroke-width=\"1.5\"><title>{} {m}</title></circle>",
            normal_form(m),
        )
        .unwrap();
    }
    svg.push_str("</svg>");
    svg
}
