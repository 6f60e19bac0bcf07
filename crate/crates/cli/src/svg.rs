//! SVG rendering of walls in the `(beta, alpha)` half plane.
//!
//! This is the one place floating point is allowed: exact values are
//! converted to `f64` for pixel coordinates only, while every annotation
//! carries the exact value as text.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use tiltstab_core::scalar::QuadraticNumber;
use tiltstab_core::walls::Wall;

fn approx(x: &QuadraticNumber) -> f64 {
    let a = x.rational_part().to_f64().unwrap_or(0.0);
    let b = x.radical_coefficient().to_f64().unwrap_or(0.0);
    a + b * (x.radicand() as f64).sqrt()
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 40.0;

pub fn render_walls(walls: &[Wall]) -> String {
    let (mut lo, mut hi, mut top) = (-1.0f64, 1.0f64, 1.0f64);
    for w in walls {
        let c = approx(&w.center_beta);
        let r = approx(&w.radius);
        lo = lo.min(c - r - 0.5);
        hi = hi.max(c + r + 0.5);
        top = top.max(r + 0.5);
    }
    let sx = (WIDTH - 2.0 * MARGIN) / (hi - lo);
    let sy = (HEIGHT - 2.0 * MARGIN) / top;
    let px = |beta: f64| MARGIN + (beta - lo) * sx;
    let py = |alpha: f64| HEIGHT - MARGIN - alpha * sy;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    // axes: alpha = 0 baseline and the beta = 0 vertical when visible
    let _ = writeln!(
        out,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="1"/>"#,
        px(lo),
        py(0.0),
        px(hi),
        py(0.0)
    );
    if lo < 0.0 && hi > 0.0 {
        let _ = writeln!(
            out,
            r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#cccccc" stroke-width="1"/>"##,
            px(0.0),
            py(0.0),
            px(0.0),
            py(top)
        );
    }
    for (i, w) in walls.iter().enumerate() {
        let c = approx(&w.center_beta);
        let r = approx(&w.radius);
        let _ = writeln!(
            out,
            r##"<path d="M {:.2} {:.2} A {:.2} {:.2} 0 0 1 {:.2} {:.2}" fill="none" stroke="#1f5fbf" stroke-width="1.5"/>"##,
            px(c - r),
            py(0.0),
            r * sx,
            r * sy,
            px(c + r),
            py(0.0)
        );
        let _ = writeln!(
            out,
            r##"<text x="{:.2}" y="{:.2}" font-size="11" fill="#333333">center={} radius={}</text>"##,
            px(c),
            py(r) - 4.0,
            xml_escape(&w.center_beta.to_string()),
            xml_escape(&w.radius.to_string()),
        );
        let _ = i;
    }
    let _ = writeln!(
        out,
        r##"<text x="{:.2}" y="{:.2}" font-size="11" fill="#333333">beta</text>"##,
        px(hi) - 28.0,
        py(0.0) + 16.0
    );
    let _ = writeln!(out, "</svg>");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
