//! SVG drawings of the real affine part of an arrangement over ℚ or a real quadratic field.
//!
//! The chosen line is sent to infinity by an exact change of coordinates. Floats appear only
//! when the final picture is laid out. Multiple points at infinity are drawn in a legend
//! strip below the plot.

use std::fmt::Write as _;

use thiserror::Error;

use crate::field::QuadScalar;
use crate::geometry::{lattice_of, Arrangement, GeomError, ProjLine};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RenderError {
    #[error("the arrangement lives over {0}, which has no real points")]
    NoRealSection(crate::field::FieldSpec),
    #[error("viewport has zero or negative extent")]
    DegenerateViewport,
    #[error("line {line} outside 1..{n}")]
    InfinityOutOfRange { line: usize, n: usize },
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// Axis-aligned box in affine coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub xmin: f64,
    pub ymin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Line sent to infinity; `None` keeps `z = 0` as the line at infinity.
    pub infinity: Option<usize>,
    /// `None` fits the finite multiple points with a 20% margin.
    pub viewport: Option<Viewport>,
    pub stroke_width: f64,
    pub marker_radius: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            infinity: None,
            viewport: None,
            stroke_width: 1.5,
            marker_radius: 4.0,
        }
    }
}

const CANVAS: f64 = 600.0;
const LEGEND_ROW: f64 = 24.0;

/// Moves line `inf` to `z = 0`: with `k` the pivot of `inf` and `p < q` the other indices,
/// the new coordinates are `(X_p, X_q, inf·X)`.
fn send_to_infinity(a: &Arrangement, inf: usize) -> Result<Arrangement, GeomError> {
    let l_inf = a.line(inf)?.coeffs().clone();
    let k = l_inf.iter().position(|c| !c.is_zero()).expect("normalized line");
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let (p, q) = (others[0], others[1]);
    let lines = a
        .lines()
        .iter()
        .map(|l| {
            let c = l.coeffs();
            let x = c[p].checked_sub(&c[k].checked_mul(&l_inf[p])?)?;
            let y = c[q].checked_sub(&c[k].checked_mul(&l_inf[q])?)?;
            ProjLine::new(x, y, c[k].clone())
        })
        .collect::<Result<Vec<_>, _>>()?;
    Arrangement::new(a.name(), a.field(), lines)
}

fn f(x: &QuadScalar) -> f64 {
    x.to_f64().expect("real field checked")
}

struct Marker {
    x: f64,
    y: f64,
    lines: Vec<usize>,
}

struct Ideal {
    direction: (f64, f64),
    lines: Vec<usize>,
}

fn fit(points: &[(f64, f64)]) -> Viewport {
    if points.is_empty() {
        return Viewport { xmin: -1.0, ymin: -1.0, xmax: 1.0, ymax: 1.0 };
    }
    let (mut xmin, mut ymin, mut xmax, mut ymax) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in points {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let mut w = xmax - xmin;
    let mut h = ymax - ymin;
    // keep both extents comparable so nothing collapses to a sliver
    let floor = (w.max(h) / 4.0).max(1.0);
    if w < floor {
        xmin -= (floor - w) / 2.0;
        w = floor;
    }
    if h < floor {
        ymin -= (floor - h) / 2.0;
        h = floor;
    }
    Viewport {
        xmin: xmin - 0.2 * w,
        ymin: ymin - 0.2 * h,
        xmax: xmin + 1.2 * w,
        ymax: ymin + 1.2 * h,
    }
}

/// Endpoints of `a x + b y + c = 0` inside the box, if it crosses it.
fn clip(a: f64, b: f64, c: f64, v: &Viewport) -> Option<((f64, f64), (f64, f64))> {
    let eps = 1e-12 * (v.xmax - v.xmin).max(v.ymax - v.ymin);
    let inside = |x: f64, y: f64| {
        x >= v.xmin - eps && x <= v.xmax + eps && y >= v.ymin - eps && y <= v.ymax + eps
    };
    let mut hits: Vec<(f64, f64)> = Vec::new();
    if b != 0.0 {
        for x in [v.xmin, v.xmax] {
            let y = -(a * x + c) / b;
            if inside(x, y) {
                hits.push((x, y));
            }
        }
    }
    if a != 0.0 {
        for y in [v.ymin, v.ymax] {
            let x = -(b * y + c) / a;
            if inside(x, y) {
                hits.push((x, y));
            }
        }
    }
    // order along the direction (-b, a)
    let key = |p: &(f64, f64)| -b * p.0 + a * p.1;
    let first = hits.iter().copied().min_by(|p, q| key(p).total_cmp(&key(q)))?;
    let last = hits.iter().copied().max_by(|p, q| key(p).total_cmp(&key(q)))?;
    (key(&last) - key(&first) > eps).then_some((first, last))
}

fn num(x: f64) -> String {
    let s = format!("{:.12}", x);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn join_labels(lines: &[usize]) -> String {
    lines.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Draws one segment per visible line and one marker per multiple point.
pub fn render_svg(a: &Arrangement, opts: &RenderOptions) -> Result<String, RenderError> {
    if !a.field().is_real() {
        return Err(RenderError::NoRealSection(a.field()));
    }
    if let Some(v) = &opts.viewport {
        if !(v.xmax > v.xmin && v.ymax > v.ymin) {
            return Err(RenderError::DegenerateViewport);
        }
    }
    let affine = match opts.infinity {
        Some(i) if i == 0 || i > a.n() => return Err(RenderError::InfinityOutOfRange { line: i, n: a.n() }),
        Some(i) => send_to_infinity(a, i)?,
        None => a.clone(),
    };
    let (lattice, _) = lattice_of(&affine)?;

    let mut finite_multiple = Vec::new();
    let mut finite_double = Vec::new();
    let mut ideal = Vec::new();
    for p in &lattice.points {
        let [x, y, z] = p.point.coords();
        let lines: Vec<usize> = p.incident.iter().copied().collect();
        if z.is_zero() {
            if lines.len() >= 3 {
                ideal.push(Ideal { direction: (f(x), f(y)), lines });
            }
            continue;
        }
        let inv = z.inv().map_err(GeomError::from)?;
        let (px, py) = (f(&x.checked_mul(&inv).map_err(GeomError::from)?), f(&y.checked_mul(&inv).map_err(GeomError::from)?));
        let m = Marker { x: px, y: py, lines };
        if m.lines.len() >= 3 {
            finite_multiple.push(m);
        } else {
            finite_double.push(m);
        }
    }
    let view = opts.viewport.unwrap_or_else(|| {
        let source = if finite_multiple.is_empty() { &finite_double } else { &finite_multiple };
        fit(&source.iter().map(|m| (m.x, m.y)).collect::<Vec<_>>())
    });

    let (w, h) = (view.xmax - view.xmin, view.ymax - view.ymin);
    let scale = CANVAS / w.max(h);
    let (cw, ch) = (w * scale, h * scale);
    let to_canvas = |x: f64, y: f64| ((x - view.xmin) * scale, (view.ymax - y) * scale);
    let legend = if ideal.is_empty() { 0.0 } else { LEGEND_ROW * (ideal.len() as f64 + 1.0) };

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(cw),
        h = num(ch + legend)
    )
    .unwrap();
    writeln!(s, "<title>{}</title>", xml_escape(a.name())).unwrap();
    writeln!(
        s,
        r##"<rect class="frame" x="0" y="0" width="{}" height="{}" fill="white" stroke="#888"/>"##,
        num(cw),
        num(ch)
    )
    .unwrap();

    writeln!(s, r#"<g class="lines" stroke="black" stroke-width="{}">"#, num(opts.stroke_width)).unwrap();
    for (k, l) in affine.lines().iter().enumerate() {
        let [la, lb, lc] = l.coeffs();
        if la.is_zero() && lb.is_zero() {
            continue;
        }
        let Some((p, q)) = clip(f(la), f(lb), f(lc), &view) else {
            continue;
        };
        let (x1, y1) = to_canvas(p.0, p.1);
        let (x2, y2) = to_canvas(q.0, q.1);
        writeln!(
            s,
            r#"<line class="line" data-label="{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            k + 1,
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();

    writeln!(s, r#"<g class="points" fill="red">"#).unwrap();
    for m in &finite_multiple {
        let inside = m.x >= view.xmin && m.x <= view.xmax && m.y >= view.ymin && m.y <= view.ymax;
        if !inside {
            continue;
        }
        let (cx, cy) = to_canvas(m.x, m.y);
        writeln!(
            s,
            r#"<circle class="point mult-{}" data-lines="{}" cx="{}" cy="{}" r="{}"/>"#,
            m.lines.len(),
            join_labels(&m.lines),
            num(cx),
            num(cy),
            num(opts.marker_radius)
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();

    if !ideal.is_empty() {
        writeln!(s, r#"<g class="ideal-points" font-family="sans-serif" font-size="12">"#).unwrap();
        writeln!(s, r#"<text x="8" y="{}">points at infinity</text>"#, num(ch + LEGEND_ROW * 0.7)).unwrap();
        for (k, p) in ideal.iter().enumerate() {
            let y = ch + LEGEND_ROW * (k as f64 + 1.5);
            writeln!(
                s,
                r#"<circle class="ideal mult-{}" data-lines="{}" cx="16" cy="{}" r="{}" fill="none" stroke="red"/>"#,
                p.lines.len(),
                join_labels(&p.lines),
                num(y),
                num(opts.marker_radius)
            )
            .unwrap();
            writeln!(
                s,
                r#"<text x="28" y="{}">direction ({}, {}): lines {}</text>"#,
                num(y + 4.0),
                num(p.direction.0),
                num(p.direction.1),
                join_labels(&p.lines)
            )
            .unwrap();
        }
        writeln!(s, "</g>").unwrap();
    }
    writeln!(s, "</svg>").unwrap();
    Ok(s)
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
