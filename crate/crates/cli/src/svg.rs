//! Self-contained SVG 1.1 figure of a polode trace.
//!
//! Layers are `<g>` groups with an `id`: `fixed-polode`, `moving-polode`,
//! `pole`, `inflection-circle`, `bresse`. The y axis is flipped so the
//! figure reads like the usual mathematical orientation.

use std::fmt::Write;

use symkin::bresse::Locus;
use symkin::Vec2;

use crate::analysis::Analysis;
use crate::fmt::num;
use crate::polodes::PolodeTrace;

#[derive(Clone, Copy, Debug)]
struct Bounds {
    min: Vec2,
    max: Vec2,
}

impl Bounds {
    fn empty() -> Self {
        Bounds { min: Vec2::new(f64::INFINITY, f64::INFINITY), max: Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY) }
    }

    fn add(&mut self, p: Vec2) {
        if !p.is_finite() {
            return;
        }
        self.min = Vec2::new(self.min.x.min(p.x), self.min.y.min(p.y));
        self.max = Vec2::new(self.max.x.max(p.x), self.max.y.max(p.y));
    }

    fn add_circle(&mut self, c: Vec2, r: f64) {
        self.add(c - Vec2::new(r, r));
        self.add(c + Vec2::new(r, r));
    }

    /// 5% margin on each side, span at least 1 in both directions.
    fn padded(self) -> Self {
        if !self.min.x.is_finite() {
            return Bounds { min: Vec2::new(-0.5, -0.5), max: Vec2::new(0.5, 0.5) };
        }
        let widen = |lo: f64, hi: f64| {
            let span = hi - lo;
            let (lo, hi) = if span < 1.0 {
                let mid = 0.5 * (lo + hi);
                (mid - 0.5, mid + 0.5)
            } else {
                (lo, hi)
            };
            let m = 0.05 * (hi - lo);
            (lo - m, hi + m)
        };
        let (x0, x1) = widen(self.min.x, self.max.x);
        let (y0, y1) = widen(self.min.y, self.max.y);
        Bounds { min: Vec2::new(x0, y0), max: Vec2::new(x1, y1) }
    }

    fn diag(&self) -> f64 {
        (self.max - self.min).norm()
    }
}

fn pt(p: Vec2) -> String {
    format!("{},{}", num(p.x), num(-p.y))
}

fn polyline(out: &mut String, id: &str, label: &str, colour: &str, pts: &[Vec2], stroke: f64) {
    let _ = writeln!(out, "  <g id=\"{id}\"><title>{label}</title>");
    // Split at gaps so degenerate samples leave holes instead of chords.
    for run in pts.split(|p| !p.is_finite()).filter(|r| !r.is_empty()) {
        let list: Vec<String> = run.iter().map(|p| pt(*p)).collect();
        let _ = writeln!(
            out,
            "    <polyline points=\"{}\" fill=\"none\" stroke=\"{colour}\" stroke-width=\"{}\"/>",
            list.join(" "),
            num(stroke)
        );
    }
    out.push_str("  </g>\n");
}

fn circle(out: &mut String, c: Vec2, r: f64, colour: &str, stroke: f64, dash: bool) {
    let dash = if dash { format!(" stroke-dasharray=\"{}\"", num(4.0 * stroke)) } else { String::new() };
    let _ = writeln!(
        out,
        "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"{colour}\" stroke-width=\"{}\"{dash}/>",
        num(c.x),
        num(-c.y),
        num(r),
        num(stroke)
    );
}

fn locus(out: &mut String, l: &Locus, half: f64, colour: &str, stroke: f64) {
    match *l {
        Locus::CircleThroughPole { p, d } => circle(out, p + d * 0.5, 0.5 * d.norm(), colour, stroke, true),
        Locus::LineThroughPole { p, dir } => {
            let dir = dir.normalized().unwrap_or(Vec2::new(1.0, 0.0)) * half;
            let (a, b) = (p - dir, p + dir);
            let _ = writeln!(
                out,
                "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{colour}\" stroke-width=\"{}\" stroke-dasharray=\"{}\"/>",
                num(a.x),
                num(-a.y),
                num(b.x),
                num(-b.y),
                num(stroke),
                num(4.0 * stroke)
            );
        }
        Locus::PointOnly { .. } | Locus::Degenerate => {}
    }
}

/// Renders the trace plus the instant `at` (analysed at the reference sample).
pub fn render(tr: &PolodeTrace, at: Option<&Analysis>) -> String {
    let fixed: Vec<Vec2> = tr.samples.iter().map(|s| s.points.as_ref().map_or(Vec2::new(f64::NAN, f64::NAN), |p| p.0)).collect();
    let moving: Vec<Vec2> = tr
        .samples
        .iter()
        .map(|s| s.points.as_ref().map_or(Vec2::new(f64::NAN, f64::NAN), |p| tr.carried(p.1)))
        .collect();

    let mut b = Bounds::empty();
    fixed.iter().chain(&moving).for_each(|p| b.add(*p));
    let mut circles: Vec<(Vec2, f64)> = Vec::new();
    if let Some(a) = at {
        if let Some(p) = a.pole {
            b.add(p);
        }
        if let (Some(p), Some(w)) = (a.pole, a.inflection_pole) {
            circles.push(((p + w) * 0.5, 0.5 * (w - p).norm()));
        }
        for (_, set) in &a.bresse {
            if let Ok(s) = set {
                if s.k <= 3 {
                    for l in [&s.zero_normal, &s.zero_tangential] {
                        if let Locus::CircleThroughPole { p, d } = l {
                            circles.push((*p + *d * 0.5, 0.5 * d.norm()));
                        }
                    }
                }
            }
        }
    }
    circles.iter().for_each(|(c, r)| b.add_circle(*c, *r));
    let b = b.padded();
    let stroke = b.diag() / 400.0;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        num(b.min.x),
        num(-b.max.y),
        num(b.max.x - b.min.x),
        num(b.max.y - b.min.y)
    );
    polyline(&mut out, "fixed-polode", "fixed polode", "#1f4e9c", &fixed, stroke);
    polyline(&mut out, "moving-polode", &format!("moving polode at parameter {}", num(tr.reference_param())), "#b5381f", &moving, stroke);
    if let Some(a) = at {
        out.push_str("  <g id=\"pole\"><title>pole</title>\n");
        if let Some(p) = a.pole {
            let _ = writeln!(out, "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#000000\"/>", num(p.x), num(-p.y), num(3.0 * stroke));
        }
        out.push_str("  </g>\n");
        out.push_str("  <g id=\"inflection-circle\"><title>inflection circle</title>\n");
        if let (Some(p), Some(w)) = (a.pole, a.inflection_pole) {
            circle(&mut out, (p + w) * 0.5, 0.5 * (w - p).norm(), "#2e8b57", stroke, false);
        }
        out.push_str("  </g>\n");
        out.push_str("  <g id=\"bresse\"><title>Bresse loci, orders 2 and 3</title>\n");
        let half = b.diag();
        for (_, set) in &a.bresse {
            match set {
                Ok(s) if s.k == 2 => locus(&mut out, &s.zero_tangential, half, "#7a4ea0", stroke),
                Ok(s) if s.k == 3 => {
                    locus(&mut out, &s.zero_normal, half, "#c28a00", stroke);
                    locus(&mut out, &s.zero_tangential, half, "#00868b", stroke);
                }
                _ => {}
            }
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn padding_enforces_minimum_span() {
        let mut b = Bounds::empty();
        b.add(Vec2::new(2.0, 2.0));
        let p = b.padded();
        assert!((p.max.x - p.min.x - 1.1).abs() < 1e-12);
        assert!((p.min.x + p.max.x - 4.0).abs() < 1e-12);
    }

    #[test]
    fn non_finite_points_are_ignored() {
        let mut b = Bounds::empty();
        b.add(Vec2::new(f64::NAN, 0.0));
        b.add(Vec2::new(0.0, 0.0));
        b.add(Vec2::new(4.0, -2.0));
        assert_eq!(b.min, Vec2::new(0.0, -2.0));
        assert_eq!(b.max, Vec2::new(4.0, 0.0));
    }
}
