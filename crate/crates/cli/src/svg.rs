//! Deterministic SVG figures.

use std::fmt::Write as _;

use equidissect::construction::Configuration;
use equidissect::dissection::Dissection;
use equidissect::exactnum::{format_decimal, BigRational, FieldElem};
use equidissect::geom2d::{Point, Polygon, RigidMotion};

pub const PALETTE: [&str; 12] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
    "#86bcb6", "#d4a6c8",
];

const STYLE: &str = "polygon { stroke: #222; stroke-width: 1px; vector-effect: non-scaling-stroke; stroke-linejoin: round; }\n\
.region { fill: none; stroke: #000; stroke-width: 2px; }\n\
.piece { fill-opacity: 0.85; }\n\
.shape { fill-opacity: 0.35; }\n\
.label { font-family: serif; font-style: italic; fill: #000; }\n\
.dot { fill: #000; }";

const PIXELS: f64 = 640.0;

fn num(e: &FieldElem) -> String {
    let eps = BigRational::new(1.into(), 1_000_000_000_000i64.into());
    let iv = e.to_interval(&eps).expect("positive tolerance");
    format_decimal(&iv.midpoint(), 6)
}

fn points_attr(p: &Polygon, shift: &RigidMotion) -> String {
    p.vertices()
        .iter()
        .map(|v| {
            let v = shift.apply(v);
            format!("{},{}", num(&v.x), num(&-v.y))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Exact bounding box `(min, max)` of a set of points.
fn bbox<'a>(pts: impl Iterator<Item = &'a Point>) -> (Point, Point) {
    let mut it = pts;
    let first = it.next().expect("at least one point").clone();
    let (mut lo, mut hi) = (first.clone(), first);
    for p in it {
        if p.x < lo.x {
            lo.x = p.x.clone();
        }
        if p.y < lo.y {
            lo.y = p.y.clone();
        }
        if p.x > hi.x {
            hi.x = p.x.clone();
        }
        if p.y > hi.y {
            hi.y = p.y.clone();
        }
    }
    (lo, hi)
}

struct Canvas {
    body: String,
    lo: Point,
    hi: Point,
}

impl Canvas {
    fn new(lo: Point, hi: Point) -> Canvas {
        Canvas { body: String::new(), lo, hi }
    }

    fn span(&self) -> FieldElem {
        let w = &self.hi.x - &self.lo.x;
        let h = &self.hi.y - &self.lo.y;
        if w > h {
            w
        } else {
            h
        }
    }

    fn finish(self) -> String {
        let pad_x = (&self.hi.x - &self.lo.x) * FieldElem::ratio(1, 20);
        let pad_y = (&self.hi.y - &self.lo.y) * FieldElem::ratio(1, 20);
        let x0 = &self.lo.x - &pad_x;
        let top = -(&self.hi.y + &pad_y);
        let w = &self.hi.x - &self.lo.x + &pad_x * FieldElem::from_int(2);
        let h = &self.hi.y - &self.lo.y + &pad_y * FieldElem::from_int(2);
        let height = PIXELS * h.to_f64() / w.to_f64();
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{PIXELS:.0}\" height=\"{height:.0}\" viewBox=\"{} {} {} {}\">",
            num(&x0),
            num(&top),
            num(&w),
            num(&h)
        );
        let _ = writeln!(out, "<style>\n{STYLE}\n</style>");
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

/// Subscripts digits after the first letter: `C1` -> `C₁`, `ABC2DC1` -> `ABC₂DC₁`.
pub fn pretty_label(s: &str) -> String {
    s.chars()
        .map(|c| match c.to_digit(10) {
            Some(d) => char::from_u32(0x2080 + d).unwrap_or(c),
            None => c,
        })
        .collect()
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// The configuration: pentagon, three equilaterals, parallelogram and the
/// right triangle, with the six named points.
pub fn configuration_svg(cfg: &Configuration) -> String {
    let polys = cfg.named_polygons();
    let all_pts: Vec<&Point> = polys.iter().flat_map(|(_, p)| p.vertices()).collect();
    let (lo, hi) = bbox(all_pts.into_iter());
    let mut c = Canvas::new(lo, hi);
    let id = RigidMotion::identity();
    c.body.push_str("<g class=\"figure\">\n");
    for (i, (name, p)) in polys.iter().enumerate() {
        let class = if i == 0 { "region" } else { "shape" };
        let _ = writeln!(
            c.body,
            "<g id=\"{name}\"><title>{}</title><polygon class=\"{class}\" fill=\"{}\" points=\"{}\"/></g>",
            escape(&pretty_label(name)),
            PALETTE[i % PALETTE.len()],
            points_attr(p, &id)
        );
    }
    c.body.push_str("</g>\n");
    let size = c.span() * FieldElem::ratio(1, 25);
    let radius = &size * FieldElem::ratio(1, 6);
    let _ = writeln!(c.body, "<g class=\"labels\" font-size=\"{}\">", num(&size));
    for (name, p) in cfg.named_points() {
        let _ = writeln!(
            c.body,
            "<circle class=\"dot\" cx=\"{x}\" cy=\"{y}\" r=\"{r}\"/><text class=\"label\" x=\"{tx}\" y=\"{ty}\">{}</text>",
            escape(&pretty_label(name)),
            x = num(&p.x),
            y = num(&-&p.y),
            r = num(&radius),
            tx = num(&(&p.x + &radius * FieldElem::from_int(2))),
            ty = num(&(-&p.y - &radius * FieldElem::from_int(2))),
        );
    }
    c.body.push_str("</g>\n");
    c.finish()
}

/// Sources with their pieces on the left, targets with the placed pieces on
/// the right; a piece has the same colour on both sides.
pub fn dissection_svg(d: &Dissection) -> String {
    let (s_lo, s_hi) = bbox(d.sources.iter().flat_map(|p| p.vertices()));
    let (t_lo, t_hi) = bbox(d.targets.iter().flat_map(|p| p.vertices()));
    let gap = {
        let a = &s_hi.x - &s_lo.x;
        let b = &t_hi.x - &t_lo.x;
        (if a > b { a } else { b }) * FieldElem::ratio(1, 5)
    };
    let shift = RigidMotion::translation(Point {
        x: &s_hi.x + &gap - &t_lo.x,
        y: &s_lo.y - &t_lo.y,
    });
    let moved_hi = shift.apply(&t_hi);
    let hi = Point {
        x: moved_hi.x,
        y: if moved_hi.y > s_hi.y { moved_hi.y } else { s_hi.y.clone() },
    };
    let mut c = Canvas::new(s_lo, hi);
    let id = RigidMotion::identity();
    let _ = writeln!(c.body, "<g class=\"sources\">");
    for (i, p) in d.pieces.iter().enumerate() {
        let _ = writeln!(
            c.body,
            "<polygon class=\"piece\" fill=\"{}\" points=\"{}\"><title>piece {i}</title></polygon>",
            PALETTE[i % PALETTE.len()],
            points_attr(&p.shape, &id)
        );
    }
    for s in &d.sources {
        let _ = writeln!(c.body, "<polygon class=\"region\" points=\"{}\"/>", points_attr(s, &id));
    }
    c.body.push_str("</g>\n<g class=\"targets\">\n");
    for (i, p) in d.pieces.iter().enumerate() {
        if let Some(placed) = p.placed() {
            let _ = writeln!(
                c.body,
                "<polygon class=\"piece\" fill=\"{}\" points=\"{}\"><title>piece {i}</title></polygon>",
                PALETTE[i % PALETTE.len()],
                points_attr(&placed, &shift)
            );
        }
    }
    for t in &d.targets {
        let _ = writeln!(c.body, "<polygon class=\"region\" points=\"{}\"/>", points_attr(t, &shift));
    }
    c.body.push_str("</g>\n");
    c.finish()
}
