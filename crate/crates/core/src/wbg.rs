//! Constructive Wallace–Bolyai–Gerwien dissections.
//!
//! Every polygon set is cut into the width-1 canonical rectangle of the same
//! area: triangulate, turn each triangle into a rectangle on its longest side,
//! retarget each rectangle to width 1, and stack. Two sets of equal area are
//! then joined through their common canonical rectangle.

use rayon::prelude::*;

use crate::construction::{build, RightTriangleInput};
use crate::dissection::{compose, inverse, Dissection, Piece};
use crate::exactnum::{BigRational, FieldElem, NumError, DEFAULT_MAX_TOWER_DEPTH};
use crate::geom2d::{triangulate, GeomError, Point, Polygon, RigidMotion};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WbgConfig {
    pub max_tower_depth: usize,
}

impl Default for WbgConfig {
    fn default() -> WbgConfig {
        WbgConfig {
            max_tower_depth: DEFAULT_MAX_TOWER_DEPTH,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WbgError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("target width must be positive")]
    InvalidWidth,
    #[error("not an axis-aligned rectangle")]
    NotARectangle,
    #[error("areas differ: sources {source_area}, targets {target_area}")]
    AreaMismatch {
        source_area: FieldElem,
        target_area: FieldElem,
    },
    #[error("tower depth {depth} exceeds the limit {limit}")]
    TowerLimitExceeded { depth: usize, limit: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl From<GeomError> for WbgError {
    fn from(e: GeomError) -> WbgError {
        WbgError::DegenerateInput(e.to_string())
    }
}

fn int(n: i64) -> FieldElem {
    FieldElem::from_int(n)
}

fn origin_rect(w: &FieldElem, h: &FieldElem) -> Polygon {
    Polygon::rectangle(&FieldElem::zero(), &FieldElem::zero(), w, h).expect("positive sides")
}

/// `[0, 1] x [0, h]`.
pub fn canonical_rect(h: &FieldElem) -> Polygon {
    origin_rect(&FieldElem::one(), h)
}

fn check_depth(d: Dissection, cfg: &WbgConfig) -> Result<Dissection, WbgError> {
    let depth = d.stats().max_tower_depth;
    if depth > cfg.max_tower_depth {
        return Err(WbgError::TowerLimitExceeded {
            depth,
            limit: cfg.max_tower_depth,
        });
    }
    Ok(d)
}

/// `(x0, y0, width, height)` when `p` is an axis-aligned rectangle.
pub fn axis_rect(p: &Polygon) -> Option<(FieldElem, FieldElem, FieldElem, FieldElem)> {
    let v = p.vertices();
    if v.len() != 4 {
        return None;
    }
    let aligned = v[0].y == v[1].y && v[1].x == v[2].x && v[2].y == v[3].y && v[3].x == v[0].x;
    aligned.then(|| (v[0].x.clone(), v[0].y.clone(), &v[1].x - &v[0].x, &v[3].y - &v[0].y))
}

/// Pieces of `d` re-expressed for a source moved by `src` and a target moved by `dst`.
fn reposition(d: &Dissection, src: &RigidMotion, dst: &RigidMotion) -> Vec<Piece> {
    let back = src.invert();
    d.pieces
        .iter()
        .map(|p| {
            Piece::new(
                p.shape.transform(src),
                p.source_index,
                dst.compose(&p.motion.compose(&back)),
                p.target_index,
            )
        })
        .collect()
}

/// Rectangle on the longest side of `t`, at half the altitude, in three pieces:
/// the trapezoid under the midline and the two halves of the cap, each turned
/// a half turn about a midpoint. The result is rotated so the base lies on the
/// positive x-axis from the origin, which adjoins the base length to the tower.
pub fn triangle_to_rect(t: &Polygon, cfg: &WbgConfig) -> Result<Dissection, WbgError> {
    if t.len() != 3 {
        return Err(WbgError::InvalidInput(format!("expected a triangle, got {} vertices", t.len())));
    }
    let v = t.vertices();
    let longest = (0..3)
        .max_by(|&i, &j| v[i].dist2(&v[(i + 1) % 3]).cmp(&v[j].dist2(&v[(j + 1) % 3])).then(j.cmp(&i)))
        .expect("three sides");
    // Counter-clockwise order puts the apex on the left of A -> B.
    let a = &v[longest];
    let b = &v[(longest + 1) % 3];
    let c = &v[(longest + 2) % 3];
    let ab = b.sub(a);
    let len2 = ab.norm2();
    let foot = a.add(&ab.scale(&(c.sub(a).dot(&ab) / &len2)));
    let m = a.midpoint(c);
    let n = b.midpoint(c);
    let p = c.midpoint(&foot);

    let len = len2.sqrt_adjoin_limited(cfg.max_tower_depth).map_err(|e| match e {
        NumError::TowerLimitExceeded { depth, limit } => WbgError::TowerLimitExceeded { depth, limit },
        other => WbgError::InvalidInput(other.to_string()),
    })?;
    let cos = &ab.x / &len;
    let sin = -(&ab.y / &len);
    let rot = RigidMotion::from_raw_parts(cos, sin, Point::origin());
    let shift = rot.apply(a);
    let align = RigidMotion::translation(Point { x: -shift.x, y: -shift.y }).compose(&rot);

    let height = t.area() / &len;
    let target = origin_rect(&len, &height);
    let pieces = vec![
        Piece::new(Polygon::new(vec![a.clone(), b.clone(), n.clone(), m.clone()])?, 0, align.clone(), 0),
        Piece::new(
            Polygon::new(vec![m.clone(), p.clone(), c.clone()])?,
            0,
            align.compose(&RigidMotion::half_turn(&m)),
            0,
        ),
        Piece::new(
            Polygon::new(vec![p, n.clone(), c.clone()])?,
            0,
            align.compose(&RigidMotion::half_turn(&n)),
            0,
        ),
    ];
    check_depth(Dissection::new(vec![t.clone()], vec![target], pieces).expect("indices"), cfg)
}

/// `[0, u] x [0, h]` to width `w` for `w <= u <= 2w`.
fn slide(u: &FieldElem, h: &FieldElem, w: &FieldElem) -> Dissection {
    let big_h = u * h / w;
    let source = origin_rect(u, h);
    let target = origin_rect(w, &big_h);
    let zero = FieldElem::zero();
    let pt = |x: &FieldElem, y: &FieldElem| Point { x: x.clone(), y: y.clone() };
    let pieces = if u == w {
        vec![Piece::new(source.clone(), 0, RigidMotion::identity(), 0)]
    } else if *u == int(2) * w {
        // Plain halving: lift the right half onto the left.
        vec![
            Piece::new(origin_rect(w, h), 0, RigidMotion::identity(), 0),
            Piece::new(
                Polygon::rectangle(w, &zero, w, h).expect("positive sides"),
                0,
                RigidMotion::translation(pt(&-w, h)),
                0,
            ),
        ]
    } else {
        let rise = &big_h - h;
        let step = u - w;
        let body = Polygon::new(vec![
            pt(&zero, &zero),
            pt(w, &zero),
            pt(w, &rise),
            pt(&step, h),
            pt(&zero, h),
        ])
        .expect("slide body");
        let lower = Polygon::new(vec![pt(w, &zero), pt(u, &zero), pt(w, &rise)]).expect("slide wedge");
        let upper = Polygon::new(vec![pt(&step, h), pt(u, h), pt(u, &zero)]).expect("slide wedge");
        vec![
            Piece::new(body, 0, RigidMotion::identity(), 0),
            Piece::new(lower, 0, RigidMotion::translation(pt(&-w, h)), 0),
            Piece::new(upper, 0, RigidMotion::translation(pt(&-step, &rise)), 0),
        ]
    };
    Dissection {
        sources: vec![source],
        targets: vec![target],
        pieces,
    }
}

/// `[0, u] x [0, h]` to width `w` for `u > 2w`: vertical strips of width
/// `u / 2^k`, each slid to width `w`, stacked.
fn halve(u: &FieldElem, h: &FieldElem, w: &FieldElem) -> Dissection {
    let mut strips = 1i64;
    while *u > int(2 * strips) * w {
        strips *= 2;
    }
    let strip_w = u / &int(strips);
    let one = slide(&strip_w, h, w);
    let strip_h = &strip_w * h / w;
    let zero = FieldElem::zero();
    let pieces = (0..strips)
        .flat_map(|i| {
            let src = RigidMotion::translation(Point { x: &strip_w * &int(i), y: zero.clone() });
            let dst = RigidMotion::translation(Point { x: zero.clone(), y: &strip_h * &int(i) });
            reposition(&one, &src, &dst)
        })
        .collect();
    Dissection {
        sources: vec![origin_rect(u, h)],
        targets: vec![origin_rect(w, &(u * h / w))],
        pieces,
    }
}

/// Slides needed to bring width `u` into `[w/2, 2w]`.
fn halvings(u: &FieldElem, w: &FieldElem) -> u32 {
    let mut k = 0;
    let mut lo = w * &FieldElem::ratio(1, 2);
    let mut hi = w * &int(2);
    while u > &hi || u < &lo {
        k += 1;
        hi = &hi * &int(2);
        lo = &lo * &FieldElem::ratio(1, 2);
    }
    k
}

fn width_no_turn(u: &FieldElem, h: &FieldElem, w: &FieldElem) -> Dissection {
    let two_w = w * &int(2);
    if u >= w && *u <= two_w {
        slide(u, h, w)
    } else if *u > two_w {
        halve(u, h, w)
    } else {
        // Narrower than w: run the wide case backwards.
        let big_h = u * h / w;
        let wide = if u * &int(2) >= *w { slide(w, &big_h, u) } else { halve(w, &big_h, u) };
        inverse(&wide)
    }
}

/// `[0, u] x [0, h]` to `[0, w] x [0, uh/w]`, turning a quarter first when
/// the height is closer to `w` than the width is.
fn width_at_origin(u: &FieldElem, h: &FieldElem, w: &FieldElem) -> Dissection {
    if u == w {
        return slide(u, h, w);
    }
    if h == w || halvings(h, w) < halvings(u, w) {
        // (x, y) -> (y, h - x) takes [0, h] x [0, u] onto [0, u] x [0, h].
        let turn = RigidMotion::from_raw_parts(FieldElem::zero(), int(-1), Point { x: FieldElem::zero(), y: h.clone() });
        return width_no_turn(h, u, w).move_sources(&turn);
    }
    width_no_turn(u, h, w)
}

/// Axis-aligned rectangle `r` to a `w`-wide rectangle anchored at the origin.
pub fn rect_to_width(r: &Polygon, w: &FieldElem) -> Result<Dissection, WbgError> {
    if !w.is_positive() {
        return Err(WbgError::InvalidWidth);
    }
    let (x0, y0, u, h) = axis_rect(r).ok_or(WbgError::NotARectangle)?;
    let d = width_at_origin(&u, &h, w);
    if x0.is_zero() && y0.is_zero() {
        return Ok(d);
    }
    Ok(d.move_sources(&RigidMotion::translation(Point { x: x0, y: y0 })))
}

/// One polygon to `[0, 1] x [0, area]`.
fn polygon_to_strip(p: &Polygon, cfg: &WbgConfig) -> Result<Dissection, WbgError> {
    let one = FieldElem::one();
    if axis_rect(p).is_some() {
        return rect_to_width(p, &one);
    }
    let tris = triangulate(p);
    let chains: Vec<Dissection> = tris
        .par_iter()
        .map(|t| {
            let to_rect = triangle_to_rect(t, cfg)?;
            let to_width = rect_to_width(&to_rect.targets[0], &one)?;
            Ok(compose(&to_rect, &to_width).expect("matching rectangles"))
        })
        .collect::<Result<_, WbgError>>()?;
    let mut offset = FieldElem::zero();
    let mut pieces = Vec::new();
    for chain in &chains {
        let lift = RigidMotion::translation(Point { x: FieldElem::zero(), y: offset.clone() });
        pieces.extend(reposition(chain, &RigidMotion::identity(), &lift));
        offset = offset + chain.target_area();
    }
    Ok(Dissection {
        sources: vec![p.clone()],
        targets: vec![canonical_rect(&offset)],
        pieces,
    })
}

/// Polygons to the canonical rectangle of their total area, stacked in order.
pub fn canonicalize(polys: &[Polygon], cfg: &WbgConfig) -> Result<Dissection, WbgError> {
    if polys.is_empty() {
        return Err(WbgError::DegenerateInput("no polygons".into()));
    }
    let strips: Vec<Dissection> = polys
        .par_iter()
        .map(|p| polygon_to_strip(p, cfg))
        .collect::<Result<_, WbgError>>()?;
    let mut offset = FieldElem::zero();
    let mut pieces = Vec::new();
    for (i, s) in strips.iter().enumerate() {
        let lift = RigidMotion::translation(Point { x: FieldElem::zero(), y: offset.clone() });
        pieces.extend(reposition(s, &RigidMotion::identity(), &lift).into_iter().map(|mut p| {
            p.source_index = i;
            p
        }));
        offset = offset + s.target_area();
    }
    check_depth(
        Dissection {
            sources: polys.to_vec(),
            targets: vec![canonical_rect(&offset)],
            pieces,
        },
        cfg,
    )
}

/// Dissection of `sources` onto `targets` through the shared canonical rectangle.
pub fn equidecompose(sources: &[Polygon], targets: &[Polygon], cfg: &WbgConfig) -> Result<Dissection, WbgError> {
    let source_area: FieldElem = sources.iter().map(Polygon::area).sum();
    let target_area: FieldElem = targets.iter().map(Polygon::area).sum();
    if source_area != target_area {
        return Err(WbgError::AreaMismatch {
            source_area,
            target_area,
        });
    }
    let down = canonicalize(sources, cfg)?;
    let up = inverse(&canonicalize(targets, cfg)?);
    check_depth(compose(&down, &up).expect("same canonical rectangle"), cfg)
}

/// Equilateral triangles on the legs `a`, `b` cut and rearranged into the
/// equilateral triangle on the hypotenuse, in the placement of the rotated
/// configuration: `ACC1` and `BCC2` onto `ABD`.
pub fn pythagorean_dissection(a: &BigRational, b: &BigRational, cfg: &WbgConfig) -> Result<Dissection, WbgError> {
    let input = RightTriangleInput::new(a.clone(), b.clone()).map_err(|e| WbgError::InvalidInput(e.to_string()))?;
    let fig = build(&input);
    let sources = vec![fig.equilateral_acc1()?, fig.equilateral_bcc2()?];
    let targets = vec![fig.equilateral_abd()?];
    equidecompose(&sources, &targets, cfg)
}
