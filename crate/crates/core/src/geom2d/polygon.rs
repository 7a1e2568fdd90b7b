use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;

use super::{orient2d, GeomError, Point, RigidMotion};
use crate::exactnum::{BigRational, FieldElem};

/// Shoelace sum `1/2 * sum(x_i y_{i+1} - x_{i+1} y_i)` of a raw vertex cycle.
pub fn shoelace(points: &[Point]) -> FieldElem {
    let n = points.len();
    let twice: FieldElem = (0..n)
        .map(|i| points[i].cross(&points[(i + 1) % n]))
        .sum();
    twice * FieldElem::ratio(1, 2)
}

/// Certified axis-aligned box around a polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub min_x: BigRational,
    pub max_x: BigRational,
    pub min_y: BigRational,
    pub max_y: BigRational,
}

impl Bounds {
    /// True when the boxes are separated by a positive gap, which rules
    /// out any shared interior.
    pub fn separated(&self, other: &Bounds) -> bool {
        self.max_x < other.min_x
            || other.max_x < self.min_x
            || self.max_y < other.min_y
            || other.max_y < self.min_y
    }
}

/// Simple polygon in canonical form: counter-clockwise, no repeated or
/// collinear consecutive vertices, starting at the lexicographically
/// smallest vertex.
#[derive(Clone)]
pub struct Polygon {
    vertices: Vec<Point>,
    bounds: OnceLock<Bounds>,
}

/// Canonical vertex cycle, or `None` when nothing with positive area remains.
fn canonical_cycle(mut v: Vec<Point>) -> Result<Vec<Point>, GeomError> {
    v.dedup();
    while v.len() > 1 && v.first() == v.last() {
        v.pop();
    }
    // Drop collinear vertices until none remain.
    let mut changed = true;
    while changed && v.len() >= 3 {
        changed = false;
        let mut i = 0;
        while i < v.len() && v.len() >= 3 {
            let n = v.len();
            let prev = &v[(i + n - 1) % n];
            let next = &v[(i + 1) % n];
            if orient2d(prev, &v[i], next) == 0 {
                v.remove(i);
                changed = true;
            } else {
                i += 1;
            }
        }
    }
    if v.len() < 3 {
        return Err(GeomError::TooFewVertices);
    }
    match shoelace(&v).sign() {
        0 => return Err(GeomError::DegenerateInput),
        -1 => v.reverse(),
        _ => {}
    }
    let start = (0..v.len())
        .min_by(|&a, &b| v[a].lex_cmp(&v[b]))
        .unwrap_or(0);
    v.rotate_left(start);
    Ok(v)
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    let within = |lo: &FieldElem, hi: &FieldElem, x: &FieldElem| {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        lo <= x && x <= hi
    };
    within(&a.x, &b.x, &p.x) && within(&a.y, &b.y, &p.y)
}

/// Closed segment intersection test.
pub(crate) fn segments_intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient2d(a, b, c);
    let o2 = orient2d(a, b, d);
    let o3 = orient2d(c, d, a);
    let o4 = orient2d(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(a, b, c))
        || (o2 == 0 && on_segment(a, b, d))
        || (o3 == 0 && on_segment(c, d, a))
        || (o4 == 0 && on_segment(c, d, b))
}

impl Polygon {
    /// Canonicalizes and validates a vertex cycle given in either orientation.
    pub fn new(vertices: Vec<Point>) -> Result<Polygon, GeomError> {
        let v = canonical_cycle(vertices)?;
        let n = v.len();
        for i in 0..n {
            for j in (i + 2)..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                if segments_intersect(&v[i], &v[(i + 1) % n], &v[j], &v[(j + 1) % n]) {
                    return Err(GeomError::NotSimple(i, j));
                }
            }
        }
        Ok(Polygon::from_canonical(v))
    }

    /// Canonicalizes a cycle already known to bound a simple region (clip
    /// results, motions of valid polygons); `None` when the area is zero.
    pub(crate) fn from_simple(vertices: Vec<Point>) -> Option<Polygon> {
        canonical_cycle(vertices).ok().map(Polygon::from_canonical)
    }

    fn from_canonical(vertices: Vec<Point>) -> Polygon {
        Polygon {
            vertices,
            bounds: OnceLock::new(),
        }
    }

    /// Axis-aligned rectangle `[x0, x0 + w] x [y0, y0 + h]`.
    pub fn rectangle(x0: &FieldElem, y0: &FieldElem, w: &FieldElem, h: &FieldElem) -> Result<Polygon, GeomError> {
        let x1 = x0 + w;
        let y1 = y0 + h;
        Polygon::new(vec![
            Point { x: x0.clone(), y: y0.clone() },
            Point { x: x1.clone(), y: y0.clone() },
            Point { x: x1, y: y1.clone() },
            Point { x: x0.clone(), y: y1 },
        ])
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Shoelace area; positive, since canonical polygons are counter-clockwise.
    pub fn signed_area(&self) -> FieldElem {
        shoelace(&self.vertices)
    }

    pub fn area(&self) -> FieldElem {
        self.signed_area()
    }

    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            orient2d(
                &self.vertices[i],
                &self.vertices[(i + 1) % n],
                &self.vertices[(i + 2) % n],
            ) > 0
        })
    }

    pub fn transform(&self, m: &RigidMotion) -> Polygon {
        let moved: Vec<Point> = self.vertices.iter().map(|p| m.apply(p)).collect();
        // Proper motions preserve orientation and collinearity; only the
        // starting vertex may change.
        match canonical_cycle(moved.clone()) {
            Ok(v) => Polygon::from_canonical(v),
            Err(_) => Polygon::from_canonical(moved),
        }
    }

    pub fn tower_depth(&self) -> usize {
        self.vertices.iter().map(Point::tower_depth).max().unwrap_or(0)
    }

    pub fn bounds(&self) -> &Bounds {
        self.bounds.get_or_init(|| {
            let eps = BigRational::new(1.into(), BigInt::from(1) << 20);
            let mut xs = Vec::new();
            let mut ys = Vec::new();
            for p in &self.vertices {
                let ix = p.x.to_interval(&eps).expect("positive tolerance");
                let iy = p.y.to_interval(&eps).expect("positive tolerance");
                xs.push(ix);
                ys.push(iy);
            }
            Bounds {
                min_x: xs.iter().map(|i| i.lo.clone()).min().unwrap(),
                max_x: xs.iter().map(|i| i.hi.clone()).max().unwrap(),
                min_y: ys.iter().map(|i| i.lo.clone()).min().unwrap(),
                max_y: ys.iter().map(|i| i.hi.clone()).max().unwrap(),
            }
        })
    }

    /// Whether `p` lies in the closed region.
    pub fn contains_point(&self, p: &Point) -> bool {
        if self.is_convex() {
            return self.edges().all(|(a, b)| orient2d(a, b, p) >= 0);
        }
        // Crossing parity, with boundary points counted as inside.
        let mut inside = false;
        for (a, b) in self.edges() {
            if orient2d(a, b, p) == 0 && on_segment(a, b, p) {
                return true;
            }
            let a_above = a.y > p.y;
            let b_above = b.y > p.y;
            if a_above != b_above {
                // Edge crosses the horizontal line through p; keep the
                // crossings to the right of p.
                let side = orient2d(a, b, p);
                let upward = b.y > a.y;
                if (upward && side > 0) || (!upward && side < 0) {
                    inside = !inside;
                }
            }
        }
        inside
    }
}

impl PartialEq for Polygon {
    fn eq(&self, other: &Polygon) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for Polygon {}

impl fmt::Debug for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.vertices).finish()
    }
}

impl PartialOrd for Polygon {
    fn partial_cmp(&self, other: &Polygon) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on vertex lists; gives pieces a deterministic order.
impl Ord for Polygon {
    fn cmp(&self, other: &Polygon) -> Ordering {
        for (a, b) in self.vertices.iter().zip(&other.vertices) {
            let o = a.lex_cmp(b);
            if o != Ordering::Equal {
                return o;
            }
        }
        self.vertices.len().cmp(&other.vertices.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(coords: &[(i64, i64)]) -> Vec<Point> {
        coords.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn shoelace_orientation() {
        let ccw = pts(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(shoelace(&ccw), FieldElem::one());
        let mut cw = ccw.clone();
        cw.reverse();
        assert_eq!(shoelace(&cw), FieldElem::from_int(-1));
    }

    #[test]
    fn canonical_form() {
        // clockwise, with a collinear vertex and a repeated vertex
        let p = Polygon::new(pts(&[(0, 1), (1, 1), (1, 1), (1, 0), (0, 0), (0, 0)])).unwrap();
        let q = Polygon::new(pts(&[(1, 0), (1, 1), (0, 1), (0, 0)])).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.vertices()[0], Point::new(0, 0));
        assert_eq!(p.signed_area(), FieldElem::one());
        let r = Polygon::new(pts(&[(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)])).unwrap();
        assert_eq!(r.len(), 4);
    }

    #[test]
    fn rejects_degenerate_and_self_intersecting() {
        assert_eq!(Polygon::new(pts(&[(0, 0), (1, 1), (2, 2)])).unwrap_err(), GeomError::TooFewVertices);
        assert_eq!(Polygon::new(pts(&[(0, 0), (1, 0)])).unwrap_err(), GeomError::TooFewVertices);
        // bow tie
        let e = Polygon::new(pts(&[(0, 0), (4, 4), (4, 0), (0, 2)])).unwrap_err();
        assert!(matches!(e, GeomError::NotSimple(_, _)));
    }

    #[test]
    fn point_containment() {
        let l = Polygon::new(pts(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])).unwrap();
        assert!(l.contains_point(&Point::new(0, 0)));
        assert!(l.contains_point(&Point::new(1, 1)));
        assert!(l.contains_point(&Point { x: FieldElem::ratio(1, 2), y: FieldElem::ratio(3, 2) }));
        assert!(!l.contains_point(&Point { x: FieldElem::ratio(3, 2), y: FieldElem::ratio(3, 2) }));
        assert!(!l.contains_point(&Point::new(3, 0)));
    }
}
