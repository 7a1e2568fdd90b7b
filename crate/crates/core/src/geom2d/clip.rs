use super::{triangulate, GeomError, Point, Polygon};
use crate::exactnum::FieldElem;

/// Point where segment `p -> q` meets the line through `a -> b`; the caller
/// guarantees the segment is not parallel to the line.
fn cut(p: &Point, q: &Point, a: &Point, b: &Point) -> Point {
    let d = q.sub(p);
    let e = b.sub(a);
    let t = a.sub(p).cross(&e) / d.cross(&e);
    p.add(&d.scale(&t))
}

/// Sutherland–Hodgman clip of convex `subject` against convex `clip`.
pub(crate) fn clip_convex_unchecked(subject: &Polygon, clip: &Polygon) -> Option<Polygon> {
    if subject.bounds().separated(clip.bounds()) {
        return None;
    }
    let mut output: Vec<Point> = subject.vertices().to_vec();
    for (a, b) in clip.edges() {
        if output.is_empty() {
            return None;
        }
        let e = b.sub(a);
        let side: Vec<i32> = output.iter().map(|p| e.cross(&p.sub(a)).sign()).collect();
        if side.iter().all(|&s| s >= 0) {
            continue;
        }
        let n = output.len();
        let mut next = Vec::with_capacity(n + 1);
        for i in 0..n {
            let j = (i + n - 1) % n;
            let (prev, cur) = (&output[j], &output[i]);
            let (prev_in, cur_in) = (side[j] >= 0, side[i] >= 0);
            if cur_in {
                if !prev_in {
                    next.push(cut(prev, cur, a, b));
                }
                next.push(cur.clone());
            } else if prev_in && side[j] > 0 {
                next.push(cut(prev, cur, a, b));
            }
        }
        output = next;
    }
    Polygon::from_simple(output)
}

/// Exact intersection of two convex polygons; `None` when the interiors are
/// disjoint (boundary contact has no area).
pub fn convex_clip(p: &Polygon, q: &Polygon) -> Result<Option<Polygon>, GeomError> {
    if !p.is_convex() || !q.is_convex() {
        return Err(GeomError::NonConvexInput);
    }
    Ok(clip_convex_unchecked(p, q))
}

/// `p` itself when convex, otherwise its triangulation.
pub(crate) fn convex_parts(p: &Polygon) -> Vec<Polygon> {
    if p.is_convex() {
        vec![p.clone()]
    } else {
        triangulate(p)
    }
}

/// Area of the interior intersection of two simple polygons.
pub fn overlap_area(p: &Polygon, q: &Polygon) -> FieldElem {
    if p.bounds().separated(q.bounds()) {
        return FieldElem::zero();
    }
    let pp = convex_parts(p);
    let qq = convex_parts(q);
    let mut total = FieldElem::zero();
    for a in &pp {
        for b in &qq {
            if let Some(r) = clip_convex_unchecked(a, b) {
                total = total + r.area();
            }
        }
    }
    total
}
