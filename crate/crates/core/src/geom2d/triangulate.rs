use super::{orient2d, Point, Polygon};

fn in_closed_triangle(a: &Point, b: &Point, c: &Point, p: &Point) -> bool {
    orient2d(a, b, p) >= 0 && orient2d(b, c, p) >= 0 && orient2d(c, a, p) >= 0
}

/// Ear-clipping triangulation with exact orientation predicates.
///
/// The triangles are interior-disjoint, cover `p`, and their areas sum to
/// `p.signed_area()` exactly.
pub fn triangulate(p: &Polygon) -> Vec<Polygon> {
    let pts = p.vertices();
    if pts.len() == 3 {
        return vec![p.clone()];
    }
    let mut ring: Vec<usize> = (0..pts.len()).collect();
    let mut out = Vec::with_capacity(pts.len() - 2);
    while ring.len() > 3 {
        let m = ring.len();
        let ear = (0..m).find(|&i| {
            let (a, b, c) = (ring[(i + m - 1) % m], ring[i], ring[(i + 1) % m]);
            if orient2d(&pts[a], &pts[b], &pts[c]) <= 0 {
                return false;
            }
            ring.iter()
                .filter(|&&j| j != a && j != b && j != c)
                .all(|&j| !in_closed_triangle(&pts[a], &pts[b], &pts[c], &pts[j]))
        });
        let i = ear.expect("simple polygons always have an ear");
        let (a, b, c) = (ring[(i + m - 1) % m], ring[i], ring[(i + 1) % m]);
        out.push(
            Polygon::from_simple(vec![pts[a].clone(), pts[b].clone(), pts[c].clone()])
                .expect("ear has positive area"),
        );
        ring.remove(i);
        // Clipping may leave flat vertices behind; they bound no area.
        let mut k = 0;
        while ring.len() > 3 && k < ring.len() {
            let m = ring.len();
            let (a, b, c) = (ring[(k + m - 1) % m], ring[k], ring[(k + 1) % m]);
            if orient2d(&pts[a], &pts[b], &pts[c]) == 0 {
                ring.remove(k);
                k = k.saturating_sub(1);
            } else {
                k += 1;
            }
        }
    }
    out.push(
        Polygon::from_simple(ring.iter().map(|&i| pts[i].clone()).collect())
            .expect("final triangle has positive area"),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::FieldElem;

    fn poly(coords: &[(i64, i64)]) -> Polygon {
        Polygon::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn triangle_is_itself() {
        let t = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(triangulate(&t), vec![t]);
    }

    #[test]
    fn convex_quadrilateral() {
        let q = poly(&[(0, 0), (2, 0), (3, 2), (0, 1)]);
        let tris = triangulate(&q);
        assert_eq!(tris.len(), 2);
        let total: FieldElem = tris.iter().map(Polygon::area).sum();
        assert_eq!(total, q.area());
    }

    #[test]
    fn l_shaped_hexagon() {
        let l = poly(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]);
        let tris = triangulate(&l);
        assert_eq!(tris.len(), 4);
        let total: FieldElem = tris.iter().map(Polygon::area).sum();
        assert_eq!(total, FieldElem::from_int(3));
    }
}
