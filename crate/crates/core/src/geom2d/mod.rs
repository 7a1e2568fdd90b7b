//! Exact planar geometry over [`FieldElem`] coordinates.

mod clip;
mod motion;
mod polygon;
mod triangulate;

pub use clip::{convex_clip, overlap_area};
pub use motion::RigidMotion;
pub use polygon::{shoelace, Bounds, Polygon};
pub use triangulate::triangulate;

pub(crate) use clip::{clip_convex_unchecked, convex_parts};

use std::fmt;

use crate::exactnum::FieldElem;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("a polygon needs at least three distinct, non-collinear vertices")]
    TooFewVertices,
    #[error("polygon has zero area")]
    DegenerateInput,
    #[error("polygon is not simple: edges {0} and {1} intersect")]
    NotSimple(usize, usize),
    #[error("convex clipping needs convex inputs")]
    NonConvexInput,
    #[error("motion is not a proper rigid motion (c^2 + s^2 != 1)")]
    NotRigid,
}

/// A point, or a displacement vector, with exact coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct Point {
    pub x: FieldElem,
    pub y: FieldElem,
}

impl Point {
    pub fn new(x: impl Into<FieldElem>, y: impl Into<FieldElem>) -> Point {
        Point { x: x.into(), y: y.into() }
    }

    pub fn origin() -> Point {
        Point::new(0, 0)
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn add(&self, other: &Point) -> Point {
        Point {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    pub fn scale(&self, k: &FieldElem) -> Point {
        Point {
            x: &self.x * k,
            y: &self.y * k,
        }
    }

    pub fn dot(&self, other: &Point) -> FieldElem {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn cross(&self, other: &Point) -> FieldElem {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm2(&self) -> FieldElem {
        self.dot(self)
    }

    pub fn dist2(&self, other: &Point) -> FieldElem {
        self.sub(other).norm2()
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        self.add(other).scale(&FieldElem::ratio(1, 2))
    }

    /// Lexicographic comparison, `x` first.
    pub fn lex_cmp(&self, other: &Point) -> std::cmp::Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }

    pub fn tower_depth(&self) -> usize {
        self.x.tower_depth().max(self.y.tower_depth())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the turn `a -> b -> c`: `+1` counter-clockwise, `-1` clockwise, `0` collinear.
pub fn orient2d(a: &Point, b: &Point, c: &Point) -> i32 {
    b.sub(a).cross(&c.sub(a)).sign()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_basics() {
        let a = Point::new(0, 0);
        let b = Point::new(1, 0);
        let c = Point::new(0, 1);
        assert_eq!(orient2d(&a, &b, &c), 1);
        assert_eq!(orient2d(&b, &a, &c), -1);
        assert_eq!(orient2d(&a, &b, &Point::new(5, 0)), 0);
    }
}
