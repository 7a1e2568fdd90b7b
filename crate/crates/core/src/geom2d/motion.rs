use std::fmt;

use super::{GeomError, Point};
use crate::exactnum::FieldElem;

/// `p -> R p + t` with `R = [[c, -s], [s, c]]`.
///
/// Motions built with [`RigidMotion::new`] satisfy `c^2 + s^2 = 1` exactly.
/// [`RigidMotion::from_raw_parts`] skips that check so that untrusted
/// certificates can be loaded and then rejected by the verifier.
#[derive(Clone, PartialEq, Eq)]
pub struct RigidMotion {
    pub c: FieldElem,
    pub s: FieldElem,
    pub t: Point,
}

impl RigidMotion {
    pub fn new(c: FieldElem, s: FieldElem, t: Point) -> Result<RigidMotion, GeomError> {
        let m = RigidMotion { c, s, t };
        if m.is_proper() {
            Ok(m)
        } else {
            Err(GeomError::NotRigid)
        }
    }

    pub fn from_raw_parts(c: FieldElem, s: FieldElem, t: Point) -> RigidMotion {
        RigidMotion { c, s, t }
    }

    pub fn identity() -> RigidMotion {
        RigidMotion::translation(Point::origin())
    }

    pub fn translation(t: Point) -> RigidMotion {
        RigidMotion {
            c: FieldElem::one(),
            s: FieldElem::zero(),
            t,
        }
    }

    /// Rotation about `center` with cosine `c` and sine `s`.
    pub fn rotation_about(center: &Point, c: FieldElem, s: FieldElem) -> Result<RigidMotion, GeomError> {
        let rot = RigidMotion::new(c, s, Point::origin())?;
        let t = center.sub(&rot.apply(center));
        Ok(RigidMotion { t, ..rot })
    }

    /// Point reflection through `center` (rotation by 180 degrees).
    pub fn half_turn(center: &Point) -> RigidMotion {
        RigidMotion {
            c: FieldElem::from_int(-1),
            s: FieldElem::zero(),
            t: center.scale(&FieldElem::from_int(2)),
        }
    }

    /// Counter-clockwise quarter turn about the origin followed by `t`.
    pub fn quarter_turn(t: Point) -> RigidMotion {
        RigidMotion {
            c: FieldElem::zero(),
            s: FieldElem::one(),
            t,
        }
    }

    pub fn is_proper(&self) -> bool {
        self.c.square() + self.s.square() == FieldElem::one()
    }

    pub fn is_identity(&self) -> bool {
        self.c == FieldElem::one() && self.s.is_zero() && self.t.x.is_zero() && self.t.y.is_zero()
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point {
            x: &self.c * &p.x - &self.s * &p.y + &self.t.x,
            y: &self.s * &p.x + &self.c * &p.y + &self.t.y,
        }
    }

    /// `self` after `inner`: `compose(m1, m2)(p) = m1(m2(p))`.
    pub fn compose(&self, inner: &RigidMotion) -> RigidMotion {
        let linear = RigidMotion {
            c: &self.c * &inner.c - &self.s * &inner.s,
            s: &self.s * &inner.c + &self.c * &inner.s,
            t: Point::origin(),
        };
        let t = self.apply(&inner.t);
        RigidMotion { t, ..linear }
    }

    /// Inverse of a proper motion.
    pub fn invert(&self) -> RigidMotion {
        let c = self.c.clone();
        let s = -&self.s;
        let t = Point {
            x: -(&c * &self.t.x - &s * &self.t.y),
            y: -(&s * &self.t.x + &c * &self.t.y),
        };
        RigidMotion { c, s, t }
    }

    pub fn tower_depth(&self) -> usize {
        self.c.tower_depth().max(self.s.tower_depth()).max(self.t.tower_depth())
    }
}

impl fmt::Debug for RigidMotion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RigidMotion {{ c: {}, s: {}, t: {:?} }}", self.c, self.s, self.t)
    }
}
