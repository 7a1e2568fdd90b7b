//! The rotated-triangle configuration of a right triangle and its exact checks.
//!
//! For legs `a = |BC|`, `b = |AC|` the triangle is placed at
//! `C = (0, 0)`, `A = (b, 0)`, `B = (0, a)`. Rotating it by +60 degrees about
//! `A` and by -60 degrees about `B` sends `C` to `C1` and `C2`, and sends `B`
//! (resp. `A`) to a common point `D`. Every claim about the figure is checked
//! with exact arithmetic in `Q(sqrt 3)`; nothing on this path evaluates a
//! trigonometric function.

mod ngon;

pub use ngon::{kappa_interval, ngon_additivity, pi_interval, NgonVerdict};

use num_traits::Signed;

use crate::exactnum::{BigRational, FieldElem};
use crate::geom2d::{Point, Polygon, RigidMotion};
use crate::report::{CheckResult, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Leg lengths of a right triangle; both strictly positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightTriangleInput {
    a: BigRational,
    b: BigRational,
}

impl RightTriangleInput {
    pub fn new(a: BigRational, b: BigRational) -> Result<RightTriangleInput, ConstructionError> {
        if !a.is_positive() || !b.is_positive() {
            return Err(ConstructionError::InvalidInput(format!(
                "legs must be positive, got a = {a}, b = {b}"
            )));
        }
        Ok(RightTriangleInput { a, b })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<RightTriangleInput, ConstructionError> {
        RightTriangleInput::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }
}

/// Check names, in report order.
pub const CHECK_NAMES: [&str; 7] = [
    "coincidence",
    "equilaterals",
    "congruences",
    "pentagon_identity",
    "parallelogram",
    "angles",
    "conclusion",
];

/// Points of the figure. Fields are public so that tests can inject faults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub legs: RightTriangleInput,
    /// `a^2 + b^2`, the squared hypotenuse; the hypotenuse itself is never needed.
    pub csq: FieldElem,
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub c1: Point,
    pub c2: Point,
    pub d: Point,
}

fn sqrt3() -> FieldElem {
    FieldElem::from_int(3).sqrt_adjoin().expect("3 is positive")
}

/// Rotation by +60 degrees (counter-clockwise) about `center`.
pub fn rotate_ccw_60(center: &Point) -> RigidMotion {
    RigidMotion::rotation_about(center, FieldElem::ratio(1, 2), sqrt3() * FieldElem::ratio(1, 2))
        .expect("cos^2 + sin^2 = 1")
}

/// Rotation by -60 degrees (clockwise) about `center`.
pub fn rotate_cw_60(center: &Point) -> RigidMotion {
    RigidMotion::rotation_about(center, FieldElem::ratio(1, 2), sqrt3() * FieldElem::ratio(-1, 2))
        .expect("cos^2 + sin^2 = 1")
}

pub fn build(input: &RightTriangleInput) -> Configuration {
    let a_len = FieldElem::from_rational(input.a.clone());
    let b_len = FieldElem::from_rational(input.b.clone());
    let c = Point::origin();
    let a = Point { x: b_len.clone(), y: FieldElem::zero() };
    let b = Point { x: FieldElem::zero(), y: a_len.clone() };
    let at_a = rotate_ccw_60(&a);
    let at_b = rotate_cw_60(&b);
    Configuration {
        csq: a_len.square() + b_len.square(),
        c1: at_a.apply(&c),
        c2: at_b.apply(&c),
        d: at_a.apply(&b),
        legs: input.clone(),
        a,
        b,
        c,
    }
}

impl Configuration {
    fn a_len(&self) -> FieldElem {
        FieldElem::from_rational(self.legs.a.clone())
    }

    fn b_len(&self) -> FieldElem {
        FieldElem::from_rational(self.legs.b.clone())
    }

    pub fn triangle_bca(&self) -> Result<Polygon, crate::geom2d::GeomError> {
        Polygon::new(vec![self.b.clone(), self.c.clone(), self.a.clone()])
    }

    pub fn equilateral_abd(&self) -> Result<Polygon, crate::geom2d::GeomError> {
        Polygon::new(vec![self.a.clone(), self.b.clone(), self.d.clone()])
    }

    pub fn equilateral_acc1(&self) -> Result<Polygon, crate::geom2d::GeomError> {
        Polygon::new(vec![self.a.clone(), self.c.clone(), self.c1.clone()])
    }

    pub fn equilateral_bcc2(&self) -> Result<Polygon, crate::geom2d::GeomError> {
        Polygon::new(vec![self.b.clone(), self.c.clone(), self.c2.clone()])
    }

    pub fn pentagon(&self) -> Result<Polygon, crate::geom2d::GeomError> {
        Polygon::new(vec![
            self.a.clone(),
            self.b.clone(),
            self.c2.clone(),
            self.d.clone(),
            self.c1.clone(),
        ])
    }

    pub fn parallelogram(&self) -> Result<Polygon, crate::geom2d::GeomError> {
        Polygon::new(vec![
            self.c2.clone(),
            self.d.clone(),
            self.c1.clone(),
            self.c.clone(),
        ])
    }

    pub fn triangle_bc2d(&self) -> Result<Polygon, crate::geom2d::GeomError> {
        Polygon::new(vec![self.b.clone(), self.c2.clone(), self.d.clone()])
    }

    pub fn triangle_ac1d(&self) -> Result<Polygon, crate::geom2d::GeomError> {
        Polygon::new(vec![self.a.clone(), self.c1.clone(), self.d.clone()])
    }

    /// The six figures drawn for the configuration, with their labels.
    pub fn named_polygons(&self) -> Vec<(&'static str, Polygon)> {
        let all = [
            ("ABC2DC1", self.pentagon()),
            ("ABD", self.equilateral_abd()),
            ("ACC1", self.equilateral_acc1()),
            ("BCC2", self.equilateral_bcc2()),
            ("C2DC1C", self.parallelogram()),
            ("BCA", self.triangle_bca()),
        ];
        all.into_iter().filter_map(|(n, p)| p.ok().map(|p| (n, p))).collect()
    }

    pub fn named_points(&self) -> Vec<(&'static str, &Point)> {
        vec![
            ("A", &self.a),
            ("B", &self.b),
            ("C", &self.c),
            ("C1", &self.c1),
            ("C2", &self.c2),
            ("D", &self.d),
        ]
    }
}

/// `B` rotated about `A` and `A` rotated about `B` land on the same point, `D`.
pub fn check_coincidence(cfg: &Configuration) -> CheckResult {
    let b1 = rotate_ccw_60(&cfg.a).apply(&cfg.b);
    let a2 = rotate_cw_60(&cfg.b).apply(&cfg.a);
    let gap = a2.sub(&b1);
    let drift = cfg.d.sub(&b1);
    let passed = b1 == a2 && b1 == cfg.d;
    CheckResult::new("coincidence", passed)
        .witness("B1.x", b1.x.clone())
        .witness("B1.y", b1.y.clone())
        .witness("A2.x - B1.x", gap.x)
        .witness("A2.y - B1.y", gap.y)
        .witness("D.x - B1.x", drift.x)
        .witness("D.y - B1.y", drift.y)
}

/// `ABD` has side `c`, `ACC1` side `b`, `BCC2` side `a`.
pub fn check_equilaterals(cfg: &Configuration) -> CheckResult {
    let a2 = cfg.a_len().square();
    let b2 = cfg.b_len().square();
    let c2 = &a2 + &b2;
    let abd = [cfg.a.dist2(&cfg.b), cfg.a.dist2(&cfg.d), cfg.b.dist2(&cfg.d)];
    let acc1 = [cfg.a.dist2(&cfg.c), cfg.c.dist2(&cfg.c1), cfg.a.dist2(&cfg.c1)];
    let bcc2 = [cfg.b.dist2(&cfg.c), cfg.c.dist2(&cfg.c2), cfg.b.dist2(&cfg.c2)];
    let passed = cfg.csq == c2
        && abd.iter().all(|s| *s == c2)
        && acc1.iter().all(|s| *s == b2)
        && bcc2.iter().all(|s| *s == a2);
    let [ab, ad, bd] = abd;
    let [ac, cc1, ac1] = acc1;
    let [bc, cc2, bc2] = bcc2;
    CheckResult::new("equilaterals", passed)
        .witness("|AB|^2", ab)
        .witness("|AD|^2", ad)
        .witness("|BD|^2", bd)
        .witness("|AC|^2", ac)
        .witness("|CC1|^2", cc1)
        .witness("|AC1|^2", ac1)
        .witness("|BC|^2", bc)
        .witness("|CC2|^2", cc2)
        .witness("|BC2|^2", bc2)
}

fn sorted(mut v: Vec<FieldElem>) -> Vec<FieldElem> {
    v.sort();
    v
}

/// `BC2D` and `AC1D` have the side lengths of `BCA`.
pub fn check_congruences(cfg: &Configuration) -> CheckResult {
    let a2 = cfg.a_len().square();
    let b2 = cfg.b_len().square();
    let expected = sorted(vec![a2.clone(), b2.clone(), &a2 + &b2]);
    let bc2d = [cfg.b.dist2(&cfg.c2), cfg.c2.dist2(&cfg.d), cfg.b.dist2(&cfg.d)];
    let ac1d = [cfg.a.dist2(&cfg.c1), cfg.c1.dist2(&cfg.d), cfg.a.dist2(&cfg.d)];
    let passed = sorted(bc2d.to_vec()) == expected && sorted(ac1d.to_vec()) == expected;
    let [bc2, c2d, bd] = bc2d;
    let [ac1, c1d, ad] = ac1d;
    CheckResult::new("congruences", passed)
        .witness("|BC2|^2", bc2)
        .witness("|C2D|^2", c2d)
        .witness("|BD|^2", bd)
        .witness("|AC1|^2", ac1)
        .witness("|C1D|^2", c1d)
        .witness("|AD|^2", ad)
}

/// Pentagon area two ways: three triangles around `D`, and two equilaterals
/// plus the right triangle plus the parallelogram.
pub fn check_pentagon_identity(cfg: &Configuration) -> CheckResult {
    let pieces = (|| {
        Ok::<_, crate::geom2d::GeomError>((
            cfg.pentagon()?,
            cfg.equilateral_abd()?,
            cfg.triangle_bc2d()?,
            cfg.triangle_ac1d()?,
            cfg.equilateral_acc1()?,
            cfg.equilateral_bcc2()?,
            cfg.triangle_bca()?,
            cfg.parallelogram()?,
        ))
    })();
    let (pent, abd, bc2d, ac1d, acc1, bcc2, bca, par) = match pieces {
        Ok(p) => p,
        Err(e) => {
            return CheckResult::new("pentagon_identity", false).note(format!("degenerate figure: {e}"));
        }
    };
    let total = pent.area();
    let around_d = abd.area() + bc2d.area() + ac1d.area();
    let rearranged = acc1.area() + bcc2.area() + bca.area() + par.area();
    let passed = total == around_d && total == rearranged;
    CheckResult::new("pentagon_identity", passed)
        .witness("area(ABC2DC1)", total)
        .witness("area(ABD) + area(BC2D) + area(AC1D)", around_d)
        .witness("area(ACC1) + area(BCC2) + area(BCA) + area(C2DC1C)", rearranged)
}

/// `C2DC1C` is a parallelogram with sides `a`, `b` and area `ab/2 = area(BCA)`.
pub fn check_parallelogram(cfg: &Configuration) -> CheckResult {
    let side_b = cfg.c1.sub(&cfg.c);
    let side_a = cfg.c2.sub(&cfg.c);
    let opposite_b = cfg.d.sub(&cfg.c2);
    let opposite_a = cfg.d.sub(&cfg.c1);
    let half_ab = cfg.a_len() * cfg.b_len() * FieldElem::ratio(1, 2);
    // Area as a cross product of the two sides at C.
    let area = side_b.cross(&side_a).abs();
    let shoelace_ok = match (cfg.parallelogram(), cfg.triangle_bca()) {
        (Ok(p), Ok(t)) => p.area() == area && t.area() == half_ab,
        _ => false,
    };
    let passed = opposite_b == side_b
        && opposite_a == side_a
        && side_b.norm2() == cfg.b_len().square()
        && side_a.norm2() == cfg.a_len().square()
        && area == half_ab
        && shoelace_ok;
    CheckResult::new("parallelogram", passed)
        .witness("(D - C2).x - (C1 - C).x", &opposite_b.x - &side_b.x)
        .witness("(D - C2).y - (C1 - C).y", &opposite_b.y - &side_b.y)
        .witness("(D - C1).x - (C2 - C).x", &opposite_a.x - &side_a.x)
        .witness("(D - C1).y - (C2 - C).y", &opposite_a.y - &side_a.y)
        .witness("area(C2DC1C)", area)
        .witness("ab/2", half_ab)
}

/// The angle at `vertex` between the rays to `p` and `q` has cosine
/// `sign * sqrt(3)/2`, tested as a sign condition plus `4 dot^2 = 3 |u|^2 |v|^2`.
fn cos_is_pm_sqrt3_half(vertex: &Point, p: &Point, q: &Point, sign: i32) -> (bool, FieldElem) {
    let u = p.sub(vertex);
    let v = q.sub(vertex);
    let dot = u.dot(&v);
    let ok = dot.sign() == sign
        && FieldElem::from_int(4) * dot.square() == FieldElem::from_int(3) * u.norm2() * v.norm2();
    (ok, dot)
}

pub const ANGLE_NOTE: &str = "angle C1-C-C2 is 150 degrees (cos = -sqrt(3)/2), since 360 - 90 - 60 - 60 = 150; \
a value of 120 degrees, as sometimes printed for this angle, contradicts the 30-degree angles at C2 and C1";

/// 150 degrees at `C`, 30 degrees at `C2` and at `C1`.
pub fn check_angles(cfg: &Configuration) -> CheckResult {
    let (at_c, dot_c) = cos_is_pm_sqrt3_half(&cfg.c, &cfg.c1, &cfg.c2, -1);
    let (at_c2, dot_c2) = cos_is_pm_sqrt3_half(&cfg.c2, &cfg.c, &cfg.d, 1);
    let (at_c1, dot_c1) = cos_is_pm_sqrt3_half(&cfg.c1, &cfg.d, &cfg.c, 1);
    CheckResult::new("angles", at_c && at_c2 && at_c1)
        .witness("dot(C->C1, C->C2)", dot_c)
        .witness("dot(C2->C, C2->D)", dot_c2)
        .witness("dot(C1->D, C1->C)", dot_c1)
        .note(ANGLE_NOTE)
}

/// `area(ABD) = area(ACC1) + area(BCC2)` and `|AD|^2 = a^2 + b^2`.
pub fn check_conclusion(cfg: &Configuration) -> CheckResult {
    let legs_sq = cfg.a_len().square() + cfg.b_len().square();
    let ad2 = cfg.a.dist2(&cfg.d);
    let areas = match (cfg.equilateral_abd(), cfg.equilateral_acc1(), cfg.equilateral_bcc2()) {
        (Ok(abd), Ok(acc1), Ok(bcc2)) => Some((abd.area(), acc1.area() + bcc2.area())),
        _ => None,
    };
    let Some((big, small)) = areas else {
        return CheckResult::new("conclusion", false).note("degenerate equilateral triangle");
    };
    let residual = &big - &small;
    let passed = residual.is_zero() && ad2 == legs_sq && cfg.csq == legs_sq;
    CheckResult::new("conclusion", passed)
        .witness("area(ABD)", big)
        .witness("area(ACC1) + area(BCC2)", small)
        .witness("area(ABD) - area(ACC1) - area(BCC2)", residual)
        .witness("|AD|^2", ad2)
        .witness("a^2 + b^2", legs_sq)
}

/// Runs every check of an existing (possibly altered) configuration.
pub fn verify_configuration(cfg: &Configuration) -> VerificationReport {
    VerificationReport::new(vec![
        check_coincidence(cfg),
        check_equilaterals(cfg),
        check_congruences(cfg),
        check_pentagon_identity(cfg),
        check_parallelogram(cfg),
        check_angles(cfg),
        check_conclusion(cfg),
    ])
}

pub fn verify(input: &RightTriangleInput) -> VerificationReport {
    verify_configuration(&build(input))
}
