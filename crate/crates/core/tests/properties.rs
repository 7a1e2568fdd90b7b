use equidissect::construction::{self, build, verify, RightTriangleInput};
use equidissect::dissection::{compose, verify_dissection};
use equidissect::exactnum::{BigRational, FieldElem};
use equidissect::geom2d::{orient2d, overlap_area, triangulate, Point, Polygon, RigidMotion};
use equidissect::wbg::{canonicalize, rect_to_width, triangle_to_rect, WbgConfig};
use proptest::prelude::*;

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn sqrt_of(n: i64) -> FieldElem {
    FieldElem::from_int(n).sqrt_adjoin().unwrap()
}

fn small_rat() -> impl Strategy<Value = FieldElem> {
    (-40i64..40, 1i64..12).prop_map(|(p, d)| FieldElem::ratio(p, d))
}

/// Elements of Q(sqrt 2, sqrt 3) with small coefficients.
fn elem() -> impl Strategy<Value = FieldElem> {
    (small_rat(), small_rat(), small_rat(), small_rat())
        .prop_map(|(a, b, c, d)| a + b * sqrt_of(2) + c * sqrt_of(3) + d * sqrt_of(6))
}

fn pos_rat() -> impl Strategy<Value = BigRational> {
    (1i64..=1_000_000, 1i64..=1_000_000).prop_map(|(p, d)| q(p, d))
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn field_axioms(x in elem(), y in elem(), z in elem()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!((&x + &y) + &z, &x + (&y + &z));
        prop_assert_eq!((&x * &y) * &z, &x * (&y * &z));
        prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
        prop_assert_eq!(&x - &x, FieldElem::zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * x.recip().unwrap(), FieldElem::one());
        }
    }

    #[test]
    fn sign_is_multiplicative(x in elem(), y in elem()) {
        prop_assert_eq!((&x * &y).sign(), x.sign() * y.sign());
        prop_assert_eq!((-&x).sign(), -x.sign());
    }

    #[test]
    fn sign_matches_interval(x in elem()) {
        let iv = x.to_interval(&q(1, 1 << 30)).unwrap();
        prop_assert!(iv.width() <= q(1, 1 << 30));
        match iv.sign() {
            Some(s) => prop_assert_eq!(s, x.sign()),
            None => prop_assert!(iv.contains_zero()),
        }
        let f = x.to_f64();
        prop_assert!((iv.midpoint_f64() - f).abs() < 1e-6);
    }

    #[test]
    fn order_is_consistent_with_sign(x in elem(), y in elem()) {
        prop_assert_eq!(x.cmp(&y) as i32, (&x - &y).sign());
    }

    #[test]
    fn sqrt_squares_back(x in elem()) {
        let sq = x.square();
        let r = sq.sqrt_adjoin().unwrap();
        prop_assert_eq!(r.square(), sq);
        prop_assert!(r.sign() >= 0);
        prop_assert_eq!(r, x.abs());
    }

    #[test]
    fn motions_are_isometries(
        (cx, cy) in (small_rat(), small_rat()),
        (px, py) in (small_rat(), small_rat()),
        (qx, qy) in (small_rat(), small_rat()),
        turn in 0usize..4,
    ) {
        let center = Point { x: cx, y: cy };
        let (c, s) = [
            (FieldElem::ratio(1, 2), sqrt_of(3) * FieldElem::ratio(1, 2)),
            (FieldElem::ratio(3, 5), FieldElem::ratio(-4, 5)),
            (FieldElem::zero(), FieldElem::one()),
            (sqrt_of(2) * FieldElem::ratio(1, 2), sqrt_of(2) * FieldElem::ratio(1, 2)),
        ][turn].clone();
        let m = RigidMotion::rotation_about(&center, c, s).unwrap();
        let p = Point { x: px, y: py };
        let r = Point { x: qx, y: qy };
        prop_assert_eq!(m.apply(&p).dist2(&m.apply(&r)), p.dist2(&r));
        prop_assert_eq!(m.apply(&center), center.clone());
        prop_assert!(m.compose(&m.invert()).is_identity());
        prop_assert_eq!(m.invert().apply(&m.apply(&p)), p.clone());
        let o = Point::origin();
        prop_assert_eq!(orient2d(&m.apply(&o), &m.apply(&p), &m.apply(&r)), orient2d(&o, &p, &r));
    }

    #[test]
    fn overlap_is_symmetric_and_bounded(
        a in (0i64..6, 0i64..6, 1i64..5, 1i64..5),
        b in (0i64..6, 0i64..6, 1i64..5, 1i64..5),
        turn in prop::bool::ANY,
    ) {
        let rect = |(x, y, w, h): (i64, i64, i64, i64)| {
            Polygon::rectangle(&FieldElem::from_int(x), &FieldElem::from_int(y), &FieldElem::from_int(w), &FieldElem::from_int(h)).unwrap()
        };
        let p = rect(a);
        let mut r = rect(b);
        if turn {
            let m = RigidMotion::rotation_about(&Point::new(3, 3), FieldElem::ratio(3, 5), FieldElem::ratio(4, 5)).unwrap();
            r = r.transform(&m);
        }
        let o = overlap_area(&p, &r);
        prop_assert_eq!(&o, &overlap_area(&r, &p));
        prop_assert!(o.sign() >= 0);
        prop_assert!(o <= p.area() && o <= r.area());
        prop_assert_eq!(overlap_area(&p, &p), p.area());
        if !turn {
            // Independent oracle: product of interval overlaps.
            let span = |s0: i64, l0: i64, s1: i64, l1: i64| ((s0 + l0).min(s1 + l1) - s0.max(s1)).max(0);
            let expected = span(a.0, a.2, b.0, b.2) * span(a.1, a.3, b.1, b.3);
            prop_assert_eq!(o, FieldElem::from_int(expected));
        }
    }

    #[test]
    fn triangulation_covers_staircases(steps in prop::collection::vec((1i64..4, 1i64..4), 1..6)) {
        // Monotone staircase: rising steps of the given widths and heights.
        let mut pts = vec![Point::new(0, 0)];
        let (mut x, mut y) = (0i64, 0i64);
        for &(w, h) in &steps {
            x += w;
            pts.push(Point::new(x, y));
            y += h;
            pts.push(Point::new(x, y));
        }
        pts.push(Point::new(0, y));
        let p = Polygon::new(pts).unwrap();
        let tris = triangulate(&p);
        let total: FieldElem = tris.iter().map(Polygon::area).sum();
        prop_assert_eq!(&total, &p.area());
        prop_assert_eq!(tris.len(), p.len() - 2);
        for (i, a) in tris.iter().enumerate() {
            prop_assert_eq!(overlap_area(a, &p), a.area());
            for b in &tris[i + 1..] {
                prop_assert!(overlap_area(a, b).is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn construction_checks_pass(a in pos_rat(), b in pos_rat()) {
        let r = verify(&RightTriangleInput::new(a, b).unwrap());
        prop_assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn construction_scales(a in pos_rat(), b in pos_rat(), k in (1i64..50, 1i64..50)) {
        let k = q(k.0, k.1);
        let kf = FieldElem::from_rational(k.clone());
        let base = build(&RightTriangleInput::new(a.clone(), b.clone()).unwrap());
        let scaled = build(&RightTriangleInput::new(&a * &k, &b * &k).unwrap());
        for ((_, p), (_, s)) in base.named_points().into_iter().zip(scaled.named_points()) {
            prop_assert_eq!(p.scale(&kf), s.clone());
        }
        prop_assert_eq!(base.pentagon().unwrap().area() * kf.square(), scaled.pentagon().unwrap().area());
    }

    #[test]
    fn construction_swap_symmetry(a in pos_rat(), b in pos_rat()) {
        let distances = |cfg: &construction::Configuration| {
            let pts = cfg.named_points();
            let mut d: Vec<FieldElem> = Vec::new();
            for i in 0..pts.len() {
                for j in (i + 1)..pts.len() {
                    d.push(pts[i].1.dist2(pts[j].1));
                }
            }
            d.sort();
            d
        };
        let ab = build(&RightTriangleInput::new(a.clone(), b.clone()).unwrap());
        let ba = build(&RightTriangleInput::new(b, a).unwrap());
        prop_assert_eq!(distances(&ab), distances(&ba));
    }

    #[test]
    fn conclusion_tracks_the_three_premises(
        a in 1i64..20, b in 1i64..20,
        which in 0usize..3,
        dx in (-5i64..=5, 1i64..1000),
        dy in (-5i64..=5, 1i64..1000),
    ) {
        let mut cfg = build(&RightTriangleInput::from_ints(a, b).unwrap());
        let shift = Point { x: FieldElem::ratio(dx.0, dx.1), y: FieldElem::ratio(dy.0, dy.1) };
        let moved = match which {
            0 => &mut cfg.c1,
            1 => &mut cfg.c2,
            _ => &mut cfg.d,
        };
        *moved = moved.add(&shift);
        let premises = construction::check_pentagon_identity(&cfg).passed
            && construction::check_congruences(&cfg).passed
            && construction::check_parallelogram(&cfg).passed;
        let conclusion = construction::check_conclusion(&cfg).passed;
        prop_assert!(!premises || conclusion);
        let unmoved = dx.0 == 0 && dy.0 == 0;
        prop_assert_eq!(premises, unmoved);
        // Sliding C1 along AC (the x-axis) or C2 along BC (the y-axis) keeps
        // that triangle's area, so the conclusion survives exactly then.
        let area_kept = match which {
            0 => dy.0 == 0,
            1 => dx.0 == 0,
            _ => unmoved,
        };
        prop_assert_eq!(conclusion, area_kept);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    #[test]
    fn triangles_become_rectangles(
        a in (-6i64..6, -6i64..6),
        b in (-6i64..6, -6i64..6),
        c in (-6i64..6, -6i64..6),
    ) {
        let pts = vec![Point::new(a.0, a.1), Point::new(b.0, b.1), Point::new(c.0, c.1)];
        prop_assume!(orient2d(&pts[0], &pts[1], &pts[2]) != 0);
        let t = Polygon::new(pts).unwrap();
        let d = triangle_to_rect(&t, &WbgConfig::default()).unwrap();
        prop_assert!(d.pieces.len() <= 3);
        prop_assert_eq!(d.targets[0].area(), t.area());
        let r = verify_dissection(&d);
        prop_assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn rectangles_retarget(u in (1i64..40, 1i64..8), h in (1i64..40, 1i64..8), w in (1i64..20, 1i64..8)) {
        let (u, h, w) = (FieldElem::ratio(u.0, u.1), FieldElem::ratio(h.0, h.1), FieldElem::ratio(w.0, w.1));
        let r = Polygon::rectangle(&FieldElem::zero(), &FieldElem::zero(), &u, &h).unwrap();
        let d = rect_to_width(&r, &w).unwrap();
        let v = verify_dissection(&d);
        prop_assert!(v.passed(), "{}", v.to_text());
        // Halving bound: at most three pieces per strip.
        let ratio = (&u / &w).to_f64().max((&h / &w).to_f64()).max((&w / &u).to_f64());
        let strips = (ratio / 2.0).max(1.0).log2().ceil().exp2();
        prop_assert!(d.pieces.len() as f64 <= 3.0 * strips + 1e-9, "{} pieces", d.pieces.len());
    }

    #[test]
    fn compose_of_verified_is_verified(
        a in (1i64..5, 1i64..5),
        b in (1i64..5, 1i64..5),
        w in (1i64..4, 1i64..4),
    ) {
        let rect = |s: (i64, i64)| Polygon::rectangle(&FieldElem::zero(), &FieldElem::zero(), &FieldElem::from_int(s.0), &FieldElem::from_int(s.1)).unwrap();
        let cfg = WbgConfig::default();
        let first = canonicalize(&[rect(a), rect(b)], &cfg).unwrap();
        let second = rect_to_width(&first.targets[0], &FieldElem::ratio(w.0, w.1)).unwrap();
        let both = compose(&first, &second).unwrap();
        prop_assert_eq!(both.piece_area(), first.piece_area());
        let r = verify_dissection(&both);
        prop_assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn verdict_is_motion_invariant(x in -5i64..5, y in -5i64..5, turn in 0usize..3) {
        let unit = Polygon::rectangle(&FieldElem::zero(), &FieldElem::zero(), &FieldElem::one(), &FieldElem::one()).unwrap();
        let tri = Polygon::new(vec![Point::new(0, 0), Point::new(2, 0), Point::new(0, 1)]).unwrap();
        let d = equidissect::wbg::equidecompose(&[unit], &[tri], &WbgConfig::default()).unwrap();
        let (c, s) = [
            (FieldElem::one(), FieldElem::zero()),
            (FieldElem::ratio(3, 5), FieldElem::ratio(4, 5)),
            (FieldElem::ratio(1, 2), sqrt_of(3) * FieldElem::ratio(1, 2)),
        ][turn].clone();
        let m = RigidMotion::new(c, s, Point::new(x, y)).unwrap();
        let moved = d.move_sources(&m);
        let before: Vec<bool> = verify_dissection(&d).checks.iter().map(|c| c.passed).collect();
        let after: Vec<bool> = verify_dissection(&moved).checks.iter().map(|c| c.passed).collect();
        prop_assert_eq!(before, after);
    }
}
