//! Coefficient trees over a fixed list of radicands.
//!
//! A tower with radicands `r_1, ..., r_k` is represented by the slice
//! `rads`, where `rads[i - 1]` is the radicand adjoined at level `i` and is
//! itself a node of level `< i`. A node of level `l > 0` stands for
//! `x + y * sqrt(r_l)` with `x`, `y` of level `< l` and `y != 0`, so every
//! element has exactly one representation: the one at the lowest level that
//! contains it.

use std::cmp::Ordering;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rational::rational_sqrt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Node {
    Rat(BigRational),
    Ext {
        level: usize,
        x: Arc<Node>,
        y: Arc<Node>,
    },
}

impl Node {
    pub(crate) fn zero() -> Node {
        Node::Rat(BigRational::zero())
    }

    pub(crate) fn one() -> Node {
        Node::Rat(BigRational::one())
    }

    /// The generator `sqrt(r_level)`.
    pub(crate) fn generator(level: usize) -> Node {
        Node::Ext {
            level,
            x: Arc::new(Node::zero()),
            y: Arc::new(Node::one()),
        }
    }

    pub(crate) fn level(&self) -> usize {
        match self {
            Node::Rat(_) => 0,
            Node::Ext { level, .. } => *level,
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        matches!(self, Node::Rat(q) if q.is_zero())
    }

    pub(crate) fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Node::Rat(q) => Some(q),
            Node::Ext { .. } => None,
        }
    }

    /// Components at `level`: `(x, Some(y))` when this node lives at that
    /// level, `(self, None)` when it lives strictly below.
    fn split(&self, level: usize) -> (&Node, Option<&Node>) {
        match self {
            Node::Ext { level: l, x, y } if *l == level => (x, Some(y)),
            _ => (self, None),
        }
    }

    fn make(level: usize, x: Node, y: Node) -> Node {
        if y.is_zero() {
            x
        } else {
            Node::Ext {
                level,
                x: Arc::new(x),
                y: Arc::new(y),
            }
        }
    }
}

pub(crate) fn neg(a: &Node) -> Node {
    match a {
        Node::Rat(q) => Node::Rat(-q),
        Node::Ext { level, x, y } => Node::Ext {
            level: *level,
            x: Arc::new(neg(x)),
            y: Arc::new(neg(y)),
        },
    }
}

pub(crate) fn add(a: &Node, b: &Node, rads: &[Node]) -> Node {
    if let (Node::Rat(p), Node::Rat(q)) = (a, b) {
        return Node::Rat(p + q);
    }
    let level = a.level().max(b.level());
    let (ax, ay) = a.split(level);
    let (bx, by) = b.split(level);
    let x = add(ax, bx, rads);
    let y = match (ay, by) {
        (Some(ay), Some(by)) => add(ay, by, rads),
        (Some(y), None) | (None, Some(y)) => y.clone(),
        (None, None) => unreachable!("one operand lives at the top level"),
    };
    Node::make(level, x, y)
}

pub(crate) fn sub(a: &Node, b: &Node, rads: &[Node]) -> Node {
    add(a, &neg(b), rads)
}

pub(crate) fn mul(a: &Node, b: &Node, rads: &[Node]) -> Node {
    if let (Node::Rat(p), Node::Rat(q)) = (a, b) {
        return Node::Rat(p * q);
    }
    if a.is_zero() || b.is_zero() {
        return Node::zero();
    }
    let level = a.level().max(b.level());
    match (a.split(level), b.split(level)) {
        ((ax, Some(ay)), (bx, Some(by))) => {
            let r = &rads[level - 1];
            let xx = mul(ax, bx, rads);
            let yy = mul(&mul(ay, by, rads), r, rads);
            let x = add(&xx, &yy, rads);
            let y = add(&mul(ax, by, rads), &mul(ay, bx, rads), rads);
            Node::make(level, x, y)
        }
        ((k, None), (bx, Some(by))) | ((bx, Some(by)), (k, None)) => {
            Node::make(level, mul(k, bx, rads), mul(k, by, rads))
        }
        ((_, None), (_, None)) => unreachable!("one operand lives at the top level"),
    }
}

/// Multiplicative inverse. The caller guarantees `a != 0`.
pub(crate) fn inv(a: &Node, rads: &[Node]) -> Node {
    match a {
        Node::Rat(q) => Node::Rat(q.recip()),
        Node::Ext { level, x, y } => {
            let r = &rads[level - 1];
            let norm = sub(&mul(x, x, rads), &mul(&mul(y, y, rads), r, rads), rads);
            let norm_inv = inv(&norm, rads);
            Node::make(
                *level,
                mul(x, &norm_inv, rads),
                neg(&mul(y, &norm_inv, rads)),
            )
        }
    }
}

pub(crate) fn sign(a: &Node, rads: &[Node]) -> Ordering {
    match a {
        Node::Rat(q) => q.cmp(&BigRational::zero()),
        Node::Ext { level, x, y } => {
            let sx = sign(x, rads);
            let sy = sign(y, rads);
            if sx == Ordering::Equal {
                return sy;
            }
            if sx == sy {
                return sx;
            }
            // Opposite signs: compare x^2 against y^2 * r in the subfield.
            let r = &rads[level - 1];
            let d = sub(&mul(x, x, rads), &mul(&mul(y, y, rads), r, rads), rads);
            match sign(&d, rads) {
                Ordering::Greater => sx,
                Ordering::Less => sy,
                Ordering::Equal => unreachable!("radicands are not squares of subfield elements"),
            }
        }
    }
}

/// Non-negative square root of `a` inside the field generated by the first
/// `depth` radicands, if one exists there.
pub(crate) fn try_sqrt(a: &Node, depth: usize, rads: &[Node]) -> Option<Node> {
    if sign(a, rads) == Ordering::Less {
        return None;
    }
    if depth == 0 {
        return rational_sqrt(a.as_rational()?).map(Node::Rat);
    }
    let r = &rads[depth - 1];
    let (x, y) = a.split(depth);
    let root = match y {
        None => {
            if let Some(s) = try_sqrt(x, depth - 1, rads) {
                s
            } else {
                let q = mul(x, &inv(r, rads), rads);
                let s = try_sqrt(&q, depth - 1, rads)?;
                Node::make(depth, Node::zero(), s)
            }
        }
        Some(y) => {
            // (u + v sqrt r)^2 = x + y sqrt r forces u^2 = (x +- n) / 2 with
            // n^2 = x^2 - y^2 r.
            let norm = sub(&mul(x, x, rads), &mul(&mul(y, y, rads), r, rads), rads);
            let n = try_sqrt(&norm, depth - 1, rads)?;
            let half = Node::Rat(BigRational::new(1.into(), 2.into()));
            let candidates = [add(x, &n, rads), sub(x, &n, rads)];
            let mut found = None;
            for c in candidates {
                let u_sq = mul(&c, &half, rads);
                if let Some(u) = try_sqrt(&u_sq, depth - 1, rads) {
                    if u.is_zero() {
                        continue;
                    }
                    let two_u = add(&u, &u, rads);
                    let v = mul(y, &inv(&two_u, rads), rads);
                    found = Some(Node::make(depth, u, v));
                    break;
                }
            }
            found?
        }
    };
    debug_assert_eq!(&mul(&root, &root, rads), a);
    if sign(&root, rads) == Ordering::Less {
        Some(neg(&root))
    } else {
        Some(root)
    }
}

/// Re-expresses a node of another tower, given the images of that tower's
/// generators in `rads`.
pub(crate) fn map(a: &Node, images: &[Node], rads: &[Node]) -> Node {
    match a {
        Node::Rat(_) => a.clone(),
        Node::Ext { level, x, y } => {
            let x = map(x, images, rads);
            let y = map(y, images, rads);
            add(&x, &mul(&y, &images[level - 1], rads), rads)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{make_rational, rat};

    fn q(n: i64) -> Node {
        Node::Rat(rat(n))
    }

    fn sqrt3_tower() -> Vec<Node> {
        vec![q(3)]
    }

    fn elem(x: Node, y: Node) -> Node {
        Node::make(1, x, y)
    }

    #[test]
    fn cancellation_collapses_to_rational() {
        let rads = sqrt3_tower();
        let a = elem(q(1), q(1));
        let b = elem(q(2), q(-1));
        assert_eq!(add(&a, &b, &rads), q(3));
        assert_eq!(mul(&a, &elem(q(1), q(-1)), &rads), q(-2));
    }

    #[test]
    fn signs_in_sqrt3() {
        let rads = sqrt3_tower();
        let two_thirds = Node::Rat(make_rational(-2, 3).unwrap());
        assert_eq!(sign(&elem(q(1), two_thirds), &rads), Ordering::Less);
        assert_eq!(sign(&elem(q(7), q(-4)), &rads), Ordering::Greater);
        assert_eq!(sign(&elem(q(-7), q(4)), &rads), Ordering::Less);
    }

    #[test]
    fn nested_square_roots_are_found() {
        let rads = sqrt3_tower();
        // (2 + sqrt 3) = ((1 + sqrt 3)^2) / 2, and 7 + 4 sqrt 3 = (2 + sqrt 3)^2
        let a = elem(q(7), q(4));
        assert_eq!(try_sqrt(&a, 1, &rads), Some(elem(q(2), q(1))));
        // 12 = (2 sqrt 3)^2
        assert_eq!(try_sqrt(&q(12), 1, &rads), Some(elem(q(0), q(2))));
        assert_eq!(try_sqrt(&q(2), 1, &rads), None);
        // 7 - 4 sqrt 3 = (2 - sqrt 3)^2, and 2 - sqrt 3 > 0
        assert_eq!(try_sqrt(&elem(q(7), q(-4)), 1, &rads), Some(elem(q(2), q(-1))));
    }
}
