use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::node::{self, Node};
use super::{NumError, DEFAULT_MAX_TOWER_DEPTH};

/// The ordered radicands `r_1, ..., r_k` of a tower `Q(sqrt r_1)...(sqrt r_k)`.
///
/// Every radicand is positive and is not a square in the field below it.
#[derive(Clone, Debug, Default)]
pub struct Tower(Arc<Vec<Node>>);

impl Tower {
    pub fn rationals() -> Tower {
        Tower::default()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// The radicands, each as an element of the tower below it.
    pub fn radicands(&self) -> Vec<FieldElem> {
        (0..self.depth())
            .map(|i| FieldElem {
                tower: Tower(Arc::new(self.0[..i].to_vec())),
                node: self.0[i].clone(),
            })
            .collect()
    }

    pub(crate) fn rads(&self) -> &[Node] {
        &self.0
    }

    fn is_prefix_of(&self, other: &Tower) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.depth() <= other.depth() && self.0[..] == other.0[..self.depth()])
    }

    /// Smallest tower extending `self` that also contains every generator of
    /// `other`; returns the images of `other`'s generators.
    fn merge(&self, other: &Tower) -> (Tower, Vec<Node>) {
        let mut rads: Vec<Node> = self.0.as_ref().clone();
        let mut images = Vec::with_capacity(other.depth());
        for r in other.0.iter() {
            let r_img = node::map(r, &images, &rads);
            match node::try_sqrt(&r_img, rads.len(), &rads) {
                Some(root) => images.push(root),
                None => {
                    rads.push(r_img);
                    images.push(Node::generator(rads.len()));
                }
            }
        }
        (Tower(Arc::new(rads)), images)
    }
}

impl PartialEq for Tower {
    fn eq(&self, other: &Tower) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Tower {}

/// An element of a tower of real quadratic extensions of the rationals.
///
/// Values are immutable; arithmetic between elements of different towers
/// first lifts both into a common tower.
#[derive(Clone)]
pub struct FieldElem {
    tower: Tower,
    node: Node,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn unify<'a>(a: &'a FieldElem, b: &'a FieldElem) -> (Tower, Cow<'a, Node>, Cow<'a, Node>) {
    if a.tower.is_prefix_of(&b.tower) {
        (b.tower.clone(), Cow::Borrowed(&a.node), Cow::Borrowed(&b.node))
    } else if b.tower.is_prefix_of(&a.tower) {
        (a.tower.clone(), Cow::Borrowed(&a.node), Cow::Borrowed(&b.node))
    } else {
        let (tower, images) = a.tower.merge(&b.tower);
        let mapped = node::map(&b.node, &images, tower.rads());
        (tower, Cow::Borrowed(&a.node), Cow::Owned(mapped))
    }
}

impl FieldElem {
    pub fn zero() -> FieldElem {
        FieldElem::from_rational(BigRational::from_integer(0.into()))
    }

    pub fn one() -> FieldElem {
        FieldElem::from_rational(BigRational::from_integer(1.into()))
    }

    pub fn from_rational(q: BigRational) -> FieldElem {
        FieldElem {
            tower: Tower::rationals(),
            node: Node::Rat(q),
        }
    }

    pub fn from_int(n: i64) -> FieldElem {
        FieldElem::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p / q`; panics when `q == 0`.
    pub fn ratio(p: i64, q: i64) -> FieldElem {
        assert!(q != 0, "zero denominator");
        FieldElem::from_rational(BigRational::new(p.into(), q.into()))
    }

    pub(crate) fn node(&self) -> &Node {
        &self.node
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn tower_depth(&self) -> usize {
        self.tower.depth()
    }

    pub fn is_zero(&self) -> bool {
        self.node.is_zero()
    }

    /// The rational value, when the element is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.node.as_rational()
    }

    /// Components of `x + y * sqrt(r)` at the element's own level, with `r`
    /// the radicand of that level; `None` for rationals.
    pub fn components(&self) -> Option<(FieldElem, FieldElem, FieldElem)> {
        match &self.node {
            Node::Rat(_) => None,
            Node::Ext { level, x, y } => {
                let below = Tower(Arc::new(self.tower.rads()[..level - 1].to_vec()));
                let part = |n: &Node| FieldElem {
                    tower: below.clone(),
                    node: n.clone(),
                };
                Some((part(x), part(y), part(&self.tower.rads()[level - 1])))
            }
        }
    }

    /// Exact sign as -1, 0 or +1.
    pub fn sign(&self) -> i32 {
        match self.signum_ord() {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    fn signum_ord(&self) -> Ordering {
        node::sign(&self.node, self.tower.rads())
    }

    pub fn is_positive(&self) -> bool {
        self.signum_ord() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum_ord() == Ordering::Less
    }

    pub fn abs(&self) -> FieldElem {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn square(&self) -> FieldElem {
        self * self
    }

    /// Arithmetic that reports failures instead of panicking; the common
    /// tower must not exceed `max_depth`.
    pub fn arith(&self, other: &FieldElem, op: ArithOp, max_depth: usize) -> Result<FieldElem, NumError> {
        let (tower, a, b) = unify(self, other);
        if tower.depth() > max_depth {
            return Err(NumError::TowerLimitExceeded {
                depth: tower.depth(),
                limit: max_depth,
            });
        }
        let rads = tower.rads();
        let node = match op {
            ArithOp::Add => node::add(&a, &b, rads),
            ArithOp::Sub => node::sub(&a, &b, rads),
            ArithOp::Mul => node::mul(&a, &b, rads),
            ArithOp::Div => {
                if b.is_zero() {
                    return Err(NumError::DivisionByZero);
                }
                node::mul(&a, &node::inv(&b, rads), rads)
            }
        };
        Ok(FieldElem { tower, node })
    }

    pub fn checked_div(&self, other: &FieldElem) -> Result<FieldElem, NumError> {
        self.arith(other, ArithOp::Div, usize::MAX)
    }

    pub fn recip(&self) -> Result<FieldElem, NumError> {
        FieldElem::one().checked_div(self)
    }

    /// Square root with the default depth limit.
    pub fn sqrt_adjoin(&self) -> Result<FieldElem, NumError> {
        self.sqrt_adjoin_limited(DEFAULT_MAX_TOWER_DEPTH)
    }

    /// The non-negative square root. Stays in the current tower when the
    /// value is already a square there; otherwise adjoins it as a new radicand.
    pub fn sqrt_adjoin_limited(&self, max_depth: usize) -> Result<FieldElem, NumError> {
        if self.is_negative() {
            return Err(NumError::NegativeRadicand);
        }
        let rads = self.tower.rads();
        if let Some(root) = node::try_sqrt(&self.node, rads.len(), rads) {
            return Ok(FieldElem {
                tower: self.tower.clone(),
                node: root,
            });
        }
        if rads.len() + 1 > max_depth {
            return Err(NumError::TowerLimitExceeded {
                depth: rads.len() + 1,
                limit: max_depth,
            });
        }
        let mut extended = rads.to_vec();
        extended.push(self.node.clone());
        let level = extended.len();
        Ok(FieldElem {
            tower: Tower(Arc::new(extended)),
            node: Node::generator(level),
        })
    }

    /// Lifts `self` into `tower`, which must already contain every generator
    /// of the element's own tower (it is merged otherwise).
    pub fn lift_into(&self, tower: &Tower) -> FieldElem {
        let anchor = FieldElem {
            tower: tower.clone(),
            node: Node::zero(),
        };
        let (t, _, b) = unify(&anchor, self);
        let node = b.into_owned();
        FieldElem { tower: t, node }
    }

    fn binary(&self, other: &FieldElem, op: ArithOp) -> FieldElem {
        match self.arith(other, op, usize::MAX) {
            Ok(v) => v,
            Err(e) => panic!("{e}"),
        }
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &FieldElem) -> bool {
        let (_, a, b) = unify(self, other);
        a == b
    }
}

impl Eq for FieldElem {}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &FieldElem) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElem {
    fn cmp(&self, other: &FieldElem) -> Ordering {
        let (tower, a, b) = unify(self, other);
        let rads = tower.rads();
        node::sign(&node::sub(&a, &b, rads), rads)
    }
}

impl From<BigRational> for FieldElem {
    fn from(q: BigRational) -> FieldElem {
        FieldElem::from_rational(q)
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> FieldElem {
        FieldElem::from_int(n)
    }
}

fn fmt_node(n: &Node, rads: &[Node], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match n {
        Node::Rat(q) => write!(f, "{q}"),
        Node::Ext { level, x, y } => {
            write!(f, "(")?;
            fmt_node(x, rads, f)?;
            write!(f, " + ")?;
            fmt_node(y, rads, f)?;
            write!(f, "*sqrt(")?;
            fmt_node(&rads[level - 1], rads, f)?;
            write!(f, "))")
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_node(&self.node, self.tower.rads(), f)
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem({self}; depth {})", self.tower.depth())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.binary(rhs, $op)
            }
        }
        impl $trait<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.binary(&rhs, $op)
            }
        }
        impl $trait<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.binary(rhs, $op)
            }
        }
        impl $trait<FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.binary(&rhs, $op)
            }
        }
    };
}

forward_binop!(Add, add, ArithOp::Add);
forward_binop!(Sub, sub, ArithOp::Sub);
forward_binop!(Mul, mul, ArithOp::Mul);
// Panics on division by zero, like the integer types; see `checked_div`.
forward_binop!(Div, div, ArithOp::Div);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            tower: self.tower.clone(),
            node: node::neg(&self.node),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl std::iter::Sum for FieldElem {
    fn sum<I: Iterator<Item = FieldElem>>(iter: I) -> FieldElem {
        iter.fold(FieldElem::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a FieldElem> for FieldElem {
    fn sum<I: Iterator<Item = &'a FieldElem>>(iter: I) -> FieldElem {
        iter.fold(FieldElem::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt(n: i64) -> FieldElem {
        FieldElem::from_int(n).sqrt_adjoin().unwrap()
    }

    #[test]
    fn arith_examples() {
        let s3 = sqrt(3);
        let one = FieldElem::one();
        let a = &one + &s3;
        let b = FieldElem::from_int(2) - &s3;
        assert_eq!(&a + &b, FieldElem::from_int(3));
        assert_eq!(&a * &(&one - &s3), FieldElem::from_int(-2));
        // 1 / (1 + sqrt 3) = (-1 + sqrt 3) / 2
        let q = (&one / &a).clone();
        let expected = (&s3 - &one) / FieldElem::from_int(2);
        assert_eq!(q, expected);
        assert_eq!(&q * &a, one);
    }

    #[test]
    fn division_by_zero_is_reported() {
        let z = FieldElem::zero();
        assert_eq!(FieldElem::one().checked_div(&z), Err(NumError::DivisionByZero));
        let s3 = sqrt(3);
        let zero_in_tower = &s3 - &s3;
        assert_eq!(s3.checked_div(&zero_in_tower), Err(NumError::DivisionByZero));
    }

    #[test]
    fn sign_examples() {
        let s3 = sqrt(3);
        assert_eq!(FieldElem::zero().sign(), 0);
        assert_eq!((FieldElem::one() - FieldElem::ratio(2, 3) * &s3).sign(), -1);
        assert_eq!((FieldElem::from_int(7) - FieldElem::from_int(4) * &s3).sign(), 1);
    }

    #[test]
    fn sqrt_adjoin_examples() {
        let r = FieldElem::ratio(9, 4).sqrt_adjoin().unwrap();
        assert_eq!(r, FieldElem::ratio(3, 2));
        assert_eq!(r.tower_depth(), 0);
        let s3 = sqrt(3);
        assert_eq!(s3.tower_depth(), 1);
        let s2 = sqrt(2);
        let p = &s2 * &s3;
        assert_eq!(p.tower_depth(), 2);
        assert_eq!(p.square(), FieldElem::from_int(6));
        assert_eq!(FieldElem::from_int(-1).sqrt_adjoin(), Err(NumError::NegativeRadicand));
    }

    #[test]
    fn radicands_are_deduplicated() {
        let s3 = sqrt(3);
        let again = (&s3 * &s3 * FieldElem::from_int(4)).sqrt_adjoin().unwrap();
        assert_eq!(again, &s3 * FieldElem::from_int(2));
        assert_eq!(again.tower_depth(), 1);
        // sqrt(12) in Q(sqrt 3) is found without adjunction
        let twelve = &s3 - &s3 + FieldElem::from_int(12);
        let r = twelve.sqrt_adjoin().unwrap();
        assert_eq!(r.tower_depth(), 1);
        assert_eq!(r, FieldElem::from_int(2) * &s3);
        // sqrt 6 is a square root in Q(sqrt 2)(sqrt 3)
        let s6 = (&sqrt(2) * &s3).square().lift_into(sqrt(2).tower()).sqrt_adjoin().unwrap();
        assert_eq!(s6.square(), FieldElem::from_int(6));
    }

    #[test]
    fn towers_in_different_orders_agree() {
        let a = &sqrt(2) + &sqrt(3);
        let b = &sqrt(3) + &sqrt(2);
        assert_eq!(a, b);
        let c = (&a).square();
        // (sqrt 2 + sqrt 3)^2 = 5 + 2 sqrt 6
        assert_eq!(c, FieldElem::from_int(5) + FieldElem::from_int(2) * sqrt(6));
    }

    #[test]
    fn nested_radicals() {
        let s2 = sqrt(2);
        let inner = FieldElem::from_int(2) + &s2;
        let root = inner.sqrt_adjoin().unwrap();
        assert_eq!(root.tower_depth(), 2);
        assert_eq!(root.square(), inner);
        assert!(root.is_positive());
        // 1.84 < sqrt(2 + sqrt 2) < 1.85
        assert!(root > FieldElem::ratio(184, 100));
        assert!(root < FieldElem::ratio(185, 100));
    }

    #[test]
    fn depth_limit_is_an_error() {
        let s2 = sqrt(2);
        let e = FieldElem::from_int(3).lift_into(s2.tower()).sqrt_adjoin_limited(1);
        assert_eq!(e, Err(NumError::TowerLimitExceeded { depth: 2, limit: 1 }));
        let r = sqrt(2).arith(&sqrt(3), ArithOp::Add, 1);
        assert!(matches!(r, Err(NumError::TowerLimitExceeded { .. })));
    }
}
