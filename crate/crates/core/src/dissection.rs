//! Scissors-congruence certificates and their exact verifier.

use rayon::prelude::*;

use crate::exactnum::{BigRational, FieldElem};
use crate::geom2d::{convex_parts, clip_convex_unchecked, overlap_area, Point, Polygon, RigidMotion};
use crate::report::{CheckResult, VerificationReport};

pub const MOTION_VALID: &str = "MOTION_VALID";
pub const AREA_CONSERVED: &str = "AREA_CONSERVED";
pub const SOURCE_CONTAINMENT: &str = "SOURCE_CONTAINMENT";
pub const TARGET_CONTAINMENT: &str = "TARGET_CONTAINMENT";
pub const SOURCE_NON_OVERLAP: &str = "SOURCE_NON_OVERLAP";
pub const TARGET_NON_OVERLAP: &str = "TARGET_NON_OVERLAP";

/// Check names in report order.
pub const CHECKS: [&str; 6] = [
    MOTION_VALID,
    AREA_CONSERVED,
    SOURCE_CONTAINMENT,
    TARGET_CONTAINMENT,
    SOURCE_NON_OVERLAP,
    TARGET_NON_OVERLAP,
];

/// Failing items beyond this many are counted but not listed as witnesses.
const MAX_LISTED: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DissectionError {
    #[error("piece {piece} refers to {side} polygon {index}, but only {len} exist")]
    IndexOutOfRange {
        piece: usize,
        side: &'static str,
        index: usize,
        len: usize,
    },
    #[error("the targets of the first dissection differ from the sources of the second")]
    MidspaceMismatch,
}

/// A piece cut from `sources[source_index]` and placed by `motion` inside
/// `targets[target_index]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub shape: Polygon,
    pub source_index: usize,
    pub motion: RigidMotion,
    pub target_index: usize,
}

impl Piece {
    pub fn new(shape: Polygon, source_index: usize, motion: RigidMotion, target_index: usize) -> Piece {
        Piece {
            shape,
            source_index,
            motion,
            target_index,
        }
    }

    /// The shape in target coordinates. `None` when the motion collapses it.
    pub fn placed(&self) -> Option<Polygon> {
        if self.motion.is_proper() {
            return Some(self.shape.transform(&self.motion));
        }
        // Improper motions of the form (c, s) are similarities; keep checking
        // what they produce so that only MOTION_VALID reports them.
        Polygon::from_simple(self.shape.vertices().iter().map(|p| self.motion.apply(p)).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dissection {
    pub sources: Vec<Polygon>,
    pub targets: Vec<Polygon>,
    pub pieces: Vec<Piece>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DissectionStats {
    pub piece_count: usize,
    pub max_tower_depth: usize,
    pub vertex_count: usize,
}

impl Dissection {
    /// Checks that every piece refers to existing source and target polygons.
    pub fn new(sources: Vec<Polygon>, targets: Vec<Polygon>, pieces: Vec<Piece>) -> Result<Dissection, DissectionError> {
        for (i, p) in pieces.iter().enumerate() {
            if p.source_index >= sources.len() {
                return Err(DissectionError::IndexOutOfRange {
                    piece: i,
                    side: "source",
                    index: p.source_index,
                    len: sources.len(),
                });
            }
            if p.target_index >= targets.len() {
                return Err(DissectionError::IndexOutOfRange {
                    piece: i,
                    side: "target",
                    index: p.target_index,
                    len: targets.len(),
                });
            }
        }
        Ok(Dissection {
            sources,
            targets,
            pieces,
        })
    }

    /// Every polygon mapped to itself as a single piece.
    pub fn identity(polys: Vec<Polygon>) -> Dissection {
        let pieces = polys
            .iter()
            .enumerate()
            .map(|(i, p)| Piece::new(p.clone(), i, RigidMotion::identity(), i))
            .collect();
        Dissection {
            sources: polys.clone(),
            targets: polys,
            pieces,
        }
    }

    pub fn source_area(&self) -> FieldElem {
        self.sources.iter().map(Polygon::area).sum()
    }

    pub fn target_area(&self) -> FieldElem {
        self.targets.iter().map(Polygon::area).sum()
    }

    pub fn piece_area(&self) -> FieldElem {
        self.pieces.iter().map(|p| p.shape.area()).sum()
    }

    pub fn stats(&self) -> DissectionStats {
        let poly_depth = |p: &Polygon| p.tower_depth();
        let max_tower_depth = self
            .pieces
            .iter()
            .map(|p| poly_depth(&p.shape).max(p.motion.tower_depth()))
            .chain(self.sources.iter().map(poly_depth))
            .chain(self.targets.iter().map(poly_depth))
            .max()
            .unwrap_or(0);
        DissectionStats {
            piece_count: self.pieces.len(),
            max_tower_depth,
            vertex_count: self.pieces.iter().map(|p| p.shape.len()).sum(),
        }
    }

    /// Applies `m` to every source and adjusts the piece motions to match;
    /// targets are unchanged.
    pub fn move_sources(&self, m: &RigidMotion) -> Dissection {
        let back = m.invert();
        Dissection {
            sources: self.sources.iter().map(|s| s.transform(m)).collect(),
            targets: self.targets.clone(),
            pieces: self
                .pieces
                .iter()
                .map(|p| Piece::new(p.shape.transform(m), p.source_index, p.motion.compose(&back), p.target_index))
                .collect(),
        }
    }
}

fn index_witness(kind: &str, i: usize) -> String {
    format!("{kind} {i}")
}

fn check_motions(d: &Dissection) -> CheckResult {
    let one = FieldElem::one();
    let bad: Vec<(usize, FieldElem)> = d
        .pieces
        .iter()
        .enumerate()
        .map(|(i, p)| (i, p.motion.c.square() + p.motion.s.square()))
        .filter(|(_, n)| *n != one)
        .collect();
    let mut r = CheckResult::new(MOTION_VALID, bad.is_empty());
    for (i, n) in bad.iter().take(MAX_LISTED) {
        r = r.witness(format!("piece {i}: c^2 + s^2"), n.clone());
    }
    r
}

fn check_area(d: &Dissection) -> CheckResult {
    let pieces = d.piece_area();
    let sources = d.source_area();
    let targets = d.target_area();
    let passed = pieces == sources && sources == targets;
    CheckResult::new(AREA_CONSERVED, passed)
        .witness("sum area(pieces)", pieces)
        .witness("sum area(sources)", sources)
        .witness("sum area(targets)", targets)
}

/// `overlap_area(shape, region) == area(shape)` for every piece.
fn check_containment(name: &str, shapes: &[Option<Polygon>], regions: &[Polygon], index: impl Fn(usize) -> usize + Sync) -> CheckResult {
    let bad: Vec<(usize, FieldElem)> = shapes
        .par_iter()
        .enumerate()
        .filter_map(|(i, shape)| {
            let Some(shape) = shape else {
                return Some((i, FieldElem::zero()));
            };
            let Some(region) = regions.get(index(i)) else {
                return Some((i, shape.area()));
            };
            let missing = shape.area() - overlap_area(shape, region);
            (!missing.is_zero()).then_some((i, missing))
        })
        .collect();
    let mut r = CheckResult::new(name, bad.is_empty());
    for (i, missing) in bad.iter().take(MAX_LISTED) {
        r = r.witness(format!("{}: area outside", index_witness("piece", *i)), missing.clone());
    }
    if bad.len() > MAX_LISTED {
        r = r.note(format!("{} pieces fail", bad.len()));
    }
    r
}

/// Polygons sorted by the lower end of their y-range, answering "which
/// ranges meet `[lo, hi]`" without scanning everything.
struct YIndex {
    order: Vec<usize>,
    min_y: Vec<BigRational>,
    /// Running maximum of the upper ends, in `order`.
    reach: Vec<BigRational>,
    max_y: Vec<BigRational>,
}

impl YIndex {
    fn new<'a>(items: impl Iterator<Item = (usize, &'a Polygon)>) -> YIndex {
        let mut rows: Vec<(usize, BigRational, BigRational)> = items
            .map(|(i, p)| (i, p.bounds().min_y.clone(), p.bounds().max_y.clone()))
            .collect();
        rows.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
        let mut reach: Vec<BigRational> = Vec::with_capacity(rows.len());
        for r in &rows {
            let next = match reach.last() {
                Some(m) if *m > r.2 => m.clone(),
                _ => r.2.clone(),
            };
            reach.push(next);
        }
        YIndex {
            order: rows.iter().map(|r| r.0).collect(),
            min_y: rows.iter().map(|r| r.1.clone()).collect(),
            max_y: rows.into_iter().map(|r| r.2).collect(),
            reach,
        }
    }

    /// Items whose y-range meets `[lo, hi]`, in increasing item order.
    fn query(&self, lo: &BigRational, hi: &BigRational) -> Vec<usize> {
        let start = self.reach.partition_point(|m| m < lo);
        let end = self.min_y.partition_point(|m| m <= hi);
        let mut out: Vec<usize> = (start..end.max(start))
            .filter(|&k| &self.max_y[k] >= lo)
            .map(|k| self.order[k])
            .collect();
        out.sort_unstable();
        out
    }
}

/// Pairwise zero-area overlap among shapes assigned to the same region.
fn check_non_overlap(name: &str, shapes: &[Option<Polygon>], region_of: &[usize]) -> CheckResult {
    let index = YIndex::new(shapes.iter().enumerate().filter_map(|(i, s)| s.as_ref().map(|s| (i, s))));
    let pairs: Vec<(usize, usize)> = shapes
        .iter()
        .enumerate()
        .filter_map(|(i, s)| s.as_ref().map(|s| (i, s)))
        .flat_map(|(i, s)| {
            let b = s.bounds();
            index
                .query(&b.min_y, &b.max_y)
                .into_iter()
                .filter(move |&j| j > i && region_of[i] == region_of[j])
                .map(move |j| (i, j))
        })
        .collect();
    let bad: Vec<(usize, usize, FieldElem)> = pairs
        .par_iter()
        .filter_map(|&(i, j)| match (&shapes[i], &shapes[j]) {
            (Some(a), Some(b)) => {
                let o = overlap_area(a, b);
                (!o.is_zero()).then_some((i, j, o))
            }
            _ => None,
        })
        .collect();
    let mut r = CheckResult::new(name, bad.is_empty());
    for (i, j, o) in bad.iter().take(MAX_LISTED) {
        r = r.witness(format!("pieces {i} and {j}: overlap"), o.clone());
    }
    if bad.len() > MAX_LISTED {
        r = r.note(format!("{} overlapping pairs", bad.len()));
    }
    r
}

/// Runs the six exact checks in fixed order. Together they say that the
/// pieces tile the sources and, after their motions, tile the targets.
pub fn verify_dissection(d: &Dissection) -> VerificationReport {
    let sources: Vec<Option<Polygon>> = d.pieces.iter().map(|p| Some(p.shape.clone())).collect();
    let placed: Vec<Option<Polygon>> = d.pieces.par_iter().map(Piece::placed).collect();
    let src_idx: Vec<usize> = d.pieces.iter().map(|p| p.source_index).collect();
    let tgt_idx: Vec<usize> = d.pieces.iter().map(|p| p.target_index).collect();
    VerificationReport::new(vec![
        check_motions(d),
        check_area(d),
        check_containment(SOURCE_CONTAINMENT, &sources, &d.sources, |i| src_idx[i]),
        check_containment(TARGET_CONTAINMENT, &placed, &d.targets, |i| tgt_idx[i]),
        check_non_overlap(SOURCE_NON_OVERLAP, &sources, &src_idx),
        check_non_overlap(TARGET_NON_OVERLAP, &placed, &tgt_idx),
    ])
}

/// Swaps the roles of sources and targets.
pub fn inverse(d: &Dissection) -> Dissection {
    Dissection {
        sources: d.targets.clone(),
        targets: d.sources.clone(),
        pieces: d
            .pieces
            .iter()
            .map(|p| Piece::new(p.shape.transform(&p.motion), p.target_index, p.motion.invert(), p.source_index))
            .collect(),
    }
}

/// Pieces of `m ∩ q`: whole when one contains the other, convex fragments otherwise.
fn intersect(m: &Polygon, q: &Polygon) -> Vec<Polygon> {
    if m.bounds().separated(q.bounds()) {
        return Vec::new();
    }
    let o = overlap_area(m, q);
    if o.is_zero() {
        return Vec::new();
    }
    if o == m.area() {
        return vec![m.clone()];
    }
    if o == q.area() {
        return vec![q.clone()];
    }
    let qq = convex_parts(q);
    let mut out = Vec::new();
    for a in convex_parts(m) {
        for b in &qq {
            out.extend(clip_convex_unchecked(&a, b));
        }
    }
    out
}

/// Refines `first` (S -> M) and `second` (M -> T) into one dissection S -> T.
pub fn compose(first: &Dissection, second: &Dissection) -> Result<Dissection, DissectionError> {
    if first.targets != second.sources {
        return Err(DissectionError::MidspaceMismatch);
    }
    let index = YIndex::new(second.pieces.iter().map(|p| &p.shape).enumerate());
    let per_piece: Vec<Vec<Piece>> = first
        .pieces
        .par_iter()
        .map(|p1| {
            let Some(mid) = p1.placed() else {
                return Vec::new();
            };
            let back = p1.motion.invert();
            let mut out = Vec::new();
            let b = mid.bounds();
            let candidates = index.query(&b.min_y, &b.max_y);
            for p2 in candidates.iter().map(|&j| &second.pieces[j]).filter(|p2| p2.source_index == p1.target_index) {
                for frag in intersect(&mid, &p2.shape) {
                    out.push(Piece::new(
                        frag.transform(&back),
                        p1.source_index,
                        p2.motion.compose(&p1.motion),
                        p2.target_index,
                    ));
                }
            }
            out
        })
        .collect();
    Ok(Dissection {
        sources: first.sources.clone(),
        targets: second.targets.clone(),
        pieces: per_piece.into_iter().flatten().collect(),
    })
}

/// Convenience used by tests and fixtures: the point `(x, y)` from small rationals.
pub fn pt(x: (i64, i64), y: (i64, i64)) -> Point {
    Point {
        x: FieldElem::ratio(x.0, x.1),
        y: FieldElem::ratio(y.0, y.1),
    }
}
