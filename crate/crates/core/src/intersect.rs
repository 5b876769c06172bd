//! Exact test for whether two simplices meet in a common face.

use num::{One, Signed, Zero};

use crate::linalg::AffineFrame;
use crate::lp::{maximize, LpOutcome};
use crate::point::Point;
use crate::rational::Rational;

/// Axis-aligned bounding box of a point set.
#[derive(Clone, Debug)]
pub struct BoundingBox {
    pub lo: Vec<Rational>,
    pub hi: Vec<Rational>,
}

impl BoundingBox {
    pub fn of(points: &[&Point]) -> Self {
        let mut lo = points[0].coords().to_vec();
        let mut hi = lo.clone();
        for p in &points[1..] {
            for (i, c) in p.coords().iter().enumerate() {
                if *c < lo[i] {
                    lo[i] = c.clone();
                }
                if *c > hi[i] {
                    hi[i] = c.clone();
                }
            }
        }
        BoundingBox { lo, hi }
    }

    pub fn overlaps(&self, other: &BoundingBox) -> bool {
        (0..self.lo.len()).all(|i| self.lo[i] <= other.hi[i] && other.lo[i] <= self.hi[i])
    }

    pub fn contains(&self, x: &Point) -> bool {
        x.coords().iter().enumerate().all(|(i, c)| self.lo[i] <= *c && *c <= self.hi[i])
    }
}

/// A simplex prepared for repeated intersection queries.
pub struct Prepared<'a> {
    pub points: Vec<&'a Point>,
    pub bbox: BoundingBox,
    /// Present when the simplex spans the whole ambient space.
    pub frame: Option<AffineFrame>,
}

impl<'a> Prepared<'a> {
    pub fn new(points: Vec<&'a Point>) -> Self {
        let bbox = BoundingBox::of(&points);
        let full = points.len() == points[0].dim() + 1;
        let frame = if full { AffineFrame::new(&points) } else { None };
        Prepared { points, bbox, frame }
    }
}

/// Decides whether `|a| ∩ |b|` is the convex hull of their shared vertices.
///
/// `shared_a[i]` marks the vertices of `a` that are also vertices of `b`.
/// Both simplices must be affinely independent.
pub fn meet_properly(a: &Prepared<'_>, b: &Prepared<'_>, shared_a: &[bool], shared_b: &[bool]) -> bool {
    if !a.bbox.overlaps(&b.bbox) {
        return true;
    }
    if separated_by_facet(a, b, shared_a, shared_b) || separated_by_facet(b, a, shared_b, shared_a) {
        return true;
    }
    !overlap_beyond_shared(&a.points, &b.points, shared_a)
}

/// Cheap certificate: some facet hyperplane of a full-dimensional `a`, off a
/// non-shared vertex, has all of `b` on its far side, touching only shared
/// vertices.
fn separated_by_facet(a: &Prepared<'_>, b: &Prepared<'_>, shared_a: &[bool], shared_b: &[bool]) -> bool {
    let Some(frame) = &a.frame else {
        return false;
    };
    let weights: Vec<Vec<Rational>> = match b.points.iter().map(|p| frame.weights(p)).collect() {
        Some(w) => w,
        None => return false,
    };
    (0..a.points.len())
        .filter(|&i| !shared_a[i])
        .any(|i| weights.iter().zip(shared_b).all(|(w, &shared)| w[i].is_negative() || (w[i].is_zero() && shared)))
}

/// LP: is there a common point whose barycentric weights in `a` put mass on
/// a vertex that `b` does not share?
fn overlap_beyond_shared(a: &[&Point], b: &[&Point], shared_a: &[bool]) -> bool {
    let na = a.len();
    let nb = b.len();
    let d = a[0].dim();
    let mut rows = Vec::with_capacity(d + 2);
    let mut rhs = Vec::with_capacity(d + 2);
    let indicator = |range: std::ops::Range<usize>| -> Vec<Rational> {
        (0..na + nb).map(|j| if range.contains(&j) { Rational::one() } else { Rational::zero() }).collect()
    };
    rows.push(indicator(0..na));
    rhs.push(Rational::one());
    rows.push(indicator(na..na + nb));
    rhs.push(Rational::one());
    for r in 0..d {
        let mut row: Vec<Rational> = a.iter().map(|p| p.coords()[r].clone()).collect();
        row.extend(b.iter().map(|p| -&p.coords()[r]));
        rows.push(row);
        rhs.push(Rational::zero());
    }
    let mut objective = vec![Rational::zero(); na + nb];
    for (i, &shared) in shared_a.iter().enumerate() {
        if !shared {
            objective[i] = Rational::one();
        }
    }
    match maximize(&rows, &rhs, &objective) {
        LpOutcome::Optimal(v) => v.is_positive(),
        LpOutcome::Infeasible => false,
        LpOutcome::Unbounded => unreachable!("weights are bounded"),
    }
}
