//! Constructive subdivision: starring from interior points, barycentric
//! subdivision and its iterates, the flag construction, induced
//! subdivisions, and the subdivision relation itself.

mod barycentric;
mod cone;
mod flags;
mod induced;
mod relation;
mod skeletonwise;

pub use barycentric::{barycentric_subdivide, barycentric_subdivide_n};
pub use cone::star_from_point;
pub use flags::{barycentric_flags, enumerate_flags, Flag};
pub use induced::{induced_subdivision, induced_subdivision_with};
pub use relation::{is_subdivision, Refutation, SubdivisionCheck, SubdivisionWitness};
pub use skeletonwise::subdivide_skeletonwise;

use crate::point::Point;
use crate::rational::Rational;

/// Picks an apex in the relative interior of each simplex being starred.
///
/// Implementations must be deterministic in the simplex's points. The
/// engine verifies interiority exactly and rejects anything on the boundary.
pub trait ApexChooser {
    /// Prefix for labels of the new vertices, as in `b(A,B,C)`.
    fn tag(&self) -> &str;

    fn choose(&self, points: &[&Point]) -> Point;
}

/// The barycenter of every simplex.
#[derive(Clone, Copy, Debug, Default)]
pub struct Barycenter;

impl ApexChooser for Barycenter {
    fn tag(&self) -> &str {
        "b"
    }

    fn choose(&self, points: &[&Point]) -> Point {
        Point::barycenter(points)
    }
}

/// Off-center apexes: vertex `i` (in stored order) gets weight `i + 1`,
/// normalized.
#[derive(Clone, Copy, Debug, Default)]
pub struct SkewedApex;

impl ApexChooser for SkewedApex {
    fn tag(&self) -> &str {
        "w"
    }

    fn choose(&self, points: &[&Point]) -> Point {
        let n = points.len() as i64;
        let total = n * (n + 1) / 2;
        let weights: Vec<Rational> = (1..=n).map(|i| crate::rational::ratio(i, total)).collect();
        Point::affine_combination(points, &weights)
    }
}

/// Any closure from points to a point.
pub struct FnChooser<F> {
    tag: String,
    f: F,
}

impl<F: Fn(&[&Point]) -> Point> FnChooser<F> {
    pub fn new(tag: impl Into<String>, f: F) -> Self {
        FnChooser { tag: tag.into(), f }
    }
}

impl<F: Fn(&[&Point]) -> Point> ApexChooser for FnChooser<F> {
    fn tag(&self) -> &str {
        &self.tag
    }

    fn choose(&self, points: &[&Point]) -> Point {
        (self.f)(points)
    }
}

/// Longest derived label kept verbatim. Iterated subdivision nests labels,
/// so deeper ones are replaced by a fixed-width digest.
const MAX_LABEL: usize = 64;

/// Label of a vertex generated from a face: `tag(l₁,…,l_k)` over the
/// sorted labels; a single vertex keeps its own label.
pub fn derived_label(tag: &str, labels: &[&str]) -> String {
    if let [only] = labels {
        return (*only).to_string();
    }
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    let full = format!("{tag}({})", sorted.join(","));
    if full.len() <= MAX_LABEL {
        full
    } else {
        format!("{tag}~{:016x}", fnv1a(full.as_bytes()))
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}
