//! Diameters, mesh, and the contraction of mesh under barycentric
//! subdivision.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::integer::Integer;
use num::{BigInt, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{GeometricComplex, Simplex};
use crate::error::{Error, Result};
use crate::point::Point;
use crate::rational::{format_rational, pow, sqrt_exact, to_f64, Rational};
use crate::subdivision::barycentric_subdivide;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricKind {
    /// `max |xᵢ − yᵢ|`.
    #[default]
    Linf,
    /// Euclidean.
    L2,
}

impl FromStr for MetricKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "linf" | "max" => Ok(MetricKind::Linf),
            "l2" | "euclidean" => Ok(MetricKind::L2),
            other => Err(Error::InvalidArgument(format!("unknown metric `{other}`"))),
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MetricKind::Linf => "linf",
            MetricKind::L2 => "l2",
        })
    }
}

/// An exact length. Under L2 the squared length is stored, so that no
/// square root is ever taken in a comparison.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Length {
    metric: MetricKind,
    raw: Rational,
}

impl Length {
    pub fn zero(metric: MetricKind) -> Self {
        Length { metric, raw: Rational::zero() }
    }

    /// From the length for Linf, or its square for L2.
    pub fn from_raw(metric: MetricKind, raw: Rational) -> Self {
        Length { metric, raw }
    }

    pub fn metric(&self) -> MetricKind {
        self.metric
    }

    /// The length itself for Linf, its square for L2.
    pub fn raw(&self) -> &Rational {
        &self.raw
    }

    /// The length as a rational, if it is one.
    pub fn exact(&self) -> Option<Rational> {
        match self.metric {
            MetricKind::Linf => Some(self.raw.clone()),
            MetricKind::L2 => sqrt_exact(&self.raw),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self.metric {
            MetricKind::Linf => to_f64(&self.raw),
            MetricKind::L2 => to_f64(&self.raw).sqrt(),
        }
    }

    /// `c · self`, for `c ≥ 0`.
    pub fn scaled(&self, c: &Rational) -> Length {
        let raw = match self.metric {
            MetricKind::Linf => c * &self.raw,
            MetricKind::L2 => c * c * &self.raw,
        };
        Length { metric: self.metric, raw }
    }

    /// `self < eps` for a nonnegative rational `eps`.
    pub fn less_than(&self, eps: &Rational) -> bool {
        match self.metric {
            MetricKind::Linf => self.raw < *eps,
            MetricKind::L2 => self.raw < eps * eps,
        }
    }

    /// Exact text: `p/q` for Linf, `sqrt(p/q)` for L2 unless the root is
    /// rational.
    pub fn to_exact_string(&self) -> String {
        match self.exact() {
            Some(q) => format_rational(&q),
            None => format!("sqrt({})", format_rational(&self.raw)),
        }
    }
}

pub fn distance(a: &Point, b: &Point, metric: MetricKind) -> Length {
    let raw = match metric {
        MetricKind::Linf => a.linf_distance(b),
        MetricKind::L2 => a.l2_distance_squared(b),
    };
    Length { metric, raw }
}

/// Largest distance between two vertices of `s`; the maximum of a convex
/// function over a simplex is attained at a vertex.
pub fn diameter(k: &GeometricComplex, s: &Simplex, metric: MetricKind) -> Length {
    let points = k.points_of(s);
    let mut best = Length::zero(metric);
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            best = best.max(distance(p, q, metric));
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeshReport {
    pub mesh: Length,
    pub per_simplex: BTreeMap<Simplex, Length>,
    /// `n/(n+1)` for `n = dim K`.
    pub contraction_bound: Rational,
}

/// Diameters of every simplex and their maximum.
pub fn mesh(k: &GeometricComplex, metric: MetricKind) -> MeshReport {
    let per_simplex: BTreeMap<Simplex, Length> = k.simplices().map(|s| (s.clone(), diameter(k, s, metric))).collect();
    let mesh = per_simplex.values().max().cloned().unwrap_or_else(|| Length::zero(metric));
    MeshReport { mesh, per_simplex, contraction_bound: contraction_factor(k.dim()) }
}

/// Mesh alone. Every vertex pair of a simplex is an edge of the complex, so
/// the longest edge is the mesh. Coordinates are first brought to a common
/// denominator so that the edge scan runs on integers.
pub fn mesh_value(k: &GeometricComplex, metric: MetricKind) -> Length {
    let denominator = k
        .vertex_ids()
        .flat_map(|v| k.point(v).coords().iter().map(|c| c.denom().clone()))
        .fold(BigInt::one(), |acc, d| acc.lcm(&d));
    let scaled: Vec<Vec<BigInt>> = k
        .vertex_ids()
        .map(|v| k.point(v).coords().iter().map(|c| c.numer() * (&denominator / c.denom())).collect())
        .collect();
    let mut best = BigInt::zero();
    for e in k.simplices_of_dim(1) {
        let (a, b) = (&scaled[e.vertices()[0].index()], &scaled[e.vertices()[1].index()]);
        let d = match metric {
            MetricKind::Linf => a.iter().zip(b).map(|(x, y)| (x - y).abs()).max().unwrap_or_default(),
            MetricKind::L2 => a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum(),
        };
        if d > best {
            best = d;
        }
    }
    let unit = match metric {
        MetricKind::Linf => denominator,
        MetricKind::L2 => &denominator * &denominator,
    };
    Length { metric, raw: Rational::new(best, unit) }
}

/// Bound on the ratio of successive meshes under barycentric subdivision of
/// an `n`-dimensional complex.
pub fn contraction_factor(n: usize) -> Rational {
    Rational::new((n as i64).into(), (n as i64 + 1).into())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementCount {
    /// Least `N` with `cᴺ · mesh(K) < ε`.
    pub bound: usize,
    /// Least `N` with `mesh(Bsdᴺ K) < ε`, found by subdividing.
    pub actual: usize,
    /// `mesh(Bsd^actual K)`.
    pub certified_mesh: Length,
}

/// How many barycentric subdivisions bring the mesh below `eps`, both as
/// predicted by the contraction factor and as measured.
pub fn subdivisions_needed(k: &GeometricComplex, eps: &Rational, metric: MetricKind) -> Result<RefinementCount> {
    if *eps <= Rational::zero() {
        return Err(Error::InvalidArgument(format!("epsilon must be positive, got {}", format_rational(eps))));
    }
    let initial = mesh_value(k, metric);
    let c = contraction_factor(k.dim());
    let mut bound = 0;
    while !initial.scaled(&pow(&c, bound as u32)).less_than(eps) {
        bound += 1;
    }

    let mut current = k.clone();
    let mut measured = initial;
    let mut actual = 0;
    while !measured.less_than(eps) {
        if actual >= bound {
            return Err(Error::BoundViolated(format!(
                "mesh {} after {actual} subdivisions is not below {}",
                measured.to_exact_string(),
                format_rational(eps)
            )));
        }
        current = barycentric_subdivide(&current).0;
        measured = mesh_value(&current, metric);
        actual += 1;
    }
    Ok(RefinementCount { bound, actual, certified_mesh: measured })
}

/// `c^steps · initial`, with `c` the factor for dimension `n`.
pub fn bound_after(initial: &Length, n: usize, steps: usize) -> Length {
    initial.scaled(&pow(&contraction_factor(n), steps as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ComplexBuilder;
    use crate::rational::{int, ratio};

    fn standard(n: usize) -> GeometricComplex {
        let mut b = ComplexBuilder::new(n);
        let mut ids = Vec::new();
        for i in 0..=n {
            let mut c = vec![0; n];
            if i > 0 {
                c[i - 1] = 1;
            }
            ids.push(b.add_vertex(format!("v{i}"), Point::from_ints(&c)).unwrap());
        }
        b.add_simplex(&ids).unwrap();
        b.build()
    }

    #[test]
    fn diameters() {
        let k = standard(2);
        let top = &k.maximal()[0];
        assert_eq!(diameter(&k, top, MetricKind::Linf).raw(), &int(1));
        assert_eq!(diameter(&k, top, MetricKind::L2).raw(), &int(2));
        assert_eq!(diameter(&k, &k.simplices_of_dim(0)[0], MetricKind::L2), Length::zero(MetricKind::L2));
        assert_eq!(mesh(&k, MetricKind::Linf).mesh, mesh_value(&k, MetricKind::Linf));
    }

    #[test]
    fn l2_lengths_compare_squared() {
        let l = distance(&Point::from_ints(&[0, 0]), &Point::from_ints(&[3, 4]), MetricKind::L2);
        assert_eq!(l.exact(), Some(int(5)));
        assert!(l.less_than(&ratio(51, 10)));
        assert!(!l.less_than(&int(5)));
        assert_eq!(l.scaled(&ratio(1, 5)).exact(), Some(int(1)));
        let s = distance(&Point::from_ints(&[0, 0]), &Point::from_ints(&[1, 1]), MetricKind::L2);
        assert_eq!(s.to_exact_string(), "sqrt(2)");
    }

    #[test]
    fn contraction_bound_of_a_triangle() {
        assert_eq!(contraction_factor(2), ratio(2, 3));
        assert_eq!(mesh(&standard(2), MetricKind::Linf).contraction_bound, ratio(2, 3));
    }

    #[test]
    fn refinement_count_on_standard_triangle() {
        let count = subdivisions_needed(&standard(2), &ratio(1, 10), MetricKind::Linf).unwrap();
        assert_eq!(count.bound, 6);
        assert!(count.actual <= count.bound);
        assert!(count.certified_mesh.less_than(&ratio(1, 10)));
    }

    #[test]
    fn coarse_epsilon_needs_nothing() {
        let count = subdivisions_needed(&standard(2), &int(2), MetricKind::Linf).unwrap();
        assert_eq!((count.bound, count.actual), (0, 0));
        assert!(subdivisions_needed(&standard(2), &int(0), MetricKind::Linf).is_err());
    }

    #[test]
    fn metric_names() {
        assert_eq!("L2".parse::<MetricKind>().unwrap(), MetricKind::L2);
        assert_eq!(MetricKind::default().to_string(), "linf");
        assert!("l1".parse::<MetricKind>().is_err());
    }
}
