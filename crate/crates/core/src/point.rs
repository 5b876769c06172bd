use std::fmt;

use num::integer::Integer;
use num::{BigInt, One, Signed};

use crate::error::Result;
use crate::rational::{format_rational, parse_rational, Rational};

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
    }

    pub fn parse<S: AsRef<str>>(coords: &[S]) -> Result<Self> {
        coords.iter().map(|c| parse_rational(c.as_ref())).collect::<Result<Vec<_>>>().map(Point)
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![Rational::default(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(crate::rational::to_f64).collect()
    }

    /// Coordinate-wise `self - other`.
    pub fn sub(&self, other: &Point) -> Vec<Rational> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    pub fn translate(&self, offset: &[Rational]) -> Point {
        Point(self.0.iter().zip(offset).map(|(a, b)| a + b).collect())
    }

    /// `Σ wᵢ pᵢ`. Weights are not required to sum to one.
    pub fn affine_combination(points: &[&Point], weights: &[Rational]) -> Point {
        assert_eq!(points.len(), weights.len());
        let dim = points.first().map_or(0, |p| p.dim());
        let mut acc = vec![Rational::default(); dim];
        for (p, w) in points.iter().zip(weights) {
            for (a, c) in acc.iter_mut().zip(&p.0) {
                *a += c * w;
            }
        }
        Point(acc)
    }

    /// The point with equal barycentric weights on all of `points`.
    ///
    /// Each coordinate is summed over a common denominator and reduced
    /// once, which is much cheaper than reducing after every addition.
    pub fn barycenter(points: &[&Point]) -> Point {
        assert!(!points.is_empty(), "barycenter of no points");
        let n = BigInt::from(points.len());
        let coords = (0..points[0].dim())
            .map(|i| {
                let common = points.iter().fold(BigInt::one(), |acc, p| acc.lcm(p.0[i].denom()));
                let total: BigInt = points.iter().map(|p| p.0[i].numer() * (&common / p.0[i].denom())).sum();
                Rational::new(total, common * &n)
            })
            .collect();
        Point(coords)
    }

    pub fn midpoint(a: &Point, b: &Point) -> Point {
        Point::barycenter(&[a, b])
    }

    /// Max-norm distance `max |xᵢ − yᵢ|`.
    pub fn linf_distance(&self, other: &Point) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).abs()).max().unwrap_or_default()
    }

    /// Squared Euclidean distance.
    pub fn l2_distance_squared(&self, other: &Point) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b) * (a - b)).sum()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}
