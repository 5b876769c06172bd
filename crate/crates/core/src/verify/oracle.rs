//! Brute-force exact routines used to cross-check the engine. None of them
//! share code with the paths they check.

use itertools::Itertools;
use num::integer::Integer;
use num::{BigInt, One, Signed, Zero};

use crate::complex::{GeometricComplex, Simplex};
use crate::point::Point;
use crate::rational::{sqrt_exact, Rational};

/// Determinant by the permutation expansion. Only for small matrices.
pub fn leibniz_determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for perm in (0..n).permutations(n) {
        let inversions =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let mut term = Rational::one();
        for (row, &col) in perm.iter().enumerate() {
            term *= &m[row][col];
            if term.is_zero() {
                break;
            }
        }
        if inversions % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Determinant by fraction-free elimination: rows are cleared of
/// denominators, then reduced over the integers with exact divisions.
pub fn bareiss_determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            scale *= &lcm;
            row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return Rational::one();
    }
    Rational::new(sign * prev, scale)
}

fn edges(points: &[&Point]) -> Vec<Vec<Rational>> {
    points[1..].iter().map(|p| p.coords().iter().zip(points[0].coords()).map(|(a, b)| a - b).collect()).collect()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gram(vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    vectors.iter().map(|a| vectors.iter().map(|b| dot(a, b)).collect()).collect()
}

/// `vol(inner) / vol(outer)` for two simplices of the same dimension with
/// `inner` in the affine hull of `outer`; the ratio is then rational.
pub fn relative_volume(inner: &[&Point], outer: &[&Point]) -> Option<Rational> {
    if inner.len() != outer.len() {
        return None;
    }
    let g_outer = bareiss_determinant(&gram(&edges(outer)));
    if g_outer.is_zero() {
        return None;
    }
    sqrt_exact(&(bareiss_determinant(&gram(&edges(inner))) / g_outer))
}

/// Barycentric weights of `x` relative to `points` by Cramer's rule on the
/// normal equations, or `None` if `x` is off their affine hull.
pub fn cramer_weights(points: &[&Point], x: &Point) -> Option<Vec<Rational>> {
    let e = edges(points);
    let y: Vec<Rational> = x.coords().iter().zip(points[0].coords()).map(|(a, b)| a - b).collect();
    let g = gram(&e);
    let det = bareiss_determinant(&g);
    if det.is_zero() {
        return None;
    }
    let rhs: Vec<Rational> = e.iter().map(|row| dot(row, &y)).collect();
    let tail: Vec<Rational> = (0..e.len())
        .map(|i| {
            let replaced: Vec<Vec<Rational>> = g
                .iter()
                .zip(&rhs)
                .map(|(row, r)| {
                    row.iter().enumerate().map(|(j, v)| if j == i { r.clone() } else { v.clone() }).collect()
                })
                .collect();
            bareiss_determinant(&replaced) / &det
        })
        .collect();
    let reconstructed: Vec<Rational> =
        (0..y.len()).map(|c| tail.iter().zip(&e).map(|(t, row)| t * &row[c]).sum()).collect();
    if reconstructed != y {
        return None;
    }
    let mut weights = vec![Rational::one() - tail.iter().sum::<Rational>()];
    weights.extend(tail);
    Some(weights)
}

/// Closed-simplex test.
pub fn in_closed_simplex(points: &[&Point], x: &Point) -> bool {
    cramer_weights(points, x).is_some_and(|w| w.iter().all(|v| !v.is_negative()))
}

/// Relative-interior test.
pub fn in_open_simplex(points: &[&Point], x: &Point) -> bool {
    cramer_weights(points, x).is_some_and(|w| w.iter().all(Signed::is_positive))
}

/// Every simplex of a complex with its coordinate ranges, for linear scans.
pub struct ScanIndex<'a> {
    complex: &'a GeometricComplex,
    entries: Vec<(Simplex, Vec<(f64, f64)>)>,
    maximal: Vec<usize>,
}

/// Interval of `f64` guaranteed to contain `q`.
fn widen(q: &Rational) -> (f64, f64) {
    let f = crate::rational::to_f64(q);
    let slack = f.abs() * 1e-12 + f64::MIN_POSITIVE;
    (f - slack, f + slack)
}

impl<'a> ScanIndex<'a> {
    pub fn new(complex: &'a GeometricComplex) -> Self {
        let entries: Vec<(Simplex, Vec<(f64, f64)>)> = complex
            .simplices()
            .map(|s| {
                let points = complex.points_of(s);
                let ranges = (0..complex.ambient_dim())
                    .map(|i| {
                        let (lo, hi) = points.iter().map(|p| &p.coords()[i]).minmax().into_option().expect("nonempty");
                        (widen(lo).0, widen(hi).1)
                    })
                    .collect();
                (s.clone(), ranges)
            })
            .collect();
        let tops: std::collections::BTreeSet<&Simplex> = complex.maximal().iter().collect();
        let maximal = entries.iter().enumerate().filter(|(_, (s, _))| tops.contains(s)).map(|(i, _)| i).collect();
        ScanIndex { complex, entries, maximal }
    }

    /// All simplices whose relative interior holds `x`. A valid complex
    /// yields at most one. Outwardly rounded boxes discard most simplices
    /// before the exact test.
    pub fn carriers(&self, x: &Point) -> Vec<Simplex> {
        let at: Vec<(f64, f64)> = x.coords().iter().map(widen).collect();
        self.entries
            .iter()
            .filter(|(_, ranges)| ranges.iter().zip(&at).all(|((lo, hi), (a, b))| lo <= b && a <= hi))
            .filter(|(s, _)| in_open_simplex(&self.complex.points_of(s), x))
            .map(|(s, _)| s.clone())
            .collect()
    }

    /// The carrier of `x`: the first maximal simplex whose closure holds
    /// `x`, cut down to the vertices with positive weight. Cheaper than
    /// [`ScanIndex::carriers`] but blind to overlaps.
    pub fn carrier(&self, x: &Point) -> Option<Simplex> {
        let at: Vec<(f64, f64)> = x.coords().iter().map(widen).collect();
        self.maximal
            .iter()
            .filter(|&&i| self.entries[i].1.iter().zip(&at).all(|((lo, hi), (a, b))| lo <= b && a <= hi))
            .find_map(|&i| {
                let s = &self.entries[i].0;
                let weights = cramer_weights(&self.complex.points_of(s), x)?;
                if weights.iter().any(Signed::is_negative) {
                    return None;
                }
                let face = s.vertices().iter().zip(&weights).filter(|(_, w)| w.is_positive()).map(|(v, _)| *v);
                Simplex::new(face).ok().filter(|f| self.complex.contains(f))
            })
    }
}

/// Carrier of `x` by a scan over every simplex of `k`.
pub fn scan_carrier(k: &GeometricComplex, x: &Point) -> Option<Simplex> {
    ScanIndex::new(k).carrier(x)
}
