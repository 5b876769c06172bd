//! Exact dense linear algebra over the rationals, sized for simplices
//! (a handful of rows and columns).

use std::ops::Range;

use num::{One, Signed, Zero};

use crate::point::Point;
use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// `m[target][range] -= factor * m[pivot][range]`.
fn subtract_row(m: &mut [Vec<Rational>], target: usize, pivot: usize, factor: &Rational, range: Range<usize>) {
    let (source, dest) = if pivot < target {
        let (lo, hi) = m.split_at_mut(target);
        (&lo[pivot], &mut hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(pivot);
        (&hi[0], &mut lo[target])
    };
    for (x, y) in dest[range.clone()].iter_mut().zip(&source[range]) {
        *x -= factor * y;
    }
}

/// Rank by fraction-based Gaussian elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Matrix = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[rank][col];
            subtract_row(&mut m, r, rank, &factor, col..cols);
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Determinant of a square matrix.
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    let mut m: Matrix = rows.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(col, pivot);
            det = -det;
        }
        det *= &m[col][col];
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[col][col];
            subtract_row(&mut m, r, col, &factor, col..n);
        }
    }
    det
}

/// True iff the points are affinely independent.
pub fn affinely_independent(points: &[&Point]) -> bool {
    match points.split_first() {
        None => false,
        Some((origin, rest)) => {
            let edges: Matrix = rest.iter().map(|p| p.sub(origin)).collect();
            rest.len() <= origin.dim() && rank(&edges) == rest.len()
        }
    }
}

/// Precomputed solver for barycentric coordinates relative to a fixed,
/// affinely independent point set `v₀ … v_p` in `d`-space.
///
/// Row-reducing `[E | I]` (E the `d × p` edge matrix) once leaves a `p × d`
/// block that maps `x − v₀` to the last `p` weights and a `(d − p) × d` block
/// whose kernel is the direction space of the affine hull.
#[derive(Clone, Debug)]
pub struct AffineFrame {
    origin: Point,
    solve: Matrix,
    normal: Matrix,
}

impl AffineFrame {
    /// `None` when the points are affinely dependent.
    pub fn new(points: &[&Point]) -> Option<Self> {
        let (origin, rest) = points.split_first()?;
        let d = origin.dim();
        let p = rest.len();
        if p > d {
            return None;
        }
        let mut m: Matrix = (0..d)
            .map(|r| {
                let mut row = Vec::with_capacity(p + d);
                row.extend(rest.iter().map(|v| &v.coords()[r] - &origin.coords()[r]));
                row.extend((0..d).map(|c| if c == r { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        for col in 0..p {
            let pivot = (col..d).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, pivot);
            let inv = m[col][col].recip();
            for value in m[col].iter_mut() {
                *value *= &inv;
            }
            for r in 0..d {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].clone();
                subtract_row(&mut m, r, col, &factor, 0..p + d);
            }
        }
        let solve = m[..p].iter().map(|row| row[p..].to_vec()).collect();
        let normal = m[p..].iter().map(|row| row[p..].to_vec()).collect();
        Some(AffineFrame { origin: (*origin).clone(), solve, normal })
    }

    /// Number of points spanning the frame.
    pub fn len(&self) -> usize {
        self.solve.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Barycentric weights of `x` (summing to one), or `None` when `x` is
    /// off the affine hull.
    pub fn weights(&self, x: &Point) -> Option<Vec<Rational>> {
        let y = x.sub(&self.origin);
        let dot = |row: &Vec<Rational>| -> Rational {
            row.iter().zip(&y).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum()
        };
        if self.normal.iter().any(|row| !dot(row).is_zero()) {
            return None;
        }
        let tail: Vec<Rational> = self.solve.iter().map(dot).collect();
        let head = Rational::one() - tail.iter().sum::<Rational>();
        let mut weights = Vec::with_capacity(tail.len() + 1);
        weights.push(head);
        weights.extend(tail);
        Some(weights)
    }
}

/// Squared `k`-volume of the simplex spanned by `k + 1` points, from the
/// Gram determinant of its edge vectors.
pub fn squared_volume(points: &[&Point]) -> Rational {
    let Some((origin, rest)) = points.split_first() else {
        return Rational::zero();
    };
    let edges: Vec<Vec<Rational>> = rest.iter().map(|p| p.sub(origin)).collect();
    let gram: Matrix =
        edges.iter().map(|a| edges.iter().map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum()).collect()).collect();
    let k = rest.len() as u64;
    let factorial: u64 = (1..=k).product();
    let f = Rational::from_integer(factorial.into());
    determinant(&gram) / (&f * &f)
}

pub fn all_nonnegative(weights: &[Rational]) -> bool {
    weights.iter().all(|w| !w.is_negative())
}

pub fn all_positive(weights: &[Rational]) -> bool {
    weights.iter().all(Signed::is_positive)
}
