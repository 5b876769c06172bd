//! A small exact linear-programming solver (two-phase tableau simplex with
//! Bland's rule), used to decide whether two simplices meet in a common face.

use num::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal(Rational),
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    rhs: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for v in self.rows[row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let factor = self.rows[r][col].clone();
            for c in 0..=self.rhs {
                if self.rows[row][c].is_zero() {
                    continue;
                }
                let delta = &factor * &self.rows[row][c];
                self.rows[r][c] -= delta;
            }
        }
        self.basis[row] = col;
    }

    /// Maximizes `cost · x` over columns `0..eligible`; `false` if unbounded.
    fn optimize(&mut self, cost: &[Rational], eligible: usize) -> bool {
        loop {
            let entering = (0..eligible).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let reduced =
                    &cost[j] - self.basis.iter().zip(&self.rows).map(|(&b, row)| &cost[b] * &row[j]).sum::<Rational>();
                reduced.is_positive()
            });
            let Some(col) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[col].is_positive() {
                    continue;
                }
                let ratio = &row[self.rhs] / &row[col];
                let better = match &best {
                    None => true,
                    Some((br, bv)) => ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }

    fn objective(&self, cost: &[Rational]) -> Rational {
        self.basis.iter().zip(&self.rows).map(|(&b, row)| &cost[b] * &row[self.rhs]).sum()
    }
}

/// Maximizes `c·x` subject to `A x = b`, `x ≥ 0`.
pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    let rhs = n + m;
    let rows = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, bi))| {
            let flip = bi.is_negative();
            let mut t: Vec<Rational> = row.iter().map(|v| if flip { -v } else { v.clone() }).collect();
            t.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
            t.push(if flip { -bi } else { bi.clone() });
            t
        })
        .collect();
    let mut tableau = Tableau { rows, basis: (n..n + m).collect(), rhs };

    let mut phase_one = vec![Rational::zero(); n + m];
    for v in &mut phase_one[n..] {
        *v = -Rational::one();
    }
    tableau.optimize(&phase_one, n + m);
    if !tableau.objective(&phase_one).is_zero() {
        return LpOutcome::Infeasible;
    }
    for r in 0..m {
        if tableau.basis[r] >= n {
            if let Some(col) = (0..n).find(|&j| !tableau.rows[r][j].is_zero()) {
                tableau.pivot(r, col);
            }
        }
    }

    let mut phase_two = c.to_vec();
    phase_two.extend(std::iter::repeat_n(Rational::zero(), m));
    if !tableau.optimize(&phase_two, n) {
        return LpOutcome::Unbounded;
    }
    LpOutcome::Optimal(tableau.objective(&phase_two))
}
