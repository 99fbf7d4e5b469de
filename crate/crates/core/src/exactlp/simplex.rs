//! Phase-1 simplex over exact rationals with Bland's rule.
//!
//! The system `Qᵀx − s = b` (`x, s ≥ 0`) gets one artificial variable per row,
//! after flipping rows with negative right-hand side. Minimising the sum of the
//! artificials either reaches zero (feasible `x`) or stops at a positive optimum
//! whose dual multipliers are the Farkas vector `y`.

use num_traits::{One, Signed, Zero};

use super::{verify_certificate, FeasibilityResult, Rational, RationalMatrix};
use crate::error::{input, invariant, Result};

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    /// Reduced costs of the phase-1 objective.
    cost: Vec<Rational>,
    value: Rational,
    basis: Vec<usize>,
}

impl Tableau {
    fn entering(&self) -> Option<usize> {
        self.cost.iter().position(|c| c.is_negative())
    }

    fn leaving(&self, col: usize) -> Option<usize> {
        let mut best: Option<(usize, Rational)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if !row[col].is_positive() {
                continue;
            }
            let ratio = &self.rhs[i] / &row[col];
            best = match best {
                None => Some((i, ratio)),
                Some((j, r)) => {
                    if ratio < r || (ratio == r && self.basis[i] < self.basis[j]) {
                        Some((i, ratio))
                    } else {
                        Some((j, r))
                    }
                }
            };
        }
        best.map(|(i, _)| i)
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let piv = self.rows[r][col].clone();
        if !piv.is_one() {
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v /= &piv;
                }
            }
            self.rhs[r] /= &piv;
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let pivot_rhs = self.rhs[r].clone();
        let nonzero: Vec<usize> = (0..pivot_row.len()).filter(|&k| !pivot_row[k].is_zero()).collect();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for &k in &nonzero {
                row[k] -= &f * &pivot_row[k];
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        let f = self.cost[col].clone();
        if !f.is_zero() {
            for &k in &nonzero {
                self.cost[k] -= &f * &pivot_row[k];
            }
            self.value += &f * &pivot_rhs;
        }
        self.rows[r] = pivot_row;
        self.basis[r] = col;
    }
}

/// Decides which Farkas alternative holds for `(Q, b)`; the returned
/// certificate is re-verified before it is handed out.
pub fn solve_feasibility(q: &RationalMatrix, b: &[Rational]) -> Result<FeasibilityResult> {
    let n = q.rows();
    let l = q.cols();
    if b.len() != l {
        return input(format!(
            "right-hand side has length {} but the matrix has {l} columns",
            b.len()
        ));
    }
    if l == 0 {
        return Ok(FeasibilityResult::Feasible(vec![Rational::zero(); n]));
    }
    let width = n + 2 * l;
    let art = n + l;
    let flip: Vec<bool> = b.iter().map(|v| v.is_negative()).collect();
    let mut rows = Vec::with_capacity(l);
    let mut rhs = Vec::with_capacity(l);
    for j in 0..l {
        let sign = if flip[j] { -Rational::one() } else { Rational::one() };
        let mut row = vec![Rational::zero(); width];
        for (i, slot) in row.iter_mut().enumerate().take(n) {
            let v = q.get(i, j);
            if !v.is_zero() {
                *slot = v * &sign;
            }
        }
        row[n + j] = -sign.clone();
        row[art + j] = Rational::one();
        rows.push(row);
        rhs.push(&b[j] * &sign);
    }
    let mut cost = vec![Rational::zero(); width];
    for (k, c) in cost.iter_mut().enumerate().take(art) {
        *c = -rows.iter().fold(Rational::zero(), |acc, row| acc + &row[k]);
    }
    let value = rhs.iter().fold(Rational::zero(), |acc, v| acc + v);
    let mut t = Tableau {
        rows,
        rhs,
        cost,
        value,
        basis: (art..art + l).collect(),
    };

    while let Some(col) = t.entering() {
        let Some(r) = t.leaving(col) else {
            return invariant("phase-1 objective is bounded below but the ratio test found no row");
        };
        t.pivot(r, col);
    }

    let result = if t.value.is_zero() {
        let mut x = vec![Rational::zero(); n];
        for (r, &var) in t.basis.iter().enumerate() {
            if var < n {
                x[var] = t.rhs[r].clone();
            }
        }
        FeasibilityResult::Feasible(x)
    } else {
        // dual multiplier of row j is 1 - (reduced cost of its artificial)
        let y = (0..l)
            .map(|j| {
                let pi = Rational::one() - &t.cost[art + j];
                if flip[j] {
                    -pi
                } else {
                    pi
                }
            })
            .collect();
        FeasibilityResult::Infeasible(y)
    };
    if !verify_certificate(q, b, &result) {
        return invariant("simplex produced a certificate that does not verify");
    }
    Ok(result)
}
