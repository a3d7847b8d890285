//! Exact rational simplex method.
//!
//! Standard form only: minimize `c·x` subject to `A x = b`, `x ≥ 0`.
//! Two phases, dense tableau, Bland's rule for both entering and leaving
//! variables, so the method terminates on degenerate problems.

use num_traits::{One, Signed, Zero};

use crate::qlinalg::{LinalgError, MatQ, Rat, VecQ};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: VecQ, value: Rat },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

struct Tableau {
    rows: Vec<Vec<Rat>>,
    objective: Vec<Rat>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, row: usize) -> &Rat {
        &self.rows[row][self.width]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        if !p.is_one() {
            for v in self.rows[row].iter_mut() {
                *v = &*v / &p;
            }
        }
        let pivot_row = self.rows[row].clone();
        let eliminate = |target: &mut Vec<Rat>| {
            let factor = target[col].clone();
            if factor.is_zero() {
                return;
            }
            for (v, q) in target.iter_mut().zip(&pivot_row) {
                if !q.is_zero() {
                    *v = &*v - &factor * q;
                }
            }
        };
        for (i, target) in self.rows.iter_mut().enumerate() {
            if i != row {
                eliminate(target);
            }
        }
        eliminate(&mut self.objective);
        self.basis[row] = col;
    }

    /// Runs Bland's rule over columns `0..allowed`. Returns false if unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.objective[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                let coeff = &self.rows[i][enter];
                if !coeff.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / coeff;
                let better = match &leave {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio
                            || (ratio == *best_ratio && self.basis[i] < self.basis[*best])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((row, _)) = leave else {
                return false;
            };
            self.pivot(row, enter);
        }
    }
}

/// Minimizes `c·x` subject to `a x = b`, `x ≥ 0`.
pub fn minimize(a: &MatQ, b: &VecQ, c: &VecQ) -> Result<LpOutcome, LinalgError> {
    let (m, n) = (a.rows(), a.cols());
    if b.dim() != m {
        return Err(LinalgError::DimensionMismatch {
            expected: m,
            found: b.dim(),
        });
    }
    if c.dim() != n {
        return Err(LinalgError::DimensionMismatch {
            expected: n,
            found: c.dim(),
        });
    }

    // Phase 1: artificials n..n+m, objective = sum of artificials.
    let width = n + m;
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = Vec::with_capacity(width + 1);
        for j in 0..n {
            let v = a.get(i, j).clone();
            row.push(if flip { -v } else { v });
        }
        for k in 0..m {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        rows.push(row);
    }
    let mut objective = vec![Rat::zero(); width + 1];
    for row in &rows {
        for j in 0..n {
            objective[j] -= &row[j];
        }
        objective[width] -= &row[width];
    }
    let mut t = Tableau {
        rows,
        objective,
        basis: (n..n + m).collect(),
        width,
    };
    t.optimize(n);
    if !t.objective[width].is_zero() {
        return Ok(LpOutcome::Infeasible);
    }

    // Drive artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, j);
            } else {
                t.rows.remove(i);
                t.basis.remove(i);
                continue;
            }
        }
        i += 1;
    }

    // Phase 2 on the original columns.
    let mut objective = vec![Rat::zero(); width + 1];
    for j in 0..n {
        objective[j] = c[j].clone();
    }
    for (row, &bv) in t.rows.iter().zip(&t.basis) {
        let cost = &c[bv];
        if cost.is_zero() {
            continue;
        }
        for j in 0..=width {
            if !row[j].is_zero() {
                objective[j] -= cost * &row[j];
            }
        }
    }
    t.objective = objective;
    if !t.optimize(n) {
        return Ok(LpOutcome::Unbounded);
    }
    let mut x = vec![Rat::zero(); n];
    for (row, &bv) in t.rows.iter().zip(&t.basis) {
        x[bv] = row[width].clone();
    }
    let value = -t.objective[width].clone();
    Ok(LpOutcome::Optimal {
        x: VecQ::new(x),
        value,
    })
}

/// Finds `λ ≥ 0` with `Σ λ_i g_i = v`, if one exists.
pub fn nonnegative_combination(
    generators: &[VecQ],
    target: &VecQ,
) -> Result<Option<VecQ>, LinalgError> {
    let dim = target.dim();
    let a = MatQ::from_rows(dim, generators)?.transpose();
    match minimize(&a, target, &VecQ::zeros(generators.len()))? {
        LpOutcome::Optimal { x, .. } => Ok(Some(x)),
        _ => Ok(None),
    }
}
