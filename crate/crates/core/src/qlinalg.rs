//! Exact rational scalars, vectors and matrices.
//!
//! Everything here is value-typed: operations return fresh vectors and
//! matrices and never mutate their inputs. Elimination is fraction-free
//! (Bareiss) on integer rows obtained by clearing denominators, so
//! intermediate coefficients stay bounded by minors of the input.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Parses `"p"`, `"-p"` or `"p/q"`. Rejects anything with a decimal point.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer.parse().ok()?;
    let denom: BigInt = denom.parse().ok()?;
    if denom.is_zero() {
        return None;
    }
    Some(Rat::new(numer, denom))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rat(value: &Rat) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Least common multiple of the denominators.
fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// An ordered list of rationals of fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VecQ(Vec<Rat>);

impl VecQ {
    pub fn new(entries: Vec<Rat>) -> Self {
        VecQ(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        VecQ(vec![Rat::zero(); dim])
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[index] = Rat::one();
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        VecQ(values.iter().map(|&v| int(v)).collect())
    }

    pub fn from_bigints(values: &[BigInt]) -> Self {
        VecQ(values.iter().cloned().map(Rat::from_integer).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rat> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn check_dim(&self, other: &VecQ) -> Result<(), LinalgError> {
        if self.dim() != other.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn dot(&self, other: &VecQ) -> Result<Rat, LinalgError> {
        self.check_dim(other)?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn add(&self, other: &VecQ) -> Result<VecQ, LinalgError> {
        self.check_dim(other)?;
        Ok(VecQ(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &VecQ) -> Result<VecQ, LinalgError> {
        self.check_dim(other)?;
        Ok(VecQ(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scale(&self, factor: &Rat) -> VecQ {
        VecQ(self.0.iter().map(|a| a * factor).collect())
    }

    pub fn neg(&self) -> VecQ {
        VecQ(self.0.iter().map(|a| -a).collect())
    }

    /// `self + factor * other`
    pub fn add_scaled(&self, factor: &Rat, other: &VecQ) -> Result<VecQ, LinalgError> {
        self.check_dim(other)?;
        Ok(VecQ(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + factor * b)
                .collect(),
        ))
    }

    /// Clears denominators and divides by the content. The zero vector maps
    /// to the zero vector. Direction (sign) is preserved.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = common_denominator(&self.0);
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|v| v.numer() * (&lcm / v.denom()))
            .collect();
        let gcd = ints.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
        if gcd.is_zero() {
            return ints;
        }
        ints.into_iter().map(|v| v / &gcd).collect()
    }

    /// Primitive integer representative as a rational vector.
    pub fn primitive(&self) -> VecQ {
        VecQ::from_bigints(&self.primitive_integer())
    }

    /// Index of the first nonzero entry.
    pub fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|v| !v.is_zero())
    }
}

impl Index<usize> for VecQ {
    type Output = Rat;

    fn index(&self, index: usize) -> &Rat {
        &self.0[index]
    }
}

impl From<Vec<Rat>> for VecQ {
    fn from(entries: Vec<Rat>) -> Self {
        VecQ(entries)
    }
}

impl fmt::Display for VecQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rat(v))?;
        }
        write!(f, ")")
    }
}

/// Outcome of [`MatQ::solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(VecQ),
    /// Every solution is `particular + Σ t_i kernel[i]`.
    Affine {
        particular: VecQ,
        kernel: Vec<VecQ>,
    },
    NoSolution,
}

impl Solution {
    /// Any one solution, if the system is consistent.
    pub fn any(&self) -> Option<&VecQ> {
        match self {
            Solution::Unique(x) => Some(x),
            Solution::Affine { particular, .. } => Some(particular),
            Solution::NoSolution => None,
        }
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatQ {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl MatQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatQ {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    pub fn diagonal(entries: &[Rat]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in entries.iter().enumerate() {
            m.data[i * n + i] = v.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        MatQ { rows, cols, data }
    }

    /// Builds a matrix whose rows are `rows`; `cols` is needed for the empty case.
    pub fn from_rows(cols: usize, rows: &[VecQ]) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.dim() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.dim(),
                });
            }
            data.extend(row.entries().iter().cloned());
        }
        Ok(MatQ {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let rows: Vec<VecQ> = rows.iter().map(|r| VecQ::from_ints(r)).collect();
        Self::from_rows(cols, &rows).expect("ragged integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rat {
        &self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> VecQ {
        VecQ(self.data[row * self.cols..(row + 1) * self.cols].to_vec())
    }

    pub fn row_vectors(&self) -> Vec<VecQ> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn column(&self, col: usize) -> VecQ {
        VecQ((0..self.rows).map(|i| self.get(i, col).clone()).collect())
    }

    pub fn transpose(&self) -> MatQ {
        MatQ::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul_vec(&self, v: &VecQ) -> Result<VecQ, LinalgError> {
        if v.dim() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.dim(),
            });
        }
        Ok(VecQ(
            (0..self.rows)
                .map(|i| (0..self.cols).fold(Rat::zero(), |acc, j| acc + self.get(i, j) * &v[j]))
                .collect(),
        ))
    }

    pub fn mul(&self, other: &MatQ) -> Result<MatQ, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        Ok(MatQ::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Rat::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        }))
    }

    /// Bilinear form `u^T M v`.
    pub fn bilinear(&self, u: &VecQ, v: &VecQ) -> Result<Rat, LinalgError> {
        let mv = self.mul_vec(v)?;
        u.dot(&mv)
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let lcm = common_denominator(row);
                row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.integer_rows();
        bareiss_echelon(&mut rows, self.cols).len()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (MatQ, Vec<usize>) {
        let mut rows = self.integer_rows();
        let pivots = bareiss_echelon(&mut rows, self.cols);
        let mut reduced: Vec<Vec<Rat>> = rows
            .into_iter()
            .take(pivots.len())
            .map(|r| r.into_iter().map(Rat::from_integer).collect())
            .collect();
        for (k, &pc) in pivots.iter().enumerate().rev() {
            let pivot = reduced[k][pc].clone();
            for v in reduced[k].iter_mut() {
                *v = &*v / &pivot;
            }
            let pivot_row = reduced[k].clone();
            for row in reduced.iter_mut().take(k) {
                let factor = row[pc].clone();
                if factor.is_zero() {
                    continue;
                }
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v = &*v - &factor * p;
                }
            }
        }
        let mut out = MatQ::zeros(self.rows, self.cols);
        for (i, row) in reduced.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                out.data[i * self.cols + j] = v;
            }
        }
        (out, pivots)
    }

    /// Basis of `{x : M x = 0}` read off the reduced row echelon form.
    pub fn kernel(&self) -> Vec<VecQ> {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = VecQ::unit(self.cols, free);
                for (k, &pc) in pivots.iter().enumerate() {
                    v.0[pc] = -rref.get(k, free).clone();
                }
                v
            })
            .collect()
    }

    pub fn solve(&self, rhs: &VecQ) -> Result<Solution, LinalgError> {
        if rhs.dim() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: rhs.dim(),
            });
        }
        let augmented = MatQ::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs[i].clone()
            }
        });
        let (rref, pivots) = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(Solution::NoSolution);
        }
        let mut particular = VecQ::zeros(self.cols);
        for (k, &pc) in pivots.iter().enumerate() {
            particular.0[pc] = rref.get(k, self.cols).clone();
        }
        let kernel = self.kernel();
        if kernel.is_empty() {
            Ok(Solution::Unique(particular))
        } else {
            Ok(Solution::Affine { particular, kernel })
        }
    }

    /// Sylvester inertia `(positive, negative, zero)` of a symmetric matrix,
    /// computed by congruence diagonalization.
    pub fn inertia(&self) -> Option<(usize, usize, usize)> {
        if !self.is_symmetric() {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rat>> = (0..n).map(|i| self.row(i).0).collect();
        let (mut pos, mut neg, mut zero) = (0, 0, 0);
        while !a.is_empty() {
            let m = a.len();
            if a[0][0].is_zero() {
                if let Some(d) = (1..m).find(|&i| !a[i][i].is_zero()) {
                    a.swap(0, d);
                    for row in a.iter_mut() {
                        row.swap(0, d);
                    }
                } else if let Some(j) = (1..m).find(|&j| !a[0][j].is_zero()) {
                    // row_0 += row_j, col_0 += col_j
                    let row_j = a[j].clone();
                    for (x, y) in a[0].iter_mut().zip(&row_j) {
                        *x += y;
                    }
                    for row in a.iter_mut() {
                        let add = row[j].clone();
                        row[0] += add;
                    }
                } else {
                    zero += 1;
                    a.remove(0);
                    for row in a.iter_mut() {
                        row.remove(0);
                    }
                    continue;
                }
            }
            let pivot = a[0][0].clone();
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            let first = a[0].clone();
            let mut next = Vec::with_capacity(m - 1);
            for row in &a[1..] {
                let factor = &row[0] / &pivot;
                next.push(
                    (1..m)
                        .map(|j| &row[j] - &factor * &first[j])
                        .collect::<Vec<_>>(),
                );
            }
            a = next;
        }
        Some((pos, neg, zero))
    }
}

/// Fraction-free Gaussian elimination in place; returns the pivot columns.
/// Rows beyond `pivots.len()` are zero afterwards.
fn bareiss_echelon(rows: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut k = 0;
    for col in 0..cols {
        if k == rows.len() {
            break;
        }
        let Some(p) = (k..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(k, p);
        let (head, tail) = rows.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..cols {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot.clone();
        pivots.push(col);
        k += 1;
    }
    pivots
}

/// Dimension of the rational span of `vectors`, all of dimension `dim`.
pub fn span_dim(dim: usize, vectors: &[VecQ]) -> Result<usize, LinalgError> {
    Ok(MatQ::from_rows(dim, vectors)?.rank())
}

/// Orthogonal projection of `v` onto the span of `basis` (standard inner product).
pub fn project_onto_span(v: &VecQ, basis: &[VecQ]) -> Result<VecQ, LinalgError> {
    if basis.is_empty() {
        return Ok(VecQ::zeros(v.dim()));
    }
    let gram = MatQ::from_fn(basis.len(), basis.len(), |i, j| {
        basis[i].dot(&basis[j]).expect("basis dims")
    });
    let rhs = VecQ::new(
        basis
            .iter()
            .map(|b| b.dot(v))
            .collect::<Result<Vec<_>, _>>()?,
    );
    let coeffs = gram
        .solve(&rhs)?
        .any()
        .cloned()
        .expect("Gram system of a spanning set is consistent");
    let mut out = VecQ::zeros(v.dim());
    for (c, b) in coeffs.entries().iter().zip(basis) {
        out = out.add_scaled(c, b)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(MatQ::identity(3).rank(), 3);
        assert_eq!(MatQ::zeros(2, 5).rank(), 0);
        assert_eq!(MatQ::from_int_rows(&[vec![1, -1], vec![2, -2]]).rank(), 1);
    }

    #[test]
    fn solve_scalar() {
        let m = MatQ::from_int_rows(&[vec![2]]);
        assert_eq!(
            m.solve(&VecQ::from_ints(&[3])).unwrap(),
            Solution::Unique(VecQ::new(vec![rat(3, 2)]))
        );
    }

    #[test]
    fn solve_underdetermined() {
        let m = MatQ::from_int_rows(&[vec![1, 1]]);
        match m.solve(&VecQ::from_ints(&[1])).unwrap() {
            Solution::Affine { particular, kernel } => {
                assert_eq!(m.mul_vec(&particular).unwrap(), VecQ::from_ints(&[1]));
                assert_eq!(kernel.len(), 1);
                assert!(m.mul_vec(&kernel[0]).unwrap().is_zero());
            }
            other => panic!("expected affine solution, got {other:?}"),
        }
    }

    #[test]
    fn solve_inconsistent() {
        let m = MatQ::from_int_rows(&[vec![1], vec![1]]);
        assert_eq!(
            m.solve(&VecQ::from_ints(&[0, 1])).unwrap(),
            Solution::NoSolution
        );
    }

    #[test]
    fn solve_dimension_mismatch() {
        let m = MatQ::identity(2);
        assert!(matches!(
            m.solve(&VecQ::from_ints(&[1])),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn span_dim_examples() {
        assert_eq!(span_dim(2, &[]).unwrap(), 0);
        let vs = [
            VecQ::from_ints(&[1, 0]),
            VecQ::from_ints(&[0, 1]),
            VecQ::from_ints(&[1, 1]),
        ];
        assert_eq!(span_dim(2, &vs).unwrap(), 2);
        // E1, E2, E3 in the basis (H, E1, E2, E3) of the degree-6 del Pezzo
        let es = [
            VecQ::from_ints(&[0, 1, 0, 0]),
            VecQ::from_ints(&[0, 0, 1, 0]),
            VecQ::from_ints(&[0, 0, 0, 1]),
        ];
        assert_eq!(span_dim(4, &es).unwrap(), 3);
        assert!(span_dim(3, &es).is_err());
    }

    #[test]
    fn inertia_of_lorentzian_forms() {
        let form = MatQ::diagonal(&[int(1), int(-1), int(-1)]);
        assert_eq!(form.inertia(), Some((1, 2, 0)));
        let hyperbolic = MatQ::from_int_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(hyperbolic.inertia(), Some((1, 1, 0)));
        let degenerate = MatQ::from_int_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(degenerate.inertia(), Some((1, 0, 1)));
        assert_eq!(
            MatQ::from_int_rows(&[vec![0, 1], vec![2, 0]]).inertia(),
            None
        );
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rat("3/6"), Some(rat(1, 2)));
        assert_eq!(parse_rat("-4"), Some(int(-4)));
        assert_eq!(parse_rat("1.5"), None);
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(format_rat(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rat(&int(7)), "7");
    }

    #[test]
    fn primitive_normalization() {
        let v = VecQ::new(vec![rat(1, 2), rat(-3, 4), int(0)]);
        assert_eq!(v.primitive(), VecQ::from_ints(&[2, -3, 0]));
        assert!(VecQ::zeros(3).primitive().is_zero());
    }

    #[test]
    fn projection_onto_line() {
        let p = project_onto_span(&VecQ::from_ints(&[2, 0]), &[VecQ::from_ints(&[1, 1])]).unwrap();
        assert_eq!(p, VecQ::from_ints(&[1, 1]));
    }
}
