//! Dense matrices over the rationals and over the polynomial ring, with
//! exact kernels and ranks.
//!
//! The pivot rule everywhere is "first nonzero entry in row-major scan",
//! which makes kernels, echelon forms and witnesses reproducible.

use super::poly::MultiPoly;
use super::{ExactMathError, Rational};
use num_traits::{One, Zero};

/// Dense matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    if !self.at(i, j).is_zero() && !v[j].is_zero() {
                        acc += self.at(i, j) * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul_mat(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RationalMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.at(i, k).is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if !other.at(k, j).is_zero() {
                        let add = self.at(i, k) * other.at(k, j);
                        *out.at_mut(i, j) += add;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    let a = self.at(p, j).clone();
                    let b = self.at(r, j).clone();
                    *self.at_mut(p, j) = b;
                    *self.at_mut(r, j) = a;
                }
            }
            let inv = self.at(r, c).recip();
            for j in 0..self.cols {
                let v = self.at(r, j) * &inv;
                *self.at_mut(r, j) = v;
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let factor = self.at(i, c).clone();
                    for j in 0..self.cols {
                        let sub = &factor * self.at(r, j);
                        *self.at_mut(i, j) -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Solve `self * x = b` exactly; returns one solution (free variables
    /// set to zero) or `None` when inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = RationalMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Exact inverse; `None` for singular or non-square matrices.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = RationalMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = Rational::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(k, &c)| k != c) {
            return None;
        }
        let mut inv = RationalMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = aug.at(i, n + j).clone();
            }
        }
        Some(inv)
    }
}

/// Basis of the right kernel of `m`: linearly independent vectors `v` with
/// `m * v = 0`, one per free column, under the standard convention that the
/// free variable is set to 1 and pivot variables are back-substituted.
/// The basis count always equals `cols - rank(m)`.
pub fn rational_kernel(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let mut a = m.clone();
    let pivots = a.rref();
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; m.cols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for fc in 0..m.cols {
        if pivot_set[fc] {
            continue;
        }
        let mut v = vec![Rational::zero(); m.cols];
        v[fc] = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -a.at(r, fc).clone();
        }
        basis.push(v);
    }
    basis
}

/// Dense matrix with polynomial entries, all sharing one variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<Self, ExactMathError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries: Vec<MultiPoly> = rows.into_iter().flatten().collect();
        if let Some(first) = entries.first() {
            for e in &entries {
                if e.vars() != first.vars() {
                    return Err(ExactMathError::VariableMismatch(
                        first.vars().to_vec(),
                        e.vars().to_vec(),
                    ));
                }
            }
        }
        Ok(PolyMatrix { rows: r, cols: c, entries })
    }

    pub fn at(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn vars(&self) -> &[String] {
        self.entries.first().map(|e| e.vars()).unwrap_or(&[])
    }

    pub fn num_vars(&self) -> usize {
        self.vars().len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MultiPoly::is_zero)
    }

    /// Evaluate every entry at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<RationalMatrix, ExactMathError> {
        let mut out = RationalMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(i, j) = self.at(i, j).eval(point)?;
            }
        }
        Ok(out)
    }
}

/// Rank of `m` over the fraction field of the polynomial ring, by
/// fraction-free (Bareiss) elimination: every division by the previous pivot
/// is exact by Sylvester's determinant identity, so all intermediate entries
/// stay polynomial. Equals the maximum of `eval_rank` over all points.
pub fn poly_rank(m: &PolyMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let vars = m.vars().to_vec();
    let mut a: Vec<Vec<MultiPoly>> =
        (0..m.rows).map(|i| (0..m.cols).map(|j| m.at(i, j).clone()).collect()).collect();
    let mut prev = MultiPoly::constant(vars, Rational::one());
    let mut row = 0;
    for col in 0..m.cols {
        if row >= m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, row);
        for i in row + 1..m.rows {
            for j in col + 1..m.cols {
                let num = a[row][col].mul(&a[i][j]).sub(&a[i][col].mul(&a[row][j]));
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss pivot division is exact by the Sylvester identity");
            }
            a[i][col] = MultiPoly::zero(a[i][col].vars().to_vec());
        }
        prev = a[row][col].clone();
        row += 1;
    }
    row
}

/// Pfaffian of the principal submatrix of a skew-symmetric polynomial
/// matrix on the index subset (subset length must be even), by Laplace-type
/// expansion along the first index. A skew matrix has rank at most `2k`
/// exactly when every `(2k+2)`-subset Pfaffian vanishes, which makes this a
/// far cheaper low-rank certificate than elimination.
pub fn pfaffian(m: &PolyMatrix, subset: &[usize]) -> MultiPoly {
    assert_eq!(m.rows, m.cols, "pfaffian needs a square matrix");
    assert_eq!(subset.len() % 2, 0, "pfaffian needs an even index set");
    let vars = m.vars().to_vec();
    if subset.is_empty() {
        return MultiPoly::constant(vars, Rational::one());
    }
    let i0 = subset[0];
    let mut acc = MultiPoly::zero(vars);
    for (pos, &j) in subset.iter().enumerate().skip(1) {
        let entry = m.at(i0, j);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = subset[1..]
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != pos - 1)
            .map(|(_, &v)| v)
            .collect();
        let sub = pfaffian(m, &rest);
        let term = entry.mul(&sub);
        if pos % 2 == 1 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// Rank of `m` evaluated at `point`; always `<= poly_rank(m)`.
pub fn eval_rank(m: &PolyMatrix, point: &[Rational]) -> Result<usize, ExactMathError> {
    if m.rows == 0 || m.cols == 0 {
        return Ok(0);
    }
    if point.len() != m.num_vars() {
        return Err(ExactMathError::PointLength { expected: m.num_vars(), got: point.len() });
    }
    Ok(m.eval(point)?.rank())
}
