//! Subspaces of a coordinate space, stored in reduced row echelon form.
//!
//! The canonical RREF basis makes subspace equality structural and all
//! derived witnesses reproducible.

use crate::exactmath::{rational_kernel, Rational, RationalMatrix};
use num_traits::{One, Zero};

/// A subspace of `Q^n`, represented by its unique reduced-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// RREF rows: strictly increasing pivot columns, pivots are 1 and are the
    /// only nonzero entries in their column.
    rows: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new() }
    }

    pub fn whole(ambient: usize) -> Self {
        let mut s = Self::zero(ambient);
        for i in 0..ambient {
            let mut v = vec![Rational::zero(); ambient];
            v[i] = Rational::one();
            s.rows.push(v);
        }
        s
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v.clone());
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|r| Self::leading_col(r).unwrap()).collect()
    }

    fn leading_col(v: &[Rational]) -> Option<usize> {
        v.iter().position(|x| !x.is_zero())
    }

    /// Normal form of `v` modulo this subspace (reduce against every row).
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut v = v.to_vec();
        for row in &self.rows {
            let p = Self::leading_col(row).unwrap();
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Rational::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Insert a vector, keeping the RREF invariant. Returns true when the
    /// dimension grew.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut v = self.reduce(&v);
        let Some(p) = Self::leading_col(&v) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        // clear column p in existing rows
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let factor = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    *x -= &factor * r;
                }
            }
        }
        let pos = self
            .rows
            .iter()
            .position(|r| Self::leading_col(r).unwrap() > p)
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, v);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    /// Intersection, via the kernel of the stacked coefficient matrix.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // x = sum a_i u_i = sum b_j w_j: kernel of [U^T | -W^T]
        let a = self.dim();
        let b = other.dim();
        let mut m = RationalMatrix::zero(self.ambient, a + b);
        for (i, u) in self.rows.iter().enumerate() {
            for (k, x) in u.iter().enumerate() {
                *m.at_mut(k, i) = x.clone();
            }
        }
        for (j, w) in other.rows.iter().enumerate() {
            for (k, x) in w.iter().enumerate() {
                *m.at_mut(k, a + j) = -x.clone();
            }
        }
        let mut out = Subspace::zero(self.ambient);
        for sol in rational_kernel(&m) {
            let mut v = vec![Rational::zero(); self.ambient];
            for (i, u) in self.rows.iter().enumerate() {
                if !sol[i].is_zero() {
                    for (k, x) in u.iter().enumerate() {
                        v[k] += &sol[i] * x;
                    }
                }
            }
            out.insert(v);
        }
        out
    }

    /// Closure under taking homogeneous components: each basis vector is
    /// split into its even part (first `dim_even` coordinates) and odd part,
    /// and the span of all parts is returned. For subspaces that are graded
    /// this has the same dimension and a homogeneous basis.
    pub fn graded_closure(&self, dim_even: usize) -> Subspace {
        let mut out = Subspace::zero(self.ambient);
        for row in &self.rows {
            let mut even = row.clone();
            let mut odd = row.clone();
            for (k, (e, o)) in even.iter_mut().zip(odd.iter_mut()).enumerate() {
                if k < dim_even {
                    *o = Rational::zero();
                } else {
                    *e = Rational::zero();
                }
            }
            out.insert(even);
            out.insert(odd);
        }
        out
    }

    /// Basis vectors that are homogeneous with respect to the even/odd
    /// coordinate split, even vectors first, each group in pivot order.
    /// Intended for graded subspaces after [`Subspace::graded_closure`].
    pub fn homogeneous_basis(&self, dim_even: usize) -> Vec<Vec<Rational>> {
        let is_even = |v: &Vec<Rational>| v.iter().skip(dim_even).all(Rational::is_zero);
        let is_odd = |v: &Vec<Rational>| v.iter().take(dim_even).all(Rational::is_zero);
        let mut out: Vec<Vec<Rational>> = Vec::new();
        for v in self.rows.iter().filter(|v| is_even(v)) {
            out.push(v.clone());
        }
        for v in self.rows.iter().filter(|v| is_odd(v) && !is_even(v)) {
            out.push(v.clone());
        }
        debug_assert_eq!(out.len(), self.rows.len(), "subspace is not graded");
        out
    }
}
