//! Finite-dimensional Lie superalgebras given by rational structure
//! constants.
//!
//! An algebra is `g = g0 + g1` with `dim g0 = dim_even`, `dim g1 = dim_odd`;
//! basis vectors `0..dim_even` are even, the rest odd. The bracket table maps
//! an index pair `(i, j)` to the coefficient vector of `[e_i, e_j]` over the
//! basis. Tables may store either orientation of a pair; [`LieSuperAlgebra::validate`]
//! checks grading, super-antisymmetry (including consistency of doubly stored
//! pairs) and the super-Jacobi identity, pinpointing the first violation.

mod adapted;
mod catalog;
mod format;
mod subspace;

pub use adapted::AdaptedBasis;
pub use catalog::{catalog, parse_catalog_spec, test_catalog, CatalogError, CatalogSpec};
pub use format::{parse_algebra_file, parse_algebra_str, read_algebra_str, to_canonical_json, FormatError};
pub use subspace::Subspace;

use crate::exactmath::{Rational, RationalMatrix};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

/// Parity of a homogeneous basis vector or element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    fn of_sum(a: Parity, b: Parity) -> Parity {
        if a == b {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Parity of a general vector: even/odd if supported on one graded component,
/// mixed otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorParity {
    Even,
    Odd,
    Mixed,
}

/// Element of the algebra in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    pub coords: Vec<Rational>,
}

impl Vector {
    pub fn zero(n: usize) -> Self {
        Vector { coords: vec![Rational::zero(); n] }
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.coords[i] = Rational::one();
        v
    }

    pub fn from_coords(coords: Vec<Rational>) -> Self {
        Vector { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector { coords: self.coords.iter().map(|a| a * c).collect() }
    }

    /// Derived parity with respect to a `dim_even` split.
    pub fn parity(&self, dim_even: usize) -> VectorParity {
        let even_part = self.coords.iter().take(dim_even).any(|x| !x.is_zero());
        let odd_part = self.coords.iter().skip(dim_even).any(|x| !x.is_zero());
        match (even_part, odd_part) {
            (true, true) => VectorParity::Mixed,
            (false, true) => VectorParity::Odd,
            _ => VectorParity::Even,
        }
    }
}

/// Structured report of the first violated axiom. Indices are stored
/// 0-based; the rendering is 1-based like every user-facing format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("grading violated at bracket ({}, {}): component {} has wrong parity", i + 1, j + 1, k + 1)]
    Grading { i: usize, j: usize, k: usize },
    #[error("super-antisymmetry violated at pair ({}, {}); residual [{}]", i + 1, j + 1, fmt_coords(residual))]
    Antisymmetry { i: usize, j: usize, residual: Vec<Rational> },
    #[error("super-Jacobi identity violated at triple ({}, {}, {}); residual [{}]", i + 1, j + 1, k + 1, fmt_coords(residual))]
    Jacobi { i: usize, j: usize, k: usize, residual: Vec<Rational> },
}

fn fmt_coords(v: &[Rational]) -> String {
    v.iter().map(crate::exactmath::format_rational).collect::<Vec<_>>().join(", ")
}

/// Errors from structural misuse of an algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieAlgError {
    #[error("vector has {got} coordinates, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("bracket index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("coefficient vector has {got} entries, expected {expected}")]
    BadCoefficientLength { expected: usize, got: usize },
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("change of basis matrix must be square of size {0}")]
    BadMatrixShape(usize),
    #[error("change of basis matrix is singular")]
    SingularMatrix,
    #[error("change of basis matrix does not preserve the grading")]
    UngradedMatrix,
}

/// A finite-dimensional Lie superalgebra over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSuperAlgebra {
    dim_even: usize,
    dim_odd: usize,
    basis_names: Vec<String>,
    /// Raw table as built; keys are 0-based `(i, j)` in either orientation.
    brackets: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl LieSuperAlgebra {
    /// Build an algebra from a raw bracket table. Only structural shape is
    /// checked here; axioms are checked by [`Self::validate`].
    pub fn new(
        dim_even: usize,
        dim_odd: usize,
        names: Option<Vec<String>>,
        entries: Vec<((usize, usize), Vec<Rational>)>,
    ) -> Result<Self, LieAlgError> {
        let n = dim_even + dim_odd;
        let basis_names = match names {
            Some(v) => {
                if v.len() != n {
                    return Err(LieAlgError::BadCoefficientLength { expected: n, got: v.len() });
                }
                v
            }
            None => default_names(n),
        };
        let mut brackets = BTreeMap::new();
        for ((i, j), coeffs) in entries {
            if i >= n {
                return Err(LieAlgError::IndexOutOfRange { index: i, dim: n });
            }
            if j >= n {
                return Err(LieAlgError::IndexOutOfRange { index: j, dim: n });
            }
            if coeffs.len() != n {
                return Err(LieAlgError::BadCoefficientLength { expected: n, got: coeffs.len() });
            }
            if coeffs.iter().any(|c| !c.is_zero()) {
                brackets.insert((i, j), coeffs);
            }
        }
        Ok(LieSuperAlgebra { dim_even, dim_odd, basis_names, brackets })
    }

    pub fn abelian(dim_even: usize, dim_odd: usize) -> Self {
        Self::new(dim_even, dim_odd, None, Vec::new()).unwrap()
    }

    pub fn dim_even(&self) -> usize {
        self.dim_even
    }

    pub fn dim_odd(&self) -> usize {
        self.dim_odd
    }

    pub fn dim(&self) -> usize {
        self.dim_even + self.dim_odd
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn parity(&self, i: usize) -> Parity {
        if i < self.dim_even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn sign(&self, i: usize, j: usize) -> Rational {
        // (-1)^{|i||j|}
        if self.parity(i) == Parity::Odd && self.parity(j) == Parity::Odd {
            -Rational::one()
        } else {
            Rational::one()
        }
    }

    /// Raw stored entries (either orientation), for validation and
    /// serialization.
    pub fn raw_brackets(&self) -> &BTreeMap<(usize, usize), Vec<Rational>> {
        &self.brackets
    }

    /// `[e_i, e_j]` as a coefficient vector, applying super-antisymmetry when
    /// only the opposite orientation is stored.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        if let Some(c) = self.brackets.get(&(i, j)) {
            return c.clone();
        }
        if let Some(c) = self.brackets.get(&(j, i)) {
            let s = -self.sign(i, j);
            return c.iter().map(|x| x * &s).collect();
        }
        vec![Rational::zero(); self.dim()]
    }

    /// `[e_i, v]` for a coordinate vector `v`.
    pub fn bracket_basis_vec(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, b) in self.bracket_basis(i, j).into_iter().enumerate() {
                if !b.is_zero() {
                    out[k] += c * &b;
                }
            }
        }
        out
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &Vector, v: &Vector) -> Result<Vector, LieAlgError> {
        let n = self.dim();
        if u.coords.len() != n {
            return Err(LieAlgError::DimensionMismatch { expected: n, got: u.coords.len() });
        }
        if v.coords.len() != n {
            return Err(LieAlgError::DimensionMismatch { expected: n, got: v.coords.len() });
        }
        let mut out = vec![Rational::zero(); n];
        for (i, a) in u.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in self.bracket_basis_vec(i, &v.coords).into_iter().enumerate() {
                if !b.is_zero() {
                    out[k] += a * &b;
                }
            }
        }
        Ok(Vector::from_coords(out))
    }

    /// Check grading, super-antisymmetry and super-Jacobi; reports the first
    /// violation in a deterministic scan order.
    pub fn validate(&self) -> Result<(), Violation> {
        let n = self.dim();
        // grading
        for (&(i, j), coeffs) in &self.brackets {
            let want = Parity::of_sum(self.parity(i), self.parity(j));
            for (k, c) in coeffs.iter().enumerate() {
                if !c.is_zero() && self.parity(k) != want {
                    return Err(Violation::Grading { i, j, k });
                }
            }
        }
        // super-antisymmetry: [e_i,e_j] + (-1)^{|i||j|}[e_j,e_i] = 0 for
        // doubly stored pairs, and [e_i,e_i] = 0 for even i.
        for (&(i, j), coeffs) in &self.brackets {
            if i == j {
                if self.parity(i) == Parity::Even && coeffs.iter().any(|c| !c.is_zero()) {
                    return Err(Violation::Antisymmetry { i, j, residual: coeffs.clone() });
                }
                continue;
            }
            if i < j {
                if let Some(rev) = self.brackets.get(&(j, i)) {
                    let s = self.sign(i, j);
                    let residual: Vec<Rational> =
                        coeffs.iter().zip(rev).map(|(a, b)| a + &s * b).collect();
                    if residual.iter().any(|c| !c.is_zero()) {
                        return Err(Violation::Antisymmetry { i, j, residual });
                    }
                }
            }
        }
        // super-Jacobi on ordered basis triples; the effective bracket is
        // super-antisymmetric by construction, so the identity for i <= j <= k
        // implies it for all permutations
        let table: Vec<Vec<Vec<Rational>>> =
            (0..n).map(|i| (0..n).map(|j| self.bracket_basis(i, j)).collect()).collect();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let residual = self.jacobi_residual(&table, i, j, k);
                    if residual.iter().any(|c| !c.is_zero()) {
                        return Err(Violation::Jacobi { i, j, k, residual });
                    }
                }
            }
        }
        Ok(())
    }

    /// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]`
    /// on basis vectors `x = e_i, y = e_j, z = e_k`.
    fn jacobi_residual(
        &self,
        table: &[Vec<Vec<Rational>>],
        i: usize,
        j: usize,
        k: usize,
    ) -> Vec<Rational> {
        let n = self.dim();
        let mut residual = vec![Rational::zero(); n];
        let mut add_term = |a: usize, b: usize, c: usize| {
            // sign (-1)^{|a||c|} [e_a, [e_b, e_c]]
            let negate = self.parity(a) == Parity::Odd && self.parity(c) == Parity::Odd;
            for (s, inner) in table[b][c].iter().enumerate() {
                if inner.is_zero() {
                    continue;
                }
                for (m, outer) in table[a][s].iter().enumerate() {
                    if outer.is_zero() {
                        continue;
                    }
                    let value = inner * outer;
                    if negate {
                        residual[m] -= value;
                    } else {
                        residual[m] += value;
                    }
                }
            }
        };
        add_term(i, j, k);
        add_term(j, k, i);
        add_term(k, i, j);
        residual
    }

    /// Lower central series `C^0 = g, C^{k+1} = [g, C^k]`, as graded
    /// subspaces, down to the stable term (zero for nilpotent algebras).
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let n = self.dim();
        let mut series = vec![Subspace::whole(n)];
        loop {
            let last = series.last().unwrap();
            let mut next = Subspace::zero(n);
            for i in 0..n {
                for b in last.basis() {
                    next.insert(self.bracket_basis_vec(i, b));
                }
            }
            let next = next.graded_closure(self.dim_even);
            if &next == last {
                break;
            }
            let stop = next.is_zero();
            series.push(next);
            if stop {
                break;
            }
        }
        series
    }

    /// `[g, g]` as a graded subspace.
    pub fn derived_subalgebra(&self) -> Subspace {
        let series = self.lower_central_series();
        if series.len() > 1 {
            series[1].clone()
        } else {
            Subspace::zero(self.dim())
        }
    }

    /// `{x : [x, g] = 0}` as a graded subspace.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        if n == 0 {
            return Subspace::zero(0);
        }
        // rows indexed by (bracket partner j, output coordinate k)
        let mut m = RationalMatrix::zero(n * n, n);
        for i in 0..n {
            for j in 0..n {
                let col = self.bracket_basis(i, j);
                for (k, c) in col.into_iter().enumerate() {
                    *m.at_mut(j * n + k, i) = c;
                }
            }
        }
        let kernel = crate::exactmath::rational_kernel(&m);
        Subspace::from_vectors(n, &kernel).graded_closure(self.dim_even)
    }

    /// Nilpotency decision together with the nilpotency class (number of
    /// nonzero terms of the lower central series).
    pub fn is_nilpotent(&self) -> (bool, usize) {
        let series = self.lower_central_series();
        let nil = series.last().unwrap().is_zero();
        if self.dim() == 0 {
            return (true, 0);
        }
        (nil, if nil { series.len() - 1 } else { series.len() })
    }

    /// Direct product with block-diagonal structure constants. The combined
    /// basis takes both even parts first, then both odd parts.
    pub fn direct_product(&self, other: &LieSuperAlgebra) -> LieSuperAlgebra {
        let n0 = self.dim_even + other.dim_even;
        let n1 = self.dim_odd + other.dim_odd;
        let n = n0 + n1;
        let map_left = |i: usize| if i < self.dim_even { i } else { n0 + (i - self.dim_even) };
        let map_right =
            |j: usize| if j < other.dim_even { self.dim_even + j } else { n0 + self.dim_odd + (j - other.dim_even) };

        let mut names: Vec<String> = vec![String::new(); n];
        let mut used = std::collections::HashSet::new();
        for (i, name) in self.basis_names.iter().enumerate() {
            names[map_left(i)] = name.clone();
            used.insert(name.clone());
        }
        for (j, name) in other.basis_names.iter().enumerate() {
            let mut candidate = name.clone();
            while used.contains(&candidate) {
                candidate.push('\'');
            }
            used.insert(candidate.clone());
            names[map_right(j)] = candidate;
        }

        let mut entries = Vec::new();
        for (&(i, j), coeffs) in &self.brackets {
            let mut c = vec![Rational::zero(); n];
            for (k, x) in coeffs.iter().enumerate() {
                c[map_left(k)] = x.clone();
            }
            entries.push(((map_left(i), map_left(j)), c));
        }
        for (&(i, j), coeffs) in &other.brackets {
            let mut c = vec![Rational::zero(); n];
            for (k, x) in coeffs.iter().enumerate() {
                c[map_right(k)] = x.clone();
            }
            entries.push(((map_right(i), map_right(j)), c));
        }
        LieSuperAlgebra::new(n0, n1, Some(names), entries).unwrap()
    }

    /// Restriction to the even part (a Lie algebra on the first `dim_even`
    /// basis vectors). Odd components of even-even brackets vanish by the
    /// grading, so coefficient vectors are truncated.
    pub fn even_part(&self) -> LieSuperAlgebra {
        let n0 = self.dim_even;
        let names = self.basis_names[..n0].to_vec();
        let mut entries = Vec::new();
        for (&(i, j), coeffs) in &self.brackets {
            if i < n0 && j < n0 {
                entries.push(((i, j), coeffs[..n0].to_vec()));
            }
        }
        LieSuperAlgebra::new(n0, 0, Some(names), entries).unwrap()
    }

    /// Conjugate by an invertible graded matrix `p`: the new basis is
    /// `u_j = sum_i p[i][j] e_i` (columns of `p`).
    pub fn change_basis(&self, p: &RationalMatrix) -> Result<LieSuperAlgebra, LieAlgError> {
        let n = self.dim();
        if p.rows != n || p.cols != n {
            return Err(LieAlgError::BadMatrixShape(n));
        }
        for i in 0..n {
            for j in 0..n {
                if self.parity(i) != self.parity(j) && !p.at(i, j).is_zero() {
                    return Err(LieAlgError::UngradedMatrix);
                }
            }
        }
        let inv = p.inverse().ok_or(LieAlgError::SingularMatrix)?;
        let mut entries = Vec::new();
        for a in 0..n {
            for b in (a..n).filter(|&b| b > a || self.parity(a) == Parity::Odd) {
                let ua = Vector::from_coords(p.column(a));
                let ub = Vector::from_coords(p.column(b));
                let w = self.bracket(&ua, &ub).unwrap();
                let coeffs = inv.mul_vec(&w.coords);
                entries.push(((a, b), coeffs));
            }
        }
        LieSuperAlgebra::new(self.dim_even, self.dim_odd, Some(self.basis_names.clone()), entries)
    }

    /// Split off the largest central abelian direct factor: returns
    /// `core` with `Z(core) <= [core, core]`, the factor dimensions
    /// `(k0, k1)`, and the embedding matrix whose columns express the basis
    /// of `core x C^{k0|k1}` (in direct-product order) in the original
    /// coordinates.
    pub fn strip_abelian_factor(&self) -> StripResult {
        let n = self.dim();
        let center = self.center();
        let derived = self.derived_subalgebra();
        let zd = center.intersect(&derived).graded_closure(self.dim_even);

        // homogeneous complement C of Z cap [g,g] inside Z
        let mut span = zd.clone();
        let mut factor: Vec<Vec<Rational>> = Vec::new();
        for v in center.homogeneous_basis(self.dim_even) {
            if span.insert(v.clone()) {
                factor.push(v);
            }
        }

        // graded complement W of C containing [g,g]
        let mut w_basis: Vec<Vec<Rational>> = Vec::new();
        let mut total = Subspace::from_vectors(n, &factor);
        for v in derived.homogeneous_basis(self.dim_even) {
            if total.insert(v.clone()) {
                w_basis.push(v);
            }
        }
        for i in 0..n {
            let e = Vector::basis(n, i).coords;
            if total.insert(e.clone()) {
                w_basis.push(e);
            }
        }
        debug_assert_eq!(total.dim(), n);

        let is_even = |v: &Vec<Rational>| {
            v.iter().skip(self.dim_even).all(Rational::is_zero)
        };
        let core_even: Vec<Vec<Rational>> = w_basis.iter().filter(|v| is_even(v)).cloned().collect();
        let core_odd: Vec<Vec<Rational>> = w_basis.iter().filter(|v| !is_even(v)).cloned().collect();
        let fac_even: Vec<Vec<Rational>> = factor.iter().filter(|v| is_even(v)).cloned().collect();
        let fac_odd: Vec<Vec<Rational>> = factor.iter().filter(|v| !is_even(v)).cloned().collect();

        // embedding columns in direct-product order:
        // core even, factor even, core odd, factor odd
        let ordered: Vec<&Vec<Rational>> = core_even
            .iter()
            .chain(fac_even.iter())
            .chain(core_odd.iter())
            .chain(fac_odd.iter())
            .collect();
        let mut embedding = RationalMatrix::zero(n, n);
        for (j, v) in ordered.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                *embedding.at_mut(i, j) = x.clone();
            }
        }

        // structure constants of the core in its own basis
        let core_dim = core_even.len() + core_odd.len();
        let core_vectors: Vec<Vec<Rational>> =
            core_even.iter().chain(core_odd.iter()).cloned().collect();
        let mut basis_matrix = RationalMatrix::zero(n, core_dim);
        for (j, v) in core_vectors.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                *basis_matrix.at_mut(i, j) = x.clone();
            }
        }
        let mut entries = Vec::new();
        for a in 0..core_dim {
            for b in a..core_dim {
                if a == b && a < core_even.len() {
                    continue;
                }
                let w = self
                    .bracket(
                        &Vector::from_coords(core_vectors[a].clone()),
                        &Vector::from_coords(core_vectors[b].clone()),
                    )
                    .unwrap();
                if w.is_zero() {
                    continue;
                }
                let coeffs = basis_matrix
                    .solve(&w.coords)
                    .expect("core brackets lie in the span of the core basis");
                entries.push(((a, b), coeffs));
            }
        }
        let core = LieSuperAlgebra::new(core_even.len(), core_odd.len(), None, entries).unwrap();
        StripResult {
            core,
            abelian_even: fac_even.len(),
            abelian_odd: fac_odd.len(),
            embedding,
        }
    }

    /// Refined central series flag with 1-dimensional homogeneous steps;
    /// errors on non-nilpotent input. See [`AdaptedBasis`].
    pub fn refined_adapted_basis(&self) -> Result<AdaptedBasis, LieAlgError> {
        adapted::refined_adapted_basis(self)
    }
}

/// Result of [`LieSuperAlgebra::strip_abelian_factor`].
#[derive(Debug, Clone)]
pub struct StripResult {
    pub core: LieSuperAlgebra,
    pub abelian_even: usize,
    pub abelian_odd: usize,
    /// Columns express the `core x C^{k0|k1}` product basis in the original
    /// coordinates; an algebra isomorphism by construction.
    pub embedding: RationalMatrix,
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// Sparse integer bracket entry `(i, j, [(k, coeff)])`, all 0-based; the
/// builder input for the catalog and tests.
pub(crate) type SparseEntry = (usize, usize, Vec<(usize, i64)>);

/// Convenience builder over borrowed coefficient slices.
#[allow(clippy::type_complexity)]
pub(crate) fn table(
    dim_even: usize,
    dim_odd: usize,
    names: Option<Vec<String>>,
    sparse: &[(usize, usize, &[(usize, i64)])],
) -> LieSuperAlgebra {
    let owned: Vec<SparseEntry> =
        sparse.iter().map(|&(i, j, coeffs)| (i, j, coeffs.to_vec())).collect();
    table_vec(dim_even, dim_odd, names, owned)
}

/// Convenience builder over owned entries.
pub(crate) fn table_vec(
    dim_even: usize,
    dim_odd: usize,
    names: Option<Vec<String>>,
    sparse: Vec<SparseEntry>,
) -> LieSuperAlgebra {
    let n = dim_even + dim_odd;
    let entries = sparse
        .into_iter()
        .map(|(i, j, coeffs)| {
            let mut v = vec![Rational::zero(); n];
            for (k, c) in coeffs {
                v[k] = crate::exactmath::rat(c);
            }
            ((i, j), v)
        })
        .collect();
    LieSuperAlgebra::new(dim_even, dim_odd, names, entries).unwrap()
}
