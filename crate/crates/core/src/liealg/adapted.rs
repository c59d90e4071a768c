//! Adapted homogeneous bases refining the lower central series.
//!
//! A nilpotent algebra has a flag `0 = V_0 < V_1 < ... < V_n = g` with
//! 1-dimensional homogeneous steps and `[g, V_i] <= V_{i-1}`. The flag is
//! built by refining the lower central series from the deepest term upwards;
//! any vector added on top of a completed deeper term keeps the flag
//! condition because its brackets land inside that term.
//!
//! Deterministic refinement rule: each layer is completed by its homogeneous
//! echelon basis vectors, even vectors before odd ones, in pivot order.

use super::{LieAlgError, LieSuperAlgebra, Parity, Subspace, Vector};

/// Ordered homogeneous basis `x_1..x_n` with `[g, <x_1..x_i>] <= <x_1..x_{i-1}>`.
#[derive(Debug, Clone)]
pub struct AdaptedBasis {
    vectors: Vec<Vector>,
    parities: Vec<Parity>,
    /// Prefix lengths at which the lower-central-series terms are completed,
    /// deepest term first (for `h5`: `[2, 3, 5]`).
    series_dims: Vec<usize>,
}

impl AdaptedBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn series_dims(&self) -> &[usize] {
        &self.series_dims
    }

    /// Columns are the adapted vectors in original coordinates.
    pub fn matrix(&self) -> crate::exactmath::RationalMatrix {
        let n = self.vectors.len();
        let mut m = crate::exactmath::RationalMatrix::zero(n, n);
        for (j, v) in self.vectors.iter().enumerate() {
            for (i, x) in v.coords.iter().enumerate() {
                *m.at_mut(i, j) = x.clone();
            }
        }
        m
    }
}

pub(super) fn refined_adapted_basis(g: &LieSuperAlgebra) -> Result<AdaptedBasis, LieAlgError> {
    let (nilpotent, _) = g.is_nilpotent();
    if !nilpotent {
        return Err(LieAlgError::NotNilpotent);
    }
    let n = g.dim();
    let series = g.lower_central_series();
    let mut flag = Subspace::zero(n);
    let mut vectors: Vec<Vector> = Vec::new();
    let mut parities = Vec::new();
    let mut series_dims = Vec::new();
    for layer in series.iter().rev() {
        for v in layer.homogeneous_basis(g.dim_even()) {
            if flag.insert(v.clone()) {
                let vec = Vector::from_coords(v);
                let parity = match vec.parity(g.dim_even()) {
                    super::VectorParity::Odd => Parity::Odd,
                    _ => Parity::Even,
                };
                parities.push(parity);
                vectors.push(vec);
            }
        }
        assert_eq!(flag.dim(), layer.dim(), "layer refinement incomplete");
        if !layer.is_zero() {
            series_dims.push(layer.dim());
        }
    }
    let basis = AdaptedBasis { vectors, parities, series_dims };

    // flag condition, checked post hoc by direct bracket evaluation
    let mut prefix = Subspace::zero(n);
    for (i, x) in basis.vectors.iter().enumerate() {
        for a in 0..n {
            let b = g.bracket_basis_vec(a, &x.coords);
            assert!(
                prefix.contains(&b),
                "flag condition failed at step {}: [e_{}, x_{}] escapes the prefix",
                i + 1,
                a + 1,
                i + 1
            );
        }
        prefix.insert(x.coords.clone());
    }
    Ok(basis)
}
