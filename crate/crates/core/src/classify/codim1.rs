//! Abelian ideals of codimension 1.
//!
//! Every hyperplane containing the derived subalgebra is automatically an
//! ideal, and all codimension-1 ideals with abelian quotient contain it, so
//! the search space is the projective space of hyperplanes in
//! `g/[g,g]`. Enumerating the standard affine charts `l_c = 1`, the kernel
//! vectors are `w_i = v_i - l_i v_c`, and the abelian conditions
//! `[x, w_i] = 0` (`x` in the derived subalgebra) and `[w_i, w_j] = 0`
//! degenerate to affine-linear equations in the chart coordinates because
//! `[v_c, v_c] = 0` kills the only quadratic term. Each chart is an exact
//! rational linear solve, so a "none" answer is a certificate.

use crate::exactmath::{Rational, RationalMatrix};
use crate::liealg::{LieSuperAlgebra, Subspace, Vector};
use num_traits::Zero;

/// First hyperplane `H >= [g,g]` with `[H, H] = 0`, in echelon form; charts
/// are scanned in order and within a chart the particular solution with
/// zero free variables is taken, so the witness is deterministic.
pub fn find_abelian_codim1_ideal(g: &LieSuperAlgebra) -> Option<Subspace> {
    let n = g.dim();
    if n == 0 {
        return None;
    }
    let derived = g.derived_subalgebra();
    // a hyperplane containing a nonabelian derived subalgebra cannot be abelian
    if !is_abelian(g, &derived) {
        return None;
    }
    let d = n - derived.dim();
    assert!(d >= 1, "derived subalgebra of codimension 0 in a nonzero nilpotent algebra");

    let lifts = complement_lifts(n, &derived);
    debug_assert_eq!(lifts.len(), d);

    for c in 0..d {
        // unknowns l_i, i != c; kernel vectors w_i = v_i - l_i v_c
        let others: Vec<usize> = (0..d).filter(|&i| i != c).collect();
        let unknowns = others.len();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();

        // [x, w_i] = [x, v_i] - l_i [x, v_c] = 0 for x in the derived basis
        for x in derived.basis() {
            let bvc = bracket_vecs(g, x, &lifts[c]);
            for (slot, &i) in others.iter().enumerate() {
                let bvi = bracket_vecs(g, x, &lifts[i]);
                for k in 0..n {
                    if bvc[k].is_zero() && bvi[k].is_zero() {
                        continue;
                    }
                    let mut row = vec![Rational::zero(); unknowns];
                    row[slot] = -bvc[k].clone();
                    rows.push(row);
                    rhs.push(-bvi[k].clone());
                }
            }
        }
        // [w_i, w_j] = [v_i, v_j] - l_j [v_i, v_c] + l_i [v_j, v_c] = 0
        for (si, &i) in others.iter().enumerate() {
            for (sj, &j) in others.iter().enumerate().skip(si + 1) {
                let bij = bracket_vecs(g, &lifts[i], &lifts[j]);
                let bic = bracket_vecs(g, &lifts[i], &lifts[c]);
                let bjc = bracket_vecs(g, &lifts[j], &lifts[c]);
                for k in 0..n {
                    if bij[k].is_zero() && bic[k].is_zero() && bjc[k].is_zero() {
                        continue;
                    }
                    let mut row = vec![Rational::zero(); unknowns];
                    row[sj] = -bic[k].clone();
                    row[si] = &row[si] + &bjc[k];
                    rows.push(row);
                    rhs.push(-bij[k].clone());
                }
            }
        }

        let solution = if rows.is_empty() {
            Some(vec![Rational::zero(); unknowns])
        } else {
            RationalMatrix::from_rows(rows).solve(&rhs)
        };
        if let Some(lambda) = solution {
            let mut h = derived.clone();
            for (slot, &i) in others.iter().enumerate() {
                let w: Vec<Rational> = lifts[i]
                    .iter()
                    .zip(&lifts[c])
                    .map(|(a, b)| a - &lambda[slot] * b)
                    .collect();
                h.insert(w);
            }
            debug_assert_eq!(h.dim(), n - 1);
            debug_assert!(is_abelian(g, &h));
            debug_assert!(is_ideal(g, &h));
            return Some(h);
        }
    }
    None
}

/// Standard basis vectors at the non-pivot columns of the subspace's
/// echelon basis: a deterministic complement.
pub(super) fn complement_lifts(n: usize, s: &Subspace) -> Vec<Vec<Rational>> {
    let pivots = s.pivot_columns();
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|c| Vector::basis(n, c).coords)
        .collect()
}

pub(super) fn bracket_vecs(g: &LieSuperAlgebra, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    g.bracket(&Vector::from_coords(u.to_vec()), &Vector::from_coords(v.to_vec()))
        .expect("coordinate lengths match")
        .coords
}

pub(super) fn is_abelian(g: &LieSuperAlgebra, s: &Subspace) -> bool {
    let basis = s.basis();
    for (i, u) in basis.iter().enumerate() {
        for v in &basis[i..] {
            if bracket_vecs(g, u, v).iter().any(|c| !c.is_zero()) {
                return false;
            }
        }
    }
    true
}

pub(super) fn is_ideal(g: &LieSuperAlgebra, s: &Subspace) -> bool {
    for i in 0..g.dim() {
        for v in s.basis() {
            if !s.contains(&g.bracket_basis_vec(i, v)) {
                return false;
            }
        }
    }
    true
}
