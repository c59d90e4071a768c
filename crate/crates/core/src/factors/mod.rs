//! Normal-form arithmetic for the building blocks of primitive quotients:
//! Weyl algebras (with Stafford's explicit element), Clifford algebras, and
//! the quotient map from a Heisenberg enveloping algebra onto a Weyl
//! algebra. Graded primitive quotients of `U(g)` for nilpotent `g` are
//! tensor products `Cliff_q (x) A_p`; this module provides the two tensor
//! factors separately.

mod clifford;
mod weyl;

pub use clifford::{clifford_center_dim, CliffordElement, CliffordError};
pub use weyl::{stafford_alpha, WeylElement, WeylError, WeylMonomial};

use crate::env::{EnvAlgebra, EnvElement};
use crate::exactmath::Rational;
use crate::liealg::{catalog, CatalogSpec};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorsError {
    #[error("element is not over a catalog Heisenberg algebra H_{{2n+1}}")]
    NotHeisenberg,
    #[error("scale must be nonzero")]
    ZeroScale,
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// The primitive-quotient map `U(H_{2n+1}) -> A_n` sending `h` to
/// `scale * 1`, `x_i` to `x_i` and `y_i` to `scale * y_i`. The rescaling of
/// the `y_i` makes the image satisfy `x_i y_i - y_i x_i = scale = image(h)`,
/// so the map is an algebra homomorphism for every nonzero scale and is the
/// identity on generators when `scale = 1`. Its kernel contains `h - scale`.
pub fn heisenberg_to_weyl(u: &EnvElement, scale: &Rational) -> Result<WeylElement, FactorsError> {
    if scale.is_zero() {
        return Err(FactorsError::ZeroScale);
    }
    let env = u.env();
    let n = heisenberg_order(env).ok_or(FactorsError::NotHeisenberg)?;

    // adapted order of the catalog Heisenberg is (h, x1..xn, y1..yn)
    let mut out = WeylElement::zero(n);
    for (mono, coeff) in u.terms() {
        let h_exp = mono.0[0];
        let mut scale_power = coeff.clone();
        for _ in 0..h_exp {
            scale_power *= scale;
        }
        let mut term = WeylElement::scalar(n, scale_power);
        for i in 0..n {
            let e = mono.0[1 + i];
            if e > 0 {
                for _ in 0..e {
                    term = term.mul(&WeylElement::x(n, i + 1))?;
                }
            }
        }
        for i in 0..n {
            let e = mono.0[1 + n + i];
            if e > 0 {
                let mut y_scaled = WeylElement::y(n, i + 1).scale(scale);
                for _ in 1..e {
                    y_scaled = y_scaled.mul(&WeylElement::y(n, i + 1).scale(scale))?;
                }
                term = term.mul(&y_scaled)?;
            }
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Recognize `U(H_{2n+1})` structurally: the underlying algebra must equal
/// the catalog Heisenberg of the right dimension.
fn heisenberg_order(env: &EnvAlgebra) -> Option<usize> {
    let g = env.algebra();
    if g.dim_odd() != 0 || g.dim() % 2 == 0 || g.dim() < 3 {
        return None;
    }
    let n = (g.dim() - 1) / 2;
    let reference = catalog(&CatalogSpec::Heisenberg { n }).ok()?;
    (g == &reference).then_some(n)
}
