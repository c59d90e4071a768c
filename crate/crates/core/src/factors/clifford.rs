//! The Clifford algebra `Cliff_q` on anticommuting generators squaring to 1.
//!
//! Basis elements are products `e_S = prod_{i in S} e_i` over ascending
//! subsets of `{1..q}`. The defining relations `e_i e_j = -e_j e_i` for
//! `i != j` and `e_i^2 = 1` fix the multiplication up to the quadratic form;
//! over an algebraically closed field all nondegenerate forms are
//! equivalent, and the facts used downstream (dimension `2^q`, center of
//! dimension 1 for even `q` and 2 for odd `q`) do not depend on the choice,
//! so `+1` squares are fixed here.

use crate::exactmath::{rational_kernel, Rational, RationalMatrix};
use crate::expr::{parse_products, ExprError};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("elements have different orders: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("order {0} too large for the subset representation")]
    OrderTooLarge(usize),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

const MAX_ORDER: usize = 16;

/// Element of `Cliff_q`; terms keyed by generator subset bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordElement {
    order: usize,
    terms: BTreeMap<u32, Rational>,
}

impl CliffordElement {
    pub fn zero(order: usize) -> Self {
        assert!(order <= MAX_ORDER);
        CliffordElement { order, terms: BTreeMap::new() }
    }

    pub fn scalar(order: usize, c: Rational) -> Self {
        let mut e = Self::zero(order);
        if !c.is_zero() {
            e.terms.insert(0, c);
        }
        e
    }

    pub fn one(order: usize) -> Self {
        Self::scalar(order, Rational::one())
    }

    /// Generator `e_i` (1-based).
    pub fn generator(order: usize, i: usize) -> Self {
        assert!((1..=order).contains(&i));
        let mut e = Self::zero(order);
        e.terms.insert(1 << (i - 1), Rational::one());
        e
    }

    /// Basis element `e_S` for a subset bitmask.
    pub fn basis(order: usize, mask: u32) -> Self {
        assert!(mask < (1u32 << order));
        let mut e = Self::zero(order);
        e.terms.insert(mask, Rational::one());
        e
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> std::collections::btree_map::Iter<'_, u32, Rational> {
        self.terms.iter()
    }

    fn check(&self, other: &Self) -> Result<(), CliffordError> {
        if self.order != other.order {
            return Err(CliffordError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    fn add_term(&mut self, mask: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mask) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check(other)?;
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        CliffordElement { order: self.order, terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CliffordError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        CliffordElement {
            order: self.order,
            terms: self.terms.iter().map(|(&m, k)| (m, k * c)).collect(),
        }
    }

    /// Product: `e_S e_T = sign * e_{S xor T}` where the sign counts the
    /// transpositions needed to merge the two ascending products (squares
    /// contribute `+1`).
    pub fn mul(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check(other)?;
        let mut out = Self::zero(self.order);
        for (&s, cs) in &self.terms {
            for (&t, ct) in &other.terms {
                let sign = merge_sign(s, t);
                let c = cs * ct * sign;
                out.add_term(s ^ t, c);
            }
        }
        Ok(out)
    }

    /// Parse the expression mini-language with names `e1..eq`.
    pub fn parse(order: usize, input: &str) -> Result<Self, CliffordError> {
        let mut acc = Self::zero(order);
        for product in parse_products(input)? {
            let mut term = Self::scalar(order, product.coeff);
            for (name, power) in product.factors {
                let unknown = || CliffordError::Expr(ExprError::UnknownName(name.clone()));
                let idx: usize = name
                    .strip_prefix('e')
                    .ok_or_else(unknown)?
                    .parse()
                    .map_err(|_| unknown())?;
                if !(1..=order).contains(&idx) {
                    return Err(unknown());
                }
                let base = Self::generator(order, idx);
                for _ in 0..power {
                    term = term.mul(&base)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

/// `(-1)^{#{(i, j) in S x T : i > j}}` as a rational sign.
fn merge_sign(s: u32, t: u32) -> Rational {
    let mut inversions = 0u32;
    let mut tt = t;
    while tt != 0 {
        let j = tt.trailing_zeros();
        // elements of S strictly greater than j must be crossed
        let above = s >> (j + 1);
        inversions += above.count_ones();
        tt &= tt - 1;
    }
    if inversions % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Dimension of the (ordinary) center of `Cliff_q`: solved linearly as the
/// kernel of `z -> [z, e_i]` over the `2^q` basis. Equals 1 for even `q`
/// and 2 for odd `q` (the scalars, plus the volume element for odd `q`),
/// matching `Cliff_1 = C x C`, `Cliff_2 = M_2(C)` and the tensor recursion
/// `Cliff_{q+2} = Cliff_q (x) M_2(C)`.
pub fn clifford_center_dim(q: usize) -> usize {
    assert!(q <= MAX_ORDER);
    let dim = 1usize << q;
    if q == 0 {
        return 1;
    }
    let mut m = RationalMatrix::zero(dim * q, dim);
    for basis_idx in 0..dim {
        let z = CliffordElement::basis(q, basis_idx as u32);
        for i in 1..=q {
            let e = CliffordElement::generator(q, i);
            let comm = z.mul(&e).unwrap().sub(&e.mul(&z).unwrap()).unwrap();
            for (&mask, c) in comm.terms() {
                *m.at_mut((i - 1) * dim + mask as usize, basis_idx) = c.clone();
            }
        }
    }
    rational_kernel(&m).len()
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&mask, c) in self.terms.iter().rev() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for i in 0..self.order {
                if mask & (1 << i) != 0 {
                    factors.push(format!("e{}", i + 1));
                }
            }
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_squares_to_one() {
        let e1 = CliffordElement::generator(3, 1);
        assert_eq!(e1.mul(&e1).unwrap(), CliffordElement::one(3));
    }

    #[test]
    fn generators_anticommute() {
        let e1 = CliffordElement::generator(2, 1);
        let e2 = CliffordElement::generator(2, 2);
        let a = e1.mul(&e2).unwrap();
        let b = e2.mul(&e1).unwrap();
        assert_eq!(a, b.neg());
        assert_eq!(a.to_string(), "e1*e2");
    }

    #[test]
    fn triple_product_sign() {
        // e2 e1 e3 = -e1 e2 e3
        let q = 3;
        let p = CliffordElement::parse(q, "e2*e1*e3").unwrap();
        let expected = CliffordElement::parse(q, "-e1*e2*e3").unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn center_dimensions() {
        assert_eq!(clifford_center_dim(0), 1);
        assert_eq!(clifford_center_dim(1), 2);
        assert_eq!(clifford_center_dim(2), 1);
        assert_eq!(clifford_center_dim(3), 2);
        assert_eq!(clifford_center_dim(4), 1);
        assert_eq!(clifford_center_dim(5), 2);
    }

    #[test]
    fn basis_count() {
        // the algebra has exactly 2^q basis elements
        for q in 0..=4u32 {
            let dim = 1u32 << q;
            let mut products = std::collections::BTreeSet::new();
            for mask in 0..dim {
                products.insert(mask);
            }
            assert_eq!(products.len(), dim as usize, "q = {q}");
        }
    }

    #[test]
    fn order_mismatch() {
        let a = CliffordElement::generator(2, 1);
        let b = CliffordElement::generator(3, 1);
        assert!(matches!(a.mul(&b), Err(CliffordError::OrderMismatch(2, 3))));
    }
}
