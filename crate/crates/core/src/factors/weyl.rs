//! The Weyl algebra `A_n` in normal form.
//!
//! Generators `x_1..x_n, y_1..y_n` subject to `x_i y_j - y_j x_i = delta_ij`
//! (this sign convention is used throughout; it rewrites as
//! `y_i x_i -> x_i y_i - 1`). Elements are kept as rational combinations of
//! normal monomials `x^a y^b`.
//!
//! Includes the explicit element
//! `alpha = x1 + y1 (sum_{i>=2} l_i x_i y_i) + sum_{i>=2} (x_i + y_i)`
//! whose right ideal is maximal over the complex numbers when the `l_i` are
//! linearly independent over the rationals (Stafford's construction).
//! Rational `l_i` with `n >= 3` can never satisfy that hypothesis, so for
//! rational inputs the element is provided for experimentation only and no
//! maximality claim is attached; the Krull-dimension consequences are
//! likewise not verified here.

use crate::exactmath::Rational;
use crate::expr::{parse_products, ExprError};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("elements have different orders: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("stafford element needs order n >= 2, got {0}")]
    OrderTooSmall(usize),
    #[error("stafford element needs {expected} coefficients, got {got}")]
    BadLambdaCount { expected: usize, got: usize },
    #[error("stafford coefficients must be nonzero")]
    ZeroLambda,
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// Normal monomial `x^a y^b` of `A_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylMonomial {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

impl WeylMonomial {
    fn one(n: usize) -> Self {
        WeylMonomial { x: vec![0; n], y: vec![0; n] }
    }

    pub fn degree(&self) -> u32 {
        self.x.iter().sum::<u32>() + self.y.iter().sum::<u32>()
    }
}

/// Element of `A_n` in normal form; no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    order: usize,
    terms: BTreeMap<WeylMonomial, Rational>,
}

impl WeylElement {
    pub fn zero(order: usize) -> Self {
        WeylElement { order, terms: BTreeMap::new() }
    }

    pub fn scalar(order: usize, c: Rational) -> Self {
        let mut e = Self::zero(order);
        if !c.is_zero() {
            e.terms.insert(WeylMonomial::one(order), c);
        }
        e
    }

    pub fn one(order: usize) -> Self {
        Self::scalar(order, Rational::one())
    }

    /// `x_i` (1-based index).
    pub fn x(order: usize, i: usize) -> Self {
        assert!((1..=order).contains(&i));
        let mut m = WeylMonomial::one(order);
        m.x[i - 1] = 1;
        let mut e = Self::zero(order);
        e.terms.insert(m, Rational::one());
        e
    }

    /// `y_i` (1-based index).
    pub fn y(order: usize, i: usize) -> Self {
        assert!((1..=order).contains(&i));
        let mut m = WeylMonomial::one(order);
        m.y[i - 1] = 1;
        let mut e = Self::zero(order);
        e.terms.insert(m, Rational::one());
        e
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(WeylMonomial::degree).max().unwrap_or(0)
    }

    pub fn terms(&self) -> std::collections::btree_map::Iter<'_, WeylMonomial, Rational> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: WeylMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn add(&self, other: &Self) -> Result<Self, WeylError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        WeylElement {
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, WeylError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        WeylElement {
            order: self.order,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    fn check(&self, other: &Self) -> Result<(), WeylError> {
        if self.order != other.order {
            return Err(WeylError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    /// Product in normal form via the normal-ordering identity per index:
    /// with `y x = x y - 1`,
    /// `y^b x^c = sum_k (-1)^k k! C(b,k) C(c,k) x^{c-k} y^{b-k}`.
    pub fn mul(&self, other: &Self) -> Result<Self, WeylError> {
        self.check(other)?;
        let n = self.order;
        let mut out = Self::zero(n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                // (x^a y^b)(x^c y^d) = x^a (y^b x^c) y^d, indices independent
                let mut partial: Vec<(WeylMonomial, Rational)> =
                    vec![(WeylMonomial::one(n), c1 * c2)];
                for i in 0..n {
                    let b = m1.y[i];
                    let c = m2.x[i];
                    let kmax = b.min(c);
                    let mut next = Vec::new();
                    for k in 0..=kmax {
                        let coeff = straighten_coeff(b, c, k);
                        for (m, base) in &partial {
                            let mut m = m.clone();
                            m.x[i] += m1.x[i] + (c - k);
                            m.y[i] += m2.y[i] + (b - k);
                            next.push((m, base * &coeff));
                        }
                    }
                    partial = next;
                }
                for (m, c) in partial {
                    out.add_term(m, c);
                }
            }
        }
        Ok(out)
    }

    /// Parse the expression mini-language with names `x1..xn, y1..yn`.
    pub fn parse(order: usize, input: &str) -> Result<Self, WeylError> {
        let mut acc = Self::zero(order);
        for product in parse_products(input)? {
            let mut term = Self::scalar(order, product.coeff);
            for (name, power) in product.factors {
                let base = resolve_name(order, &name)?;
                for _ in 0..power {
                    term = term.mul(&base)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

fn resolve_name(order: usize, name: &str) -> Result<WeylElement, WeylError> {
    let unknown = || WeylError::Expr(ExprError::UnknownName(name.to_string()));
    let (kind, idx) = name.split_at(1);
    let i: usize = idx.parse().map_err(|_| unknown())?;
    if !(1..=order).contains(&i) {
        return Err(unknown());
    }
    match kind {
        "x" => Ok(WeylElement::x(order, i)),
        "y" => Ok(WeylElement::y(order, i)),
        _ => Err(unknown()),
    }
}

/// `(-1)^k k! C(b,k) C(c,k)`.
fn straighten_coeff(b: u32, c: u32, k: u32) -> Rational {
    let mut value = Rational::one();
    for t in 0..k {
        // k! C(b,k) C(c,k) = prod_{t<k} (b-t)(c-t)/(t+1)
        value *= Rational::from_integer(((b - t) as i64).into());
        value *= Rational::from_integer(((c - t) as i64).into());
        value /= Rational::from_integer(((t + 1) as i64).into());
    }
    if k % 2 == 1 {
        -value
    } else {
        value
    }
}

/// Stafford's element `alpha = x1 + y1 (sum_{i=2}^n l_i x_i y_i)
/// + sum_{i=2}^n (x_i + y_i)` in normal form (`y1` commutes with `x_i y_i`
/// for `i >= 2`, so the middle terms read `l_i x_i y_1 y_i`).
///
/// `lambdas` supplies `l_2..l_n` and must be nonzero. Straightened, the
/// element has `3n - 2` monomials and degree 3.
pub fn stafford_alpha(n: usize, lambdas: &[Rational]) -> Result<WeylElement, WeylError> {
    if n < 2 {
        return Err(WeylError::OrderTooSmall(n));
    }
    if lambdas.len() != n - 1 {
        return Err(WeylError::BadLambdaCount { expected: n - 1, got: lambdas.len() });
    }
    if lambdas.iter().any(Rational::is_zero) {
        return Err(WeylError::ZeroLambda);
    }
    let mut alpha = WeylElement::x(n, 1);
    let y1 = WeylElement::y(n, 1);
    for (offset, lambda) in lambdas.iter().enumerate() {
        let i = offset + 2;
        let xi = WeylElement::x(n, i);
        let yi = WeylElement::y(n, i);
        let middle = y1.mul(&xi.mul(&yi)?)?.scale(lambda);
        alpha = alpha.add(&middle)?.add(&xi)?.add(&yi)?;
    }
    Ok(alpha)
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
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
            for (i, &e) in m.x.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, e)),
                }
            }
            for (i, &e) in m.y.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("y{}", i + 1)),
                    _ => factors.push(format!("y{}^{}", i + 1, e)),
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
