//! Sparse multivariate polynomials with rational coefficients.
//!
//! Terms are kept in a map from exponent vector to nonzero coefficient,
//! ordered graded-lexicographically. Everything arising from Lie algebra
//! bracket matrices is a linear form, but the type is general: products,
//! exact division and substitution are supported for the fraction-free
//! elimination and the classification searches.

use super::{ExactMathError, Rational};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector with graded-lexicographic ordering (total degree first,
/// then lexicographic on exponents).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpVec(pub Vec<u32>);

impl ExpVec {
    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise division; `None` if some exponent of `other` exceeds ours.
    fn checked_div(&self, other: &ExpVec) -> Option<ExpVec> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(ExpVec(out))
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over the rationals.
///
/// Invariants: no stored zero coefficients; every exponent vector has length
/// equal to the number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<ExpVec, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vec<String>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(ExpVec(vec![0; p.vars.len()]), c);
        }
        p
    }

    /// The variable `vars[idx]` as a polynomial.
    pub fn var(vars: Vec<String>, idx: usize) -> Self {
        assert!(idx < vars.len(), "variable index out of range");
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(ExpVec(exps), Rational::one());
        p
    }

    /// Linear form `sum coeffs[k] * vars[k]`.
    pub fn linear_form(vars: Vec<String>, coeffs: &[Rational]) -> Self {
        assert_eq!(vars.len(), coeffs.len());
        let mut p = Self::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut exps = vec![0; p.vars.len()];
                exps[k] = 1;
                p.terms.insert(ExpVec(exps), c.clone());
            }
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.degree() == 0)
    }

    /// The constant value if this polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(ExpVec::degree).max().unwrap_or(0)
    }

    /// Degree in the single variable `idx`.
    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|e| e.0[idx]).max().unwrap_or(0)
    }

    /// Indices of variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut present = vec![false; self.vars.len()];
        for e in self.terms.keys() {
            for (i, &x) in e.0.iter().enumerate() {
                if x > 0 {
                    present[i] = true;
                }
            }
        }
        present.iter().enumerate().filter(|(_, &p)| p).map(|(i, _)| i).collect()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, e: ExpVec, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
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

    fn assert_same_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomial variable lists differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = Self::zero(self.vars.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        out
    }

    /// Leading term under graded-lex order.
    fn leading(&self) -> Option<(&ExpVec, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact division: returns `q` with `self = q * d`, or `None` when the
    /// division is not exact. Standard leading-term elimination under the
    /// graded-lex order.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        self.assert_same_vars(d);
        let (dlt_e, dlt_c) = d.leading()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.vars.clone());
        while let Some((rlt_e, rlt_c)) = rem.leading() {
            let qe = rlt_e.checked_div(dlt_e)?;
            let qc = rlt_c / dlt_c;
            let mut t = Self::zero(self.vars.clone());
            t.terms.insert(qe, qc);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Evaluate at a rational point (one value per variable).
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, ExactMathError> {
        if point.len() != self.vars.len() {
            return Err(ExactMathError::PointLength { expected: self.vars.len(), got: point.len() });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                for _ in 0..k {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitute the polynomial `value` for variable `idx`; all other
    /// variables are kept. `value` must share the same variable list.
    pub fn substitute(&self, idx: usize, value: &Self) -> Self {
        self.assert_same_vars(value);
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let k = e.0[idx];
            let mut base = ExpVec(e.0.clone());
            base.0[idx] = 0;
            let mut term = Self::zero(self.vars.clone());
            term.terms.insert(base, c.clone());
            for _ in 0..k {
                term = term.mul(value);
            }
            out = out.add(&term);
        }
        out
    }

    /// The coefficient of `vars[idx]^1` and the remainder, viewing the
    /// polynomial as `A * x + B` with `A`, `B` free of `x`. Returns `None`
    /// when the degree in `x` exceeds 1.
    pub fn split_linear(&self, idx: usize) -> Option<(Self, Self)> {
        let mut a = Self::zero(self.vars.clone());
        let mut b = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            match e.0[idx] {
                0 => b.add_term(e.clone(), c.clone()),
                1 => {
                    let mut e2 = e.clone();
                    e2.0[idx] = 0;
                    a.add_term(e2, c.clone());
                }
                _ => return None,
            }
        }
        Some((a, b))
    }

    /// Coefficients of `x^0, x^1, ..., x^d` as polynomials in the remaining
    /// variables, where `x = vars[idx]`.
    pub fn coefficients_in(&self, idx: usize) -> Vec<Self> {
        let d = self.degree_in(idx) as usize;
        let mut out = vec![Self::zero(self.vars.clone()); d + 1];
        for (e, c) in &self.terms {
            let k = e.0[idx] as usize;
            let mut e2 = e.clone();
            e2.0[idx] = 0;
            out[k].add_term(e2, c.clone());
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // Leading term first.
        for (e, c) in self.terms.iter().rev() {
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
            for (i, &k) in e.0.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], k)),
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
