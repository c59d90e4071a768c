//! The enveloping superalgebra `U(g)` of a nilpotent Lie superalgebra.
//!
//! Elements are kept in PBW normal form over an adapted homogeneous basis
//! `z_1 < z_2 < ... < z_n` refining the lower central series. Ordered
//! monomials `z_1^{a_1} .. z_n^{a_n}` with odd exponents at most 1 form a
//! linear basis; products are straightened by the rewrites
//!
//! ```text
//! z_j z_i -> (-1)^{|i||j|} z_i z_j + [z_j, z_i]      (j > i)
//! y y     -> 1/2 [y, y]                              (y odd)
//! ```
//!
//! which terminate because the flag condition `[g, <z_1..z_i>] <= <z_1..z_{i-1}>`
//! pushes every bracket correction strictly down the order, lowering
//! (degree, inversion count) lexicographically. The same basis order serves
//! as the derivation order of the supercentral extraction: successively
//! applying maximal powers of `ad z_1, ad z_2, ...` to a nonzero element
//! lands in the intersection of all kernels, which is exactly the
//! supercenter.
//!
//! The odd-square rewrite carries the coefficient 1/2, forced by
//! `[[y, y]] = 2 y^2 = [y, y]`.

mod span;

pub use span::{supercentralizing_chain, ChainResult, EchelonSpan, TruncatedIdeal};

use crate::exactmath::{Rational, RationalMatrix};
use crate::expr::{parse_products, ExprError};
use crate::liealg::{AdaptedBasis, LieAlgError, LieSuperAlgebra, Parity, Vector};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnvError {
    #[error("elements belong to different enveloping algebras")]
    AlgebraMismatch,
    #[error(transparent)]
    Algebra(#[from] LieAlgError),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("nonzero element required")]
    ZeroElement,
    #[error("adjoint nilpotency cap {cap} exceeded; input may not be nilpotent")]
    NilpotencyCapExceeded { cap: u32 },
    #[error("degree bound {bound} is below the generator degree {required}")]
    DegreeBound { bound: u32, required: u32 },
    #[error("internal invariant breached: {0}")]
    InvariantBreach(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// PBW monomial: exponents per adapted basis position (odd positions 0/1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PbwMonomial(pub Vec<u32>);

impl PbwMonomial {
    pub fn one(n: usize) -> Self {
        PbwMonomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn max_support(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// `U(g)` with a fixed adapted basis order. Immutable after construction:
/// the bracket table in adapted coordinates is precomputed eagerly
/// (initialize once, read from any thread).
#[derive(Debug)]
pub struct EnvAlgebra {
    algebra: LieSuperAlgebra,
    adapted: AdaptedBasis,
    /// `[z_i, z_j]` in adapted coordinates, sparse.
    brackets: Vec<Vec<Vec<(usize, Rational)>>>,
    parities: Vec<Parity>,
    /// Display names: original basis names when an adapted vector is a
    /// coordinate vector, synthetic `z{i}` otherwise.
    display_names: Vec<String>,
    from_adapted: RationalMatrix,
    to_adapted: RationalMatrix,
    nilpotency_class: u32,
}

impl EnvAlgebra {
    /// Build `U(g)` for nilpotent `g`.
    pub fn new(algebra: LieSuperAlgebra) -> Result<Arc<Self>, EnvError> {
        let adapted = algebra.refined_adapted_basis()?;
        let n = algebra.dim();
        let from_adapted = adapted.matrix();
        let to_adapted = from_adapted.inverse().expect("adapted basis is invertible");
        let parities: Vec<Parity> = (0..n).map(|i| adapted.parity(i)).collect();

        let mut brackets = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let w = algebra
                    .bracket(&adapted.vectors()[i], &adapted.vectors()[j])
                    .expect("adapted vectors have the right length");
                let coords = to_adapted.mul_vec(&w.coords);
                let sparse: Vec<(usize, Rational)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                // flag condition: bracket corrections sit strictly below
                for &(s, _) in &sparse {
                    assert!(s < i.min(j), "adapted bracket escapes the flag");
                }
                brackets[i][j] = sparse;
            }
        }

        let display_names: Vec<String> = (0..n)
            .map(|i| {
                let v = &adapted.vectors()[i];
                let mut hits = v.coords.iter().enumerate().filter(|(_, c)| !c.is_zero());
                match (hits.next(), hits.next()) {
                    (Some((k, c)), None) if c.is_one() => algebra.basis_names()[k].clone(),
                    _ => format!("z{}", i + 1),
                }
            })
            .collect();

        let (_, class) = algebra.is_nilpotent();
        Ok(Arc::new(EnvAlgebra {
            algebra,
            adapted,
            brackets,
            parities,
            display_names,
            from_adapted,
            to_adapted,
            nilpotency_class: class as u32,
        }))
    }

    pub fn algebra(&self) -> &LieSuperAlgebra {
        &self.algebra
    }

    pub fn adapted(&self) -> &AdaptedBasis {
        &self.adapted
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn generator_parity(&self, t: usize) -> Parity {
        self.parities[t]
    }

    pub fn display_names(&self) -> &[String] {
        &self.display_names
    }

    fn same(&self, other: &EnvAlgebra) -> bool {
        std::ptr::eq(self, other)
            || (self.algebra == other.algebra && self.from_adapted == other.from_adapted)
    }
}

/// Element of `U(g)` in PBW normal form; no zero coefficients stored.
#[derive(Debug, Clone)]
pub struct EnvElement {
    env: Arc<EnvAlgebra>,
    terms: BTreeMap<PbwMonomial, Rational>,
}

impl PartialEq for EnvElement {
    fn eq(&self, other: &Self) -> bool {
        self.env.same(&other.env) && self.terms == other.terms
    }
}

impl Eq for EnvElement {}

impl EnvAlgebra {
    pub fn zero(self: &Arc<Self>) -> EnvElement {
        EnvElement { env: Arc::clone(self), terms: BTreeMap::new() }
    }

    pub fn scalar(self: &Arc<Self>, c: Rational) -> EnvElement {
        let mut e = self.zero();
        if !c.is_zero() {
            e.terms.insert(PbwMonomial::one(self.dim()), c);
        }
        e
    }

    pub fn one(self: &Arc<Self>) -> EnvElement {
        self.scalar(Rational::one())
    }

    /// The generator `z_t` (adapted order).
    pub fn generator(self: &Arc<Self>, t: usize) -> EnvElement {
        let mut exps = vec![0; self.dim()];
        exps[t] = 1;
        let mut e = self.zero();
        e.terms.insert(PbwMonomial(exps), Rational::one());
        e
    }

    /// Image of a Lie algebra vector (original coordinates) in `U(g)`.
    pub fn embed_vector(self: &Arc<Self>, v: &Vector) -> Result<EnvElement, EnvError> {
        if v.coords.len() != self.dim() {
            return Err(EnvError::Algebra(LieAlgError::DimensionMismatch {
                expected: self.dim(),
                got: v.coords.len(),
            }));
        }
        let coords = self.to_adapted.mul_vec(&v.coords);
        let mut e = self.zero();
        for (t, c) in coords.into_iter().enumerate() {
            if !c.is_zero() {
                let mut exps = vec![0; self.dim()];
                exps[t] = 1;
                e.terms.insert(PbwMonomial(exps), c);
            }
        }
        Ok(e)
    }

    /// Image of the named basis vector.
    pub fn basis_element(self: &Arc<Self>, name: &str) -> Result<EnvElement, EnvError> {
        let k = self
            .algebra
            .basis_names()
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| ExprError::UnknownName(name.to_string()))?;
        self.embed_vector(&Vector::basis(self.dim(), k))
    }

    /// Parse the expression mini-language with names bound to the basis;
    /// factors are multiplied left to right and straightened.
    pub fn parse_element(self: &Arc<Self>, input: &str) -> Result<EnvElement, EnvError> {
        let mut acc = self.zero();
        for product in parse_products(input)? {
            let mut term = self.scalar(product.coeff);
            for (name, power) in product.factors {
                let base = self.basis_element(&name)?;
                for _ in 0..power {
                    term = term.mul(&base)?;
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// `m * z_g` in normal form, as a term map.
    fn mul_mono_gen(&self, m: &PbwMonomial, g: usize) -> BTreeMap<PbwMonomial, Rational> {
        let mut out = BTreeMap::new();
        let Some(t) = m.max_support() else {
            let mut exps = vec![0; self.dim()];
            exps[g] = 1;
            out.insert(PbwMonomial(exps), Rational::one());
            return out;
        };
        if t < g {
            let mut exps = m.0.clone();
            exps[g] = 1;
            out.insert(PbwMonomial(exps), Rational::one());
            return out;
        }
        if t == g {
            if self.parities[g] == Parity::Even {
                let mut exps = m.0.clone();
                exps[g] += 1;
                out.insert(PbwMonomial(exps), Rational::one());
                return out;
            }
            // odd square: m' (y y) = 1/2 m' [y, y]
            let mut rest = m.clone();
            rest.0[g] = 0;
            let half = Rational::new(1.into(), 2.into());
            for &(s, ref c) in &self.brackets[g][g] {
                let part = self.mul_mono_gen(&rest, s);
                accumulate(&mut out, part, &(c * &half));
            }
            return out;
        }
        // t > g: m = m' z_t, commute z_g past z_t
        let mut rest = m.clone();
        rest.0[t] -= 1;
        let swapped = self.mul_mono_gen(&rest, g);
        let sign = if self.parities[t] == Parity::Odd && self.parities[g] == Parity::Odd {
            -Rational::one()
        } else {
            Rational::one()
        };
        for (u, c) in swapped {
            let appended = self.mul_mono_gen(&u, t);
            accumulate(&mut out, appended, &(c * &sign));
        }
        for &(s, ref c) in &self.brackets[t][g] {
            let part = self.mul_mono_gen(&rest, s);
            accumulate(&mut out, part, c);
        }
        out
    }
}

fn accumulate(
    into: &mut BTreeMap<PbwMonomial, Rational>,
    from: BTreeMap<PbwMonomial, Rational>,
    scale: &Rational,
) {
    if scale.is_zero() {
        return;
    }
    for (m, c) in from {
        let c = c * scale;
        if c.is_zero() {
            continue;
        }
        use std::collections::btree_map::Entry;
        match into.entry(m) {
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
}

impl EnvElement {
    pub fn env(&self) -> &Arc<EnvAlgebra> {
        &self.env
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(PbwMonomial::degree).max().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> std::collections::btree_map::Iter<'_, PbwMonomial, Rational> {
        self.terms.iter()
    }

    pub fn leading_monomial(&self) -> Option<&PbwMonomial> {
        self.terms.keys().next_back()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_same(&self, other: &EnvElement) -> Result<(), EnvError> {
        if self.env.same(&other.env) {
            Ok(())
        } else {
            Err(EnvError::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &EnvElement) -> EnvElement {
        self.check_same(other).expect("element addition across algebras");
        let mut out = self.clone();
        accumulate(&mut out.terms, other.terms.clone(), &Rational::one());
        out
    }

    pub fn sub(&self, other: &EnvElement) -> EnvElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> EnvElement {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> EnvElement {
        if c.is_zero() {
            return self.env.zero();
        }
        EnvElement {
            env: Arc::clone(&self.env),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Product in PBW normal form.
    pub fn mul(&self, other: &EnvElement) -> Result<EnvElement, EnvError> {
        self.check_same(other)?;
        let mut out = self.env.zero();
        for (mv, cv) in &other.terms {
            // expand self * mv generator by generator
            let mut acc: BTreeMap<PbwMonomial, Rational> = self.terms.clone();
            for (pos, &count) in mv.0.iter().enumerate() {
                for _ in 0..count {
                    let mut next = BTreeMap::new();
                    for (m, c) in &acc {
                        let part = self.env.mul_mono_gen(m, pos);
                        accumulate(&mut next, part, c);
                    }
                    acc = next;
                }
            }
            accumulate(&mut out.terms, acc, cv);
        }
        Ok(out)
    }

    /// Decomposition into the even and odd graded parts `A_0`, `A_1`.
    pub fn graded_parts(&self) -> (EnvElement, EnvElement) {
        let mut even = self.env.zero();
        let mut odd = self.env.zero();
        for (m, c) in &self.terms {
            if self.monomial_parity(m) == Parity::Even {
                even.terms.insert(m.clone(), c.clone());
            } else {
                odd.terms.insert(m.clone(), c.clone());
            }
        }
        (even, odd)
    }

    fn monomial_parity(&self, m: &PbwMonomial) -> Parity {
        let mut odd_count = 0u32;
        for (t, &e) in m.0.iter().enumerate() {
            if self.env.parities[t] == Parity::Odd {
                odd_count += e;
            }
        }
        if odd_count % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Parity when homogeneous (zero counts as even).
    pub fn parity(&self) -> Option<Parity> {
        let (even, odd) = self.graded_parts();
        match (even.is_zero(), odd.is_zero()) {
            (_, true) => Some(Parity::Even),
            (true, false) => Some(Parity::Odd),
            _ => None,
        }
    }

    /// The grading automorphism `a_0 + a_1 -> a_0 - a_1`.
    pub fn sigma(&self) -> EnvElement {
        let (even, odd) = self.graded_parts();
        even.sub(&odd)
    }

    /// Supercommutator `[[u, v]] = uv - (-1)^{|u||v|} vu`, extended
    /// bilinearly over the graded components.
    pub fn supercommutator(&self, other: &EnvElement) -> Result<EnvElement, EnvError> {
        self.check_same(other)?;
        let (u0, u1) = self.graded_parts();
        let (v0, v1) = other.graded_parts();
        let mut out = self.env.zero();
        for (u, pu) in [(&u0, Parity::Even), (&u1, Parity::Odd)] {
            for (v, pv) in [(&v0, Parity::Even), (&v1, Parity::Odd)] {
                if u.is_zero() || v.is_zero() {
                    continue;
                }
                let uv = u.mul(v)?;
                let vu = v.mul(u)?;
                let term = if pu == Parity::Odd && pv == Parity::Odd {
                    uv.add(&vu)
                } else {
                    uv.sub(&vu)
                };
                out = out.add(&term);
            }
        }
        Ok(out)
    }
}

impl EnvAlgebra {
    /// Adjoint action `ad x (u) = [[x, u]]` of a homogeneous Lie algebra
    /// vector (original coordinates).
    pub fn ad(self: &Arc<Self>, x: &Vector, u: &EnvElement) -> Result<EnvElement, EnvError> {
        if !u.env.same(self) {
            return Err(EnvError::AlgebraMismatch);
        }
        let image = self.embed_vector(x)?;
        if image.parity().is_none() {
            return Err(EnvError::NotHomogeneous);
        }
        image.supercommutator(u)
    }

    /// Adjoint action of the adapted generator `z_t`.
    pub fn ad_generator(self: &Arc<Self>, t: usize, u: &EnvElement) -> Result<EnvElement, EnvError> {
        self.generator(t).supercommutator(u)
    }

    /// Smallest `k` with `(ad x)^k (u) = 0`, guarded by an a-priori cap;
    /// exceeding the cap means a non-nilpotent input slipped through.
    ///
    /// For even `x` the cap is `class * (deg u + 1) + 1`; an odd `x` squares
    /// into `ad [x,x]` by the graded commutation identity, so acting on `g`
    /// the cap is 2, and in general twice the even cap.
    pub fn ad_nilpotency_index(self: &Arc<Self>, x: &Vector, u: &EnvElement) -> Result<u32, EnvError> {
        let image = self.embed_vector(x)?;
        let parity = image.parity().ok_or(EnvError::NotHomogeneous)?;
        let even_cap = self.nilpotency_class * (u.degree() + 1) + 1;
        let cap = match parity {
            Parity::Even => even_cap,
            Parity::Odd => {
                if u.degree() <= 1 {
                    2
                } else {
                    2 * even_cap
                }
            }
        };
        let mut current = u.clone();
        let mut k = 0u32;
        while !current.is_zero() {
            if k > cap {
                return Err(EnvError::NilpotencyCapExceeded { cap });
            }
            current = image.supercommutator(&current)?;
            k += 1;
        }
        Ok(k)
    }

    /// True when `[[z_t, u]] = 0` for every generator; sufficient for
    /// supercentrality since each `[[z_t, -]]` is a superderivation and the
    /// generators generate `U(g)`.
    pub fn is_supercentral(self: &Arc<Self>, u: &EnvElement) -> bool {
        (0..self.dim()).all(|t| {
            self.ad_generator(t, u).map(|w| w.is_zero()).unwrap_or(false)
        })
    }

    /// Apply maximal powers of `ad z_1, ad z_2, ..., ad z_n` in the adapted
    /// order: for each `t` replace `a` by `(ad z_t)^{k_t}(a)` with `k_t`
    /// maximal such that the result is nonzero. The output is nonzero and
    /// supercentral; stability of the earlier kernels under later
    /// derivations follows from the commutation relation of the adjoint
    /// derivations and is asserted at runtime.
    pub fn extract_supercentral(self: &Arc<Self>, a: &EnvElement) -> Result<EnvElement, EnvError> {
        if a.is_zero() {
            return Err(EnvError::ZeroElement);
        }
        let n = self.dim();
        let mut current = a.clone();
        for t in 0..n {
            let cap = 2 * self.nilpotency_class * (current.degree() + 1) + 2;
            let mut steps = 0u32;
            loop {
                let next = self.ad_generator(t, &current)?;
                if next.is_zero() {
                    break;
                }
                current = next;
                steps += 1;
                if steps > cap {
                    return Err(EnvError::NilpotencyCapExceeded { cap });
                }
            }
            // earlier kernels stay stable
            for s in 0..=t {
                let w = self.ad_generator(s, &current)?;
                if !w.is_zero() {
                    return Err(EnvError::InvariantBreach(format!(
                        "kernel of derivation {} not stable at stage {}",
                        s + 1,
                        t + 1
                    )));
                }
            }
        }
        if current.is_zero() {
            return Err(EnvError::InvariantBreach("extraction reached zero".into()));
        }
        if !self.is_supercentral(&current) {
            return Err(EnvError::InvariantBreach("extracted element is not supercentral".into()));
        }
        Ok(current)
    }

    /// All PBW monomials of degree at most `d`, ascending.
    pub fn monomials_up_to(self: &Arc<Self>, d: u32) -> Vec<PbwMonomial> {
        let n = self.dim();
        let mut out = Vec::new();
        let mut stack = vec![(PbwMonomial::one(n), 0usize, 0u32)];
        while let Some((m, pos, deg)) = stack.pop() {
            if pos == n {
                out.push(m);
                continue;
            }
            let max_e = match self.parities[pos] {
                Parity::Odd => 1.min(d - deg),
                Parity::Even => d - deg,
            };
            for e in 0..=max_e {
                let mut next = m.clone();
                next.0[pos] = e;
                stack.push((next, pos + 1, deg + e));
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for EnvElement {
    /// Canonical rendering: terms in descending graded-lex order, factors in
    /// adapted basis order, coefficients as `p/q` in lowest terms.
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
            for (t, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.env.display_names[t].clone()),
                    _ => factors.push(format!("{}^{}", self.env.display_names[t], e)),
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
    use crate::exactmath::{rat, ratio};
    use crate::liealg::{catalog, parse_catalog_spec};

    fn u_h3() -> Arc<EnvAlgebra> {
        let g = catalog(&parse_catalog_spec("heis:1").unwrap()).unwrap();
        EnvAlgebra::new(g).unwrap()
    }

    fn u_super() -> Arc<EnvAlgebra> {
        let g = catalog(&parse_catalog_spec("heis_super:even,1,2").unwrap()).unwrap();
        EnvAlgebra::new(g).unwrap()
    }

    #[test]
    fn adapted_order_and_names() {
        let env = u_h3();
        assert_eq!(env.display_names(), &["h", "x1", "y1"]);
    }

    #[test]
    fn straightening_yx() {
        let env = u_h3();
        let x = env.basis_element("x1").unwrap();
        let y = env.basis_element("y1").unwrap();
        let yx = y.mul(&x).unwrap();
        // y x = x y - h
        let expected = env.parse_element("x1*y1 - h").unwrap();
        assert_eq!(yx, expected);
        assert_eq!(yx.to_string(), "x1*y1 - h");
    }

    #[test]
    fn odd_square_rewrite() {
        let env = u_super();
        // odd z1 with [z1, z1] = h: z1 * z1 = 1/2 h
        let z1 = env.basis_element("z1").unwrap();
        let sq = z1.mul(&z1).unwrap();
        let expected = env.parse_element("1/2*h").unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn xy_times_x() {
        let env = u_h3();
        let xy = env.parse_element("x1*y1").unwrap();
        let x = env.basis_element("x1").unwrap();
        let p = xy.mul(&x).unwrap();
        let expected = env.parse_element("x1^2*y1 - x1*h").unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn supercommutator_on_generators() {
        let env = u_h3();
        let x = env.basis_element("x1").unwrap();
        let y = env.basis_element("y1").unwrap();
        let h = env.basis_element("h").unwrap();
        assert_eq!(x.supercommutator(&y).unwrap(), h);
        // h central
        let xy = env.parse_element("x1*y1").unwrap();
        assert!(h.supercommutator(&xy).unwrap().is_zero());
        // odd square: [[y, y]] = 2 y^2 = [y, y] in the superalgebra
        let envs = u_super();
        let z = envs.basis_element("z1").unwrap();
        let hh = envs.basis_element("h").unwrap();
        assert_eq!(z.supercommutator(&z).unwrap(), hh);
    }

    #[test]
    fn sigma_is_an_automorphism() {
        let env = u_super();
        let u = env.parse_element("x1 + z1").unwrap();
        let s = u.sigma();
        assert_eq!(s, env.parse_element("x1 - z1").unwrap());
        assert_eq!(s.sigma(), u);
        let v = env.parse_element("2*z1*z2 - y1").unwrap();
        let lhs = u.mul(&v).unwrap().sigma();
        let rhs = u.sigma().mul(&v.sigma()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ad_examples() {
        let env = u_h3();
        let x = Vector::basis(3, 0);
        let h = Vector::basis(3, 2);
        let y_sq = env.parse_element("y1^2").unwrap();
        // ad_x(y^2) = 2 h y
        let expected = env.parse_element("2*h*y1").unwrap();
        assert_eq!(env.ad(&x, &y_sq).unwrap(), expected);
        // ad_h = 0 everywhere
        let u = env.parse_element("x1^2*y1 - 3*h + y1").unwrap();
        assert!(env.ad(&h, &u).unwrap().is_zero());
        // nilpotency index of ad_x on y is 2
        let y = env.basis_element("y1").unwrap();
        assert_eq!(env.ad_nilpotency_index(&x, &y).unwrap(), 2);
    }

    #[test]
    fn supercentral_membership() {
        let env = u_h3();
        let h = env.basis_element("h").unwrap();
        assert!(env.is_supercentral(&h));
        let x = env.basis_element("x1").unwrap();
        assert!(!env.is_supercentral(&x));
        let one_plus_h2 = env.parse_element("1 + h^2").unwrap();
        assert!(env.is_supercentral(&one_plus_h2));
    }

    #[test]
    fn extraction_worked_examples() {
        let env = u_h3();
        let h = env.basis_element("h").unwrap();
        // y -> h
        let y = env.basis_element("y1").unwrap();
        assert_eq!(env.extract_supercentral(&y).unwrap(), h);
        // h -> h unchanged
        assert_eq!(env.extract_supercentral(&h).unwrap(), h);
        // xy -> -h^2
        let xy = env.parse_element("x1*y1").unwrap();
        let expected = env.parse_element("-h^2").unwrap();
        assert_eq!(env.extract_supercentral(&xy).unwrap(), expected);
        // zero input is an error
        assert!(matches!(env.extract_supercentral(&env.zero()), Err(EnvError::ZeroElement)));
    }

    #[test]
    fn pbw_monomial_count() {
        // 1 even + 1 odd generator: degree <= 2 monomials:
        // 1, x, y, x^2, xy -> 5
        let g = catalog(&parse_catalog_spec("heis_super:odd,1").unwrap()).unwrap();
        // dims (1|2): x; y, h odd
        let env = EnvAlgebra::new(g).unwrap();
        let count = env.monomials_up_to(2).len();
        // n0=1, n1=2: deg<=2: 1 + 3 + (x^2, xy, xh, yh) = 8
        assert_eq!(count, 8);
    }

    #[test]
    fn parse_rejects_unknown_names() {
        let env = u_h3();
        assert!(matches!(
            env.parse_element("q5 + h"),
            Err(EnvError::Expr(ExprError::UnknownName(_)))
        ));
    }

    #[test]
    fn associativity_smoke() {
        let env = u_h3();
        let a = env.parse_element("x1*y1 - 2*h").unwrap();
        let b = env.parse_element("y1^2 + x1").unwrap();
        let c = env.parse_element("h*x1 + 1/2*y1").unwrap();
        let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn scalar_coefficient_arithmetic() {
        let env = u_h3();
        let e = env.parse_element("3/2*x1 - 1/2*x1").unwrap();
        assert_eq!(e, env.basis_element("x1").unwrap());
        assert_eq!(env.parse_element("x1 - x1").unwrap(), env.zero());
        assert_eq!(env.scalar(ratio(2, 4)), env.scalar(ratio(1, 2)));
        assert_eq!(env.scalar(rat(0)), env.zero());
    }
}
