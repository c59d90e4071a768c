//! Degree-truncated ideal spans and supercentralizing chains.
//!
//! A [`TruncatedIdeal`] tracks the degree-`<= D` part of the left span of a
//! growing list of (quotient-)supercentral elements. Membership modulo the
//! truncated span is a semi-decision for two-sided ideal membership: the
//! span may undercount, never overcount, so a chain reported as complete is
//! complete for the degree-`D` truncation. For supercentral generators the
//! right multiples are signed left multiples, so nothing is lost on that
//! side.

use super::{EnvAlgebra, EnvElement, EnvError, PbwMonomial};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Row-echelon span of elements of `U(g)`, rows keyed by leading monomial.
#[derive(Debug, Clone)]
pub struct EchelonSpan {
    env: Arc<EnvAlgebra>,
    rows: BTreeMap<PbwMonomial, EnvElement>,
}

impl EchelonSpan {
    pub fn new(env: Arc<EnvAlgebra>) -> Self {
        EchelonSpan { env, rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Normal form modulo the span: repeatedly cancels the largest reducible
    /// term. Each cancellation introduces only strictly smaller monomials,
    /// so the scan terminates.
    pub fn reduce(&self, element: &EnvElement) -> EnvElement {
        let mut current = element.clone();
        loop {
            let hit = current
                .terms()
                .rev()
                .find(|(m, _)| self.rows.contains_key(*m))
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = hit else {
                return current;
            };
            let row = &self.rows[&m];
            current = current.sub(&row.scale(&c));
        }
    }

    pub fn contains(&self, element: &EnvElement) -> bool {
        self.reduce(element).is_zero()
    }

    /// Insert an element; returns true when the span grew.
    pub fn insert(&mut self, element: &EnvElement) -> bool {
        let reduced = self.reduce(element);
        let Some(lead) = reduced.leading_monomial().cloned() else {
            return false;
        };
        let inv = reduced.coefficient(&lead).recip();
        self.rows.insert(lead, reduced.scale(&inv));
        true
    }

    pub fn env(&self) -> &Arc<EnvAlgebra> {
        &self.env
    }
}

/// The degree-truncated span of left multiples of a list of generators.
#[derive(Debug, Clone)]
pub struct TruncatedIdeal {
    pub generators: Vec<EnvElement>,
    pub degree_bound: u32,
    span: EchelonSpan,
}

impl TruncatedIdeal {
    pub fn new(env: Arc<EnvAlgebra>, degree_bound: u32) -> Self {
        TruncatedIdeal { generators: Vec::new(), degree_bound, span: EchelonSpan::new(env) }
    }

    pub fn span(&self) -> &EchelonSpan {
        &self.span
    }

    /// Enlarge by all left multiples `m * s` with `deg(m * s) <= D`. Degrees
    /// are additive on leading terms, so the monomial degree cutoff is exact.
    pub fn add_generator(&mut self, s: &EnvElement) -> Result<(), EnvError> {
        let d = s.degree();
        if d > self.degree_bound {
            return Err(EnvError::DegreeBound { bound: self.degree_bound, required: d });
        }
        let env = Arc::clone(&self.span.env);
        for m in env.monomials_up_to(self.degree_bound - d) {
            let multiple = monomial_element(&env, &m).mul(s)?;
            if !multiple.is_zero() {
                self.span.insert(&multiple);
            }
        }
        self.generators.push(s.clone());
        Ok(())
    }
}

/// A PBW monomial as an element (it is already in normal form).
fn monomial_element(env: &Arc<EnvAlgebra>, m: &PbwMonomial) -> EnvElement {
    let mut e = env.scalar(num_traits::One::one());
    for (pos, &count) in m.0.iter().enumerate() {
        for _ in 0..count {
            e = e.mul(&env.generator(pos)).expect("same algebra");
        }
    }
    e
}

/// Outcome of [`supercentralizing_chain`].
#[derive(Debug, Clone)]
pub struct ChainResult {
    /// Extracted elements, in extraction order; each is supercentral modulo
    /// the span of its predecessors (at the truncation degree).
    pub elements: Vec<EnvElement>,
    /// True when every input generator reduced to zero modulo the final
    /// span: the chain is complete at the truncation degree.
    pub complete: bool,
    /// Diagnostic for incomplete chains.
    pub blocked: Option<String>,
    pub ideal: TruncatedIdeal,
}

/// Build a supercentralizing chain for the span of `gens`, truncated at
/// degree `bound`.
///
/// Iteratively: take the first generator not yet in the span, apply the
/// supercentral extraction relative to the span (maximal derivation powers
/// staying outside the span), verify the extracted element supercommutes
/// with every generator of `U(g)` modulo the span, add its left multiples,
/// and repeat. Stops with `complete = true` when all generators reduce to
/// zero. The span grows strictly every round, so the loop terminates.
pub fn supercentralizing_chain(
    env: &Arc<EnvAlgebra>,
    gens: &[EnvElement],
    bound: u32,
) -> Result<ChainResult, EnvError> {
    if gens.is_empty() {
        return Err(EnvError::ZeroElement);
    }
    for g in gens {
        if g.is_zero() {
            return Err(EnvError::ZeroElement);
        }
        if g.parity().is_none() {
            return Err(EnvError::NotHomogeneous);
        }
        if g.degree() > bound {
            return Err(EnvError::DegreeBound { bound, required: g.degree() });
        }
    }

    let mut ideal = TruncatedIdeal::new(Arc::clone(env), bound);
    let mut elements = Vec::new();
    // the adjoint of a generator never raises the degree (leading parts
    // cancel in the associated graded algebra), so the truncated dimension
    // caps every derivation-power loop
    let cap = env.monomials_up_to(bound).len() as u32 + 2;
    loop {
        let mut remaining = gens
            .iter()
            .map(|g| ideal.span().reduce(g))
            .filter(|g| !g.is_zero());
        let Some(first) = remaining.next() else {
            return Ok(ChainResult { elements, complete: true, blocked: None, ideal });
        };
        drop(remaining);

        // extraction relative to the span: maximal derivation powers that
        // stay outside the span
        let mut current = first;
        for t in 0..env.dim() {
            let mut steps = 0u32;
            loop {
                let next = env.ad_generator(t, &current)?;
                if ideal.span().contains(&next) {
                    break;
                }
                current = next;
                steps += 1;
                if steps > cap {
                    return Err(EnvError::NilpotencyCapExceeded { cap });
                }
            }
        }

        // quotient supercentrality check; truncation can in principle block it
        let bad = (0..env.dim()).find(|&t| {
            env.ad_generator(t, &current)
                .map(|w| !ideal.span().contains(&w))
                .unwrap_or(true)
        });
        if let Some(t) = bad {
            let blocked = format!(
                "extracted element of degree {} is not supercentral modulo the degree-{} span \
                 (fails against generator {}); raise the degree bound",
                current.degree(),
                bound,
                t + 1
            );
            return Ok(ChainResult { elements, complete: false, blocked: Some(blocked), ideal });
        }

        ideal.add_generator(&current)?;
        elements.push(current);
    }
}
