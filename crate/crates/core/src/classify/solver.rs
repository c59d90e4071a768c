//! Exact rational-point search for small polynomial systems.
//!
//! The stratified ideal searches produce systems whose equations are linear
//! in each variable separately (bilinear between echelon rows plus affine
//! constraints). The solver eliminates variables by exact substitution and
//! splits cases on nonconstant leading coefficients:
//!
//! 1. an equation that is a nonzero constant kills the branch;
//! 2. an equation linear in a variable with a nonzero *rational* coefficient
//!    eliminates that variable by polynomial substitution;
//! 3. an equation `A*x + B` with nonconstant `A` splits into the branch
//!    `A = 0, B = 0` and the branch `A != 0`, where `x = -B/A` is
//!    substituted after clearing denominators and `A` joins the nonzero
//!    constraints;
//! 4. a univariate equation of degree 2 is solved by the discriminant
//!    (no rational square root means no rational point on the branch).
//!
//! Every move either eliminates a variable everywhere or removes a variable
//! from one equation without adding new variables, so the recursion
//! terminates. Leaves assign free variables from a small integer grid
//! avoiding the nonzero constraints (a finite union of hypersurfaces cannot
//! cover a large enough grid), back-substitute the eliminations, and verify
//! against the original system.
//!
//! Systems outside this fragment (a univariate equation of degree 3 or
//! more, or every equation nonlinear in every variable) are reported as
//! [`SolveOutcome::Undecided`] rather than guessed.

use crate::exactmath::{rat, MultiPoly, Rational};
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// One rational solution, as values for all variables.
    Solution(Vec<Rational>),
    /// Certified: the system has no rational solution.
    NoRationalSolution,
    /// The solver's fragment was left; no claim either way.
    Undecided,
}

#[derive(Debug, Clone)]
struct Elimination {
    var: usize,
    numerator: MultiPoly,
    denominator: MultiPoly,
}

/// Find a rational common zero of `equations` (all sharing one variable
/// list), or certify there is none.
pub fn solve_system(equations: &[MultiPoly], num_vars: usize) -> SolveOutcome {
    if equations.is_empty() {
        return SolveOutcome::Solution(vec![Rational::zero(); num_vars]);
    }
    let vars = equations[0].vars().to_vec();
    assert_eq!(vars.len(), num_vars);
    let outcome = go(equations.to_vec(), Vec::new(), (0..num_vars).collect(), Vec::new(), &vars);
    // guard against solver bugs: verify before reporting
    if let SolveOutcome::Solution(point) = &outcome {
        for eq in equations {
            if !eq.eval(point).expect("full point").is_zero() {
                return SolveOutcome::Undecided;
            }
        }
    }
    outcome
}

fn go(
    mut eqs: Vec<MultiPoly>,
    nonzeros: Vec<MultiPoly>,
    active: Vec<usize>,
    eliminations: Vec<Elimination>,
    vars: &[String],
) -> SolveOutcome {
    // 1. cleanup
    eqs.retain(|e| !e.is_zero());
    for e in &eqs {
        if let Some(c) = e.as_constant() {
            if !c.is_zero() {
                return SolveOutcome::NoRationalSolution;
            }
        }
    }
    eqs.retain(|e| e.as_constant().is_none());
    if nonzeros.iter().any(MultiPoly::is_zero) {
        return SolveOutcome::NoRationalSolution;
    }

    // 2. leaf: assign free variables away from the nonzero hypersurfaces
    if eqs.is_empty() {
        return finish(&nonzeros, active, eliminations, vars);
    }

    // 3. linear variable with constant coefficient: exact elimination
    let mut constant_pivot: Option<(usize, usize)> = None;
    'scan: for (ei, e) in eqs.iter().enumerate() {
        for &v in &active {
            if e.degree_in(v) == 1 {
                let (a, _) = e.split_linear(v).expect("degree checked");
                if a.as_constant().is_some() {
                    constant_pivot = Some((ei, v));
                    break 'scan;
                }
            }
        }
    }
    if let Some((ei, v)) = constant_pivot {
        let (a, b) = eqs[ei].split_linear(v).expect("degree checked");
        let c = a.as_constant().expect("constant coefficient");
        debug_assert!(!c.is_zero());
        let value = b.scale(&(-c.recip()));
        let mut next: Vec<MultiPoly> = Vec::with_capacity(eqs.len() - 1);
        for (fi, f) in eqs.iter().enumerate() {
            if fi != ei {
                next.push(f.substitute(v, &value));
            }
        }
        let next_nonzeros: Vec<MultiPoly> =
            nonzeros.iter().map(|f| f.substitute(v, &value)).collect();
        let mut elim = eliminations;
        elim.push(Elimination {
            var: v,
            numerator: value,
            denominator: MultiPoly::constant(vars.to_vec(), Rational::one()),
        });
        let next_active = active.into_iter().filter(|&w| w != v).collect();
        return go(next, next_nonzeros, next_active, elim, vars);
    }

    // 4. linear variable with nonconstant coefficient: case split
    let mut split: Option<(usize, usize)> = None;
    'outer: for (ei, e) in eqs.iter().enumerate() {
        for &v in &active {
            if e.degree_in(v) == 1 {
                split = Some((ei, v));
                break 'outer;
            }
        }
    }
    if let Some((ei, v)) = split {
        let e = eqs[ei].clone();
        let (a, b) = e.split_linear(v).expect("degree checked");

        // branch A = 0, B = 0
        let mut zero_branch = eqs.clone();
        zero_branch.remove(ei);
        zero_branch.push(a.clone());
        zero_branch.push(b.clone());
        let zero_outcome =
            go(zero_branch, nonzeros.clone(), active.clone(), eliminations.clone(), vars);
        if let SolveOutcome::Solution(_) = zero_outcome {
            return zero_outcome;
        }

        // branch A != 0: substitute x = -B/A with cleared denominators
        let mut cleared: Vec<MultiPoly> = Vec::new();
        for (fi, f) in eqs.iter().enumerate() {
            if fi != ei {
                cleared.push(substitute_cleared(f, v, &b.neg(), &a));
            }
        }
        let mut next_nonzeros: Vec<MultiPoly> =
            nonzeros.iter().map(|f| substitute_cleared(f, v, &b.neg(), &a)).collect();
        next_nonzeros.push(a.clone());
        let mut elim = eliminations;
        elim.push(Elimination { var: v, numerator: b.neg(), denominator: a });
        let next_active: Vec<usize> = active.into_iter().filter(|&w| w != v).collect();
        let nonzero_outcome = go(cleared, next_nonzeros, next_active, elim, vars);
        return match (zero_outcome, nonzero_outcome) {
            (_, s @ SolveOutcome::Solution(_)) => s,
            (SolveOutcome::Undecided, _) | (_, SolveOutcome::Undecided) => SolveOutcome::Undecided,
            _ => SolveOutcome::NoRationalSolution,
        };
    }

    // 5. univariate equation: degree-2 solved exactly, higher degrees are
    // outside the fragment
    for (ei, e) in eqs.iter().enumerate() {
        let support = e.support_vars();
        if support.len() != 1 {
            continue;
        }
        let v = support[0];
        let coeffs = e.coefficients_in(v);
        let consts: Option<Vec<Rational>> =
            coeffs.iter().map(MultiPoly::as_constant).collect();
        let Some(consts) = consts else { continue };
        if consts.len() == 3 {
            let roots = quadratic_rational_roots(&consts[2], &consts[1], &consts[0]);
            let Some(roots) = roots else {
                return SolveOutcome::NoRationalSolution;
            };
            let mut undecided = false;
            for r in roots {
                let value = MultiPoly::constant(vars.to_vec(), r);
                let mut next: Vec<MultiPoly> = Vec::new();
                for (fi, f) in eqs.iter().enumerate() {
                    if fi != ei {
                        next.push(f.substitute(v, &value));
                    }
                }
                let next_nonzeros: Vec<MultiPoly> =
                    nonzeros.iter().map(|f| f.substitute(v, &value)).collect();
                let mut elim = eliminations.clone();
                elim.push(Elimination {
                    var: v,
                    numerator: value,
                    denominator: MultiPoly::constant(vars.to_vec(), Rational::one()),
                });
                let next_active: Vec<usize> =
                    active.iter().copied().filter(|&w| w != v).collect();
                match go(next, next_nonzeros, next_active, elim, vars) {
                    s @ SolveOutcome::Solution(_) => return s,
                    SolveOutcome::Undecided => undecided = true,
                    SolveOutcome::NoRationalSolution => {}
                }
            }
            return if undecided {
                SolveOutcome::Undecided
            } else {
                SolveOutcome::NoRationalSolution
            };
        }
        return SolveOutcome::Undecided;
    }

    SolveOutcome::Undecided
}

/// Assign free variables from an expanding integer grid, dodging the
/// nonzero constraints, then back-substitute the eliminations.
fn finish(
    nonzeros: &[MultiPoly],
    active: Vec<usize>,
    eliminations: Vec<Elimination>,
    vars: &[String],
) -> SolveOutcome {
    let n = vars.len();
    let degree_sum: u32 = nonzeros.iter().map(MultiPoly::total_degree).sum();
    let radius = degree_sum as i64 + 1;

    let mut assignment: Option<Vec<Rational>> = None;
    let mut grid = GridIter::new(active.len(), radius);
    'search: while let Some(values) = grid.next_point() {
        let mut point = vec![Rational::zero(); n];
        for (slot, &v) in active.iter().enumerate() {
            point[v] = rat(values[slot]);
        }
        for nz in nonzeros {
            if nz.eval(&point).expect("full point").is_zero() {
                continue 'search;
            }
        }
        assignment = Some(point);
        break;
    }
    let Some(mut point) = assignment else {
        // cannot happen: the grid outgrows any union of hypersurfaces of
        // the given total degree
        return SolveOutcome::Undecided;
    };

    for elim in eliminations.iter().rev() {
        let den = elim.denominator.eval(&point).expect("full point");
        if den.is_zero() {
            // solutions with this denominator zero are covered by the
            // sibling branch; nothing to report here
            return SolveOutcome::NoRationalSolution;
        }
        let num = elim.numerator.eval(&point).expect("full point");
        point[elim.var] = num / den;
    }
    SolveOutcome::Solution(point)
}

/// `A^deg(f) * f(x := num/den)` as a polynomial.
fn substitute_cleared(f: &MultiPoly, v: usize, num: &MultiPoly, den: &MultiPoly) -> MultiPoly {
    let coeffs = f.coefficients_in(v);
    let d = coeffs.len() - 1;
    let vars = f.vars().to_vec();
    let mut out = MultiPoly::zero(vars);
    let mut num_pow = MultiPoly::constant(f.vars().to_vec(), Rational::one());
    // precompute den powers downward
    let mut den_pows = vec![MultiPoly::constant(f.vars().to_vec(), Rational::one())];
    for _ in 0..d {
        let next = den_pows.last().unwrap().mul(den);
        den_pows.push(next);
    }
    for (k, coeff) in coeffs.iter().enumerate() {
        if !coeff.is_zero() {
            out = out.add(&coeff.mul(&num_pow).mul(&den_pows[d - k]));
        }
        if k < d {
            num_pow = num_pow.mul(num);
        }
    }
    out
}

/// Rational roots of `a x^2 + b x + c` (`a != 0`): `None` when the
/// discriminant is not a rational square (no rational roots), otherwise the
/// root list.
fn quadratic_rational_roots(a: &Rational, b: &Rational, c: &Rational) -> Option<Vec<Rational>> {
    debug_assert!(!a.is_zero());
    let disc = b * b - Rational::from_integer(4.into()) * a * c;
    if disc.is_negative() {
        return None;
    }
    let sqrt = rational_sqrt(&disc)?;
    let two_a = Rational::from_integer(2.into()) * a;
    let r1 = ((-b) + &sqrt) / &two_a;
    let r2 = ((-b) - &sqrt) / &two_a;
    if r1 == r2 {
        Some(vec![r1])
    } else {
        Some(vec![r1, r2])
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_zero() {
        return Some(Rational::zero());
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// Expanding integer grid around the origin: all points of max-norm 0, then
/// 1, and so on up to the radius.
struct GridIter {
    dims: usize,
    radius: i64,
    shell: i64,
    state: Option<Vec<i64>>,
}

impl GridIter {
    fn new(dims: usize, radius: i64) -> Self {
        GridIter { dims, radius, shell: 0, state: None }
    }

    fn next_point(&mut self) -> Option<Vec<i64>> {
        if self.dims == 0 {
            if self.shell == 0 {
                self.shell = 1;
                return Some(Vec::new());
            }
            return None;
        }
        loop {
            match &mut self.state {
                None => {
                    if self.shell > self.radius {
                        return None;
                    }
                    self.state = Some(vec![-self.shell; self.dims]);
                    let candidate = self.state.clone().unwrap();
                    if candidate.iter().map(|x| x.abs()).max().unwrap_or(0) == self.shell {
                        return Some(candidate);
                    }
                }
                Some(state) => {
                    // odometer increment in [-shell, shell]
                    let mut pos = 0;
                    loop {
                        if pos == self.dims {
                            self.state = None;
                            self.shell += 1;
                            break;
                        }
                        if state[pos] < self.shell {
                            state[pos] += 1;
                            for q in state.iter_mut().take(pos) {
                                *q = -self.shell;
                            }
                            break;
                        }
                        pos += 1;
                    }
                    if let Some(state) = &self.state {
                        if state.iter().map(|x| x.abs()).max().unwrap_or(0) == self.shell {
                            return Some(state.clone());
                        }
                    }
                }
            }
        }
    }
}
