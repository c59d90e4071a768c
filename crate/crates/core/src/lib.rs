//! Exact computer algebra for finite-dimensional nilpotent Lie superalgebras
//! over the rationals.
//!
//! The library decides whether the enveloping algebra `U(g)` of a nilpotent
//! Lie superalgebra `g` has the diamond property (every finitely generated
//! essential extension of a simple module is Artinian), by computing the
//! index of the even part and, in the almost-maximal-index case, producing a
//! verified structural witness: an abelian ideal of codimension 1, or an
//! explicit change of basis onto `h5 x abelian` or `h6 x abelian`.
//!
//! Main pieces:
//!
//! - [`exactmath`]: arbitrary-precision rationals, sparse multivariate
//!   polynomials, exact kernels and fraction-free rank computation.
//! - [`liealg`]: Lie superalgebras by structure constants, validation,
//!   central series, direct products, adapted bases, a catalog of standard
//!   algebras, and the text file format.
//! - [`indexcalc`]: the skew matrix of brackets, stabilizers, the index,
//!   and the diamond decision.
//! - [`classify`]: the constructive classification of algebras with almost
//!   maximal index, with independently checkable witnesses.
//! - [`mod@env`]: PBW normal forms in `U(g)`, supercommutators, adjoint
//!   derivations, supercentral element extraction and supercentralizing
//!   chains (degree truncated).
//! - [`factors`]: Weyl algebras with Stafford's element, Clifford algebras,
//!   and the primitive-quotient map from Heisenberg enveloping algebras.
//!
//! All scalar arithmetic is exact over the rationals; there is no floating
//! point anywhere. All randomized searches take explicit seeds and are
//! reproducible.

pub mod classify;
pub mod env;
pub mod exactmath;
pub mod expr;
pub mod factors;
pub mod indexcalc;
pub mod liealg;

pub use exactmath::Rational;
