//! Computations in Coxeter systems of finite rank and shellability checks
//! for pure simplicial complexes.
//!
//! The crate covers four layers:
//!
//! * [`exactnum`] — exact arithmetic in Q(√2, √3, √5), enough for the
//!   geometric representation of any Coxeter matrix with entries in
//!   {1, ..., 6, ∞};
//! * [`coxeter`] — Coxeter systems, group elements with exact action
//!   matrices and canonical reduced words, descents, inversion sets, weak
//!   and Bruhat order, parabolic projections;
//! * [`interval`] — enumeration of right-weak-order intervals and the
//!   reflection-set identities that hold on them;
//! * [`complex`] and [`coxcomplex`] — pure simplicial complexes over
//!   integer vertices with (strong) shelling verification, linear
//!   shellability decision, f/h-polynomials, and the Coxeter complex of a
//!   weak interval with its vertex labeling into increasing integer tuples.

pub mod complex;
pub mod coxcomplex;
pub mod coxeter;
pub mod exactnum;
pub mod interval;

pub use complex::{
    all_extensions_shelling, decide_linear_shellability, find_shelling_order, gale_leq,
    is_shelling, is_strong_shelling, shelling_violation, tail_swap, Facet, FacetSequence,
    FinitePoset, IntPolynomial, PureComplex, ShellMode,
};
pub use coxcomplex::{classify_thin, facet_of, h_by_descent_formula, CoxComplex, CoxVertex, ThinClass};
pub use coxeter::{CoxeterError, CoxeterSystem, GenSet, GroupElement, RootSign, RootVec};
pub use exactnum::{bilinear_entry, AlgebraicNumber, Rational, INFINITE_BOND};
pub use interval::{
    check_cover_criterion, check_reflection_formula, enumerate_interval, interval_descent_set,
    WeakInterval,
};
