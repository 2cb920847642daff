//! Right-weak-order intervals [u, v]_R: enumeration with cover relations,
//! the interval descent set, and the reflection-set identities that hold on
//! intervals.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::complex::FinitePoset;
use crate::coxeter::{CoxeterError, GenSet, GroupElement, RootVec};

/// Default ceiling on interval size, guarding runaway enumerations in
/// infinite groups.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

#[derive(Debug, Error)]
pub enum IntervalError {
    #[error("u is not below v in the right weak order")]
    NotComparable,
    #[error("interval enumeration exceeded cap {0}")]
    CapExceeded(usize),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// An interval [u, v]_R with its elements and cover relations w ⋖_R ws.
#[derive(Clone)]
pub struct WeakInterval {
    u: GroupElement,
    v: GroupElement,
    elements: Vec<GroupElement>,
    covers: Vec<(usize, usize, usize)>,
}

impl WeakInterval {
    pub fn u(&self) -> &GroupElement {
        &self.u
    }

    pub fn v(&self) -> &GroupElement {
        &self.v
    }

    /// Elements sorted by (length, canonical word); u is first, v last.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Cover triples (i, j, s) meaning elements[i] ⋖_R elements[i]·s = elements[j].
    pub fn covers(&self) -> &[(usize, usize, usize)] {
        &self.covers
    }

    pub fn position(&self, w: &GroupElement) -> Option<usize> {
        self.elements.binary_search_by(|e| e.cmp(w)).ok()
    }

    /// The weak order restricted to the interval, as a finite poset over
    /// element indices.
    pub fn poset(&self) -> FinitePoset {
        FinitePoset::from_covers(
            self.elements.len(),
            self.covers.iter().map(|&(i, j, _)| (i, j)).collect(),
        )
        .expect("weak-order covers form a graded acyclic relation")
    }
}

/// Enumerates [u, v]_R with the default element cap.
pub fn enumerate_interval(
    u: &GroupElement,
    v: &GroupElement,
) -> Result<WeakInterval, IntervalError> {
    enumerate_interval_capped(u, v, DEFAULT_ELEMENT_CAP)
}

/// Breadth-first search upward from u: extend w to ws for every non-descent
/// s with ws ≤_R v. Errors with `NotComparable` unless u ≤_R v.
pub fn enumerate_interval_capped(
    u: &GroupElement,
    v: &GroupElement,
    cap: usize,
) -> Result<WeakInterval, IntervalError> {
    if !u.weak_leq(v)? {
        return Err(IntervalError::NotComparable);
    }
    let rank = u.system().rank();
    let roots_v = v.left_inversion_roots();
    let below_v = |w: &GroupElement| w.left_inversion_roots().is_subset(&roots_v);

    let mut seen: HashMap<Vec<usize>, GroupElement> = HashMap::new();
    let mut cover_words: Vec<(Vec<usize>, Vec<usize>, usize)> = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(u.word().to_vec(), u.clone());
    queue.push_back(u.clone());
    while let Some(w) = queue.pop_front() {
        for s in 0..rank {
            if w.has_right_descent(s) {
                continue;
            }
            let next = w.mul_gen(s)?;
            if !below_v(&next) {
                continue;
            }
            cover_words.push((w.word().to_vec(), next.word().to_vec(), s));
            if !seen.contains_key(next.word()) {
                if seen.len() >= cap {
                    return Err(IntervalError::CapExceeded(cap));
                }
                seen.insert(next.word().to_vec(), next.clone());
                queue.push_back(next);
            }
        }
    }

    let mut elements: Vec<GroupElement> = seen.into_values().collect();
    elements.sort();
    let index: HashMap<&[usize], usize> = elements
        .iter()
        .enumerate()
        .map(|(i, w)| (w.word(), i))
        .collect();
    let mut covers: Vec<(usize, usize, usize)> = cover_words
        .iter()
        .map(|(a, b, s)| (index[a.as_slice()], index[b.as_slice()], *s))
        .collect();
    covers.sort();
    covers.dedup();
    Ok(WeakInterval {
        u: u.clone(),
        v: v.clone(),
        elements,
        covers,
    })
}

/// D_R(u, v) = {s ∈ D_R(v) : u ≤_R vs}; always equals D_R(u⁻¹v), which is
/// asserted before returning.
pub fn interval_descent_set(
    u: &GroupElement,
    v: &GroupElement,
) -> Result<GenSet, IntervalError> {
    if !u.weak_leq(v)? {
        return Err(IntervalError::NotComparable);
    }
    let mut set = GenSet::empty();
    for s in v.right_descents().iter() {
        if u.weak_leq(&v.mul_gen(s)?)? {
            set.insert(s);
        }
    }
    let w = u.inverse().multiply(v)?;
    assert_eq!(
        set,
        w.right_descents(),
        "interval descent set must match the right descents of u^-1 v"
    );
    Ok(set)
}

/// Outcome of checking the descending-reflection identity
/// T_L(v) = T_L(u) ∪ ⋃_{s ∈ D_R(u⁻¹v)} T_L(v^{S∖{s}}) on one pair.
#[derive(Debug, Clone)]
pub struct ReflectionFormula {
    pub holds: bool,
    /// A root present on exactly one side, when the identity fails.
    pub counterexample: Option<RootVec>,
}

pub fn check_reflection_formula(
    u: &GroupElement,
    v: &GroupElement,
) -> Result<ReflectionFormula, IntervalError> {
    if !u.weak_leq(v)? {
        return Err(IntervalError::NotComparable);
    }
    let lhs = v.left_inversion_roots();
    let mut rhs: BTreeSet<RootVec> = u.left_inversion_roots();
    let w = u.inverse().multiply(v)?;
    for s in w.right_descents().iter() {
        rhs.extend(v.project_drop(s).left_inversion_roots());
    }
    if lhs == rhs {
        Ok(ReflectionFormula {
            holds: true,
            counterexample: None,
        })
    } else {
        let counterexample = lhs
            .symmetric_difference(&rhs)
            .next()
            .cloned();
        Ok(ReflectionFormula {
            holds: false,
            counterexample,
        })
    }
}

/// Checks, for one pair (u, v), that |P(u) ∩ P(v)| = |S| - 1 holds exactly
/// when one of u, v covers the other in the right weak order, where
/// P(w) = {(P^{(s)}(w), s) : s ∈ S}.
pub fn check_cover_criterion(
    u: &GroupElement,
    v: &GroupElement,
) -> Result<bool, IntervalError> {
    let rank = u.system().rank();
    let shared = (0..rank)
        .filter(|&s| u.project_drop(s) == v.project_drop(s))
        .count();
    let w = u.inverse().multiply(v)?;
    let is_weak_cover = w.len() == 1;
    Ok((shared == rank - 1) == is_weak_cover)
}
