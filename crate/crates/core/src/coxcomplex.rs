//! The Coxeter complex of a right-weak-order interval.
//!
//! For an interval [u, v]_R in a system of rank k, each element w yields the
//! facet P(w) = {(P^{(s)}(w), s) : s ∈ S}, a set of k vertices. Ordering the
//! support of each generator by a linear extension of the Bruhat order and
//! concatenating the supports assigns the vertices consecutive integer
//! labels, turning every facet into a strictly increasing k-tuple. The
//! componentwise order on those tuples refines both the Bruhat and the weak
//! order of the interval, and every linear extension of it lists the facets
//! in a shelling order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::complex::{
    gale_leq, is_shelling, Facet, FacetSequence, FinitePoset, IntPolynomial, PureComplex,
};
use crate::coxeter::{CoxeterError, GroupElement};
use crate::interval::{enumerate_interval, IntervalError, WeakInterval};

#[derive(Debug, Error)]
pub enum CoxComplexError {
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("support order is not a linear extension of the Bruhat order: {0}")]
    NotLinearExtension(String),
    #[error("invalid generator order: {0}")]
    BadGenOrder(String),
    #[error("extension is not a linear extension of the weak order: {0}")]
    NotWeakExtension(String),
}

/// Vertex of a Coxeter complex: a minimal coset representative paired with
/// the generator it drops.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoxVertex {
    pub gen: usize,
    pub quotient: GroupElement,
}

impl fmt::Display for CoxVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            self.quotient,
            self.quotient.system().gen_name(self.gen)
        )
    }
}

impl fmt::Debug for CoxVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The facet P(w): one vertex (P^{(s)}(w), s) per generator s.
pub fn facet_of(w: &GroupElement) -> Vec<CoxVertex> {
    (0..w.system().rank())
        .map(|s| CoxVertex {
            gen: s,
            quotient: w.project_drop(s),
        })
        .collect()
}

/// Per-generator supports supp_s[u,v]_R = {P^{(s)}(y) : y ∈ [u,v]_R}.
pub fn supports(interval: &WeakInterval) -> Vec<BTreeSet<GroupElement>> {
    let rank = interval.u().system().rank();
    let mut out = vec![BTreeSet::new(); rank];
    for w in interval.elements() {
        for (s, slot) in out.iter_mut().enumerate() {
            slot.insert(w.project_drop(s));
        }
    }
    out
}

/// Linear extensions of the Bruhat order on each support, one list per
/// generator in generator-index order.
#[derive(Clone, Debug)]
pub struct SupportOrder {
    pub per_gen: Vec<Vec<GroupElement>>,
}

impl SupportOrder {
    /// Default order: each support sorted by (length, canonical word). The
    /// Bruhat order is graded by length, so this is a linear extension.
    pub fn default_for(interval: &WeakInterval) -> Self {
        let per_gen = supports(interval)
            .into_iter()
            .map(|set| set.into_iter().collect())
            .collect();
        SupportOrder { per_gen }
    }
}

/// Classification of a complex by ridge incidence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ThinClass {
    /// Every (k-2)-dimensional face lies in exactly two facets.
    Thin,
    /// Not thin, and every such face lies in at most two facets.
    Subthin,
}

#[derive(Clone, Debug)]
pub struct ThinReport {
    pub class: ThinClass,
    /// Facet count per ridge, keyed by the ridge tuple.
    pub ridge_counts: BTreeMap<Vec<u32>, usize>,
}

/// The Coxeter complex C(u, v) with its vertex labeling.
pub struct CoxComplex {
    interval: WeakInterval,
    gen_order: Vec<usize>,
    support_order: SupportOrder,
    vertex_labels: Vec<CoxVertex>,
    facets: Vec<Vec<CoxVertex>>,
    tuples: Vec<Facet>,
}

impl CoxComplex {
    /// Builds C(u, v) with the default support orders and generator order.
    pub fn build(u: &GroupElement, v: &GroupElement) -> Result<Self, CoxComplexError> {
        let interval = enumerate_interval(u, v)?;
        let orders = SupportOrder::default_for(&interval);
        let rank = u.system().rank();
        Self::build_with(interval, orders, (0..rank).collect())
    }

    /// Builds the complex from an interval, explicit support orders and an
    /// explicit total order on the generators. Each support order must be a
    /// linear extension of the Bruhat order on that support.
    pub fn build_with(
        interval: WeakInterval,
        support_order: SupportOrder,
        gen_order: Vec<usize>,
    ) -> Result<Self, CoxComplexError> {
        let rank = interval.u().system().rank();
        {
            let mut seen = vec![false; rank];
            if gen_order.len() != rank
                || !gen_order
                    .iter()
                    .all(|&s| s < rank && !std::mem::replace(&mut seen[s], true))
            {
                return Err(CoxComplexError::BadGenOrder(format!(
                    "{gen_order:?} is not a permutation of the generator indices"
                )));
            }
        }
        if support_order.per_gen.len() != rank {
            return Err(CoxComplexError::NotLinearExtension(format!(
                "expected {rank} support lists, got {}",
                support_order.per_gen.len()
            )));
        }
        let computed = supports(&interval);
        for (s, list) in support_order.per_gen.iter().enumerate() {
            let as_set: BTreeSet<GroupElement> = list.iter().cloned().collect();
            if as_set.len() != list.len() || as_set != computed[s] {
                return Err(CoxComplexError::NotLinearExtension(format!(
                    "list for generator {s} is not a permutation of the support"
                )));
            }
            for i in 0..list.len() {
                for j in i + 1..list.len() {
                    if list[j] != list[i] && list[j].bruhat_leq(&list[i])? {
                        return Err(CoxComplexError::NotLinearExtension(format!(
                            "generator {s}: {} precedes the Bruhat-smaller {}",
                            list[i], list[j]
                        )));
                    }
                }
            }
        }

        // Concatenate supports in generator order; labels are 1-based.
        let mut vertex_labels = Vec::new();
        let mut label_of: BTreeMap<CoxVertex, u32> = BTreeMap::new();
        for &s in &gen_order {
            for q in &support_order.per_gen[s] {
                let vertex = CoxVertex {
                    gen: s,
                    quotient: q.clone(),
                };
                vertex_labels.push(vertex.clone());
                label_of.insert(vertex, vertex_labels.len() as u32);
            }
        }

        let facets: Vec<Vec<CoxVertex>> =
            interval.elements().iter().map(facet_of).collect();
        let tuples: Vec<Facet> = facets
            .iter()
            .map(|facet| {
                let mut labels: Vec<u32> =
                    facet.iter().map(|vertex| label_of[vertex]).collect();
                labels.sort_unstable();
                Facet::new(labels).expect("labels are distinct")
            })
            .collect();
        // Distinct interval elements have distinct facets, hence distinct
        // label tuples.
        let distinct: BTreeSet<&Facet> = tuples.iter().collect();
        assert_eq!(
            distinct.len(),
            tuples.len(),
            "the facet map must be injective on the interval"
        );
        Ok(CoxComplex {
            interval,
            gen_order,
            support_order,
            vertex_labels,
            facets,
            tuples,
        })
    }

    pub fn interval(&self) -> &WeakInterval {
        &self.interval
    }

    pub fn gen_order(&self) -> &[usize] {
        &self.gen_order
    }

    pub fn support_order(&self) -> &SupportOrder {
        &self.support_order
    }

    /// Vertices in label order; the vertex with label ℓ sits at index ℓ-1.
    pub fn vertex_labels(&self) -> &[CoxVertex] {
        &self.vertex_labels
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    /// Facets P(w), parallel to `interval().elements()`.
    pub fn facets(&self) -> &[Vec<CoxVertex>] {
        &self.facets
    }

    /// Label tuples, parallel to `interval().elements()`.
    pub fn tuples(&self) -> &[Facet] {
        &self.tuples
    }

    /// The label tuple of one interval element.
    pub fn tuple_of(&self, w: &GroupElement) -> Option<&Facet> {
        self.interval.position(w).map(|i| &self.tuples[i])
    }

    /// The underlying pure complex on the label set.
    pub fn pure_complex(&self) -> PureComplex {
        PureComplex::from_facets(self.tuples.iter().cloned()).expect("interval is nonempty")
    }

    /// The refined order: x ≼ y iff the label tuples compare componentwise.
    pub fn preceq_poset(&self) -> FinitePoset {
        FinitePoset::from_strict_order(self.tuples.len(), |i, j| {
            self.tuples[i] != self.tuples[j]
                && gale_leq(&self.tuples[i], &self.tuples[j]).unwrap()
        })
    }

    /// The right weak order on the interval.
    pub fn weak_poset(&self) -> FinitePoset {
        self.interval.poset()
    }

    /// The Bruhat order restricted to the interval.
    pub fn bruhat_poset(&self) -> FinitePoset {
        let elements = self.interval.elements();
        FinitePoset::from_strict_order(elements.len(), |i, j| {
            elements[i] != elements[j] && elements[i].bruhat_leq(&elements[j]).unwrap()
        })
    }

    /// Verifies x ≤_R y ⇒ x ≤ y ⇒ x ≼ y over all interval pairs.
    pub fn check_order_embeddings(&self) -> bool {
        let elements = self.interval.elements();
        let n = elements.len();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let weak = elements[i].weak_leq(&elements[j]).unwrap();
                let bruhat = elements[i].bruhat_leq(&elements[j]).unwrap();
                let refined = gale_leq(&self.tuples[i], &self.tuples[j]).unwrap();
                if (weak && !bruhat) || (bruhat && !refined) {
                    return false;
                }
            }
        }
        true
    }

    /// Lists the facets along a linear extension of the weak order (given as
    /// element indices, bottom to top) and asserts the result is a shelling
    /// order before returning it.
    pub fn shelling_from_weak_extension(
        &self,
        ext: &[usize],
    ) -> Result<FacetSequence, CoxComplexError> {
        if !self.weak_poset().is_linear_extension(ext) {
            return Err(CoxComplexError::NotWeakExtension(format!("{ext:?}")));
        }
        let seq = FacetSequence::new(ext.iter().map(|&i| self.tuples[i].clone()).collect())
            .expect("tuples are distinct");
        assert!(
            is_shelling(&seq),
            "a weak-order linear extension must shell the complex"
        );
        Ok(seq)
    }

    /// h-polynomial of the complex as Σ_z q^{|D_R(u⁻¹z)|} over the interval.
    pub fn h_by_descent(&self) -> IntPolynomial {
        h_over_interval(&self.interval)
    }

    /// Ridge-incidence classification; every ridge lies in at most two
    /// facets, which is asserted.
    pub fn classify_thin(&self) -> ThinReport {
        let k = self.interval.u().system().rank();
        let mut counts: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        for tuple in &self.tuples {
            for drop in 0..k {
                let ridge: Vec<u32> = tuple
                    .verts()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != drop)
                    .map(|(_, &v)| v)
                    .collect();
                *counts.entry(ridge).or_insert(0) += 1;
            }
        }
        for (ridge, &count) in &counts {
            assert!(
                count <= 2,
                "ridge {ridge:?} lies in {count} facets; at most two are possible"
            );
        }
        let class = if counts.values().all(|&c| c == 2) {
            ThinClass::Thin
        } else {
            ThinClass::Subthin
        };
        ThinReport {
            class,
            ridge_counts: counts,
        }
    }
}

fn h_over_interval(interval: &WeakInterval) -> IntPolynomial {
    let u_inv = interval.u().inverse();
    let mut counts: Vec<i64> = Vec::new();
    for z in interval.elements() {
        let d = u_inv
            .multiply(z)
            .expect("same system")
            .right_descents()
            .len();
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    IntPolynomial::from_i64s(&counts)
}

/// Σ_{z ∈ [u,v]_R} q^{|D_R(u⁻¹z)|}, the h-polynomial of C(u, v).
pub fn h_by_descent_formula(
    u: &GroupElement,
    v: &GroupElement,
) -> Result<IntPolynomial, CoxComplexError> {
    Ok(h_over_interval(&enumerate_interval(u, v)?))
}

/// Builds C(u, v) and classifies it as thin or subthin.
pub fn classify_thin(u: &GroupElement, v: &GroupElement) -> Result<ThinReport, CoxComplexError> {
    Ok(CoxComplex::build(u, v)?.classify_thin())
}
