//! Pure simplicial complexes on integer vertices.
//!
//! A complex is a set of facets, each a strictly increasing k-tuple over
//! [n]. The componentwise (Gale) order on facets, shelling and strong
//! shelling verification, the tail-swap rewriting of shelling orders,
//! linear-extension machinery, the search for a vertex labeling making the
//! lexicographic order a shelling order, and f/h-polynomials all live here.

mod polynomial;
mod poset;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

pub use polynomial::IntPolynomial;
pub use poset::{FinitePoset, PosetError};

/// Default bound on the vertex count for the labeling search of
/// [`decide_linear_shellability`]; n! labelings are tried.
pub const DEFAULT_LABELING_VERTEX_CAP: usize = 9;

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("malformed facet: {0}")]
    MalformedFacet(String),
    #[error("facets have different sizes")]
    SizeMismatch,
    #[error("complex has no facets")]
    EmptyComplex,
    #[error("duplicate facet {0}")]
    DuplicateFacet(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("labeling search needs at most {cap} vertices, got {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("labeling is not a bijection: {0}")]
    NotBijective(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Strictly increasing tuple of positive integers; a facet of a pure
/// complex, or any fixed-size face.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Facet(Vec<u32>);

impl Facet {
    pub fn new(verts: Vec<u32>) -> Result<Self, ComplexError> {
        if verts.is_empty() {
            return Err(ComplexError::MalformedFacet("empty facet".into()));
        }
        if verts[0] == 0 {
            return Err(ComplexError::MalformedFacet(format!(
                "{verts:?}: vertices must be positive"
            )));
        }
        if !verts.windows(2).all(|w| w[0] < w[1]) {
            return Err(ComplexError::MalformedFacet(format!(
                "{verts:?}: vertices must be strictly increasing"
            )));
        }
        Ok(Facet(verts))
    }

    /// Sorts the entries first; rejects repeats and zeros.
    pub fn from_unsorted(mut verts: Vec<u32>) -> Result<Self, ComplexError> {
        verts.sort_unstable();
        if verts.windows(2).any(|w| w[0] == w[1]) {
            return Err(ComplexError::MalformedFacet(format!(
                "{verts:?}: repeated vertex"
            )));
        }
        Facet::new(verts)
    }

    pub fn verts(&self) -> &[u32] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    fn intersection_size(&self, other: &Facet) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    fn first_not_in(&self, other: &Facet) -> Option<u32> {
        self.0.iter().copied().find(|&v| !other.contains(v))
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.last().is_some_and(|&v| v <= 9) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Componentwise comparison of two same-size facets (the Gale order).
pub fn gale_leq(x: &Facet, y: &Facet) -> Result<bool, ComplexError> {
    if x.k() != y.k() {
        return Err(ComplexError::SizeMismatch);
    }
    Ok(x.verts().iter().zip(y.verts()).all(|(a, b)| a <= b))
}

/// Reverse lexicographic order: decided by the largest index where the
/// tuples differ.
pub fn revlex_cmp(x: &Facet, y: &Facet) -> std::cmp::Ordering {
    x.verts().iter().rev().cmp(y.verts().iter().rev())
}

/// Pure simplicial complex: facets of one common size k over [n], where n
/// is the largest vertex mentioned.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PureComplex {
    n: u32,
    k: usize,
    facets: BTreeSet<Facet>,
}

impl PureComplex {
    pub fn from_facets<I: IntoIterator<Item = Facet>>(facets: I) -> Result<Self, ComplexError> {
        let facets: BTreeSet<Facet> = facets.into_iter().collect();
        let k = facets.iter().next().ok_or(ComplexError::EmptyComplex)?.k();
        if facets.iter().any(|f| f.k() != k) {
            return Err(ComplexError::SizeMismatch);
        }
        let n = facets
            .iter()
            .map(|f| *f.verts().last().unwrap())
            .max()
            .unwrap();
        Ok(PureComplex { n, k, facets })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Dimension k - 1.
    pub fn dim(&self) -> usize {
        self.k - 1
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> impl Iterator<Item = &Facet> {
        self.facets.iter()
    }

    pub fn facet_vec(&self) -> Vec<Facet> {
        self.facets.iter().cloned().collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<u32> {
        self.facets
            .iter()
            .flat_map(|f| f.verts().iter().copied())
            .collect()
    }

    /// The facets in lexicographic order, as a sequence.
    pub fn lex_sequence(&self) -> FacetSequence {
        FacetSequence {
            seq: self.facet_vec(),
        }
    }

    /// The facets in reverse lexicographic order.
    pub fn revlex_sequence(&self) -> FacetSequence {
        let mut seq = self.facet_vec();
        seq.sort_by(revlex_cmp);
        FacetSequence { seq }
    }

    /// Induced subposet of the Gale order on the facet set, over the indices
    /// of the lexicographically sorted facet list.
    pub fn bruhat_poset(&self) -> FinitePoset {
        let facets = self.facet_vec();
        FinitePoset::from_strict_order(facets.len(), |i, j| {
            facets[i] != facets[j] && gale_leq(&facets[i], &facets[j]).unwrap()
        })
    }

    /// Face-count polynomial: the coefficient of q^d is the number of faces
    /// with d vertices; the constant term 1 counts the empty face.
    pub fn f_polynomial(&self) -> IntPolynomial {
        let mut faces: BTreeSet<Vec<u32>> = BTreeSet::new();
        for facet in &self.facets {
            for mask in 0u32..(1 << self.k) {
                let sub: Vec<u32> = facet
                    .verts()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                faces.insert(sub);
            }
        }
        let mut counts = vec![0i64; self.k + 1];
        for face in faces {
            counts[face.len()] += 1;
        }
        IntPolynomial::from_i64s(&counts)
    }

    /// h-polynomial via the standard transform
    /// h(q) = Σ_i f_{i-1} q^i (1-q)^{k-i}.
    pub fn h_polynomial(&self) -> IntPolynomial {
        let f = self.f_polynomial();
        let one_minus_q = IntPolynomial::from_i64s(&[1, -1]);
        let mut powers = vec![IntPolynomial::one()];
        for i in 1..=self.k {
            powers.push(&powers[i - 1] * &one_minus_q);
        }
        let q = IntPolynomial::from_i64s(&[0, 1]);
        let mut q_pow = IntPolynomial::one();
        let mut h = IntPolynomial::zero();
        for i in 0..=self.k {
            let term = &IntPolynomial::from_coeffs(vec![f.coeff(i)]) * &q_pow;
            h = &h + &(&term * &powers[self.k - i]);
            q_pow = &q_pow * &q;
        }
        h
    }

    /// Applies a vertex bijection σ: [n] → [n] (`labeling[v-1]` is the new
    /// name of vertex v) and re-sorts every facet.
    pub fn relabel(&self, labeling: &[u32]) -> Result<PureComplex, ComplexError> {
        let n = self.n as usize;
        if labeling.len() != n {
            return Err(ComplexError::NotBijective(format!(
                "expected {n} entries, got {}",
                labeling.len()
            )));
        }
        let mut seen = vec![false; n + 1];
        for &l in labeling {
            if l == 0 || l as usize > n || std::mem::replace(&mut seen[l as usize], true) {
                return Err(ComplexError::NotBijective(format!(
                    "{labeling:?} is not a permutation of 1..={n}"
                )));
            }
        }
        let facets: Result<Vec<Facet>, _> = self
            .facets
            .iter()
            .map(|f| {
                Facet::from_unsorted(f.verts().iter().map(|&v| labeling[v as usize - 1]).collect())
            })
            .collect();
        PureComplex::from_facets(facets?)
    }
}

/// Ordered list of distinct same-size facets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FacetSequence {
    seq: Vec<Facet>,
}

impl FacetSequence {
    pub fn new(seq: Vec<Facet>) -> Result<Self, ComplexError> {
        if seq.is_empty() {
            return Err(ComplexError::EmptyComplex);
        }
        let k = seq[0].k();
        if seq.iter().any(|f| f.k() != k) {
            return Err(ComplexError::SizeMismatch);
        }
        let mut sorted = seq.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateFacet(w[0].to_string()));
        }
        Ok(FacetSequence { seq })
    }

    pub fn seq(&self) -> &[Facet] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn k(&self) -> usize {
        self.seq[0].k()
    }

    pub fn complex(&self) -> PureComplex {
        PureComplex::from_facets(self.seq.iter().cloned()).expect("sequence is nonempty")
    }
}

/// Which shelling condition to verify.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShellMode {
    Shelling,
    Strong,
}

/// First pair (i, j), i < j, violating the (strong) shelling condition, or
/// `None` when the sequence is a (strong) shelling order.
///
/// The condition for (i, j): some r < j has C_r = C_j + {a, b} (symmetric
/// difference) with a ∈ C_j ∖ C_i and b ∈ C_r ∖ C_j; the strong variant
/// additionally requires b ∈ C_i.
pub fn shelling_violation(c: &FacetSequence, mode: ShellMode) -> Option<(usize, usize)> {
    let seq = &c.seq;
    let k = c.k();
    for j in 1..seq.len() {
        // Ridge neighbors of C_j among the earlier facets, with the
        // exchanged-out vertex a ∈ C_j ∖ C_r and exchanged-in b ∈ C_r ∖ C_j.
        let neighbors: Vec<(u32, u32)> = (0..j)
            .filter(|&r| seq[r].intersection_size(&seq[j]) == k - 1)
            .map(|r| {
                let a = seq[j].first_not_in(&seq[r]).unwrap();
                let b = seq[r].first_not_in(&seq[j]).unwrap();
                (a, b)
            })
            .collect();
        for (i, earlier) in seq.iter().enumerate().take(j) {
            let ok = neighbors.iter().any(|&(a, b)| {
                !earlier.contains(a)
                    && match mode {
                        ShellMode::Shelling => true,
                        ShellMode::Strong => earlier.contains(b),
                    }
            });
            if !ok {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_shelling(c: &FacetSequence) -> bool {
    shelling_violation(c, ShellMode::Shelling).is_none()
}

pub fn is_strong_shelling(c: &FacetSequence) -> bool {
    shelling_violation(c, ShellMode::Strong).is_none()
}

/// Swaps the last two facets of a (strong) shelling order. Requires at
/// least three facets and |C_{h-1} ∩ C_h| < k - 1; the result is again a
/// (strong) shelling order, which is asserted.
pub fn tail_swap(c: &FacetSequence, mode: ShellMode) -> Result<FacetSequence, ComplexError> {
    let h = c.len();
    if h < 3 {
        return Err(ComplexError::PreconditionFailed(format!(
            "tail swap needs at least 3 facets, got {h}"
        )));
    }
    if shelling_violation(c, mode).is_some() {
        return Err(ComplexError::PreconditionFailed(
            "input sequence is not a shelling order of the requested kind".into(),
        ));
    }
    let overlap = c.seq[h - 2].intersection_size(&c.seq[h - 1]);
    if overlap >= c.k() - 1 {
        return Err(ComplexError::PreconditionFailed(format!(
            "last two facets share {overlap} vertices; need fewer than {}",
            c.k() - 1
        )));
    }
    let mut seq = c.seq.clone();
    seq.swap(h - 2, h - 1);
    let swapped = FacetSequence { seq };
    assert!(
        shelling_violation(&swapped, mode).is_none(),
        "tail swap must preserve the shelling property"
    );
    Ok(swapped)
}

/// Whether the linear extensions of the Gale order on the facets are
/// shelling orders. With `exhaustive` false only the lexicographic order is
/// tested (the verdicts agree); with it true every extension under `cap` is
/// tested and the agreement is asserted.
pub fn all_extensions_shelling(
    x: &PureComplex,
    mode: ShellMode,
    exhaustive: bool,
    cap: usize,
) -> Result<bool, ComplexError> {
    let lex_ok = shelling_violation(&x.lex_sequence(), mode).is_none();
    if !exhaustive {
        return Ok(lex_ok);
    }
    let facets = x.facet_vec();
    let poset = x.bruhat_poset();
    for ext in poset.linear_extensions(cap)? {
        let seq = FacetSequence {
            seq: ext.iter().map(|&i| facets[i].clone()).collect(),
        };
        let ok = shelling_violation(&seq, mode).is_none();
        assert_eq!(
            ok, lex_ok,
            "every linear extension must agree with the lexicographic verdict"
        );
    }
    Ok(lex_ok)
}

/// Searches all vertex labelings for one under which the lexicographic
/// order on the relabeled facets is a (strong) shelling order. Returns the
/// first witness (as a map from original vertex names to new labels) in
/// lexicographic permutation order, or `None` when no labeling works.
///
/// Vertices are compacted first, so the search space is v! for v distinct
/// vertices; v must not exceed `vertex_cap`.
pub fn decide_linear_shellability(
    x: &PureComplex,
    mode: ShellMode,
    vertex_cap: usize,
) -> Result<Option<BTreeMap<u32, u32>>, ComplexError> {
    let vertices: Vec<u32> = x.vertex_set().into_iter().collect();
    let v = vertices.len();
    if v > vertex_cap || v > 20 {
        return Err(ComplexError::TooLarge {
            n: v,
            cap: vertex_cap.min(20),
        });
    }
    let compact: BTreeMap<u32, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, &vert)| (vert, i))
        .collect();
    let base: Vec<Vec<usize>> = x
        .facets()
        .map(|f| f.verts().iter().map(|vert| compact[vert]).collect())
        .collect();

    let total: u64 = (1..=v as u64).product();
    let mut relabeled: Vec<Vec<u32>> = vec![vec![0; x.k()]; base.len()];
    for idx in 0..total {
        let perm = unrank_permutation(idx, v);
        for (out, facet) in relabeled.iter_mut().zip(&base) {
            for (slot, &vert) in out.iter_mut().zip(facet) {
                *slot = perm[vert] as u32 + 1;
            }
            slot_sort(out);
        }
        relabeled.sort_unstable();
        let seq = FacetSequence {
            seq: relabeled
                .iter()
                .map(|f| Facet(f.clone()))
                .collect(),
        };
        if shelling_violation(&seq, mode).is_none() {
            let map = vertices
                .iter()
                .map(|&vert| (vert, perm[compact[&vert]] as u32 + 1))
                .collect();
            return Ok(Some(map));
        }
    }
    Ok(None)
}

/// Permutation of {0, ..., n-1} with lexicographic rank `idx`.
fn unrank_permutation(mut idx: u64, n: usize) -> Vec<usize> {
    let mut factorials = vec![1u64; n];
    for i in 1..n {
        factorials[i] = factorials[i - 1] * i as u64;
    }
    let mut available: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let digit = (idx / factorials[i]) as usize;
        idx %= factorials[i];
        out.push(available.remove(digit));
    }
    out
}

fn slot_sort(v: &mut [u32]) {
    v.sort_unstable();
}

/// Depth-first search for any (strong) shelling order, with memoization of
/// dead facet sets. Complete for complexes with at most 64 facets; the
/// first order in lexicographic candidate order is returned.
pub fn find_shelling_order(x: &PureComplex, mode: ShellMode) -> Option<FacetSequence> {
    let facets = x.facet_vec();
    let h = facets.len();
    assert!(h <= 64, "shelling-order search supports at most 64 facets");
    let k = x.k();
    // exchange[r][j] = Some((a, b)) when |C_r ∩ C_j| = k-1, a ∈ C_j ∖ C_r,
    // b ∈ C_r ∖ C_j.
    let mut exchange = vec![vec![None; h]; h];
    for r in 0..h {
        for j in 0..h {
            if r != j && facets[r].intersection_size(&facets[j]) == k - 1 {
                let a = facets[j].first_not_in(&facets[r]).unwrap();
                let b = facets[r].first_not_in(&facets[j]).unwrap();
                exchange[r][j] = Some((a, b));
            }
        }
    }
    let can_append = |mask: u64, j: usize| -> bool {
        if mask == 0 {
            return true;
        }
        (0..h).filter(|&i| mask & (1 << i) != 0).all(|i| {
            (0..h)
                .filter(|&r| mask & (1 << r) != 0)
                .filter_map(|r| exchange[r][j])
                .any(|(a, b)| {
                    !facets[i].contains(a)
                        && match mode {
                            ShellMode::Shelling => true,
                            ShellMode::Strong => facets[i].contains(b),
                        }
                })
        })
    };
    let mut dead: HashSet<u64> = HashSet::new();
    let mut order: Vec<usize> = Vec::with_capacity(h);

    fn dfs(
        mask: u64,
        order: &mut Vec<usize>,
        h: usize,
        can_append: &impl Fn(u64, usize) -> bool,
        dead: &mut HashSet<u64>,
    ) -> bool {
        if order.len() == h {
            return true;
        }
        if dead.contains(&mask) {
            return false;
        }
        for j in 0..h {
            if mask & (1 << j) != 0 || !can_append(mask, j) {
                continue;
            }
            order.push(j);
            if dfs(mask | (1 << j), order, h, can_append, dead) {
                return true;
            }
            order.pop();
        }
        dead.insert(mask);
        false
    }

    if dfs(0, &mut order, h, &can_append, &mut dead) {
        Some(FacetSequence {
            seq: order.into_iter().map(|j| facets[j].clone()).collect(),
        })
    } else {
        None
    }
}

/// Parses the facet file format: one facet per line as space-separated
/// increasing positive integers, `#` starting a comment, blank lines
/// ignored. Facets are returned in file order.
pub fn parse_facet_lines(text: &str) -> Result<Vec<Facet>, ComplexError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let verts: Result<Vec<u32>, _> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| ComplexError::Parse {
                    line: idx + 1,
                    msg: format!("invalid vertex {tok:?}"),
                })
            })
            .collect();
        let facet = Facet::new(verts?).map_err(|e| ComplexError::Parse {
            line: idx + 1,
            msg: e.to_string(),
        })?;
        out.push(facet);
    }
    Ok(out)
}

/// All k-subsets of [n] as facets, in lexicographic order.
pub fn all_k_subsets(n: u32, k: usize) -> Vec<Facet> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: u32, n: u32, k: usize, current: &mut Vec<u32>, out: &mut Vec<Facet>) {
        if current.len() == k {
            out.push(Facet(current.clone()));
            return;
        }
        for v in start..=n {
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(1, n, k, &mut current, &mut out);
    out
}

/// Uniform random pure complex: between 1 and `max_facets` distinct facets
/// drawn from [n]^k without replacement.
pub fn random_pure_complex<R: Rng>(rng: &mut R, n: u32, k: usize, max_facets: usize) -> PureComplex {
    let mut all = all_k_subsets(n, k);
    let count = rng.gen_range(1..=max_facets.min(all.len()));
    all.shuffle(rng);
    PureComplex::from_facets(all.into_iter().take(count)).expect("nonempty uniform sample")
}
