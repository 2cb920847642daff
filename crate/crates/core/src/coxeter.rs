//! Coxeter systems of finite rank through the standard geometric
//! representation.
//!
//! A system is built from its Coxeter matrix alone. Every group element
//! carries its exact action matrix on the simple-root basis together with a
//! canonical reduced word, so lengths, descents, inversion sets, weak- and
//! Bruhat-order comparisons and parabolic projections are all computed
//! exactly, with no dependence on the group being finite.
//!
//! The canonical word of an element is obtained by repeatedly stripping the
//! smallest-index right descent read off the action matrix (a column whose
//! root is negative) and reversing the collected letters. Scalar inverses are
//! never needed: the inverse of an element is rebuilt from its reversed word.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exactnum::{bilinear_entry, AlgebraicNumber, ExactNumError, INFINITE_BOND};

#[derive(Debug, Error)]
pub enum CoxeterError {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error(transparent)]
    UnsupportedOrder(#[from] ExactNumError),
    #[error("elements belong to different Coxeter systems")]
    SystemMismatch,
    #[error("word reconstruction exceeded {0} letters; not a group-element action")]
    NonTerminating(usize),
    #[error("operation requires a type A system")]
    NotTypeA,
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("no longest element within length {0}; the group is infinite or the cap too small")]
    LongestElementCap(usize),
    #[error("group enumeration exceeded cap {0}")]
    EnumerationCap(usize),
    #[error("unknown type shorthand {0:?}")]
    UnknownShorthand(String),
    #[error("{0} is not a one-line permutation of 1..=n")]
    BadPermutation(String),
}

/// Subset of the generator set, as a bitmask over generator indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GenSet(u32);

impl GenSet {
    pub fn empty() -> Self {
        GenSet(0)
    }

    pub fn full(rank: usize) -> Self {
        GenSet(((1u64 << rank) - 1) as u32)
    }

    pub fn single(s: usize) -> Self {
        GenSet(1 << s)
    }

    pub fn all_but(s: usize, rank: usize) -> Self {
        GenSet(Self::full(rank).0 & !(1 << s))
    }

    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << s;
    }

    pub fn contains(&self, s: usize) -> bool {
        self.0 & (1 << s) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(move |s| self.contains(*s))
    }

    pub fn smallest(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = GenSet::empty();
        for s in iter {
            set.insert(s);
        }
        set
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for s in self.iter() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Root vector in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVec {
    coords: Vec<AlgebraicNumber>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootSign {
    Positive,
    Negative,
}

impl RootVec {
    pub fn coords(&self) -> &[AlgebraicNumber] {
        &self.coords
    }

    /// Sign classification; `None` for the zero vector or mixed signs,
    /// neither of which can arise from a genuine root.
    pub fn try_polarity(&self) -> Option<RootSign> {
        let mut pos = false;
        let mut neg = false;
        for c in &self.coords {
            match c.signum() {
                1 => pos = true,
                -1 => neg = true,
                _ => {}
            }
        }
        match (pos, neg) {
            (true, false) => Some(RootSign::Positive),
            (false, true) => Some(RootSign::Negative),
            _ => None,
        }
    }

    pub fn polarity(&self) -> RootSign {
        self.try_polarity()
            .expect("root vector must be strictly positive or strictly negative")
    }

    /// Index of the generator when this is a simple root α_s.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if found.is_some() || *c != AlgebraicNumber::one() {
                return None;
            }
            found = Some(i);
        }
        found
    }

    pub fn negated(&self) -> RootVec {
        RootVec {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Square matrix over the exact scalar field, acting on simple-root
/// coordinates; entry (i, j) is the α_i-coefficient of the image of α_j.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct Mat {
    n: usize,
    entries: Vec<AlgebraicNumber>,
}

impl Mat {
    fn identity(n: usize) -> Self {
        let mut entries = vec![AlgebraicNumber::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = AlgebraicNumber::one();
        }
        Mat { n, entries }
    }

    fn get(&self, i: usize, j: usize) -> &AlgebraicNumber {
        &self.entries[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: AlgebraicNumber) {
        self.entries[i * self.n + j] = v;
    }

    fn column(&self, j: usize) -> RootVec {
        RootVec {
            coords: (0..self.n).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    *e == AlgebraicNumber::one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    fn mul(&self, rhs: &Mat) -> Mat {
        debug_assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Mat {
            n,
            entries: vec![AlgebraicNumber::zero(); n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = &(a * b) + out.get(i, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// self · σ_s; column t becomes col_t - 2(α_s|α_t) col_s.
    fn mul_gen_right(&self, sys: &CoxeterSystem, s: usize) -> Mat {
        let n = self.n;
        let mut out = self.clone();
        let col_s: Vec<AlgebraicNumber> = (0..n).map(|i| self.get(i, s).clone()).collect();
        for t in 0..n {
            let factor = sys.gram[s][t].double();
            if factor.is_zero() {
                continue;
            }
            for (i, cs) in col_s.iter().enumerate() {
                if cs.is_zero() {
                    continue;
                }
                let v = out.get(i, t) - &(&factor * cs);
                out.set(i, t, v);
            }
        }
        out
    }

    /// σ_s · self; only row s changes.
    fn mul_gen_left(&self, sys: &CoxeterSystem, s: usize) -> Mat {
        let n = self.n;
        let mut out = self.clone();
        for j in 0..n {
            let mut acc = self.get(s, j).clone();
            for k in 0..n {
                let g = &sys.gram[s][k];
                if g.is_zero() {
                    continue;
                }
                let e = self.get(k, j);
                if e.is_zero() {
                    continue;
                }
                acc = &acc - &(&g.double() * e);
            }
            out.set(s, j, acc);
        }
        out
    }

    fn apply(&self, v: &RootVec) -> RootVec {
        let n = self.n;
        let mut coords = vec![AlgebraicNumber::zero(); n];
        for (j, c) in v.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, out) in coords.iter_mut().enumerate() {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                *out = &*out + &(e * c);
            }
        }
        RootVec { coords }
    }
}

/// A Coxeter system of finite rank: validated matrix, exact bilinear form
/// and the generator actions of the geometric representation.
pub struct CoxeterSystem {
    rank: usize,
    matrix: Vec<Vec<u32>>,
    gram: Vec<Vec<AlgebraicNumber>>,
    gen_actions: Vec<Mat>,
    gen_names: Vec<String>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterSystem(rank {}, m = {:?})", self.rank, self.matrix)
    }
}

impl CoxeterSystem {
    /// Builds a system from its Coxeter matrix. Off-diagonal entries must lie
    /// in {2, ..., 6} or be 0, which encodes ∞.
    pub fn new(matrix: Vec<Vec<u32>>) -> Result<Arc<Self>, CoxeterError> {
        let rank = matrix.len();
        let names = (1..=rank).map(|i| format!("s{i}")).collect();
        Self::with_names(matrix, names)
    }

    fn with_names(matrix: Vec<Vec<u32>>, gen_names: Vec<String>) -> Result<Arc<Self>, CoxeterError> {
        let rank = matrix.len();
        if rank == 0 {
            return Err(CoxeterError::InvalidMatrix("empty matrix".into()));
        }
        if rank > 32 {
            return Err(CoxeterError::InvalidMatrix(format!(
                "rank {rank} exceeds the supported maximum of 32"
            )));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != rank {
                return Err(CoxeterError::InvalidMatrix(format!(
                    "row {i} has length {}, expected {rank}",
                    row.len()
                )));
            }
            if row[i] != 1 {
                return Err(CoxeterError::InvalidMatrix(format!(
                    "diagonal entry m({i},{i}) = {} must be 1",
                    row[i]
                )));
            }
            for (j, &m) in row.iter().enumerate() {
                if j == i {
                    continue;
                }
                if m != matrix[j][i] {
                    return Err(CoxeterError::InvalidMatrix(format!(
                        "matrix is not symmetric at ({i},{j})"
                    )));
                }
                if m == 1 {
                    return Err(CoxeterError::InvalidMatrix(format!(
                        "off-diagonal entry m({i},{j}) = 1 is only allowed on the diagonal"
                    )));
                }
                if m != INFINITE_BOND && !(2..=6).contains(&m) {
                    return Err(CoxeterError::UnsupportedOrder(
                        ExactNumError::UnsupportedOrder(m),
                    ));
                }
            }
        }
        let mut gram = Vec::with_capacity(rank);
        for row in &matrix {
            let entries: Result<Vec<_>, _> = row.iter().map(|&m| bilinear_entry(m)).collect();
            gram.push(entries?);
        }
        let mut sys = CoxeterSystem {
            rank,
            matrix,
            gram,
            gen_actions: Vec::new(),
            gen_names,
        };
        let mut actions = Vec::with_capacity(rank);
        for s in 0..rank {
            actions.push(Mat::identity(rank).mul_gen_right(&sys, s));
        }
        sys.gen_actions = actions;
        sys.verify_representation();
        Ok(Arc::new(sys))
    }

    /// Each generator action must be an involution preserving the bilinear
    /// form; checked once per construction.
    fn verify_representation(&self) {
        for (s, m) in self.gen_actions.iter().enumerate() {
            assert!(
                m.mul(m).is_identity(),
                "generator action {s} is not an involution"
            );
            for u in 0..self.rank {
                for v in 0..self.rank {
                    let img_u = m.column(u);
                    let img_v = m.column(v);
                    assert_eq!(
                        self.bilinear_form(&img_u, &img_v),
                        self.gram[u][v],
                        "generator action {s} does not preserve the bilinear form"
                    );
                }
            }
        }
    }

    pub fn bilinear_form(&self, x: &RootVec, y: &RootVec) -> AlgebraicNumber {
        let mut acc = AlgebraicNumber::zero();
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                acc = &acc + &(&(xi * yj) * &self.gram[i][j]);
            }
        }
        acc
    }

    /// Parses a type shorthand: `A<n>` (n ≥ 1), `B<n>` (n ≥ 2, with the
    /// 4-bond between the first two generators s0 and s1) or `I2(m)` with
    /// m in 2..=6. Infinite systems must be entered as explicit matrices.
    pub fn from_shorthand(spec: &str) -> Result<Arc<Self>, CoxeterError> {
        let spec = spec.trim();
        if let Some(rest) = spec.strip_prefix('A') {
            if let Ok(n) = rest.parse::<usize>() {
                if n >= 1 {
                    return Self::type_a(n);
                }
            }
        }
        if let Some(rest) = spec.strip_prefix('B') {
            if let Ok(n) = rest.parse::<usize>() {
                if n >= 2 {
                    return Self::type_b(n);
                }
            }
        }
        if let Some(rest) = spec.strip_prefix("I2(") {
            if let Some(inner) = rest.strip_suffix(')') {
                if let Ok(m) = inner.parse::<u32>() {
                    if (2..=6).contains(&m) {
                        return Self::dihedral(m);
                    }
                }
                return Err(CoxeterError::UnknownShorthand(spec.to_string()));
            }
        }
        Err(CoxeterError::UnknownShorthand(spec.to_string()))
    }

    /// Type A_n: the symmetric group S_{n+1} with adjacent 3-bonds and
    /// generators named s1, ..., sn.
    pub fn type_a(n: usize) -> Result<Arc<Self>, CoxeterError> {
        let matrix = chain_matrix(n, &[]);
        let names = (1..=n).map(|i| format!("s{i}")).collect();
        Self::with_names(matrix, names)
    }

    /// Type B_n: the 4-bond sits between the first two generators, which are
    /// named s0, ..., s(n-1).
    pub fn type_b(n: usize) -> Result<Arc<Self>, CoxeterError> {
        let matrix = chain_matrix(n, &[(0, 4)]);
        let names = (0..n).map(|i| format!("s{i}")).collect();
        Self::with_names(matrix, names)
    }

    /// Dihedral system I2(m) of rank 2.
    pub fn dihedral(m: u32) -> Result<Arc<Self>, CoxeterError> {
        Self::new(vec![vec![1, m], vec![m, 1]])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn bond(&self, s: usize, t: usize) -> u32 {
        self.matrix[s][t]
    }

    pub fn gram(&self) -> &[Vec<AlgebraicNumber>] {
        &self.gram
    }

    pub fn gen_name(&self, s: usize) -> &str {
        &self.gen_names[s]
    }

    pub fn gen_by_name(&self, name: &str) -> Option<usize> {
        self.gen_names.iter().position(|n| n == name)
    }

    pub fn same_system(&self, other: &CoxeterSystem) -> bool {
        std::ptr::eq(self, other) || self.matrix == other.matrix
    }

    /// The symmetric-group degree n when this is the type A_{n-1} chain.
    pub fn type_a_degree(&self) -> Option<usize> {
        for i in 0..self.rank {
            for j in 0..self.rank {
                let expected = if i == j {
                    1
                } else if i.abs_diff(j) == 1 {
                    3
                } else {
                    2
                };
                if self.matrix[i][j] != expected {
                    return None;
                }
            }
        }
        Some(self.rank + 1)
    }

    fn check_gen(&self, s: usize) -> Result<(), CoxeterError> {
        if s < self.rank {
            Ok(())
        } else {
            Err(CoxeterError::GeneratorOutOfRange {
                index: s,
                rank: self.rank,
            })
        }
    }

    /// Reconstructs the canonical reduced word of an element from its action
    /// matrix: strip the smallest right descent until the identity remains,
    /// then reverse the collected letters.
    pub(crate) fn canonical_word_of(
        &self,
        action: &Mat,
        max_len: usize,
    ) -> Result<Vec<usize>, CoxeterError> {
        let mut m = action.clone();
        let mut stripped = Vec::new();
        while !m.is_identity() {
            if stripped.len() >= max_len {
                return Err(CoxeterError::NonTerminating(max_len));
            }
            let s = self.first_descent_column(&m)?;
            stripped.push(s);
            m = m.mul_gen_right(self, s);
        }
        stripped.reverse();
        Ok(stripped)
    }

    fn first_descent_column(&self, m: &Mat) -> Result<usize, CoxeterError> {
        for s in 0..self.rank {
            match m.column(s).try_polarity() {
                Some(RootSign::Negative) => return Ok(s),
                Some(RootSign::Positive) => {}
                None => {
                    return Err(CoxeterError::InvalidMatrix(
                        "matrix column is not a root image".into(),
                    ))
                }
            }
        }
        Err(CoxeterError::InvalidMatrix(
            "non-identity action without a right descent".into(),
        ))
    }
}

fn chain_matrix(n: usize, overrides: &[(usize, u32)]) -> Vec<Vec<u32>> {
    let mut matrix = vec![vec![2; n]; n];
    for (i, row) in matrix.iter_mut().enumerate() {
        row[i] = 1;
    }
    for i in 0..n.saturating_sub(1) {
        let m = overrides
            .iter()
            .find(|(k, _)| *k == i)
            .map(|(_, m)| *m)
            .unwrap_or(3);
        matrix[i][i + 1] = m;
        matrix[i + 1][i] = m;
    }
    matrix
}

/// Group element: exact action matrix plus canonical reduced word.
#[derive(Clone)]
pub struct GroupElement {
    system: Arc<CoxeterSystem>,
    action: Mat,
    word: Vec<usize>,
}

impl GroupElement {
    pub fn identity(system: &Arc<CoxeterSystem>) -> Self {
        GroupElement {
            system: Arc::clone(system),
            action: Mat::identity(system.rank),
            word: Vec::new(),
        }
    }

    pub fn generator(system: &Arc<CoxeterSystem>, s: usize) -> Result<Self, CoxeterError> {
        system.check_gen(s)?;
        Ok(GroupElement {
            system: Arc::clone(system),
            action: system.gen_actions[s].clone(),
            word: vec![s],
        })
    }

    /// Element of an arbitrary (not necessarily reduced) word.
    pub fn from_word(system: &Arc<CoxeterSystem>, word: &[usize]) -> Result<Self, CoxeterError> {
        let mut action = Mat::identity(system.rank);
        for &s in word {
            system.check_gen(s)?;
            action = action.mul_gen_right(system, s);
        }
        let word = system.canonical_word_of(&action, word.len())?;
        Ok(GroupElement {
            system: Arc::clone(system),
            action,
            word,
        })
    }

    /// Type A element with the given one-line notation.
    pub fn from_one_line(system: &Arc<CoxeterSystem>, perm: &[usize]) -> Result<Self, CoxeterError> {
        let n = system.type_a_degree().ok_or(CoxeterError::NotTypeA)?;
        let mut seen = vec![false; n + 1];
        if perm.len() != n || !perm.iter().all(|&p| (1..=n).contains(&p) && !std::mem::replace(&mut seen[p.min(n)], true)) {
            return Err(CoxeterError::BadPermutation(format!("{perm:?}")));
        }
        // Sort back to the identity with adjacent swaps; the recorded swap
        // positions, reversed, are a reduced word.
        let mut p = perm.to_vec();
        let mut strips = Vec::new();
        while let Some(i) = (0..n - 1).find(|&i| p[i] > p[i + 1]) {
            p.swap(i, i + 1);
            strips.push(i);
        }
        strips.reverse();
        Self::from_word(system, &strips)
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.system
    }

    /// Canonical reduced word, as 0-based generator indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Coxeter length ℓ(w).
    #[allow(clippy::len_without_is_empty)] // is_identity plays that role
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    fn check_same_system(&self, other: &GroupElement) -> Result<(), CoxeterError> {
        if self.system.same_system(&other.system) {
            Ok(())
        } else {
            Err(CoxeterError::SystemMismatch)
        }
    }

    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement, CoxeterError> {
        self.check_same_system(other)?;
        let action = self.action.mul(&other.action);
        let word = self
            .system
            .canonical_word_of(&action, self.len() + other.len())?;
        Ok(GroupElement {
            system: Arc::clone(&self.system),
            action,
            word,
        })
    }

    /// w · s for a single generator.
    pub fn mul_gen(&self, s: usize) -> Result<GroupElement, CoxeterError> {
        self.system.check_gen(s)?;
        let action = self.action.mul_gen_right(&self.system, s);
        let word = self.system.canonical_word_of(&action, self.len() + 1)?;
        Ok(GroupElement {
            system: Arc::clone(&self.system),
            action,
            word,
        })
    }

    /// s · w for a single generator.
    pub fn gen_mul(&self, s: usize) -> Result<GroupElement, CoxeterError> {
        self.system.check_gen(s)?;
        let action = self.action.mul_gen_left(&self.system, s);
        let word = self.system.canonical_word_of(&action, self.len() + 1)?;
        Ok(GroupElement {
            system: Arc::clone(&self.system),
            action,
            word,
        })
    }

    /// Inverse, built from the reversed canonical word.
    pub fn inverse(&self) -> GroupElement {
        let mut rev = self.word.clone();
        rev.reverse();
        GroupElement::from_word(&self.system, &rev).expect("reversed reduced word is valid")
    }

    /// D_R(w): generators whose simple root is sent to a negative root.
    pub fn right_descents(&self) -> GenSet {
        (0..self.system.rank)
            .filter(|&s| self.action.column(s).polarity() == RootSign::Negative)
            .collect()
    }

    pub fn has_right_descent(&self, s: usize) -> bool {
        self.action.column(s).polarity() == RootSign::Negative
    }

    /// D_L(w) = D_R(w⁻¹); read off the simple roots in the left inversion
    /// set, which needs no matrix inverse.
    pub fn left_descents(&self) -> GenSet {
        let mut out = GenSet::empty();
        for root in self.left_inversion_roots() {
            if let Some(s) = root.simple_index() {
                out.insert(s);
            }
        }
        out
    }

    /// The roots {α_t : t ∈ T_L(w)}; for the canonical word s_1 ⋯ s_k these
    /// are σ_{s_1 ⋯ s_{i-1}}(α_{s_i}), and there are exactly ℓ(w) of them.
    pub fn left_inversion_roots(&self) -> BTreeSet<RootVec> {
        let mut prefix = Mat::identity(self.system.rank);
        let mut roots = BTreeSet::new();
        for &s in &self.word {
            let root = prefix.column(s);
            assert_eq!(root.polarity(), RootSign::Positive);
            roots.insert(root);
            prefix = prefix.mul_gen_right(&self.system, s);
        }
        assert_eq!(roots.len(), self.len());
        roots
    }

    /// Pairs (α_t, t) for t ∈ T_L(w), in canonical-word prefix order.
    pub fn left_inversions(&self) -> Vec<(RootVec, GroupElement)> {
        let mut prefix = Mat::identity(self.system.rank);
        let mut prefix_inv = Mat::identity(self.system.rank);
        let mut out = Vec::with_capacity(self.len());
        for (i, &s) in self.word.iter().enumerate() {
            let root = prefix.column(s);
            assert_eq!(root.polarity(), RootSign::Positive);
            let action = prefix
                .mul_gen_right(&self.system, s)
                .mul(&prefix_inv);
            let word = self
                .system
                .canonical_word_of(&action, 2 * i + 1)
                .expect("prefix conjugate of a generator is a reflection");
            out.push((
                root,
                GroupElement {
                    system: Arc::clone(&self.system),
                    action,
                    word,
                },
            ));
            prefix = prefix.mul_gen_right(&self.system, s);
            prefix_inv = prefix_inv.mul_gen_left(&self.system, s);
        }
        out
    }

    /// The reflections of T_L(w) as a set of group elements.
    pub fn left_inversion_reflections(&self) -> BTreeSet<GroupElement> {
        self.left_inversions().into_iter().map(|(_, t)| t).collect()
    }

    /// The positive root α_t when this element is a reflection.
    pub fn as_reflection_root(&self) -> Option<RootVec> {
        if self.len().is_multiple_of(2) {
            return None;
        }
        for (root, t) in self.left_inversions() {
            if t == *self {
                debug_assert_eq!(self.action.apply(&root), root.negated());
                return Some(root);
            }
        }
        None
    }

    /// Right weak order: u ≤_R v iff T_L(u) ⊆ T_L(v).
    pub fn weak_leq(&self, other: &GroupElement) -> Result<bool, CoxeterError> {
        self.check_same_system(other)?;
        if self.len() > other.len() {
            return Ok(false);
        }
        Ok(self
            .left_inversion_roots()
            .is_subset(&other.left_inversion_roots()))
    }

    /// Bruhat order, by the standard descent recursion: compare at the
    /// smallest right descent s of v, lifting u to us when that shortens u.
    pub fn bruhat_leq(&self, other: &GroupElement) -> Result<bool, CoxeterError> {
        self.check_same_system(other)?;
        let mut u = self.clone();
        let mut v = other.clone();
        loop {
            if u == v {
                return Ok(true);
            }
            if u.len() >= v.len() {
                return Ok(false);
            }
            let s = v
                .right_descents()
                .smallest()
                .expect("non-identity element has a right descent");
            v = v.mul_gen(s).expect("same system");
            if u.has_right_descent(s) {
                u = u.mul_gen(s).expect("same system");
            }
        }
    }

    /// Unique factorization w = w^J · w_J with w^J ∈ W^J and w_J ∈ W_J,
    /// returned as (quotient, parabolic). Computed by stripping the smallest
    /// J-descent from the right; lengths add.
    pub fn project_right(&self, j: &GenSet) -> (GroupElement, GroupElement) {
        let mut quotient = self.clone();
        let mut stripped = Vec::new();
        loop {
            let next = j.iter().find(|&s| quotient.has_right_descent(s));
            match next {
                Some(s) => {
                    stripped.push(s);
                    quotient = quotient.mul_gen(s).expect("generator in range");
                }
                None => break,
            }
        }
        stripped.reverse();
        let parabolic =
            GroupElement::from_word(&self.system, &stripped).expect("stripped word is valid");
        debug_assert_eq!(quotient.len() + parabolic.len(), self.len());
        (quotient, parabolic)
    }

    /// Mirror factorization w = w'_J · ^Jw, returned as (parabolic,
    /// quotient); computed through the inverse of the right projection.
    pub fn project_left(&self, j: &GenSet) -> (GroupElement, GroupElement) {
        let (q, p) = self.inverse().project_right(j);
        (p.inverse(), q.inverse())
    }

    /// P^{(s)}(w): minimal coset representative of w modulo the parabolic
    /// subgroup generated by everything except s.
    pub fn project_drop(&self, s: usize) -> GroupElement {
        self.project_right(&GenSet::all_but(s, self.system.rank)).0
    }

    /// One-line notation in type A; generator s_i swaps entries i, i+1.
    pub fn one_line(&self) -> Result<Vec<usize>, CoxeterError> {
        let n = self.system.type_a_degree().ok_or(CoxeterError::NotTypeA)?;
        let mut perm: Vec<usize> = (1..=n).collect();
        for &s in &self.word {
            perm.swap(s, s + 1);
        }
        Ok(perm)
    }

    /// Greedy ascent to the longest element: repeatedly multiply by the
    /// smallest non-descent. Fails past `cap` steps (infinite group).
    pub fn longest_element(
        system: &Arc<CoxeterSystem>,
        cap: usize,
    ) -> Result<GroupElement, CoxeterError> {
        let mut w = GroupElement::identity(system);
        loop {
            let descents = w.right_descents();
            if descents == GenSet::full(system.rank) {
                return Ok(w);
            }
            if w.len() >= cap {
                return Err(CoxeterError::LongestElementCap(cap));
            }
            let s = (0..system.rank)
                .find(|&s| !descents.contains(s))
                .expect("some generator is not a descent");
            w = w.mul_gen(s)?;
        }
    }

    /// All elements of a finite group, by breadth-first search along
    /// non-descents, sorted by (length, word). Errors past `cap` elements.
    pub fn all_elements(
        system: &Arc<CoxeterSystem>,
        cap: usize,
    ) -> Result<Vec<GroupElement>, CoxeterError> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue = std::collections::VecDeque::new();
        let mut out = Vec::new();
        let e = GroupElement::identity(system);
        seen.insert(e.word.clone());
        queue.push_back(e.clone());
        out.push(e);
        while let Some(w) = queue.pop_front() {
            for s in 0..system.rank {
                if w.has_right_descent(s) {
                    continue;
                }
                let next = w.mul_gen(s)?;
                if seen.insert(next.word.clone()) {
                    if out.len() >= cap {
                        return Err(CoxeterError::EnumerationCap(cap));
                    }
                    queue.push_back(next.clone());
                    out.push(next);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// σ_w(α_s): the image of a simple root under the element's action.
    pub fn root_image(&self, s: usize) -> RootVec {
        self.action.column(s)
    }

    /// Applies the element's action to arbitrary root coordinates.
    pub fn apply_to_root(&self, root: &RootVec) -> RootVec {
        self.action.apply(root)
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.system.same_system(&other.system) && self.word == other.word
    }
}

impl Eq for GroupElement {}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.system.rank.hash(state);
        self.word.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    /// Container order: by (length, canonical word), then by system matrix
    /// so that elements of distinct systems never compare equal.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.system.matrix.cmp(&other.system.matrix))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for (i, &s) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.system.gen_names[s])?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
