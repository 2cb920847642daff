//! Finite posets given by cover relations, with linear-extension
//! enumeration by backtracking.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("cover relation contains a cycle")]
    Cyclic,
    #[error("cover ({0}, {1}) is redundant (implied by other covers)")]
    RedundantCover(usize, usize),
    #[error("cover index {0} out of range for size {1}")]
    IndexOutOfRange(usize, usize),
    #[error("more than {0} linear extensions")]
    TooMany(usize),
}

/// Poset on {0, ..., size-1} stored as its Hasse diagram plus the full
/// reachability closure.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    size: usize,
    covers: Vec<(usize, usize)>,
    // closure[i * size + j] = true iff i < j strictly
    closure: Vec<bool>,
}

impl FinitePoset {
    /// Builds from covers (i, j) meaning i ⋖ j. The relation must be acyclic
    /// and every cover irredundant.
    pub fn from_covers(size: usize, mut covers: Vec<(usize, usize)>) -> Result<Self, PosetError> {
        covers.sort();
        covers.dedup();
        for &(i, j) in &covers {
            if i >= size {
                return Err(PosetError::IndexOutOfRange(i, size));
            }
            if j >= size {
                return Err(PosetError::IndexOutOfRange(j, size));
            }
            if i == j {
                return Err(PosetError::Cyclic);
            }
        }
        let closure = transitive_closure(size, &covers)?;
        // A cover is redundant when a two-step path joins its endpoints.
        for &(i, j) in &covers {
            for k in 0..size {
                if k != i && k != j && closure[i * size + k] && closure[k * size + j] {
                    return Err(PosetError::RedundantCover(i, j));
                }
            }
        }
        Ok(FinitePoset {
            size,
            covers,
            closure,
        })
    }

    /// Builds from a strict-order oracle by transitive reduction. The caller
    /// guarantees `less` is a strict partial order; antisymmetry is asserted.
    pub fn from_strict_order(size: usize, less: impl Fn(usize, usize) -> bool) -> Self {
        let mut closure = vec![false; size * size];
        for i in 0..size {
            for j in 0..size {
                if i != j && less(i, j) {
                    assert!(!less(j, i), "relation is not antisymmetric");
                    closure[i * size + j] = true;
                }
            }
        }
        let mut covers = Vec::new();
        for i in 0..size {
            for j in 0..size {
                if !closure[i * size + j] {
                    continue;
                }
                let direct = (0..size)
                    .all(|k| k == i || k == j || !(closure[i * size + k] && closure[k * size + j]));
                if direct {
                    covers.push((i, j));
                }
            }
        }
        covers.sort();
        FinitePoset {
            size,
            covers,
            closure,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Strict comparison i < j.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.closure[i * self.size + j]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.less(i, j)
    }

    /// Number of strictly comparable ordered pairs.
    pub fn relation_count(&self) -> usize {
        self.closure.iter().filter(|&&b| b).count()
    }

    /// All linear extensions, each a permutation of {0, ..., size-1} listed
    /// from bottom to top, in lexicographic order. Errors when more than
    /// `cap` exist.
    pub fn linear_extensions(&self, cap: usize) -> Result<Vec<Vec<usize>>, PosetError> {
        let mut indegree = vec![0usize; self.size];
        let mut above: Vec<Vec<usize>> = vec![Vec::new(); self.size];
        for &(i, j) in &self.covers {
            indegree[j] += 1;
            above[i].push(j);
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.size);
        let mut used = vec![false; self.size];
        self.extend_all(&mut indegree, &above, &mut used, &mut current, &mut out, cap)?;
        Ok(out)
    }

    fn extend_all(
        &self,
        indegree: &mut [usize],
        above: &[Vec<usize>],
        used: &mut [bool],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<(), PosetError> {
        if current.len() == self.size {
            if out.len() >= cap {
                return Err(PosetError::TooMany(cap));
            }
            out.push(current.clone());
            return Ok(());
        }
        for i in 0..self.size {
            if used[i] || indegree[i] > 0 {
                continue;
            }
            used[i] = true;
            current.push(i);
            for &j in &above[i] {
                indegree[j] -= 1;
            }
            self.extend_all(indegree, above, used, current, out, cap)?;
            for &j in &above[i] {
                indegree[j] += 1;
            }
            current.pop();
            used[i] = false;
        }
        Ok(())
    }

    /// Whether `order` lists the elements bottom-to-top compatibly with the
    /// poset.
    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        if order.len() != self.size {
            return false;
        }
        let mut pos = vec![usize::MAX; self.size];
        for (p, &x) in order.iter().enumerate() {
            if x >= self.size || pos[x] != usize::MAX {
                return false;
            }
            pos[x] = p;
        }
        self.covers.iter().all(|&(i, j)| pos[i] < pos[j])
    }
}

fn transitive_closure(size: usize, covers: &[(usize, usize)]) -> Result<Vec<bool>, PosetError> {
    let mut closure = vec![false; size * size];
    for &(i, j) in covers {
        closure[i * size + j] = true;
    }
    for k in 0..size {
        for i in 0..size {
            if !closure[i * size + k] {
                continue;
            }
            for j in 0..size {
                if closure[k * size + j] {
                    closure[i * size + j] = true;
                }
            }
        }
    }
    for i in 0..size {
        if closure[i * size + i] {
            return Err(PosetError::Cyclic);
        }
    }
    Ok(closure)
}
