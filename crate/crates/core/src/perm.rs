//! Total bijections and injective partial maps on index sets.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{0, .., n-1}`, stored as its table of images.
///
/// Composition follows the reading direction of an automaton: `p.then(&q)`
/// applies `p` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(targets: Vec<usize>) -> Result<Self> {
        let p = Permutation(targets);
        if p.is_bijection() {
            Ok(p)
        } else {
            Err(Error::Domain(format!("{:?} is not a permutation", p.0)))
        }
    }

    /// Wraps a table without checking it. Use [`Permutation::is_bijection`]
    /// before relying on group operations.
    pub fn from_targets_unchecked(targets: Vec<usize>) -> Self {
        Permutation(targets)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// The full cycle `i -> i+1 mod n`.
    pub fn cycle(n: usize) -> Self {
        Permutation((0..n).map(|i| (i + 1) % n).collect())
    }

    /// Swaps `i` and `j`, fixing every other point.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(i, j);
        Permutation(t)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn targets(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &t)| i == t)
    }

    pub fn is_bijection(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        for &t in &self.0 {
            if t >= n || seen[t] {
                return false;
            }
            seen[t] = true;
        }
        true
    }

    /// `self` followed by `other`: `x -> other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &t) in self.0.iter().enumerate() {
            inv[t] = i;
        }
        Permutation(inv)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

/// A partial map from `{0, .., domain-1}` to `{0, .., codomain-1}` that is
/// injective where defined.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialInjection {
    targets: Vec<Option<usize>>,
    codomain: usize,
}

impl PartialInjection {
    pub fn new(targets: Vec<Option<usize>>, codomain: usize) -> Result<Self> {
        let p = PartialInjection { targets, codomain };
        if p.is_injection() {
            Ok(p)
        } else {
            Err(Error::Domain(format!(
                "{:?} is not an injection into {codomain} points",
                p.targets
            )))
        }
    }

    pub fn from_targets_unchecked(targets: Vec<Option<usize>>, codomain: usize) -> Self {
        PartialInjection { targets, codomain }
    }

    /// The nowhere-defined map.
    pub fn empty(domain: usize, codomain: usize) -> Self {
        PartialInjection { targets: vec![None; domain], codomain }
    }

    #[inline]
    pub fn get(&self, i: usize) -> Option<usize> {
        self.targets.get(i).copied().flatten()
    }

    pub fn set(&mut self, i: usize, target: Option<usize>) {
        self.targets[i] = target;
    }

    pub fn domain_len(&self) -> usize {
        self.targets.len()
    }

    pub fn codomain_len(&self) -> usize {
        self.codomain
    }

    pub fn targets(&self) -> &[Option<usize>] {
        &self.targets
    }

    pub fn defined_count(&self) -> usize {
        self.targets.iter().filter(|t| t.is_some()).count()
    }

    /// First defined slot whose image is outside the codomain.
    pub fn out_of_range(&self) -> Option<usize> {
        self.targets
            .iter()
            .position(|t| matches!(t, Some(x) if *x >= self.codomain))
    }

    /// First pair of slots sharing an image.
    pub fn collision(&self) -> Option<(usize, usize)> {
        let mut owner: Vec<Option<usize>> = vec![None; self.codomain];
        for (i, t) in self.targets.iter().enumerate() {
            if let Some(x) = *t {
                if x >= self.codomain {
                    continue;
                }
                if let Some(prev) = owner[x] {
                    return Some((prev, i));
                }
                owner[x] = Some(i);
            }
        }
        None
    }

    pub fn is_injection(&self) -> bool {
        self.out_of_range().is_none() && self.collision().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_reads_left_to_right() {
        let c = Permutation::cycle(3);
        let t = Permutation::transposition(3, 0, 1);
        // 0 -c-> 1 -t-> 0
        assert_eq!(c.then(&t).apply(0), 0);
        assert_eq!(t.then(&c).apply(0), 2);
        assert!(c.then(&c.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![1, 2]).is_err());
        assert!(Permutation::new(vec![]).unwrap().is_identity());
    }

    #[test]
    fn partial_injection_checks() {
        let p = PartialInjection::from_targets_unchecked(vec![Some(1), None, Some(1)], 2);
        assert_eq!(p.collision(), Some((0, 2)));
        let p = PartialInjection::from_targets_unchecked(vec![Some(2)], 2);
        assert_eq!(p.out_of_range(), Some(0));
        assert!(PartialInjection::new(vec![None, Some(0)], 1).is_ok());
    }
}
