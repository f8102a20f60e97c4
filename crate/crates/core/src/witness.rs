//! The lower-bound automaton family over `{a, b, c, d}` and the
//! permutation-word machinery used to reach and separate its states.
//!
//! `a` and `b` generate the symmetric group on the right-moving states and
//! act trivially on the left-moving ones; `c` and `d` do the opposite.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::analysis::distinguishing_word;
use crate::automaton::{Flavor, StateId, SweepingPermAutomaton};
use crate::error::{Error, Result};
use crate::perm::{PartialInjection, Permutation};
use crate::transform::{transform, Mode, TransformedState};

/// Largest group explored by [`word_for_permutation`] unless told otherwise.
pub const DEFAULT_GROUP_BUDGET: usize = 3_628_800;

/// `k` right-moving states, `l` left-moving states, `m` of which cannot turn
/// at the left end-marker. Requires `k > l > 0` and `l >= m > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessParams {
    k: usize,
    l: usize,
    m: usize,
}

impl WitnessParams {
    pub fn new(k: usize, l: usize, m: usize) -> Result<Self> {
        if k > l && l > 0 && l >= m && m > 0 {
            Ok(WitnessParams { k, l, m })
        } else {
            Err(Error::WitnessParams(format!("(k, l, m) = ({k}, {l}, {m})")))
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

pub fn build_witness(p: WitnessParams) -> SweepingPermAutomaton {
    construct(p.k, p.l, p.m)
}

/// Builds the same automaton outside the proven range, e.g. `(3, 1, 0)`.
/// Only requires the result to be a valid automaton: `k >= 1`, `l <= k` and
/// `l - m < k`.
pub fn build_witness_forced(k: usize, l: usize, m: usize) -> Result<SweepingPermAutomaton> {
    if k == 0 || m > l || l > k || l - m >= k {
        return Err(Error::Domain(format!(
            "({k}, {l}, {m}) does not describe a valid automaton (need k >= 1, m <= l <= k, l - m < k)"
        )));
    }
    Ok(construct(k, l, m))
}

fn generator_pair(n: usize) -> (Permutation, Permutation) {
    let swap = if n >= 2 {
        Permutation::transposition(n, 0, 1)
    } else {
        Permutation::identity(n)
    };
    (Permutation::cycle(n), swap)
}

fn construct(k: usize, l: usize, m: usize) -> SweepingPermAutomaton {
    let (cycle_plus, swap_plus) = generator_pair(k);
    let (cycle_minus, swap_minus) = generator_pair(l);
    let id_plus = Permutation::identity(k);
    let id_minus = Permutation::identity(l);

    let mut left = vec![None; l + 1];
    left[0] = Some(0);
    for i in 0..l - m {
        left[i + 1] = Some(i + 1);
    }
    let right = (0..k).map(|i| (i < l).then_some(i)).collect();

    SweepingPermAutomaton {
        flavor: Flavor::Classic,
        alphabet: ["a", "b", "c", "d"].map(String::from).to_vec(),
        k_plus: k,
        k_minus: l,
        initial: StateId::Plus(0),
        delta_plus: vec![cycle_plus, swap_plus, id_plus.clone(), id_plus],
        delta_minus: vec![id_minus.clone(), id_minus, cycle_minus, swap_minus],
        left_end: PartialInjection::from_targets_unchecked(left, k),
        right_end: PartialInjection::from_targets_unchecked(right, l),
        accepting: (l..k).map(StateId::Plus).collect::<BTreeSet<_>>(),
    }
}

/// A shortest word over the named generators whose left-to-right product is
/// `target`. Breadth-first over the generated group, generators tried in the
/// given order.
pub fn word_for_permutation(
    generators: &[(String, Permutation)],
    target: &Permutation,
    budget: usize,
) -> Result<Vec<String>> {
    let n = target.len();
    if let Some((name, _)) = generators.iter().find(|(_, g)| g.len() != n || !g.is_bijection()) {
        return Err(Error::Domain(format!("generator {name} is not a permutation of {n} points")));
    }
    let identity = Permutation::identity(n);
    let mut parent: HashMap<Permutation, Option<(Permutation, usize)>> = HashMap::new();
    parent.insert(identity.clone(), None);
    let mut queue = VecDeque::from([identity]);
    while let Some(p) = queue.pop_front() {
        if &p == target {
            let mut word = Vec::new();
            let mut cur = p;
            while let Some((prev, g)) = parent[&cur].clone() {
                word.push(generators[g].0.clone());
                cur = prev;
            }
            word.reverse();
            return Ok(word);
        }
        for (g, (_, gen)) in generators.iter().enumerate() {
            let next = p.then(gen);
            if !parent.contains_key(&next) {
                if parent.len() >= budget {
                    return Err(Error::Budget(format!("group larger than {budget} elements")));
                }
                parent.insert(next.clone(), Some((p.clone(), g)));
                queue.push_back(next);
            }
        }
    }
    Err(Error::NotFound(format!("{target} is not generated")))
}

/// Order of the group generated by `generators` on `n` points.
pub fn group_order(n: usize, generators: &[Permutation], budget: usize) -> Result<usize> {
    let identity = Permutation::identity(n);
    let mut seen = std::collections::HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let next = p.then(g);
            if seen.insert(next.clone()) {
                if seen.len() > budget {
                    return Err(Error::Budget(format!("group larger than {budget} elements")));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len())
}

/// A shortest word accepted from exactly one of `s1`, `s2` in the reachable
/// one-way automaton of `a`.
pub fn separating_string(
    a: &SweepingPermAutomaton,
    s1: &TransformedState,
    s2: &TransformedState,
) -> Result<Vec<usize>> {
    let t = transform(a, Mode::Reachable)?;
    let find = |s: &TransformedState| {
        t.index_of(s).ok_or_else(|| Error::NotFound(format!("{s} is not reachable")))
    };
    let (i, j) = (find(s1)?, find(s2)?);
    distinguishing_word(&t.dfa, i, j)
        .ok_or_else(|| Error::NotFound(format!("no word separates {s1} and {s2}")))
}
