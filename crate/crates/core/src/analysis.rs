//! Minimization, exact equivalence and brute-force language enumeration for
//! cross-checking the construction.

use std::collections::{HashMap, VecDeque};

use crate::automaton::SweepingPermAutomaton;
use crate::dfa::OneWayDfa;
use crate::error::{Error, Result};
use crate::run::run_valid;

/// Default cap on the number of words [`bounded_language`] may enumerate.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// States reachable from the initial state, in breadth-first order with
/// symbols taken in alphabet order.
fn bfs_order(d: &OneWayDfa) -> Vec<usize> {
    let n = d.state_count();
    let mut seen = vec![false; n];
    let mut order = vec![d.initial()];
    seen[d.initial()] = true;
    let mut head = 0;
    while head < order.len() {
        let s = order[head];
        head += 1;
        for a in 0..d.alphabet().len() {
            let t = d.step(s, a);
            if !std::mem::replace(&mut seen[t], true) {
                order.push(t);
            }
        }
    }
    order
}

/// The minimal complete DFA for `L(d)`, states numbered in breadth-first
/// order from the initial state.
pub fn minimize(d: &OneWayDfa) -> OneWayDfa {
    let reachable = bfs_order(d);
    let sigma = d.alphabet().len();

    // Moore refinement: split blocks by (block, block of each successor)
    // until the number of blocks stops growing.
    let mut block = vec![usize::MAX; d.state_count()];
    for &s in &reachable {
        block[s] = usize::from(d.is_accepting(s));
    }
    let mut count = {
        let mut kinds: Vec<usize> = reachable.iter().map(|&s| block[s]).collect();
        kinds.sort_unstable();
        kinds.dedup();
        kinds.len()
    };
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next = vec![usize::MAX; d.state_count()];
        for &s in &reachable {
            let mut sig = Vec::with_capacity(sigma + 1);
            sig.push(block[s]);
            sig.extend((0..sigma).map(|a| block[d.step(s, a)]));
            let fresh = ids.len();
            next[s] = *ids.entry(sig).or_insert(fresh);
        }
        let new_count = ids.len();
        block = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }

    // Renumber blocks in breadth-first order of their first member.
    let mut number = vec![usize::MAX; count];
    let mut representative = Vec::with_capacity(count);
    let mut queue = VecDeque::from([d.initial()]);
    number[block[d.initial()]] = 0;
    representative.push(d.initial());
    while let Some(s) = queue.pop_front() {
        for a in 0..sigma {
            let t = d.step(s, a);
            if number[block[t]] == usize::MAX {
                number[block[t]] = representative.len();
                representative.push(t);
                queue.push_back(t);
            }
        }
    }
    let transitions = (0..sigma)
        .map(|a| representative.iter().map(|&s| number[block[d.step(s, a)]]).collect())
        .collect();
    let accepting = representative.iter().map(|&s| d.is_accepting(s)).collect();
    OneWayDfa::new(d.alphabet().to_vec(), 0, transitions, accepting)
        .expect("quotient of a complete dfa is complete")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub equal: bool,
    /// A shortest separating word (symbol indices of the first argument's
    /// alphabet), least in alphabet order among the shortest.
    pub counterexample: Option<Vec<usize>>,
}

type Pair = (usize, usize);

/// Shortest word whose acceptance differs between `left` from state `p` and
/// `right` from state `q`. `to_right[a]` maps symbol `a` of `left` to the
/// matching symbol of `right`.
fn shortest_difference(
    left: &OneWayDfa,
    p: usize,
    right: &OneWayDfa,
    q: usize,
    to_right: &[usize],
) -> Option<Vec<usize>> {
    let sigma = left.alphabet().len();
    let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
    parent.insert((p, q), None);
    let mut queue = VecDeque::from([(p, q)]);
    while let Some(pair @ (s, t)) = queue.pop_front() {
        if left.is_accepting(s) != right.is_accepting(t) {
            let mut word = Vec::new();
            let mut cur = pair;
            while let Some((prev, a)) = parent[&cur] {
                word.push(a);
                cur = prev;
            }
            word.reverse();
            return Some(word);
        }
        for (a, &b) in to_right.iter().enumerate().take(sigma) {
            let next = (left.step(s, a), right.step(t, b));
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                e.insert(Some((pair, a)));
                queue.push_back(next);
            }
        }
    }
    None
}

/// Exact language equivalence via the product automaton. The alphabets must
/// hold the same symbols, in any order.
pub fn equivalent(d1: &OneWayDfa, d2: &OneWayDfa) -> Result<EquivalenceVerdict> {
    let mismatch = || Error::AlphabetMismatch(d1.alphabet().to_vec(), d2.alphabet().to_vec());
    if d1.alphabet().len() != d2.alphabet().len() {
        return Err(mismatch());
    }
    let to_right = d1
        .alphabet()
        .iter()
        .map(|s| d2.alphabet().iter().position(|t| t == s))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(mismatch)?;
    let counterexample = shortest_difference(d1, d1.initial(), d2, d2.initial(), &to_right);
    Ok(EquivalenceVerdict { equal: counterexample.is_none(), counterexample })
}

/// Shortest word accepted from exactly one of two states of `d`.
pub fn distinguishing_word(d: &OneWayDfa, p: usize, q: usize) -> Option<Vec<usize>> {
    let ident: Vec<usize> = (0..d.alphabet().len()).collect();
    shortest_difference(d, p, d, q, &ident)
}

/// Anything that decides membership of words over an indexed alphabet.
pub trait Acceptor {
    fn alphabet(&self) -> &[String];
    /// Called once before enumeration.
    fn prepare(&self) -> Result<()> {
        Ok(())
    }
    fn accepts_word(&self, word: &[usize]) -> Result<bool>;
}

impl Acceptor for OneWayDfa {
    fn alphabet(&self) -> &[String] {
        OneWayDfa::alphabet(self)
    }

    fn accepts_word(&self, word: &[usize]) -> Result<bool> {
        self.accepts(word)
    }
}

/// Membership by direct two-way simulation.
impl Acceptor for SweepingPermAutomaton {
    fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    fn prepare(&self) -> Result<()> {
        self.validate().into_result()
    }

    fn accepts_word(&self, word: &[usize]) -> Result<bool> {
        Ok(run_valid(self, word, false)?.verdict.is_accept())
    }
}

/// Number of words of length at most `max_len` over `sigma` symbols,
/// saturating.
pub fn word_count(sigma: usize, max_len: usize) -> u64 {
    let mut total: u64 = 0;
    let mut layer: u64 = 1;
    for _ in 0..=max_len {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(sigma as u64);
    }
    total
}

/// Every accepted word of length at most `max_len`, in length-then-alphabet
/// order.
pub fn bounded_language<A: Acceptor + ?Sized>(
    x: &A,
    max_len: usize,
    budget: u64,
) -> Result<Vec<Vec<usize>>> {
    let sigma = x.alphabet().len();
    let total = word_count(sigma, max_len);
    if total > budget {
        return Err(Error::Budget(format!(
            "{total} words up to length {max_len} exceed the budget of {budget}"
        )));
    }
    x.prepare()?;
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for len in 0..=max_len {
        for w in &layer {
            if x.accepts_word(w)? {
                out.push(w.clone());
            }
        }
        if len < max_len {
            layer = layer
                .iter()
                .flat_map(|w| {
                    (0..sigma).map(move |a| {
                        let mut v = w.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityReport {
    pub input_states: usize,
    pub minimal_states: usize,
    pub input_is_permutation: bool,
    pub minimal_is_permutation: bool,
}

/// Minimizes `d` and reports whether the minimal automaton is still a
/// permutation automaton, as it must be for a group language.
pub fn check_minimal_permutation(d: &OneWayDfa) -> MinimalityReport {
    let min = minimize(d);
    MinimalityReport {
        input_states: d.state_count(),
        minimal_states: min.state_count(),
        input_is_permutation: d.is_permutation(),
        minimal_is_permutation: min.is_permutation(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dfa(alpha: &[&str], initial: usize, rows: Vec<Vec<usize>>, acc: &[bool]) -> OneWayDfa {
        OneWayDfa::new(alpha.iter().map(|s| s.to_string()).collect(), initial, rows, acc.to_vec())
            .unwrap()
    }

    fn parity() -> OneWayDfa {
        dfa(&["a"], 0, vec![vec![1, 0]], &[true, false])
    }

    #[test]
    fn parity_is_already_minimal() {
        assert_eq!(minimize(&parity()), parity());
    }

    #[test]
    fn merges_duplicate_and_drops_unreachable() {
        // 0 -> 1 -> 2 -> 0 on a; 1 and 2 equivalent; 3 unreachable.
        let d = dfa(&["a"], 0, vec![vec![1, 2, 1, 3]], &[true, false, false, true]);
        let m = minimize(&d);
        assert_eq!(m.state_count(), 2);
        assert!(equivalent(&d, &m).unwrap().equal);
        assert_eq!(minimize(&m), m);
    }

    #[test]
    fn parity_vs_universal() {
        let all = dfa(&["a"], 0, vec![vec![0]], &[true]);
        let v = equivalent(&parity(), &all).unwrap();
        assert!(!v.equal);
        assert_eq!(v.counterexample, Some(vec![0]));
    }

    #[test]
    fn alphabet_order_is_irrelevant_but_content_is_not() {
        let d1 = dfa(&["a", "b"], 0, vec![vec![1, 0], vec![0, 1]], &[true, false]);
        let d2 = dfa(&["b", "a"], 0, vec![vec![0, 1], vec![1, 0]], &[true, false]);
        assert!(equivalent(&d1, &d2).unwrap().equal);
        let d3 = dfa(&["a", "c"], 0, vec![vec![1, 0], vec![0, 1]], &[true, false]);
        assert!(matches!(equivalent(&d1, &d3), Err(Error::AlphabetMismatch(..))));
    }

    #[test]
    fn counterexample_is_shortest_and_least() {
        // Accepts words containing at least two b's... over {a, b}: 0 -b-> 1 -b-> 2.
        let d1 = dfa(&["a", "b"], 0, vec![vec![0, 1, 2], vec![1, 2, 2]], &[false, false, true]);
        let none = dfa(&["a", "b"], 0, vec![vec![0], vec![0]], &[false]);
        let v = equivalent(&d1, &none).unwrap();
        assert_eq!(v.counterexample, Some(vec![1, 1]));
    }

    #[test]
    fn bounded_enumeration() {
        let all = dfa(&["a", "b"], 0, vec![vec![0], vec![0]], &[true]);
        assert_eq!(bounded_language(&all, 2, DEFAULT_BUDGET).unwrap().len(), 7);
        let words = bounded_language(&parity(), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(words, vec![vec![], vec![0, 0]]);
        assert!(matches!(bounded_language(&all, 30, DEFAULT_BUDGET), Err(Error::Budget(_))));
    }

    #[test]
    fn word_count_saturates() {
        assert_eq!(word_count(2, 2), 7);
        assert_eq!(word_count(0, 5), 1);
        assert_eq!(word_count(1000, 100), u64::MAX);
    }

    #[test]
    fn minimal_report() {
        let r = check_minimal_permutation(&parity());
        assert_eq!(r.minimal_states, 2);
        assert!(r.minimal_is_permutation);
    }
}
