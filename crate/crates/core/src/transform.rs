//! Conversion of a sweeping permutation automaton into an equivalent one-way
//! permutation automaton.
//!
//! After a prefix `u` the one-way machine sits in a state `(q, f)`: `q` is the
//! right-moving state in which the sweeping machine first leaves `⊢u` to the
//! right, and `f` records, for every left-moving state `r` entering the last
//! symbol of `⊢u` from the right, how that excursion ends: leaving to the
//! right in some `q'` ([`Outcome::Exit`]), stopping at `⊢`
//! ([`Outcome::Undefined`]) or, for the generalized flavor, accepting or
//! rejecting at `⊢` ([`Outcome::Accept`], [`Outcome::Reject`]).
//!
//! Reading `a` maps `(q, f)` to `(δa⁺(q), δa⁺ ∘ f ∘ δa⁻)`. Since both `δa⁺`
//! and `δa⁻` are bijections this is a bijection on the set of valid pairs.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::automaton::{Flavor, StateId, SweepingPermAutomaton};
use crate::dfa::OneWayDfa;
use crate::error::{Error, Result};

/// Where an excursion entering the prefix from the right in a left-moving
/// state ends. Variant order is the canonical enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Exit(usize),
    Undefined,
    Accept,
    Reject,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Exit(q) => write!(f, "q{q}"),
            Outcome::Undefined => f.write_str("UNDEF"),
            Outcome::Accept => f.write_str("ACC"),
            Outcome::Reject => f.write_str("REJ"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransformedState {
    pub q: usize,
    /// Indexed by left-moving state.
    pub f: Vec<Outcome>,
}

impl fmt::Display for TransformedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(q{}, {{", self.q)?;
        for (r, o) in self.f.iter().enumerate() {
            if r > 0 {
                f.write_str(", ")?;
            }
            write!(f, "r{r}->{o}")?;
        }
        f.write_str("})")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Breadth-first closure from the initial state.
    #[default]
    Reachable,
    /// Every pair satisfying the structural invariants, in canonical order.
    Full,
}

/// Result of [`transform`]: the DFA and the pair behind each of its states.
#[derive(Clone, Debug)]
pub struct Transformation {
    pub dfa: OneWayDfa,
    /// `states[i]` is DFA state `i`; empty when `empty_language` is set.
    pub states: Vec<TransformedState>,
    /// The initial sweep never starts (`δ⊢(q0)` undefined); `dfa` is the
    /// one-state rejecting automaton.
    pub empty_language: bool,
}

impl Transformation {
    pub fn index_of(&self, s: &TransformedState) -> Option<usize> {
        self.states.iter().position(|t| t == s)
    }
}

fn sentinel(a: &SweepingPermAutomaton, r: usize) -> Outcome {
    match a.flavor {
        Flavor::Classic => Outcome::Undefined,
        Flavor::Generalized if a.is_accepting(StateId::Minus(r)) => Outcome::Accept,
        Flavor::Generalized => Outcome::Reject,
    }
}

pub fn initial_state(a: &SweepingPermAutomaton) -> Result<TransformedState> {
    let q = a.left_of_initial().ok_or(Error::EmptyInitialSweep)?;
    let f = (0..a.k_minus)
        .map(|r| match a.left_of_minus(r) {
            Some(p) => Outcome::Exit(p),
            None => sentinel(a, r),
        })
        .collect();
    Ok(TransformedState { q, f })
}

pub fn step_state(a: &SweepingPermAutomaton, s: &TransformedState, symbol: usize) -> TransformedState {
    let plus = &a.delta_plus[symbol];
    let minus = &a.delta_minus[symbol];
    let f = (0..a.k_minus)
        .map(|r| match s.f[minus.apply(r)] {
            Outcome::Exit(p) => Outcome::Exit(plus.apply(p)),
            other => other,
        })
        .collect();
    TransformedState { q: plus.apply(s.q), f }
}

/// The right-moving states visited at `⊣` from `s`, and whether the run accepts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcceptanceChain {
    pub states: Vec<usize>,
    pub accepting: bool,
}

pub fn acceptance_chain(a: &SweepingPermAutomaton, s: &TransformedState) -> Result<AcceptanceChain> {
    let mut states = vec![s.q];
    let mut seen = vec![false; a.k_plus];
    let mut cur = s.q;
    loop {
        if std::mem::replace(&mut seen[cur], true) {
            return Err(Error::Internal(format!("acceptance chain of {s} revisits q{cur}")));
        }
        if a.is_accepting(StateId::Plus(cur)) {
            return Ok(AcceptanceChain { states, accepting: true });
        }
        let Some(r) = a.right_end.get(cur) else {
            return Ok(AcceptanceChain { states, accepting: false });
        };
        match s.f[r] {
            Outcome::Exit(next) => {
                states.push(next);
                cur = next;
            }
            Outcome::Accept => return Ok(AcceptanceChain { states, accepting: true }),
            Outcome::Undefined | Outcome::Reject => {
                return Ok(AcceptanceChain { states, accepting: false })
            }
        }
    }
}

pub fn is_accepting_state(a: &SweepingPermAutomaton, s: &TransformedState) -> Result<bool> {
    acceptance_chain(a, s).map(|c| c.accepting)
}

/// Checks the structural invariants every reachable pair satisfies.
pub fn check_state(a: &SweepingPermAutomaton, s: &TransformedState) -> Result<(), String> {
    if s.q >= a.k_plus {
        return Err(format!("{s}: q out of range"));
    }
    if s.f.len() != a.k_minus {
        return Err(format!("{s}: f has {} entries, expected {}", s.f.len(), a.k_minus));
    }
    let mut used = vec![false; a.k_plus];
    used[s.q] = true;
    let (mut undefined, mut accept, mut reject) = (0, 0, 0);
    for o in &s.f {
        match *o {
            Outcome::Exit(p) if p >= a.k_plus => return Err(format!("{s}: value out of range")),
            Outcome::Exit(p) => {
                if std::mem::replace(&mut used[p], true) {
                    return Err(format!("{s}: f not injective or hits q"));
                }
            }
            Outcome::Undefined => undefined += 1,
            Outcome::Accept => accept += 1,
            Outcome::Reject => reject += 1,
        }
    }
    let expected = match a.flavor {
        Flavor::Classic => (a.unused_at_left(), 0, 0),
        Flavor::Generalized => (0, a.accepting_minus(), a.unused_at_left()),
    };
    if (undefined, accept, reject) != expected {
        return Err(format!(
            "{s}: (undefined, accept, reject) = {:?}, expected {expected:?}",
            (undefined, accept, reject)
        ));
    }
    Ok(())
}

/// Every pair satisfying [`check_state`], in lexicographic order of `(q, f)`.
pub fn enumerate_states(a: &SweepingPermAutomaton) -> Vec<TransformedState> {
    let (undefined, accept, reject) = match a.flavor {
        Flavor::Classic => (a.unused_at_left(), 0, 0),
        Flavor::Generalized => (0, a.accepting_minus(), a.unused_at_left()),
    };
    let mut out = Vec::new();
    let mut f = Vec::with_capacity(a.k_minus);
    let mut used = vec![false; a.k_plus];
    for q in 0..a.k_plus {
        used[q] = true;
        fill(a.k_plus, a.k_minus, q, [undefined, accept, reject], &mut used, &mut f, &mut out);
        used[q] = false;
    }
    out
}

fn fill(
    k: usize,
    l: usize,
    q: usize,
    left: [usize; 3],
    used: &mut [bool],
    f: &mut Vec<Outcome>,
    out: &mut Vec<TransformedState>,
) {
    let remaining = l - f.len();
    if remaining == 0 {
        if left == [0, 0, 0] {
            out.push(TransformedState { q, f: f.clone() });
        }
        return;
    }
    if left.iter().sum::<usize>() > remaining {
        return;
    }
    for p in 0..k {
        if !used[p] {
            used[p] = true;
            f.push(Outcome::Exit(p));
            fill(k, l, q, left, used, f, out);
            f.pop();
            used[p] = false;
        }
    }
    for (slot, o) in [Outcome::Undefined, Outcome::Accept, Outcome::Reject].into_iter().enumerate() {
        if left[slot] > 0 {
            let mut next = left;
            next[slot] -= 1;
            f.push(o);
            fill(k, l, q, next, used, f, out);
            f.pop();
        }
    }
}

/// Builds the equivalent one-way permutation automaton.
///
/// Every constructed pair is checked against [`check_state`]; a failure is an
/// internal error. If `δ⊢(q0)` is undefined the language is empty and the
/// result is the one-state rejecting DFA with `empty_language` set.
pub fn transform(a: &SweepingPermAutomaton, mode: Mode) -> Result<Transformation> {
    a.validate().into_result()?;
    let start = match initial_state(a) {
        Ok(s) => s,
        Err(Error::EmptyInitialSweep) => {
            return Ok(Transformation {
                dfa: OneWayDfa::empty_language(a.alphabet.clone()),
                states: Vec::new(),
                empty_language: true,
            })
        }
        Err(e) => return Err(e),
    };
    check_state(a, &start).map_err(Error::Internal)?;

    let sigma = a.alphabet.len();
    let (states, index, transitions) = match mode {
        Mode::Reachable => {
            let mut states = vec![start.clone()];
            let mut index = HashMap::from([(start.clone(), 0usize)]);
            let mut transitions = vec![Vec::new(); sigma];
            let mut queue = VecDeque::from([0usize]);
            while let Some(i) = queue.pop_front() {
                for (sym, row) in transitions.iter_mut().enumerate() {
                    let next = step_state(a, &states[i], sym);
                    let j = match index.get(&next) {
                        Some(&j) => j,
                        None => {
                            check_state(a, &next).map_err(Error::Internal)?;
                            let j = states.len();
                            index.insert(next.clone(), j);
                            states.push(next);
                            queue.push_back(j);
                            j
                        }
                    };
                    // Rows are filled in state order because the queue is FIFO.
                    debug_assert_eq!(row.len(), i);
                    row.push(j);
                }
            }
            (states, index, transitions)
        }
        Mode::Full => {
            let states = enumerate_states(a);
            let index: HashMap<TransformedState, usize> =
                states.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
            let mut transitions = vec![Vec::with_capacity(states.len()); sigma];
            for s in &states {
                for (sym, row) in transitions.iter_mut().enumerate() {
                    let next = step_state(a, s, sym);
                    let j = *index.get(&next).ok_or_else(|| {
                        Error::Internal(format!("{next} escapes the enumerated state set"))
                    })?;
                    row.push(j);
                }
            }
            (states, index, transitions)
        }
    };
    let initial = *index
        .get(&start)
        .ok_or_else(|| Error::Internal(format!("initial state {start} was not constructed")))?;
    let accepting = states
        .iter()
        .map(|s| is_accepting_state(a, s))
        .collect::<Result<Vec<_>>>()?;
    let labels = states.iter().map(ToString::to_string).collect();
    let dfa = OneWayDfa::new(a.alphabet.clone(), initial, transitions, accepting)?.with_labels(labels)?;
    Ok(Transformation { dfa, states, empty_language: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{PartialInjection, Permutation};
    use crate::witness::{build_witness, WitnessParams};

    fn witness(k: usize, l: usize, m: usize) -> SweepingPermAutomaton {
        build_witness(WitnessParams::new(k, l, m).unwrap())
    }

    #[test]
    fn witness_321_initial_state() {
        let a = witness(3, 2, 1);
        let s = initial_state(&a).unwrap();
        assert_eq!(s, TransformedState { q: 0, f: vec![Outcome::Exit(1), Outcome::Undefined] });
        assert_eq!(s.to_string(), "(q0, {r0->q1, r1->UNDEF})");
    }

    #[test]
    fn witness_321_step_by_a() {
        let a = witness(3, 2, 1);
        let s = step_state(&a, &initial_state(&a).unwrap(), 0);
        assert_eq!(s, TransformedState { q: 1, f: vec![Outcome::Exit(2), Outcome::Undefined] });
    }

    #[test]
    fn witness_321_rejects_empty_word() {
        let a = witness(3, 2, 1);
        let chain = acceptance_chain(&a, &initial_state(&a).unwrap()).unwrap();
        assert_eq!(chain, AcceptanceChain { states: vec![0, 1], accepting: false });
    }

    #[test]
    fn identity_step_is_identity() {
        let mut a = witness(3, 2, 1);
        a.delta_plus[0] = Permutation::identity(3);
        let s = initial_state(&a).unwrap();
        assert_eq!(step_state(&a, &s, 0), s);
    }

    #[test]
    fn accepting_q_has_chain_of_length_one() {
        let a = witness(3, 2, 1);
        let s = TransformedState { q: 2, f: vec![Outcome::Exit(0), Outcome::Undefined] };
        assert_eq!(acceptance_chain(&a, &s).unwrap().states, vec![2]);
        assert!(is_accepting_state(&a, &s).unwrap());
        let s = TransformedState { q: 0, f: vec![Outcome::Undefined, Outcome::Undefined] };
        assert!(!is_accepting_state(&a, &s).unwrap());
    }

    #[test]
    fn no_minus_states_gives_one_way_copy() {
        let a = SweepingPermAutomaton {
            flavor: Flavor::Classic,
            alphabet: vec!["a".into()],
            k_plus: 3,
            k_minus: 0,
            initial: StateId::Plus(0),
            delta_plus: vec![Permutation::cycle(3)],
            delta_minus: vec![Permutation::identity(0)],
            left_end: PartialInjection::new(vec![Some(1)], 3).unwrap(),
            right_end: PartialInjection::empty(3, 0),
            accepting: [StateId::Plus(0)].into_iter().collect(),
        };
        assert_eq!(initial_state(&a).unwrap(), TransformedState { q: 1, f: vec![] });
        let t = transform(&a, Mode::Full).unwrap();
        assert_eq!(t.dfa.state_count(), 3);
        assert_eq!(t.dfa.initial(), 1);
        assert_eq!(t.dfa.table(0), &[1, 2, 0]);
        assert_eq!(t.dfa.accepting(), &[true, false, false]);
    }

    #[test]
    fn generalized_accepting_minus_state_maps_to_acc() {
        let mut a = witness(3, 2, 1);
        a.flavor = Flavor::Generalized;
        a.accepting.insert(StateId::Minus(1));
        let s = initial_state(&a).unwrap();
        assert_eq!(s.f, vec![Outcome::Exit(1), Outcome::Accept]);
        // ε: q0 -> r0 -> q1 -> r1 -> ⊢ accepts.
        assert!(is_accepting_state(&a, &s).unwrap());
    }

    #[test]
    fn empty_initial_sweep_is_sentinel() {
        let mut a = witness(2, 1, 1);
        a.left_end.set(0, None);
        assert!(matches!(initial_state(&a), Err(Error::EmptyInitialSweep)));
        let t = transform(&a, Mode::Reachable).unwrap();
        assert!(t.empty_language);
        assert_eq!(t.dfa.state_count(), 1);
        assert!(!t.dfa.accepts(&[]).unwrap());
    }

    #[test]
    fn full_enumeration_counts() {
        assert_eq!(enumerate_states(&witness(2, 1, 1)).len(), 2);
        assert_eq!(enumerate_states(&witness(3, 2, 1)).len(), 12);
        let states = enumerate_states(&witness(3, 2, 1));
        let mut sorted = states.clone();
        sorted.sort();
        assert_eq!(states, sorted);
    }
}
