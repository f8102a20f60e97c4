//! Random valid sweeping permutation automata for sweeps and property tests.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::automaton::{Flavor, StateId, SweepingPermAutomaton};
use crate::perm::{PartialInjection, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub k_plus: usize,
    pub k_minus: usize,
    pub alphabet_len: usize,
    pub flavor: Flavor,
    /// Keep `δ⊢(q0)` defined so the language is not trivially empty.
    pub initial_sweep: bool,
}

fn permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    let mut t: Vec<usize> = (0..n).collect();
    t.shuffle(rng);
    Permutation::from_targets_unchecked(t)
}

/// Random injective partial map; slots in `forced` are always defined.
fn injection<R: Rng + ?Sized>(
    rng: &mut R,
    domain: usize,
    codomain: usize,
    forced: &[usize],
) -> PartialInjection {
    let mut pool: Vec<usize> = (0..codomain).collect();
    pool.shuffle(rng);
    let mut targets = vec![None; domain];
    let mut slots: Vec<usize> = (0..domain).collect();
    slots.shuffle(rng);
    slots.sort_by_key(|s| !forced.contains(s));
    for slot in slots {
        if pool.is_empty() {
            break;
        }
        if forced.contains(&slot) || rng.gen_bool(0.6) {
            targets[slot] = pool.pop();
        }
    }
    PartialInjection::from_targets_unchecked(targets, codomain)
}

/// Samples a valid automaton of the given shape. `k_plus` must be positive.
pub fn random_automaton<R: Rng + ?Sized>(rng: &mut R, shape: Shape) -> SweepingPermAutomaton {
    let Shape { k_plus: k, k_minus: l, alphabet_len, flavor, initial_sweep } = shape;
    assert!(k > 0, "an automaton needs a right-moving state");
    let alphabet: Vec<String> = (0..alphabet_len)
        .map(|i| char::from(b'a' + (i % 26) as u8).to_string() + &"'".repeat(i / 26))
        .collect();
    let delta_plus = (0..alphabet_len).map(|_| permutation(rng, k)).collect();
    let delta_minus = (0..alphabet_len).map(|_| permutation(rng, l)).collect();
    let forced: &[usize] = if initial_sweep { &[0] } else { &[] };
    let left_end = injection(rng, l + 1, k, forced);
    let right_end = injection(rng, k, l, &[]);

    let mut accepting = BTreeSet::new();
    for q in 0..k {
        if right_end.get(q).is_none() && rng.gen_bool(0.5) {
            accepting.insert(StateId::Plus(q));
        }
    }
    if flavor == Flavor::Generalized {
        for r in 0..l {
            if left_end.get(r + 1).is_none() && rng.gen_bool(0.5) {
                accepting.insert(StateId::Minus(r));
            }
        }
    }
    SweepingPermAutomaton {
        flavor,
        alphabet,
        k_plus: k,
        k_minus: l,
        initial: StateId::Plus(rng.gen_range(0..k)),
        delta_plus,
        delta_minus,
        left_end,
        right_end,
        accepting,
    }
}
