//! Exact simulation of sweeping runs over `⊢ w ⊣`.

use std::collections::HashSet;
use std::fmt;

use crate::automaton::{Flavor, StateId, SweepingPermAutomaton};
use crate::error::{Error, Result};

/// A state and a head position; position 0 is `⊢`, `len + 1` is `⊣`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub state: StateId,
    pub position: usize,
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.state, self.position)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject,
}

impl Verdict {
    pub fn is_accept(self) -> bool {
        self == Verdict::Accept
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Accept => "accept",
            Verdict::Reject => "reject",
        })
    }
}

/// Where a rejecting run stopped on an undefined end-marker transition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RejectSite {
    AtRight,
    AtLeft,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunResult {
    pub verdict: Verdict,
    /// Every configuration visited, starting with `(q0, 0)`.
    pub trace: Option<Vec<Configuration>>,
    pub reject_site: Option<RejectSite>,
    /// Number of transitions taken.
    pub steps: usize,
}

/// The number of distinct configurations on an input of length `len`.
pub fn step_bound(a: &SweepingPermAutomaton, len: usize) -> usize {
    (a.k_plus + a.k_minus) * (len + 2)
}

/// Runs `a` on `word` (symbol indices). Validates `a` first.
pub fn run(a: &SweepingPermAutomaton, word: &[usize], want_trace: bool) -> Result<RunResult> {
    a.validate().into_result()?;
    run_valid(a, word, want_trace)
}

/// Same as [`run`], with the word given as text.
pub fn run_str(a: &SweepingPermAutomaton, word: &str, want_trace: bool) -> Result<RunResult> {
    let w = a.parse_word(word)?;
    run(a, &w, want_trace)
}

/// Runs an automaton already known to be valid.
pub(crate) fn run_valid(
    a: &SweepingPermAutomaton,
    word: &[usize],
    want_trace: bool,
) -> Result<RunResult> {
    if let Some(&bad) = word.iter().find(|&&s| s >= a.alphabet.len()) {
        return Err(Error::SymbolOutOfRange(bad));
    }
    let n = word.len();
    let mut rec = Recorder {
        bound: step_bound(a, n),
        len: n,
        configs: 0,
        trace: want_trace.then(Vec::new),
        visited: want_trace.then(HashSet::new),
    };
    if !a.initial.is_plus() {
        return Err(Error::Internal("initial state is not right-moving".into()));
    }
    rec.visit(Configuration { state: a.initial, position: 0 })?;

    let Some(first) = a.left_of_initial() else {
        return Ok(rec.finish(Verdict::Reject, Some(RejectSite::AtLeft)));
    };
    let mut state = StateId::Plus(first);
    let mut pos = 1;
    loop {
        rec.visit(Configuration { state, position: pos })?;
        match state {
            StateId::Plus(q) if pos == n + 1 => {
                if a.is_accepting(state) {
                    return Ok(rec.finish(Verdict::Accept, None));
                }
                let Some(r) = a.right_end.get(q) else {
                    return Ok(rec.finish(Verdict::Reject, Some(RejectSite::AtRight)));
                };
                state = StateId::Minus(r);
                pos = n;
            }
            StateId::Plus(q) => {
                state = StateId::Plus(a.delta_plus[word[pos - 1]].apply(q));
                pos += 1;
            }
            StateId::Minus(r) if pos == 0 => {
                if a.flavor == Flavor::Generalized && a.is_accepting(state) {
                    return Ok(rec.finish(Verdict::Accept, None));
                }
                let Some(q) = a.left_of_minus(r) else {
                    return Ok(rec.finish(Verdict::Reject, Some(RejectSite::AtLeft)));
                };
                state = StateId::Plus(q);
                pos = 1;
            }
            StateId::Minus(r) => {
                state = StateId::Minus(a.delta_minus[word[pos - 1]].apply(r));
                pos -= 1;
            }
        }
    }
}

struct Recorder {
    bound: usize,
    len: usize,
    configs: usize,
    trace: Option<Vec<Configuration>>,
    visited: Option<HashSet<Configuration>>,
}

impl Recorder {
    fn visit(&mut self, c: Configuration) -> Result<()> {
        self.configs += 1;
        if self.configs > self.bound {
            return Err(Error::Internal(format!(
                "run exceeded {} configurations on an input of length {}",
                self.bound, self.len
            )));
        }
        if let Some(seen) = self.visited.as_mut() {
            if !seen.insert(c) {
                return Err(Error::Internal(format!("configuration {c} repeated")));
            }
        }
        if let Some(t) = self.trace.as_mut() {
            t.push(c);
        }
        Ok(())
    }

    fn finish(self, verdict: Verdict, reject_site: Option<RejectSite>) -> RunResult {
        RunResult { verdict, trace: self.trace, reject_site, steps: self.configs - 1 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{PartialInjection, Permutation};

    fn one_way(k: usize, delta: Permutation, accepting: &[usize]) -> SweepingPermAutomaton {
        SweepingPermAutomaton {
            flavor: Flavor::Classic,
            alphabet: vec!["a".into()],
            k_plus: k,
            k_minus: 0,
            initial: StateId::Plus(0),
            delta_plus: vec![delta],
            delta_minus: vec![Permutation::identity(0)],
            left_end: PartialInjection::new(vec![Some(0)], k).unwrap(),
            right_end: PartialInjection::empty(k, 0),
            accepting: accepting.iter().map(|&i| StateId::Plus(i)).collect(),
        }
    }

    #[test]
    fn single_state_accepts_everything() {
        let a = one_way(1, Permutation::identity(1), &[0]);
        assert!(run(&a, &[], false).unwrap().verdict.is_accept());
        assert!(run(&a, &[0, 0, 0], false).unwrap().verdict.is_accept());
    }

    #[test]
    fn parity() {
        let a = one_way(2, Permutation::cycle(2), &[0]);
        let r = run(&a, &[0], true).unwrap();
        assert_eq!(r.verdict, Verdict::Reject);
        assert_eq!(r.reject_site, Some(RejectSite::AtRight));
        assert!(run(&a, &[0, 0], false).unwrap().verdict.is_accept());
        let trace = r.trace.unwrap();
        assert_eq!(trace.len(), 3);
        assert_eq!(trace[0], Configuration { state: StateId::Plus(0), position: 0 });
        assert_eq!(trace[2], Configuration { state: StateId::Plus(1), position: 2 });
        assert_eq!(r.steps, 2);
    }

    #[test]
    fn empty_initial_sweep_rejects_at_left() {
        let mut a = one_way(1, Permutation::identity(1), &[0]);
        a.left_end = PartialInjection::empty(1, 1);
        let r = run(&a, &[0], false).unwrap();
        assert_eq!(r.verdict, Verdict::Reject);
        assert_eq!(r.reject_site, Some(RejectSite::AtLeft));
        assert_eq!(r.steps, 0);
    }

    #[test]
    fn out_of_alphabet_symbol_is_an_error() {
        let a = one_way(1, Permutation::identity(1), &[0]);
        assert!(matches!(run(&a, &[3], false), Err(Error::SymbolOutOfRange(3))));
        assert!(matches!(run_str(&a, "ab", false), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn invalid_automaton_is_refused() {
        let a = one_way(2, Permutation::from_targets_unchecked(vec![0, 0]), &[0]);
        assert!(matches!(run(&a, &[0], false), Err(Error::InvalidAutomaton(_))));
    }

    #[test]
    fn sweeps_back_through_minus_states() {
        // q0 -⊣-> r0, r0 -⊢-> q1 (accepting): accepts every word after one return trip.
        let a = SweepingPermAutomaton {
            flavor: Flavor::Classic,
            alphabet: vec!["a".into()],
            k_plus: 2,
            k_minus: 1,
            initial: StateId::Plus(0),
            delta_plus: vec![Permutation::identity(2)],
            delta_minus: vec![Permutation::identity(1)],
            left_end: PartialInjection::new(vec![Some(0), Some(1)], 2).unwrap(),
            right_end: PartialInjection::new(vec![Some(0), None], 1).unwrap(),
            accepting: [StateId::Plus(1)].into_iter().collect(),
        };
        let r = run(&a, &[0, 0], true).unwrap();
        assert!(r.verdict.is_accept());
        let positions: Vec<usize> = r.trace.unwrap().iter().map(|c| c.position).collect();
        assert_eq!(positions, vec![0, 1, 2, 3, 2, 1, 0, 1, 2, 3]);
        assert!(r.steps < step_bound(&a, 2));
    }
}
