//! Complete one-way DFAs. A one-way permutation automaton is a [`OneWayDfa`]
//! for which [`OneWayDfa::is_permutation`] holds.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneWayDfa {
    alphabet: Vec<String>,
    initial: usize,
    /// `transitions[symbol][state]`.
    transitions: Vec<Vec<usize>>,
    accepting: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl OneWayDfa {
    pub fn new(
        alphabet: Vec<String>,
        initial: usize,
        transitions: Vec<Vec<usize>>,
        accepting: Vec<bool>,
    ) -> Result<Self> {
        let n = accepting.len();
        if n == 0 {
            return Err(Error::InvalidDfa("a complete dfa needs at least one state".into()));
        }
        if initial >= n {
            return Err(Error::InvalidDfa(format!("initial state {initial} out of range")));
        }
        if transitions.len() != alphabet.len() {
            return Err(Error::InvalidDfa(format!(
                "{} symbols but {} transition tables",
                alphabet.len(),
                transitions.len()
            )));
        }
        for (sym, row) in alphabet.iter().zip(&transitions) {
            if row.len() != n {
                return Err(Error::InvalidDfa(format!(
                    "delta {sym}: expected {n} entries, found {}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|&&t| t >= n) {
                return Err(Error::InvalidDfa(format!("delta {sym}: target {bad} out of range")));
            }
        }
        Ok(OneWayDfa { alphabet, initial, transitions, accepting, labels: None })
    }

    /// The one-state automaton recognising the empty language.
    pub fn empty_language(alphabet: Vec<String>) -> Self {
        let transitions = vec![vec![0]; alphabet.len()];
        OneWayDfa { alphabet, initial: 0, transitions, accepting: vec![false], labels: None }
    }

    /// Attaches one descriptive label per state.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.state_count() {
            return Err(Error::InvalidDfa(format!(
                "{} labels for {} states",
                labels.len(),
                self.state_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    #[inline]
    pub fn step(&self, state: usize, symbol: usize) -> usize {
        self.transitions[symbol][state]
    }

    pub fn table(&self, symbol: usize) -> &[usize] {
        &self.transitions[symbol]
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepting(&self) -> &[bool] {
        &self.accepting
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// State reached from `from` after reading `word`.
    pub fn run_from(&self, from: usize, word: &[usize]) -> Result<usize> {
        word.iter().try_fold(from, |s, &a| {
            self.transitions.get(a).map(|t| t[s]).ok_or(Error::SymbolOutOfRange(a))
        })
    }

    pub fn accepts(&self, word: &[usize]) -> Result<bool> {
        Ok(self.accepting[self.run_from(self.initial, word)?])
    }

    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        crate::automaton::parse_word(&self.alphabet, text)
    }

    /// True iff every symbol permutes the whole state set.
    pub fn is_permutation(&self) -> bool {
        let n = self.state_count();
        self.transitions.iter().all(|row| {
            let mut hit = vec![false; n];
            row.iter().all(|&t| !std::mem::replace(&mut hit[t], true))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> Vec<String> {
        vec!["a".to_string()]
    }

    #[test]
    fn parity_is_permutation() {
        let d = OneWayDfa::new(alpha(), 0, vec![vec![1, 0]], vec![true, false]).unwrap();
        assert!(d.is_permutation());
        assert!(d.accepts(&[0, 0]).unwrap());
        assert!(!d.accepts(&[0]).unwrap());
    }

    #[test]
    fn merging_dfa_is_not_permutation() {
        let d = OneWayDfa::new(alpha(), 0, vec![vec![0, 0]], vec![true, false]).unwrap();
        assert!(!d.is_permutation());
    }

    #[test]
    fn rejects_partial_tables() {
        assert!(OneWayDfa::new(alpha(), 0, vec![vec![0]], vec![true, false]).is_err());
        assert!(OneWayDfa::new(alpha(), 0, vec![vec![2, 0]], vec![true, false]).is_err());
        assert!(OneWayDfa::new(alpha(), 2, vec![vec![0, 0]], vec![true, false]).is_err());
        assert!(OneWayDfa::new(alpha(), 0, vec![], vec![true]).is_err());
    }

    #[test]
    fn empty_language_sentinel() {
        let d = OneWayDfa::empty_language(alpha());
        assert_eq!(d.state_count(), 1);
        assert!(d.is_permutation());
        assert!(!d.accepts(&[]).unwrap());
    }
}
