//! The sweeping permutation automaton data model and its structural checks.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{PartialInjection, Permutation};

/// A state of a sweeping automaton: right-moving (`Plus`, printed `q<i>`) or
/// left-moving (`Minus`, printed `r<i>`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StateId {
    Plus(usize),
    Minus(usize),
}

impl StateId {
    pub fn index(self) -> usize {
        match self {
            StateId::Plus(i) | StateId::Minus(i) => i,
        }
    }

    pub fn is_plus(self) -> bool {
        matches!(self, StateId::Plus(_))
    }
}

impl fmt::Display for StateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateId::Plus(i) => write!(f, "q{i}"),
            StateId::Minus(i) => write!(f, "r{i}"),
        }
    }
}

/// Classic automata accept only at the right end-marker; generalized ones
/// may also accept at the left end-marker in a left-moving state.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Flavor {
    #[default]
    Classic,
    Generalized,
}

/// Which direction a transition table belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "delta+",
            Side::Minus => "delta-",
        })
    }
}

/// A sweeping permutation automaton.
///
/// Fields are public and unchecked; [`SweepingPermAutomaton::validate`]
/// reports every structural defect. The left end-marker map has `k_minus + 1`
/// slots: slot 0 is the initial state, slot `i + 1` is `r<i>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepingPermAutomaton {
    pub flavor: Flavor,
    pub alphabet: Vec<String>,
    pub k_plus: usize,
    pub k_minus: usize,
    pub initial: StateId,
    /// One bijection on `Q+` per symbol, in alphabet order.
    pub delta_plus: Vec<Permutation>,
    /// One bijection on `Q-` per symbol, in alphabet order.
    pub delta_minus: Vec<Permutation>,
    pub left_end: PartialInjection,
    pub right_end: PartialInjection,
    pub accepting: BTreeSet<StateId>,
}

/// One structural defect found by validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateSymbol(String),
    NoPlusStates,
    InitialNotPlus(StateId),
    InitialOutOfRange(StateId),
    TableCount { side: Side, expected: usize, found: usize },
    TableLength { side: Side, symbol: String, expected: usize, found: usize },
    NotBijective { side: Side, symbol: String },
    EndShape { marker: &'static str, expected: (usize, usize), found: (usize, usize) },
    EndOutOfRange { marker: &'static str, source: String },
    EndNotInjective { marker: &'static str, first: String, second: String },
    AcceptingOutOfRange(StateId),
    AcceptingMinusInClassic(StateId),
    AcceptingLeavesRight(StateId),
    AcceptingMinusLeavesLeft(StateId),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            DuplicateSymbol(s) => write!(f, "symbol {s} listed twice"),
            NoPlusStates => write!(f, "qplus must be at least 1"),
            InitialNotPlus(s) => write!(f, "initial state {s} is not right-moving"),
            InitialOutOfRange(s) => write!(f, "initial state {s} out of range"),
            TableCount { side, expected, found } => {
                write!(f, "{side}: expected {expected} tables, found {found}")
            }
            TableLength { side, symbol, expected, found } => {
                write!(f, "{side} {symbol}: expected {expected} entries, found {found}")
            }
            NotBijective { side, symbol } => write!(f, "{side} {symbol} not bijective"),
            EndShape { marker, expected, found } => write!(
                f,
                "{marker}: expected domain/codomain {expected:?}, found {found:?}"
            ),
            EndOutOfRange { marker, source } => {
                write!(f, "{marker}: target of {source} out of range")
            }
            EndNotInjective { marker, first, second } => {
                write!(f, "{marker} not injective: {first} and {second} share a target")
            }
            AcceptingOutOfRange(s) => write!(f, "accepting state {s} out of range"),
            AcceptingMinusInClassic(s) => {
                write!(f, "accepting state {s} is left-moving in a classic automaton")
            }
            AcceptingLeavesRight(s) => {
                write!(f, "accepting state {s} has a right end-marker transition")
            }
            AcceptingMinusLeavesLeft(s) => {
                write!(f, "accepting state {s} has a left end-marker transition")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidAutomaton(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl SweepingPermAutomaton {
    pub fn symbol_index(&self, name: &str) -> Option<usize> {
        self.alphabet.iter().position(|s| s == name)
    }

    /// Splits `text` into symbol indices: on whitespace if it contains any,
    /// otherwise one character per symbol.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        parse_word(&self.alphabet, text)
    }

    /// `δ⊢(q0)`.
    pub fn left_of_initial(&self) -> Option<usize> {
        self.left_end.get(0)
    }

    /// `δ⊢(r)` for a left-moving state.
    pub fn left_of_minus(&self, r: usize) -> Option<usize> {
        self.left_end.get(r + 1)
    }

    pub fn is_accepting(&self, s: StateId) -> bool {
        self.accepting.contains(&s)
    }

    /// Left-moving states without a left end-marker transition, accepting or not.
    pub fn unused_at_left_total(&self) -> usize {
        (0..self.k_minus).filter(|&r| self.left_of_minus(r).is_none()).count()
    }

    /// `m`: left-moving states with no left end-marker transition that are not
    /// accepting.
    pub fn unused_at_left(&self) -> usize {
        (0..self.k_minus)
            .filter(|&r| self.left_of_minus(r).is_none() && !self.is_accepting(StateId::Minus(r)))
            .count()
    }

    /// `e`: accepting left-moving states.
    pub fn accepting_minus(&self) -> usize {
        self.accepting.iter().filter(|s| !s.is_plus()).count()
    }

    /// `(k, l, m)` with `m` counting every left-moving state that cannot turn
    /// at the left end-marker.
    pub fn shape(&self) -> (usize, usize, usize) {
        (self.k_plus, self.k_minus, self.unused_at_left_total())
    }

    pub fn validate(&self) -> ValidationReport {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for s in &self.alphabet {
            if !seen.insert(s) {
                out.push(Violation::DuplicateSymbol(s.clone()));
            }
        }
        if self.k_plus == 0 {
            out.push(Violation::NoPlusStates);
        }
        match self.initial {
            StateId::Minus(_) => out.push(Violation::InitialNotPlus(self.initial)),
            StateId::Plus(i) if i >= self.k_plus => {
                out.push(Violation::InitialOutOfRange(self.initial))
            }
            _ => {}
        }
        for (side, tables, n) in [
            (Side::Plus, &self.delta_plus, self.k_plus),
            (Side::Minus, &self.delta_minus, self.k_minus),
        ] {
            if tables.len() != self.alphabet.len() {
                out.push(Violation::TableCount {
                    side,
                    expected: self.alphabet.len(),
                    found: tables.len(),
                });
            }
            for (sym, p) in self.alphabet.iter().zip(tables.iter()) {
                if p.len() != n {
                    out.push(Violation::TableLength {
                        side,
                        symbol: sym.clone(),
                        expected: n,
                        found: p.len(),
                    });
                } else if !p.is_bijection() {
                    out.push(Violation::NotBijective { side, symbol: sym.clone() });
                }
            }
        }
        self.check_end("lend", &self.left_end, (self.k_minus + 1, self.k_plus), &mut out);
        self.check_end("rend", &self.right_end, (self.k_plus, self.k_minus), &mut out);
        for &s in &self.accepting {
            match s {
                StateId::Plus(i) if i >= self.k_plus => out.push(Violation::AcceptingOutOfRange(s)),
                StateId::Minus(i) if i >= self.k_minus => {
                    out.push(Violation::AcceptingOutOfRange(s))
                }
                StateId::Plus(i) => {
                    if self.right_end.get(i).is_some() {
                        out.push(Violation::AcceptingLeavesRight(s));
                    }
                }
                StateId::Minus(i) => {
                    if self.flavor == Flavor::Classic {
                        out.push(Violation::AcceptingMinusInClassic(s));
                    } else if self.left_of_minus(i).is_some() {
                        out.push(Violation::AcceptingMinusLeavesLeft(s));
                    }
                }
            }
        }
        ValidationReport { violations: out }
    }

    fn check_end(
        &self,
        marker: &'static str,
        map: &PartialInjection,
        expected: (usize, usize),
        out: &mut Vec<Violation>,
    ) {
        let found = (map.domain_len(), map.codomain_len());
        if found != expected {
            out.push(Violation::EndShape { marker, expected, found });
            return;
        }
        let name = |slot: usize| -> String {
            if marker == "lend" {
                if slot == 0 {
                    self.initial.to_string()
                } else {
                    StateId::Minus(slot - 1).to_string()
                }
            } else {
                StateId::Plus(slot).to_string()
            }
        };
        if let Some(slot) = map.out_of_range() {
            out.push(Violation::EndOutOfRange { marker, source: name(slot) });
        }
        if let Some((a, b)) = map.collision() {
            out.push(Violation::EndNotInjective { marker, first: name(a), second: name(b) });
        }
    }
}

pub(crate) fn parse_word(alphabet: &[String], text: &str) -> Result<Vec<usize>> {
    let lookup = |tok: &str| {
        alphabet
            .iter()
            .position(|s| s == tok)
            .ok_or_else(|| Error::UnknownSymbol(tok.to_string()))
    };
    if text.chars().any(char::is_whitespace) {
        text.split_whitespace().map(lookup).collect()
    } else {
        let mut buf = [0u8; 4];
        text.chars().map(|c| lookup(c.encode_utf8(&mut buf))).collect()
    }
}

/// Renders a word back to text: concatenated when every symbol is a single
/// character, space separated otherwise.
pub fn render_word(alphabet: &[String], word: &[usize]) -> String {
    let compact = alphabet.iter().all(|s| s.chars().count() == 1);
    let parts: Vec<&str> = word.iter().map(|&i| alphabet[i].as_str()).collect();
    if compact {
        parts.concat()
    } else {
        parts.join(" ")
    }
}
