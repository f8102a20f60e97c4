//! Line-oriented text format for sweeping automata and one-way DFAs.
//!
//! ```text
//! # witness (2, 1, 1)
//! type: 2perfa
//! alphabet: a b c d
//! qplus: 2
//! qminus: 1
//! initial: q0
//! accept: q1
//! delta+ a: 0->1 1->0
//! delta- a: 0->0
//! lend: q0->q0
//! rend: q0->r0
//! ```
//!
//! `delta+`/`delta-`/`delta` lines list every source index; `lend`/`rend`
//! omit undefined pairs. A `1dfa` file uses `states: <n>`, `initial: <i>`,
//! `accept: <i> ...` and `delta <sym>: i->j ...`.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write;

use crate::automaton::{Flavor, StateId, SweepingPermAutomaton};
use crate::dfa::OneWayDfa;
use crate::error::{Error, Result};
use crate::perm::{PartialInjection, Permutation};

/// Either kind of machine the format can hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Sweeping(SweepingPermAutomaton),
    OneWay(OneWayDfa),
}

struct Line<'a> {
    number: usize,
    value: &'a str,
}

struct Fields<'a> {
    items: HashMap<String, Line<'a>>,
    last_line: usize,
}

impl<'a> Fields<'a> {
    fn collect(text: &'a str) -> Result<Self> {
        let mut items = HashMap::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let number = i + 1;
            last_line = number;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(number, format!("expected `key: value`, got `{line}`")))?;
            let key = key.split_whitespace().collect::<Vec<_>>().join(" ");
            if key.is_empty() {
                return Err(Error::parse(number, "empty key"));
            }
            if items.contains_key(&key) {
                return Err(Error::parse(number, format!("duplicate `{key}:` line")));
            }
            items.insert(key, Line { number, value: value.trim() });
        }
        Ok(Fields { items, last_line })
    }

    fn take(&mut self, key: &str) -> Option<Line<'a>> {
        self.items.remove(key)
    }

    fn require(&mut self, key: &str) -> Result<Line<'a>> {
        self.take(key).ok_or_else(|| {
            Error::parse(self.last_line + 1, format!("missing `{key}:` line"))
        })
    }

    fn finish(self) -> Result<()> {
        match self.items.into_iter().min_by_key(|(_, l)| l.number) {
            None => Ok(()),
            Some((key, line)) => Err(Error::parse(line.number, format!("unexpected `{key}:` line"))),
        }
    }
}

fn parse_count(line: &Line) -> Result<usize> {
    line.value
        .parse()
        .map_err(|_| Error::parse(line.number, format!("expected a count, got `{}`", line.value)))
}

fn parse_alphabet(line: &Line) -> Result<Vec<String>> {
    let symbols: Vec<String> = line.value.split_whitespace().map(str::to_string).collect();
    let mut seen = BTreeSet::new();
    for s in &symbols {
        if s.contains("->") {
            return Err(Error::parse(line.number, format!("bad symbol name `{s}`")));
        }
        if !seen.insert(s) {
            return Err(Error::parse(line.number, format!("symbol `{s}` listed twice")));
        }
    }
    Ok(symbols)
}

fn parse_pairs<'b>(line: &Line<'b>) -> Result<Vec<(&'b str, &'b str)>> {
    line.value
        .split_whitespace()
        .map(|tok| {
            tok.split_once("->")
                .filter(|(a, b)| !a.is_empty() && !b.is_empty())
                .ok_or_else(|| Error::parse(line.number, format!("expected `i->j`, got `{tok}`")))
        })
        .collect()
}

fn parse_index(line: &Line, tok: &str, bound: usize) -> Result<usize> {
    let i: usize = tok
        .parse()
        .map_err(|_| Error::parse(line.number, format!("expected an index, got `{tok}`")))?;
    if i >= bound {
        return Err(Error::parse(line.number, format!("index {i} out of range (< {bound})")));
    }
    Ok(i)
}

fn parse_state(line: &Line, tok: &str, k_plus: usize, k_minus: usize) -> Result<StateId> {
    let (side, digits) = tok.split_at(tok.chars().next().map_or(0, char::len_utf8));
    let idx: usize = digits
        .parse()
        .map_err(|_| Error::parse(line.number, format!("bad state name `{tok}`")))?;
    let (state, bound) = match side {
        "q" => (StateId::Plus(idx), k_plus),
        "r" => (StateId::Minus(idx), k_minus),
        _ => return Err(Error::parse(line.number, format!("bad state name `{tok}`"))),
    };
    if idx >= bound {
        return Err(Error::parse(line.number, format!("state `{tok}` out of range")));
    }
    Ok(state)
}

/// A full table `i->j` for every `i < n`, targets `< n`.
fn parse_table(line: &Line, n: usize) -> Result<Vec<usize>> {
    let mut table = vec![None; n];
    for (src, dst) in parse_pairs(line)? {
        let i = parse_index(line, src, n)?;
        let j = parse_index(line, dst, n)?;
        if table[i].replace(j).is_some() {
            return Err(Error::parse(line.number, format!("source {i} listed twice")));
        }
    }
    table
        .into_iter()
        .enumerate()
        .map(|(i, t)| t.ok_or_else(|| Error::parse(line.number, format!("missing pair for source {i}"))))
        .collect()
}

fn parse_type(fields: &mut Fields) -> Result<&'static str> {
    let line = fields.require("type")?;
    match line.value {
        "2perfa" => Ok("2perfa"),
        "2perfa-gen" => Ok("2perfa-gen"),
        "1dfa" => Ok("1dfa"),
        other => Err(Error::parse(line.number, format!("unknown type `{other}`"))),
    }
}

pub fn parse_document(text: &str) -> Result<Document> {
    let mut fields = Fields::collect(text)?;
    let doc = match parse_type(&mut fields)? {
        "1dfa" => Document::OneWay(dfa_from_fields(&mut fields)?),
        "2perfa" => Document::Sweeping(sweeping_from_fields(&mut fields, Flavor::Classic)?),
        _ => Document::Sweeping(sweeping_from_fields(&mut fields, Flavor::Generalized)?),
    };
    fields.finish()?;
    Ok(doc)
}

pub fn parse_automaton(text: &str) -> Result<SweepingPermAutomaton> {
    match parse_document(text)? {
        Document::Sweeping(a) => Ok(a),
        Document::OneWay(_) => Err(Error::parse(1, "expected a 2perfa, found a 1dfa")),
    }
}

pub fn parse_dfa(text: &str) -> Result<OneWayDfa> {
    match parse_document(text)? {
        Document::OneWay(d) => Ok(d),
        Document::Sweeping(_) => Err(Error::parse(1, "expected a 1dfa, found a 2perfa")),
    }
}

fn sweeping_from_fields(fields: &mut Fields, flavor: Flavor) -> Result<SweepingPermAutomaton> {
    let alphabet = parse_alphabet(&fields.require("alphabet")?)?;
    let k_plus = parse_count(&fields.require("qplus")?)?;
    let k_minus = parse_count(&fields.require("qminus")?)?;

    let line = fields.require("initial")?;
    let initial = parse_state(&line, line.value, k_plus, k_minus)?;

    let mut accepting = BTreeSet::new();
    if let Some(line) = fields.take("accept") {
        for tok in line.value.split_whitespace() {
            accepting.insert(parse_state(&line, tok, k_plus, k_minus)?);
        }
    }

    let mut delta_plus = Vec::with_capacity(alphabet.len());
    let mut delta_minus = Vec::with_capacity(alphabet.len());
    for sym in &alphabet {
        let line = fields.require(&format!("delta+ {sym}"))?;
        delta_plus.push(Permutation::from_targets_unchecked(parse_table(&line, k_plus)?));
        let minus = match fields.take(&format!("delta- {sym}")) {
            Some(line) => parse_table(&line, k_minus)?,
            None if k_minus == 0 => Vec::new(),
            None => return Err(Error::parse(fields.last_line + 1, format!("missing `delta- {sym}:` line"))),
        };
        delta_minus.push(Permutation::from_targets_unchecked(minus));
    }

    let mut left = vec![None; k_minus + 1];
    if let Some(line) = fields.take("lend") {
        for (src, dst) in parse_pairs(&line)? {
            let slot = match parse_state(&line, src, k_plus, k_minus)? {
                s if s == initial => 0,
                StateId::Minus(r) => r + 1,
                StateId::Plus(_) => {
                    return Err(Error::parse(
                        line.number,
                        format!("lend source `{src}` is neither the initial state nor left-moving"),
                    ))
                }
            };
            let target = match parse_state(&line, dst, k_plus, k_minus)? {
                StateId::Plus(q) => q,
                StateId::Minus(_) => {
                    return Err(Error::parse(line.number, format!("lend target `{dst}` is not right-moving")))
                }
            };
            if left[slot].replace(target).is_some() {
                return Err(Error::parse(line.number, format!("source `{src}` listed twice")));
            }
        }
    }

    let mut right = vec![None; k_plus];
    if let Some(line) = fields.take("rend") {
        for (src, dst) in parse_pairs(&line)? {
            let (StateId::Plus(q), StateId::Minus(r)) = (
                parse_state(&line, src, k_plus, k_minus)?,
                parse_state(&line, dst, k_plus, k_minus)?,
            ) else {
                return Err(Error::parse(line.number, format!("rend pair `{src}->{dst}` must map q to r")));
            };
            if right[q].replace(r).is_some() {
                return Err(Error::parse(line.number, format!("source `{src}` listed twice")));
            }
        }
    }

    Ok(SweepingPermAutomaton {
        flavor,
        alphabet,
        k_plus,
        k_minus,
        initial,
        delta_plus,
        delta_minus,
        left_end: PartialInjection::from_targets_unchecked(left, k_plus),
        right_end: PartialInjection::from_targets_unchecked(right, k_minus),
        accepting,
    })
}

fn dfa_from_fields(fields: &mut Fields) -> Result<OneWayDfa> {
    let alphabet = parse_alphabet(&fields.require("alphabet")?)?;
    let states_line = fields.require("states")?;
    let n = parse_count(&states_line)?;
    if n == 0 {
        return Err(Error::parse(states_line.number, "a complete dfa needs at least one state"));
    }
    let line = fields.require("initial")?;
    let initial = parse_index(&line, line.value, n)?;
    let mut accepting = vec![false; n];
    if let Some(line) = fields.take("accept") {
        for tok in line.value.split_whitespace() {
            accepting[parse_index(&line, tok, n)?] = true;
        }
    }
    let mut transitions = Vec::with_capacity(alphabet.len());
    for sym in &alphabet {
        transitions.push(parse_table(&fields.require(&format!("delta {sym}"))?, n)?);
    }
    OneWayDfa::new(alphabet, initial, transitions, accepting)
}

fn write_alphabet(out: &mut String, alphabet: &[String]) {
    out.push_str("alphabet:");
    for sym in alphabet {
        out.push(' ');
        out.push_str(sym);
    }
    out.push('\n');
}

fn write_table(out: &mut String, key: &str, table: &[usize]) {
    out.push_str(key);
    out.push(':');
    for (i, t) in table.iter().enumerate() {
        let _ = write!(out, " {i}->{t}");
    }
    out.push('\n');
}

pub fn render_automaton(a: &SweepingPermAutomaton) -> String {
    let mut out = String::new();
    let kind = match a.flavor {
        Flavor::Classic => "2perfa",
        Flavor::Generalized => "2perfa-gen",
    };
    let _ = writeln!(out, "type: {kind}");
    write_alphabet(&mut out, &a.alphabet);
    let _ = writeln!(out, "qplus: {}", a.k_plus);
    let _ = writeln!(out, "qminus: {}", a.k_minus);
    let _ = writeln!(out, "initial: {}", a.initial);
    out.push_str("accept:");
    for s in &a.accepting {
        let _ = write!(out, " {s}");
    }
    out.push('\n');
    for (sym, p) in a.alphabet.iter().zip(&a.delta_plus) {
        write_table(&mut out, &format!("delta+ {sym}"), p.targets());
    }
    if a.k_minus > 0 {
        for (sym, p) in a.alphabet.iter().zip(&a.delta_minus) {
            write_table(&mut out, &format!("delta- {sym}"), p.targets());
        }
    }
    out.push_str("lend:");
    for (slot, t) in a.left_end.targets().iter().enumerate() {
        if let Some(t) = t {
            let src = if slot == 0 { a.initial } else { StateId::Minus(slot - 1) };
            let _ = write!(out, " {src}->{}", StateId::Plus(*t));
        }
    }
    out.push('\n');
    out.push_str("rend:");
    for (q, t) in a.right_end.targets().iter().enumerate() {
        if let Some(t) = t {
            let _ = write!(out, " {}->{}", StateId::Plus(q), StateId::Minus(*t));
        }
    }
    out.push('\n');
    out
}

pub fn render_dfa(d: &OneWayDfa) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type: 1dfa");
    write_alphabet(&mut out, d.alphabet());
    let _ = writeln!(out, "states: {}", d.state_count());
    let _ = writeln!(out, "initial: {}", d.initial());
    out.push_str("accept:");
    for (i, _) in d.accepting().iter().enumerate().filter(|(_, &acc)| acc) {
        let _ = write!(out, " {i}");
    }
    out.push('\n');
    for (s, sym) in d.alphabet().iter().enumerate() {
        write_table(&mut out, &format!("delta {sym}"), d.table(s));
    }
    out
}

/// Side table: one `index<TAB>label` line per state.
pub fn render_labels(d: &OneWayDfa) -> String {
    let mut out = String::new();
    if let Some(labels) = d.labels() {
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "{i}\t{l}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const PARITY: &str = "
type: 2perfa
alphabet: a
qplus: 2
qminus: 0
initial: q0
accept: q0
delta+ a: 0->1 1->0   # swap
lend: q0->q0
";

    #[test]
    fn parses_parity_permutation() {
        let a = parse_automaton(PARITY).unwrap();
        assert_eq!(a.delta_plus[0], Permutation::cycle(2));
        assert!(a.validate().is_ok());
        assert_eq!(parse_automaton(&render_automaton(&a)).unwrap(), a);
    }

    #[test]
    fn missing_initial_is_a_parse_error() {
        let text = PARITY.replace("initial: q0\n", "");
        match parse_automaton(&text) {
            Err(Error::Parse { message, .. }) => assert!(message.contains("initial")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = PARITY.replace("1->0   # swap", "1->2");
        match parse_automaton(&text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 8),
            other => panic!("unexpected {other:?}"),
        }
        let text = PARITY.replace("delta+ a: 0->1 1->0", "delta+ z: 0->1 1->0");
        assert!(matches!(parse_automaton(&text), Err(Error::Parse { .. })));
        let text = PARITY.replace("delta+ a: 0->1 1->0", "delta+ a: 0->1");
        assert!(matches!(parse_automaton(&text), Err(Error::Parse { line: 8, .. })));
    }

    #[test]
    fn non_bijective_table_parses_but_fails_validation() {
        let text = PARITY.replace("0->1 1->0", "0->0 1->0");
        let a = parse_automaton(&text).unwrap();
        assert!(!a.validate().is_ok());
    }

    #[test]
    fn dfa_round_trip() {
        let text = "type: 1dfa\nalphabet: a b\nstates: 2\ninitial: 0\naccept: 1\ndelta a: 0->1 1->0\ndelta b: 0->0 1->1\n";
        let d = parse_dfa(text).unwrap();
        assert_eq!(render_dfa(&d), text);
        assert!(d.accepts(&[0, 1]).unwrap());
    }

    #[test]
    fn lend_uses_initial_name() {
        let text = PARITY.replace("lend: q0->q0", "lend: q1->q0");
        assert!(parse_automaton(&text).is_err());
    }
}
