use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use sweepperm::analysis::{bounded_language, equivalent, minimize, DEFAULT_BUDGET};
use sweepperm::automaton::render_word;
use sweepperm::bounds::{self, REFERENCE_TABLE};
use sweepperm::format::{parse_document, render_automaton, render_dfa, render_labels, Document};
use sweepperm::witness::{build_witness, build_witness_forced, WitnessParams};
use sweepperm::{run, transform, Mode, OneWayDfa, Verdict};

/// Sweeping permutation automata toolkit.
#[derive(Parser)]
#[command(name = "sweepperm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an automaton file for structural defects.
    Validate { file: PathBuf },
    /// Run an automaton on a word.
    Run {
        file: PathBuf,
        word: String,
        /// Print every configuration as `state position`.
        #[arg(long)]
        trace: bool,
    },
    /// Convert a sweeping automaton into a one-way permutation automaton.
    Transform {
        file: PathBuf,
        /// Emit every structurally valid state, not only the reachable ones.
        #[arg(long)]
        full: bool,
        #[command(flatten)]
        out: Output,
        /// Write the `(q, f)` label of each state to this file.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Minimize a 1dfa (a 2perfa is transformed first).
    Minimize {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Decide language equivalence of two machines.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        /// Length bound of the brute-force cross-check for two-way inputs.
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Print the lower-bound witness automaton.
    Witness {
        k: usize,
        l: usize,
        m: usize,
        /// Build outside k > l > 0, l >= m > 0 (no minimality promise).
        #[arg(long)]
        force: bool,
    },
    /// Print the comparison table of state-complexity bounds.
    Bounds {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Print the optimal (k, l, m) for n states.
    Optimal { n: usize },
    /// Recompute the reference table for n <= 12 and compare.
    TableCheck,
}

#[derive(Args)]
struct Output {
    #[arg(short = 'o', long = "output")]
    path: Option<PathBuf>,
}

impl Output {
    fn write(&self, text: &str) -> anyhow::Result<()> {
        match &self.path {
            Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
        }
    }
}

/// Success, or a negative answer (reject, not equal, invalid).
enum Outcome {
    Yes,
    No,
}

fn load(path: &Path) -> anyhow::Result<Document> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_document(&text).with_context(|| format!("parsing {}", path.display()))
}

fn one_way(doc: &Document) -> anyhow::Result<OneWayDfa> {
    Ok(match doc {
        Document::OneWay(d) => d.clone(),
        Document::Sweeping(a) => {
            let t = transform(a, Mode::Reachable)?;
            if t.empty_language {
                eprintln!("warning: initial sweep undefined; language is empty");
            }
            t.dfa
        }
    })
}

fn execute(cmd: Command) -> anyhow::Result<Outcome> {
    let mut out = io::stdout().lock();
    match cmd {
        Command::Validate { file } => match load(&file)? {
            Document::Sweeping(a) => {
                let report = a.validate();
                if report.is_ok() {
                    writeln!(out, "ok")?;
                    return Ok(Outcome::Yes);
                }
                for v in &report.violations {
                    writeln!(out, "{v}")?;
                }
                Ok(Outcome::No)
            }
            Document::OneWay(_) => {
                // Parsing already enforces totality of a 1dfa.
                writeln!(out, "ok")?;
                Ok(Outcome::Yes)
            }
        },
        Command::Run { file, word, trace } => {
            let verdict = match load(&file)? {
                Document::Sweeping(a) => {
                    let w = a.parse_word(&word)?;
                    let r = run(&a, &w, trace)?;
                    for c in r.trace.iter().flatten() {
                        writeln!(out, "{c}")?;
                    }
                    r.verdict
                }
                Document::OneWay(d) => {
                    let w = d.parse_word(&word)?;
                    if trace {
                        let mut s = d.initial();
                        writeln!(out, "{s} 0")?;
                        for (i, &a) in w.iter().enumerate() {
                            s = d.step(s, a);
                            writeln!(out, "{s} {}", i + 1)?;
                        }
                    }
                    if d.accepts(&w)? {
                        Verdict::Accept
                    } else {
                        Verdict::Reject
                    }
                }
            };
            writeln!(out, "{verdict}")?;
            Ok(if verdict.is_accept() { Outcome::Yes } else { Outcome::No })
        }
        Command::Transform { file, full, out: dest, labels } => {
            let Document::Sweeping(a) = load(&file)? else {
                bail!("{} is already a 1dfa", file.display());
            };
            let mode = if full { Mode::Full } else { Mode::Reachable };
            let t = transform(&a, mode)?;
            if t.empty_language {
                eprintln!("warning: initial sweep undefined; language is empty");
            }
            eprintln!("{} states, permutation: {}", t.dfa.state_count(), t.dfa.is_permutation());
            dest.write(&render_dfa(&t.dfa))?;
            if let Some(path) = labels {
                fs::write(&path, render_labels(&t.dfa))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(Outcome::Yes)
        }
        Command::Minimize { file, out: dest } => {
            let d = one_way(&load(&file)?)?;
            let min = minimize(&d);
            eprintln!("{} -> {} states", d.state_count(), min.state_count());
            dest.write(&render_dfa(&min))?;
            Ok(Outcome::Yes)
        }
        Command::Equiv { first, second, max_len } => {
            let (x, y) = (load(&first)?, load(&second)?);
            let (dx, dy) = (one_way(&x)?, one_way(&y)?);
            let verdict = equivalent(&dx, &dy)?;
            if matches!(x, Document::Sweeping(_)) || matches!(y, Document::Sweeping(_)) {
                let lx = bounded(&x, max_len)?;
                let mut ly = bounded(&y, max_len)?;
                // Re-index the second language into the first alphabet.
                let names = alphabet(&y).to_vec();
                let map: Vec<usize> = names
                    .iter()
                    .map(|s| alphabet(&x).iter().position(|t| t == s).unwrap_or(usize::MAX))
                    .collect();
                for w in &mut ly {
                    w.iter_mut().for_each(|a| *a = map[*a]);
                }
                ly.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
                let agree = lx == ly;
                eprintln!("bounded check up to length {max_len}: {}", if agree { "agree" } else { "differ" });
                if agree != verdict.equal && verdict.counterexample.as_ref().is_none_or(|w| w.len() <= max_len) {
                    bail!("exact and bounded checks disagree");
                }
            }
            match verdict.counterexample {
                None => {
                    writeln!(out, "equal")?;
                    Ok(Outcome::Yes)
                }
                Some(w) => {
                    writeln!(out, "not-equal \"{}\"", render_word(dx.alphabet(), &w))?;
                    Ok(Outcome::No)
                }
            }
        }
        Command::Witness { k, l, m, force } => {
            let a = if force {
                build_witness_forced(k, l, m)?
            } else {
                build_witness(WitnessParams::new(k, l, m)?)
            };
            out.write_all(render_automaton(&a).as_bytes())?;
            Ok(Outcome::Yes)
        }
        Command::Bounds { max_n, csv } => {
            let sep = if csv { "," } else { " " };
            writeln!(out, "n{sep}F{sep}phi{sep}kapoutsis")?;
            for row in bounds::table(max_n) {
                writeln!(out, "{}{sep}{}{sep}{}{sep}{}", row.n, row.f, row.phi, row.kapoutsis)?;
            }
            Ok(Outcome::Yes)
        }
        Command::Optimal { n } => {
            let brute = bounds::f_of_n(n)?;
            let t = if n >= 8 {
                let closed = bounds::optimal_partition(n)?;
                if closed.value != brute.value {
                    bail!("closed form {} differs from exhaustive maximum {}", closed.value, brute.value);
                }
                closed
            } else {
                brute
            };
            writeln!(out, "n={n} k={} l={} m={} value={}", t.k, t.l, t.m, t.value)?;
            Ok(Outcome::Yes)
        }
        Command::TableCheck => {
            let mut ok = true;
            for (row, &(f, phi, kap)) in bounds::table(REFERENCE_TABLE.len()).iter().zip(&REFERENCE_TABLE) {
                let good = row.f == f.into() && row.phi == phi.into() && row.kapoutsis == kap.into();
                ok &= good;
                let status = if good { "ok" } else { "MISMATCH" };
                writeln!(out, "{} {} {} {} {status}", row.n, row.f, row.phi, row.kapoutsis)?;
            }
            Ok(if ok { Outcome::Yes } else { Outcome::No })
        }
    }
}

fn alphabet(doc: &Document) -> &[String] {
    match doc {
        Document::Sweeping(a) => &a.alphabet,
        Document::OneWay(d) => d.alphabet(),
    }
}

fn bounded(doc: &Document, max_len: usize) -> anyhow::Result<Vec<Vec<usize>>> {
    Ok(match doc {
        Document::Sweeping(a) => bounded_language(a, max_len, DEFAULT_BUDGET)?,
        Document::OneWay(d) => bounded_language(d, max_len, DEFAULT_BUDGET)?,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(cli.command) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
