//! Sweeping permutation automata.
//!
//! A sweeping permutation automaton reads `⊢ w ⊣` in alternating
//! left-to-right and right-to-left sweeps; every symbol acts as a bijection
//! on the right-moving states and on the left-moving states, and the
//! end-markers act as injective partial maps. This crate simulates such
//! automata, converts them into equivalent one-way permutation automata with
//! an optimal number of states, builds the worst-case witnesses, and computes
//! the exact state-complexity bounds.
//!
//! ```
//! use sweepperm::{analysis, transform, witness};
//!
//! let a = witness::build_witness(witness::WitnessParams::new(3, 2, 1)?);
//! let t = transform::transform(&a, transform::Mode::Reachable)?;
//! assert!(t.dfa.is_permutation());
//! assert_eq!(analysis::minimize(&t.dfa).state_count(), 12);
//! # Ok::<(), sweepperm::Error>(())
//! ```

pub mod analysis;
pub mod automaton;
pub mod bounds;
pub mod dfa;
pub mod error;
pub mod format;
pub mod perm;
pub mod random;
pub mod run;
pub mod transform;
pub mod witness;

pub use automaton::{Flavor, StateId, SweepingPermAutomaton, ValidationReport, Violation};
pub use dfa::OneWayDfa;
pub use error::{Error, Result};
pub use perm::{PartialInjection, Permutation};
pub use run::{run, run_str, Configuration, RejectSite, RunResult, Verdict};
pub use transform::{transform, Mode, Outcome, Transformation, TransformedState};
