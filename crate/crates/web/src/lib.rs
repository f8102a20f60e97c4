//! Browser bindings for the demo page in `www/`. Every export takes plain
//! values and returns a JSON string, so the same functions run natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use sweepperm::analysis::minimize;
use sweepperm::bounds::{self, g};
use sweepperm::format::parse_automaton;
use sweepperm::witness::{build_witness, WitnessParams};
use sweepperm::{run_str, transform, Mode};

/// Largest `n` the table export accepts.
pub const MAX_TABLE_N: usize = 60;

#[derive(Serialize)]
struct Row {
    n: usize,
    f: String,
    phi: String,
    kapoutsis: String,
}

#[derive(Serialize)]
struct WitnessReport {
    k: usize,
    l: usize,
    m: usize,
    g: String,
    reachable: usize,
    minimal: usize,
    permutation: bool,
}

#[derive(Serialize)]
struct Step {
    state: String,
    plus: bool,
    position: usize,
}

#[derive(Serialize)]
struct Trace {
    symbols: Vec<String>,
    steps: Vec<Step>,
    verdict: String,
}

#[derive(Serialize)]
struct Failure {
    error: String,
}

fn respond<T: Serialize>(result: Result<T, String>) -> String {
    let json = match result {
        Ok(v) => serde_json::to_string(&v),
        Err(error) => serde_json::to_string(&Failure { error }),
    };
    json.unwrap_or_else(|e| format!("{{\"error\":\"{e}\"}}"))
}

/// Rows `1..=max_n` of the comparison table; big values are decimal strings.
#[wasm_bindgen]
pub fn bounds_table(max_n: usize) -> String {
    respond(if max_n > MAX_TABLE_N {
        Err(format!("n is limited to {MAX_TABLE_N}"))
    } else {
        Ok(bounds::table(max_n)
            .into_iter()
            .map(|r| Row { n: r.n, f: r.f.to_string(), phi: r.phi.to_string(), kapoutsis: r.kapoutsis.to_string() })
            .collect::<Vec<_>>())
    })
}

/// Builds the witness for `(k, l, m)` and reports its one-way sizes.
#[wasm_bindgen]
pub fn explore_witness(k: usize, l: usize, m: usize) -> String {
    respond((|| {
        if k > 6 {
            return Err("k is limited to 6".to_string());
        }
        let p = WitnessParams::new(k, l, m).map_err(|e| e.to_string())?;
        let d = transform(&build_witness(p), Mode::Reachable).map_err(|e| e.to_string())?.dfa;
        let min = minimize(&d);
        Ok(WitnessReport {
            k,
            l,
            m,
            g: g(k, l, m).map_err(|e| e.to_string())?.to_string(),
            reachable: d.state_count(),
            minimal: min.state_count(),
            permutation: min.is_permutation(),
        })
    })())
}

/// Runs the automaton described by `text` on `word`, returning every
/// configuration for drawing the sweeps.
#[wasm_bindgen]
pub fn trace_run(text: &str, word: &str) -> String {
    respond((|| {
        let a = parse_automaton(text).map_err(|e| e.to_string())?;
        let symbols = a.parse_word(word).map_err(|e| e.to_string())?;
        let r = run_str(&a, word, true).map_err(|e| e.to_string())?;
        Ok(Trace {
            symbols: symbols.iter().map(|&s| a.alphabet[s].clone()).collect(),
            steps: r
                .trace
                .unwrap_or_default()
                .into_iter()
                .map(|c| Step { state: c.state.to_string(), plus: c.state.is_plus(), position: c.position })
                .collect(),
            verdict: r.verdict.to_string(),
        })
    })())
}
