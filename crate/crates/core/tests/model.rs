use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sweepperm::analysis::{bounded_language, check_minimal_permutation, DEFAULT_BUDGET};
use sweepperm::format::{parse_automaton, parse_document, render_automaton, render_dfa, Document};
use sweepperm::random::{random_automaton, Shape};
use sweepperm::run::step_bound;
use sweepperm::witness::{build_witness, WitnessParams};
use sweepperm::{run, transform, Flavor, Mode, StateId};

fn shapes() -> impl Strategy<Value = (u64, Shape)> {
    (any::<u64>(), 1usize..=4, 0usize..=4, 0usize..=3, any::<bool>(), any::<bool>()).prop_map(
        |(seed, k, l, sigma, gen, sweep)| {
            let shape = Shape {
                k_plus: k,
                k_minus: l,
                alphabet_len: sigma,
                flavor: if gen { Flavor::Generalized } else { Flavor::Classic },
                initial_sweep: sweep,
            };
            (seed, shape)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn render_then_parse_is_identity((seed, shape) in shapes()) {
        let a = random_automaton(&mut ChaCha8Rng::seed_from_u64(seed), shape);
        let text = render_automaton(&a);
        prop_assert_eq!(&parse_automaton(&text).unwrap(), &a);
        prop_assert_eq!(render_automaton(&parse_automaton(&text).unwrap()), text);
        let d = transform(&a, Mode::Reachable).unwrap().dfa;
        match parse_document(&render_dfa(&d)).unwrap() {
            Document::OneWay(back) => prop_assert_eq!(render_dfa(&back), render_dfa(&d)),
            Document::Sweeping(_) => prop_assert!(false),
        }
    }

    #[test]
    fn traced_runs_never_repeat_and_sweep_monotonically(
        (seed, shape) in shapes(),
        word in proptest::collection::vec(0usize..3, 0..10),
    ) {
        prop_assume!(shape.alphabet_len > 0);
        let a = random_automaton(&mut ChaCha8Rng::seed_from_u64(seed), shape);
        let word: Vec<usize> = word.into_iter().map(|s| s % shape.alphabet_len).collect();
        let r = run(&a, &word, true).unwrap();
        let trace = r.trace.clone().unwrap();
        prop_assert!(r.steps < step_bound(&a, word.len()));
        let mut seen = std::collections::HashSet::new();
        for c in &trace {
            prop_assert!(seen.insert(*c));
        }
        for pair in trace.windows(2) {
            let (from, to) = (pair[0], pair[1]);
            match from.state {
                // Right-moving states only move right except when turning at ⊣.
                StateId::Plus(_) if from.position == word.len() + 1 => {
                    prop_assert!(!to.state.is_plus());
                    prop_assert_eq!(to.position, word.len());
                }
                StateId::Plus(_) => {
                    prop_assert!(to.state.is_plus());
                    prop_assert_eq!(to.position, from.position + 1);
                }
                StateId::Minus(_) if from.position == 0 => {
                    prop_assert!(to.state.is_plus());
                    prop_assert_eq!(to.position, 1);
                }
                StateId::Minus(_) => {
                    prop_assert!(!to.state.is_plus());
                    prop_assert_eq!(to.position + 1, from.position);
                }
            }
        }
        let untraced = run(&a, &word, false).unwrap();
        prop_assert_eq!(untraced.verdict, r.verdict);
        prop_assert_eq!(untraced.steps, r.steps);
    }
}

#[test]
fn witness_runs_agree_with_one_way_automaton_up_to_length_8() {
    let a = build_witness(WitnessParams::new(3, 2, 1).unwrap());
    let d = transform(&a, Mode::Reachable).unwrap().dfa;
    let two_way = bounded_language(&a, 8, DEFAULT_BUDGET).unwrap();
    let one_way = bounded_language(&d, 8, DEFAULT_BUDGET).unwrap();
    assert!(!two_way.is_empty());
    assert_eq!(two_way, one_way);
    assert!(!run(&a, &[], false).unwrap().verdict.is_accept());
}

#[test]
fn minimal_automata_stay_permutation_automata() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..200 {
        let shape = Shape {
            k_plus: 1 + i % 3,
            k_minus: i % 4,
            alphabet_len: 1 + i % 3,
            flavor: Flavor::Classic,
            initial_sweep: true,
        };
        let a = random_automaton(&mut rng, shape);
        let report = check_minimal_permutation(&transform(&a, Mode::Reachable).unwrap().dfa);
        assert!(report.input_is_permutation && report.minimal_is_permutation);
        assert!(report.minimal_states <= report.input_states);
    }
}

#[test]
fn parity_automaton_minimizes_to_two_states() {
    let text = "type: 2perfa\nalphabet: a\nqplus: 2\nqminus: 0\ninitial: q0\naccept: q0\ndelta+ a: 0->1 1->0\nlend: q0->q0\nrend:\n";
    let a = parse_automaton(text).unwrap();
    let report = check_minimal_permutation(&transform(&a, Mode::Reachable).unwrap().dfa);
    assert_eq!(report.minimal_states, 2);
    assert!(report.minimal_is_permutation);
    assert_eq!(render_automaton(&a), text);
}
