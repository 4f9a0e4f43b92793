// SPDX-License-Identifier: Apache-2.0

use proptest::prelude::*;
use trisynth::*;

fn permutation(m: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=m).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_one_line(v).unwrap())
}

fn word(n: usize) -> impl Strategy<Value = TernaryWord> {
    proptest::collection::vec(0u8..3, n).prop_map(|t| TernaryWord::new(t).unwrap())
}

fn distinct_triple(n: usize) -> impl Strategy<Value = (TernaryWord, TernaryWord, TernaryWord)> {
    (word(n), word(n), word(n)).prop_filter("pairwise distinct", |(u, s, t)| u != s && s != t && u != t)
}

fn snt_gate(n: usize) -> impl Strategy<Value = Gate> {
    prop_oneof![
        Just(Gate::Toffoli),
        (1..=n).prop_map(Gate::not),
        (1..n)
            .prop_flat_map(move |i| (Just(i), i + 1..=n))
            .prop_map(|(i, j)| Gate::swap(i, j)),
    ]
}

proptest! {
    #[test]
    fn index_word_roundtrip(n in 1usize..=6, seed in any::<u64>()) {
        let m = symbol_count(n).unwrap();
        let i = (seed as usize % m) + 1;
        let idx = WordIndex::new(i, n).unwrap();
        prop_assert_eq!(word_to_index(&index_to_word(idx, n).unwrap()), idx);
    }

    #[test]
    fn composition_is_associative(
        (p, q, r) in (1usize..=27).prop_flat_map(|m| (permutation(m), permutation(m), permutation(m)))
    ) {
        let left = compose(&compose(&p, &q).unwrap(), &r).unwrap();
        let right = compose(&p, &compose(&q, &r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let id = Permutation::identity(p.len());
        prop_assert_eq!(compose(&id, &p).unwrap(), p.clone());
        prop_assert_eq!(compose(&p, &id).unwrap(), p.clone());
        prop_assert!(compose(&p, &inverse(&p)).unwrap().is_identity());
    }

    #[test]
    fn parity_is_a_homomorphism((p, q) in (2usize..=27).prop_flat_map(|m| (permutation(m), permutation(m)))) {
        prop_assert_eq!(parity(&compose(&p, &q).unwrap()), parity(&p) ^ parity(&q));
    }

    #[test]
    fn cycles_recompose(p in (1usize..=27).prop_flat_map(permutation)) {
        let cycles = cycle_decomposition(&p);
        prop_assert_eq!(Permutation::from_cycles(p.len(), &cycles).unwrap(), p.clone());
        let mut seen = std::collections::HashSet::new();
        for c in &cycles {
            for &s in c.symbols() {
                prop_assert!(seen.insert(s), "cycles overlap at {}", s);
                prop_assert_ne!(p.apply(s), s);
            }
        }
    }

    #[test]
    fn even_permutations_factor_into_three_cycles(p in prop_oneof![permutation(9), permutation(27)]) {
        let even = if p.parity() == Parity::Odd {
            Cycle::new(vec![1, 2]).unwrap().to_permutation(p.len()).unwrap().then(&p).unwrap()
        } else {
            p
        };
        let factors = three_cycle_factorization(&even).unwrap();
        prop_assert!(factors.iter().all(Cycle::is_three_cycle));
        prop_assert_eq!(Permutation::from_cycles(even.len(), &factors).unwrap(), even);
    }

    #[test]
    fn three_cycles_are_local((u, s, t) in (2usize..=3).prop_flat_map(distinct_triple)) {
        let c = synth_three_cycle(&u, &s, &t).unwrap();
        for x in all_words(u.width()).unwrap() {
            let y = c.simulate(&x).unwrap();
            if x == u {
                prop_assert_eq!(y, s.clone());
            } else if x == s {
                prop_assert_eq!(y, t.clone());
            } else if x == t {
                prop_assert_eq!(y, u.clone());
            } else {
                prop_assert_eq!(y, x);
            }
        }
    }

    #[test]
    fn lowering_preserves_denotation(
        (n, gates) in (2usize..=3).prop_flat_map(|n| (Just(n), proptest::collection::vec(snt_gate(n), 0..40)))
    ) {
        let c = Circuit::from_gates(n, gates).unwrap();
        let lowered = lower_to_ncmt(&c);
        prop_assert!(lowered.conforms_to(GateSet::Ncmt));
        prop_assert_eq!(lowered.to_permutation(), c.to_permutation());
        let swaps = c.gate_counts().get(GateKind::Swap);
        prop_assert_eq!(lowered.len(), c.len() + 11 * swaps);
    }

    #[test]
    fn synthesis_is_sound(p in prop_oneof![permutation(9), permutation(27)]) {
        let n = if p.len() == 9 { 2 } else { 3 };
        let report = synthesize(&p, n).unwrap();
        prop_assert_eq!(report.circuit.to_permutation(), p.clone());
        let swaps = report.gate_counts.get(GateKind::Swap);
        prop_assert_eq!(swaps % 2 == 1, p.parity() == Parity::Odd);
        let lowered = synthesize_with(&p, n, GateSet::Ncmt).unwrap();
        prop_assert!(lowered.circuit.conforms_to(GateSet::Ncmt));
        prop_assert_eq!(lowered.circuit.to_permutation(), p);
    }

    #[test]
    fn cancellation_preserves_denotation(
        (n, gates) in (2usize..=3).prop_flat_map(|n| (Just(n), proptest::collection::vec(snt_gate(n), 0..60)))
    ) {
        let c = Circuit::from_gates(n, gates).unwrap();
        let simplified = c.cancel_adjacent_inverses();
        prop_assert!(simplified.len() <= c.len());
        prop_assert_eq!(simplified.to_permutation(), c.to_permutation());
    }
}

#[test]
fn gray_triples_need_no_walk() {
    for n in 2..=3 {
        let gray = gray_sequence(n).unwrap();
        for win in gray.windows(3) {
            let k = hetero_profile(&win[0], &win[1], &win[2]).unwrap().heterogeneous_count();
            assert!(k <= 2);
            let c = match k {
                1 => synth_case1(&win[0], &win[1], &win[2]),
                _ => synth_case2(&win[0], &win[1], &win[2]),
            }
            .unwrap();
            let m = symbol_count(n).unwrap();
            let target = Cycle::three(win[0].index().get(), win[1].index().get(), win[2].index().get())
                .unwrap()
                .to_permutation(m)
                .unwrap();
            assert_eq!(c.to_permutation(), target);
        }
    }
}

#[test]
fn every_three_cycle_is_local_at_width_three() {
    // all 2 * C(27, 3) = 5850 distinct 3-cycles
    let words: Vec<_> = all_words(3).unwrap().collect();
    let mut count = 0;
    for a in 0..27 {
        for b in a + 1..27 {
            for c in b + 1..27 {
                for (s, t) in [(b, c), (c, b)] {
                    let circuit = synth_three_cycle(&words[a], &words[s], &words[t]).unwrap();
                    let target = Cycle::three(a + 1, s + 1, t + 1).unwrap().to_permutation(27).unwrap();
                    assert!(verify(&circuit, &target).unwrap().is_equal());
                    count += 1;
                }
            }
        }
    }
    assert_eq!(count, 5850);
}

#[test]
fn report_summary() {
    let p = Gate::Toffoli.to_permutation(2).unwrap();
    let report = synthesize(&p, 2).unwrap();
    assert_eq!(report.circuit.gates(), &[Gate::Toffoli]);
    assert_eq!(report.three_cycle_count, 1);
    assert_eq!(
        report.case_histogram,
        CaseHistogram {
            case1: 1,
            case2: 0,
            case3: 0
        }
    );
    let text = report.to_string();
    assert!(text.contains("gates: E:0 N:0 T:1 C:0 M:0"), "{text}");
    assert!(text.contains("length: 1"));
    assert!(text.contains("parity: even"));
}
