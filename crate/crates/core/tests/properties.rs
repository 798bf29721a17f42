use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use proptest::prelude::*;

use cocoa_kit::cocoa::{cocoa_complement, Cocoa};
use cocoa_kit::format::{parse_aut, write_aut};
use cocoa_kit::lasso::*;
use cocoa_kit::ops::*;
use cocoa_kit::random::{letters_alphabet, random_chain, random_dcw, random_ncw, seeded};
use cocoa_kit::scc::{scc_decompose, terminal_sccs};
use cocoa_kit::{Alphabet, Automaton, Color};

/// Deterministic automaton from a flat `(target, color)` table.
fn table_dpw(n: usize, al: &Arc<Alphabet>, table: &[(usize, Color)]) -> Automaton {
    let letters = al.len();
    Automaton::deterministic("t", Arc::clone(al), n, 0, |q, a| table[q * letters + a]).unwrap()
}

fn dpw_strategy(max_states: usize, max_color: Color) -> impl Strategy<Value = Automaton> {
    (1..=max_states, 1..=3usize).prop_flat_map(move |(n, l)| {
        prop::collection::vec((0..n, 0..=max_color), n * l)
            .prop_map(move |t| table_dpw(n, &letters_alphabet(l), &t))
    })
}

fn lasso_strategy(letters: usize) -> impl Strategy<Value = LassoWord> {
    (
        prop::collection::vec(0..letters, 0..4),
        prop::collection::vec(0..letters, 1..4),
    )
        .prop_map(|(s, p)| LassoWord::new(s, p).unwrap())
}

fn all_lassos(a: &Automaton) -> impl Iterator<Item = LassoWord> {
    let (s, t) = default_bounds(a.alphabet().len());
    enumerate_lassos(a.alphabet().len(), s, t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn stem_and_loop_presentations_agree(
        (a, w) in dpw_strategy(4, 4).prop_flat_map(|a| {
            let l = a.alphabet().len();
            (Just(a), lasso_strategy(l))
        })
    ) {
        let c = dpw_color(&a, &w).unwrap();
        let mut uv = w.stem().to_vec();
        uv.extend_from_slice(w.period());
        let shifted = LassoWord::new(uv, w.period().to_vec()).unwrap();
        let doubled = LassoWord::new(w.stem().to_vec(), w.period().repeat(2)).unwrap();
        prop_assert_eq!(dpw_color(&a, &shifted).unwrap(), c);
        prop_assert_eq!(dpw_color(&a, &doubled).unwrap(), c);
    }

    #[test]
    fn nondeterministic_evaluation_matches_on_deterministic_input(seed in any::<u64>(), n in 1..=4usize, l in 1..=3usize) {
        let a = random_dcw(&mut seeded(seed), &letters_alphabet(l), n);
        for w in all_lassos(&a) {
            prop_assert_eq!(ncw_accepts(&a, &w).unwrap(), dpw_accepts(&a, &w).unwrap());
        }
    }

    #[test]
    fn breakpoint_construction_preserves_language(seed in any::<u64>(), n in 1..=4usize, l in 1..=2usize) {
        let a = random_ncw(&mut seeded(seed), &letters_alphabet(l), n, 2);
        let d = mh_determinize(&a).unwrap();
        prop_assert!(d.is_deterministic() && d.is_cobuchi());
        prop_assert!(d.state_count() <= 3usize.pow(n as u32));
        for w in all_lassos(&a) {
            prop_assert_eq!(dpw_accepts(&d, &w).unwrap(), ncw_accepts(&a, &w).unwrap());
        }
    }

    #[test]
    fn products_decide_boolean_combinations(seed in any::<u64>(), n in 1..=3usize, m in 1..=3usize, l in 1..=3usize) {
        let al = letters_alphabet(l);
        let mut rng = seeded(seed);
        let a = random_dcw(&mut rng, &al, n);
        let b = random_dcw(&mut rng, &al, m);
        let c = random_dcw(&mut rng, &al, 2);
        let members = [a, b, c];
        let and = dcw_conjunction(&members).unwrap();
        let or = dcw_disjunction(&members).unwrap();
        let prod: usize = members.iter().map(Automaton::state_count).product();
        prop_assert!(and.state_count() <= prod);
        prop_assert!(or.state_count() <= prod * 3);
        for w in all_lassos(&and) {
            let each: Vec<bool> = members.iter().map(|x| dpw_accepts(x, &w).unwrap()).collect();
            prop_assert_eq!(dpw_accepts(&and, &w).unwrap(), each.iter().all(|&v| v));
            prop_assert_eq!(dpw_accepts(&or, &w).unwrap(), each.iter().any(|&v| v));
        }
    }

    #[test]
    fn random_chains_behave(seed in any::<u64>(), l in 1..=3usize) {
        let al = letters_alphabet(l);
        let Some(chain) = random_chain(&mut seeded(seed), &al, 3, 3).unwrap() else {
            return Ok(());
        };
        let det = chain.determinized().unwrap();
        let dpw = cocoa_to_dpw(&chain).unwrap();
        let comp = cocoa_complement(&chain).unwrap();
        for w in all_lassos(&dpw) {
            let color = cocoa_color(&chain, &w).unwrap();
            let members = accepting_members(&chain, &w).unwrap();
            prop_assert_eq!(members, (1..=color).collect::<Vec<_>>());
            prop_assert_eq!(cocoa_accepts(&chain, &w).unwrap(), color.is_multiple_of(2));
            prop_assert_eq!(cocoa_color(&det, &w).unwrap(), color);
            prop_assert_eq!(dpw_color(&dpw, &w).unwrap() as usize, color);
            prop_assert_ne!(cocoa_accepts(&comp, &w).unwrap(), cocoa_accepts(&chain, &w).unwrap());
        }
    }

    #[test]
    fn witnesses_are_sound(a in dpw_strategy(3, 3), b_seed in any::<u64>()) {
        let l = a.alphabet().len();
        let b = random_dcw(&mut seeded(b_seed), &letters_alphabet(l), 2);
        for (pa, pb) in [(true, true), (true, false), (false, true), (false, false)] {
            let ca = if pa { ParityConstraint::accepting(&a) } else { ParityConstraint::rejecting(&a) };
            let cb = if pb { ParityConstraint::accepting(&b) } else { ParityConstraint::rejecting(&b) };
            if let Some(w) = multi_parity_witness(&[ca, cb]).unwrap() {
                prop_assert_eq!(dpw_accepts(&a, &w).unwrap(), pa);
                prop_assert_eq!(dpw_accepts(&b, &w).unwrap(), pb);
            }
        }
    }

    #[test]
    fn residual_count_survives_renaming(a in dpw_strategy(4, 3)) {
        let count = residual_partition(&a).unwrap().class_count();
        let syms = a.alphabet().symbols();
        let rotate: HashMap<String, String> = syms
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), syms[(i + 1) % syms.len()].clone()))
            .collect();
        let back: HashMap<String, String> = rotate.iter().map(|(k, v)| (v.clone(), k.clone())).collect();
        let r = a.rename_letters(&rotate).unwrap();
        prop_assert_eq!(residual_partition(&r).unwrap().class_count(), count);
        prop_assert_eq!(residual_partition(&a.reachable_restrict()).unwrap().class_count(), count);
        prop_assert_eq!(r.rename_letters(&back).unwrap(), a);
    }

    #[test]
    fn residual_classes_are_separated(a in dpw_strategy(4, 3)) {
        let p = residual_partition(&a).unwrap();
        let n = p.class_count();
        prop_assert_eq!(p.separators.len(), n * (n - 1) / 2);
        for (i, j, w) in &p.separators {
            let qi = p.classes[*i][0];
            let qj = p.classes[*j][0];
            prop_assert_ne!(
                dpw_accepts(&a.with_initial(qi), w).unwrap(),
                dpw_accepts(&a.with_initial(qj), w).unwrap()
            );
        }
    }

    #[test]
    fn restriction_is_idempotent(a in dpw_strategy(5, 3)) {
        let r = a.reachable_restrict();
        prop_assert_eq!(r.reachable_restrict(), r.clone());
        prop_assert!(dpw_equivalent(&a, &r).unwrap().holds());
    }

    #[test]
    fn sccs_are_mutual_reachability_classes(a in dpw_strategy(6, 2), mask in 0u8..8) {
        let letters: Vec<usize> = a.alphabet().letters().filter(|&l| mask >> l & 1 == 1).collect();
        let n = a.state_count();
        // reach[p][q]: q reachable from p in one or more steps
        let mut reach = vec![vec![false; n]; n];
        for p in 0..n {
            for &l in &letters {
                reach[p][a.step(p, l).0] = true;
            }
        }
        for m in 0..n {
            for p in 0..n {
                for q in 0..n {
                    if reach[p][m] && reach[m][q] {
                        reach[p][q] = true;
                    }
                }
            }
        }
        let sccs = scc_decompose(&a, &letters);
        let mut seen = BTreeSet::new();
        for s in &sccs {
            for &p in &s.states {
                prop_assert!(seen.insert(p));
                for &q in &s.states {
                    prop_assert!(reach[p][q]);
                }
            }
            for t in &s.transitions {
                prop_assert!(s.contains(t.source) && s.contains(t.target));
            }
        }
        for (p, row) in reach.iter().enumerate() {
            prop_assert_eq!(row[p], seen.contains(&p));
        }
        prop_assert!(!terminal_sccs(&a).is_empty());
    }

    #[test]
    fn text_format_round_trips(a in dpw_strategy(4, 5), seed in any::<u64>()) {
        prop_assert_eq!(parse_aut(&write_aut(&a)).unwrap(), a.clone());
        let n = random_ncw(&mut seeded(seed), a.alphabet(), 3, 3);
        prop_assert_eq!(parse_aut(&write_aut(&n)).unwrap(), n);
    }
}

/// Every pair of two-state deterministic automata over two letters with
/// colors up to 2, checked against brute force over all lassos with stem
/// length at most 4 and loop length at most 6.
#[test]
fn witness_search_is_complete_on_small_pairs() {
    let al = letters_alphabet(2);
    let auts: Vec<Automaton> = (0..6usize.pow(4))
        .map(|mut code| {
            let t: Vec<(usize, Color)> = (0..4)
                .map(|_| {
                    let e = code % 6;
                    code /= 6;
                    (e / 3, (e % 3) as Color)
                })
                .collect();
            table_dpw(2, &al, &t)
        })
        .collect();
    let lassos: Vec<LassoWord> = enumerate_lassos(2, 4, 6).collect();
    let words = lassos.len().div_ceil(64);
    let accepted: Vec<Vec<u64>> = auts
        .iter()
        .map(|a| {
            let mut bits = vec![0u64; words];
            for (i, w) in lassos.iter().enumerate() {
                if dpw_accepts(a, w).unwrap() {
                    bits[i / 64] |= 1 << (i % 64);
                }
            }
            bits
        })
        .collect();
    for (i, a) in auts.iter().enumerate() {
        for (j, b) in auts.iter().enumerate() {
            let brute = accepted[i]
                .iter()
                .zip(&accepted[j])
                .any(|(x, y)| x & !y != 0);
            let found = multi_parity_witness(&[
                ParityConstraint::accepting(a),
                ParityConstraint::rejecting(b),
            ])
            .unwrap()
            .is_some();
            assert_eq!(brute, found, "pair ({i}, {j})");
        }
    }
}

#[test]
fn chain_type_accepts_nondeterministic_members() {
    let al = letters_alphabet(2);
    let n = random_ncw(&mut seeded(3), &al, 3, 2);
    let chain = Cocoa::new("nd", vec![n]).unwrap();
    assert!(chain.determinized().unwrap().members()[0].is_deterministic());
}
