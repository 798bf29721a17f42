//! Seeded random automata and chains for property tests and tables.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::automaton::{Alphabet, Automaton, AutomatonBuilder, State};
use crate::cocoa::{chain_validate, Cocoa};
use crate::error::Result;

/// The generator used everywhere a seed is accepted.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Alphabet `a, b, c, …` with `len` symbols (`len <= 26`).
pub fn letters_alphabet(len: usize) -> Arc<Alphabet> {
    assert!((1..=26).contains(&len));
    let symbols = (b'a'..).take(len).map(|c| (c as char).to_string());
    Arc::new(Alphabet::new(symbols).expect("distinct single letters"))
}

/// Co-Büchi automaton with `n` states. Each `(state, letter)` gets one
/// uniformly chosen color and 1 to `max_succ` distinct targets.
pub fn random_ncw(
    rng: &mut impl Rng,
    alphabet: &Arc<Alphabet>,
    n: usize,
    max_succ: usize,
) -> Automaton {
    let mut b = AutomatonBuilder::new("rand-ncw", Arc::clone(alphabet), n);
    for q in 0..n {
        for a in alphabet.letters() {
            let color = rng.random_range(1..=2);
            let succ = rng.random_range(1..=max_succ.clamp(1, n));
            for _ in 0..succ {
                b.add(q, a, color, rng.random_range(0..n));
            }
        }
    }
    b.build().expect("generated automaton is complete")
}

/// Deterministic co-Büchi automaton with `n` states.
pub fn random_dcw(rng: &mut impl Rng, alphabet: &Arc<Alphabet>, n: usize) -> Automaton {
    random_ncw(rng, alphabet, n, 1).with_name("rand-dcw")
}

/// Copy of `aut` with the accepting edge at `(q, a)` made rejecting.
fn reject_edge(aut: &Automaton, q: State, a: usize) -> Automaton {
    let mut b = AutomatonBuilder::new(aut.name(), Arc::clone(aut.alphabet()), aut.state_count());
    b.initial(aut.initial());
    for t in aut.transitions() {
        let color = if (t.source, t.letter) == (q, a) {
            1
        } else {
            t.color
        };
        b.add(t.source, t.letter, color, t.target);
    }
    b.build().expect("same shape as a valid automaton")
}

/// A random chain of at most `max_len` members with at most `max_states`
/// states each, or `None` if no strictly falling second member was found.
///
/// The first member is random; each next one copies the previous member
/// and turns some accepting edges into rejecting ones, which can only
/// shrink the language. Candidates whose language did not shrink are
/// discarded, and the result passes [`chain_validate`] after
/// determinization.
pub fn random_chain(
    rng: &mut impl Rng,
    alphabet: &Arc<Alphabet>,
    max_states: usize,
    max_len: usize,
) -> Result<Option<Cocoa>> {
    let n = rng.random_range(1..=max_states);
    let len = rng.random_range(2..=max_len.max(2));
    let mut members = vec![random_ncw(rng, alphabet, n, 2).with_name("m1")];
    for _attempt in 0..20 {
        if members.len() == len {
            break;
        }
        let prev = members.last().expect("non-empty");
        let accepting: Vec<(State, usize)> = prev
            .transitions()
            .filter(|t| t.color == 2)
            .map(|t| (t.source, t.letter))
            .collect();
        if accepting.is_empty() {
            break;
        }
        let mut next = prev.clone();
        let flips = rng.random_range(1..=accepting.len().min(2));
        for _ in 0..flips {
            let (q, a) = accepting[rng.random_range(0..accepting.len())];
            next = reject_edge(&next, q, a);
        }
        let next = next.with_name(format!("m{}", members.len() + 1));
        let pair = Cocoa::new("pair", vec![prev.clone(), next.clone()])?;
        if chain_validate(&pair.determinized()?)?.is_empty() {
            members.push(next);
        }
    }
    if members.len() < 2 {
        return Ok(None);
    }
    let chain = Cocoa::new("rand-chain", members)?;
    debug_assert!(chain_validate(&chain.determinized()?)?.is_empty());
    Ok(Some(chain))
}
