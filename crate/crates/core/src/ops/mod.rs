//! Constructions on automata and chains, and the decision procedures that
//! check them.
//!
//! - [`dcw_conjunction`] / [`dcw_disjunction`]: products of deterministic
//!   co-Büchi automata.
//! - [`mh_determinize`]: breakpoint determinization of co-Büchi automata.
//! - [`cocoa_to_dpw`]: a chain as one deterministic parity automaton.
//! - [`dpw_complement`]: color shift.
//! - [`multi_parity_witness`], [`dpw_contains`], [`dpw_equivalent`],
//!   [`residual_partition`]: emptiness-based checks on deterministic
//!   parity automata.

mod boolean;
mod determinize;
mod product;
mod residual;
mod witness;

pub use boolean::{dcw_conjunction, dcw_disjunction};
pub use determinize::mh_determinize;
pub use product::{cocoa_to_dpw, dpw_complement};
pub use residual::{residual_partition, ResidualPartition};
pub use witness::{
    dpw_contains, dpw_equivalent, dpw_is_empty, multi_parity_witness, ParityConstraint, Polarity,
    Verdict,
};

use crate::automaton::Automaton;
use crate::error::{Error, Result};

pub(crate) fn same_alphabet(auts: &[&Automaton]) -> Result<()> {
    let Some(first) = auts.first() else {
        return Err(Error::NoOperands);
    };
    for a in auts {
        if a.alphabet() != first.alphabet() {
            return Err(Error::AlphabetMismatch(format!(
                "`{}` and `{}` use different alphabets",
                first.name(),
                a.name()
            )));
        }
    }
    Ok(())
}

/// Breadth-first exploration of a deterministic product: `step` maps a
/// product state and letter to the successor state and color. Returns the
/// discovered states in order and the edges laid out for
/// [`Automaton::from_edges`].
pub(crate) fn explore<S, F>(
    initial: S,
    letters: usize,
    mut step: F,
) -> (Vec<S>, Vec<crate::automaton::Edge>)
where
    S: Clone + Eq + std::hash::Hash,
    F: FnMut(&S, usize) -> (S, crate::automaton::Color),
{
    use std::collections::HashMap;
    let mut index: HashMap<S, usize> = HashMap::new();
    let mut states = vec![initial.clone()];
    index.insert(initial, 0);
    let mut edges = Vec::new();
    let mut next = 0;
    while next < states.len() {
        let s = states[next].clone();
        for a in 0..letters {
            let (t, color) = step(&s, a);
            let id = *index.entry(t.clone()).or_insert_with(|| {
                states.push(t);
                states.len() - 1
            });
            edges.push(crate::automaton::Edge {
                color,
                targets: vec![id],
            });
        }
        next += 1;
    }
    (states, edges)
}
