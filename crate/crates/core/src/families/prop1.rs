use crate::automaton::{Automaton, Color};
use crate::cocoa::Cocoa;
use crate::error::Result;

use super::prop1_alphabet;

/// One state; letter `m` loops with color `m`. Accepts exactly the words
/// whose least recurring letter is even.
pub fn prop1_dpw(k: usize) -> Result<Automaton> {
    let al = prop1_alphabet(k)?;
    Automaton::deterministic(format!("prop1-dpw-{k}"), al, 1, 0, |_, a| {
        (0, a as Color + 1)
    })
}

/// `k` one-state members; member `i` rejects on letters below `i`.
pub fn prop1_cocoa(k: usize) -> Result<Cocoa> {
    let al = prop1_alphabet(k)?;
    let members = (1..=k)
        .map(|i| {
            Automaton::deterministic(format!("prop1-{k}-{i}"), al.clone(), 1, 0, move |_, a| {
                (0, if a + 1 < i { 1 } else { 2 })
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Cocoa::new(format!("prop1-cocoa-{k}"), members)
}
