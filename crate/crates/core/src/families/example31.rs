use std::sync::Arc;

use crate::automaton::{Alphabet, Automaton};
use crate::error::Result;

/// Deterministic parity automaton over `{a, b, c}` for the words that
/// either read `a` infinitely often, or eventually read only `b` and `c`
/// with every `b` followed by `c` and, if the total number of `a` is even,
/// infinitely many `b`.
///
/// States track the parity of `a` and whether the last letter was `b`:
/// `a` has color 0, `bb` color 1, other `b` color 2, and `c` color 2 at odd
/// parity and 3 at even parity.
pub fn example31_dpw() -> Result<Automaton> {
    let al = Arc::new(Alphabet::new(["a", "b", "c"])?);
    // state = 2 * odd + last_was_b
    let aut = Automaton::deterministic("example31", al, 4, 0, |q, l| {
        let odd = q / 2;
        let last_b = q % 2 == 1;
        match l {
            0 => (2 * (1 - odd), 0),
            1 if last_b => (q, 1),
            1 => (2 * odd + 1, 2),
            _ => (2 * odd, if odd == 1 { 2 } else { 3 }),
        }
    })?;
    Ok(aut.with_labels(vec![
        "even".into(),
        "even/b".into(),
        "odd".into(),
        "odd/b".into(),
    ]))
}
