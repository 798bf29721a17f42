use std::sync::Arc;

use crate::automaton::{Alphabet, Automaton, Letter};
use crate::cocoa::Cocoa;
use crate::error::Result;
use crate::lasso::LassoWord;

use super::{c_alphabet, check_level};

/// Member `j` of the chain [`cocoa_c`]: two states `p` (initial) and `q`.
/// `x_1..x_j` move `p` to `q`, `y_1..y_j` move `q` back, both rejecting;
/// every other letter loops accepting. A run rejects exactly when it moves
/// back and forth forever.
pub fn c_member(k: usize, j: usize) -> Result<Automaton> {
    check_level(k, j)?;
    let al = c_alphabet(k)?;
    c_member_over(k, j, al)
}

fn c_member_over(k: usize, j: usize, al: Arc<Alphabet>) -> Result<Automaton> {
    let is_x = move |a: Letter| a < j;
    let is_y = move |a: Letter| a > k && a <= k + j;
    let aut = Automaton::deterministic(format!("c{k}-{j}"), al, 2, 0, |q, a| match q {
        0 if is_x(a) => (1, 1),
        1 if is_y(a) => (0, 1),
        _ => (q, 2),
    })?;
    Ok(aut.with_labels(vec!["p".into(), "q".into()]))
}

/// The chain `A_1, …, A_k` of [`c_member`]s: `2k` states in total while
/// every deterministic parity automaton for its language needs `2^k`.
pub fn cocoa_c(k: usize) -> Result<Cocoa> {
    let al = c_alphabet(k)?;
    let members = (1..=k)
        .map(|j| c_member_over(k, j, Arc::clone(&al)))
        .collect::<Result<Vec<_>>>()?;
    Cocoa::new(format!("cocoa-c-{k}"), members)
}

/// Membership in the language of member `j`, read off the loop: some
/// `x_1..x_j` or some `y_1..y_j` must be absent from it.
pub fn in_c_member(k: usize, j: usize, w: &LassoWord) -> bool {
    let period = w.period();
    let no_x = period.iter().all(|&a| a >= j);
    let no_y = period.iter().all(|&a| a <= k || a > k + j);
    no_x || no_y
}
