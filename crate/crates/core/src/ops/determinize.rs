use std::sync::Arc;

use crate::automaton::{Automaton, State};
use crate::error::Result;

use super::explore;

/// Breakpoint (Miyano–Hayashi) determinization of a co-Büchi automaton.
///
/// A deterministic state is a pair `(S, B)` with `B ⊆ S`: `S` is the set of
/// states some run can be in, `B` those reached by runs that have not taken
/// a rejecting transition since the last breakpoint. Reading a letter maps
/// `S` to all its successors and `B` to the successors over accepting
/// transitions; if `B` empties, the step is a breakpoint (color 1) and `B`
/// restarts as the new `S`. A word is accepted iff breakpoints happen only
/// finitely often. At most `3^n` states are reachable.
///
/// Deterministic inputs are returned unchanged.
pub fn mh_determinize(ncw: &Automaton) -> Result<Automaton> {
    ncw.require_cobuchi()?;
    if ncw.is_deterministic() {
        return Ok(ncw.clone());
    }
    let n = ncw.state_count();
    let init = (vec![ncw.initial()], vec![ncw.initial()]);
    let (states, edges) = explore(init, ncw.alphabet().len(), |(s, b), a| {
        let mut s_next = vec![false; n];
        for &q in s {
            for &t in &ncw.edge(q, a).targets {
                s_next[t] = true;
            }
        }
        let mut b_next = vec![false; n];
        for &q in b {
            let e = ncw.edge(q, a);
            if e.color == 2 {
                for &t in &e.targets {
                    b_next[t] = true;
                }
            }
        }
        let collect = |v: &[bool]| -> Vec<State> { (0..n).filter(|&q| v[q]).collect() };
        let s_next = collect(&s_next);
        let b_next = collect(&b_next);
        if b_next.is_empty() {
            ((s_next.clone(), s_next), 1)
        } else {
            ((s_next, b_next), 2)
        }
    });
    let set = |v: &[State]| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    let labels = states
        .iter()
        .map(|(s, b)| format!("{{{}}}/{{{}}}", set(s), set(b)))
        .collect();
    Ok(Automaton::from_edges(
        format!("det({})", ncw.name()),
        Arc::clone(ncw.alphabet()),
        0,
        edges,
        Some(labels),
    ))
}
