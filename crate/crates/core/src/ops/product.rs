use std::sync::Arc;

use crate::automaton::{Automaton, Color, Edge, State};
use crate::cocoa::Cocoa;
use crate::error::Result;

use super::explore;

/// Deterministic parity automaton for the language of a chain.
///
/// Members are determinized, then run in lockstep. A product step gets the
/// least 0-based index `j` whose member `j + 1` takes a rejecting step, or
/// the chain length `k` when no member rejects. If a word's chain color is
/// `j`, members `j + 1, …` reject infinitely often and members `1..=j`
/// eventually never reject, so `j` is the least color seen infinitely often.
///
/// Reachable part only; at most `∏ |D_i|` states for determinized members
/// `D_i`.
pub fn cocoa_to_dpw(chain: &Cocoa) -> Result<Automaton> {
    let det = chain.determinized()?;
    let members = det.members();
    let k = members.len() as Color;
    let init: Vec<State> = members.iter().map(Automaton::initial).collect();
    let (states, edges) = explore(init, chain.alphabet().len(), |tuple, a| {
        let mut next = Vec::with_capacity(tuple.len());
        let mut color = k;
        for (j, (m, &q)) in members.iter().zip(tuple).enumerate() {
            let (t, c) = m.step(q, a);
            next.push(t);
            if c == 1 && (j as Color) < color {
                color = j as Color;
            }
        }
        (next, color)
    });
    let labels = states
        .iter()
        .map(|tuple| {
            let parts: Vec<String> = members
                .iter()
                .zip(tuple)
                .map(|(m, &q)| m.label(q).map_or_else(|| q.to_string(), str::to_string))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Ok(Automaton::from_edges(
        format!("dpw({})", chain.name()),
        Arc::clone(chain.alphabet()),
        0,
        edges,
        Some(labels),
    ))
}

/// Complements a deterministic parity automaton by adding 1 to every color.
pub fn dpw_complement(dpw: &Automaton) -> Result<Automaton> {
    dpw.require_deterministic()?;
    let letters = dpw.alphabet().len();
    let edges = (0..dpw.state_count())
        .flat_map(|q| (0..letters).map(move |a| (q, a)))
        .map(|(q, a)| {
            let e = dpw.edge(q, a);
            Edge {
                color: e.color + 1,
                targets: e.targets.clone(),
            }
        })
        .collect();
    Ok(Automaton::from_edges(
        format!("not({})", dpw.name()),
        Arc::clone(dpw.alphabet()),
        dpw.initial(),
        edges,
        dpw.labels().map(<[String]>::to_vec),
    ))
}
