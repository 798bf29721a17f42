use std::sync::Arc;

use crate::automaton::{Automaton, State};
use crate::error::{Error, Result};

use super::{explore, same_alphabet};

fn check_operands(members: &[Automaton]) -> Result<()> {
    if members.is_empty() {
        return Err(Error::NoOperands);
    }
    for m in members {
        m.require_deterministic()?;
        m.require_cobuchi()?;
    }
    same_alphabet(&members.iter().collect::<Vec<_>>())
}

fn tuple_label(members: &[Automaton], tuple: &[State]) -> String {
    let parts: Vec<String> = members
        .iter()
        .zip(tuple)
        .map(|(m, &q)| m.label(q).map_or_else(|| q.to_string(), str::to_string))
        .collect();
    format!("({})", parts.join(","))
}

fn joined_names(members: &[Automaton]) -> String {
    members
        .iter()
        .map(Automaton::name)
        .collect::<Vec<_>>()
        .join(",")
}

/// Deterministic co-Büchi automaton for the intersection of the members'
/// languages.
///
/// Runs all members in lockstep; a step is accepting (color 2) only when
/// every member's step is. The result holds the reachable tuples only, so it
/// has at most `∏ |A_i|` states.
pub fn dcw_conjunction(members: &[Automaton]) -> Result<Automaton> {
    check_operands(members)?;
    let alphabet = Arc::clone(members[0].alphabet());
    let init: Vec<State> = members.iter().map(Automaton::initial).collect();
    let (states, edges) = explore(init, alphabet.len(), |tuple, a| {
        let mut next = Vec::with_capacity(tuple.len());
        let mut color = 2;
        for (m, &q) in members.iter().zip(tuple) {
            let (t, c) = m.step(q, a);
            next.push(t);
            if c == 1 {
                color = 1;
            }
        }
        (next, color)
    });
    let labels = states.iter().map(|t| tuple_label(members, t)).collect();
    Ok(Automaton::from_edges(
        format!("and({})", joined_names(members)),
        alphabet,
        0,
        edges,
        Some(labels),
    ))
}

/// Deterministic co-Büchi automaton for the union of the members' languages.
///
/// Runs all members in lockstep plus a round-robin pointer. The product step
/// carries the color of the pointed member's step, and the pointer moves to
/// the next member exactly when that step is rejecting. If some member
/// eventually stops rejecting, the pointer settles on it; otherwise the
/// product rejects infinitely often. At most `∏ |A_i| · n` states.
pub fn dcw_disjunction(members: &[Automaton]) -> Result<Automaton> {
    check_operands(members)?;
    let n = members.len();
    let alphabet = Arc::clone(members[0].alphabet());
    let init: (Vec<State>, usize) = (members.iter().map(Automaton::initial).collect(), 0);
    let (states, edges) = explore(init, alphabet.len(), |(tuple, ptr), a| {
        let mut next = Vec::with_capacity(n);
        let mut color = 2;
        for (j, (m, &q)) in members.iter().zip(tuple).enumerate() {
            let (t, c) = m.step(q, a);
            next.push(t);
            if j == *ptr {
                color = c;
            }
        }
        let ptr = if color == 1 { (ptr + 1) % n } else { *ptr };
        ((next, ptr), color)
    });
    let labels = states
        .iter()
        .map(|(t, p)| format!("{}@{}", tuple_label(members, t), p + 1))
        .collect();
    Ok(Automaton::from_edges(
        format!("or({})", joined_names(members)),
        alphabet,
        0,
        edges,
        Some(labels),
    ))
}
