//! Strongly connected components of letter-restricted transition graphs.

use std::collections::BTreeSet;

use crate::automaton::{Automaton, Letter, State, Transition};

/// A strongly connected component: a state set together with every
/// transition (on the letters under consideration) between its states.
///
/// Components are always non-trivial, so every listed transition lies on a
/// cycle inside the component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scc {
    pub states: BTreeSet<State>,
    pub transitions: Vec<Transition>,
}

impl Scc {
    pub fn contains(&self, q: State) -> bool {
        self.states.contains(&q)
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Least state; components are ordered by this.
    pub fn min_state(&self) -> State {
        *self.states.iter().next().expect("SCCs are non-empty")
    }
}

/// Tarjan's algorithm on an adjacency list, skipping nodes with
/// `active[v] == false`. Components come out in reverse topological order
/// (sinks first). Iterative, so deep graphs do not overflow the stack.
pub fn tarjan(adj: &[Vec<usize>], active: &[bool]) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut out = Vec::new();
    let mut counter = 0;
    // (node, next successor position)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if !active[root] || index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&w) = adj[v].get(*pos) {
                *pos += 1;
                if !active[w] {
                    continue;
                }
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    out.push(comp);
                }
            }
        }
    }
    out
}

/// True if `comp` has an internal edge (more than one node, or a self-loop).
pub fn is_nontrivial(adj: &[Vec<usize>], comp: &[usize]) -> bool {
    comp.len() > 1 || adj[comp[0]].contains(&comp[0])
}

fn letter_mask(aut: &Automaton, letters: &[Letter]) -> Vec<bool> {
    let mut mask = vec![false; aut.alphabet().len()];
    for &a in letters {
        mask[a] = true;
    }
    mask
}

/// Maximal non-trivial SCCs of the subgraph induced by `within` (all states
/// if `None`) and the transitions labeled by `letters`. Sorted by least
/// state.
pub fn scc_decompose_within(
    aut: &Automaton,
    within: Option<&BTreeSet<State>>,
    letters: &[Letter],
) -> Vec<Scc> {
    let n = aut.state_count();
    let mask = letter_mask(aut, letters);
    let active: Vec<bool> = (0..n)
        .map(|q| within.is_none_or(|w| w.contains(&q)))
        .collect();
    let mut adj = vec![Vec::new(); n];
    for t in aut.transitions() {
        if mask[t.letter] && active[t.source] && active[t.target] {
            adj[t.source].push(t.target);
        }
    }
    let mut comp_of = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = tarjan(&adj, &active)
        .into_iter()
        .filter(|c| is_nontrivial(&adj, c))
        .collect();
    comps.sort_by_key(|c| c[0]);
    for (i, c) in comps.iter().enumerate() {
        for &q in c {
            comp_of[q] = i;
        }
    }
    let mut sccs: Vec<Scc> = comps
        .iter()
        .map(|c| Scc {
            states: c.iter().copied().collect(),
            transitions: Vec::new(),
        })
        .collect();
    for t in aut.transitions() {
        if mask[t.letter]
            && comp_of[t.source] != usize::MAX
            && comp_of[t.source] == comp_of[t.target]
        {
            sccs[comp_of[t.source]].transitions.push(t);
        }
    }
    sccs
}

/// Maximal non-trivial SCCs using only transitions on `letters`.
pub fn scc_decompose(aut: &Automaton, letters: &[Letter]) -> Vec<Scc> {
    scc_decompose_within(aut, None, letters)
}

/// SCCs of the `within`/`letters` subgraph that no such transition leaves.
pub fn terminal_sccs_within(
    aut: &Automaton,
    within: Option<&BTreeSet<State>>,
    letters: &[Letter],
) -> Vec<Scc> {
    scc_decompose_within(aut, within, letters)
        .into_iter()
        .filter(|scc| {
            scc.states.iter().all(|&q| {
                letters.iter().all(|&a| {
                    aut.edge(q, a)
                        .targets
                        .iter()
                        .all(|t| scc.contains(*t) || within.is_some_and(|w| !w.contains(t)))
                })
            })
        })
        .collect()
}

/// SCCs over the full alphabet without outgoing transitions. Never empty
/// for an input-complete automaton.
pub fn terminal_sccs(aut: &Automaton) -> Vec<Scc> {
    let all: Vec<Letter> = aut.alphabet().letters().collect();
    terminal_sccs_within(aut, None, &all)
}
