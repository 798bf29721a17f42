use crate::automaton::{Automaton, State};
use crate::error::Result;
use crate::lasso::LassoWord;

use super::{dpw_equivalent, Verdict};

/// Reachable states of a deterministic automaton grouped by the language
/// they accept. In a deterministic automaton the residual language after a
/// prefix is the language of the state the prefix leads to, so the class
/// count is the number of residual languages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualPartition {
    /// Each class is sorted; classes are ordered by first discovery.
    pub classes: Vec<Vec<State>>,
    /// For every pair of classes `(i, j)` with `i < j`, a lasso accepted
    /// from the states of exactly one of them.
    pub separators: Vec<(usize, usize, LassoWord)>,
}

impl ResidualPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, q: State) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.binary_search(&q).is_ok())
    }
}

/// Partitions reachable states by language equivalence of the automaton
/// re-rooted at each state. Each state is compared against one
/// representative per existing class.
pub fn residual_partition(dpw: &Automaton) -> Result<ResidualPartition> {
    dpw.require_deterministic()?;
    let mut reachable = dpw.reachable_states();
    reachable.sort_unstable();
    let mut classes: Vec<Vec<State>> = Vec::new();
    let mut reps: Vec<Automaton> = Vec::new();
    let mut separators = Vec::new();
    for q in reachable {
        let rooted = dpw.with_initial(q);
        let mut found = None;
        let mut witnesses = Vec::new();
        for (ci, rep) in reps.iter().enumerate() {
            match dpw_equivalent(&rooted, rep)? {
                Verdict::Holds => {
                    found = Some(ci);
                    break;
                }
                Verdict::Fails(w) => witnesses.push((ci, w)),
            }
        }
        match found {
            Some(ci) => classes[ci].push(q),
            None => {
                let new = classes.len();
                separators.extend(witnesses.into_iter().map(|(ci, w)| (ci, new, w)));
                classes.push(vec![q]);
                reps.push(rooted);
            }
        }
    }
    Ok(ResidualPartition {
        classes,
        separators,
    })
}
