use std::collections::{HashMap, VecDeque};

use crate::automaton::{Automaton, Color, Letter, State};
use crate::error::{Error, Result};
use crate::lasso::LassoWord;
use crate::scc::{is_nontrivial, tarjan};

use super::same_alphabet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    Accepting,
    Rejecting,
}

/// Requires a word to be accepted (or rejected) by a deterministic parity
/// automaton.
#[derive(Debug, Clone, Copy)]
pub struct ParityConstraint<'a> {
    pub automaton: &'a Automaton,
    pub polarity: Polarity,
}

impl<'a> ParityConstraint<'a> {
    pub fn accepting(automaton: &'a Automaton) -> Self {
        ParityConstraint {
            automaton,
            polarity: Polarity::Accepting,
        }
    }

    pub fn rejecting(automaton: &'a Automaton) -> Self {
        ParityConstraint {
            automaton,
            polarity: Polarity::Rejecting,
        }
    }

    fn wants(&self, color: Color) -> bool {
        color.is_multiple_of(2) == (self.polarity == Polarity::Accepting)
    }
}

/// Outcome of a language inclusion or equivalence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// A lasso separating the two languages.
    Fails(LassoWord),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&LassoWord> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// Reachable part of the lockstep product of deterministic automata.
struct JointProduct {
    letters: usize,
    width: usize,
    /// successor of `node * letters + letter`
    succ: Vec<usize>,
    /// per-component colors of `(node * letters + letter) * width + i`
    colors: Vec<Color>,
}

impl JointProduct {
    fn build(auts: &[&Automaton]) -> Self {
        let letters = auts[0].alphabet().len();
        let width = auts.len();
        let init: Vec<State> = auts.iter().map(|a| a.initial()).collect();
        let mut index: HashMap<Vec<State>, usize> = HashMap::from([(init.clone(), 0)]);
        let mut nodes = vec![init];
        let mut succ = Vec::new();
        let mut colors = Vec::new();
        let mut next = 0;
        while next < nodes.len() {
            for a in 0..letters {
                let mut target = Vec::with_capacity(width);
                for (aut, &q) in auts.iter().zip(&nodes[next]) {
                    let (t, c) = aut.step(q, a);
                    target.push(t);
                    colors.push(c);
                }
                let id = *index.entry(target.clone()).or_insert_with(|| {
                    nodes.push(target);
                    nodes.len() - 1
                });
                succ.push(id);
            }
            next += 1;
        }
        JointProduct {
            letters,
            width,
            succ,
            colors,
        }
    }

    fn node_count(&self) -> usize {
        self.succ.len() / self.letters
    }

    fn color(&self, node: usize, letter: Letter, i: usize) -> Color {
        self.colors[(node * self.letters + letter) * self.width + i]
    }

    fn allowed(&self, node: usize, letter: Letter, targets: &[Color]) -> bool {
        targets
            .iter()
            .enumerate()
            .all(|(i, &t)| self.color(node, letter, i) >= t)
    }

    /// Shortest path by breadth-first search with letters tried in alphabet
    /// order, from `from` to the first node satisfying `goal`.
    fn path(
        &self,
        from: usize,
        goal: impl Fn(usize) -> bool,
        edge_ok: impl Fn(usize, Letter) -> bool,
    ) -> Option<(Vec<Letter>, usize)> {
        let n = self.node_count();
        let mut parent: Vec<Option<(usize, Letter)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if goal(v) {
                let mut word = Vec::new();
                let mut cur = v;
                while let Some((p, a)) = parent[cur] {
                    word.push(a);
                    cur = p;
                }
                word.reverse();
                return Some((word, v));
            }
            for a in 0..self.letters {
                if !edge_ok(v, a) {
                    continue;
                }
                let u = self.succ[v * self.letters + a];
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some((v, a));
                    queue.push_back(u);
                }
            }
        }
        None
    }
}

/// Searches for a lasso that every constraint's automaton accepts or
/// rejects as required. `None` means no ω-word satisfies all constraints.
///
/// For each assignment of target dominating colors (even for accepting,
/// odd for rejecting constraints, fewest total first), the product graph is
/// restricted to steps whose colors are all at least the targets. A
/// non-trivial SCC of that graph containing, for every component, a step
/// hitting its target exactly yields the witness: the stem leads into the
/// SCC and the loop tours all target steps.
pub fn multi_parity_witness(constraints: &[ParityConstraint<'_>]) -> Result<Option<LassoWord>> {
    if constraints.is_empty() {
        return Err(Error::NoOperands);
    }
    let auts: Vec<&Automaton> = constraints.iter().map(|c| c.automaton).collect();
    for a in &auts {
        a.require_deterministic()?;
    }
    same_alphabet(&auts)?;

    let product = JointProduct::build(&auts);
    let n = product.node_count();
    let letters = product.letters;

    let mut candidates: Vec<Vec<Color>> = vec![Vec::new(); constraints.len()];
    for (i, c) in constraints.iter().enumerate() {
        let mut cs: Vec<Color> = (0..n * letters)
            .map(|e| product.colors[e * product.width + i])
            .filter(|&col| c.wants(col))
            .collect();
        cs.sort_unstable();
        cs.dedup();
        if cs.is_empty() {
            return Ok(None);
        }
        candidates[i] = cs;
    }

    let mut tuples: Vec<Vec<Color>> = vec![Vec::new()];
    for cs in &candidates {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                cs.iter().map(move |&c| {
                    let mut t = t.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    tuples.sort_by_key(|t| (t.iter().map(|&c| c as u64).sum::<u64>(), t.clone()));

    let all_nodes = vec![true; n];
    for targets in &tuples {
        let mut adj = vec![Vec::new(); n];
        for (v, out) in adj.iter_mut().enumerate() {
            for a in 0..letters {
                if product.allowed(v, a, targets) {
                    out.push(product.succ[v * letters + a]);
                }
            }
        }
        let mut comps = tarjan(&adj, &all_nodes);
        comps.sort_by_key(|c| c[0]);
        let mut comp_of = vec![usize::MAX; n];
        for (ci, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = ci;
            }
        }
        for (ci, comp) in comps.iter().enumerate() {
            if !is_nontrivial(&adj, comp) {
                continue;
            }
            let internal = |v: usize, a: Letter| {
                comp_of[v] == ci
                    && product.allowed(v, a, targets)
                    && comp_of[product.succ[v * letters + a]] == ci
            };
            let mut required: Vec<(usize, Letter)> = Vec::new();
            let found_all = (0..targets.len()).all(|i| {
                let hit = comp.iter().find_map(|&v| {
                    (0..letters)
                        .find(|&a| internal(v, a) && product.color(v, a, i) == targets[i])
                        .map(|a| (v, a))
                });
                if let Some(e) = hit {
                    if !required.contains(&e) {
                        required.push(e);
                    }
                    true
                } else {
                    false
                }
            });
            if !found_all {
                continue;
            }

            let (stem, anchor) = product
                .path(0, |v| comp_of[v] == ci, |_, _| true)
                .expect("every product node is reachable");
            let mut period = Vec::new();
            let mut cur = anchor;
            for &(u, a) in &required {
                let (p, _) = product
                    .path(cur, |v| v == u, internal)
                    .expect("SCC is strongly connected");
                period.extend(p);
                period.push(a);
                cur = product.succ[u * letters + a];
            }
            let (p, _) = product
                .path(cur, |v| v == anchor, internal)
                .expect("SCC is strongly connected");
            period.extend(p);
            return Ok(Some(LassoWord::new(stem, period)?));
        }
    }
    Ok(None)
}

/// `L(a) ⊆ L(b)`, with a word of `L(a) \ L(b)` on failure.
pub fn dpw_contains(a: &Automaton, b: &Automaton) -> Result<Verdict> {
    Ok(
        match multi_parity_witness(&[
            ParityConstraint::accepting(a),
            ParityConstraint::rejecting(b),
        ])? {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        },
    )
}

/// `L(a) = L(b)`, with a word in the symmetric difference on failure.
pub fn dpw_equivalent(a: &Automaton, b: &Automaton) -> Result<Verdict> {
    match dpw_contains(a, b)? {
        Verdict::Holds => dpw_contains(b, a),
        fails => Ok(fails),
    }
}

pub fn dpw_is_empty(a: &Automaton) -> Result<Verdict> {
    Ok(
        match multi_parity_witness(&[ParityConstraint::accepting(a)])? {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        },
    )
}
