//! Chains of co-Büchi automata.
//!
//! A chain `A_1, …, A_n` with falling languages `L_1 ⊋ L_2 ⊋ … ⊋ L_n`
//! assigns each word the highest index whose member accepts it (0 below the
//! first member) and accepts the word iff that index is even.

use std::sync::Arc;

use crate::automaton::{Alphabet, Automaton};
use crate::error::{Error, Result};
use crate::lasso::LassoWord;
use crate::ops::{dpw_contains, dpw_equivalent, mh_determinize, Verdict};

#[derive(Debug, Clone)]
pub struct Cocoa {
    name: String,
    alphabet: Arc<Alphabet>,
    members: Vec<Automaton>,
}

impl Cocoa {
    /// Checks that the list is non-empty and every member is a co-Büchi
    /// automaton over one shared alphabet. Language containment is not
    /// checked here; see [`chain_validate`].
    pub fn new(name: impl Into<String>, members: Vec<Automaton>) -> Result<Self> {
        let first = members.first().ok_or(Error::NoOperands)?;
        let alphabet = Arc::clone(first.alphabet());
        for m in &members {
            m.require_cobuchi()?;
            if **m.alphabet() != *alphabet {
                return Err(Error::AlphabetMismatch(format!(
                    "member `{}` differs from `{}`",
                    m.name(),
                    first.name()
                )));
            }
        }
        Ok(Cocoa {
            name: name.into(),
            alphabet,
            members,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn members(&self) -> &[Automaton] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Sum of member state counts.
    pub fn size(&self) -> usize {
        cocoa_size(self)
    }

    /// Replaces every nondeterministic member by its breakpoint
    /// determinization.
    pub fn determinized(&self) -> Result<Cocoa> {
        let members = self
            .members
            .iter()
            .map(mh_determinize)
            .collect::<Result<Vec<_>>>()?;
        Cocoa::new(self.name.clone(), members)
    }
}

pub fn cocoa_size(chain: &Cocoa) -> usize {
    chain.members.iter().map(Automaton::state_count).sum()
}

/// One-state co-Büchi automaton accepting every word.
pub fn universal_cobuchi(alphabet: Arc<Alphabet>) -> Automaton {
    Automaton::deterministic("universal", alphabet, 1, 0, |_, _| (0, 2))
        .expect("one-state automaton is valid")
}

/// One-state co-Büchi automaton accepting no word.
pub fn empty_cobuchi(alphabet: Arc<Alphabet>) -> Automaton {
    Automaton::deterministic("empty", alphabet, 1, 0, |_, _| (0, 1))
        .expect("one-state automaton is valid")
}

/// A failed falling-chain check between members `index` and `index + 1`
/// (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainDiagnostic {
    /// A word accepted by member `index + 1` but not by member `index`.
    NotContained { index: usize, witness: LassoWord },
    /// Members `index` and `index + 1` have equal languages.
    NotStrict { index: usize },
}

impl ChainDiagnostic {
    pub fn describe(&self, alphabet: &Alphabet) -> String {
        match self {
            ChainDiagnostic::NotContained { index, witness } => format!(
                "NOT_CONTAINED at {index}: {} is accepted by member {} but not by member {index}",
                witness.to_text(alphabet),
                index + 1
            ),
            ChainDiagnostic::NotStrict { index } => format!("NOT_STRICT at {index}"),
        }
    }
}

/// Checks `L(A_{i+1}) ⊊ L(A_i)` for each consecutive pair. Members must be
/// deterministic; use [`Cocoa::determinized`] first otherwise.
pub fn chain_validate(chain: &Cocoa) -> Result<Vec<ChainDiagnostic>> {
    if let Some(i) = chain.members.iter().position(|m| !m.is_deterministic()) {
        return Err(Error::NotDeterministicMember(i + 1));
    }
    let mut diags = Vec::new();
    for (i, pair) in chain.members.windows(2).enumerate() {
        let index = i + 1;
        match dpw_contains(&pair[1], &pair[0])? {
            Verdict::Fails(witness) => diags.push(ChainDiagnostic::NotContained { index, witness }),
            Verdict::Holds => {
                if dpw_contains(&pair[0], &pair[1])?.holds() {
                    diags.push(ChainDiagnostic::NotStrict { index });
                }
            }
        }
    }
    Ok(diags)
}

fn is_universal(member: &Automaton) -> Result<bool> {
    let det = mh_determinize(member)?;
    let all = universal_cobuchi(Arc::clone(member.alphabet()));
    Ok(dpw_equivalent(&det, &all)?.holds())
}

/// Complements the chain language by shifting every word's color by one.
///
/// A universal head is dropped; otherwise a universal head is prepended.
/// Dropping the only member of a chain would leave nothing, so that case
/// yields the chain holding just the empty automaton (every word gets
/// color 0).
pub fn cocoa_complement(chain: &Cocoa) -> Result<Cocoa> {
    let name = format!("complement({})", chain.name);
    if is_universal(&chain.members[0])? {
        let rest = if chain.members.len() == 1 {
            vec![empty_cobuchi(Arc::clone(&chain.alphabet))]
        } else {
            chain.members[1..].to_vec()
        };
        return Cocoa::new(name, rest);
    }
    let mut members = Vec::with_capacity(chain.members.len() + 1);
    members.push(universal_cobuchi(Arc::clone(&chain.alphabet)));
    members.extend(chain.members.iter().cloned());
    Cocoa::new(name, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lasso::{cocoa_accepts, enumerate_lassos};

    fn ab() -> Arc<Alphabet> {
        Arc::new(Alphabet::new(["a", "b"]).unwrap())
    }

    fn fin_a() -> Automaton {
        Automaton::deterministic("fin-a", ab(), 1, 0, |_, l| (0, if l == 0 { 1 } else { 2 }))
            .unwrap()
    }

    #[test]
    fn constructor_rejects_parity_members() {
        let dpw = Automaton::deterministic("p", ab(), 1, 0, |_, _| (0, 0)).unwrap();
        assert!(matches!(
            Cocoa::new("c", vec![dpw]),
            Err(Error::NotCobuchi(_))
        ));
        assert!(matches!(Cocoa::new("c", vec![]), Err(Error::NoOperands)));
        let other = Arc::new(Alphabet::new(["a", "c"]).unwrap());
        assert!(matches!(
            Cocoa::new("c", vec![fin_a(), universal_cobuchi(other)]),
            Err(Error::AlphabetMismatch(_))
        ));
    }

    #[test]
    fn equal_members_are_not_strict() {
        let c = Cocoa::new("c", vec![fin_a(), fin_a()]).unwrap();
        assert_eq!(
            chain_validate(&c).unwrap(),
            vec![ChainDiagnostic::NotStrict { index: 1 }]
        );
    }

    #[test]
    fn reversed_members_are_not_contained() {
        let c = Cocoa::new("c", vec![fin_a(), universal_cobuchi(ab())]).unwrap();
        let d = chain_validate(&c).unwrap();
        assert_eq!(d.len(), 1);
        let ChainDiagnostic::NotContained { index, witness } = &d[0] else {
            panic!("{d:?}")
        };
        assert_eq!(*index, 1);
        assert!(witness.period().contains(&0));
    }

    #[test]
    fn complement_round_trip() {
        let c = Cocoa::new("c", vec![universal_cobuchi(ab()), fin_a()]).unwrap();
        assert!(chain_validate(&c).unwrap().is_empty());
        let comp = cocoa_complement(&c).unwrap();
        assert_eq!(comp.len(), 1);
        let back = cocoa_complement(&comp).unwrap();
        assert_eq!(back.members(), c.members());
        for w in enumerate_lassos(2, 2, 3) {
            assert_ne!(
                cocoa_accepts(&c, &w).unwrap(),
                cocoa_accepts(&comp, &w).unwrap()
            );
        }
    }

    #[test]
    fn complement_of_lone_universal_member() {
        let c = Cocoa::new("c", vec![universal_cobuchi(ab())]).unwrap();
        let comp = cocoa_complement(&c).unwrap();
        for w in enumerate_lassos(2, 1, 2) {
            assert!(!cocoa_accepts(&c, &w).unwrap());
            assert!(cocoa_accepts(&comp, &w).unwrap());
        }
    }

    #[test]
    fn size_is_member_sum() {
        let c = Cocoa::new("c", vec![universal_cobuchi(ab())]).unwrap();
        assert_eq!(cocoa_size(&c), 1);
    }

    #[test]
    fn nondeterministic_members_need_determinizing() {
        let mut b = crate::automaton::AutomatonBuilder::new("n", ab(), 2);
        b.add(0, 0, 2, 0)
            .add(0, 0, 2, 1)
            .add(0, 1, 2, 0)
            .add(1, 0, 1, 1)
            .add(1, 1, 2, 1);
        let c = Cocoa::new("c", vec![universal_cobuchi(ab()), b.build().unwrap()]).unwrap();
        assert_eq!(chain_validate(&c), Err(Error::NotDeterministicMember(2)));
        assert!(chain_validate(&c.determinized().unwrap()).is_ok());
    }
}
