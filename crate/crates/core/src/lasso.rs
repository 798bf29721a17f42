//! Ultimately periodic words and their evaluation.
//!
//! A [`LassoWord`] `u·v^ω` is stored as letter indices into some
//! [`Alphabet`]; text form is `u0 u1|v0 v1` with an empty stem written as
//! `|v0`. Every evaluation entry point checks that the letters fit the
//! automaton's alphabet and fails with [`Error::AlphabetMismatch`] otherwise.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::{Alphabet, Automaton, Color, Letter, State};
use crate::cocoa::Cocoa;
use crate::error::{Error, Result};
use crate::scc::{is_nontrivial, tarjan};

/// The ω-word `stem · period^ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LassoWord {
    stem: Vec<Letter>,
    period: Vec<Letter>,
}

impl LassoWord {
    pub fn new(stem: Vec<Letter>, period: Vec<Letter>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyLoop);
        }
        Ok(LassoWord { stem, period })
    }

    pub fn stem(&self) -> &[Letter] {
        &self.stem
    }

    /// The repeated part; never empty.
    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    /// Parses `stem|loop` where both halves are space-separated symbols.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let (stem, period) = text.split_once('|').ok_or_else(|| Error::Parse {
            line: 1,
            message: format!("lasso {text:?} has no '|'"),
        })?;
        let resolve = |part: &str| -> Result<Vec<Letter>> {
            part.split_whitespace()
                .map(|s| alphabet.expect_letter(s))
                .collect()
        };
        LassoWord::new(resolve(stem)?, resolve(period)?)
    }

    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        let join = |part: &[Letter]| {
            part.iter()
                .map(|&a| alphabet.symbol(a))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("{}|{}", join(&self.stem), join(&self.period))
    }

    /// Letter at position `i` of the infinite word.
    pub fn letter_at(&self, i: usize) -> Letter {
        if i < self.stem.len() {
            self.stem[i]
        } else {
            self.period[(i - self.stem.len()) % self.period.len()]
        }
    }

    /// The letters occurring infinitely often.
    pub fn infinity_set(&self) -> Vec<Letter> {
        let mut v = self.period.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub(crate) fn check_alphabet(&self, alphabet: &Alphabet) -> Result<()> {
        let n = alphabet.len();
        if let Some(&a) = self.stem.iter().chain(&self.period).find(|&&a| a >= n) {
            return Err(Error::AlphabetMismatch(format!(
                "letter index {a} outside an alphabet of {n} symbols"
            )));
        }
        Ok(())
    }
}

/// Dominating color of a deterministic automaton's run, without checks.
pub(crate) fn run_color(aut: &Automaton, w: &LassoWord) -> Color {
    let mut q = aut.initial();
    for &a in &w.stem {
        q = aut.step(q, a).0;
    }
    // States at loop boundaries and the least color of each traversal.
    let mut starts: Vec<State> = Vec::new();
    let mut mins: Vec<Color> = Vec::new();
    loop {
        if let Some(i) = starts.iter().position(|&s| s == q) {
            return mins[i..].iter().copied().min().expect("cycle is non-empty");
        }
        starts.push(q);
        let mut m = Color::MAX;
        for &a in &w.period {
            let (t, c) = aut.step(q, a);
            m = m.min(c);
            q = t;
        }
        mins.push(m);
    }
}

/// Least color seen infinitely often on the unique run over `w`.
pub fn dpw_color(dpw: &Automaton, w: &LassoWord) -> Result<Color> {
    dpw.require_deterministic()?;
    w.check_alphabet(dpw.alphabet())?;
    Ok(run_color(dpw, w))
}

pub fn dpw_accepts(dpw: &Automaton, w: &LassoWord) -> Result<bool> {
    Ok(dpw_color(dpw, w)? % 2 == 0)
}

/// Nondeterministic co-Büchi acceptance: some run sees color 1 only
/// finitely often.
///
/// Searches the product of states with loop positions for a reachable cycle
/// of color-2 transitions. Every cycle in that product spans a whole number
/// of loop traversals.
pub fn ncw_accepts(ncw: &Automaton, w: &LassoWord) -> Result<bool> {
    ncw.require_cobuchi()?;
    w.check_alphabet(ncw.alphabet())?;
    Ok(ncw_accepts_unchecked(ncw, w))
}

fn ncw_accepts_unchecked(ncw: &Automaton, w: &LassoWord) -> bool {
    let n = ncw.state_count();
    let mut current = vec![false; n];
    current[ncw.initial()] = true;
    for &a in &w.stem {
        let mut next = vec![false; n];
        for q in (0..n).filter(|&q| current[q]) {
            for &t in &ncw.edge(q, a).targets {
                next[t] = true;
            }
        }
        current = next;
    }

    let p = w.period.len();
    let node = |q: State, pos: usize| q * p + pos;
    let mut reach = vec![false; n * p];
    let mut queue: Vec<usize> = (0..n).filter(|&q| current[q]).map(|q| node(q, 0)).collect();
    for &v in &queue {
        reach[v] = true;
    }
    let mut accepting_adj = vec![Vec::new(); n * p];
    while let Some(v) = queue.pop() {
        let (q, pos) = (v / p, v % p);
        let e = ncw.edge(q, w.period[pos]);
        for &t in &e.targets {
            let u = node(t, (pos + 1) % p);
            if e.color == 2 {
                accepting_adj[v].push(u);
            }
            if !reach[u] {
                reach[u] = true;
                queue.push(u);
            }
        }
    }
    tarjan(&accepting_adj, &reach)
        .iter()
        .any(|c| is_nontrivial(&accepting_adj, c))
}

fn member_accepts(member: &Automaton, w: &LassoWord) -> bool {
    if member.is_deterministic() {
        run_color(member, w) == 2
    } else {
        ncw_accepts_unchecked(member, w)
    }
}

/// Highest chain index whose member accepts `w`, or 0 if none does.
///
/// Scans from the top so falling chains stop at the first hit; the result is
/// the largest accepting index even for chains that do not fall.
pub fn cocoa_color(chain: &Cocoa, w: &LassoWord) -> Result<usize> {
    w.check_alphabet(chain.alphabet())?;
    Ok(chain
        .members()
        .iter()
        .rposition(|m| member_accepts(m, w))
        .map_or(0, |i| i + 1))
}

/// Indices (1-based) of all members accepting `w`.
pub fn accepting_members(chain: &Cocoa, w: &LassoWord) -> Result<Vec<usize>> {
    w.check_alphabet(chain.alphabet())?;
    Ok(chain
        .members()
        .iter()
        .enumerate()
        .filter(|(_, m)| member_accepts(m, w))
        .map(|(i, _)| i + 1)
        .collect())
}

pub fn cocoa_accepts(chain: &Cocoa, w: &LassoWord) -> Result<bool> {
    Ok(cocoa_color(chain, w)? % 2 == 0)
}

/// Default exhaustive bounds `(max stem, max loop)` for an alphabet size.
pub fn default_bounds(alphabet_len: usize) -> (usize, usize) {
    if alphabet_len <= 8 {
        (2, 3)
    } else {
        (1, 2)
    }
}

/// Every lasso with stem length `<= max_stem` and loop length in
/// `1..=max_period`, stems outermost. Within a length, words follow
/// alphabet order.
pub fn enumerate_lassos(
    alphabet_len: usize,
    max_stem: usize,
    max_period: usize,
) -> impl Iterator<Item = LassoWord> {
    let stems: Vec<Vec<Letter>> = words_up_to(alphabet_len, 0, max_stem);
    let periods: Vec<Vec<Letter>> = words_up_to(alphabet_len, 1, max_period);
    stems.into_iter().flat_map(move |stem| {
        periods.clone().into_iter().map(move |period| LassoWord {
            stem: stem.clone(),
            period,
        })
    })
}

/// All words of length `min..=max`, shortest first, each length in
/// lexicographic order.
pub fn words_up_to(alphabet_len: usize, min: usize, max: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for len in min..=max {
        let mut word = vec![0; len];
        'words: loop {
            out.push(word.clone());
            // base-`alphabet_len` increment, last position fastest
            let mut i = len;
            loop {
                if i == 0 {
                    break 'words;
                }
                i -= 1;
                word[i] += 1;
                if word[i] < alphabet_len {
                    break;
                }
                word[i] = 0;
            }
        }
    }
    out
}

/// Number of lassos [`enumerate_lassos`] yields.
pub fn lasso_count(alphabet_len: usize, max_stem: usize, max_period: usize) -> usize {
    let sum = |lo: usize, hi: usize| (lo..=hi).map(|l| alphabet_len.pow(l as u32)).sum::<usize>();
    sum(0, max_stem) * sum(1, max_period)
}

/// `count` lassos drawn uniformly by length then letter, reproducible from
/// `seed`.
pub fn random_lassos(
    alphabet_len: usize,
    count: usize,
    max_stem: usize,
    max_period: usize,
    seed: u64,
) -> Vec<LassoWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let s = rng.random_range(0..=max_stem);
            let p = rng.random_range(1..=max_period.max(1));
            LassoWord {
                stem: (0..s).map(|_| rng.random_range(0..alphabet_len)).collect(),
                period: (0..p).map(|_| rng.random_range(0..alphabet_len)).collect(),
            }
        })
        .collect()
}
