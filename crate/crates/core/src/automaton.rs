//! Transition-colored ω-automata.
//!
//! An [`Automaton`] carries a color on every transition and is read with the
//! min-even parity condition: a run is accepting iff the least color seen
//! infinitely often is even. Co-Büchi automata are not a separate type; they
//! are the automata whose colors all lie in `{1, 2}` (see
//! [`Automaton::is_cobuchi`]).
//!
//! Automata are always input-complete and color-uniform: every `(state,
//! letter)` pair has at least one successor and all successors of a pair
//! share one color. [`AutomatonBuilder`] collects raw transitions and reports
//! violations through [`validate_automaton`].

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub type State = usize;
/// Index of a symbol in an [`Alphabet`].
pub type Letter = usize;
pub type Color = u32;

/// An ordered set of symbol names.
#[derive(Debug, Clone)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("no symbols".into()));
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(|c| c.is_whitespace() || c == '|' || c == '.') {
                return Err(Error::InvalidAlphabet(format!("bad symbol name {s:?}")));
            }
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(Alphabet { symbols, index })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> &str {
        &self.symbols[letter]
    }

    pub fn letter(&self, symbol: &str) -> Option<Letter> {
        self.index.get(symbol).copied()
    }

    /// Resolves `symbol`, failing with [`Error::AlphabetMismatch`].
    pub fn expect_letter(&self, symbol: &str) -> Result<Letter> {
        self.letter(symbol)
            .ok_or_else(|| Error::AlphabetMismatch(format!("unknown symbol {symbol:?}")))
    }

    pub fn letters(&self) -> std::ops::Range<Letter> {
        0..self.symbols.len()
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

/// One transition `(source, letter, color, target)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub source: State,
    pub letter: Letter,
    pub color: Color,
    pub target: State,
}

/// The successors of one `(state, letter)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub color: Color,
    /// Sorted and free of duplicates.
    pub targets: Vec<State>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagnosticKind {
    EmptyStateSet,
    InitialOutOfRange,
    SourceOutOfRange,
    TargetOutOfRange,
    LetterOutOfRange,
    InputIncomplete,
    NonUniformColor,
}

impl DiagnosticKind {
    pub fn code(self) -> &'static str {
        match self {
            DiagnosticKind::EmptyStateSet => "EMPTY_STATE_SET",
            DiagnosticKind::InitialOutOfRange => "INITIAL_OUT_OF_RANGE",
            DiagnosticKind::SourceOutOfRange => "SOURCE_OUT_OF_RANGE",
            DiagnosticKind::TargetOutOfRange => "TARGET_OUT_OF_RANGE",
            DiagnosticKind::LetterOutOfRange => "LETTER_OUT_OF_RANGE",
            DiagnosticKind::InputIncomplete => "INPUT_INCOMPLETE",
            DiagnosticKind::NonUniformColor => "NON_UNIFORM_COLOR",
        }
    }
}

/// A violated automaton invariant, located at a state and symbol where that
/// makes sense.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub state: Option<State>,
    pub symbol: Option<String>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.code())?;
        match (&self.state, &self.symbol) {
            (Some(q), Some(s)) => write!(f, " at ({q},'{s}')"),
            (Some(q), None) => write!(f, " at state {q}"),
            _ => Ok(()),
        }
    }
}

/// Raw transition collection; turns into an [`Automaton`] once valid.
#[derive(Debug, Clone)]
pub struct AutomatonBuilder {
    name: String,
    alphabet: Arc<Alphabet>,
    state_count: usize,
    initial: State,
    entries: Vec<Transition>,
    labels: Option<Vec<String>>,
}

impl AutomatonBuilder {
    pub fn new(name: impl Into<String>, alphabet: Arc<Alphabet>, state_count: usize) -> Self {
        AutomatonBuilder {
            name: name.into(),
            alphabet,
            state_count,
            initial: 0,
            entries: Vec::new(),
            labels: None,
        }
    }

    pub fn initial(&mut self, q: State) -> &mut Self {
        self.initial = q;
        self
    }

    pub fn add(&mut self, source: State, letter: Letter, color: Color, target: State) -> &mut Self {
        self.entries.push(Transition {
            source,
            letter,
            color,
            target,
        });
        self
    }

    /// Like [`add`](Self::add) but names the letter by its symbol.
    pub fn add_symbol(
        &mut self,
        source: State,
        symbol: &str,
        color: Color,
        target: State,
    ) -> Result<&mut Self> {
        let letter = self.alphabet.expect_letter(symbol)?;
        Ok(self.add(source, letter, color, target))
    }

    pub fn labels(&mut self, labels: Vec<String>) -> &mut Self {
        self.labels = Some(labels);
        self
    }

    pub fn validate(&self) -> Vec<Diagnostic> {
        validate_automaton(self)
    }

    pub fn build(&self) -> Result<Automaton> {
        let diags = self.validate();
        if !diags.is_empty() {
            return Err(Error::InvalidAutomaton(diags));
        }
        let letters = self.alphabet.len();
        let mut edges: Vec<Edge> = (0..self.state_count * letters)
            .map(|_| Edge {
                color: 0,
                targets: Vec::new(),
            })
            .collect();
        for t in &self.entries {
            let e = &mut edges[t.source * letters + t.letter];
            e.color = t.color;
            e.targets.push(t.target);
        }
        for e in &mut edges {
            e.targets.sort_unstable();
            e.targets.dedup();
        }
        let labels = self.labels.clone().filter(|l| l.len() == self.state_count);
        Ok(Automaton::from_edges(
            self.name.clone(),
            Arc::clone(&self.alphabet),
            self.initial,
            edges,
            labels,
        ))
    }
}

/// Checks every [`Automaton`] invariant on raw builder contents. An empty
/// result means [`AutomatonBuilder::build`] succeeds.
pub fn validate_automaton(raw: &AutomatonBuilder) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    let n = raw.state_count;
    let letters = raw.alphabet.len();
    let diag = |kind, state, letter: Option<Letter>| Diagnostic {
        kind,
        state,
        symbol: letter.map(|a| raw.alphabet.symbol(a).to_string()),
    };
    if n == 0 {
        diags.push(diag(DiagnosticKind::EmptyStateSet, None, None));
        return diags;
    }
    if raw.initial >= n {
        diags.push(diag(
            DiagnosticKind::InitialOutOfRange,
            Some(raw.initial),
            None,
        ));
    }
    let mut colors: Vec<BTreeSet<Color>> = vec![BTreeSet::new(); n * letters];
    for t in &raw.entries {
        if t.source >= n {
            diags.push(diag(DiagnosticKind::SourceOutOfRange, Some(t.source), None));
            continue;
        }
        if t.letter >= letters {
            diags.push(diag(DiagnosticKind::LetterOutOfRange, Some(t.source), None));
            continue;
        }
        if t.target >= n {
            diags.push(diag(
                DiagnosticKind::TargetOutOfRange,
                Some(t.source),
                Some(t.letter),
            ));
        }
        colors[t.source * letters + t.letter].insert(t.color);
    }
    for q in 0..n {
        for a in 0..letters {
            match colors[q * letters + a].len() {
                0 => diags.push(diag(DiagnosticKind::InputIncomplete, Some(q), Some(a))),
                1 => {}
                _ => diags.push(diag(DiagnosticKind::NonUniformColor, Some(q), Some(a))),
            }
        }
    }
    diags
}

/// A valid, immutable transition-colored automaton.
///
/// States are the dense range `0..state_count()`. Labels are display-only.
#[derive(Debug, Clone)]
pub struct Automaton {
    name: String,
    alphabet: Arc<Alphabet>,
    initial: State,
    edges: Vec<Edge>,
    labels: Option<Vec<String>>,
    deterministic: bool,
}

impl PartialEq for Automaton {
    /// Structural equality; names and labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.initial == other.initial
            && self.edges == other.edges
    }
}

impl Eq for Automaton {}

impl Automaton {
    /// Assembles an automaton from per-`(state, letter)` edges laid out as
    /// `state * letters + letter`. Callers guarantee validity.
    pub(crate) fn from_edges(
        name: String,
        alphabet: Arc<Alphabet>,
        initial: State,
        edges: Vec<Edge>,
        labels: Option<Vec<String>>,
    ) -> Self {
        debug_assert!(!alphabet.is_empty() && edges.len().is_multiple_of(alphabet.len()));
        debug_assert!(edges.iter().all(|e| !e.targets.is_empty()));
        let deterministic = edges.iter().all(|e| e.targets.len() == 1);
        Automaton {
            name,
            alphabet,
            initial,
            edges,
            labels,
            deterministic,
        }
    }

    /// Builds a deterministic automaton from a successor function.
    pub fn deterministic(
        name: impl Into<String>,
        alphabet: Arc<Alphabet>,
        state_count: usize,
        initial: State,
        mut step: impl FnMut(State, Letter) -> (State, Color),
    ) -> Result<Self> {
        let mut b = AutomatonBuilder::new(name, Arc::clone(&alphabet), state_count);
        b.initial(initial);
        for q in 0..state_count {
            for a in alphabet.letters() {
                let (t, c) = step(q, a);
                b.add(q, a, c, t);
            }
        }
        b.build()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Replaces the state labels.
    ///
    /// # Panics
    /// If `labels` does not have one entry per state.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.state_count(), "one label per state");
        self.labels = Some(labels);
        self
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.edges.len() / self.alphabet.len()
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    /// The same automaton started from `q`.
    pub fn with_initial(&self, q: State) -> Self {
        assert!(q < self.state_count(), "state {q} out of range");
        Automaton {
            initial: q,
            ..self.clone()
        }
    }

    pub fn edge(&self, q: State, a: Letter) -> &Edge {
        &self.edges[q * self.alphabet.len() + a]
    }

    /// Successor and color of `(q, a)`; the first successor when the
    /// automaton is nondeterministic.
    #[inline]
    pub fn step(&self, q: State, a: Letter) -> (State, Color) {
        let e = &self.edges[q * self.alphabet.len() + a];
        (e.targets[0], e.color)
    }

    pub fn label(&self, q: State) -> Option<&str> {
        self.labels.as_ref().map(|l| l[q].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn transitions(&self) -> impl Iterator<Item = Transition> + '_ {
        let letters = self.alphabet.len();
        self.edges.iter().enumerate().flat_map(move |(i, e)| {
            e.targets.iter().map(move |&target| Transition {
                source: i / letters,
                letter: i % letters,
                color: e.color,
                target,
            })
        })
    }

    /// Exactly one successor for every `(state, letter)`.
    pub fn is_deterministic(&self) -> bool {
        self.deterministic
    }

    /// All colors lie in `{1, 2}`.
    pub fn is_cobuchi(&self) -> bool {
        self.edges.iter().all(|e| e.color == 1 || e.color == 2)
    }

    pub fn colors(&self) -> BTreeSet<Color> {
        self.edges.iter().map(|e| e.color).collect()
    }

    pub(crate) fn require_deterministic(&self) -> Result<()> {
        if self.deterministic {
            Ok(())
        } else {
            Err(Error::NotDeterministic(self.name.clone()))
        }
    }

    pub(crate) fn require_cobuchi(&self) -> Result<()> {
        if self.is_cobuchi() {
            Ok(())
        } else {
            Err(Error::NotCobuchi(self.name.clone()))
        }
    }

    /// States reachable from the initial state, in breadth-first order.
    pub fn reachable_states(&self) -> Vec<State> {
        let mut seen = vec![false; self.state_count()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for a in self.alphabet.letters() {
                for &t in &self.edge(q, a).targets {
                    if !seen[t] {
                        seen[t] = true;
                        order.push(t);
                        queue.push_back(t);
                    }
                }
            }
        }
        order
    }

    /// The sub-automaton on reachable states, renumbered densely while
    /// keeping the relative order of the surviving states.
    pub fn reachable_restrict(&self) -> Automaton {
        let n = self.state_count();
        let mut keep = vec![false; n];
        for q in self.reachable_states() {
            keep[q] = true;
        }
        if keep.iter().all(|&k| k) {
            return self.clone();
        }
        let mut renumber = vec![usize::MAX; n];
        let mut next = 0;
        for q in 0..n {
            if keep[q] {
                renumber[q] = next;
                next += 1;
            }
        }
        let mut edges = Vec::with_capacity(next * self.alphabet.len());
        for q in (0..n).filter(|&q| keep[q]) {
            for a in self.alphabet.letters() {
                let e = self.edge(q, a);
                edges.push(Edge {
                    color: e.color,
                    targets: e.targets.iter().map(|&t| renumber[t]).collect(),
                });
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| (0..n).filter(|&q| keep[q]).map(|q| l[q].clone()).collect());
        Automaton::from_edges(
            self.name.clone(),
            Arc::clone(&self.alphabet),
            renumber[self.initial],
            edges,
            labels,
        )
    }

    /// Relabels letters along a bijection of the alphabet: a transition on
    /// `s` becomes a transition on `mapping[s]`. The alphabet and its order
    /// are unchanged.
    pub fn rename_letters(&self, mapping: &HashMap<String, String>) -> Result<Automaton> {
        let letters = self.alphabet.len();
        let mut image = vec![usize::MAX; letters];
        let mut hit = vec![false; letters];
        for a in self.alphabet.letters() {
            let from = self.alphabet.symbol(a);
            let to = mapping
                .get(from)
                .ok_or_else(|| Error::NotBijective(format!("no image for {from:?}")))?;
            let b = self
                .alphabet
                .letter(to)
                .ok_or_else(|| Error::NotBijective(format!("{to:?} is not in the alphabet")))?;
            if hit[b] {
                return Err(Error::NotBijective(format!("{to:?} is hit twice")));
            }
            hit[b] = true;
            image[a] = b;
        }
        if mapping.len() != letters {
            return Err(Error::NotBijective(
                "mapping names symbols outside the alphabet".into(),
            ));
        }
        let mut edges = self.edges.clone();
        for q in 0..self.state_count() {
            for a in 0..letters {
                edges[q * letters + image[a]] = self.edges[q * letters + a].clone();
            }
        }
        Ok(Automaton::from_edges(
            self.name.clone(),
            Arc::clone(&self.alphabet),
            self.initial,
            edges,
            self.labels.clone(),
        ))
    }
}
