//! State-count lower bounds for parity automata recognizing the language of
//! [`cocoa_c`](crate::families::cocoa_c)`(k)`.
//!
//! A node at level `(i, j)` is a strongly connected state set closed under
//! the letters `x_i..x_{k+1}, y_j..y_{k+1}`. While `m = max(i, j) <= k`, it
//! splits into two disjoint such sets at levels `(m + 1, j)` and
//! `(i, m + 1)`, each a terminal SCC of the node restricted to the smaller
//! letter set. Any automaton for the language must keep the two apart: a
//! shared state would let a run alternate between a loop seeing `x_m`
//! infinitely often and one seeing `y_m` infinitely often, and the mixed
//! word's color disagrees with the colors of the two loops. Starting at
//! `(1, 1)` from a terminal SCC, the leaves sit at `max(i, j) = k + 1`,
//! giving `2^k` pairwise disjoint non-empty state sets.
//!
//! [`verify_certificate`] rechecks a certificate from the automaton's
//! transitions alone.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

use crate::automaton::{Alphabet, Automaton, Letter, State};
use crate::error::Error;
use crate::families::c_alphabet;
use crate::scc::{terminal_sccs, terminal_sccs_within, Scc};

/// Level pair `(i, j)`, 1-based.
pub type Level = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LowerBoundError {
    /// The state set has a transition on one of its letters leaving it.
    #[error("NOT_CLOSED at level {level:?}: state {state} leaves the set on {symbol}")]
    NotClosed {
        level: Level,
        state: State,
        symbol: String,
    },
    /// The two halves of a split share states, so the automaton does not
    /// recognize the language.
    #[error("OVERLAP at level {level:?}: states {shared:?} are in both halves")]
    Overlap {
        level: Level,
        shared: BTreeSet<State>,
    },
    #[error("NOT_APPLICABLE at level {level:?}: nothing to split above k = {k}")]
    NotApplicable { level: Level, k: usize },
    #[error("NO_SUB_SCC at level {level:?}: restricted subgraph has no terminal SCC")]
    NoSubScc { level: Level },
    #[error("WRONG_ALPHABET: expected x_1..x_{}, y_1..y_{}", .k + 1, .k + 1)]
    WrongAlphabet { k: usize },
    /// A certificate failed an independent check.
    #[error("INVALID_CERTIFICATE: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] Error),
}

pub type Result<T, E = LowerBoundError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertNode {
    pub level: Level,
    pub states: BTreeSet<State>,
    /// Sorted letter indices of `level`.
    pub letters: Vec<Letter>,
    /// The x-side and y-side halves, absent at leaves.
    pub children: Option<Box<(CertNode, CertNode)>>,
}

impl CertNode {
    pub fn leaf_count(&self) -> usize {
        match &self.children {
            None => 1,
            Some(c) => c.0.leaf_count() + c.1.leaf_count(),
        }
    }

    /// Pre-order traversal.
    pub fn nodes(&self) -> Vec<&CertNode> {
        let mut out = vec![self];
        if let Some(c) = &self.children {
            out.extend(c.0.nodes());
            out.extend(c.1.nodes());
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundCertificate {
    pub k: usize,
    pub bound: usize,
    pub root: CertNode,
}

/// Letters `x_i..x_{k+1}, y_j..y_{k+1}` as indices of [`c_alphabet`]`(k)`.
pub fn level_letters(k: usize, (i, j): Level) -> Vec<Letter> {
    (i - 1..=k).chain(k + j..=2 * k + 1).collect()
}

/// True iff no transition from `states` on `letters` leaves `states`.
pub fn closed_under(dpw: &Automaton, states: &BTreeSet<State>, letters: &[Letter]) -> bool {
    first_escape(dpw, states, letters).is_none()
}

fn first_escape(
    dpw: &Automaton,
    states: &BTreeSet<State>,
    letters: &[Letter],
) -> Option<(State, Letter)> {
    states.iter().find_map(|&q| {
        letters
            .iter()
            .find(|&&a| dpw.edge(q, a).targets.iter().any(|t| !states.contains(t)))
            .map(|&a| (q, a))
    })
}

fn require_closed(dpw: &Automaton, states: &BTreeSet<State>, k: usize, level: Level) -> Result<()> {
    match first_escape(dpw, states, &level_letters(k, level)) {
        None => Ok(()),
        Some((state, a)) => Err(LowerBoundError::NotClosed {
            level,
            state,
            symbol: dpw.alphabet().symbol(a).to_string(),
        }),
    }
}

fn check_alphabet(dpw: &Automaton, k: usize) -> Result<()> {
    let expected = c_alphabet(k)?;
    if **dpw.alphabet() != *expected {
        return Err(LowerBoundError::WrongAlphabet { k });
    }
    Ok(())
}

fn terminal_within(
    dpw: &Automaton,
    states: &BTreeSet<State>,
    k: usize,
    level: Level,
) -> Result<Scc> {
    terminal_sccs_within(dpw, Some(states), &level_letters(k, level))
        .into_iter()
        .next()
        .ok_or(LowerBoundError::NoSubScc { level })
}

/// Splits a state set at `level` into its x-side and y-side halves.
pub fn lemma1_split(
    dpw: &Automaton,
    states: &BTreeSet<State>,
    level: Level,
    k: usize,
) -> Result<(Scc, Scc)> {
    check_alphabet(dpw, k)?;
    let (i, j) = level;
    let m = i.max(j);
    if i == 0 || j == 0 || m > k {
        return Err(LowerBoundError::NotApplicable { level, k });
    }
    require_closed(dpw, states, k, level)?;
    let x = terminal_within(dpw, states, k, (m + 1, j))?;
    let y = terminal_within(dpw, states, k, (i, m + 1))?;
    let shared: BTreeSet<State> = x.states.intersection(&y.states).copied().collect();
    if !shared.is_empty() {
        return Err(LowerBoundError::Overlap { level, shared });
    }
    Ok((x, y))
}

fn build_node(
    dpw: &Automaton,
    states: BTreeSet<State>,
    level: Level,
    k: usize,
) -> Result<CertNode> {
    let (i, j) = level;
    let m = i.max(j);
    let children = if m > k {
        None
    } else {
        let (x, y) = lemma1_split(dpw, &states, level, k)?;
        let xn = build_node(dpw, x.states, (m + 1, j), k)?;
        let yn = build_node(dpw, y.states, (i, m + 1), k)?;
        Some(Box::new((xn, yn)))
    };
    Ok(CertNode {
        level,
        states,
        letters: level_letters(k, level),
        children,
    })
}

/// Builds a certificate that `dpw` has at least `2^k` states, starting from
/// the terminal SCC with the least state. Fails with
/// [`LowerBoundError::Overlap`] when a split collapses, which shows that
/// `dpw` does not recognize the language. Whether `dpw` does recognize it
/// is not checked here.
pub fn certify_lower_bound(dpw: &Automaton, k: usize) -> Result<LowerBoundCertificate> {
    if k == 0 {
        return Err(Error::IndexOutOfRange("k must be at least 1".into()).into());
    }
    check_alphabet(dpw, k)?;
    let root = terminal_sccs(dpw)
        .into_iter()
        .next()
        .ok_or(LowerBoundError::NoSubScc { level: (1, 1) })?;
    let root = build_node(dpw, root.states, (1, 1), k)?;
    Ok(LowerBoundCertificate {
        k,
        bound: root.leaf_count(),
        root,
    })
}

fn bfs(
    n: usize,
    from: State,
    inside: &BTreeSet<State>,
    succ: impl Fn(State) -> Vec<State>,
) -> BTreeSet<State> {
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    let mut out = BTreeSet::from([from]);
    while let Some(q) = queue.pop_front() {
        for t in succ(q) {
            if !seen[t] && (inside.is_empty() || inside.contains(&t)) {
                seen[t] = true;
                out.insert(t);
                queue.push_back(t);
            }
        }
    }
    out
}

/// Rechecks every certificate condition against `dpw`: levels and letter
/// sets, non-emptiness, closure, strong connectivity and reachability of
/// each node, nesting and disjointness of halves, leaf depth and the bound.
pub fn verify_certificate(dpw: &Automaton, cert: &LowerBoundCertificate) -> Result<()> {
    let k = cert.k;
    let bad = |msg: String| Err(LowerBoundError::Invalid(msg));
    check_alphabet(dpw, k)?;
    if cert.root.level != (1, 1) {
        return bad(format!("root level is {:?}", cert.root.level));
    }
    let n = dpw.state_count();
    let all = BTreeSet::new();
    let reachable = bfs(n, dpw.initial(), &all, |q| {
        dpw.alphabet()
            .letters()
            .flat_map(|a| dpw.edge(q, a).targets.clone())
            .collect()
    });
    let mut leaves = 0;
    for node in cert.root.nodes() {
        let (i, j) = node.level;
        if i == 0 || j == 0 {
            return bad(format!("level {:?} is not 1-based", node.level));
        }
        if node.letters != level_letters(k, node.level) {
            return bad(format!("letters of level {:?} are wrong", node.level));
        }
        let Some(&start) = node.states.iter().next() else {
            return bad(format!("empty state set at level {:?}", node.level));
        };
        if let Some(&q) = node
            .states
            .iter()
            .find(|&&q| q >= n || !reachable.contains(&q))
        {
            return bad(format!(
                "state {q} at level {:?} is not a reachable state",
                node.level
            ));
        }
        if !closed_under(dpw, &node.states, &node.letters) {
            return bad(format!(
                "level {:?} is not closed under its letters",
                node.level
            ));
        }
        let forward = bfs(n, start, &node.states, |q| {
            node.letters
                .iter()
                .flat_map(|&a| dpw.edge(q, a).targets.clone())
                .collect()
        });
        let backward = bfs(n, start, &node.states, |q| {
            node.states
                .iter()
                .copied()
                .filter(|&p| {
                    node.letters
                        .iter()
                        .any(|&a| dpw.edge(p, a).targets.contains(&q))
                })
                .collect()
        });
        if forward != node.states || backward != node.states {
            return bad(format!("level {:?} is not strongly connected", node.level));
        }
        let m = i.max(j);
        match &node.children {
            None if m == k + 1 => leaves += 1,
            None => return bad(format!("leaf at level {:?} is too shallow", node.level)),
            Some(_) if m > k => return bad(format!("node at level {:?} is too deep", node.level)),
            Some(c) => {
                if c.0.level != (m + 1, j) || c.1.level != (i, m + 1) {
                    return bad(format!(
                        "children of level {:?} have wrong levels",
                        node.level
                    ));
                }
                if !c.0.states.is_subset(&node.states) || !c.1.states.is_subset(&node.states) {
                    return bad(format!("children of level {:?} are not nested", node.level));
                }
                if !c.0.states.is_disjoint(&c.1.states) {
                    return bad(format!("children of level {:?} overlap", node.level));
                }
            }
        }
    }
    if cert.bound != leaves {
        return bad(format!("bound {} but {leaves} leaves", cert.bound));
    }
    Ok(())
}

/// Collapses state `drop` into `keep`: every transition into `drop` is
/// redirected to `keep`, then unreachable states are removed.
pub fn merge_states(aut: &Automaton, keep: State, drop: State) -> crate::error::Result<Automaton> {
    let mut b = crate::automaton::AutomatonBuilder::new(
        format!("{}-merged", aut.name()),
        aut.alphabet().clone(),
        aut.state_count(),
    );
    let redirect = |q: State| if q == drop { keep } else { q };
    b.initial(redirect(aut.initial()));
    for t in aut.transitions() {
        b.add(t.source, t.letter, t.color, redirect(t.target));
    }
    Ok(b.build()?.reachable_restrict())
}

impl LowerBoundCertificate {
    /// S-expression text:
    ///
    /// ```text
    /// (cert (k 1) (bound 2)
    ///   (node (level 1 1) (states 0 1) (letters x_1 x_2 y_1 y_2)
    ///     (node (level 2 1) (states 1) (letters x_2 y_1 y_2))
    ///     (node (level 1 2) (states 0) (letters x_1 x_2 y_2))))
    /// ```
    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        let mut out = format!("(cert (k {}) (bound {})", self.k, self.bound);
        write_node(&mut out, &self.root, alphabet, 1);
        out.push_str(")\n");
        out
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> crate::error::Result<Self> {
        let tokens = tokenize(text);
        let mut pos = 0;
        let sexp = read_sexp(&tokens, &mut pos)?;
        if let Some(t) = tokens.get(pos) {
            return Err(parse_error(t.line, "trailing content after certificate"));
        }
        let items = expect_list(&sexp, "cert")?;
        let [k, bound, root] = items else {
            return Err(parse_error(
                sexp.line,
                "expected (cert (k ..) (bound ..) (node ..))",
            ));
        };
        let k = single_number(k, "k")?;
        let bound = single_number(bound, "bound")?;
        let root = read_node(root, alphabet)?;
        Ok(LowerBoundCertificate { k, bound, root })
    }
}

fn write_node(out: &mut String, node: &CertNode, alphabet: &Alphabet, depth: usize) {
    let states: Vec<String> = node.states.iter().map(ToString::to_string).collect();
    let letters: Vec<&str> = node.letters.iter().map(|&a| alphabet.symbol(a)).collect();
    write!(
        out,
        "\n{}(node (level {} {}) (states {}) (letters {})",
        "  ".repeat(depth),
        node.level.0,
        node.level.1,
        states.join(" "),
        letters.join(" ")
    )
    .unwrap();
    if let Some(c) = &node.children {
        write_node(out, &c.0, alphabet, depth + 1);
        write_node(out, &c.1, alphabet, depth + 1);
    }
    out.push(')');
}

struct Token<'a> {
    line: usize,
    text: &'a str,
}

fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let mut start = None;
        for (i, ch) in line.char_indices() {
            let boundary = ch == '(' || ch == ')' || ch.is_whitespace();
            if boundary {
                if let Some(s) = start.take() {
                    tokens.push(Token {
                        line: n + 1,
                        text: &line[s..i],
                    });
                }
                if !ch.is_whitespace() {
                    tokens.push(Token {
                        line: n + 1,
                        text: &line[i..i + 1],
                    });
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
        if let Some(s) = start {
            tokens.push(Token {
                line: n + 1,
                text: &line[s..],
            });
        }
    }
    tokens
}

enum SexpKind<'a> {
    Atom(&'a str),
    List(Vec<Sexp<'a>>),
}

struct Sexp<'a> {
    line: usize,
    kind: SexpKind<'a>,
}

fn parse_error(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

fn read_sexp<'a>(tokens: &[Token<'a>], pos: &mut usize) -> crate::error::Result<Sexp<'a>> {
    let last_line = tokens.last().map_or(0, |t| t.line);
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| parse_error(last_line, "unexpected end of certificate"))?;
    *pos += 1;
    match tok.text {
        "(" => {
            let mut items = Vec::new();
            loop {
                match tokens.get(*pos) {
                    None => return Err(parse_error(last_line, "unclosed parenthesis")),
                    Some(t) if t.text == ")" => {
                        *pos += 1;
                        break;
                    }
                    Some(_) => items.push(read_sexp(tokens, pos)?),
                }
            }
            Ok(Sexp {
                line: tok.line,
                kind: SexpKind::List(items),
            })
        }
        ")" => Err(parse_error(tok.line, "unexpected `)`")),
        atom => Ok(Sexp {
            line: tok.line,
            kind: SexpKind::Atom(atom),
        }),
    }
}

/// The items after the head atom of a list headed by `head`.
fn expect_list<'s, 'a>(sexp: &'s Sexp<'a>, head: &str) -> crate::error::Result<&'s [Sexp<'a>]> {
    match &sexp.kind {
        SexpKind::List(items) if matches!(items.first(), Some(Sexp { kind: SexpKind::Atom(h), .. }) if *h == head) => {
            Ok(&items[1..])
        }
        _ => Err(parse_error(sexp.line, &format!("expected ({head} ...)"))),
    }
}

fn atoms<'a>(items: &[Sexp<'a>]) -> crate::error::Result<Vec<(usize, &'a str)>> {
    items
        .iter()
        .map(|s| match s.kind {
            SexpKind::Atom(a) => Ok((s.line, a)),
            SexpKind::List(_) => Err(parse_error(s.line, "expected an atom")),
        })
        .collect()
}

fn numbers(items: &[Sexp<'_>]) -> crate::error::Result<Vec<usize>> {
    atoms(items)?
        .into_iter()
        .map(|(line, a)| {
            a.parse()
                .map_err(|_| parse_error(line, &format!("bad number {a:?}")))
        })
        .collect()
}

fn single_number(sexp: &Sexp<'_>, head: &str) -> crate::error::Result<usize> {
    match numbers(expect_list(sexp, head)?)?[..] {
        [v] => Ok(v),
        _ => Err(parse_error(sexp.line, &format!("expected ({head} <n>)"))),
    }
}

fn read_node(sexp: &Sexp<'_>, alphabet: &Alphabet) -> crate::error::Result<CertNode> {
    let items = expect_list(sexp, "node")?;
    if items.len() != 3 && items.len() != 5 {
        return Err(parse_error(
            sexp.line,
            "a node has level, states, letters and 0 or 2 children",
        ));
    }
    let level = match numbers(expect_list(&items[0], "level")?)?[..] {
        [i, j] => (i, j),
        _ => return Err(parse_error(items[0].line, "expected (level <i> <j>)")),
    };
    let states = numbers(expect_list(&items[1], "states")?)?
        .into_iter()
        .collect();
    let letters = atoms(expect_list(&items[2], "letters")?)?
        .into_iter()
        .map(|(line, s)| {
            alphabet
                .letter(s)
                .ok_or_else(|| parse_error(line, &format!("unknown symbol {s:?}")))
        })
        .collect::<crate::error::Result<Vec<_>>>()?;
    let children = if items.len() == 5 {
        Some(Box::new((
            read_node(&items[3], alphabet)?,
            read_node(&items[4], alphabet)?,
        )))
    } else {
        None
    };
    Ok(CertNode {
        level,
        states,
        letters,
        children,
    })
}
