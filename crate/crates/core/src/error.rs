use thiserror::Error;

use crate::automaton::Diagnostic;

/// Errors raised by constructions and decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("invalid automaton: {}", join_diagnostics(.0))]
    InvalidAutomaton(Vec<Diagnostic>),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("automaton `{0}` is not deterministic")]
    NotDeterministic(String),

    #[error("chain member {0} is not deterministic")]
    NotDeterministicMember(usize),

    #[error("automaton `{0}` is not a co-Büchi automaton (colors outside {{1,2}})")]
    NotCobuchi(String),

    #[error("letter mapping is not a bijection: {0}")]
    NotBijective(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("lasso loop must be non-empty")]
    EmptyLoop,

    #[error("operation needs at least one operand")]
    NoOperands,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

fn join_diagnostics(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
