//! Chains of co-Büchi automata (COCOA) and deterministic parity automata.
//!
//! The crate covers the transition-colored automaton model ([`automaton`]),
//! evaluation on ultimately periodic words ([`lasso`]), the chain
//! representation ([`cocoa`]), constructions and decision procedures
//! ([`ops`]), generators for the conciseness families ([`families`]) and
//! a checkable state-count lower bound for one of them ([`lowerbound`]).
//!
//! ```
//! use cocoa_kit::{families, lasso::{cocoa_color, LassoWord}, ops};
//!
//! let chain = families::cocoa_c(2).unwrap();
//! let w = LassoWord::parse("|x_2 y_1", chain.alphabet()).unwrap();
//! assert_eq!(cocoa_color(&chain, &w).unwrap(), 1);
//!
//! let dpw = ops::cocoa_to_dpw(&chain).unwrap();
//! assert_eq!(dpw.state_count(), 4);
//! ```
//!
//! The guide in `book/` walks through the concepts; its code samples are
//! compiled as doctests of this crate.

pub mod automaton;
pub mod cocoa;
pub mod error;
pub mod families;
pub mod format;
pub mod lasso;
pub mod lowerbound;
pub mod ops;
pub mod random;
pub mod scc;

pub use automaton::{Alphabet, Automaton, AutomatonBuilder, Color, Letter, State};
pub use cocoa::Cocoa;
pub use error::{Error, Result};
pub use lasso::LassoWord;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/automata.md")]
    mod automata {}
    #[doc = include_str!("../../../book/src/lassos.md")]
    mod lassos {}
    #[doc = include_str!("../../../book/src/chains.md")]
    mod chains {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/lower-bounds.md")]
    mod lower_bounds {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
