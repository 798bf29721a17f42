//! Text formats.
//!
//! `AUT v1`, one automaton:
//!
//! ```text
//! aut <name>
//! alphabet <sym> <sym> ...
//! states <n>
//! initial <q>
//! trans <src> <sym> <color> <dst>
//! ...
//! end
//! ```
//!
//! A chain is `cocoa <name> <n>`, then `n` AUT blocks in chain order, then
//! `endcocoa`. Printing lists transitions by source, then alphabet order,
//! then target, and ends every line with `\n`.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::automaton::{Alphabet, Automaton, AutomatonBuilder};
use crate::cocoa::Cocoa;
use crate::error::{Error, Result};

pub fn write_aut(aut: &Automaton) -> String {
    let mut out = String::new();
    let al = aut.alphabet();
    writeln!(out, "aut {}", aut.name()).unwrap();
    writeln!(out, "alphabet {}", al.symbols().join(" ")).unwrap();
    writeln!(out, "states {}", aut.state_count()).unwrap();
    writeln!(out, "initial {}", aut.initial()).unwrap();
    for t in aut.transitions() {
        writeln!(
            out,
            "trans {} {} {} {}",
            t.source,
            al.symbol(t.letter),
            t.color,
            t.target
        )
        .unwrap();
    }
    out.push_str("end\n");
    out
}

pub fn write_cocoa(chain: &Cocoa) -> String {
    let mut out = format!("cocoa {} {}\n", chain.name(), chain.len());
    for m in chain.members() {
        out.push_str(&write_aut(m));
    }
    out.push_str("endcocoa\n");
    out
}

/// Numbered, non-empty lines.
struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim_end()))
                .filter(|(_, l)| !l.is_empty()),
        );
        Lines {
            inner: it.peekable(),
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        self.inner.next().ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("unexpected end of input, expected {what}"),
        })
    }

    /// Next line, which must start with `keyword`; returns the remainder.
    fn keyword(&mut self, keyword: &str) -> Result<(usize, &'a str)> {
        let (line, text) = self.next(keyword)?;
        match text.split_once(' ') {
            Some((k, rest)) if k == keyword => Ok((line, rest.trim())),
            _ if text == keyword => Ok((line, "")),
            _ => Err(Error::Parse {
                line,
                message: format!("expected `{keyword}`, found {text:?}"),
            }),
        }
    }

    fn peek_is(&mut self, keyword: &str) -> bool {
        self.inner
            .peek()
            .is_some_and(|(_, l)| l.split(' ').next() == Some(keyword))
    }

    fn finish(&mut self) -> Result<()> {
        match self.inner.next() {
            None => Ok(()),
            Some((line, text)) => Err(Error::Parse {
                line,
                message: format!("trailing content {text:?}"),
            }),
        }
    }
}

fn number(line: usize, field: &str, text: &str) -> Result<usize> {
    text.parse().map_err(|_| Error::Parse {
        line,
        message: format!("bad {field} {text:?}"),
    })
}

fn parse_aut_block(lines: &mut Lines<'_>) -> Result<Automaton> {
    let (line, name) = lines.keyword("aut")?;
    if name.is_empty() {
        return Err(Error::Parse {
            line,
            message: "missing automaton name".into(),
        });
    }
    let (line, symbols) = lines.keyword("alphabet")?;
    let alphabet = Alphabet::new(symbols.split(' ')).map_err(|e| Error::Parse {
        line,
        message: e.to_string(),
    })?;
    let alphabet = Arc::new(alphabet);
    let (line, n) = lines.keyword("states")?;
    let n = number(line, "state count", n)?;
    let (line, q0) = lines.keyword("initial")?;
    let q0 = number(line, "initial state", q0)?;
    let mut builder = AutomatonBuilder::new(name, Arc::clone(&alphabet), n);
    builder.initial(q0);
    while lines.peek_is("trans") {
        let (line, rest) = lines.keyword("trans")?;
        let fields: Vec<&str> = rest.split(' ').collect();
        let [src, sym, color, dst] = fields[..] else {
            return Err(Error::Parse {
                line,
                message: format!("expected `trans <src> <sym> <color> <dst>`, found {rest:?}"),
            });
        };
        let letter = alphabet.letter(sym).ok_or_else(|| Error::Parse {
            line,
            message: format!("symbol {sym:?} is not in the alphabet"),
        })?;
        let color = color.parse().map_err(|_| Error::Parse {
            line,
            message: format!("bad color {color:?}"),
        })?;
        builder.add(
            number(line, "source", src)?,
            letter,
            color,
            number(line, "target", dst)?,
        );
    }
    lines.keyword("end")?;
    builder.build()
}

/// Parses one AUT v1 automaton; invariant violations come back as
/// [`Error::InvalidAutomaton`] with the validator's diagnostics.
pub fn parse_aut(text: &str) -> Result<Automaton> {
    let mut lines = Lines::new(text);
    let aut = parse_aut_block(&mut lines)?;
    lines.finish()?;
    Ok(aut)
}

pub fn parse_cocoa(text: &str) -> Result<Cocoa> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.keyword("cocoa")?;
    let (name, count) = header.rsplit_once(' ').ok_or_else(|| Error::Parse {
        line,
        message: "expected `cocoa <name> <n>`".into(),
    })?;
    let count = number(line, "member count", count)?;
    let members = (0..count)
        .map(|_| parse_aut_block(&mut lines))
        .collect::<Result<Vec<_>>>()?;
    lines.keyword("endcocoa")?;
    lines.finish()?;
    Cocoa::new(name, members)
}

/// Either file kind, dispatched on the first keyword.
#[derive(Debug, Clone)]
pub enum Document {
    Automaton(Automaton),
    Cocoa(Cocoa),
}

pub fn parse_document(text: &str) -> Result<Document> {
    if text.trim_start().starts_with("cocoa ") {
        parse_cocoa(text).map(Document::Cocoa)
    } else {
        parse_aut(text).map(Document::Automaton)
    }
}
