//! HOA v1 export. Letters become one-hot atomic propositions named after the
//! symbols; colors become acceptance sets under `parity min even`.

use std::fmt::Write;

use cocoa_kit::Automaton;

/// `Inf(0) | (Fin(1) & (Inf(2) | ...))` over `sets` acceptance sets.
fn min_even(sets: u32) -> String {
    let mut acc = String::new();
    let mut open = 0;
    for c in 0..sets {
        let atom = if c % 2 == 0 {
            format!("Inf({c})")
        } else {
            format!("Fin({c})")
        };
        if c + 1 == sets {
            acc.push_str(&atom);
        } else {
            let op = if c % 2 == 0 { '|' } else { '&' };
            let _ = write!(acc, "{atom} {op} (");
            open += 1;
        }
    }
    acc.push_str(&")".repeat(open));
    acc
}

fn label(letter: usize, letters: usize) -> String {
    (0..letters)
        .map(|p| {
            if p == letter {
                p.to_string()
            } else {
                format!("!{p}")
            }
        })
        .collect::<Vec<_>>()
        .join("&")
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn write_hoa(aut: &Automaton) -> String {
    let al = aut.alphabet();
    let sets = aut.colors().last().map_or(1, |&c| c + 1);
    let mut out = String::new();
    let _ = writeln!(out, "HOA: v1");
    let _ = writeln!(out, "name: {}", quoted(aut.name()));
    let _ = writeln!(out, "States: {}", aut.state_count());
    let _ = writeln!(out, "Start: {}", aut.initial());
    let aps: Vec<String> = al.symbols().iter().map(|s| quoted(s)).collect();
    let _ = writeln!(out, "AP: {} {}", al.len(), aps.join(" "));
    let _ = writeln!(out, "acc-name: parity min even {sets}");
    let _ = writeln!(out, "Acceptance: {sets} {}", min_even(sets));
    let mut props = vec!["trans-labels", "explicit-labels", "trans-acc", "colored"];
    if aut.is_deterministic() {
        props.push("deterministic");
    }
    let _ = writeln!(out, "properties: {}", props.join(" "));
    out.push_str("--BODY--\n");
    let mut transitions: Vec<_> = aut.transitions().collect();
    transitions.sort_by_key(|t| (t.source, t.letter, t.target, t.color));
    for q in 0..aut.state_count() {
        match aut.label(q) {
            Some(l) => {
                let _ = writeln!(out, "State: {q} {}", quoted(l));
            }
            None => {
                let _ = writeln!(out, "State: {q}");
            }
        }
        for t in transitions.iter().filter(|t| t.source == q) {
            let _ = writeln!(
                out,
                "[{}] {} {{{}}}",
                label(t.letter, al.len()),
                t.target,
                t.color
            );
        }
    }
    out.push_str("--END--\n");
    out
}
