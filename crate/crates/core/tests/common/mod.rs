//! Membership oracles that read lassos through their symbol names, so they
//! share nothing with the generators' letter layout.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cocoa_kit::{Alphabet, LassoWord};

/// `("a", 7)` for `a_7`; `("1", 0)` style names map to `(name, 0)`.
pub fn split(symbol: &str) -> (&str, usize) {
    match symbol.split_once('_') {
        Some((f, n)) => (f, n.parse().unwrap()),
        None => (symbol, 0),
    }
}

pub struct Named<'a> {
    pub stem: Vec<&'a str>,
    pub period: Vec<&'a str>,
}

pub fn named<'a>(w: &LassoWord, al: &'a Alphabet) -> Named<'a> {
    Named {
        stem: w.stem().iter().map(|&a| al.symbol(a)).collect(),
        period: w.period().iter().map(|&a| al.symbol(a)).collect(),
    }
}

impl Named<'_> {
    pub fn recurring(&self) -> BTreeSet<(&str, usize)> {
        self.period.iter().map(|s| split(s)).collect()
    }

    pub fn count_in_stem(&self, symbol: &str) -> usize {
        self.stem.iter().filter(|&&s| s == symbol).count()
    }
}

/// Member `j` of the two-state chain family: the word sees finitely many
/// `x_1..x_j` or finitely many `y_1..y_j`.
pub fn c_member(j: usize, w: &Named<'_>) -> bool {
    let inf = w.recurring();
    let hits = |f: &str| inf.iter().any(|&(g, n)| g == f && n <= j);
    !hits("x") || !hits("y")
}

pub fn c_color(k: usize, w: &Named<'_>) -> usize {
    (1..=k).filter(|&j| c_member(j, w)).max().unwrap_or(0)
}

/// Infinitely often only `a_m` with `m` in `lo..=hi`.
fn eventually_within(w: &Named<'_>, lo: usize, hi: usize) -> bool {
    w.recurring()
        .iter()
        .all(|&(f, n)| f == "a" && lo <= n && n <= hi)
}

/// `((Σ∖X_i) + X_i (Σ∖X_i)* X_i)* (a_0 + … + a_{4k-2i+1})^ω + Σ* (a_0 + … + a_{4k-2i})^ω`.
pub fn l_level(k: usize, i: usize, w: &Named<'_>) -> bool {
    if i == 0 {
        return true;
    }
    let flip = format!("X_{i}");
    let even = w.count_in_stem(&flip).is_multiple_of(2) && !w.period.contains(&flip.as_str());
    (even && eventually_within(w, 0, 4 * k - 2 * i + 1)) || eventually_within(w, 0, 4 * k - 2 * i)
}

/// The hatted levels: `Y_j` parity and windows reaching up to `a_{4k-1}`.
pub fn lhat_level(k: usize, j: usize, w: &Named<'_>) -> bool {
    if j == 0 {
        return true;
    }
    let flip = format!("Y_{j}");
    let even = w.count_in_stem(&flip).is_multiple_of(2) && !w.period.contains(&flip.as_str());
    (even && eventually_within(w, 2 * j - 2, 4 * k - 1))
        || eventually_within(w, 2 * j - 1, 4 * k - 1)
}

pub fn top_pair(k: usize, w: &Named<'_>) -> (usize, usize) {
    let i = (0..=k).filter(|&i| l_level(k, i, w)).max().unwrap();
    let j = (0..=k).filter(|&j| lhat_level(k, j, w)).max().unwrap();
    (i, j)
}

/// Chain color of the intersection chain from the top pair.
pub fn intersection_color(k: usize, w: &Named<'_>) -> usize {
    let (i, j) = top_pair(k, w);
    if i % 2 == 1 && j % 2 == 1 {
        i + j - 1
    } else {
        i + j
    }
}

/// Least recurring letter is even.
pub fn least_recurring_even(w: &Named<'_>) -> bool {
    let least: usize = w
        .period
        .iter()
        .map(|s| s.parse::<usize>().unwrap())
        .min()
        .unwrap();
    least.is_multiple_of(2)
}

/// The four conditions over `{a, b, c}`, decided on the letters: infinitely
/// many `a`, or finitely many `a` with the loop free of `bb` (cyclically),
/// and infinitely many `b` if the total count of `a` is even.
pub fn four_conditions(w: &Named<'_>) -> bool {
    if w.period.contains(&"a") {
        return true;
    }
    let p = &w.period;
    let b_then_not_c = (0..p.len()).any(|t| p[t] == "b" && p[(t + 1) % p.len()] != "c");
    if b_then_not_c {
        return false;
    }
    let even_a = w.count_in_stem("a").is_multiple_of(2);
    !even_a || p.contains(&"b")
}
