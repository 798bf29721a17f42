//! A chain for the intersection of the two window chain languages.
//!
//! Level `u` is the union over the pairs `(i, j)` of [`gamma`]`(k, u)` of
//! `L_i ∩ L̂_j`, built with the co-Büchi product constructions.

use crate::automaton::Automaton;
use crate::cocoa::{empty_cobuchi, Cocoa};
use crate::error::{Error, Result};
use crate::ops::{dcw_conjunction, dcw_disjunction};

use super::{check_k, dcw_l, dcw_lhat, window_alphabet, IndexPair};

/// Pairs in `{0..k}²` grouped under level `u` (`0 <= u <= 2k`). Even `u`:
/// `i + j = u` with both even. Odd `u`: `u <= i + j <= u + 1` with at least
/// one odd coordinate. Sorted.
pub fn gamma(k: usize, u: usize) -> Result<Vec<IndexPair>> {
    check_k(k)?;
    if u > 2 * k {
        return Err(Error::IndexOutOfRange(format!(
            "level {u} exceeds 2k = {}",
            2 * k
        )));
    }
    let mut pairs = Vec::new();
    for i in 0..=k {
        for j in 0..=k {
            let s = i + j;
            let keep = if u.is_multiple_of(2) {
                s == u && i % 2 == 0 && j % 2 == 0
            } else {
                (u..=u + 1).contains(&s) && (i % 2 == 1 || j % 2 == 1)
            };
            if keep {
                pairs.push((i, j));
            }
        }
    }
    Ok(pairs)
}

/// The componentwise-maximal pairs, sorted and without duplicates.
pub fn nondominated(pairs: &[IndexPair]) -> Vec<IndexPair> {
    let mut out: Vec<IndexPair> = pairs
        .iter()
        .copied()
        .filter(|&(i, j)| {
            !pairs
                .iter()
                .any(|&(a, b)| a >= i && b >= j && (a, b) != (i, j))
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `⋃_{(i,j) ∈ pairs} L_i ∩ L̂_j` as one deterministic co-Büchi automaton;
/// no pairs give the empty language.
pub fn theorem2_level(k: usize, u: usize, pairs: &[IndexPair]) -> Result<Automaton> {
    if pairs.is_empty() {
        return Ok(empty_cobuchi(window_alphabet(k)?).with_name(format!("t2-{k}-{u}")));
    }
    let conjunctions = pairs
        .iter()
        .map(|&(i, j)| dcw_conjunction(&[dcw_l(k, i)?, dcw_lhat(k, j)?]))
        .collect::<Result<Vec<_>>>()?;
    Ok(dcw_disjunction(&conjunctions)?.with_name(format!("t2-{k}-{u}")))
}

fn chain(
    k: usize,
    name: String,
    select: impl Fn(Vec<IndexPair>) -> Vec<IndexPair>,
) -> Result<Cocoa> {
    check_k(k)?;
    let members = (1..=2 * k)
        .map(|u| theorem2_level(k, u, &select(gamma(k, u)?)))
        .collect::<Result<Vec<_>>>()?;
    Cocoa::new(name, members)
}

/// The `2k`-member chain using every pair of [`gamma`].
pub fn cocoa_theorem2(k: usize) -> Result<Cocoa> {
    chain(k, format!("theorem2-{k}"), |p| p)
}

/// Variant keeping only the [`nondominated`] pairs of each level. Its
/// members need not form a falling chain; it exists for size comparison.
pub fn cocoa_theorem2_nondominated(k: usize) -> Result<Cocoa> {
    chain(k, format!("theorem2-nd-{k}"), |p| nondominated(&p))
}
