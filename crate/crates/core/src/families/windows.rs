//! The window languages over `X_1..X_k, Y_1..Y_k, a_0..a_{4k-1}`.
//!
//! `L_i` (for `1 <= i <= k`) holds the words that eventually read only
//! lower-case letters from a window: `a_0..a_{4k-2i+1}` when `X_i` occurred
//! an even number of times, `a_0..a_{4k-2i}` otherwise. The hatted `L̂_j`
//! mirrors this with `Y_j` and the windows `a_{2j-2}..a_{4k-1}` and
//! `a_{2j-1}..a_{4k-1}`. Level 0 of both is the universal language.

use std::collections::HashMap;
use std::sync::Arc;

use crate::automaton::{Alphabet, Automaton, Color, Letter, State};
use crate::cocoa::{universal_cobuchi, Cocoa};
use crate::error::Result;
use crate::lasso::LassoWord;

use super::{check_k, check_level, window_alphabet, IndexPair};

fn lower_index(k: usize, a: Letter) -> Option<usize> {
    a.checked_sub(2 * k)
}

fn parity_labels() -> Vec<String> {
    vec!["even".into(), "odd".into()]
}

/// Two states tracking the parity of the flip letter; `in_window(q, m)`
/// decides whether `a_m` is accepting in state `q`.
fn window_dcw(
    name: String,
    k: usize,
    al: Arc<Alphabet>,
    flip: Letter,
    in_window: impl Fn(State, usize) -> bool,
) -> Result<Automaton> {
    let aut = Automaton::deterministic(name, al, 2, 0, |q, a| {
        if a == flip {
            return (1 - q, 1);
        }
        match lower_index(k, a) {
            Some(m) if in_window(q, m) => (q, 2),
            _ => (q, 1),
        }
    })?;
    Ok(aut.with_labels(parity_labels()))
}

/// Deterministic co-Büchi automaton for `L_i`.
pub fn dcw_l(k: usize, i: usize) -> Result<Automaton> {
    check_level(k, i)?;
    dcw_l_over(k, i, window_alphabet(k)?)
}

fn dcw_l_over(k: usize, i: usize, al: Arc<Alphabet>) -> Result<Automaton> {
    let name = format!("l{k}-{i}");
    if i == 0 {
        return Ok(universal_cobuchi(al).with_name(name));
    }
    let top = 4 * k - 2 * i;
    window_dcw(name, k, al, i - 1, move |q, m| m <= top + 1 - q)
}

/// Deterministic co-Büchi automaton for `L̂_j`.
pub fn dcw_lhat(k: usize, j: usize) -> Result<Automaton> {
    check_level(k, j)?;
    dcw_lhat_over(k, j, window_alphabet(k)?)
}

fn dcw_lhat_over(k: usize, j: usize, al: Arc<Alphabet>) -> Result<Automaton> {
    let name = format!("lhat{k}-{j}");
    if j == 0 {
        return Ok(universal_cobuchi(al).with_name(name));
    }
    let bottom = 2 * j - 2;
    window_dcw(name, k, al, k + j - 1, move |q, m| m >= bottom + q)
}

/// The chain `L_1, …, L_k`.
pub fn chain_l(k: usize) -> Result<Cocoa> {
    let al = window_alphabet(k)?;
    let members = (1..=k)
        .map(|i| dcw_l_over(k, i, Arc::clone(&al)))
        .collect::<Result<Vec<_>>>()?;
    Cocoa::new(format!("chain-l-{k}"), members)
}

/// The chain `L̂_1, …, L̂_k`.
pub fn chain_lhat(k: usize) -> Result<Cocoa> {
    let al = window_alphabet(k)?;
    let members = (1..=k)
        .map(|j| dcw_lhat_over(k, j, Arc::clone(&al)))
        .collect::<Result<Vec<_>>>()?;
    Cocoa::new(format!("chain-lhat-{k}"), members)
}

/// Lower-case indices of the loop, or `None` if it reads an upper-case
/// letter.
fn loop_window(k: usize, w: &LassoWord) -> Option<(usize, usize)> {
    let ms: Option<Vec<usize>> = w.period().iter().map(|&a| lower_index(k, a)).collect();
    let ms = ms?;
    Some((*ms.iter().min()?, *ms.iter().max()?))
}

fn stem_count(w: &LassoWord, letter: Letter) -> usize {
    w.stem().iter().filter(|&&a| a == letter).count()
}

/// Membership in `L_i` decided from the loop's letters and the number of
/// `X_i` in the stem.
pub fn in_l(k: usize, i: usize, w: &LassoWord) -> Result<bool> {
    check_level(k, i)?;
    if i == 0 {
        return Ok(true);
    }
    let Some((_, hi)) = loop_window(k, w) else {
        return Ok(false);
    };
    let top = 4 * k - 2 * i;
    let even = stem_count(w, i - 1).is_multiple_of(2);
    Ok(hi <= top || (even && hi == top + 1))
}

/// Membership in `L̂_j`, dually to [`in_l`].
pub fn in_lhat(k: usize, j: usize, w: &LassoWord) -> Result<bool> {
    check_level(k, j)?;
    if j == 0 {
        return Ok(true);
    }
    let Some((lo, _)) = loop_window(k, w) else {
        return Ok(false);
    };
    let bottom = 2 * j - 2;
    let even = stem_count(w, k + j - 1).is_multiple_of(2);
    Ok(lo > bottom || (even && lo == bottom))
}

/// The highest levels `(i, j)` with `w ∈ L_i` and `w ∈ L̂_j`.
pub fn greatest_pair(k: usize, w: &LassoWord) -> Result<IndexPair> {
    check_k(k)?;
    let mut pair = (0, 0);
    for level in 1..=k {
        if in_l(k, level, w)? {
            pair.0 = level;
        }
        if in_lhat(k, level, w)? {
            pair.1 = level;
        }
    }
    Ok(pair)
}

/// Deterministic parity automaton for the chain language of `L_1, …, L_k`.
///
/// States are bit vectors `b_1 … b_k` (the parities of `X_1..X_k`), labeled
/// as such. Upper-case letters have color 0; `a_{4k-2i}` has color `i`;
/// `a_{4k-2i+1}` has color `i` if `b_i = 0` and `i - 1` otherwise; the
/// remaining `a_0..a_{2k-1}` have color `k`.
pub fn dpw_p(k: usize) -> Result<Automaton> {
    let al = window_alphabet(k)?;
    let n = 1usize << k;
    let aut = Automaton::deterministic(format!("p{k}"), al, n, 0, |q, a| {
        if a < k {
            return (q ^ (1 << a), 0);
        }
        let Some(m) = lower_index(k, a) else {
            return (q, 0);
        };
        if m < 2 * k {
            return (q, k as Color);
        }
        let d = 4 * k - m;
        let i = d.div_ceil(2);
        let bit = q >> (i - 1) & 1;
        let color = if d % 2 == 1 && bit == 1 { i - 1 } else { i };
        (q, color as Color)
    })?;
    let labels = (0..n)
        .map(|q| {
            (0..k)
                .map(|b| if q >> b & 1 == 1 { '1' } else { '0' })
                .collect()
        })
        .collect();
    Ok(aut.with_labels(labels))
}

/// The letter bijection exchanging the two window families:
/// `X_i ↔ Y_i` and `a_m ↔ a_{4k-1-m}`.
pub fn hat_mapping(k: usize) -> HashMap<String, String> {
    let mut map = HashMap::new();
    for i in 1..=k {
        map.insert(format!("X_{i}"), format!("Y_{i}"));
        map.insert(format!("Y_{i}"), format!("X_{i}"));
    }
    for m in 0..4 * k {
        map.insert(format!("a_{m}"), format!("a_{}", 4 * k - 1 - m));
    }
    map
}

/// [`dpw_p`] with letters renamed by [`hat_mapping`].
pub fn dpw_phat(k: usize) -> Result<Automaton> {
    Ok(dpw_p(k)?
        .rename_letters(&hat_mapping(k))?
        .with_name(format!("phat{k}")))
}
