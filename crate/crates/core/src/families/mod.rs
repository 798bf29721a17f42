//! Generators for the conciseness families, with membership oracles that
//! decide each language directly from a lasso's letters.
//!
//! Alphabets:
//!
//! - [`prop1_alphabet`]: `1 .. k`.
//! - [`c_alphabet`]: `x_1 .. x_{k+1}, y_1 .. y_{k+1}`.
//! - [`window_alphabet`]: `X_1 .. X_k, Y_1 .. Y_k, a_0 .. a_{4k-1}`.

mod cfamily;
mod example31;
mod prop1;
mod theorem2;
mod windows;

use std::sync::Arc;

use crate::automaton::Alphabet;
use crate::error::{Error, Result};

pub use cfamily::{c_member, cocoa_c, in_c_member};
pub use example31::example31_dpw;
pub use prop1::{prop1_cocoa, prop1_dpw};
pub use theorem2::{
    cocoa_theorem2, cocoa_theorem2_nondominated, gamma, nondominated, theorem2_level,
};
pub use windows::{
    chain_l, chain_lhat, dcw_l, dcw_lhat, dpw_p, dpw_phat, greatest_pair, hat_mapping, in_l,
    in_lhat,
};

/// A level pair `(i, j)`: `i` indexes the unhatted window family, `j` the
/// hatted one.
pub type IndexPair = (usize, usize);

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::IndexOutOfRange("k must be at least 1".into()));
    }
    Ok(())
}

fn check_level(k: usize, i: usize) -> Result<()> {
    check_k(k)?;
    if i > k {
        return Err(Error::IndexOutOfRange(format!("level {i} exceeds k = {k}")));
    }
    Ok(())
}

fn alphabet(symbols: Vec<String>) -> Arc<Alphabet> {
    Arc::new(Alphabet::new(symbols).expect("generated symbols are valid"))
}

pub fn prop1_alphabet(k: usize) -> Result<Arc<Alphabet>> {
    check_k(k)?;
    Ok(alphabet((1..=k).map(|m| m.to_string()).collect()))
}

/// Letter `x_m` is index `m - 1` and `y_m` is index `k + m`.
pub fn c_alphabet(k: usize) -> Result<Arc<Alphabet>> {
    check_k(k)?;
    let xs = (1..=k + 1).map(|m| format!("x_{m}"));
    let ys = (1..=k + 1).map(|m| format!("y_{m}"));
    Ok(alphabet(xs.chain(ys).collect()))
}

/// Letter `X_m` is index `m - 1`, `Y_m` is `k + m - 1` and `a_m` is `2k + m`.
pub fn window_alphabet(k: usize) -> Result<Arc<Alphabet>> {
    check_k(k)?;
    let xs = (1..=k).map(|m| format!("X_{m}"));
    let ys = (1..=k).map(|m| format!("Y_{m}"));
    let az = (0..4 * k).map(|m| format!("a_{m}"));
    Ok(alphabet(xs.chain(ys).chain(az).collect()))
}
