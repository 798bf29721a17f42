use anyhow::{bail, Result};
use clap::ValueEnum;

use cocoa_kit::families::*;
use cocoa_kit::format::{write_aut, write_cocoa};
use cocoa_kit::ops::cocoa_to_dpw;
use cocoa_kit::{Automaton, Cocoa};

use crate::hoa;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Prop1Dpw,
    Prop1Cocoa,
    CocoaC,
    /// Member `--i` of `cocoa-c`.
    CMember,
    /// Product parity automaton of `cocoa-c`.
    DpwC,
    DcwL,
    DcwLhat,
    ChainL,
    ChainLhat,
    DpwP,
    DpwPhat,
    CocoaTheorem2,
    CocoaTheorem2Nondominated,
    Example31Dpw,
}

pub enum Generated {
    Automaton(Automaton),
    Cocoa(Cocoa),
}

impl Generated {
    pub fn to_text(&self, as_hoa: bool) -> String {
        match (self, as_hoa) {
            (Generated::Automaton(a), false) => write_aut(a),
            (Generated::Cocoa(c), false) => write_cocoa(c),
            (Generated::Automaton(a), true) => hoa::write_hoa(a),
            (Generated::Cocoa(c), true) => c.members().iter().map(hoa::write_hoa).collect(),
        }
    }
}

pub fn generate(family: Family, k: Option<usize>, i: Option<usize>) -> Result<Generated> {
    use Generated::{Automaton as A, Cocoa as C};
    if family == Family::Example31Dpw {
        return Ok(A(example31_dpw()?));
    }
    let Some(k) = k else {
        bail!("--k is required for this family");
    };
    let level = || match i {
        Some(i) => Ok(i),
        None => Err(anyhow::anyhow!("--i is required for this family")),
    };
    Ok(match family {
        Family::Prop1Dpw => A(prop1_dpw(k)?),
        Family::Prop1Cocoa => C(prop1_cocoa(k)?),
        Family::CocoaC => C(cocoa_c(k)?),
        Family::CMember => A(c_member(k, level()?)?),
        Family::DpwC => A(cocoa_to_dpw(&cocoa_c(k)?)?.with_name(format!("dpw-c{k}"))),
        Family::DcwL => A(dcw_l(k, level()?)?),
        Family::DcwLhat => A(dcw_lhat(k, level()?)?),
        Family::ChainL => C(chain_l(k)?),
        Family::ChainLhat => C(chain_lhat(k)?),
        Family::DpwP => A(dpw_p(k)?),
        Family::DpwPhat => A(dpw_phat(k)?),
        Family::CocoaTheorem2 => C(cocoa_theorem2(k)?),
        Family::CocoaTheorem2Nondominated => C(cocoa_theorem2_nondominated(k)?),
        Family::Example31Dpw => unreachable!(),
    })
}
