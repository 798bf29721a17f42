//! Concrete values for the data model, lasso evaluation, chains and
//! constructions.

mod common;

use std::collections::HashMap;
use std::sync::Arc;

use cocoa_kit::automaton::{validate_automaton, Alphabet, AutomatonBuilder, DiagnosticKind};
use cocoa_kit::cocoa::{
    chain_validate, cocoa_complement, cocoa_size, universal_cobuchi, ChainDiagnostic,
};
use cocoa_kit::families::*;
use cocoa_kit::lasso::*;
use cocoa_kit::ops::*;
use cocoa_kit::scc::{scc_decompose, terminal_sccs};
use cocoa_kit::{Automaton, Cocoa, Error};

fn lasso(text: &str, al: &Alphabet) -> LassoWord {
    LassoWord::parse(text, al).unwrap()
}

fn ab() -> Arc<Alphabet> {
    Arc::new(Alphabet::new(["a", "b"]).unwrap())
}

#[test]
fn validation_diagnostics() {
    let mut b = AutomatonBuilder::new("u", ab(), 1);
    b.add(0, 0, 2, 0).add(0, 1, 2, 0);
    assert!(validate_automaton(&b).is_empty());

    let mut b = AutomatonBuilder::new("m", ab(), 1);
    b.add(0, 1, 2, 0);
    let d = validate_automaton(&b);
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].to_string(), "INPUT_INCOMPLETE at (0,'a')");

    let mut b = AutomatonBuilder::new("n", ab(), 2);
    b.add(0, 0, 1, 0)
        .add(0, 0, 2, 1)
        .add(0, 1, 2, 0)
        .add(1, 0, 2, 1)
        .add(1, 1, 2, 1);
    let d = validate_automaton(&b);
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].kind, DiagnosticKind::NonUniformColor);
    assert_eq!(d[0].to_string(), "NON_UNIFORM_COLOR at (0,'a')");
}

#[test]
fn determinism() {
    assert!(dpw_p(2).unwrap().is_deterministic());
    assert!(universal_cobuchi(ab()).is_deterministic());
    let mut b = AutomatonBuilder::new("n", ab(), 2);
    b.add(0, 0, 2, 0)
        .add(0, 0, 2, 1)
        .add(0, 1, 2, 0)
        .add(1, 0, 2, 1)
        .add(1, 1, 2, 1);
    assert!(!b.build().unwrap().is_deterministic());
}

#[test]
fn reachability() {
    let mut b = AutomatonBuilder::new("r", ab(), 3);
    b.initial(0);
    for a in 0..2 {
        b.add(0, a, 2, 2).add(1, a, 1, 0).add(2, a, 0, 2);
    }
    let aut = b.build().unwrap();
    let r = aut.reachable_restrict();
    assert_eq!(r.state_count(), 2);
    assert_eq!(r.reachable_restrict(), r);
    let p = cocoa_to_dpw(&cocoa_c(2).unwrap()).unwrap();
    assert_eq!(p.reachable_restrict().state_count(), 4);
}

#[test]
fn renaming() {
    let p = dpw_p(2).unwrap();
    let id: HashMap<String, String> = p
        .alphabet()
        .symbols()
        .iter()
        .map(|s| (s.clone(), s.clone()))
        .collect();
    assert_eq!(p.rename_letters(&id).unwrap(), p);
    let mut bad = id.clone();
    bad.insert("X_1".into(), "Y_1".into());
    assert!(matches!(
        p.rename_letters(&bad),
        Err(Error::NotBijective(_))
    ));

    let p1 = dpw_p(1).unwrap();
    let hat = p1.rename_letters(&hat_mapping(1)).unwrap();
    let al = p1.alphabet().clone();
    for w in enumerate_lassos(al.len(), 2, 2) {
        let n = common::named(&w, &al);
        let (_, j) = common::top_pair(1, &n);
        assert_eq!(
            dpw_accepts(&hat, &w).unwrap(),
            j % 2 == 0,
            "{}",
            w.to_text(&al)
        );
    }
}

#[test]
fn sccs() {
    let p1 = dpw_p(1).unwrap();
    let all: Vec<usize> = p1.alphabet().letters().collect();
    let s = scc_decompose(&p1, &all);
    assert_eq!(s.len(), 1);
    assert_eq!(s[0].len(), 2);
    assert!(scc_decompose(&p1, &[]).is_empty());

    let mut b = AutomatonBuilder::new("two", ab(), 2);
    b.add(0, 0, 2, 0)
        .add(0, 1, 2, 1)
        .add(1, 0, 2, 1)
        .add(1, 1, 2, 1);
    let two = b.build().unwrap();
    assert_eq!(scc_decompose(&two, &[0, 1]).len(), 2);
    let t = terminal_sccs(&two);
    assert_eq!(t.len(), 1);
    assert!(t[0].contains(1) && !t[0].contains(0));

    let p = cocoa_to_dpw(&cocoa_c(2).unwrap()).unwrap();
    let t = terminal_sccs(&p);
    assert_eq!(t.len(), 1);
    assert_eq!(t[0].len(), 4);
}

#[test]
fn lasso_values() {
    let d = prop1_dpw(3).unwrap();
    let al = d.alphabet().clone();
    assert_eq!(dpw_color(&d, &lasso("|1 2", &al)).unwrap(), 1);
    assert!(dpw_accepts(&d, &lasso("|2", &al)).unwrap());
    assert!(!dpw_accepts(&d, &lasso("|1 2", &al)).unwrap());

    let p = dpw_p(2).unwrap();
    let al = p.alphabet().clone();
    assert_eq!(dpw_color(&p, &lasso("|a_4", &al)).unwrap(), 2);
    assert_eq!(dpw_color(&p, &lasso("X_1|a_7", &al)).unwrap(), 0);
    assert!(matches!(
        dpw_color(&p, &LassoWord::new(vec![], vec![99]).unwrap()),
        Err(Error::AlphabetMismatch(_))
    ));

    let c = cocoa_c(2).unwrap();
    let al = c.alphabet().clone();
    let a1 = &c.members()[0];
    assert!(!ncw_accepts(a1, &lasso("|x_1 y_1", &al)).unwrap());
    assert!(ncw_accepts(a1, &lasso("|x_3", &al)).unwrap());
    assert!(matches!(
        ncw_accepts(&p, &lasso("|a_0", p.alphabet())),
        Err(Error::NotCobuchi(_))
    ));
    for (text, color, accepted) in [
        ("|x_1 y_1", 0, true),
        ("|x_3", 2, true),
        ("|x_2 y_1", 1, false),
    ] {
        let w = lasso(text, &al);
        assert_eq!(cocoa_color(&c, &w).unwrap(), color, "{text}");
        assert_eq!(cocoa_accepts(&c, &w).unwrap(), accepted, "{text}");
    }
}

#[test]
fn lasso_syntax() {
    let al = window_alphabet(1).unwrap();
    let w = lasso("X_1 a_0|a_3 a_3", &al);
    assert_eq!(w.to_text(&al), "X_1 a_0|a_3 a_3");
    assert_eq!(default_bounds(8), (2, 3));
    assert_eq!(default_bounds(9), (1, 2));
    assert_eq!(enumerate_lassos(2, 1, 2).count(), lasso_count(2, 1, 2));
}

#[test]
fn chain_checks() {
    assert!(chain_validate(&cocoa_c(3).unwrap()).unwrap().is_empty());
    let a = cocoa_c(2).unwrap().members()[0].clone();
    let same = Cocoa::new("aa", vec![a.clone(), a]).unwrap();
    assert_eq!(
        chain_validate(&same).unwrap(),
        vec![ChainDiagnostic::NotStrict { index: 1 }]
    );

    let c = cocoa_c(2).unwrap();
    let rev = Cocoa::new("rev", c.members().iter().rev().cloned().collect()).unwrap();
    let d = chain_validate(&rev).unwrap();
    let [ChainDiagnostic::NotContained { index: 1, witness }] = &d[..] else {
        panic!("{d:?}");
    };
    let (m1, m2) = (&rev.members()[0], &rev.members()[1]);
    assert!(dpw_accepts(m2, witness).unwrap() && !dpw_accepts(m1, witness).unwrap());

    let mut b = AutomatonBuilder::new("n", ab(), 2);
    b.add(0, 0, 2, 0)
        .add(0, 0, 2, 1)
        .add(0, 1, 2, 0)
        .add(1, 0, 2, 1)
        .add(1, 1, 2, 1);
    let nd = Cocoa::new("nd", vec![universal_cobuchi(ab()), b.build().unwrap()]).unwrap();
    assert_eq!(chain_validate(&nd), Err(Error::NotDeterministicMember(2)));
}

#[test]
fn complement_values() {
    let c = cocoa_c(2).unwrap();
    let comp = cocoa_complement(&c).unwrap();
    assert_eq!(comp.len(), 3);
    assert!(!cocoa_accepts(&comp, &lasso("|x_3", c.alphabet())).unwrap());
    let back = cocoa_complement(&comp).unwrap();
    assert_eq!(back.members(), c.members());

    let d = dpw_complement(&prop1_dpw(2).unwrap()).unwrap();
    assert!(dpw_accepts(&d, &lasso("|1", d.alphabet())).unwrap());
}

#[test]
fn sizes() {
    for k in 1..=4 {
        assert_eq!(cocoa_size(&cocoa_c(k).unwrap()), 2 * k);
        assert_eq!(cocoa_size(&prop1_cocoa(k).unwrap()), k);
    }
    assert_eq!(
        cocoa_size(&Cocoa::new("u", vec![universal_cobuchi(ab())]).unwrap()),
        1
    );
}

#[test]
fn boolean_values() {
    let and = dcw_conjunction(&[dcw_l(2, 1).unwrap(), dcw_lhat(2, 1).unwrap()]).unwrap();
    assert!(and.state_count() <= 4);
    let al = and.alphabet().clone();
    assert!(dpw_accepts(&and, &lasso("|a_3", &al)).unwrap());
    assert!(!dpw_accepts(&and, &lasso("X_1|a_7", &al)).unwrap());

    let u = universal_cobuchi(al.clone());
    let l = dcw_l(2, 1).unwrap();
    let with_u = dcw_conjunction(&[u, l.clone()]).unwrap();
    assert!(dpw_equivalent(&with_u, &l).unwrap().holds());
    assert_eq!(with_u.state_count(), l.state_count());

    let or = dcw_disjunction(&[dcw_l(2, 2).unwrap(), dcw_lhat(2, 2).unwrap()]).unwrap();
    assert!(dpw_accepts(&or, &lasso("|a_0", &al)).unwrap());
    assert!(dpw_accepts(&or, &lasso("|a_7", &al)).unwrap());
    assert!(!dpw_accepts(&or, &lasso("|X_1 a_0 a_7", &al)).unwrap());

    let empty = cocoa_kit::cocoa::empty_cobuchi(al.clone());
    assert!(
        dpw_equivalent(&dcw_disjunction(&[empty, l.clone()]).unwrap(), &l)
            .unwrap()
            .holds()
    );
    assert!(
        dpw_equivalent(&dcw_disjunction(&[l.clone(), l.clone()]).unwrap(), &l)
            .unwrap()
            .holds()
    );
    assert!(
        dpw_equivalent(&dcw_conjunction(&[l.clone(), l.clone()]).unwrap(), &l)
            .unwrap()
            .holds()
    );
}

#[test]
fn determinization() {
    let d = dcw_l(2, 1).unwrap();
    assert_eq!(mh_determinize(&d).unwrap(), d);
    assert!(matches!(
        mh_determinize(&dpw_p(1).unwrap()),
        Err(Error::NotCobuchi(_))
    ));
}

#[test]
fn product_values() {
    for k in 1..=4 {
        let p = cocoa_to_dpw(&cocoa_c(k).unwrap()).unwrap();
        assert_eq!(p.state_count(), 1 << k);
    }
    let c = cocoa_c(2).unwrap();
    let p = cocoa_to_dpw(&c).unwrap();
    let w = lasso("|x_2 y_1", c.alphabet());
    assert_eq!(dpw_color(&p, &w).unwrap(), 1);
    // every step of the loop has color 1
    let mut q = p.initial();
    for _ in 0..4 {
        for &a in w.period() {
            let (t, color) = p.step(q, a);
            assert_eq!(color, 1);
            q = t;
        }
    }
}

#[test]
fn witness_values() {
    let p = dpw_p(2).unwrap();
    let w = multi_parity_witness(&[ParityConstraint::accepting(&p)])
        .unwrap()
        .unwrap();
    assert!(dpw_accepts(&p, &w).unwrap());
    assert_eq!(
        multi_parity_witness(&[
            ParityConstraint::accepting(&p),
            ParityConstraint::rejecting(&p)
        ])
        .unwrap(),
        None
    );
    let c = cocoa_to_dpw(&cocoa_c(2).unwrap()).unwrap();
    let nc = dpw_complement(&c).unwrap();
    assert_eq!(
        multi_parity_witness(&[
            ParityConstraint::accepting(&c),
            ParityConstraint::accepting(&nc)
        ])
        .unwrap(),
        None
    );
}

#[test]
fn containment_values() {
    let c = cocoa_c(2).unwrap();
    let (a1, a2) = (&c.members()[0], &c.members()[1]);
    assert!(dpw_contains(a1, a1).unwrap().holds());
    assert!(dpw_contains(a2, a1).unwrap().holds());
    let v = dpw_contains(a1, a2).unwrap();
    let w = v.witness().unwrap();
    assert!(dpw_accepts(a1, w).unwrap() && !dpw_accepts(a2, w).unwrap());
    assert_eq!(cocoa_color(&c, w).unwrap(), 1);
}

#[test]
fn residual_values() {
    for k in 1..=3 {
        let p = cocoa_to_dpw(&cocoa_c(k).unwrap()).unwrap();
        assert_eq!(residual_partition(&p).unwrap().class_count(), 1);
        assert_eq!(
            residual_partition(&dpw_p(k).unwrap())
                .unwrap()
                .class_count(),
            1 << k
        );
    }
    let one = Automaton::deterministic("one", ab(), 1, 0, |_, _| (0, 3)).unwrap();
    assert_eq!(residual_partition(&one).unwrap().class_count(), 1);
}
