use std::collections::BTreeSet;

use starcob_core::barcobar::{
    bar_diff, bar_strings, chained_strings, check_string, cobar_diff, cobar_mul, dual_grading, homotopy_h,
    homotopy_string, leading_block, phi, phi_string, psi, psi_word, render_elem, render_string, verify_homotopy,
    CobElem, CobarA, CobarB, HomotopyVariant, KoszulPair,
};
use starcob_core::staralg::{AWord, PathAlgebra, A0, B0};
use starcob_core::{Error, Exec};

fn words(a: &A0, names: &str) -> Vec<AWord> {
    names.split(' ').map(|s| a.parse_word(s).unwrap()).collect()
}

fn one(a: &A0, names: &str) -> CobElem<AWord> {
    CobElem::from_string(words(a, names))
}

#[test]
fn cobar_differential_examples() {
    let a = A0::new(3).unwrap();
    assert_eq!(cobar_diff(&a, &one(&a, "s[1,3]")), one(&a, "s1 s2"));
    assert!(cobar_diff(&a, &one(&a, "U1")).is_zero());
    assert_eq!(cobar_diff(&a, &one(&a, "U1^2")), one(&a, "U1 U1"));
    assert_eq!(render_elem(&a, &cobar_diff(&a, &one(&a, "U1^2"))), "U1*.U1*");
    // s[1,4] = s1 s2 s3 has two splittings
    assert_eq!(cobar_diff(&a, &one(&a, "s[1,4]")).len(), 2);
}

#[test]
fn cobar_product_examples() {
    let a = A0::new(3).unwrap();
    assert_eq!(cobar_mul(&a, &one(&a, "U1"), &one(&a, "s1")), one(&a, "U1 s1"));
    assert!(cobar_mul(&a, &one(&a, "s1"), &one(&a, "s1")).is_zero());
}

#[test]
fn string_validation() {
    let a = A0::new(3).unwrap();
    assert!(check_string(&a, &words(&a, "U1 s1 U2")).is_ok());
    assert!(matches!(check_string(&a, &words(&a, "s1 s1")), Err(Error::NotChained)));
    assert!(matches!(check_string(&a, &words(&a, "I1")), Err(Error::IdempotentInput(_))));
    assert_eq!(dual_grading(&a, &words(&a, "U1 s1")), (-2, 2));
}

#[test]
fn phi_psi_examples() {
    let p = CobarA::new(3).unwrap();
    let (a, b) = (p.a, p.b);
    assert_eq!(phi_string(&p, &words(&a, "U1 s1")), Some(b.parse_word("s1.r1").unwrap()));
    assert_eq!(phi_string(&p, &words(&a, "s[1,3]")), None);
    assert_eq!(psi_word(&p, b.rho(1)), Some(words(&a, "U1")));
    assert_eq!(psi_word(&p, b.parse_word("s1.r1").unwrap()), Some(words(&a, "U1 s1")));
    assert_eq!(psi_word(&p, b.idem(1)), None);
}

#[test]
fn phi_after_psi_is_identity() {
    for n in 3..=4 {
        let p = CobarA::new(n).unwrap();
        for w in p.b.enumerate_basis(8).into_iter().filter(|&w| !p.b.is_idem(w)) {
            let s = psi_word(&p, w).unwrap();
            assert_eq!(phi_string(&p, &s), Some(w));
        }
        let q = CobarB::new(n).unwrap();
        for w in q.a.enumerate_basis(8).into_iter().filter(|&w| !q.a.is_idem(w)) {
            match psi_word(&q, w) {
                Some(s) => assert_eq!(phi_string(&q, &s), Some(w)),
                None => unreachable!(),
            }
        }
    }
}

#[test]
fn homotopy_examples() {
    let p = CobarA::new(3).unwrap();
    let a = p.a;
    assert!(homotopy_h(&p, &one(&a, "U1 s1")).is_zero());
    assert!(homotopy_h(&p, &one(&a, "s[1,3]")).is_zero());
    assert!(homotopy_h(&p, &one(&a, "U1 s[1,3]")).is_zero());
    // a genuine merge: the block U1* is followed by U1*, giving (U1^2)*
    assert_eq!(homotopy_h(&p, &one(&a, "U1 U1")), one(&a, "U1^2"));
    assert_eq!(render_string(&p, &words(&a, "U1 U1")), "U1*|U1*");
}

#[test]
fn homotopy_identity_holds() {
    for n in 3..=4 {
        let p = CobarA::new(n).unwrap();
        let r = verify_homotopy(&p, 6, HomotopyVariant::Standard, Exec::Parallel);
        assert!(r.holds(), "A N={n}: {:?}", &r.failures[..r.failures.len().min(3)]);
        let q = CobarB::new(n).unwrap();
        assert!(verify_homotopy(&q, 6, HomotopyVariant::Standard, Exec::Parallel).holds());
    }
}

#[test]
fn broken_homotopy_is_detected() {
    let p = CobarA::new(3).unwrap();
    assert!(!verify_homotopy(&p, 6, HomotopyVariant::NoLeadingBlock, Exec::Parallel).holds());
}

#[test]
fn differentials_square_to_zero() {
    fn check<A: PathAlgebra>(alg: &A, max: u32) {
        for s in chained_strings(alg, max) {
            let x = CobElem::from_string(s.clone());
            assert!(cobar_diff(alg, &cobar_diff(alg, &x)).is_zero(), "{s:?}");
        }
        for s in bar_strings(alg, max) {
            let x = CobElem::from_string(s.clone());
            assert!(bar_diff(alg, &bar_diff(alg, &x)).is_zero(), "{s:?}");
        }
    }
    for n in 3..=4 {
        check(&A0::new(n).unwrap(), 8);
        check(&B0::new(n).unwrap(), 8);
    }
}

#[test]
fn leibniz_on_pairs() {
    let a = A0::new(3).unwrap();
    let strings = chained_strings(&a, 4);
    for f in &strings {
        for g in &strings {
            let (f, g) = (CobElem::from_string(f.clone()), CobElem::from_string(g.clone()));
            let lhs = cobar_diff(&a, &cobar_mul(&a, &f, &g));
            let rhs = cobar_mul(&a, &cobar_diff(&a, &f), &g).add(&cobar_mul(&a, &f, &cobar_diff(&a, &g)));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn phi_and_psi_are_chain_maps() {
    for n in 3..=4 {
        let p = CobarA::new(n).unwrap();
        for s in chained_strings(&p.a, 8) {
            assert!(phi(&p, &cobar_diff(&p.a, &CobElem::from_string(s))).is_empty());
        }
        for w in p.b.enumerate_basis(8).into_iter().filter(|&w| !p.b.is_idem(w)) {
            let image = psi(&p, &BTreeSet::from([w]));
            assert!(cobar_diff(&p.a, &image).is_zero());
        }
    }
}

#[test]
fn homotopy_raises_maslov_by_one() {
    let p = CobarA::new(3).unwrap();
    let q = CobarB::new(3).unwrap();
    for s in chained_strings(&p.a, 8) {
        if let Some(t) = homotopy_string(&p, &s, HomotopyVariant::Standard) {
            assert_eq!(dual_grading(&p.a, &t).0, dual_grading(&p.a, &s).0 + 1);
        }
    }
    for s in chained_strings(&q.b, 8) {
        if let Some(t) = homotopy_string(&q, &s, HomotopyVariant::Standard) {
            assert_eq!(dual_grading(&q.b, &t).0, dual_grading(&q.b, &s).0 + 1);
        }
    }
}

/// Every string splits as a leading block plus a remainder that starts with
/// a non-basic factor or with a basic factor breaking the block.
#[test]
fn leading_block_is_maximal() {
    let p = CobarA::new(3).unwrap();
    for s in chained_strings(&p.a, 7) {
        let n = leading_block(&p, &s);
        assert!(phi_string(&p, &s[..n]).is_some() || n == 0);
        if n < s.len() {
            assert!(phi_string(&p, &s[..=n]).is_none());
        }
    }
}

#[test]
fn mirror_dictionary() {
    let q = CobarB::new(3).unwrap();
    for i in 1..=3 {
        assert_eq!(q.dual(q.b.rho(i)), q.a.u(i));
        assert_eq!(q.dual(q.b.sigma(i)), q.a.s(i));
    }
}
