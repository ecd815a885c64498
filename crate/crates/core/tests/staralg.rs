use std::collections::BTreeSet;

use starcob_core::staralg::{
    AWord, AlgElem, AlgebraKind, BWord, Letter, PathAlgebra, StarAlg, Word, A0, B0,
};
use starcob_core::ring::Poly;
use starcob_core::Error;

/// Closure of the generators under multiplication, keeping words of length
/// at most `max_len`. Independent of `words_from`.
fn closure<A: PathAlgebra>(alg: &A, gens: &[A::Word], max_len: u32) -> BTreeSet<A::Word> {
    let mut seen: BTreeSet<A::Word> = alg.vertices().map(|v| alg.idem(v)).collect();
    let gens: Vec<A::Word> = gens.iter().copied().filter(|&g| alg.len(g) <= max_len).collect();
    seen.extend(gens.iter().copied());
    let mut frontier = gens.clone();
    while let Some(w) = frontier.pop() {
        for &g in &gens {
            for p in [alg.mul(w, g), alg.mul(g, w)].into_iter().flatten() {
                if alg.len(p) <= max_len && seen.insert(p) {
                    frontier.push(p);
                }
            }
        }
    }
    seen
}

fn a_gens(a: &A0) -> Vec<AWord> {
    a.vertices().flat_map(|i| [a.u(i), a.s(i)]).collect()
}

fn b_gens(b: &B0) -> Vec<BWord> {
    b.vertices().flat_map(|i| [b.rho(i), b.sigma(i)]).collect()
}

#[test]
fn basis_counts_match_closure() {
    for n in 3..=5 {
        let a = A0::new(n).unwrap();
        let b = B0::new(n).unwrap();
        for len in 0..=7 {
            let ours: BTreeSet<_> = a.enumerate_basis(len).into_iter().collect();
            assert_eq!(ours, closure(&a, &a_gens(&a), len), "A0 N={n} len={len}");
            let ours: BTreeSet<_> = b.enumerate_basis(len).into_iter().collect();
            assert_eq!(ours, closure(&b, &b_gens(&b), len), "B0 N={n} len={len}");
        }
    }
}

#[test]
fn small_basis_examples() {
    let a = StarAlg::new(AlgebraKind::A0, 3).unwrap();
    let names: Vec<String> = a.enumerate_basis(1).into_iter().map(|w| a.render(w)).collect();
    assert_eq!(names, ["I1", "I2", "I3", "U1", "U2", "U3", "s1", "s2", "s3"]);
    assert_eq!(a.enumerate_basis(2).len(), 15);
    let b = StarAlg::new(AlgebraKind::B0, 3).unwrap();
    let names: Vec<String> = b.enumerate_basis(0).into_iter().map(|w| b.render(w)).collect();
    assert_eq!(names, ["I1", "I2", "I3"]);
}

#[test]
fn basis_is_monotone_and_finite() {
    let a = A0::new(4).unwrap();
    let b = B0::new(4).unwrap();
    let mut last = (0, 0);
    for len in 0..=10 {
        let now = (a.enumerate_basis(len).len(), b.enumerate_basis(len).len());
        assert!(now.0 > last.0 && now.1 > last.1);
        last = now;
    }
}

#[test]
fn a_products() {
    let a = A0::new(3).unwrap();
    assert_eq!(a.mul(a.s(1), a.s(2)), Some(AWord::SChain { i: 1, len: 2 }));
    assert_eq!(a.render(a.mul(a.s(1), a.s(2)).unwrap()), "s[1,3]");
    assert_eq!(a.mul(a.u(1), a.s(1)), None);
    assert_eq!(a.mul(a.s(1), a.u(2)), None);
    assert_eq!(a.mul(AWord::Idem(1), a.u(1)), Some(a.u(1)));
    assert_eq!(a.mul(a.u(1), a.u(2)), None);
    assert_eq!(a.mul(a.u(2), a.u(2)), Some(AWord::UPow { i: 2, n: 2 }));
    assert_eq!(a.mul(a.s(2), a.s(1)), None);
    // chains wrap past N
    let w = a.mul(AWord::SChain { i: 2, len: 3 }, a.s(2)).unwrap();
    assert_eq!(w, AWord::SChain { i: 2, len: 4 });
}

#[test]
fn b_products() {
    let b = B0::new(3).unwrap();
    let r2s1 = b.mul(b.rho(2), b.sigma(1)).expect("σ₁ then ρ₂");
    assert_eq!(b.render(r2s1), "r2.s1");
    assert_eq!(b.mul(b.sigma(1), b.sigma(2)), None);
    assert_eq!(b.mul(b.rho(1), b.rho(1)), None);
    assert_eq!(b.mul(BWord::Idem(1), b.rho(1)), Some(b.rho(1)));
    assert_eq!(b.parse_word("r2.s1").unwrap(), r2s1);
    assert!(b.parse_word("s1.s2").is_err());
}

#[test]
fn u_zero_subwords_are_well_formed() {
    for n in 3..=6 {
        let b = B0::new(n).unwrap();
        let u0 = b.u_zero();
        assert_eq!(u0.len(), 2 * n);
        for w in u0 {
            assert_eq!(b.len(w), 2 * n as u32);
            assert_eq!(b.initial(w), b.final_(w));
            let letters = b.letters(w);
            for pair in letters.windows(2) {
                assert!(b.mul(pair[0], pair[1]).is_some(), "{}", b.render(w));
            }
        }
    }
}

#[test]
fn gradings() {
    let alg = StarAlg::new(AlgebraKind::B0, 3).unwrap();
    let g = alg.grading(Word::B(B0::new(3).unwrap().rho(1))).unwrap();
    assert_eq!((g.m, g.len), (-1, 1));
    assert_eq!(g.alex, [1, 0, 0, 0, 0, 0]);
    let a = A0::new(3).unwrap();
    let g = a.grading(a.s(2));
    assert_eq!((g.m, g.len), (0, 1));
    assert_eq!(g.alex, [0, 0, 0, 1, 0, 0]);
    let b = B0::new(3).unwrap();
    for w in b.u_zero() {
        let g = b.grading(w);
        assert_eq!((g.m, g.len), (-6, 6));
        assert_eq!(g.alex, [1; 6]);
    }
    let g = a.grading(AWord::Idem(2));
    assert_eq!((g.m, g.len, g.alex.iter().sum::<i64>()), (0, 0, 0));
}

#[test]
fn idempotents() {
    let a = StarAlg::new(AlgebraKind::A0, 3).unwrap();
    assert_eq!(a.idempotents(a.parse_word("s1").unwrap()).unwrap(), (1, 2));
    assert_eq!(a.idempotents(a.parse_word("U3").unwrap()).unwrap(), (3, 3));
    assert_eq!(a.idempotents(a.parse_word("I2").unwrap()).unwrap(), (2, 2));
    let b = StarAlg::new(AlgebraKind::B0, 3).unwrap();
    // I_3 σ₂ = σ₂ I_2 = σ₂; the path runs 2 → 3
    let s2 = b.parse_word("s2").unwrap();
    assert_eq!(b.idempotents(s2).unwrap(), (3, 2));
    let Word::B(w) = s2 else { unreachable!() };
    assert_eq!(B0::new(3).unwrap().path_endpoints(w), (2, 3));
    assert!(matches!(b.idempotents(a.parse_word("s1").unwrap()), Err(Error::AlgebraMismatch { .. })));
}

#[test]
fn idempotent_coherence() {
    for n in 3..=4 {
        let b = B0::new(n).unwrap();
        let words = b.enumerate_basis(5);
        for &x in &words {
            for v in b.vertices() {
                assert_eq!(b.mul(b.idem(v), x) == Some(x), b.initial(x) == v);
                assert_eq!(b.mul(x, b.idem(v)) == Some(x), b.final_(x) == v);
            }
            for &y in &words {
                if b.mul(x, y).is_some() {
                    assert_eq!(b.final_(x), b.initial(y));
                }
            }
        }
    }
}

#[test]
fn special_elements() {
    let a = StarAlg::new(AlgebraKind::A0, 3).unwrap();
    let top = a.special_element("U_{N+1}").unwrap();
    assert_eq!(top.render(), "s[1,4] + s[2,5] + s[3,6]");
    assert_eq!(a.special_element("U4").unwrap(), top);
    let b = StarAlg::new(AlgebraKind::B0, 3).unwrap();
    let u0 = b.special_element("U0").unwrap();
    assert_eq!(u0.terms().count(), 6);
    assert!(matches!(b.special_element("U4"), Err(Error::UnknownSpecial(_))));
}

#[test]
fn annihilation_and_element_products() {
    let a = StarAlg::new(AlgebraKind::A0, 3).unwrap();
    let u1 = a.parse_word("U1").unwrap();
    let mut e = AlgElem::from_word(AlgebraKind::A0, 3, u1);
    e = e.scale(&"V4".parse::<Poly>().unwrap());
    assert!(e.is_zero());
    let x = AlgElem::from_word(AlgebraKind::A0, 3, u1).scale(&"V0+1".parse().unwrap());
    let sq = a.mul(&x, &x).unwrap();
    assert_eq!(sq.render(), "(1+V0^2)*U1^2");
    let b = StarAlg::new(AlgebraKind::B0, 3).unwrap();
    let y = AlgElem::from_word(AlgebraKind::B0, 3, b.parse_word("r1").unwrap());
    assert!(matches!(a.mul(&x, &y), Err(Error::AlgebraMismatch { .. })));
}

#[test]
fn parse_render_round_trip() {
    for kind in [AlgebraKind::A0, AlgebraKind::B0] {
        let alg = StarAlg::new(kind, 4).unwrap();
        for w in alg.enumerate_basis(9) {
            assert_eq!(alg.parse_word(&alg.render(w)).unwrap(), w);
        }
    }
}

#[test]
fn elem_json_round_trip() {
    let alg = StarAlg::new(AlgebraKind::B0, 3).unwrap();
    let e = alg.special_element("U0").unwrap().scale(&"V4^2+1".parse().unwrap());
    let s = serde_json::to_string(&e).unwrap();
    let back: AlgElem = serde_json::from_str(&s).unwrap();
    assert_eq!(back, e);
}

#[test]
fn rejects_small_n() {
    assert!(matches!(A0::new(2), Err(Error::InvalidN(2))));
    assert!(matches!(B0::new(1), Err(Error::InvalidN(1))));
}

#[test]
fn letters_alternate() {
    let b = B0::new(3).unwrap();
    for w in b.enumerate_basis(6) {
        let ls = b.path_letters(w);
        for p in ls.windows(2) {
            assert_ne!(p[0].0, p[1].0);
        }
        if let Some(&(k, _)) = ls.first() {
            assert!(matches!(k, Letter::Rho | Letter::Sigma));
        }
    }
}
