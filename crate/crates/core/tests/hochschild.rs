use starcob_core::ainfty::{AInfinity, Case, Scratch, StarA, StarB};
use starcob_core::barcobar::{chained_strings, phi_string, CobarA, KoszulPair};
use starcob_core::hochschild::{cocycle_components, ModelA, ModelB, PairModel, StringModel, TwTerm, TwistedElem};
use starcob_core::ring::Monomial;
use starcob_core::staralg::{AWord, BWord, PathAlgebra};
use starcob_core::{Error, Exec};

fn term<A, B>(coeff: Monomial, a: A, b: B) -> TwTerm<A, B> {
    TwTerm { coeff, a, b }
}

#[test]
fn generating_cocycles_are_closed_and_not_exact() {
    for n in 3..=5 {
        let m = ModelA::for_rank(n).unwrap();
        let c = m.generating_cocycle();
        assert_eq!(c.len(), 2 * n);
        let u0: Vec<BWord> = m.pair().b.u_zero();
        assert!(c.terms().all(|t| u0.contains(&t.b) && m.pair().a.is_idem(t.a)));
        assert!(m.twisted_diff(&c).is_zero());
        assert_eq!(m.is_coboundary(&c, None).unwrap(), None);

        let m = ModelB::for_rank(n).unwrap();
        let c = m.generating_cocycle();
        assert_eq!(c.len(), n);
        let top = m.pair().a.u_top();
        assert!(c.terms().all(|t| top.contains(&t.b)));
        assert!(m.twisted_diff(&c).is_zero());
        assert_eq!(m.is_coboundary(&c, Some(3)).unwrap(), None);
    }
}

#[test]
fn differential_of_a_single_pair() {
    let m = ModelA::for_rank(3).unwrap();
    let (a, b) = (m.pair().a, m.pair().b);
    let one = Monomial::one();
    let x: TwistedElem<AWord, BWord> = [term(one.clone(), a.idem(1), b.rho(1))].into_iter().collect();
    let want: TwistedElem<AWord, BWord> = [
        term(one.clone(), a.s(3), b.parse_word("r1.s3").unwrap()),
        term(one.clone(), a.s(1), b.parse_word("s1.r1").unwrap()),
    ]
    .into_iter()
    .collect();
    assert_eq!(m.twisted_diff(&x), want);
}

#[test]
fn parallel_and_annihilation_rules() {
    let m = ModelA::for_rank(3).unwrap();
    let (a, b) = (m.pair().a, m.pair().b);
    assert!(m.term(Monomial::one(), a.idem(1), b.rho(2)).is_none());
    assert!(m.term(Monomial::var_pow(4, 1), a.idem(1), b.rho(1)).is_none());
    assert!(m.term(Monomial::var_pow(2, 1), a.idem(1), b.rho(1)).is_none());
    assert!(m.term(Monomial::var_pow(0, 3), a.idem(1), b.rho(1)).is_some());
}

#[test]
fn slice_examples() {
    let m = ModelA::for_rank(3).unwrap();
    let s = m.slice_basis(6, -2, Some(2)).unwrap();
    let c = m.generating_cocycle();
    assert!(c.terms().all(|t| s.position(t).is_some()));
    assert!(m.slice_basis(3, -5, None).unwrap().basis.is_empty());
    assert!(matches!(m.slice_basis(6, -2, Some(0)), Err(Error::InsufficientTruncation { needed: 1, given: 0 })));
}

#[test]
fn bidegree_law_on_weight_zero_monomials() {
    for n in 3..=4 {
        let ma = ModelA::for_rank(n).unwrap();
        let mb = ModelB::for_rank(n).unwrap();
        for len in 0..=3 * n as u32 {
            for j in -(2 * n as i64 + 2)..=2 * n as i64 + 2 {
                for t in ma.slice_basis(len, j, None).unwrap().basis {
                    let k = t.coeff.exponent(0) as i64;
                    assert_eq!(j, -2 * k - ma.pair().a.len(t.a) as i64);
                }
                for t in mb.slice_basis(len, j, None).unwrap().basis {
                    let k = t.coeff.exponent(n + 1) as i64;
                    assert_eq!(j, -2 * k - mb.pair().b.len(t.a) as i64);
                }
            }
        }
    }
}

fn delta_squared_vanishes<P: KoszulPair>(m: &PairModel<P>, max_n: u32, j_range: i64) {
    for len in 0..=max_n {
        for j in -j_range..=j_range {
            for t in m.slice_basis(len, j, None).unwrap().basis {
                let x: TwistedElem<_, _> = [t].into_iter().collect();
                let d = m.twisted_diff(&x);
                assert!(m.twisted_diff(&d).is_zero());
                for u in d.terms() {
                    let deg = m.bidegree(u).unwrap();
                    assert_eq!((deg.n, deg.j), (len + 1, j - 1));
                }
            }
        }
    }
}

#[test]
fn twisted_differential_squares_to_zero() {
    for n in 3..=6 {
        let (max_n, jr) = (3 * n as u32, 2 * n as i64 + 2);
        delta_squared_vanishes(&ModelA::for_rank(n).unwrap(), max_n, jr);
        delta_squared_vanishes(&ModelB::for_rank(n).unwrap(), max_n, jr);
    }
}

#[test]
fn twisted_differential_squares_to_zero_off_weight_zero() {
    let m = ModelA::for_rank(3).unwrap();
    let (a, b) = (m.pair().a, m.pair().b);
    for aw in a.enumerate_basis(4) {
        for bw in b.enumerate_basis(4) {
            for k in 0..2 {
                if let Some(t) = m.term(Monomial::var_pow(0, k), aw, bw) {
                    let x: TwistedElem<_, _> = [t].into_iter().collect();
                    assert!(m.twisted_diff(&m.twisted_diff(&x)).is_zero());
                }
            }
        }
    }
}

#[test]
fn cohomology_tables() {
    for n in 3..=5usize {
        let top = 3 * n as u32;
        let ma = ModelA::for_rank(n).unwrap();
        let mb = ModelB::for_rank(n).unwrap();
        for cell in ma.cohomology_table(-2, 3, top, Exec::Parallel) {
            let cell = cell.unwrap();
            assert_eq!(cell.dim, usize::from(cell.n == 2 * n as u32), "A N={n} n={}", cell.n);
        }
        for cell in ma.cohomology_table(-1, 3, top, Exec::Parallel) {
            assert_eq!(cell.unwrap().dim, 0);
        }
        for cell in mb.cohomology_table(-2, 3, top, Exec::Parallel) {
            let cell = cell.unwrap();
            assert_eq!(cell.dim, usize::from(cell.n == n as u32), "B N={n} n={}", cell.n);
        }
        for cell in mb.cohomology_table(-1, 3, top, Exec::Parallel) {
            assert_eq!(cell.unwrap().dim, 0);
        }
    }
}

#[test]
fn witnesses_are_the_generating_cocycles() {
    let m = ModelA::for_rank(3).unwrap();
    let cell = m.cohomology(6, -2, None).unwrap();
    assert_eq!(cell.witnesses, [m.render(&m.generating_cocycle())]);
    let m = ModelB::for_rank(4).unwrap();
    let cell = m.cohomology(4, -2, None).unwrap();
    assert_eq!(cell.witnesses, ["V5*I1 ⊗ s[1,5] + V5*I2 ⊗ s[2,6] + V5*I3 ⊗ s[3,7] + V5*I4 ⊗ s[4,8]"]);
}

#[test]
fn cohomology_is_stable_in_truncation() {
    let m = ModelA::for_rank(3).unwrap();
    for len in 3..=9u32 {
        for j in [-4i64, -3, -2, -1] {
            let base = m.cohomology(len, j, None).unwrap().dim;
            let t = m.required_trunc(len);
            for extra in 1..=2 {
                assert_eq!(m.cohomology(len, j, Some(t + extra)).unwrap().dim, base);
            }
        }
    }
}

#[test]
fn coboundaries_have_preimages() {
    let m = ModelA::for_rank(3).unwrap();
    for len in 2..=6u32 {
        for j in [-3i64, -2, 0] {
            for t in m.slice_basis(len, j, None).unwrap().basis.into_iter().take(8) {
                let y: TwistedElem<_, _> = [t].into_iter().collect();
                let x = m.twisted_diff(&y);
                if x.is_zero() {
                    continue;
                }
                let pre = m.is_coboundary(&x, None).unwrap().expect("exact by construction");
                assert_eq!(m.twisted_diff(&pre), x);
            }
        }
    }
    let c = m.generating_cocycle();
    let bad = m.twisted_diff(&[c.terms().next().unwrap().clone()].into_iter().collect());
    assert!(!bad.is_zero());
    let not_closed: TwistedElem<_, _> = [c.terms().next().unwrap().clone()].into_iter().collect();
    assert!(matches!(m.is_coboundary(&not_closed, None), Err(Error::NotACocycle)));
}

#[test]
fn string_model_is_a_complex_and_maps_to_pairs() {
    let p = CobarA::new(3).unwrap();
    let pairs = PairModel::new(p);
    let max_len = 6;
    let sm = StringModel::new(p, max_len);
    let mut checked = 0;
    for s in chained_strings(&p.a, 4) {
        for len in 0..=2 {
            for a in p.a.words_from(p.a.initial(s[0]), len) {
                let t = term(Monomial::var_pow(0, 1), a, s.clone());
                if !sm.is_parallel(&t) {
                    continue;
                }
                let x: TwistedElem<_, _> = [t].into_iter().collect();
                let d = sm.twisted_diff(&x);
                assert!(sm.twisted_diff(&d).is_zero(), "{}", sm.render(&x));
                let lhs: TwistedElem<_, _> = sm.to_pairs(&d).terms().cloned().collect();
                let rhs: TwistedElem<_, _> = pairs
                    .twisted_diff(&sm.to_pairs(&x))
                    .terms()
                    .filter(|u| p.b.len(u.b) <= max_len)
                    .cloned()
                    .collect();
                assert_eq!(lhs, rhs, "{}", sm.render(&x));
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
    assert!(phi_string(&p, &[p.a.u(1), p.a.s(1)]).is_some());
}

#[test]
fn cocycle_components_match_centered_operations() {
    for n in 3..=5 {
        let m = ModelA::for_rank(n).unwrap();
        let s = StarA::new(n).unwrap();
        let comps = cocycle_components(&m);
        assert_eq!(comps.len(), 2 * n);
        let mut rotations: Vec<Vec<AWord>> = (0..2 * n).map(|k| s.rotation(k)).collect();
        let mut seen: Vec<Vec<AWord>> = Vec::new();
        for (v, tuple) in comps {
            let r = s.mu(&tuple, &mut Scratch::new(n));
            assert_eq!(r.case, Case::Centered);
            let out = r.value.unwrap();
            assert_eq!((out.v, out.w), (1, s.algebra().idem(v)));
            seen.push(tuple);
        }
        seen.sort();
        rotations.sort();
        assert_eq!(seen, rotations);

        let m = ModelB::for_rank(n).unwrap();
        let s = StarB::new(n).unwrap();
        let comps = cocycle_components(&m);
        assert_eq!(comps.len(), n);
        for (v, tuple) in comps {
            let out = s.mu(&tuple, &mut Scratch::new(n)).value.unwrap();
            assert_eq!((out.v, out.w), (1, s.algebra().idem(v)));
        }
    }
}
