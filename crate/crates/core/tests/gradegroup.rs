use starcob_core::ainfty::{StarA, StarB};
use starcob_core::gradegroup::{
    admissible_arities, assign_grading, check_multiplicativity, gp_mul, parse_word, Gen, GroupElem, GroupGraded,
};
use starcob_core::staralg::{AlgebraKind, PathAlgebra, A0, B0};
use starcob_core::Exec;

#[test]
fn group_arithmetic() {
    let x = GroupElem::gen(1, 1);
    let y = GroupElem::new(0, &[Gen::new(1).inv()]);
    assert_eq!(gp_mul(&x, &y), GroupElem::central(1));
    assert_eq!(gp_mul(&GroupElem::identity(), &x), x);
    let u = GroupElem::new(3, &[Gen::new(2), Gen::new(0).inv()]);
    let v = GroupElem::new(-5, &[Gen::new(0), Gen::new(1)]);
    let p = gp_mul(&u, &v);
    assert_eq!(p.z, -2);
    assert_eq!(p.render_word(), "g2.g1");
    assert!(gp_mul(&u, &u.inverse()).is_identity());
}

#[test]
fn rendering_and_json() {
    let g = GroupElem::new(-2, &[Gen::new(1), Gen::new(2).inv(), Gen::new(2).inv()]);
    assert_eq!(g.render_word(), "g1.g2^-2");
    assert_eq!(g.to_string(), "(-2, g1.g2^-2)");
    assert_eq!(GroupElem::identity().render_word(), "e");
    let s = serde_json::to_string(&g).unwrap();
    assert_eq!(s, r#"{"z":-2,"word":"g1.g2^-2"}"#);
    assert_eq!(serde_json::from_str::<GroupElem>(&s).unwrap(), g);
    assert_eq!("(-2, g1.g2^-2)".parse::<GroupElem>().unwrap(), g);
    assert_eq!(parse_word("g1.g1^-1").unwrap(), vec![]);
}

#[test]
fn b_letter_gradings() {
    let b = B0::new(3).unwrap();
    assert_eq!(assign_grading(&b, b.rho(2)), GroupElem::gen(-1, 2));
    assert_eq!(assign_grading(&b, b.sigma(1)), GroupElem::central(-1));
    assert_eq!(assign_grading(&b, b.parse_word("s1.r1").unwrap()), GroupElem::gen(-2, 1));
}

#[test]
fn grading_is_a_homomorphism_on_b() {
    for n in 3..=4 {
        let b = B0::new(n).unwrap();
        let words = b.enumerate_basis(6);
        for &x in &words {
            for &y in &words {
                if let Some(p) = b.mul(x, y) {
                    assert_eq!(b.gr_word(p), gp_mul(&b.gr_word(x), &b.gr_word(y)));
                }
            }
        }
    }
}

#[test]
fn multiplicativity_of_operations() {
    for n in 3..=5 {
        assert!(check_multiplicativity(&StarB::new(n).unwrap(), n + 2, 3 * n as u32, Exec::Parallel).is_empty());
    }
    assert!(check_multiplicativity(&StarA::new(3).unwrap(), 8, 12, Exec::Parallel).is_empty());
    assert_eq!(B0::new(3).unwrap().gr_var(), GroupElem::central(-2));
    assert_eq!(A0::new(5).unwrap().gr_var(), GroupElem::central(8));
}

#[test]
fn arity_examples() {
    assert!(admissible_arities(AlgebraKind::B0, 5, 3, 4).unwrap().is_empty());
    assert_eq!(admissible_arities(AlgebraKind::B0, 5, 5, 5).unwrap(), [5]);
    assert!(admissible_arities(AlgebraKind::A0, 3, 3, 5).unwrap().is_empty());
    assert_eq!(admissible_arities(AlgebraKind::A0, 3, 6, 6).unwrap(), [6]);
    assert_eq!(admissible_arities(AlgebraKind::A0, 3, 3, 20).unwrap(), [6, 10, 14, 18]);
    assert!(admissible_arities(AlgebraKind::A0, 2, 3, 5).is_err());
}

/// Solves `−2j = −jN + n − 2` for `j ≥ 1` directly.
fn b_oracle(n: usize, arity: usize) -> bool {
    (1..=arity as i64).any(|j| -2 * j == -j * n as i64 + arity as i64 - 2)
}

#[test]
fn arity_obstructions() {
    for n in 3..=8 {
        assert!(admissible_arities(AlgebraKind::A0, n, 3, 2 * n - 1).unwrap().is_empty());
        assert!(admissible_arities(AlgebraKind::B0, n, 3, n - 1).unwrap().is_empty());
        assert_eq!(admissible_arities(AlgebraKind::A0, n, 3, 2 * n).unwrap(), [2 * n]);
        assert_eq!(admissible_arities(AlgebraKind::B0, n, 3, n).unwrap(), [n]);
        let got = admissible_arities(AlgebraKind::B0, n, 3, 4 * n).unwrap();
        let want: Vec<usize> = (3..=4 * n).filter(|&a| b_oracle(n, a)).collect();
        assert_eq!(got, want);
    }
}
