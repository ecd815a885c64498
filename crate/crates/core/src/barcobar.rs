//! Bar and cobar complexes of A₀ and B₀ over F₂, and the homotopy
//! equivalence between the cobar complex of one algebra and the other.
//!
//! A dual string `a₁*⊗⋯⊗a_k*` is stored as the word list `[a₁, …, a_k]`;
//! its factors are non-idempotent and chain: `final(a_{i-1}) = initial(a_i)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Error;
use crate::exec::Exec;
use crate::staralg::{AWord, BWord, Letter, PathAlgebra, A0, B0};

/// F₂-combination of dual strings (or bar strings) of one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CobElem<W> {
    strings: BTreeSet<Vec<W>>,
}

impl<W: Ord + Clone> Default for CobElem<W> {
    fn default() -> Self {
        CobElem { strings: BTreeSet::new() }
    }
}

impl<W: Ord + Clone> CobElem<W> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_string(s: Vec<W>) -> Self {
        let mut e = Self::zero();
        e.toggle(s);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.strings.is_empty()
    }

    pub fn len(&self) -> usize {
        self.strings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    pub fn strings(&self) -> impl Iterator<Item = &Vec<W>> {
        self.strings.iter()
    }

    pub fn contains(&self, s: &[W]) -> bool {
        self.strings.contains(s)
    }

    /// Adds one string (char 2).
    pub fn toggle(&mut self, s: Vec<W>) {
        if !self.strings.remove(&s) {
            self.strings.insert(s);
        }
    }

    pub fn add(&self, other: &CobElem<W>) -> CobElem<W> {
        CobElem { strings: self.strings.symmetric_difference(&other.strings).cloned().collect() }
    }

    pub fn add_assign(&mut self, other: &CobElem<W>) {
        for s in &other.strings {
            self.toggle(s.clone());
        }
    }
}

impl<W: Ord + Clone> FromIterator<Vec<W>> for CobElem<W> {
    fn from_iter<I: IntoIterator<Item = Vec<W>>>(iter: I) -> Self {
        let mut e = Self::zero();
        for s in iter {
            e.toggle(s);
        }
        e
    }
}

pub fn is_chained<A: PathAlgebra>(alg: &A, s: &[A::Word]) -> bool {
    s.windows(2).all(|p| alg.final_(p[0]) == alg.initial(p[1]))
}

/// A well-formed dual string: nonempty, non-idempotent factors, chained.
pub fn check_string<A: PathAlgebra>(alg: &A, s: &[A::Word]) -> Result<(), Error> {
    if s.is_empty() || s.iter().any(|&w| alg.is_idem(w)) {
        return Err(Error::IdempotentInput(format!("{:?}", s)));
    }
    if !is_chained(alg, s) {
        return Err(Error::NotChained);
    }
    Ok(())
}

/// Maslov grading `Σ (−m(a_i) − 1)` and length `Σ ℓ(a_i)` of a dual string.
pub fn dual_grading<A: PathAlgebra>(alg: &A, s: &[A::Word]) -> (i64, u32) {
    let m = s.iter().map(|&w| -alg.maslov(w) - 1).sum();
    (m, s.iter().map(|&w| alg.len(w)).sum())
}

/// `δ(a₁*⊗⋯⊗a_k*) = Σ_i a₁*⊗⋯⊗(b*⊗c*)⊗⋯⊗a_k*` over factorizations `a_i = bc`.
pub fn cobar_diff<A: PathAlgebra>(alg: &A, x: &CobElem<A::Word>) -> CobElem<A::Word> {
    let mut out = CobElem::zero();
    for s in x.strings() {
        for (i, &a) in s.iter().enumerate() {
            for (b, c) in alg.factorizations(a) {
                let mut t = Vec::with_capacity(s.len() + 1);
                t.extend_from_slice(&s[..i]);
                t.push(b);
                t.push(c);
                t.extend_from_slice(&s[i + 1..]);
                out.toggle(t);
            }
        }
    }
    out
}

/// Concatenation product, zero across a seam that does not chain.
pub fn cobar_mul<A: PathAlgebra>(alg: &A, f: &CobElem<A::Word>, g: &CobElem<A::Word>) -> CobElem<A::Word> {
    let mut out = CobElem::zero();
    for s in f.strings() {
        for t in g.strings() {
            let (Some(&l), Some(&r)) = (s.last(), t.first()) else { continue };
            if alg.final_(l) == alg.initial(r) {
                let mut u = s.clone();
                u.extend_from_slice(t);
                out.toggle(u);
            }
        }
    }
    out
}

/// Differential of the reduced bar complex on strings `a₀⊗a₁⊗⋯⊗a_k⊗a_{k+1}`
/// with outer factors in A and inner factors in the augmentation ideal.
pub fn bar_diff<A: PathAlgebra>(alg: &A, x: &CobElem<A::Word>) -> CobElem<A::Word> {
    let mut out = CobElem::zero();
    for s in x.strings() {
        if s.len() < 3 {
            continue;
        }
        for i in 0..s.len() - 1 {
            if let Some(p) = alg.mul(s[i], s[i + 1]) {
                let mut t = Vec::with_capacity(s.len() - 1);
                t.extend_from_slice(&s[..i]);
                t.push(p);
                t.extend_from_slice(&s[i + 2..]);
                out.toggle(t);
            }
        }
    }
    out
}

/// Every chained string of non-idempotent words with total length in
/// `1..=max_total_len`, canonically ordered.
pub fn chained_strings<A: PathAlgebra>(alg: &A, max_total_len: u32) -> Vec<Vec<A::Word>> {
    fn grow<A: PathAlgebra>(alg: &A, budget: u32, cur: &mut Vec<A::Word>, out: &mut Vec<Vec<A::Word>>) {
        out.push(cur.clone());
        let v = alg.final_(*cur.last().expect("nonempty"));
        for len in 1..=budget {
            for w in alg.words_from(v, len) {
                cur.push(w);
                grow(alg, budget - len, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in alg.vertices() {
        for len in 1..=max_total_len {
            for w in alg.words_from(v, len) {
                grow(alg, max_total_len - len, &mut vec![w], &mut out);
            }
        }
    }
    out.sort();
    out
}

/// Chained strings `a₀⊗a₁⊗⋯⊗a_{k+1}` for the bar complex: outer factors
/// may be idempotents, inner factors may not.
pub fn bar_strings<A: PathAlgebra>(alg: &A, max_total_len: u32) -> Vec<Vec<A::Word>> {
    let mut out = Vec::new();
    for inner in chained_strings(alg, max_total_len) {
        let used: u32 = inner.iter().map(|&w| alg.len(w)).sum();
        let budget = max_total_len - used;
        let first = alg.initial(inner[0]);
        let last = alg.final_(*inner.last().expect("nonempty"));
        for l0 in 0..=budget {
            for a0 in alg.vertices().flat_map(|v| alg.words_from(v, l0)) {
                if alg.final_(a0) != first {
                    continue;
                }
                for l1 in 0..=budget - l0 {
                    for a1 in alg.words_from(last, l1) {
                        let mut s = Vec::with_capacity(inner.len() + 2);
                        s.push(a0);
                        s.extend_from_slice(&inner);
                        s.push(a1);
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

/// A Koszul-dual pair: basic letters of `X` correspond to basic letters of `Y`.
pub trait KoszulPair: Sync + Send {
    type X: PathAlgebra;
    type Y: PathAlgebra;

    fn x(&self) -> &Self::X;
    fn y(&self) -> &Self::Y;
    /// Dual letter of a basic word of `X`.
    fn dual(&self, a: <Self::X as PathAlgebra>::Word) -> <Self::Y as PathAlgebra>::Word;
    /// Inverse of [`KoszulPair::dual`].
    fn undual(&self, b: <Self::Y as PathAlgebra>::Word) -> <Self::X as PathAlgebra>::Word;
}

type XW<P> = <<P as KoszulPair>::X as PathAlgebra>::Word;
type YW<P> = <<P as KoszulPair>::Y as PathAlgebra>::Word;

/// tCob(A₀) and B₀: `U_i* ↦ ρ_i`, `s_i* ↦ σ_i`.
#[derive(Clone, Copy, Debug)]
pub struct CobarA {
    pub a: A0,
    pub b: B0,
}

/// tCob(B₀) and A₀: `ρ_i* ↦ U_i`, `σ_i* ↦ s_i`.
#[derive(Clone, Copy, Debug)]
pub struct CobarB {
    pub b: B0,
    pub a: A0,
}

impl CobarA {
    pub fn new(n: usize) -> Result<Self, Error> {
        Ok(CobarA { a: A0::new(n)?, b: B0::new(n)? })
    }
}

impl CobarB {
    pub fn new(n: usize) -> Result<Self, Error> {
        Ok(CobarB { b: B0::new(n)?, a: A0::new(n)? })
    }
}

fn a_to_b(b: &B0, w: AWord) -> BWord {
    match w {
        AWord::UPow { i, n: 1 } => b.rho(i),
        AWord::SChain { i, len: 1 } => b.sigma(i),
        _ => panic!("not a basic A0 letter: {w}"),
    }
}

fn b_to_a(a: &A0, w: BWord) -> AWord {
    match w {
        BWord::Chain { src, first: Letter::Rho, len: 1 } => a.u(src),
        BWord::Chain { src, first: Letter::Sigma, len: 1 } => a.s(src),
        _ => panic!("not a basic B0 letter: {w:?}"),
    }
}

impl KoszulPair for CobarA {
    type X = A0;
    type Y = B0;

    fn x(&self) -> &A0 {
        &self.a
    }

    fn y(&self) -> &B0 {
        &self.b
    }

    fn dual(&self, a: AWord) -> BWord {
        a_to_b(&self.b, a)
    }

    fn undual(&self, b: BWord) -> AWord {
        b_to_a(&self.a, b)
    }
}

impl KoszulPair for CobarB {
    type X = B0;
    type Y = A0;

    fn x(&self) -> &B0 {
        &self.b
    }

    fn y(&self) -> &A0 {
        &self.a
    }

    fn dual(&self, b: BWord) -> AWord {
        b_to_a(&self.a, b)
    }

    fn undual(&self, a: AWord) -> BWord {
        a_to_b(&self.b, a)
    }
}

/// Length of the leading block: the longest prefix of basic factors whose
/// image `φ(a_k)⋯φ(a₁)` is nonzero.
pub fn leading_block<P: KoszulPair>(p: &P, s: &[XW<P>]) -> usize {
    let (x, y) = (p.x(), p.y());
    let mut acc: Option<YW<P>> = None;
    for (k, &a) in s.iter().enumerate() {
        if !x.is_basic(a) {
            return k;
        }
        let d = p.dual(a);
        acc = match acc {
            None => Some(d),
            Some(prev) => match y.mul(d, prev) {
                Some(w) => Some(w),
                None => return k,
            },
        };
    }
    s.len()
}

/// `φ(a₁*⊗⋯⊗a_k*) = φ(a_k)⋯φ(a₁)`; zero unless every factor is basic.
pub fn phi_string<P: KoszulPair>(p: &P, s: &[XW<P>]) -> Option<YW<P>> {
    if s.is_empty() || leading_block(p, s) != s.len() {
        return None;
    }
    let y = p.y();
    s[1..].iter().try_fold(p.dual(s[0]), |acc, &a| y.mul(p.dual(a), acc))
}

/// `φ` extended linearly; the result is a set of basis words of `Y` (F₂).
pub fn phi<P: KoszulPair>(p: &P, x: &CobElem<XW<P>>) -> BTreeSet<YW<P>> {
    let mut out = BTreeSet::new();
    for s in x.strings() {
        if let Some(w) = phi_string(p, s) {
            if !out.remove(&w) {
                out.insert(w);
            }
        }
    }
    out
}

/// `ψ(b)`: the letters of `b` in reverse written order, dualised. `None` for
/// idempotents (the empty string is not part of the reduced complex).
pub fn psi_word<P: KoszulPair>(p: &P, b: YW<P>) -> Option<Vec<XW<P>>> {
    let y = p.y();
    if y.is_idem(b) {
        return None;
    }
    Some(y.letters(b).into_iter().rev().map(|l| p.undual(l)).collect())
}

pub fn psi<P: KoszulPair>(p: &P, bs: &BTreeSet<YW<P>>) -> CobElem<XW<P>> {
    bs.iter().filter_map(|&b| psi_word(p, b)).collect()
}

/// Which homotopy operator to use; `NoLeadingBlock` is a deliberately
/// broken variant (treats every leading block as empty).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum HomotopyVariant {
    #[default]
    Standard,
    NoLeadingBlock,
}

/// `H` on one string: with leading block `a₁…a_n` and remainder `ã₁…`,
/// merge `a_n` and `ã₁` into `(a_n ã₁)*` when `n, m > 0` and the product
/// is nonzero.
pub fn homotopy_string<P: KoszulPair>(p: &P, s: &[XW<P>], variant: HomotopyVariant) -> Option<Vec<XW<P>>> {
    let n = match variant {
        HomotopyVariant::Standard => leading_block(p, s),
        HomotopyVariant::NoLeadingBlock => 0,
    };
    if n == 0 || n == s.len() {
        return None;
    }
    let merged = p.x().mul(s[n - 1], s[n])?;
    let mut t = Vec::with_capacity(s.len() - 1);
    t.extend_from_slice(&s[..n - 1]);
    t.push(merged);
    t.extend_from_slice(&s[n + 1..]);
    Some(t)
}

pub fn homotopy_h<P: KoszulPair>(p: &P, x: &CobElem<XW<P>>) -> CobElem<XW<P>> {
    homotopy_with(p, x, HomotopyVariant::Standard)
}

pub fn homotopy_with<P: KoszulPair>(p: &P, x: &CobElem<XW<P>>, variant: HomotopyVariant) -> CobElem<XW<P>> {
    x.strings().filter_map(|s| homotopy_string(p, s, variant)).collect()
}

/// Outcome of checking `δH + Hδ = id + ψφ` over a range of strings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomotopyReport {
    pub strings: usize,
    /// Rendered strings where the identity fails.
    pub failures: Vec<String>,
}

impl HomotopyReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `δH(ξ) + H(δξ) + ξ + ψφ(ξ)`; zero iff the identity holds on `ξ`.
pub fn homotopy_defect<P: KoszulPair>(p: &P, s: &[XW<P>], variant: HomotopyVariant) -> CobElem<XW<P>> {
    let x = p.x();
    let xi = CobElem::from_string(s.to_vec());
    let mut acc = cobar_diff(x, &homotopy_with(p, &xi, variant));
    acc.add_assign(&homotopy_with(p, &cobar_diff(x, &xi), variant));
    acc.add_assign(&xi);
    acc.add_assign(&psi(p, &phi(p, &xi)));
    acc
}

/// Checks the homotopy identity on every chained string with `Σℓ ≤ max_total_len`.
pub fn verify_homotopy<P: KoszulPair>(p: &P, max_total_len: u32, variant: HomotopyVariant, exec: Exec) -> HomotopyReport {
    let strings = chained_strings(p.x(), max_total_len);
    let failures = exec.flat_map(&strings, |s| {
        if homotopy_defect(p, s, variant).is_zero() {
            Vec::new()
        } else {
            vec![render_string(p, s)]
        }
    });
    HomotopyReport { strings: strings.len(), failures }
}

/// Name of a dual factor: `U1*`, `s2*`, or `(s1s2)*` for longer words.
pub fn dual_name<A: PathAlgebra>(alg: &A, w: A::Word) -> String {
    if alg.is_basic(w) {
        format!("{}*", alg.render(w))
    } else {
        let letters: String = alg.letters(w).into_iter().map(|l| alg.render(l)).collect();
        format!("({letters})*")
    }
}

/// Diagnostic rendering with the leading block separated by `|`.
pub fn render_string<P: KoszulPair>(p: &P, s: &[XW<P>]) -> String {
    let x = p.x();
    let n = leading_block(p, s);
    let part = |ws: &[XW<P>]| ws.iter().map(|&w| dual_name(x, w)).collect::<Vec<_>>().join(".");
    if n == s.len() {
        part(s)
    } else if n == 0 {
        format!("|{}", part(s))
    } else {
        format!("{}|{}", part(&s[..n]), part(&s[n..]))
    }
}

/// Plain rendering of a dual string, factors joined by `.`.
pub fn render_plain<A: PathAlgebra>(alg: &A, s: &[A::Word]) -> String {
    s.iter().map(|&w| dual_name(alg, w)).collect::<Vec<_>>().join(".")
}

pub fn render_elem<A: PathAlgebra>(alg: &A, x: &CobElem<A::Word>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.strings().map(|s| render_plain(alg, s)).collect::<Vec<_>>().join(" + ")
}
