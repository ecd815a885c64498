//! Twisted Hochschild complexes of A₀ and B₀ and their bigraded cohomology.
//!
//! In the pair model a cochain is a sum of terms `c·a ⊗ b` with `a` a word
//! of the algebra `X`, `c` a monomial in the extended ring, and `b` a word
//! of the Koszul dual `Y`; `a` and `b` must be parallel
//! (`initial(a) = final(b)`, `final(a) = initial(b)`). The differential
//! adds one letter on each side:
//!
//! `δ(a ⊗ b) = Σ_x  xa ⊗ b·φ(x)  +  ax ⊗ φ(x)·b`
//!
//! over the basic letters `x` of `X`. The bidegree of a term is
//! `(n, j) = (ℓ(b), m(c·a) + Σ_{letters y of b} (−m(ψ(y)) − 1))` and `δ`
//! maps `(n, j)` to `(n+1, j−1)`. Slices are further split by Alexander
//! weight `A(c·a) − A(b)`, which `δ` preserves.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::barcobar::{cobar_diff, dual_name, phi_string, CobElem, CobarA, CobarB, KoszulPair};
use crate::error::Error;
use crate::exec::Exec;
use crate::gf2la::{kernel_basis, rank, solve, F2Vec, SparseMatF2};
use crate::ring::Monomial;
use crate::staralg::{var_grading, AlgebraKind, PathAlgebra, Vertex};

type XW<P> = <<P as KoszulPair>::X as PathAlgebra>::Word;
type YW<P> = <<P as KoszulPair>::Y as PathAlgebra>::Word;
/// Elements of the pair model of `P`.
pub type PairElem<P> = TwistedElem<XW<P>, YW<P>>;

/// One monomial `coeff·a ⊗ b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwTerm<A, B> {
    pub coeff: Monomial,
    pub a: A,
    pub b: B,
}

/// F₂-combination of pair-model terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistedElem<A: Ord, B: Ord> {
    terms: BTreeSet<TwTerm<A, B>>,
}

impl<A: Ord + Clone, B: Ord + Clone> Default for TwistedElem<A, B> {
    fn default() -> Self {
        TwistedElem { terms: BTreeSet::new() }
    }
}

impl<A: Ord + Clone, B: Ord + Clone> TwistedElem<A, B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &TwTerm<A, B>> {
        self.terms.iter()
    }

    pub fn toggle(&mut self, t: TwTerm<A, B>) {
        if !self.terms.remove(&t) {
            self.terms.insert(t);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        TwistedElem { terms: self.terms.symmetric_difference(&other.terms).cloned().collect() }
    }
}

impl<A: Ord + Clone, B: Ord + Clone> FromIterator<TwTerm<A, B>> for TwistedElem<A, B> {
    fn from_iter<I: IntoIterator<Item = TwTerm<A, B>>>(iter: I) -> Self {
        let mut e = Self::zero();
        for t in iter {
            e.toggle(t);
        }
        e
    }
}

/// Bidegree `(n, j)` and Alexander weight of a homogeneous piece.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Bidegree {
    pub n: u32,
    pub j: i64,
    pub weight: Vec<i64>,
}

/// Basis of one homogeneous slice of the pair model.
#[derive(Clone, Debug)]
pub struct BigradedSlice<A, B> {
    pub degree: Bidegree,
    pub trunc: u32,
    pub basis: Vec<TwTerm<A, B>>,
    index: BTreeMap<TwTerm<A, B>, usize>,
}

impl<A: Ord + Clone, B: Ord + Clone> BigradedSlice<A, B> {
    fn new(degree: Bidegree, trunc: u32, mut basis: Vec<TwTerm<A, B>>) -> Self {
        basis.sort();
        let index = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        BigradedSlice { degree, trunc, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, t: &TwTerm<A, B>) -> Option<usize> {
        self.index.get(t).copied()
    }

    fn vector(&self, x: &TwistedElem<A, B>) -> Option<F2Vec> {
        let mut v = F2Vec::zeros(self.dim());
        for t in x.terms() {
            v.toggle(self.position(t)?);
        }
        Some(v)
    }

    fn element(&self, v: &F2Vec) -> TwistedElem<A, B> {
        v.ones().map(|i| self.basis[i].clone()).collect()
    }
}

/// Cohomology of one bidegree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyCell {
    pub algebra: AlgebraKind,
    pub rank: usize,
    pub n: u32,
    pub j: i64,
    pub dim: usize,
    pub trunc: u32,
    /// Representatives of a basis of the cohomology, rendered.
    pub witnesses: Vec<String>,
}

/// The pair model `X[V₀..V_{N+1}] ⊗ Y` of the twisted Hochschild complex of `X`.
#[derive(Clone, Debug)]
pub struct PairModel<P> {
    p: P,
}

/// Pair model of A₀ (right factors in B₀).
pub type ModelA = PairModel<CobarA>;
/// Pair model of B₀ (right factors in A₀).
pub type ModelB = PairModel<CobarB>;

impl ModelA {
    pub fn for_rank(n: usize) -> Result<Self, Error> {
        Ok(PairModel { p: CobarA::new(n)? })
    }
}

impl ModelB {
    pub fn for_rank(n: usize) -> Result<Self, Error> {
        Ok(PairModel { p: CobarB::new(n)? })
    }
}

impl<P: KoszulPair> PairModel<P> {
    pub fn new(p: P) -> Self {
        PairModel { p }
    }

    pub fn pair(&self) -> &P {
        &self.p
    }

    pub fn kind(&self) -> AlgebraKind {
        self.p.x().kind()
    }

    fn n(&self) -> usize {
        self.p.x().rank()
    }

    fn live(&self) -> usize {
        self.p.x().live_var()
    }

    fn var_len(&self) -> u32 {
        var_grading(self.n(), self.live()).expect("graded").len as u32
    }

    /// Basic letters of `X`.
    fn letters(&self) -> Vec<XW<P>> {
        self.p.x().words_of_len(1)
    }

    /// Builds a term, or `None` if the coefficient annihilates `a` or the
    /// factors are not parallel.
    pub fn term(&self, coeff: Monomial, a: XW<P>, b: YW<P>) -> Option<TwTerm<XW<P>, YW<P>>> {
        let (x, y) = (self.p.x(), self.p.y());
        let live = self.live();
        if !coeff.uses_only(|v| v == live) {
            return None;
        }
        (x.initial(a) == y.final_(b) && x.final_(a) == y.initial(b)).then_some(TwTerm { coeff, a, b })
    }

    pub fn twisted_diff(&self, el: &TwistedElem<XW<P>, YW<P>>) -> TwistedElem<XW<P>, YW<P>> {
        let (x, y) = (self.p.x(), self.p.y());
        let letters = self.letters();
        let mut out = TwistedElem::zero();
        for t in el.terms() {
            for &l in &letters {
                let d = self.p.dual(l);
                if let (Some(a), Some(b)) = (x.mul(l, t.a), y.mul(t.b, d)) {
                    out.toggle(TwTerm { coeff: t.coeff.clone(), a, b });
                }
                if let (Some(a), Some(b)) = (x.mul(t.a, l), y.mul(d, t.b)) {
                    out.toggle(TwTerm { coeff: t.coeff.clone(), a, b });
                }
            }
        }
        out
    }

    /// Bidegree and Alexander weight of a term (`None` for ungraded coefficients).
    pub fn bidegree(&self, t: &TwTerm<XW<P>, YW<P>>) -> Option<Bidegree> {
        let (x, y) = (self.p.x(), self.p.y());
        let n = self.n();
        let mut left = x.grading(t.a);
        for (v, e) in t.coeff.iter() {
            left = left.add(&var_grading(n, v)?.scale(e as i64));
        }
        let right = y.grading(t.b);
        let shift: i64 = y.letters(t.b).into_iter().map(|l| -x.maslov(self.p.undual(l)) - 1).sum();
        Some(Bidegree {
            n: y.len(t.b),
            j: left.m + shift,
            weight: left.alex.iter().zip(&right.alex).map(|(l, r)| l - r).collect(),
        })
    }

    /// Smallest `trunc` (largest live-variable exponent) for which the slices
    /// at lengths `n−1`, `n`, `n+1` of weight 0 are complete.
    pub fn required_trunc(&self, n: u32) -> u32 {
        (n + 1) / self.var_len()
    }

    /// All terms of bidegree `(n, j)` and weight `weight` whose coefficient
    /// exponent is at most `trunc`.
    pub fn slice(&self, n: u32, j: i64, weight: &[i64], trunc: u32) -> BigradedSlice<XW<P>, YW<P>> {
        let (x, y) = (self.p.x(), self.p.y());
        let wsum: i64 = weight.iter().sum();
        let vl = self.var_len() as i64;
        let mut basis = Vec::new();
        for b in y.words_of_len(n) {
            for k in 0..=trunc {
                let la = n as i64 + wsum - k as i64 * vl;
                if la < 0 {
                    break;
                }
                for a in x.words_from(y.final_(b), la as u32) {
                    let Some(t) = self.term(Monomial::var_pow(self.live(), k), a, b) else {
                        continue;
                    };
                    let d = self.bidegree(&t).expect("graded");
                    if d.j == j && d.weight == weight {
                        basis.push(t);
                    }
                }
            }
        }
        let degree = Bidegree { n, j, weight: weight.to_vec() };
        BigradedSlice::new(degree, trunc, basis)
    }

    /// Weight-0 slice `(n, j)`.
    pub fn slice_basis(&self, n: u32, j: i64, trunc: Option<u32>) -> Result<BigradedSlice<XW<P>, YW<P>>, Error> {
        let trunc = self.check_trunc(n, trunc)?;
        Ok(self.slice(n, j, &vec![0; 2 * self.n()], trunc))
    }

    fn check_trunc(&self, n: u32, trunc: Option<u32>) -> Result<u32, Error> {
        let needed = self.required_trunc(n);
        match trunc {
            None => Ok(needed),
            Some(t) if t >= needed => Ok(t),
            Some(t) => Err(Error::InsufficientTruncation { needed, given: t }),
        }
    }

    /// Matrix of `δ` from `src` to `dst` (rows indexed by `dst`).
    pub fn diff_matrix(
        &self,
        src: &BigradedSlice<XW<P>, YW<P>>,
        dst: &BigradedSlice<XW<P>, YW<P>>,
    ) -> SparseMatF2 {
        let mut m = SparseMatF2::zeros(dst.dim(), src.dim());
        for (c, t) in src.basis.iter().enumerate() {
            let d = self.twisted_diff(&std::iter::once(t.clone()).collect());
            for u in d.terms() {
                let r = dst.position(u).expect("differential stays in the next slice");
                m.toggle(r, c);
            }
        }
        m
    }

    fn neighbours(&self, n: u32, j: i64, weight: &[i64], trunc: u32) -> [BigradedSlice<XW<P>, YW<P>>; 3] {
        let before = if n == 0 {
            BigradedSlice::new(Bidegree { n: 0, j: j + 1, weight: weight.to_vec() }, trunc, Vec::new())
        } else {
            self.slice(n - 1, j + 1, weight, trunc)
        };
        [before, self.slice(n, j, weight, trunc), self.slice(n + 1, j - 1, weight, trunc)]
    }

    /// `dim H^{n,j}` on the weight-0 part, with representative cocycles.
    pub fn cohomology(&self, n: u32, j: i64, trunc: Option<u32>) -> Result<CohomologyCell, Error> {
        let trunc = self.check_trunc(n, trunc)?;
        let weight = vec![0; 2 * self.n()];
        let [before, here, after] = self.neighbours(n, j, &weight, trunc);
        let d_in = self.diff_matrix(&before, &here);
        let d_out = self.diff_matrix(&here, &after);
        let r_in = rank(&d_in);
        let kernel = kernel_basis(&d_out);
        let dim = kernel.len() - r_in;
        // extend a basis of the image by kernel vectors
        let mut span: Vec<Vec<usize>> = (0..d_in.cols())
            .map(|c| (0..d_in.rows()).filter(|&r| d_in.get(r, c)).collect())
            .collect();
        let mut current = r_in;
        let mut witnesses = Vec::new();
        for v in kernel {
            span.push(v.ones().collect());
            let r = rank(&SparseMatF2::from_rows(here.dim(), &span));
            if r > current {
                current = r;
                witnesses.push(self.render(&here.element(&v)));
            } else {
                span.pop();
            }
        }
        debug_assert_eq!(witnesses.len(), dim);
        Ok(CohomologyCell { algebra: self.kind(), rank: self.n(), n, j, dim, trunc, witnesses })
    }

    /// Cohomology for every `n` in `n_lo..=n_hi` at Maslov degree `j`.
    pub fn cohomology_table(&self, j: i64, n_lo: u32, n_hi: u32, exec: Exec) -> Vec<Result<CohomologyCell, Error>>
    where
        P: Sync,
    {
        let ns: Vec<u32> = (n_lo..=n_hi).collect();
        exec.map(&ns, |&n| self.cohomology(n, j, None))
    }

    /// Splits an element into homogeneous pieces.
    pub fn homogeneous_parts(
        &self,
        x: &TwistedElem<XW<P>, YW<P>>,
    ) -> Result<BTreeMap<Bidegree, PairElem<P>>, Error> {
        let mut parts: BTreeMap<Bidegree, PairElem<P>> = BTreeMap::new();
        for t in x.terms() {
            let d = self.bidegree(t).ok_or(Error::VariableOutOfRange { var: usize::MAX })?;
            parts.entry(d).or_default().toggle(t.clone());
        }
        Ok(parts)
    }

    /// A preimage `y` with `δy = x`, or `None` if there is none with
    /// coefficient exponents up to `trunc`.
    pub fn is_coboundary(
        &self,
        x: &TwistedElem<XW<P>, YW<P>>,
        trunc: Option<u32>,
    ) -> Result<Option<PairElem<P>>, Error> {
        if !self.twisted_diff(x).is_zero() {
            return Err(Error::NotACocycle);
        }
        let mut pre = TwistedElem::zero();
        for (d, part) in self.homogeneous_parts(x)? {
            if d.n == 0 {
                return Ok(None);
            }
            let tr = match trunc {
                Some(t) => t,
                None => self.required_trunc(d.n) + part.terms().map(|t| t.coeff.degree()).max().unwrap_or(0),
            };
            let src = self.slice(d.n - 1, d.j + 1, &d.weight, tr);
            let dst = self.slice(d.n, d.j, &d.weight, tr);
            let Some(rhs) = dst.vector(&part) else {
                return Ok(None);
            };
            let m = self.diff_matrix(&src, &dst);
            match solve(&m, &rhs)? {
                Some(sol) => pre = pre.add(&src.element(&sol)),
                None => return Ok(None),
            }
        }
        Ok(Some(pre))
    }

    /// `V·I_v ⊗ b` summed over the closed words `b` of length `ℓ(V)` at each
    /// vertex with Alexander weight 0: `V₀ ⊗ U₀` for A₀, `V_{N+1} ⊗ U_{N+1}`
    /// for B₀.
    pub fn generating_cocycle(&self) -> TwistedElem<XW<P>, YW<P>> {
        let (x, y) = (self.p.x(), self.p.y());
        let zero = vec![0; 2 * self.n()];
        let mut out = TwistedElem::zero();
        for v in x.vertices() {
            for b in y.words_from(v, self.var_len()) {
                let Some(t) = self.term(Monomial::var_pow(self.live(), 1), x.idem(v), b) else {
                    continue;
                };
                if self.bidegree(&t).is_some_and(|d| d.weight == zero) {
                    out.toggle(t);
                }
            }
        }
        out
    }

    pub fn render_term(&self, t: &TwTerm<XW<P>, YW<P>>) -> String {
        let a = self.p.x().render(t.a);
        let b = self.p.y().render(t.b);
        if t.coeff.is_one() {
            format!("{a} ⊗ {b}")
        } else {
            format!("{}*{a} ⊗ {b}", t.coeff)
        }
    }

    pub fn render(&self, x: &TwistedElem<XW<P>, YW<P>>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.terms().map(|t| self.render_term(t)).collect::<Vec<_>>().join(" + ")
    }
}

/// One term `c·a ⊗ ξ` of the cobar-string model, `ξ` a nonempty dual string.
pub type StringTerm<A> = TwTerm<A, Vec<A>>;

/// The twisted complex `X[V] ⊗ tCob(X)` on dual strings, using the full
/// Hochschild differential
///
/// `δ(a ⊗ ξ) = a ⊗ δξ + Σ_x  xa ⊗ (x* ⊗ ξ)  +  ax ⊗ (ξ ⊗ x*)`
///
/// with `x` over all augmentation-ideal basis words. Strings with total
/// length above `max_len` are dropped; they span a subcomplex, so the
/// result is a quotient complex.
#[derive(Clone, Debug)]
pub struct StringModel<P> {
    p: P,
    pub max_len: u32,
}

impl<P: KoszulPair> StringModel<P> {
    pub fn new(p: P, max_len: u32) -> Self {
        StringModel { p, max_len }
    }

    pub fn pair(&self) -> &P {
        &self.p
    }

    pub fn twisted_diff(&self, el: &TwistedElem<XW<P>, Vec<XW<P>>>) -> TwistedElem<XW<P>, Vec<XW<P>>> {
        let x = self.p.x();
        let mut out = TwistedElem::zero();
        for t in el.terms() {
            let used: u32 = t.b.iter().map(|&w| x.len(w)).sum();
            for s in cobar_diff(x, &CobElem::from_string(t.b.clone())).strings() {
                out.toggle(TwTerm { coeff: t.coeff.clone(), a: t.a, b: s.clone() });
            }
            let (Some(&first), Some(&last)) = (t.b.first(), t.b.last()) else { continue };
            for len in 1..=self.max_len.saturating_sub(used) {
                for w in x.vertices().flat_map(|v| x.words_from(v, len)) {
                    if x.final_(w) == x.initial(first) {
                        if let Some(a) = x.mul(w, t.a) {
                            let mut b = Vec::with_capacity(t.b.len() + 1);
                            b.push(w);
                            b.extend_from_slice(&t.b);
                            out.toggle(TwTerm { coeff: t.coeff.clone(), a, b });
                        }
                    }
                    if x.initial(w) == x.final_(last) {
                        if let Some(a) = x.mul(t.a, w) {
                            let mut b = t.b.clone();
                            b.push(w);
                            out.toggle(TwTerm { coeff: t.coeff.clone(), a, b });
                        }
                    }
                }
            }
        }
        out
    }

    /// `id ⊗ φ` into the pair model.
    pub fn to_pairs(&self, el: &TwistedElem<XW<P>, Vec<XW<P>>>) -> TwistedElem<XW<P>, YW<P>> {
        el.terms()
            .filter_map(|t| phi_string(&self.p, &t.b).map(|b| TwTerm { coeff: t.coeff.clone(), a: t.a, b }))
            .collect()
    }

    /// Parallel terms `c·a ⊗ ξ`: `initial(a) = initial(ξ)`, `final(a) = final(ξ)`.
    pub fn is_parallel(&self, t: &StringTerm<XW<P>>) -> bool {
        let x = self.p.x();
        match (t.b.first(), t.b.last()) {
            (Some(&f), Some(&l)) => x.initial(t.a) == x.initial(f) && x.final_(t.a) == x.final_(l),
            _ => false,
        }
    }

    pub fn render(&self, el: &TwistedElem<XW<P>, Vec<XW<P>>>) -> String {
        let x = self.p.x();
        if el.is_zero() {
            return "0".into();
        }
        el.terms()
            .map(|t| {
                let s = t.b.iter().map(|&w| dual_name(x, w)).collect::<Vec<_>>().join(".");
                format!("{}*{} ⊗ {s}", t.coeff, x.render(t.a))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// How the components of the generating cocycle match the higher operations:
/// for each term `V·I_v ⊗ b`, the string `ψ(b)` and its vertex `v`.
pub fn cocycle_components<P: KoszulPair>(model: &PairModel<P>) -> Vec<(Vertex, Vec<XW<P>>)> {
    model
        .generating_cocycle()
        .terms()
        .map(|t| {
            let v = model.p.x().initial(t.a);
            let s = crate::barcobar::psi_word(&model.p, t.b).expect("non-idempotent");
            (v, s)
        })
        .collect()
}
