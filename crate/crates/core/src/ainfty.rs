//! A∞-operations on the deformations A (of A₀) and B (of B₀) and a brute-force
//! verifier of the A∞-relations.
//!
//! Operations are evaluated on tuples of basis words and return at most one
//! monomial `V^v · w`, where `V` is the algebra's live coefficient variable.
//! Elements with polynomial coefficients are handled multilinearly.

use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use crate::error::Error;
use crate::exec::Exec;
use crate::ring::{Monomial, Poly};
use crate::staralg::{
    var_grading, AWord, AlgElem, AlgebraKind, BWord, Letter, PathAlgebra, Vertex, Word, A0, B0,
};

/// `V^v · w` for the live variable `V` of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono<W> {
    pub v: u32,
    pub w: W,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Case {
    Centered,
    LeftExtended,
    RightExtended,
    Binary,
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OpOut<W> {
    pub case: Case,
    pub value: Option<Mono<W>>,
}

impl<W> OpOut<W> {
    fn zero() -> Self {
        OpOut { case: Case::Zero, value: None }
    }

    fn some(case: Case, v: u32, w: W) -> Self {
        OpOut { case, value: Some(Mono { v, w }) }
    }
}

/// An A∞-structure whose `μ₂` is the product of a [`PathAlgebra`].
pub trait AInfinity: Sync + Send {
    type Alg: PathAlgebra;

    fn algebra(&self) -> &Self::Alg;

    /// Arities `n ≥ 3` on which `μ_n` can be nonzero.
    fn has_higher(&self, n: usize) -> bool;

    /// `μ_n` for `n ≥ 3` on basis words.
    fn higher(&self, inputs: &[WordOf<Self>], sc: &mut Scratch) -> OpOut<WordOf<Self>>;

    /// Necessary condition for any `μ_n`, `n ≥ 3`, to be nonzero on a
    /// tuple whose inputs have total Alexander grading `alex`. Operations
    /// preserve the Alexander grading, so the same bound applies to every
    /// term of a relation.
    fn higher_support(&self, _alex: &[i64]) -> bool {
        true
    }

    fn has_arity(&self, n: usize) -> bool {
        n == 2 || (n >= 3 && self.has_higher(n))
    }

    fn mu(&self, inputs: &[WordOf<Self>], sc: &mut Scratch) -> OpOut<WordOf<Self>> {
        match inputs.len() {
            0 | 1 => OpOut::zero(),
            2 => match self.algebra().mul(inputs[0], inputs[1]) {
                Some(w) => OpOut::some(Case::Binary, 0, w),
                None => OpOut::zero(),
            },
            n if self.has_higher(n) => self.higher(inputs, sc),
            _ => OpOut::zero(),
        }
    }
}

/// Reusable Alexander-vector buffers for operation evaluation.
#[derive(Clone, Debug)]
pub struct Scratch {
    alex: Vec<i64>,
    tmp: Vec<i64>,
}

impl Scratch {
    pub fn new(n: usize) -> Self {
        Scratch { alex: vec![0; 2 * n], tmp: vec![0; 2 * n] }
    }
}

pub type WordOf<S> = <<S as AInfinity>::Alg as PathAlgebra>::Word;
/// A nonzero operation: its inputs and its output.
pub type OpEntry<S> = (Vec<WordOf<S>>, OpOut<WordOf<S>>);

fn chained<A: PathAlgebra>(alg: &A, ws: &[A::Word]) -> bool {
    ws.windows(2).all(|p| alg.final_(p[0]) == alg.initial(p[1]))
}

/// The deformation A of A₀: `μ₂` plus `μ_n` for `n = j(2N−2)+2`.
#[derive(Clone, Debug)]
pub struct StarA {
    alg: A0,
    dropped: Vec<usize>,
}

impl StarA {
    pub fn new(n: usize) -> Result<Self, Error> {
        Ok(StarA { alg: A0::new(n)?, dropped: Vec::new() })
    }

    /// A deliberately broken structure: the centered `μ_{2N}` tuples with the
    /// given rotation indices return zero (see [`StarA::rotation`]).
    pub fn with_dropped(n: usize, dropped: Vec<usize>) -> Result<Self, Error> {
        Ok(StarA { alg: A0::new(n)?, dropped })
    }

    /// The `k`-th cyclic rotation of `(U₁, s₁, U₂, s₂, …, U_N, s_N)`,
    /// `0 ≤ k < 2N`.
    pub fn rotation(&self, k: usize) -> Vec<AWord> {
        let n = self.alg.rank();
        (0..2 * n)
            .map(|t| {
                let pos = (k + t) % (2 * n);
                let i = (pos / 2 + 1) as Vertex;
                if pos % 2 == 0 {
                    self.alg.u(i)
                } else {
                    self.alg.s(i)
                }
            })
            .collect()
    }

    fn rotation_index(&self, first: AWord) -> usize {
        match first {
            AWord::UPow { i, .. } => 2 * (i as usize - 1),
            AWord::SChain { i, .. } => 2 * (i as usize - 1) + 1,
            AWord::Idem(_) => usize::MAX,
        }
    }

    fn is_dropped(&self, j: u32, inputs: &[AWord]) -> bool {
        j == 1 && self.dropped.contains(&self.rotation_index(inputs[0]))
    }

    fn arity_level(&self, n: usize) -> Option<u32> {
        let step = 2 * self.alg.rank() - 2;
        (n > 2 && (n - 2) % step == 0).then(|| ((n - 2) / step) as u32)
    }

    fn prefix(&self, w: AWord, k: u32) -> AWord {
        match w {
            AWord::UPow { i, .. } => AWord::UPow { i, n: k },
            AWord::SChain { i, .. } => AWord::SChain { i, len: k },
            AWord::Idem(_) => w,
        }
    }

    /// Splits `w` into `(head, tail)` with `ℓ(head) = k`.
    fn split(&self, w: AWord, k: u32) -> (AWord, AWord) {
        let rest = w.len() - k;
        match w {
            AWord::UPow { i, .. } => (AWord::UPow { i, n: k }, AWord::UPow { i, n: rest }),
            AWord::SChain { i, .. } => {
                let tail = self.alg.final_(self.prefix(w, k));
                (AWord::SChain { i, len: k }, AWord::SChain { i: tail, len: rest })
            }
            AWord::Idem(_) => (w, w),
        }
    }
}

/// Whether `total - A(w)` has every coordinate equal to `j`.
fn rest_is_uniform<A: PathAlgebra>(alg: &A, total: &[i64], tmp: &mut [i64], w: A::Word, j: i64) -> bool {
    tmp.fill(0);
    alg.add_alexander(w, tmp);
    total.iter().zip(tmp.iter()).all(|(t, h)| t - h == j)
}

impl AInfinity for StarA {
    type Alg = A0;

    fn algebra(&self) -> &A0 {
        &self.alg
    }

    fn has_higher(&self, n: usize) -> bool {
        self.arity_level(n).is_some()
    }

    fn higher_support(&self, alex: &[i64]) -> bool {
        alex.iter().all(|&a| a >= 1)
    }

    fn higher(&self, inputs: &[AWord], sc: &mut Scratch) -> OpOut<AWord> {
        let Some(j) = self.arity_level(inputs.len()) else {
            return OpOut::zero();
        };
        let target = 2 * self.alg.rank() as u32 * j;
        let mut total = 0;
        for &w in inputs {
            if self.alg.is_idem(w) {
                return OpOut::zero();
            }
            total += w.len();
        }
        if total < target || !chained(&self.alg, inputs) {
            return OpOut::zero();
        }
        let alex = &mut sc.alex;
        alex.fill(0);
        for &w in inputs {
            self.alg.add_alexander(w, alex);
        }
        let jj = j as i64;
        if total == target {
            if alex.iter().all(|&a| a == jj) && !self.is_dropped(j, inputs) {
                return OpOut::some(Case::Centered, j, AWord::Idem(self.alg.initial(inputs[0])));
            }
            return OpOut::zero();
        }
        let excess = total - target;
        let first = inputs[0];
        let last = inputs[inputs.len() - 1];
        let left = (excess < first.len()).then(|| self.split(first, excess)).filter(|&(head, _)| {
            rest_is_uniform(&self.alg, &sc.alex, &mut sc.tmp, head, jj)
        });
        let right = (excess < last.len())
            .then(|| self.split(last, last.len() - excess))
            .filter(|&(_, tail)| rest_is_uniform(&self.alg, &sc.alex, &mut sc.tmp, tail, jj));
        match (left, right) {
            (Some((head, _)), None) => OpOut::some(Case::LeftExtended, j, head),
            (None, Some((_, tail))) => OpOut::some(Case::RightExtended, j, tail),
            _ => OpOut::zero(),
        }
    }
}

/// The deformation B of B₀: `μ₂` plus `μ_N`.
///
/// `μ_N` is nonzero on the chained all-σ tuples `(σ_{i+N−1}, …, σ_i)`, with
/// value `V_{N+1}·I_i`, and on their one-sided extensions: if the first
/// input is `b′σ_{i+N−1}` the value is `b′V_{N+1}`, if the last is `σ_i b′`
/// it is `V_{N+1}b′`. Extending on both sides gives zero.
#[derive(Clone, Debug)]
pub struct StarB {
    alg: B0,
}

impl StarB {
    pub fn new(n: usize) -> Result<Self, Error> {
        Ok(StarB { alg: B0::new(n)? })
    }
}

fn is_sigma(w: BWord) -> bool {
    matches!(w, BWord::Chain { first: Letter::Sigma, len: 1, .. })
}

impl AInfinity for StarB {
    type Alg = B0;

    fn algebra(&self) -> &B0 {
        &self.alg
    }

    fn has_higher(&self, n: usize) -> bool {
        n == self.alg.rank()
    }

    fn higher_support(&self, alex: &[i64]) -> bool {
        alex.iter().skip(1).step_by(2).all(|&a| a >= 1)
    }

    fn higher(&self, inputs: &[BWord], _sc: &mut Scratch) -> OpOut<BWord> {
        let n = inputs.len();
        if n != self.alg.rank() || !inputs[1..n - 1].iter().all(|&w| is_sigma(w)) {
            return OpOut::zero();
        }
        if !chained(&self.alg, inputs) {
            return OpOut::zero();
        }
        let first = inputs[0];
        let last = inputs[n - 1];
        // b₁ = b′σ: its path opens with σ; b_N = σb′: its path closes with σ.
        let left = match first {
            BWord::Chain { src, first: Letter::Sigma, len } if len >= 2 => Some(BWord::Chain {
                src: src % self.alg.rank() as Vertex + 1,
                first: Letter::Rho,
                len: len - 1,
            }),
            _ => None,
        };
        let right = match last {
            BWord::Chain { src, first, len } if len >= 2 && self.alg.path_letters(last)[len as usize - 1].0 == Letter::Sigma => {
                Some(BWord::Chain { src, first, len: len - 1 })
            }
            _ => None,
        };
        let first_ok = is_sigma(first) || left.is_some();
        let last_ok = is_sigma(last) || right.is_some();
        if !first_ok || !last_ok {
            return OpOut::zero();
        }
        match (left, right) {
            (None, None) => OpOut::some(Case::Centered, 1, BWord::Idem(self.alg.initial(first))),
            (Some(w), None) => OpOut::some(Case::LeftExtended, 1, w),
            (None, Some(w)) => OpOut::some(Case::RightExtended, 1, w),
            (Some(_), Some(_)) => OpOut::zero(),
        }
    }
}

/// Result of an operation on algebra elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OpResult {
    pub value: AlgElem,
    /// Case of the first contributing word tuple in canonical order.
    pub case: Case,
}

fn expand<S: AInfinity, F>(
    s: &S,
    seq: &[AlgElem],
    lift: F,
) -> Result<OpResult, Error>
where
    F: Fn(Word) -> Option<WordOf<S>>,
    WordOf<S>: Into<Word>,
{
    let alg = s.algebra();
    let (kind, n) = (alg.kind(), alg.rank());
    for e in seq {
        if e.kind() != kind {
            return Err(Error::AlgebraMismatch { left: kind, right: e.kind() });
        }
        if e.rank() != n {
            return Err(Error::RankMismatch { left: n, right: e.rank() });
        }
    }
    let mut out = AlgElem::zero(kind, n);
    let mut case = None;
    let mut sc = Scratch::new(n);
    let term_lists: Vec<Vec<(Word, &Poly)>> = seq.iter().map(|e| e.terms().collect()).collect();
    let mut idx = vec![0usize; seq.len()];
    if term_lists.iter().any(Vec::is_empty) || seq.is_empty() {
        return Ok(OpResult { value: out, case: Case::Zero });
    }
    let mut words = Vec::with_capacity(seq.len());
    loop {
        words.clear();
        let mut coeff = Poly::one();
        for (k, &t) in idx.iter().enumerate() {
            let (w, c) = term_lists[k][t];
            words.push(lift(w).expect("kind checked"));
            coeff = &coeff * c;
        }
        let r = s.mu(&words, &mut sc);
        if let Some(m) = r.value {
            let c = &coeff * &Poly::from(Monomial::var_pow(alg.live_var(), m.v));
            out.add_term(m.w.into(), &c);
            case.get_or_insert(r.case);
        }
        // odometer over the term lists
        let mut k = idx.len();
        loop {
            if k == 0 {
                let case = if out.is_zero() { Case::Zero } else { case.unwrap_or(Case::Zero) };
                return Ok(OpResult { value: out, case });
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < term_lists[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// `μ_n` of the deformation A on elements of A₀.
pub fn mu_a(s: &StarA, seq: &[AlgElem]) -> Result<OpResult, Error> {
    expand(s, seq, |w| match w {
        Word::A(w) => Some(w),
        Word::B(_) => None,
    })
}

/// `μ_n` of the deformation B on elements of B₀.
pub fn mu_b(s: &StarB, seq: &[AlgElem]) -> Result<OpResult, Error> {
    expand(s, seq, |w| match w {
        Word::B(w) => Some(w),
        Word::A(_) => None,
    })
}

/// Enumerates chained tuples of non-idempotent basis words.
pub struct TupleSpace<'a, A: PathAlgebra> {
    alg: &'a A,
    /// `table[v][len]`: words with initial idempotent `v` and length `len`.
    table: Vec<Vec<Vec<A::Word>>>,
}

impl<'a, A: PathAlgebra> TupleSpace<'a, A> {
    pub fn new(alg: &'a A, max_len: u32) -> Self {
        let mut table = vec![Vec::new()];
        for v in alg.vertices() {
            table.push((0..=max_len).map(|l| if l == 0 { Vec::new() } else { alg.words_from(v, l) }).collect());
        }
        TupleSpace { alg, table }
    }

    fn max_len(&self) -> u32 {
        self.table[1].len() as u32 - 1
    }

    /// Chained prefixes of length `min(depth, n)` that can still be completed
    /// to `n` words with total length at most `max_len`.
    fn prefixes(&self, n: usize, max_len: u32, depth: usize) -> Vec<(Vec<A::Word>, u32)> {
        let depth = depth.min(n);
        let mut out = Vec::new();
        let mut cur = Vec::new();
        for v in self.alg.vertices() {
            self.grow(v, n, max_len, depth, &mut cur, 0, &mut |t, l| out.push((t.to_vec(), l)));
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn grow(
        &self,
        v: Vertex,
        n: usize,
        max_len: u32,
        stop: usize,
        cur: &mut Vec<A::Word>,
        used: u32,
        f: &mut dyn FnMut(&[A::Word], u32),
    ) {
        if cur.len() == stop {
            f(cur, used);
            return;
        }
        let slots_after = (n - cur.len() - 1) as u32;
        let Some(budget) = max_len.checked_sub(used + slots_after) else {
            return;
        };
        for len in 1..=budget.min(self.max_len()) {
            for &w in &self.table[v as usize][len as usize] {
                cur.push(w);
                self.grow(self.alg.final_(w), n, max_len, stop, cur, used + len, f);
                cur.pop();
            }
        }
    }

    /// Calls `f` on every chained `n`-tuple with total length `≤ max_len`.
    /// Work is split over short prefixes; outputs keep canonical order.
    pub fn map_tuples<R, F>(&self, exec: Exec, n: usize, max_len: u32, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(&[A::Word], &mut Vec<R>) + Sync + Send,
    {
        self.map_tuples_with(exec, n, max_len, || (), |_, t, out| f(t, out))
    }

    /// Like [`TupleSpace::map_tuples`], with per-task state built by `init`.
    pub fn map_tuples_with<St, R, I, F>(&self, exec: Exec, n: usize, max_len: u32, init: I, f: F) -> Vec<R>
    where
        St: Send,
        R: Send,
        I: Fn() -> St + Sync + Send,
        F: Fn(&mut St, &[A::Word], &mut Vec<R>) + Sync + Send,
    {
        self.fold_tuples(exec, n, max_len, || (init(), Vec::new()), |(st, out), t| f(st, t, out))
            .into_iter()
            .flat_map(|(_, out)| out)
            .collect()
    }

    /// Folds every chained `n`-tuple into one state per work item; states
    /// come back in canonical order.
    pub fn fold_tuples<St, I, F>(&self, exec: Exec, n: usize, max_len: u32, init: I, f: F) -> Vec<St>
    where
        St: Send,
        I: Fn() -> St + Sync + Send,
        F: Fn(&mut St, &[A::Word]) + Sync + Send,
    {
        let prefixes = self.prefixes(n, max_len, 2);
        exec.map(&prefixes, |(prefix, used)| {
            let mut st = init();
            let mut cur = prefix.clone();
            let v = self.alg.final_(*cur.last().expect("nonempty prefix"));
            self.grow(v, n, max_len, n, &mut cur, *used, &mut |t, _| f(&mut st, t));
            st
        })
    }

    pub fn count(&self, n: usize, max_len: u32) -> usize {
        let mut c = 0usize;
        let mut cur = Vec::new();
        for v in self.alg.vertices() {
            self.grow(v, n, max_len, n, &mut cur, 0, &mut |_, _| c += 1);
        }
        c
    }
}

/// A tuple on which the A∞-relation fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub arity: usize,
    pub inputs: Vec<String>,
    /// Surviving terms of the relation's left-hand side.
    pub lhs: Vec<String>,
}

/// Sweep report: violations plus the number of tuples examined.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub tuples: usize,
    pub arities: Vec<usize>,
    pub violations: Vec<Violation>,
    /// True if the sweep stopped early at the violation limit.
    pub truncated: bool,
}

fn render_mono<A: PathAlgebra>(alg: &A, m: Mono<A::Word>) -> String {
    let w = alg.render(m.w);
    match m.v {
        0 => w,
        1 => format!("V{}*{w}", alg.live_var()),
        v => format!("V{}^{v}*{w}", alg.live_var()),
    }
}

/// Whether some split `μ_{n−r+1} ∘ μ_r` of the arity-`n` relation has both
/// operations possibly nonzero.
pub fn relation_active<S: AInfinity>(s: &S, n: usize) -> bool {
    (2..n).any(|r| s.has_arity(r) && s.has_arity(n - r + 1))
}

/// Left-hand side of the arity-`a.len()` relation on `a`, with cancelled
/// terms removed.
pub fn relation_terms<S: AInfinity>(
    s: &S,
    a: &[WordOf<S>],
    sc: &mut Scratch,
    buf: &mut Vec<WordOf<S>>,
    terms: &mut Vec<Mono<WordOf<S>>>,
) {
    let n = a.len();
    terms.clear();
    for r in 2..n {
        let outer = n - r + 1;
        if !s.has_arity(r) || !s.has_arity(outer) {
            continue;
        }
        for k in 0..=n - r {
            let inner = s.mu(&a[k..k + r], sc);
            let Some(m1) = inner.value else { continue };
            buf.clear();
            buf.extend_from_slice(&a[..k]);
            buf.push(m1.w);
            buf.extend_from_slice(&a[k + r..]);
            if let Some(m2) = s.mu(buf, sc).value {
                terms.push(Mono { v: m1.v + m2.v, w: m2.w });
            }
        }
    }
    cancel_pairs(terms);
}

/// Reduces a list of monomials mod 2.
pub fn cancel_pairs<T: Ord + Copy>(terms: &mut Vec<T>) {
    terms.sort_unstable();
    let mut out = 0;
    let mut i = 0;
    while i < terms.len() {
        let mut j = i;
        while j < terms.len() && terms[j] == terms[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            terms[out] = terms[i];
            out += 1;
        }
        i = j;
    }
    terms.truncate(out);
}

/// Sweep configuration for [`check_ainfty`].
#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub max_arity: usize,
    pub max_total_len: u32,
    pub exec: Exec,
    /// Stop after this many violations (the report is then marked truncated).
    pub limit: Option<usize>,
}

impl SweepConfig {
    pub fn new(max_arity: usize, max_total_len: u32) -> Self {
        SweepConfig { max_arity, max_total_len, exec: Exec::default(), limit: None }
    }
}

/// Evaluates the A∞-relations on every chained tuple of augmentation-ideal
/// basis words with arity in `3..=max_arity` and total length
/// `≤ max_total_len`, returning every tuple with a nonzero left-hand side.
pub fn check_ainfty<S: AInfinity>(s: &S, cfg: SweepConfig) -> RelationReport {
    let alg = s.algebra();
    let space = TupleSpace::new(alg, cfg.max_total_len);
    let found = AtomicUsize::new(0);
    let mut report = RelationReport::default();
    for n in 3..=cfg.max_arity {
        if !relation_active(s, n) {
            continue;
        }
        report.arities.push(n);
        let init = || EvalState::new(alg.rank(), n);
        let states = space.fold_tuples(cfg.exec, n, cfg.max_total_len, init, |st, a| {
            if cfg.limit.is_some_and(|l| found.load(Ordering::Relaxed) >= l) {
                st.skipped = true;
                return;
            }
            eval_tuple(s, st, a, &found);
        });
        for st in states {
            report.tuples += st.tuples;
            report.truncated |= st.skipped;
            report.violations.extend(st.violations);
        }
        if cfg.limit.is_some_and(|l| report.violations.len() >= l) {
            report.truncated = true;
            break;
        }
    }
    report
}

struct EvalState<W> {
    sc: Scratch,
    buf: Vec<W>,
    terms: Vec<Mono<W>>,
    tuples: usize,
    skipped: bool,
    violations: Vec<Violation>,
}

impl<W> EvalState<W> {
    fn new(rank: usize, n: usize) -> Self {
        EvalState {
            sc: Scratch::new(rank),
            buf: Vec::with_capacity(n),
            terms: Vec::new(),
            tuples: 0,
            skipped: false,
            violations: Vec::new(),
        }
    }
}

fn eval_tuple<S: AInfinity>(s: &S, st: &mut EvalState<WordOf<S>>, a: &[WordOf<S>], found: &AtomicUsize) {
    let alg = s.algebra();
    st.tuples += 1;
    if a.len() >= 4 {
        // every term of the relation contains some μ_k with k ≥ 3
        st.sc.alex.fill(0);
        for &w in a {
            alg.add_alexander(w, &mut st.sc.alex);
        }
        if !s.higher_support(&st.sc.alex) {
            return;
        }
    }
    relation_terms(s, a, &mut st.sc, &mut st.buf, &mut st.terms);
    if st.terms.is_empty() {
        return;
    }
    found.fetch_add(1, Ordering::Relaxed);
    st.violations.push(Violation {
        arity: a.len(),
        inputs: a.iter().map(|&w| alg.render(w)).collect(),
        lhs: st.terms.iter().map(|&m| render_mono(alg, m)).collect(),
    });
}

/// Every nonzero `μ_n` (n in `2..=max_arity`, supported arities only) on
/// chained augmentation-ideal tuples with total length `≤ max_total_len`.
pub fn nonzero_ops<S: AInfinity>(
    s: &S,
    max_arity: usize,
    max_total_len: u32,
    exec: Exec,
) -> Vec<OpEntry<S>> {
    let alg = s.algebra();
    let space = TupleSpace::new(alg, max_total_len);
    let mut out = Vec::new();
    for n in 2..=max_arity {
        if !s.has_arity(n) {
            continue;
        }
        out.extend(space.map_tuples(exec, n, max_total_len, |a, out| {
            let mut sc = Scratch::new(alg.rank());
            let r = s.mu(a, &mut sc);
            if r.value.is_some() {
                out.push((a.to_vec(), r));
            }
        }));
    }
    out
}

/// A nonzero operation whose output violates the Maslov law
/// `m(μ_n(a)) = Σ m(a_i) + n − 2` or changes the Alexander grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingViolation {
    pub arity: usize,
    pub inputs: Vec<String>,
    pub output: String,
    pub reason: String,
}

/// Maslov and Alexander laws over all nonzero operations within bounds.
pub fn op_grading_check<S: AInfinity>(
    s: &S,
    max_arity: usize,
    max_total_len: u32,
    exec: Exec,
) -> Vec<GradingViolation> {
    let alg = s.algebra();
    let n = alg.rank();
    let var = var_grading(n, alg.live_var()).expect("live variable is graded");
    nonzero_ops(s, max_arity, max_total_len, exec)
        .into_iter()
        .filter_map(|(a, r)| {
            let m = r.value.expect("nonzero");
            let out = alg.grading(m.w).add(&var.scale(m.v as i64));
            let mut sum = crate::staralg::Grading::zero(n);
            for &w in &a {
                sum = sum.add(&alg.grading(w));
            }
            let expect_m = sum.m + a.len() as i64 - 2;
            let reason = if out.m != expect_m {
                format!("maslov {} != {}", out.m, expect_m)
            } else if out.alex != sum.alex {
                "alexander grading not preserved".to_string()
            } else {
                return None;
            };
            Some(GradingViolation {
                arity: a.len(),
                inputs: a.iter().map(|&w| alg.render(w)).collect(),
                output: render_mono(alg, m),
                reason,
            })
        })
        .collect()
}

/// Total length and Alexander grading of a tuple, plus whether it chains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceStats {
    pub total_len: u32,
    pub alexander: Vec<i64>,
    pub chained: bool,
}

pub fn sequence_stats<A: PathAlgebra>(alg: &A, ws: &[A::Word]) -> SequenceStats {
    let mut alexander = vec![0; 2 * alg.rank()];
    for &w in ws {
        alg.add_alexander(w, &mut alexander);
    }
    SequenceStats {
        total_len: ws.iter().map(|&w| alg.len(w)).sum(),
        alexander,
        chained: chained(alg, ws),
    }
}

/// Which algebra a dynamic request addresses.
pub fn deformation_kind(kind: AlgebraKind) -> &'static str {
    match kind {
        AlgebraKind::A0 => "A",
        AlgebraKind::B0 => "B",
    }
}
