//! The star algebras A₀ and B₀.
//!
//! Both are path algebras on the cyclic quiver with vertices `1..=N`.
//! A₀ has a loop `U_i` and an arrow `s_i: i → i+1` at each vertex; its
//! nonzero words are pure powers `U_i^n` and chains `s_i s_{i+1} ⋯`.
//! B₀ has a loop `ρ_i` and an arrow `σ_i: i → i+1`; its nonzero words
//! alternate ρ and σ. Multiplication in A₀ composes left to right, in B₀
//! right to left, so `ρ₂σ₁` means "σ₁ first, then ρ₂".
//!
//! Initial and final idempotents follow the algebra's own product:
//! `I_i x = x` iff `initial(x) = i` and `x I_j = x` iff `final(x) = j`.
//! For A₀ that is (path source, path target); for B₀ it is reversed.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ring::{Monomial, Poly};

/// Vertex index in `1..=N`.
pub type Vertex = u16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AlgebraKind {
    A0,
    B0,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::A0 => "A0",
            AlgebraKind::B0 => "B0",
        })
    }
}

/// Maslov, Alexander and length gradings. `alex[k]` is the coefficient of
/// `h_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grading {
    pub m: i64,
    pub alex: Vec<i64>,
    pub len: i64,
}

impl Grading {
    pub fn zero(n: usize) -> Self {
        Grading { m: 0, alex: vec![0; 2 * n], len: 0 }
    }

    pub fn add(&self, other: &Grading) -> Grading {
        Grading {
            m: self.m + other.m,
            alex: self.alex.iter().zip(&other.alex).map(|(a, b)| a + b).collect(),
            len: self.len + other.len,
        }
    }

    pub fn scale(&self, k: i64) -> Grading {
        Grading {
            m: self.m * k,
            alex: self.alex.iter().map(|a| a * k).collect(),
            len: self.len * k,
        }
    }
}

/// Index into the Alexander vector for `h_{2i-1}` (loops) and `h_{2i}` (arrows).
#[inline]
fn loop_coord(i: Vertex) -> usize {
    2 * (i as usize - 1)
}

#[inline]
fn arrow_coord(i: Vertex) -> usize {
    2 * (i as usize - 1) + 1
}

/// Grading of a coefficient variable, if it has one. `V₁..V_N` do not.
pub fn var_grading(n: usize, var: usize) -> Option<Grading> {
    if var == 0 {
        Some(Grading { m: 2 * n as i64 - 2, alex: vec![1; 2 * n], len: 2 * n as i64 })
    } else if var == n + 1 {
        let alex = (0..2 * n).map(|k| (k % 2) as i64).collect();
        Some(Grading { m: -2, alex, len: n as i64 })
    } else {
        None
    }
}

pub fn monomial_grading(n: usize, m: &Monomial) -> Option<Grading> {
    let mut g = Grading::zero(n);
    for (v, e) in m.iter() {
        g = g.add(&var_grading(n, v)?.scale(e as i64));
    }
    Some(g)
}

/// Kind of a basic B₀ letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    Rho,
    Sigma,
}

impl Letter {
    fn other(self) -> Letter {
        match self {
            Letter::Rho => Letter::Sigma,
            Letter::Sigma => Letter::Rho,
        }
    }
}

/// Canonical basis word of A₀.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AWord {
    Idem(Vertex),
    /// `U_i^n`, `n ≥ 1`.
    UPow { i: Vertex, n: u32 },
    /// `s_i s_{i+1} ⋯ s_{i+len-1}`, indices mod N.
    SChain { i: Vertex, len: u32 },
}

// length 0 means an idempotent, not an empty word
#[allow(clippy::len_without_is_empty)]
impl AWord {
    pub fn len(self) -> u32 {
        match self {
            AWord::Idem(_) => 0,
            AWord::UPow { n, .. } => n,
            AWord::SChain { len, .. } => len,
        }
    }

    fn key(self) -> (u32, u8, Vertex) {
        match self {
            AWord::Idem(i) => (0, 0, i),
            AWord::UPow { i, n } => (n, 1, i),
            AWord::SChain { i, len } => (len, 2, i),
        }
    }
}

impl Ord for AWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for AWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AWord::Idem(i) => write!(f, "I{i}"),
            AWord::UPow { i, n: 1 } => write!(f, "U{i}"),
            AWord::UPow { i, n } => write!(f, "U{i}^{n}"),
            AWord::SChain { i, len: 1 } => write!(f, "s{i}"),
            AWord::SChain { i, len } => write!(f, "s[{i},{}]", i as u32 + len),
        }
    }
}

/// Canonical basis word of B₀: an idempotent or an alternating chain,
/// stored by its path (first letter applied, its source vertex, length).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BWord {
    Idem(Vertex),
    Chain { src: Vertex, first: Letter, len: u32 },
}

// length 0 means an idempotent, not an empty word
#[allow(clippy::len_without_is_empty)]
impl BWord {
    pub fn len(self) -> u32 {
        match self {
            BWord::Idem(_) => 0,
            BWord::Chain { len, .. } => len,
        }
    }

    fn key(self) -> (u32, u8, Vertex, Letter) {
        match self {
            BWord::Idem(i) => (0, 0, i, Letter::Rho),
            BWord::Chain { src, first, len } => (len, 2, src, first),
        }
    }
}

impl Ord for BWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for BWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Operations shared by A₀ and B₀ on basis words. Products return `None`
/// for zero; all words are homogeneous.
pub trait PathAlgebra: Sync + Send {
    type Word: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn kind(&self) -> AlgebraKind;
    fn rank(&self) -> usize;
    /// Index of the coefficient variable that acts freely (the other annihilates).
    fn live_var(&self) -> usize;
    fn idem(&self, i: Vertex) -> Self::Word;
    fn is_idem(&self, w: Self::Word) -> bool;
    fn len(&self, w: Self::Word) -> u32;
    fn initial(&self, w: Self::Word) -> Vertex;
    fn final_(&self, w: Self::Word) -> Vertex;
    fn mul(&self, x: Self::Word, y: Self::Word) -> Option<Self::Word>;
    /// All `(x, y)` with `x·y = w` and neither factor an idempotent.
    fn factorizations(&self, w: Self::Word) -> Vec<(Self::Word, Self::Word)>;
    /// Basis words with initial idempotent `v` and length `len`.
    fn words_from(&self, v: Vertex, len: u32) -> Vec<Self::Word>;
    /// Basic letters whose product, in written order, is `w`.
    fn letters(&self, w: Self::Word) -> Vec<Self::Word>;
    /// Adds the Alexander grading of `w` into `acc` (length `2N`).
    fn add_alexander(&self, w: Self::Word, acc: &mut [i64]);
    fn maslov(&self, w: Self::Word) -> i64;
    fn render(&self, w: Self::Word) -> String;

    fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.rank() as Vertex
    }

    fn grading(&self, w: Self::Word) -> Grading {
        let mut g = Grading::zero(self.rank());
        self.add_alexander(w, &mut g.alex);
        g.m = self.maslov(w);
        g.len = self.len(w) as i64;
        g
    }

    /// Basis words of length exactly `len`, canonically ordered.
    fn words_of_len(&self, len: u32) -> Vec<Self::Word> {
        let mut out: Vec<_> = self.vertices().flat_map(|v| self.words_from(v, len)).collect();
        out.sort();
        out
    }

    /// All basis words with `ℓ ≤ max_len`, canonically ordered.
    fn enumerate_basis(&self, max_len: u32) -> Vec<Self::Word> {
        (0..=max_len).flat_map(|l| self.words_of_len(l)).collect()
    }

    fn is_basic(&self, w: Self::Word) -> bool {
        self.len(w) == 1
    }
}

#[inline]
fn step(n: usize, i: Vertex, k: u32) -> Vertex {
    ((i as u32 - 1 + k) % n as u32) as Vertex + 1
}

#[inline]
fn step_back(n: usize, i: Vertex, k: u32) -> Vertex {
    let n = n as u32;
    ((i as u32 - 1 + n - k % n) % n) as Vertex + 1
}

/// The algebra A₀ for a fixed `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct A0 {
    n: usize,
}

impl A0 {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::InvalidN(n));
        }
        Ok(A0 { n })
    }

    pub fn u(&self, i: Vertex) -> AWord {
        AWord::UPow { i, n: 1 }
    }

    pub fn s(&self, i: Vertex) -> AWord {
        AWord::SChain { i, len: 1 }
    }

    /// `U_{N+1} = Σ_i s_{ii}`, the sum of the full s-cycles.
    pub fn u_top(&self) -> Vec<AWord> {
        self.vertices().map(|i| AWord::SChain { i, len: self.n as u32 }).collect()
    }

    pub fn parse_word(&self, s: &str) -> Result<AWord, Error> {
        let bad = || Error::Parse(format!("bad A0 word {s:?}"));
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        let vertex = |t: &str| -> Result<Vertex, Error> {
            let i = num(t)?;
            if i == 0 || i as usize > self.n {
                return Err(bad());
            }
            Ok(i as Vertex)
        };
        let s = s.trim();
        let w = if let Some(r) = s.strip_prefix('I') {
            AWord::Idem(vertex(r)?)
        } else if let Some(r) = s.strip_prefix('U') {
            match r.split_once('^') {
                Some((i, e)) => AWord::UPow { i: vertex(i)?, n: num(e)? },
                None => AWord::UPow { i: vertex(r)?, n: 1 },
            }
        } else if let Some(r) = s.strip_prefix("s[") {
            let (i, j) = r.strip_suffix(']').and_then(|r| r.split_once(',')).ok_or_else(bad)?;
            let i = vertex(i)?;
            let j = num(j)?;
            if j <= i as u32 {
                return Err(bad());
            }
            AWord::SChain { i, len: j - i as u32 }
        } else if let Some(r) = s.strip_prefix('s') {
            AWord::SChain { i: vertex(r)?, len: 1 }
        } else {
            return Err(bad());
        };
        if w.len() == 0 && !matches!(w, AWord::Idem(_)) {
            return Err(bad());
        }
        Ok(w)
    }
}

impl PathAlgebra for A0 {
    type Word = AWord;

    fn kind(&self) -> AlgebraKind {
        AlgebraKind::A0
    }

    fn rank(&self) -> usize {
        self.n
    }

    fn live_var(&self) -> usize {
        0
    }

    fn idem(&self, i: Vertex) -> AWord {
        AWord::Idem(i)
    }

    fn is_idem(&self, w: AWord) -> bool {
        matches!(w, AWord::Idem(_))
    }

    fn len(&self, w: AWord) -> u32 {
        w.len()
    }

    fn initial(&self, w: AWord) -> Vertex {
        match w {
            AWord::Idem(i) | AWord::UPow { i, .. } | AWord::SChain { i, .. } => i,
        }
    }

    fn final_(&self, w: AWord) -> Vertex {
        match w {
            AWord::Idem(i) | AWord::UPow { i, .. } => i,
            AWord::SChain { i, len } => step(self.n, i, len),
        }
    }

    fn mul(&self, x: AWord, y: AWord) -> Option<AWord> {
        match (x, y) {
            (AWord::Idem(i), _) => (self.initial(y) == i).then_some(y),
            (_, AWord::Idem(j)) => (self.final_(x) == j).then_some(x),
            (AWord::UPow { i, n: a }, AWord::UPow { i: j, n: b }) => {
                (i == j).then_some(AWord::UPow { i, n: a + b })
            }
            (AWord::SChain { i, len: a }, AWord::SChain { i: j, len: b }) => {
                (step(self.n, i, a) == j).then_some(AWord::SChain { i, len: a + b })
            }
            _ => None,
        }
    }

    fn factorizations(&self, w: AWord) -> Vec<(AWord, AWord)> {
        match w {
            AWord::Idem(_) => Vec::new(),
            AWord::UPow { i, n } => {
                (1..n).map(|a| (AWord::UPow { i, n: a }, AWord::UPow { i, n: n - a })).collect()
            }
            AWord::SChain { i, len } => (1..len)
                .map(|a| {
                    (AWord::SChain { i, len: a }, AWord::SChain { i: step(self.n, i, a), len: len - a })
                })
                .collect(),
        }
    }

    fn words_from(&self, v: Vertex, len: u32) -> Vec<AWord> {
        if len == 0 {
            vec![AWord::Idem(v)]
        } else {
            vec![AWord::UPow { i: v, n: len }, AWord::SChain { i: v, len }]
        }
    }

    fn letters(&self, w: AWord) -> Vec<AWord> {
        match w {
            AWord::Idem(_) => Vec::new(),
            AWord::UPow { i, n } => vec![self.u(i); n as usize],
            AWord::SChain { i, len } => (0..len).map(|k| self.s(step(self.n, i, k))).collect(),
        }
    }

    fn add_alexander(&self, w: AWord, acc: &mut [i64]) {
        match w {
            AWord::Idem(_) => {}
            AWord::UPow { i, n } => acc[loop_coord(i)] += n as i64,
            AWord::SChain { i, len } => add_arrow_run(self.n, i, len, acc),
        }
    }

    fn maslov(&self, _w: AWord) -> i64 {
        0
    }

    fn render(&self, w: AWord) -> String {
        w.to_string()
    }
}

/// Adds `h_{2k}` for the `len` consecutive arrows starting at `i`.
fn add_arrow_run(n: usize, i: Vertex, len: u32, acc: &mut [i64]) {
    let full = (len / n as u32) as i64;
    if full > 0 {
        for v in 1..=n as Vertex {
            acc[arrow_coord(v)] += full;
        }
    }
    for k in 0..len % n as u32 {
        acc[arrow_coord(step(n, i, k))] += 1;
    }
}

/// The algebra B₀ for a fixed `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct B0 {
    n: usize,
}

impl B0 {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::InvalidN(n));
        }
        Ok(B0 { n })
    }

    pub fn rho(&self, i: Vertex) -> BWord {
        BWord::Chain { src: i, first: Letter::Rho, len: 1 }
    }

    pub fn sigma(&self, i: Vertex) -> BWord {
        BWord::Chain { src: i, first: Letter::Sigma, len: 1 }
    }

    /// `U₀`: the `2N` alternating cycles of length `2N`.
    pub fn u_zero(&self) -> Vec<BWord> {
        let mut out: Vec<_> = self
            .vertices()
            .flat_map(|src| {
                [Letter::Rho, Letter::Sigma]
                    .map(|first| BWord::Chain { src, first, len: 2 * self.n as u32 })
            })
            .collect();
        out.sort();
        out
    }

    fn sigma_count(first: Letter, len: u32) -> u32 {
        match first {
            Letter::Sigma => len.div_ceil(2),
            Letter::Rho => len / 2,
        }
    }

    /// Path source and target (σ_i runs from `i` to `i+1`).
    pub fn path_endpoints(&self, w: BWord) -> (Vertex, Vertex) {
        match w {
            BWord::Idem(i) => (i, i),
            BWord::Chain { src, first, len } => (src, step(self.n, src, Self::sigma_count(first, len))),
        }
    }

    fn last_letter(first: Letter, len: u32) -> Letter {
        if len % 2 == 1 {
            first
        } else {
            first.other()
        }
    }

    /// Path-order letters as `(kind, index)`.
    pub fn path_letters(&self, w: BWord) -> Vec<(Letter, Vertex)> {
        let BWord::Chain { src, first, len } = w else {
            return Vec::new();
        };
        let mut out = Vec::with_capacity(len as usize);
        let (mut v, mut kind) = (src, first);
        for _ in 0..len {
            out.push((kind, v));
            if kind == Letter::Sigma {
                v = step(self.n, v, 1);
            }
            kind = kind.other();
        }
        out
    }

    /// Builds a word from letters in written order (`[ρ₂, σ₁]` is `ρ₂σ₁`).
    pub fn from_written(&self, letters: &[(Letter, Vertex)]) -> Option<BWord> {
        let mut acc: Option<BWord> = None;
        for &(kind, i) in letters.iter().rev() {
            let l = BWord::Chain { src: i, first: kind, len: 1 };
            acc = Some(match acc {
                None => l,
                Some(a) => self.mul(l, a)?,
            });
        }
        acc
    }

    pub fn parse_word(&self, s: &str) -> Result<BWord, Error> {
        let bad = || Error::Parse(format!("bad B0 word {s:?}"));
        let vertex = |t: &str| -> Result<Vertex, Error> {
            let i = t.parse::<u32>().map_err(|_| bad())?;
            if i == 0 || i as usize > self.n {
                return Err(bad());
            }
            Ok(i as Vertex)
        };
        let s = s.trim();
        if let Some(r) = s.strip_prefix('I') {
            return Ok(BWord::Idem(vertex(r)?));
        }
        let mut letters = Vec::new();
        for t in s.split('.') {
            if let Some(r) = t.strip_prefix('r') {
                letters.push((Letter::Rho, vertex(r)?));
            } else if let Some(r) = t.strip_prefix('s') {
                letters.push((Letter::Sigma, vertex(r)?));
            } else {
                return Err(bad());
            }
        }
        self.from_written(&letters).ok_or_else(bad)
    }

    fn letter_name(kind: Letter, i: Vertex) -> String {
        match kind {
            Letter::Rho => format!("r{i}"),
            Letter::Sigma => format!("s{i}"),
        }
    }
}

impl PathAlgebra for B0 {
    type Word = BWord;

    fn kind(&self) -> AlgebraKind {
        AlgebraKind::B0
    }

    fn rank(&self) -> usize {
        self.n
    }

    fn live_var(&self) -> usize {
        self.n + 1
    }

    fn idem(&self, i: Vertex) -> BWord {
        BWord::Idem(i)
    }

    fn is_idem(&self, w: BWord) -> bool {
        matches!(w, BWord::Idem(_))
    }

    fn len(&self, w: BWord) -> u32 {
        w.len()
    }

    fn initial(&self, w: BWord) -> Vertex {
        self.path_endpoints(w).1
    }

    fn final_(&self, w: BWord) -> Vertex {
        self.path_endpoints(w).0
    }

    fn mul(&self, x: BWord, y: BWord) -> Option<BWord> {
        match (x, y) {
            (BWord::Idem(i), _) => (self.initial(y) == i).then_some(y),
            (_, BWord::Idem(j)) => (self.final_(x) == j).then_some(x),
            (
                BWord::Chain { src: xs, first: xf, len: xl },
                BWord::Chain { src: ys, first: yf, len: yl },
            ) => {
                // y is applied first, so its path must end where x's starts.
                let (_, y_tgt) = self.path_endpoints(y);
                (y_tgt == xs && Self::last_letter(yf, yl) != xf)
                    .then_some(BWord::Chain { src: ys, first: yf, len: xl + yl })
            }
        }
    }

    fn factorizations(&self, w: BWord) -> Vec<(BWord, BWord)> {
        let BWord::Chain { src, first, len } = w else {
            return Vec::new();
        };
        (1..len)
            .map(|a| {
                let y = BWord::Chain { src, first, len: a };
                let x_first = if a % 2 == 0 { first } else { first.other() };
                let x = BWord::Chain { src: self.path_endpoints(y).1, first: x_first, len: len - a };
                (x, y)
            })
            .collect()
    }

    fn words_from(&self, v: Vertex, len: u32) -> Vec<BWord> {
        if len == 0 {
            return vec![BWord::Idem(v)];
        }
        [Letter::Rho, Letter::Sigma]
            .map(|first| BWord::Chain {
                src: step_back(self.n, v, Self::sigma_count(first, len)),
                first,
                len,
            })
            .to_vec()
    }

    fn letters(&self, w: BWord) -> Vec<BWord> {
        self.path_letters(w)
            .into_iter()
            .rev()
            .map(|(first, src)| BWord::Chain { src, first, len: 1 })
            .collect()
    }

    fn add_alexander(&self, w: BWord, acc: &mut [i64]) {
        let BWord::Chain { src, first, len } = w else {
            return;
        };
        let sigmas = Self::sigma_count(first, len);
        let rhos = len - sigmas;
        add_arrow_run(self.n, src, sigmas, acc);
        // the k-th ρ sits at src+k, shifted by one if the path opens with σ
        let full = (rhos / self.n as u32) as i64;
        if full > 0 {
            for v in self.vertices() {
                acc[loop_coord(v)] += full;
            }
        }
        let skip = u32::from(first == Letter::Sigma);
        for k in 0..rhos % self.n as u32 {
            acc[loop_coord(step(self.n, src, k + skip))] += 1;
        }
    }

    fn maslov(&self, w: BWord) -> i64 {
        -(w.len() as i64)
    }

    fn render(&self, w: BWord) -> String {
        match w {
            BWord::Idem(i) => format!("I{i}"),
            BWord::Chain { .. } => self
                .path_letters(w)
                .into_iter()
                .rev()
                .map(|(k, i)| Self::letter_name(k, i))
                .collect::<Vec<_>>()
                .join("."),
        }
    }
}

/// A basis word of either algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Word {
    A(AWord),
    B(BWord),
}

impl Word {
    pub fn kind(self) -> AlgebraKind {
        match self {
            Word::A(_) => AlgebraKind::A0,
            Word::B(_) => AlgebraKind::B0,
        }
    }
}

impl From<AWord> for Word {
    fn from(w: AWord) -> Word {
        Word::A(w)
    }
}

impl From<BWord> for Word {
    fn from(w: BWord) -> Word {
        Word::B(w)
    }
}

/// Either algebra, selected at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarAlg {
    A(A0),
    B(B0),
}

impl StarAlg {
    pub fn new(kind: AlgebraKind, n: usize) -> Result<Self, Error> {
        Ok(match kind {
            AlgebraKind::A0 => StarAlg::A(A0::new(n)?),
            AlgebraKind::B0 => StarAlg::B(B0::new(n)?),
        })
    }

    pub fn kind(&self) -> AlgebraKind {
        match self {
            StarAlg::A(_) => AlgebraKind::A0,
            StarAlg::B(_) => AlgebraKind::B0,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            StarAlg::A(a) => a.rank(),
            StarAlg::B(b) => b.rank(),
        }
    }

    pub fn render(&self, w: Word) -> String {
        match (self, w) {
            (StarAlg::A(a), Word::A(w)) => a.render(w),
            (StarAlg::B(b), Word::B(w)) => b.render(w),
            (_, Word::A(w)) => w.to_string(),
            (StarAlg::A(a), Word::B(w)) => B0 { n: a.rank() }.render(w),
        }
    }

    pub fn parse_word(&self, s: &str) -> Result<Word, Error> {
        match self {
            StarAlg::A(a) => a.parse_word(s).map(Word::A),
            StarAlg::B(b) => b.parse_word(s).map(Word::B),
        }
    }

    pub fn grading(&self, w: Word) -> Result<Grading, Error> {
        match (self, w) {
            (StarAlg::A(a), Word::A(w)) => Ok(a.grading(w)),
            (StarAlg::B(b), Word::B(w)) => Ok(b.grading(w)),
            _ => Err(Error::AlgebraMismatch { left: self.kind(), right: w.kind() }),
        }
    }

    /// `(initial, final)`; an idempotent reports its own index twice.
    pub fn idempotents(&self, w: Word) -> Result<(Vertex, Vertex), Error> {
        match (self, w) {
            (StarAlg::A(a), Word::A(w)) => Ok((a.initial(w), a.final_(w))),
            (StarAlg::B(b), Word::B(w)) => Ok((b.initial(w), b.final_(w))),
            _ => Err(Error::AlgebraMismatch { left: self.kind(), right: w.kind() }),
        }
    }

    pub fn enumerate_basis(&self, max_len: u32) -> Vec<Word> {
        match self {
            StarAlg::A(a) => a.enumerate_basis(max_len).into_iter().map(Word::A).collect(),
            StarAlg::B(b) => b.enumerate_basis(max_len).into_iter().map(Word::B).collect(),
        }
    }

    /// `U_{N+1}` in A₀ or `U₀` in B₀.
    pub fn special_element(&self, name: &str) -> Result<AlgElem, Error> {
        let n = self.rank();
        match (self, name) {
            (StarAlg::A(a), "U_{N+1}" | "UN1" | "Utop") => {
                Ok(AlgElem::from_words(AlgebraKind::A0, n, a.u_top().into_iter().map(Word::A)))
            }
            (StarAlg::A(a), s) if s == format!("U{}", n + 1) => {
                Ok(AlgElem::from_words(AlgebraKind::A0, n, a.u_top().into_iter().map(Word::A)))
            }
            (StarAlg::B(b), "U0" | "U_0") => {
                Ok(AlgElem::from_words(AlgebraKind::B0, n, b.u_zero().into_iter().map(Word::B)))
            }
            _ => Err(Error::UnknownSpecial(name.to_string())),
        }
    }

    /// Product of two elements in this algebra.
    pub fn mul(&self, x: &AlgElem, y: &AlgElem) -> Result<AlgElem, Error> {
        for e in [x, y] {
            if e.kind != self.kind() {
                return Err(Error::AlgebraMismatch { left: self.kind(), right: e.kind });
            }
            if e.n != self.rank() {
                return Err(Error::RankMismatch { left: self.rank(), right: e.n });
            }
        }
        let mut out = AlgElem::zero(self.kind(), self.rank());
        for (&wx, cx) in &x.terms {
            for (&wy, cy) in &y.terms {
                let w = match (self, wx, wy) {
                    (StarAlg::A(a), Word::A(p), Word::A(q)) => a.mul(p, q).map(Word::A),
                    (StarAlg::B(b), Word::B(p), Word::B(q)) => b.mul(p, q).map(Word::B),
                    _ => return Err(Error::AlgebraMismatch { left: wx.kind(), right: wy.kind() }),
                };
                if let Some(w) = w {
                    out.add_term(w, &(cx * cy));
                }
            }
        }
        Ok(out)
    }
}

/// Finite combination of basis words of one algebra with coefficients in
/// `F₂[V₀, V_{N+1}]`. Coefficients in the annihilating variable are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgElem {
    kind: AlgebraKind,
    n: usize,
    terms: BTreeMap<Word, Poly>,
}

impl AlgElem {
    pub fn zero(kind: AlgebraKind, n: usize) -> Self {
        AlgElem { kind, n, terms: BTreeMap::new() }
    }

    pub fn from_word(kind: AlgebraKind, n: usize, w: Word) -> Self {
        Self::from_words(kind, n, [w])
    }

    pub fn from_words(kind: AlgebraKind, n: usize, ws: impl IntoIterator<Item = Word>) -> Self {
        let mut e = Self::zero(kind, n);
        for w in ws {
            e.add_term(w, &Poly::one());
        }
        e
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Word, &Poly)> {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn coefficient(&self, w: Word) -> Poly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    fn live_var(&self) -> usize {
        match self.kind {
            AlgebraKind::A0 => 0,
            AlgebraKind::B0 => self.n + 1,
        }
    }

    /// Adds `coeff · w`, applying the annihilation rule.
    pub fn add_term(&mut self, w: Word, coeff: &Poly) {
        let live = self.live_var();
        let mut c = coeff.clone();
        c.retain(|m| m.uses_only(|v| v == live));
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_default();
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &AlgElem) -> Result<AlgElem, Error> {
        if self.kind != other.kind {
            return Err(Error::AlgebraMismatch { left: self.kind, right: other.kind });
        }
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn scale(&self, p: &Poly) -> AlgElem {
        let mut out = AlgElem::zero(self.kind, self.n);
        for (w, c) in self.terms() {
            out.add_term(w, &(c * p));
        }
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let alg = StarAlg::new(self.kind, self.n).expect("valid rank");
        self.terms
            .iter()
            .map(|(&w, c)| {
                let w = alg.render(w);
                if c.is_one() {
                    w
                } else if c.len() == 1 {
                    format!("{c}*{w}")
                } else {
                    format!("({c})*{w}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElemJson {
    algebra: AlgebraKind,
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for AlgElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let alg = StarAlg::new(self.kind, self.n).map_err(serde::ser::Error::custom)?;
        ElemJson {
            algebra: self.kind,
            n: self.n,
            terms: self
                .terms()
                .map(|(w, c)| TermJson { word: alg.render(w), coeff: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = ElemJson::deserialize(d)?;
        let alg = StarAlg::new(j.algebra, j.n).map_err(D::Error::custom)?;
        let mut e = AlgElem::zero(j.algebra, j.n);
        for t in j.terms {
            let w = alg.parse_word(&t.word).map_err(D::Error::custom)?;
            let c: Poly = t.coeff.parse().map_err(D::Error::custom)?;
            e.add_term(w, &c);
        }
        Ok(e)
    }
}
