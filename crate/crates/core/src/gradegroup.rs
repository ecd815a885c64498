//! The grading group `G = Z × F_{N+1}` (central integer times a free group
//! on `g₀..g_N`), the group-valued gradings of A and B, and the arity
//! obstructions they imply.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ainfty::{nonzero_ops, AInfinity, WordOf};
use crate::error::Error;
use crate::exec::Exec;
use crate::staralg::{AWord, AlgebraKind, BWord, Letter, PathAlgebra, A0, B0};

/// `g_gen` or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub gen: u16,
    pub inverse: bool,
}

impl Gen {
    pub fn new(gen: u16) -> Self {
        Gen { gen, inverse: false }
    }

    pub fn inv(self) -> Self {
        Gen { inverse: !self.inverse, ..self }
    }
}

/// `(z, w)` with `w` a freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElem {
    pub z: i64,
    word: Vec<Gen>,
}

/// Appends `g` to a reduced word, cancelling against the last letter.
fn push_reduced(word: &mut Vec<Gen>, g: Gen) {
    if word.last() == Some(&g.inv()) {
        word.pop();
    } else {
        word.push(g);
    }
}

/// Free reduction of an arbitrary word.
pub fn reduce(word: &[Gen]) -> Vec<Gen> {
    let mut out = Vec::with_capacity(word.len());
    for &g in word {
        push_reduced(&mut out, g);
    }
    out
}

impl GroupElem {
    pub fn identity() -> Self {
        Self::default()
    }

    /// The central element `λ = (1, e)`.
    pub fn lambda() -> Self {
        GroupElem { z: 1, word: Vec::new() }
    }

    pub fn central(z: i64) -> Self {
        GroupElem { z, word: Vec::new() }
    }

    pub fn new(z: i64, word: &[Gen]) -> Self {
        GroupElem { z, word: reduce(word) }
    }

    pub fn gen(z: i64, gen: u16) -> Self {
        GroupElem { z, word: vec![Gen::new(gen)] }
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.z == 0 && self.word.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GroupElem { z: -self.z, word: self.word.iter().rev().map(|g| g.inv()).collect() }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(), |acc, _| gp_mul(&acc, &base))
    }

    pub fn render_word(&self) -> String {
        if self.word.is_empty() {
            return "e".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.word.len() {
            let g = self.word[i];
            let run = self.word[i..].iter().take_while(|&&h| h == g).count();
            let exp = if g.inverse { -(run as i64) } else { run as i64 };
            parts.push(if exp == 1 { format!("g{}", g.gen) } else { format!("g{}^{exp}", g.gen) });
            i += run;
        }
        parts.join(".")
    }
}

pub fn gp_mul(x: &GroupElem, y: &GroupElem) -> GroupElem {
    let mut word = x.word.clone();
    for &g in &y.word {
        push_reduced(&mut word, g);
    }
    GroupElem { z: x.z + y.z, word }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.z, self.render_word())
    }
}

/// Parses the word part as rendered (`e`, `g1.g2^-1`, `g3^2`).
pub fn parse_word(s: &str) -> Result<Vec<Gen>, Error> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for part in s.split('.') {
        let body = part.strip_prefix('g').ok_or_else(|| Error::Parse(format!("bad generator `{part}`")))?;
        let (gen, exp) = match body.split_once('^') {
            Some((g, e)) => (g, e.parse::<i64>().map_err(|e| Error::Parse(format!("`{part}`: {e}")))?),
            None => (body, 1),
        };
        let gen = gen.parse::<u16>().map_err(|e| Error::Parse(format!("`{part}`: {e}")))?;
        for _ in 0..exp.unsigned_abs() {
            out.push(Gen { gen, inverse: exp < 0 });
        }
    }
    Ok(reduce(&out))
}

#[derive(Serialize, Deserialize)]
struct GroupElemJson {
    z: i64,
    word: String,
}

impl Serialize for GroupElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GroupElemJson { z: self.z, word: self.render_word() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = GroupElemJson::deserialize(d)?;
        let word = parse_word(&j.word).map_err(serde::de::Error::custom)?;
        Ok(GroupElem { z: j.z, word })
    }
}

impl FromStr for GroupElem {
    type Err = Error;

    /// `(z, word)`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected `(z, word)`, got `{s}`")))?;
        let (z, w) = inner.split_once(',').ok_or_else(|| Error::Parse(s.to_string()))?;
        let z = z.trim().parse().map_err(|e| Error::Parse(format!("`{z}`: {e}")))?;
        Ok(GroupElem { z, word: parse_word(w)? })
    }
}

/// Group-valued grading on basis words and on the live coefficient variable.
pub trait GroupGraded: PathAlgebra {
    fn gr_word(&self, w: Self::Word) -> GroupElem;
    fn gr_var(&self) -> GroupElem;
}

impl GroupGraded for B0 {
    /// `gr(ρ_i) = (−1, g_i)`, `gr(σ_i) = (−1, e)`, multiplied over the
    /// letters in written order.
    fn gr_word(&self, w: BWord) -> GroupElem {
        self.letters(w)
            .into_iter()
            .map(|l| match l {
                BWord::Chain { src, first: Letter::Rho, .. } => GroupElem::gen(-1, src),
                _ => GroupElem::central(-1),
            })
            .fold(GroupElem::identity(), |acc, g| gp_mul(&acc, &g))
    }

    fn gr_var(&self) -> GroupElem {
        GroupElem::central(-2)
    }
}

impl GroupGraded for A0 {
    /// A-side words carry the trivial grading.
    fn gr_word(&self, _w: AWord) -> GroupElem {
        GroupElem::identity()
    }

    fn gr_var(&self) -> GroupElem {
        GroupElem::central(2 * self.rank() as i64 - 2)
    }
}

/// Grading of a B₀ word (the assignment used by the B side).
pub fn assign_grading(b: &B0, w: BWord) -> GroupElem {
    b.gr_word(w)
}

/// A nonzero operation with `gr(μ_n(a)) ≠ λ^{n−2} Π gr(a_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultViolation {
    pub arity: usize,
    pub inputs: Vec<String>,
    pub output: String,
    pub expected: GroupElem,
    pub got: GroupElem,
}

/// Checks `gr(μ_n(a₁..a_n)) = λ^{n−2}·gr(a₁)⋯gr(a_n)` on every nonzero
/// operation within bounds.
pub fn check_multiplicativity<S>(s: &S, max_arity: usize, max_total_len: u32, exec: Exec) -> Vec<MultViolation>
where
    S: AInfinity,
    S::Alg: GroupGraded,
{
    let alg = s.algebra();
    nonzero_ops(s, max_arity, max_total_len, exec)
        .into_iter()
        .filter_map(|(a, r)| {
            let m = r.value.expect("nonzero");
            let got = gp_mul(&alg.gr_var().pow(m.v as i64), &alg.gr_word(m.w));
            let expected = a
                .iter()
                .fold(GroupElem::lambda().pow(a.len() as i64 - 2), |acc, &w| gp_mul(&acc, &alg.gr_word(w)));
            (got != expected).then(|| MultViolation {
                arity: a.len(),
                inputs: a.iter().map(|&w: &WordOf<S>| alg.render(w)).collect(),
                output: if m.v == 0 { alg.render(m.w) } else { format!("V^{}*{}", m.v, alg.render(m.w)) },
                expected,
                got,
            })
        })
        .collect()
}

/// Arities `n` in `lo..=hi` at which a nonzero higher operation is not
/// ruled out by the grading: `n = j(N−2)+2` on the B side, `n = k(2N−2)+2`
/// on the A side, with `j, k ≥ 1`.
pub fn admissible_arities(side: AlgebraKind, n: usize, lo: usize, hi: usize) -> Result<Vec<usize>, Error> {
    if n < 3 {
        return Err(Error::InvalidN(n));
    }
    let step = match side {
        AlgebraKind::A0 => 2 * n - 2,
        AlgebraKind::B0 => n - 2,
    };
    Ok((lo.max(3)..=hi).filter(|&a| a >= step + 2 && (a - 2) % step == 0).collect())
}
