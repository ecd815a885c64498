//! Polynomial coefficients over F₂.
//!
//! The ground ring is `F₂[V₀, V_{N+1}]`; the twisted Hochschild model also
//! uses the extended ring `F₂[V₀, …, V_{N+1}]`. A [`Poly`] is a set of
//! monomials, so addition is symmetric difference.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Product of variables `V_i^{e_i}` with all stored exponents nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    exps: BTreeMap<usize, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// `V_var^exp`; `exp == 0` gives the unit.
    pub fn var_pow(var: usize, exp: u32) -> Self {
        let mut exps = BTreeMap::new();
        if exp > 0 {
            exps.insert(var, exp);
        }
        Self { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps.get(&var).copied().unwrap_or(0)
    }

    /// `(variable, exponent)` pairs in ascending variable order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// True if every occurring variable satisfies `allowed`.
    pub fn uses_only(&self, allowed: impl Fn(usize) -> bool) -> bool {
        self.exps.keys().all(|&v| allowed(v))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (&v, &e) in &self.exps {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "V{v}")?;
            } else {
                write!(f, "V{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut m = Monomial::one();
        for factor in s.split('*') {
            let bad = || Error::Parse(format!("bad monomial factor {factor:?}"));
            let rest = factor.trim().strip_prefix('V').ok_or_else(bad)?;
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let var = var.parse::<usize>().map_err(|_| bad())?;
            m = m.mul(&Monomial::var_pow(var, exp));
        }
        Ok(m)
    }
}

/// Finite F₂-combination of monomials. The empty set is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Poly {
    monomials: BTreeSet<Monomial>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(Monomial::one())
    }

    pub fn var(var: usize) -> Self {
        Self::from(Monomial::var_pow(var, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.monomials.len() == 1 && self.monomials.iter().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.contains(m)
    }

    /// Adds a single monomial (toggles membership).
    pub fn add_monomial(&mut self, m: Monomial) {
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
    }

    /// Drops every monomial rejected by `keep`.
    pub fn retain(&mut self, keep: impl Fn(&Monomial) -> bool) {
        self.monomials.retain(|m| keep(m));
    }
}

impl From<Monomial> for Poly {
    fn from(m: Monomial) -> Self {
        let mut monomials = BTreeSet::new();
        monomials.insert(m);
        Poly { monomials }
    }
}

impl FromIterator<Monomial> for Poly {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut p = Poly::zero();
        for m in iter {
            p.add_monomial(m);
        }
        p
    }
}

pub fn poly_add(p: &Poly, q: &Poly) -> Poly {
    Poly {
        monomials: p.monomials.symmetric_difference(&q.monomials).cloned().collect(),
    }
}

pub fn poly_mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = Poly::zero();
    for a in &p.monomials {
        for b in &q.monomials {
            out.add_monomial(a.mul(b));
        }
    }
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        poly_add(self, rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        poly_mul(self, rhs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<String> = self.monomials.iter().map(|m| m.to_string()).collect();
        terms.sort();
        f.write_str(&terms.join("+"))
    }
}

impl std::str::FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Poly::zero());
        }
        s.split('+').map(str::parse::<Monomial>).collect()
    }
}

/// Which variables a coefficient ring admits for a given `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VarSet {
    /// `F₂[V₀, V_{N+1}]`
    Ground { n: usize },
    /// `F₂[V₀, …, V_{N+1}]`
    Extended { n: usize },
}

impl VarSet {
    pub fn contains(self, var: usize) -> bool {
        match self {
            VarSet::Ground { n } => var == 0 || var == n + 1,
            VarSet::Extended { n } => var <= n + 1,
        }
    }

    pub fn check(self, p: &Poly) -> Result<(), Error> {
        for m in p.monomials() {
            for (v, _) in m.iter() {
                if !self.contains(v) {
                    return Err(Error::VariableOutOfRange { var: v });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> Poly {
        Poly::var(i)
    }

    #[test]
    fn addition_examples() {
        assert!(poly_add(&v(0), &v(0)).is_zero());
        assert_eq!(poly_add(&v(0), &v(4)).to_string(), "V0+V4");
        let sq = poly_mul(&v(0), &v(0));
        assert_eq!(poly_add(&Poly::zero(), &sq), sq);
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(poly_mul(&v(0), &v(0)).to_string(), "V0^2");
        let p = poly_add(&v(0), &v(4));
        assert_eq!(poly_mul(&p, &v(0)).to_string(), "V0*V4+V0^2");
        let q = poly_add(&Poly::one(), &v(0));
        assert_eq!(poly_mul(&q, &q).to_string(), "1+V0^2");
    }

    #[test]
    fn render_and_parse() {
        let m = Monomial::var_pow(0, 2).mul(&Monomial::var_pow(4, 1));
        assert_eq!(m.to_string(), "V0^2*V4");
        assert_eq!("V0^2*V4".parse::<Monomial>().unwrap(), m);
        assert_eq!("V4*V0^2".parse::<Monomial>().unwrap(), m);
        assert!("W1".parse::<Monomial>().is_err());
    }

    #[test]
    fn var_sets() {
        assert!(VarSet::Ground { n: 3 }.contains(4));
        assert!(!VarSet::Ground { n: 3 }.contains(2));
        assert!(VarSet::Extended { n: 3 }.contains(2));
        assert!(VarSet::Ground { n: 3 }.check(&v(2)).is_err());
    }
}
