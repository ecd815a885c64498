//! Linear algebra over F₂ with bit-packed rows.
//!
//! Elimination always pivots on the lowest available column and, within a
//! column, the lowest row, so kernel bases and solutions are reproducible.

use std::fmt::Write as _;

use crate::error::Error;

const BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(BITS)
}

/// Dense bit vector over F₂.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vec {
    len: usize,
    data: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        F2Vec { len, data: vec![0; words_for(len)] }
    }

    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.toggle(i);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_ones(bits.len(), bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.data[i / BITS] >> (i % BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        if self.get(i) != bit {
            self.toggle(i);
        }
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        self.data[i / BITS] ^= 1 << (i % BITS);
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.data.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * BITS + t)
            })
        })
    }

    fn first_one_from(&self, start: usize) -> Option<usize> {
        self.ones().find(|&i| i >= start)
    }
}

/// Matrix over F₂ stored as bit-packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatF2 {
    rows: usize,
    cols: usize,
    data: Vec<F2Vec>,
}

impl SparseMatF2 {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatF2 { rows, cols, data: vec![F2Vec::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from the column indices set in each row.
    pub fn from_rows(cols: usize, rows: &[Vec<usize>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, cs) in rows.iter().enumerate() {
            for &c in cs {
                m.toggle(r, c);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        self.data[r].set(c, bit)
    }

    pub fn toggle(&mut self, r: usize, c: usize) {
        self.data[r].toggle(c)
    }

    pub fn row(&self, r: usize) -> &F2Vec {
        &self.data[r]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(F2Vec::count_ones).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &F2Vec) -> Result<F2Vec, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        let mut out = F2Vec::zeros(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            let dot = row.data.iter().zip(&v.data).map(|(a, b)| (a & b).count_ones()).sum::<u32>();
            out.set(r, dot % 2 == 1);
        }
        Ok(out)
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatF2) -> Result<SparseMatF2, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            for k in row.ones() {
                out.data[r].xor_assign(&other.data[k]);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F2Vec::is_zero)
    }

    /// Reduced row echelon form; returns the pivot column of each nonzero row.
    /// `aug` rows are carried along with the row operations.
    fn rref(&mut self, mut aug: Option<&mut F2Vec>) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.data[i].get(c)) else {
                continue;
            };
            self.data.swap(r, p);
            if let Some(b) = aug.as_deref_mut() {
                let (x, y) = (b.get(r), b.get(p));
                b.set(r, y);
                b.set(p, x);
            }
            let pivot_row = self.data[r].clone();
            let pivot_bit = aug.as_deref().map(|b| b.get(r));
            for i in 0..self.rows {
                if i != r && self.data[i].get(c) {
                    self.data[i].xor_assign(&pivot_row);
                    if let (Some(b), Some(pb)) = (aug.as_deref_mut(), pivot_bit) {
                        if pb {
                            b.toggle(i);
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Optional matrix-market style dump (`%%MatrixMarket matrix coordinate pattern general`).
    pub fn to_matrix_market(&self) -> String {
        let mut s = String::from("%%MatrixMarket matrix coordinate pattern general\n");
        let _ = writeln!(s, "{} {} {}", self.rows, self.cols, self.nnz());
        for (r, row) in self.data.iter().enumerate() {
            for c in row.ones() {
                let _ = writeln!(s, "{} {}", r + 1, c + 1);
            }
        }
        s
    }
}

pub fn rank(m: &SparseMatF2) -> usize {
    m.clone().rref(None).len()
}

/// Basis of `{v : Mv = 0}`, one vector per non-pivot column.
pub fn kernel_basis(m: &SparseMatF2) -> Vec<F2Vec> {
    let mut r = m.clone();
    let pivots = r.rref(None);
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = F2Vec::zeros(m.cols);
            v.set(f, true);
            for (row, &pc) in pivots.iter().enumerate() {
                if r.data[row].get(f) {
                    v.set(pc, true);
                }
            }
            v
        })
        .collect()
}

/// Some `x` with `Mx = b` (free variables set to zero), or `None`.
pub fn solve(m: &SparseMatF2, b: &F2Vec) -> Result<Option<F2Vec>, Error> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch { expected: m.rows, got: b.len() });
    }
    let mut r = m.clone();
    let mut rhs = b.clone();
    let pivots = r.rref(Some(&mut rhs));
    if rhs.first_one_from(pivots.len()).is_some() {
        return Ok(None);
    }
    let mut x = F2Vec::zeros(m.cols);
    for (row, &pc) in pivots.iter().enumerate() {
        x.set(pc, rhs.get(row));
    }
    Ok(Some(x))
}
