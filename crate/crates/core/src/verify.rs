//! Mod-2 linear algebra for desk-scale cohomology checks.
//!
//! Cochain spaces are identified with `F_2^k` using the lexicographic order
//! of the simplices of each dimension. The matrix of `δ^p` has one row per
//! `(p+1)`-simplex and one column per `p`-simplex, with a 1 where the column
//! simplex is a face of the row simplex.

use std::collections::HashMap;
use std::fmt;

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::simplicial::{Simplex, SimplicialComplex};

/// A packed bit vector of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> BitRow {
        BitRow {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i & 63);
        if value {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the first set bit.
    pub fn leading(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Incrementally built row-echelon basis; each stored row is keyed by its
/// leading bit, and every other bit of it lies further right.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    pivots: HashMap<usize, BitRow>,
}

impl EchelonBasis {
    pub fn new() -> EchelonBasis {
        EchelonBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the basis; zero iff `row` is in the span.
    pub fn reduce(&self, mut row: BitRow) -> BitRow {
        while let Some(lead) = row.leading() {
            match self.pivots.get(&lead) {
                Some(p) => row.xor_assign(p),
                None => break,
            }
        }
        row
    }

    pub fn contains(&self, row: &BitRow) -> bool {
        self.reduce(row.clone()).is_zero()
    }

    /// Adds `row` to the span; returns false when it was already there.
    pub fn insert(&mut self, row: BitRow) -> bool {
        let r = self.reduce(row);
        match r.leading() {
            Some(lead) => {
                self.pivots.insert(lead, r);
                true
            }
            None => false,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Mod2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitRow>,
}

impl Mod2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Mod2Matrix {
        Mod2Matrix {
            rows,
            cols,
            data: vec![BitRow::zeros(cols); rows],
        }
    }

    pub fn from_rows(cols: usize, data: Vec<BitRow>) -> Mod2Matrix {
        assert!(data.iter().all(|r| r.len() == cols));
        Mod2Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitRow {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitRow::is_zero)
    }

    pub fn transpose(&self) -> Mod2Matrix {
        let mut t = Mod2Matrix::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in row.ones() {
                t.data[j].set(i, true);
            }
        }
        t
    }

    /// `self · other`.
    pub fn mul(&self, other: &Mod2Matrix) -> Mod2Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = BitRow::zeros(other.cols);
                for k in row.ones() {
                    acc.xor_assign(&other.data[k]);
                }
                acc
            })
            .collect();
        Mod2Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &BitRow) -> BitRow {
        assert_eq!(self.cols, v.len());
        let mut out = BitRow::zeros(self.rows);
        for (i, row) in self.data.iter().enumerate() {
            let parity = row
                .words
                .iter()
                .zip(&v.words)
                .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones());
            out.set(i, parity & 1 == 1);
        }
        out
    }

    pub fn row_space(&self) -> EchelonBasis {
        let mut basis = EchelonBasis::new();
        for row in &self.data {
            basis.insert(row.clone());
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.row_space().rank()
    }

    /// A basis of `{v : self · v = 0}`, from the reduced row-echelon form.
    pub fn null_space(&self) -> Vec<BitRow> {
        let mut rows: Vec<BitRow> = self.data.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            let Some(found) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(r, found);
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivot_cols.push(col);
            r += 1;
        }
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&free| !is_pivot[free])
            .map(|free| {
                let mut v = BitRow::zeros(self.cols);
                v.set(free, true);
                for (k, &pc) in pivot_cols.iter().enumerate() {
                    if rows[k].get(free) {
                        v.set(pc, true);
                    }
                }
                v
            })
            .collect()
    }
}

impl fmt::Debug for Mod2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mod2Matrix {}x{}", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

fn index_of(simplices: &[Simplex]) -> HashMap<&Simplex, usize> {
    simplices.iter().enumerate().map(|(k, s)| (s, k)).collect()
}

/// Matrix of `δ^p : C^p → C^{p+1}` over `Z_2`.
pub fn coboundary_matrix(complex: &SimplicialComplex, p: usize) -> Mod2Matrix {
    let lower = complex.simplices_of_dim(p);
    let upper = complex.simplices_of_dim(p + 1);
    let index = index_of(&lower);
    let mut m = Mod2Matrix::zeros(upper.len(), lower.len());
    for (i, x) in upper.iter().enumerate() {
        for k in 0..=x.dim() {
            let face = x.face(k).expect("index within range");
            m.set(i, index[&face], true);
        }
    }
    m
}

/// Coordinates of a `Z_2` cochain in the lexicographic basis.
pub fn cochain_vector(c: &Cochain, complex: &SimplicialComplex) -> Result<BitRow> {
    require_mod2(c)?;
    c.check_support_in(complex)?;
    let cells = complex.simplices_of_dim(c.degree());
    let index = index_of(&cells);
    let mut v = BitRow::zeros(cells.len());
    for x in c.support().keys() {
        v.set(index[x], true);
    }
    Ok(v)
}

/// The `Z_2` cochain with the given coordinates.
pub fn vector_cochain(v: &BitRow, degree: usize, complex: &SimplicialComplex) -> Cochain {
    let cells = complex.simplices_of_dim(degree);
    assert_eq!(cells.len(), v.len());
    Cochain::indicator(degree, Ring::Z2, v.ones().map(|k| cells[k].clone()))
        .expect("cells of the complex have the requested degree")
}

fn require_mod2(c: &Cochain) -> Result<()> {
    if c.ring().is_mod2() {
        Ok(())
    } else {
        Err(Error::NotMod2(c.ring().to_string()))
    }
}

/// Whether `c = δc'` for some `Z_2` cochain `c'`.
pub fn is_coboundary_mod2(c: &Cochain, complex: &SimplicialComplex) -> Result<bool> {
    let v = cochain_vector(c, complex)?;
    if c.degree() == 0 {
        return Ok(v.is_zero());
    }
    let image = coboundary_matrix(complex, c.degree() - 1)
        .transpose()
        .row_space();
    Ok(image.contains(&v))
}

/// `dim ker δ^n - rank δ^{n-1}` over `Z_2`.
pub fn betti_mod2(complex: &SimplicialComplex, n: usize) -> usize {
    let cells = complex.simplices_of_dim(n).len();
    let kernel = cells - coboundary_matrix(complex, n).rank();
    let image = if n == 0 {
        0
    } else {
        coboundary_matrix(complex, n - 1).rank()
    };
    kernel - image
}

/// Cocycles whose classes form a basis of `H^p(K; Z_2)`.
pub fn cohomology_basis_mod2(complex: &SimplicialComplex, p: usize) -> Vec<Cochain> {
    let mut span = if p == 0 {
        EchelonBasis::new()
    } else {
        coboundary_matrix(complex, p - 1).transpose().row_space()
    };
    coboundary_matrix(complex, p)
        .null_space()
        .into_iter()
        .filter(|v| span.insert(v.clone()))
        .map(|v| vector_cochain(&v, p, complex))
        .collect()
}
