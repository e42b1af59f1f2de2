//! Index tuples `(i_0, …, i_n)_m` as binary words, their block
//! decomposition, and the split into the pair of face-operator words used
//! by the cup-`n` formula.
//!
//! A word has a 0 at each index of the tuple and a 1 elsewhere. Block `j`
//! (for `j ≤ n`) is the run of ones ending at the zero in position `i_j`;
//! block `n+1` is the trailing run of ones, possibly empty. The *plus* word
//! collects the odd blocks and the *minus* word the even ones. Read as
//! face operators (a 1 in position `k` is `∂_k`), the plus word acts on the
//! first cochain's argument and the minus word on the second.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::simplicial::{Simplex, Vertex};

/// Strictly increasing indices `0 ≤ i_0 < … < i_n ≤ m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexTuple {
    indices: Vec<usize>,
    m: usize,
}

impl IndexTuple {
    pub fn new(indices: Vec<usize>, m: usize) -> Result<IndexTuple> {
        let ok = !indices.is_empty()
            && indices.windows(2).all(|w| w[0] < w[1])
            && indices.last().is_some_and(|&last| last <= m);
        if !ok {
            return Err(Error::InvalidTuple {
                indices: indices.iter().map(|&i| i as i64).collect(),
                m: m as i64,
            });
        }
        Ok(IndexTuple { indices, m })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Length of the word minus one, i.e. the dimension of the simplex the
    /// tuple acts on.
    pub fn m(&self) -> usize {
        self.m
    }

    /// The `n` of `(i_0, …, i_n)`.
    pub fn n(&self) -> usize {
        self.indices.len() - 1
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")_{}", self.m)
    }
}

/// A word over `{0, 1}`; leading and trailing ones are significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<bool>);

impl Word {
    pub fn from_bits(bits: Vec<bool>) -> Word {
        Word(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn zeros(&self) -> usize {
        self.0.iter().filter(|b| !**b).count()
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|b| **b).count()
    }

    /// Positions holding a 1.
    pub fn one_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, b)| **b).map(|(k, _)| k)
    }

    /// Cuts after every zero. The last piece is the trailing run of ones
    /// and may be empty, so there is always one more piece than zeros.
    pub fn blocks(&self) -> BlockDecomposition {
        let mut blocks = Vec::new();
        let mut current = Vec::new();
        for &b in &self.0 {
            current.push(b);
            if !b {
                blocks.push(Word(std::mem::take(&mut current)));
            }
        }
        blocks.push(Word(current));
        BlockDecomposition { blocks }
    }

    fn concat<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        Word(parts.into_iter().flat_map(|w| w.0.iter().copied()).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWordError(char);

impl fmt::Display for ParseWordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid letter {:?} in binary word", self.0)
    }
}

impl std::error::Error for ParseWordError {}

impl FromStr for Word {
    type Err = ParseWordError;

    fn from_str(s: &str) -> std::result::Result<Word, ParseWordError> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(ParseWordError(other)),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// Blocks `0, …, n+1` of a word in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<Word>,
}

impl BlockDecomposition {
    pub fn blocks(&self) -> &[Word] {
        &self.blocks
    }

    pub fn concat(&self) -> Word {
        Word::concat(&self.blocks)
    }
}

pub fn word_of(t: &IndexTuple) -> Word {
    let mut bits = vec![true; t.m + 1];
    for &i in &t.indices {
        bits[i] = false;
    }
    Word(bits)
}

/// Inverse of [`word_of`]; the word must contain at least one zero.
pub fn tuple_of(w: &Word) -> Result<IndexTuple> {
    let indices: Vec<usize> = w.0.iter().enumerate().filter(|(_, b)| !**b).map(|(k, _)| k).collect();
    if w.is_empty() {
        return Err(Error::InvalidTuple { indices: vec![], m: -1 });
    }
    IndexTuple::new(indices, w.len() - 1)
}

/// Splits a word into `(plus, minus)`: odd-indexed blocks go to `plus`,
/// even-indexed blocks (including block 0) to `minus`.
pub fn split(w: &Word) -> (Word, Word) {
    let blocks = w.blocks();
    let plus = Word::concat(blocks.blocks.iter().skip(1).step_by(2));
    let minus = Word::concat(blocks.blocks.iter().step_by(2));
    (plus, minus)
}

/// Rebuilds the tuple from a split pair by alternating minus block 0,
/// plus block 0, minus block 1, …
pub fn merge(plus: &Word, minus: &Word) -> Result<IndexTuple> {
    let (zp, zm) = (plus.zeros(), minus.zeros());
    if zp + zm == 0 || !(zm == zp || zm == zp + 1) {
        return Err(Error::MalformedPair(format!(
            "{plus} has {zp} zeros and {minus} has {zm}"
        )));
    }
    let n = zp + zm - 1;
    let pb = plus.blocks().blocks;
    let mb = minus.blocks().blocks;
    let mut parts = Vec::with_capacity(n + 2);
    for j in 0..=n + 1 {
        parts.push(if j % 2 == 0 { &mb[j / 2] } else { &pb[j / 2] });
    }
    // Exactly one of the two trailing runs is block n+1; the other must be empty.
    let (unused, owner) = if n % 2 == 0 { (&mb[zm], "minus") } else { (&pb[zp], "plus") };
    if !unused.is_empty() {
        return Err(Error::MalformedPair(format!(
            "{owner} word {} has trailing ones that belong to no block",
            if n % 2 == 0 { minus } else { plus }
        )));
    }
    tuple_of(&Word::concat(parts))
}

/// Which face each position of an `m`-simplex survives in: the zeros of
/// the word survive in both, a 1 in block `j` survives only in the factor
/// that does not own block `j`.
fn keep_masks(indices: &[usize], m: usize) -> impl Iterator<Item = (bool, bool)> + '_ {
    let mut next = 0;
    (0..=m).map(move |pos| {
        if next < indices.len() && indices[next] == pos {
            next += 1;
            (true, true)
        } else if next % 2 == 1 {
            // One of an odd block: a face operator for the plus factor.
            (false, true)
        } else {
            (true, false)
        }
    })
}

/// `(plus_face, minus_face)` of `x` for raw indices, without validation.
pub(crate) fn split_faces(indices: &[usize], x: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    let mut plus = Vec::with_capacity(x.len());
    let mut minus = Vec::with_capacity(x.len());
    for (v, (kp, km)) in x.iter().zip(keep_masks(indices, x.len() - 1)) {
        if kp {
            plus.push(*v);
        }
        if km {
            minus.push(*v);
        }
    }
    (plus, minus)
}

fn check_dim(t: &IndexTuple, x: &Simplex) -> Result<()> {
    if x.dim() != t.m {
        return Err(Error::DimensionMismatch {
            expected: t.m as i64,
            found: x.dim() as i64,
        });
    }
    Ok(())
}

/// Applies the plus word to `x`: keeps `[0,i_0]`, `[i_1,i_2]`, … .
pub fn apply_plus(t: &IndexTuple, x: &Simplex) -> Result<Simplex> {
    check_dim(t, x)?;
    Ok(Simplex::from_sorted(split_faces(&t.indices, x.vertices()).0))
}

/// Applies the minus word to `x`: keeps `[i_0,i_1]`, `[i_2,i_3]`, … .
pub fn apply_minus(t: &IndexTuple, x: &Simplex) -> Result<Simplex> {
    check_dim(t, x)?;
    Ok(Simplex::from_sorted(split_faces(&t.indices, x.vertices()).1))
}
