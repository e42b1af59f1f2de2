//! Ordered simplicial complexes and their simplicial-set view.
//!
//! A [`Simplex`] is a nondecreasing tuple of integer vertices. Tuples with a
//! repeated vertex are the degenerate simplices of the associated simplicial
//! set; they can be built and pushed through face and degeneracy operators,
//! but complexes, cochain supports and enumeration only ever hold
//! nondegenerate ones.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

pub type Vertex = i64;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    pub fn new(vertices: Vec<Vertex>) -> Result<Simplex> {
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        if vertices.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::UnorderedVertices(vertices));
        }
        Ok(Simplex(vertices))
    }

    /// Builds a nondegenerate simplex, rejecting repeated vertices.
    pub fn nondegenerate(vertices: Vec<Vertex>) -> Result<Simplex> {
        let s = Simplex::new(vertices)?;
        if s.is_degenerate() {
            return Err(Error::Degenerate(s));
        }
        Ok(s)
    }

    /// Caller guarantees a nonempty nondecreasing sequence.
    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Simplex {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] <= w[1]));
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.0.windows(2).any(|w| w[0] == w[1])
    }

    /// `∂_i`: drops the vertex at position `i`.
    pub fn face(&self, i: usize) -> Result<Simplex> {
        let dim = self.dim();
        if dim == 0 || i > dim {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
        let mut v = self.0.clone();
        v.remove(i);
        Ok(Simplex(v))
    }

    /// `s_i`: repeats the vertex at position `i`.
    pub fn degeneracy(&self, i: usize) -> Result<Simplex> {
        let dim = self.dim();
        if i > dim {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
        let mut v = self.0.clone();
        v.insert(i, v[i]);
        Ok(Simplex(v))
    }

    /// True when every vertex of `self` is a vertex of `other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    /// Positions of the vertices of `self` inside `other`, when `self` is a
    /// face of a nondegenerate `other`.
    pub fn positions_in(&self, other: &Simplex) -> Option<Vec<usize>> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for v in &self.0 {
            while j < other.0.len() && other.0[j] < *v {
                j += 1;
            }
            if j == other.0.len() || other.0[j] != *v {
                return None;
            }
            out.push(j);
            j += 1;
        }
        Some(out)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

fn is_sorted_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    let mut j = 0;
    for v in small {
        while j < big.len() && big[j] < *v {
            j += 1;
        }
        if j == big.len() || big[j] != *v {
            return false;
        }
    }
    true
}

/// Sorted, deduplicated union of two vertex lists.
fn merged_vertices(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => match x.cmp(y) {
                Ordering::Less => {
                    i += 1;
                    *x
                }
                Ordering::Greater => {
                    j += 1;
                    *y
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    *x
                }
            },
            (Some(x), None) => {
                i += 1;
                *x
            }
            (None, Some(y)) => {
                j += 1;
                *y
            }
            (None, None) => unreachable!(),
        };
        if out.last() != Some(&next) {
            out.push(next);
        }
    }
    out
}

/// The simplex on the union of the vertex sets, whether or not it belongs
/// to any complex.
pub fn vertex_union(x: &Simplex, y: &Simplex) -> Simplex {
    Simplex(merged_vertices(&x.0, &y.0))
}

/// The largest common face of `x` and `y`, or `None` when they share no vertex.
pub fn intersection(x: &Simplex, y: &Simplex) -> Option<Simplex> {
    let common: Vec<Vertex> = x
        .0
        .iter()
        .dedup()
        .filter(|v| y.0.binary_search(v).is_ok())
        .copied()
        .collect();
    if common.is_empty() {
        None
    } else {
        Some(Simplex(common))
    }
}

/// A finite ordered simplicial complex, stored by its maximal simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    maximal: Vec<Simplex>,
}

impl SimplicialComplex {
    /// Builds a complex from any generating family of nondegenerate
    /// simplices. Duplicates and simplices contained in another one are
    /// discarded; the survivors are kept in lexicographic order.
    pub fn new(simplices: impl IntoIterator<Item = Simplex>) -> Result<SimplicialComplex> {
        let mut all: Vec<Simplex> = Vec::new();
        for s in simplices {
            if s.is_degenerate() {
                return Err(Error::Degenerate(s));
            }
            all.push(s);
        }
        // Larger simplices first so that a candidate only needs checking
        // against already accepted ones.
        all.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut maximal: Vec<Simplex> = Vec::new();
        for s in all {
            if !maximal.iter().any(|m| s.is_face_of(m)) {
                maximal.push(s);
            }
        }
        maximal.sort();
        Ok(SimplicialComplex { maximal })
    }

    /// Convenience constructor from plain vertex lists.
    pub fn from_lists<I, V>(lists: I) -> Result<SimplicialComplex>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<Vertex>>,
    {
        let simplices = lists
            .into_iter()
            .map(|v| Simplex::nondegenerate(v.into()))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::new(simplices)
    }

    pub fn maximal(&self) -> &[Simplex] {
        &self.maximal
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.maximal.iter().map(Simplex::dim).max()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.maximal
            .iter()
            .flat_map(|s| s.0.iter().copied())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Membership in the simplicial set: the underlying vertex set of `x`
    /// lies in some maximal simplex. Degenerate tuples are accepted.
    pub fn contains(&self, x: &Simplex) -> bool {
        self.maximal.iter().any(|m| x.is_face_of(m))
    }

    /// Smallest simplex of the complex having both `x` and `y` as faces.
    pub fn union(&self, x: &Simplex, y: &Simplex) -> Result<Option<Simplex>> {
        for s in [x, y] {
            if !self.contains(s) {
                return Err(Error::NotInComplex(s.clone()));
            }
        }
        let merged = vertex_union(x, y);
        Ok(self.contains(&merged).then_some(merged))
    }

    /// All nondegenerate `n`-simplices, lexicographically ordered.
    pub fn simplices_of_dim(&self, n: usize) -> Vec<Simplex> {
        let mut out = BTreeSet::new();
        for m in &self.maximal {
            if m.0.len() > n {
                for c in m.0.iter().copied().combinations(n + 1) {
                    out.insert(Simplex(c));
                }
            }
        }
        out.into_iter().collect()
    }
}
